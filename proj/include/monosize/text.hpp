#pragma once

#include "monosize/caps.hpp"
#include "monosize/decomposition.hpp"
#include "monosize/ideal.hpp"
#include "monosize/polarization.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace monosize {

/// Parses `(x1^2*x2, x1*x3)` or a decomposition `(x1^2,x2) & (x2,x3)`
/// (`∩` accepted for `&`), which is recomposed. The ambient is the largest
/// variable index mentioned unless `vars` is given. Errors carry line and
/// column and use ErrorCode::syntax; exponents above caps.max_exponent raise
/// ErrorCode::cap_exceeded.
MonomialIdeal parse_ideal(std::string_view text, std::optional<std::size_t> vars = std::nullopt,
                          const Caps &caps = default_caps());

/// Parses a single monomial such as `x3^2*x1` or `1`.
Monomial parse_monomial(std::string_view text, std::size_t n, const Caps &caps = default_caps());

std::string render(const Monomial &m);
std::string render(const MonomialIdeal &ideal);
std::string render(const IrreducibleComponent &c);
/// Components joined by ` ∩ `, or ` & ` when `ascii` is set.
std::string render(const Decomposition &d, bool ascii = false);

/// Squarefree monomial over a polarized ring, variables written x{k}_{l}.
std::string render_polarized(const Monomial &m, const PolarizationLayout &layout);
std::string render_polarized(const MonomialIdeal &ideal, const PolarizationLayout &layout);
std::string render_polarized(const IrreducibleComponent &c, const PolarizationLayout &layout);

} // namespace monosize
