#pragma once

#include "monosize/caps.hpp"
#include "monosize/ideal.hpp"

#include <cstdint>
#include <vector>

namespace monosize {

/// One non-negative perturbation vector per minimal generator, aligned with
/// the canonical generator order of the ideal it deforms.
using DeformationVectors = std::vector<std::vector<Exponent>>;

DeformationVectors zero_deformation(const MonomialIdeal &ideal);

/// Strict exponent order and the zero pattern are preserved in every
/// variable. Throws Error(invalid_argument) when the shape does not match.
bool validate_deformation(const MonomialIdeal &ideal, const DeformationVectors &eps);

/// The ideal generated by g * x^{eps_g}. Throws Error(invalid_deformation)
/// if `eps` fails validation.
MonomialIdeal apply_deformation(const MonomialIdeal &ideal, const DeformationVectors &eps);

/// Any two minimal generators with the same positive degree in some variable
/// have a third minimal generator strictly dividing their lcm.
bool is_generic(const MonomialIdeal &ideal);

/// No two minimal generators share a positive degree in any variable.
bool is_strongly_generic(const MonomialIdeal &ideal);

/// A deformation whose image is strongly generic. In each variable the
/// positive exponents are visited in increasing order, ties ordered by a
/// permutation drawn from `seed`, and each is raised to the least value
/// exceeding its predecessor.
DeformationVectors find_generic_deformation(const MonomialIdeal &ideal, std::uint64_t seed = 0);

struct DeformationSizeReport {
    std::size_t size_i = 0;
    std::size_t size_eps = 0;
    bool inequality_holds = false;
    /// The deformed ideal passes is_generic; the inequality is only claimed
    /// for generic deformations.
    bool generic = false;
    MonomialIdeal deformed;
};

DeformationSizeReport size_under_deformation(const MonomialIdeal &ideal,
                                             const DeformationVectors &eps,
                                             const Caps &caps = default_caps());

} // namespace monosize
