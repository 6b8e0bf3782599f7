#pragma once

#include "monosize/caps.hpp"
#include "monosize/ideal.hpp"
#include "monosize/var_set.hpp"

#include <span>
#include <vector>

namespace monosize {

/// The irreducible ideal (X_k^{e_k} : e_k > 0). An exponent of 0 means the
/// variable does not occur, so the support is the variable set of the
/// associated prime.
class IrreducibleComponent {
  public:
    IrreducibleComponent() = default;
    /// Throws Error(invalid_argument) if every exponent is zero.
    explicit IrreducibleComponent(Monomial exps);
    IrreducibleComponent(std::initializer_list<Exponent> exps)
        : IrreducibleComponent(Monomial(exps)) {}

    std::size_t ambient() const noexcept { return exps_.ambient(); }
    const Monomial &exponents() const noexcept { return exps_; }
    Exponent operator[](std::size_t k) const { return exps_[k]; }

    VarSet support() const;
    MonomialIdeal as_ideal() const;
    /// Clamps every positive exponent to 1.
    IrreducibleComponent radical() const;

    friend bool operator==(const IrreducibleComponent &, const IrreducibleComponent &) = default;
    friend auto operator<=>(const IrreducibleComponent &, const IrreducibleComponent &) = default;

  private:
    Monomial exps_;
};

/// Ideal containment between irreducible components.
bool component_leq(const IrreducibleComponent &lhs, const IrreducibleComponent &rhs);

/// An irredundant irreducible decomposition, components in canonical
/// (lexicographic) order.
class Decomposition {
  public:
    explicit Decomposition(std::size_t n = 0) : n_(n) {}

    std::size_t ambient() const noexcept { return n_; }
    std::span<const IrreducibleComponent> components() const noexcept { return comps_; }
    std::size_t size() const noexcept { return comps_.size(); }
    bool empty() const noexcept { return comps_.empty(); }
    const IrreducibleComponent &operator[](std::size_t i) const { return comps_[i]; }

    friend bool operator==(const Decomposition &, const Decomposition &) = default;

  private:
    friend Decomposition irredundantize(std::vector<IrreducibleComponent>, std::size_t);

    std::size_t n_ = 0;
    std::vector<IrreducibleComponent> comps_;
};

/// The unique irredundant irreducible decomposition. Splits a mixed generator
/// m = X_k^{a} * (m / X_k^{a}) at its lowest variable, recursing on both
/// branches with memoization on the canonical ideal.
/// Throws Error(degenerate_ideal) for unit/zero input and
/// Error(cap_exceeded) past caps.max_components.
Decomposition irreducible_decomposition(const MonomialIdeal &ideal,
                                        const Caps &caps = default_caps());

/// Drops every component that contains the intersection of the others.
/// Throws Error(invalid_argument) on an empty list.
Decomposition irredundantize(std::vector<IrreducibleComponent> components, std::size_t n);

/// Intersection of the components; the unit ideal for an empty decomposition.
MonomialIdeal recompose(const Decomposition &d);
MonomialIdeal recompose(std::span<const IrreducibleComponent> components, std::size_t n);

} // namespace monosize
