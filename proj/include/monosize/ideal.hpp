#pragma once

#include "monosize/monomial.hpp"

#include <span>
#include <vector>

namespace monosize {

/// A monomial ideal held by its minimal generating set, sorted
/// lexicographically by exponent vector. An empty generating set is the zero
/// ideal; the single generator 1 is the unit ideal.
class MonomialIdeal {
  public:
    explicit MonomialIdeal(std::size_t n = 0) : n_(n) {}

    /// Minimalizes and sorts. Throws if any generator has the wrong ambient.
    MonomialIdeal(std::size_t n, std::vector<Monomial> generators);

    static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
    static MonomialIdeal unit(std::size_t n) {
        return MonomialIdeal(n, {Monomial(n)});
    }

    std::size_t ambient() const noexcept { return n_; }
    std::span<const Monomial> generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }

    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept {
        return gens_.size() == 1 && gens_.front().is_one();
    }
    bool is_squarefree() const noexcept;

    /// Largest exponent of each variable over the minimal generators.
    std::vector<Exponent> max_degrees() const;

    /// Throws Error(degenerate_ideal) for the zero and unit ideals.
    void require_proper_nonzero(const char *operation) const;

    friend bool operator==(const MonomialIdeal &, const MonomialIdeal &) = default;
    friend auto operator<=>(const MonomialIdeal &, const MonomialIdeal &) = default;

  private:
    friend MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t n);

    std::size_t n_ = 0;
    std::vector<Monomial> gens_;
};

/// Keeps the divisibility-minimal elements, deduplicated, in canonical order.
MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t n);

/// Membership: some generator divides `m`.
bool contains(const MonomialIdeal &ideal, const Monomial &m);

/// Generated by the pairwise lcms of the two generating sets.
MonomialIdeal intersect(const MonomialIdeal &lhs, const MonomialIdeal &rhs);

/// `lhs` is contained in `rhs`.
bool ideal_leq(const MonomialIdeal &lhs, const MonomialIdeal &rhs);

} // namespace monosize
