#pragma once

#include "monosize/caps.hpp"
#include "monosize/decomposition.hpp"
#include "monosize/var_set.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace monosize {

/// Lyubeznik's size: v + (n - h) - 1, where v is the least number of
/// components whose associated primes already sum to the sum of all of them
/// and h is the height of that sum.
struct SizeReport {
    std::size_t v = 0;
    std::size_t h = 0;
    std::size_t n = 0;
    std::size_t size = 0;
    /// Variables outside every associated prime (0-indexed).
    std::vector<std::size_t> inessential;
    /// One minimum cover realising v (component indices, 0-indexed, ascending).
    std::vector<std::size_t> witness;

    friend bool operator==(const SizeReport &, const SizeReport &) = default;
};

/// Every index set of cardinality v whose supports cover the union of all
/// supports, in lexicographic order. When every variable is essential,
/// v = w + 1 with w the size.
struct CoverFamily {
    std::size_t w = 0;
    std::size_t cardinality = 0;
    std::vector<std::vector<std::size_t>> covers;
    /// Component order that lists the first cover first and the remaining
    /// components ascending. A view only; the decomposition is not touched.
    std::vector<std::size_t> renumbering;

    /// Some cover contains both components.
    bool share_a_cover(std::size_t i, std::size_t j) const;
    /// Some cover contains the component.
    bool in_some_cover(std::size_t i) const;
};

/// Smallest set of indices into `sets` whose union equals the union of all of
/// them, found by iterative deepening on the cardinality. Returns an empty
/// vector when `sets` is empty or every set is empty.
std::vector<std::size_t> minimum_cover(std::span<const VarSet> sets);

SizeReport size_of_supports(std::span<const VarSet> supports, std::size_t n);
SizeReport size_of_decomposition(const Decomposition &d);
/// Throws Error(degenerate_ideal) for unit/zero input.
SizeReport size(const MonomialIdeal &ideal, const Caps &caps = default_caps());

/// Throws Error(cap_exceeded) when the decomposition has more than
/// caps.max_cover_components components.
CoverFamily minimal_covers(const Decomposition &d, const Caps &caps = default_caps());

/// Decomposition of the radical: exponents clamped to 1, irredundantized.
Decomposition radical(const Decomposition &d);

} // namespace monosize
