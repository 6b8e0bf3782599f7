#include "monosize/size.hpp"

#include "monosize/error.hpp"

#include <algorithm>
#include <string>

namespace monosize {

bool CoverFamily::share_a_cover(std::size_t i, std::size_t j) const {
    return std::any_of(covers.begin(), covers.end(), [&](const std::vector<std::size_t> &c) {
        return std::binary_search(c.begin(), c.end(), i) && std::binary_search(c.begin(), c.end(), j);
    });
}

bool CoverFamily::in_some_cover(std::size_t i) const {
    return std::any_of(covers.begin(), covers.end(), [&](const std::vector<std::size_t> &c) {
        return std::binary_search(c.begin(), c.end(), i);
    });
}

namespace {

VarSet union_of(std::span<const VarSet> sets, std::size_t width) {
    VarSet u(width);
    for (const auto &s : sets)
        u |= s;
    return u;
}

class CoverSearch {
  public:
    CoverSearch(std::span<const VarSet> sets, std::vector<std::size_t> candidates)
        : sets_(sets), candidates_(std::move(candidates)) {
        for (auto c : candidates_)
            largest_ = std::max(largest_, sets_[c].count());
    }

    bool search(const VarSet &uncovered, std::size_t budget) {
        if (uncovered.none())
            return true;
        if (budget == 0 || largest_ * budget < uncovered.count())
            return false;
        // Branch on the uncovered variable with the fewest covering sets.
        std::size_t best_var = uncovered.width();
        std::size_t best_count = SIZE_MAX;
        for (auto var : uncovered.members()) {
            std::size_t count = 0;
            for (auto c : candidates_)
                count += sets_[c].test(var) ? 1 : 0;
            if (count < best_count) {
                best_count = count;
                best_var = var;
            }
        }
        for (auto c : candidates_) {
            if (!sets_[c].test(best_var))
                continue;
            chosen.push_back(c);
            VarSet rest = uncovered;
            rest.subtract(sets_[c]);
            if (search(rest, budget - 1))
                return true;
            chosen.pop_back();
        }
        return false;
    }

    std::vector<std::size_t> chosen;

  private:
    std::span<const VarSet> sets_;
    std::vector<std::size_t> candidates_;
    std::size_t largest_ = 0;
};

} // namespace

std::vector<std::size_t> minimum_cover(std::span<const VarSet> sets) {
    if (sets.empty())
        return {};
    const std::size_t width = sets.front().width();
    const VarSet universe = union_of(sets, width);
    if (universe.none())
        return {};

    // A set contained in another can always be swapped for the larger one.
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
            if (i == j || !sets[i].is_subset_of(sets[j]))
                continue;
            dominated = sets[i] != sets[j] || j < i;
        }
        if (!dominated)
            candidates.push_back(i);
    }

    for (std::size_t budget = 1;; ++budget) {
        CoverSearch search(sets, candidates);
        if (search.search(universe, budget)) {
            std::sort(search.chosen.begin(), search.chosen.end());
            return search.chosen;
        }
    }
}

SizeReport size_of_supports(std::span<const VarSet> supports, std::size_t n) {
    if (supports.empty())
        throw Error(ErrorCode::invalid_argument, "size needs at least one component");
    SizeReport r;
    r.n = n;
    const VarSet universe = union_of(supports, n);
    r.h = universe.count();
    r.witness = minimum_cover(supports);
    r.v = r.witness.size();
    if (r.v == 0)
        throw Error(ErrorCode::invalid_argument, "components with empty support");
    r.size = r.v + (n - r.h) - 1;
    for (std::size_t k = 0; k < n; ++k)
        if (!universe.test(k))
            r.inessential.push_back(k);
    return r;
}

namespace {

std::vector<VarSet> supports_of(const Decomposition &d) {
    std::vector<VarSet> out;
    out.reserve(d.size());
    for (const auto &c : d.components())
        out.push_back(c.support());
    return out;
}

} // namespace

SizeReport size_of_decomposition(const Decomposition &d) {
    auto supports = supports_of(d);
    return size_of_supports(supports, d.ambient());
}

SizeReport size(const MonomialIdeal &ideal, const Caps &caps) {
    ideal.require_proper_nonzero("size");
    return size_of_decomposition(irreducible_decomposition(ideal, caps));
}

CoverFamily minimal_covers(const Decomposition &d, const Caps &caps) {
    if (d.empty())
        throw Error(ErrorCode::invalid_argument, "cover family of an empty decomposition");
    if (d.size() > caps.max_cover_components)
        throw Error(ErrorCode::cap_exceeded,
                    "cover family enumeration limited to " +
                        std::to_string(caps.max_cover_components) + " components, got " +
                        std::to_string(d.size()));
    const auto supports = supports_of(d);
    const auto report = size_of_supports(supports, d.ambient());
    const VarSet universe = union_of(supports, d.ambient());

    CoverFamily family;
    family.w = report.size;
    family.cardinality = report.v;

    const std::size_t r = supports.size();
    // suffix[i] = union of supports i..r-1, used to cut hopeless prefixes.
    std::vector<VarSet> suffix(r + 1, VarSet(d.ambient()));
    for (std::size_t i = r; i-- > 0;) {
        suffix[i] = suffix[i + 1];
        suffix[i] |= supports[i];
    }
    std::vector<std::size_t> chosen;
    auto walk = [&](auto &self, std::size_t next, const VarSet &covered) -> void {
        if (chosen.size() == family.cardinality) {
            if (covered == universe)
                family.covers.push_back(chosen);
            return;
        }
        for (std::size_t i = next; i + (family.cardinality - chosen.size()) <= r; ++i) {
            VarSet reach = covered;
            reach |= suffix[i];
            if (reach != universe)
                return;
            VarSet with = covered;
            with |= supports[i];
            chosen.push_back(i);
            self(self, i + 1, with);
            chosen.pop_back();
        }
    };
    walk(walk, 0, VarSet(d.ambient()));

    if (!family.covers.empty()) {
        family.renumbering = family.covers.front();
        for (std::size_t i = 0; i < r; ++i)
            if (!std::binary_search(family.covers.front().begin(), family.covers.front().end(), i))
                family.renumbering.push_back(i);
    }
    return family;
}

Decomposition radical(const Decomposition &d) {
    if (d.empty())
        return d;
    std::vector<IrreducibleComponent> clamped;
    clamped.reserve(d.size());
    for (const auto &c : d.components())
        clamped.push_back(c.radical());
    return irredundantize(std::move(clamped), d.ambient());
}

} // namespace monosize
