#include "monosize/deformation.hpp"

#include "monosize/error.hpp"
#include "monosize/random.hpp"
#include "monosize/size.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace monosize {

DeformationVectors zero_deformation(const MonomialIdeal &ideal) {
    return DeformationVectors(ideal.size(), std::vector<Exponent>(ideal.ambient(), 0));
}

namespace {

void require_shape(const MonomialIdeal &ideal, const DeformationVectors &eps) {
    if (eps.size() != ideal.size())
        throw Error(ErrorCode::invalid_argument,
                    "deformation has " + std::to_string(eps.size()) + " vectors for " +
                        std::to_string(ideal.size()) + " generators");
    for (const auto &e : eps)
        if (e.size() != ideal.ambient())
            throw Error(ErrorCode::invalid_argument,
                        "deformation vector of length " + std::to_string(e.size()) +
                            " in a ring with " + std::to_string(ideal.ambient()) + " variables");
}

bool shares_positive_degree(const Monomial &a, const Monomial &b) {
    for (std::size_t k = 0; k < a.ambient(); ++k)
        if (a[k] > 0 && a[k] == b[k])
            return true;
    return false;
}

} // namespace

bool validate_deformation(const MonomialIdeal &ideal, const DeformationVectors &eps) {
    require_shape(ideal, eps);
    const auto gens = ideal.generators();
    for (std::size_t j = 0; j < ideal.ambient(); ++j) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const std::uint64_t ai = gens[i][j];
            if (ai == 0 && eps[i][j] != 0)
                return false;
            for (std::size_t k = 0; k < gens.size(); ++k) {
                const std::uint64_t ak = gens[k][j];
                if (ai > ak && ai + eps[i][j] <= ak + eps[k][j])
                    return false;
            }
        }
    }
    return true;
}

MonomialIdeal apply_deformation(const MonomialIdeal &ideal, const DeformationVectors &eps) {
    if (!validate_deformation(ideal, eps))
        throw Error(ErrorCode::invalid_deformation,
                    "deformation breaks the exponent order or the zero pattern");
    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (std::size_t i = 0; i < ideal.size(); ++i) {
        Monomial g = ideal.generators()[i];
        for (std::size_t j = 0; j < ideal.ambient(); ++j)
            g[j] += eps[i][j];
        gens.push_back(std::move(g));
    }
    return MonomialIdeal(ideal.ambient(), std::move(gens));
}

bool is_generic(const MonomialIdeal &ideal) {
    const auto gens = ideal.generators();
    for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            if (!shares_positive_degree(gens[a], gens[b]))
                continue;
            const Monomial l = lcm(gens[a], gens[b]);
            bool witnessed = false;
            for (std::size_t c = 0; c < gens.size() && !witnessed; ++c)
                witnessed = c != a && c != b && strictly_divides(gens[c], l);
            if (!witnessed)
                return false;
        }
    }
    return true;
}

bool is_strongly_generic(const MonomialIdeal &ideal) {
    const auto gens = ideal.generators();
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b)
            if (shares_positive_degree(gens[a], gens[b]))
                return false;
    return true;
}

DeformationVectors find_generic_deformation(const MonomialIdeal &ideal, std::uint64_t seed) {
    ideal.require_proper_nonzero("generic deformation");
    auto eps = zero_deformation(ideal);
    const auto gens = ideal.generators();
    SplitMix64 rng(seed);
    std::vector<std::size_t> order(gens.size());
    for (std::size_t j = 0; j < ideal.ambient(); ++j) {
        // tie order for this variable: Fisher-Yates over the generator indices
        std::vector<std::size_t> rank(gens.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng.below(i)]);
        for (std::size_t i = 0; i < order.size(); ++i)
            rank[order[i]] = i;

        std::vector<std::size_t> positive;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i][j] > 0)
                positive.push_back(i);
        std::sort(positive.begin(), positive.end(), [&](std::size_t x, std::size_t y) {
            return gens[x][j] != gens[y][j] ? gens[x][j] < gens[y][j] : rank[x] < rank[y];
        });
        std::uint64_t previous = 0;
        for (auto i : positive) {
            std::uint64_t target = std::max<std::uint64_t>(gens[i][j], previous + 1);
            eps[i][j] = static_cast<Exponent>(target - gens[i][j]);
            previous = target;
        }
    }
    return eps;
}

DeformationSizeReport size_under_deformation(const MonomialIdeal &ideal,
                                             const DeformationVectors &eps, const Caps &caps) {
    DeformationSizeReport r;
    r.deformed = apply_deformation(ideal, eps);
    r.size_i = size(ideal, caps).size;
    r.size_eps = size(r.deformed, caps).size;
    r.inequality_holds = r.size_i >= r.size_eps;
    r.generic = is_generic(r.deformed);
    return r;
}

} // namespace monosize
