#include "monosize/ideal.hpp"

#include "monosize/error.hpp"

#include <algorithm>
#include <string>

namespace monosize {

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Monomial> generators) : n_(n) {
    for (const auto &g : generators)
        if (g.ambient() != n)
            throw Error(ErrorCode::invalid_argument,
                        "generator has " + std::to_string(g.ambient()) +
                            " variables, ideal has " + std::to_string(n));
    gens_ = minimalize(std::move(generators), n).gens_;
}

bool MonomialIdeal::is_squarefree() const noexcept {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial &g) { return g.is_squarefree(); });
}

std::vector<Exponent> MonomialIdeal::max_degrees() const {
    std::vector<Exponent> out(n_, 0);
    for (const auto &g : gens_)
        for (std::size_t k = 0; k < n_; ++k)
            out[k] = std::max(out[k], g[k]);
    return out;
}

void MonomialIdeal::require_proper_nonzero(const char *operation) const {
    if (is_zero())
        throw Error(ErrorCode::degenerate_ideal,
                    std::string(operation) + " is undefined for the zero ideal");
    if (is_unit())
        throw Error(ErrorCode::degenerate_ideal,
                    std::string(operation) + " is undefined for the unit ideal");
}

MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t n) {
    // A divisor never has larger degree, so scanning by degree lets every
    // candidate be tested against the survivors only.
    std::sort(gens.begin(), gens.end(), [](const Monomial &a, const Monomial &b) {
        auto da = a.degree(), db = b.degree();
        return da != db ? da < db : a < b;
    });
    std::vector<Monomial> kept;
    for (auto &g : gens) {
        bool dominated = std::any_of(kept.begin(), kept.end(),
                                     [&](const Monomial &k) { return divides(k, g); });
        if (!dominated)
            kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end());
    MonomialIdeal out(n);
    out.gens_ = std::move(kept);
    return out;
}

bool contains(const MonomialIdeal &ideal, const Monomial &m) {
    if (ideal.ambient() != m.ambient())
        throw Error(ErrorCode::invalid_argument, "membership test across different rings");
    auto gens = ideal.generators();
    return std::any_of(gens.begin(), gens.end(), [&](const Monomial &g) { return divides(g, m); });
}

MonomialIdeal intersect(const MonomialIdeal &lhs, const MonomialIdeal &rhs) {
    if (lhs.ambient() != rhs.ambient())
        throw Error(ErrorCode::invalid_argument, "intersection across different rings");
    std::vector<Monomial> lcms;
    lcms.reserve(lhs.size() * rhs.size());
    for (const auto &g : lhs.generators())
        for (const auto &h : rhs.generators())
            lcms.push_back(lcm(g, h));
    return minimalize(std::move(lcms), lhs.ambient());
}

bool ideal_leq(const MonomialIdeal &lhs, const MonomialIdeal &rhs) {
    if (lhs.ambient() != rhs.ambient())
        throw Error(ErrorCode::invalid_argument, "containment across different rings");
    auto gens = lhs.generators();
    return std::all_of(gens.begin(), gens.end(), [&](const Monomial &g) { return contains(rhs, g); });
}

} // namespace monosize
