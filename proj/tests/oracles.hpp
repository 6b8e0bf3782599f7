#pragma once

// Test-only reference implementations. They share no code path with the
// library routines they check beyond the value types.

#include "monosize/decomposition.hpp"
#include "monosize/ideal.hpp"
#include "monosize/random.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using namespace monosize;

/// Calls f on every exponent vector in [0, bound]^n.
inline void for_each_in_box(std::size_t n, Exponent bound, const std::function<void(const Monomial &)> &f) {
    Monomial m(n);
    for (;;) {
        f(m);
        std::size_t k = 0;
        while (k < n && m[k] == bound) {
            m[k] = 0;
            ++k;
        }
        if (k == n)
            return;
        ++m[k];
    }
}

inline bool member(const MonomialIdeal &ideal, const Monomial &m) {
    for (const auto &g : ideal.generators()) {
        bool div = true;
        for (std::size_t k = 0; k < m.ambient(); ++k)
            div = div && g[k] <= m[k];
        if (div)
            return true;
    }
    return false;
}

/// Membership in an irreducible component: some X_k^{e_k} divides m.
inline bool member(const IrreducibleComponent &q, const Monomial &m) {
    for (std::size_t k = 0; k < m.ambient(); ++k)
        if (q[k] > 0 && m[k] >= q[k])
            return true;
    return false;
}

/// Incremental decomposition: start from the components of the first
/// generator and refine with each further generator, keeping components
/// that are minimal under containment tested on monomials in a box.
inline std::vector<Monomial> decomposition(const MonomialIdeal &ideal) {
    const std::size_t n = ideal.ambient();
    std::vector<Monomial> comps;
    bool first = true;
    for (const auto &g : ideal.generators()) {
        std::vector<Monomial> next;
        if (first) {
            for (std::size_t k = 0; k < n; ++k)
                if (g[k] > 0)
                    next.push_back(Monomial::pure_power(n, k, g[k]));
            first = false;
        } else {
            for (const auto &q : comps) {
                bool inside = false;
                for (std::size_t k = 0; k < n; ++k)
                    inside = inside || (q[k] > 0 && g[k] >= q[k]);
                if (inside) {
                    next.push_back(q);
                    continue;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    if (g[k] == 0)
                        continue;
                    Monomial r = q;
                    r[k] = g[k];
                    next.push_back(r);
                }
            }
        }
        // keep containment-minimal components: Q' ⊆ Q iff every pure power
        // generator of Q' lies in Q
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::vector<Monomial> kept;
        for (std::size_t j = 0; j < next.size(); ++j) {
            bool redundant = false;
            for (std::size_t i = 0; i < next.size() && !redundant; ++i) {
                if (i == j)
                    continue;
                bool sub = true;
                for (std::size_t k = 0; k < n && sub; ++k)
                    if (next[i][k] > 0)
                        sub = next[j][k] > 0 && next[j][k] <= next[i][k];
                redundant = sub;
            }
            if (!redundant)
                kept.push_back(next[j]);
        }
        comps = std::move(kept);
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

/// Smallest number of supports whose union is the union of all, by
/// enumerating every subset. Returns {v, h}.
inline std::pair<std::size_t, std::size_t> brute_cover(const std::vector<Monomial> &comps) {
    const std::size_t r = comps.size();
    const std::size_t n = comps.front().ambient();
    auto mask_of = [&](const Monomial &c) {
        std::uint64_t m = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (c[k] > 0)
                m |= std::uint64_t{1} << k;
        return m;
    };
    std::uint64_t all = 0;
    for (const auto &c : comps)
        all |= mask_of(c);
    std::size_t best = r;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << r); ++s) {
        std::uint64_t u = 0;
        for (std::size_t i = 0; i < r; ++i)
            if (s >> i & 1)
                u |= mask_of(comps[i]);
        if (u == all)
            best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(s)));
    }
    return {best, static_cast<std::size_t>(__builtin_popcountll(all))};
}

inline std::size_t brute_size(const std::vector<Monomial> &comps, std::size_t n) {
    auto [v, h] = brute_cover(comps);
    return v + (n - h) - 1;
}

/// Every index set of the given cardinality covering the union, ascending.
inline std::vector<std::vector<std::size_t>> brute_covers(const std::vector<Monomial> &comps,
                                                          std::size_t cardinality) {
    const std::size_t r = comps.size();
    const std::size_t n = comps.front().ambient();
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> all(n, false);
    for (const auto &c : comps)
        for (std::size_t k = 0; k < n; ++k)
            all[k] = all[k] || c[k] > 0;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << r); ++s) {
        if (static_cast<std::size_t>(__builtin_popcountll(s)) != cardinality)
            continue;
        std::vector<bool> u(n, false);
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < r; ++i)
            if (s >> i & 1) {
                idx.push_back(i);
                for (std::size_t k = 0; k < n; ++k)
                    u[k] = u[k] || comps[i][k] > 0;
            }
        if (u == all)
            out.push_back(idx);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Monomial> exps_of(const Decomposition &d) {
    std::vector<Monomial> out;
    for (const auto &c : d.components())
        out.push_back(c.exponents());
    return out;
}

} // namespace oracle
