#include "monosize/random.hpp"

namespace monosize {

MonomialIdeal random_ideal(SplitMix64 &rng, const RandomBounds &bounds) {
    for (;;) {
        const auto n = static_cast<std::size_t>(rng.between(1, bounds.max_vars));
        const auto count = static_cast<std::size_t>(rng.between(1, bounds.max_generators));
        std::vector<Monomial> gens;
        for (std::size_t g = 0; g < count; ++g) {
            Monomial m(n);
            for (std::size_t k = 0; k < n; ++k)
                m[k] = static_cast<Exponent>(rng.below(bounds.max_exponent + 1ULL));
            gens.push_back(std::move(m));
        }
        MonomialIdeal ideal(n, std::move(gens));
        if (!ideal.is_unit() && !ideal.is_zero())
            return ideal;
    }
}

MonomialIdeal random_component_ideal(SplitMix64 &rng, const RandomBounds &bounds) {
    const auto n = static_cast<std::size_t>(rng.between(1, bounds.max_vars));
    const auto count = static_cast<std::size_t>(rng.between(1, bounds.max_generators));
    std::vector<IrreducibleComponent> comps;
    while (comps.size() < count) {
        Monomial m(n);
        for (std::size_t k = 0; k < n; ++k)
            m[k] = static_cast<Exponent>(rng.below(bounds.max_exponent + 1ULL));
        if (!m.is_one())
            comps.emplace_back(std::move(m));
    }
    return recompose(comps, n);
}

} // namespace monosize
