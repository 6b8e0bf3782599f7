#include "monosize/decomposition.hpp"

#include "monosize/error.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace monosize {

IrreducibleComponent::IrreducibleComponent(Monomial exps) : exps_(std::move(exps)) {
    if (exps_.is_one())
        throw Error(ErrorCode::invalid_argument,
                    "an irreducible component needs at least one positive exponent");
}

VarSet IrreducibleComponent::support() const {
    VarSet s(ambient());
    for (std::size_t k = 0; k < ambient(); ++k)
        if (exps_[k] > 0)
            s.set(k);
    return s;
}

MonomialIdeal IrreducibleComponent::as_ideal() const {
    std::vector<Monomial> gens;
    for (std::size_t k = 0; k < ambient(); ++k)
        if (exps_[k] > 0)
            gens.push_back(Monomial::pure_power(ambient(), k, exps_[k]));
    return MonomialIdeal(ambient(), std::move(gens));
}

IrreducibleComponent IrreducibleComponent::radical() const {
    Monomial r(ambient());
    for (std::size_t k = 0; k < ambient(); ++k)
        r[k] = exps_[k] > 0 ? 1 : 0;
    return IrreducibleComponent(std::move(r));
}

bool component_leq(const IrreducibleComponent &lhs, const IrreducibleComponent &rhs) {
    if (lhs.ambient() != rhs.ambient())
        throw Error(ErrorCode::invalid_argument, "components live in different rings");
    for (std::size_t k = 0; k < lhs.ambient(); ++k) {
        if (lhs[k] == 0)
            continue;
        if (rhs[k] == 0 || rhs[k] > lhs[k])
            return false;
    }
    return true;
}

Decomposition irredundantize(std::vector<IrreducibleComponent> components, std::size_t n) {
    if (components.empty())
        throw Error(ErrorCode::invalid_argument, "cannot irredundantize an empty component list");
    for (const auto &c : components)
        if (c.ambient() != n)
            throw Error(ErrorCode::invalid_argument, "component ambient does not match");
    std::sort(components.begin(), components.end());
    components.erase(std::unique(components.begin(), components.end()), components.end());

    // An irreducible monomial ideal contains a finite intersection only if it
    // contains one of the terms, so redundancy reduces to pairwise inclusion.
    Decomposition out(n);
    for (std::size_t j = 0; j < components.size(); ++j) {
        bool redundant = false;
        for (std::size_t i = 0; i < components.size() && !redundant; ++i)
            redundant = i != j && component_leq(components[i], components[j]);
        if (!redundant)
            out.comps_.push_back(components[j]);
    }
    return out;
}

MonomialIdeal recompose(std::span<const IrreducibleComponent> components, std::size_t n) {
    MonomialIdeal acc = MonomialIdeal::unit(n);
    for (const auto &c : components)
        acc = intersect(acc, c.as_ideal());
    return acc;
}

MonomialIdeal recompose(const Decomposition &d) { return recompose(d.components(), d.ambient()); }

namespace {

class Splitter {
  public:
    Splitter(std::size_t n, const Caps &caps) : n_(n), caps_(caps) {}

    const std::vector<IrreducibleComponent> &run(const std::vector<Monomial> &gens) {
        if (auto it = memo_.find(gens); it != memo_.end())
            return it->second;

        auto mixed = std::find_if(gens.begin(), gens.end(),
                                  [](const Monomial &g) { return !g.is_pure_power(); });
        std::vector<IrreducibleComponent> result;
        if (mixed == gens.end()) {
            Monomial exps(n_);
            for (const auto &g : gens)
                for (std::size_t k = 0; k < n_; ++k)
                    if (g[k] > 0)
                        exps[k] = g[k];
            result.emplace_back(std::move(exps));
        } else {
            const Monomial &m = *mixed;
            std::size_t k = 0;
            while (m[k] == 0)
                ++k;
            Monomial power = Monomial::pure_power(n_, k, m[k]);
            Monomial rest = m;
            rest[k] = 0;

            auto branch = [&](Monomial replacement) {
                std::vector<Monomial> next;
                next.reserve(gens.size());
                for (const auto &g : gens)
                    if (&g != &m)
                        next.push_back(g);
                next.push_back(std::move(replacement));
                auto ideal = minimalize(std::move(next), n_);
                return std::vector<Monomial>(ideal.generators().begin(), ideal.generators().end());
            };
            auto left = branch(power);
            auto right = branch(rest);
            std::vector<IrreducibleComponent> merged = run(left);
            const auto &rhs = run(right);
            merged.insert(merged.end(), rhs.begin(), rhs.end());
            auto d = irredundantize(std::move(merged), n_);
            result.assign(d.components().begin(), d.components().end());
        }
        if (result.size() > caps_.max_components)
            throw Error(ErrorCode::cap_exceeded,
                        "irreducible decomposition exceeds " +
                            std::to_string(caps_.max_components) + " components");
        return memo_.emplace(gens, std::move(result)).first->second;
    }

  private:
    std::size_t n_;
    const Caps &caps_;
    std::map<std::vector<Monomial>, std::vector<IrreducibleComponent>> memo_;
};

} // namespace

Decomposition irreducible_decomposition(const MonomialIdeal &ideal, const Caps &caps) {
    ideal.require_proper_nonzero("irreducible decomposition");
    Splitter splitter(ideal.ambient(), caps);
    std::vector<Monomial> gens(ideal.generators().begin(), ideal.generators().end());
    return irredundantize(splitter.run(gens), ideal.ambient());
}

} // namespace monosize
