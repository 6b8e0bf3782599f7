#include "monosize/polarization.hpp"

#include "monosize/error.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace monosize {

PolarizationLayout::PolarizationLayout(const std::vector<Exponent> &bounds) {
    levels_.reserve(bounds.size());
    offsets_.reserve(bounds.size());
    for (auto a : bounds) {
        offsets_.push_back(total_);
        levels_.push_back(std::max<Exponent>(a, 1));
        total_ += levels_.back();
    }
}

std::size_t PolarizationLayout::slot(std::size_t var, Exponent level) const {
    if (var >= levels_.size() || level == 0 || level > levels_[var])
        throw Error(ErrorCode::invalid_argument,
                    "no polarized variable x" + std::to_string(var + 1) + "_" +
                        std::to_string(level));
    return offsets_[var] + level - 1;
}

PolarizedVariable PolarizationLayout::variable(std::size_t slot) const {
    if (slot >= total_)
        throw Error(ErrorCode::invalid_argument, "polarized slot out of range");
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), slot);
    auto var = static_cast<std::size_t>(it - offsets_.begin()) - 1;
    return {var, static_cast<Exponent>(slot - offsets_[var] + 1)};
}

std::string PolarizationLayout::name(std::size_t slot) const {
    auto pv = variable(slot);
    return "x" + std::to_string(pv.var + 1) + "_" + std::to_string(pv.level);
}

PolarizationResult polarize(const MonomialIdeal &ideal, const Caps &caps) {
    ideal.require_proper_nonzero("polarization");
    PolarizationResult out;
    out.bounds = ideal.max_degrees();
    for (auto a : out.bounds)
        if (a > caps.max_exponent)
            throw Error(ErrorCode::cap_exceeded,
                        "exponent " + std::to_string(a) + " exceeds the cap of " +
                            std::to_string(caps.max_exponent));
    out.layout = PolarizationLayout(out.bounds);
    out.c = out.layout.ambient() - ideal.ambient();

    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (const auto &g : ideal.generators()) {
        Monomial p(out.layout.ambient());
        for (std::size_t k = 0; k < ideal.ambient(); ++k)
            for (Exponent l = 1; l <= g[k]; ++l)
                p[out.layout.slot(k, l)] = 1;
        gens.push_back(std::move(p));
    }
    out.ideal_p = MonomialIdeal(out.layout.ambient(), std::move(gens));
    return out;
}

std::vector<IrreducibleComponent> polarize_component(const IrreducibleComponent &component,
                                                     const PolarizationLayout &layout,
                                                     const Caps &caps) {
    const std::size_t n = component.ambient();
    if (n != layout.original_ambient())
        throw Error(ErrorCode::invalid_argument, "component and layout disagree on ambient");
    std::vector<std::size_t> support;
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (component[k] == 0)
            continue;
        if (component[k] > layout.levels(k))
            throw Error(ErrorCode::invalid_argument,
                        "component exponent exceeds the polarization bound of x" +
                            std::to_string(k + 1));
        support.push_back(k);
        count *= component[k];
        if (count > caps.max_components)
            throw Error(ErrorCode::cap_exceeded,
                        "polarized component splits into more than " +
                            std::to_string(caps.max_components) + " components");
    }

    std::vector<IrreducibleComponent> out;
    out.reserve(count);
    std::vector<Exponent> choice(support.size(), 1);
    for (;;) {
        Monomial exps(layout.ambient());
        for (std::size_t s = 0; s < support.size(); ++s)
            exps[layout.slot(support[s], choice[s])] = 1;
        out.emplace_back(std::move(exps));
        // odometer over b_k in 1..a_k
        std::size_t s = support.size();
        while (s > 0 && choice[s - 1] == component[support[s - 1]]) {
            choice[s - 1] = 1;
            --s;
        }
        if (s == 0)
            break;
        ++choice[s - 1];
    }
    std::sort(out.begin(), out.end());
    return out;
}

PowerMatrix::PowerMatrix(std::size_t rows, std::size_t cols, std::vector<Exponent> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), col_max_(cols, 0) {
    if (entries_.size() != rows * cols)
        throw Error(ErrorCode::invalid_argument, "matrix entry count does not match its shape");
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            col_max_[j] = std::max(col_max_[j], (*this)(i, j));
}

namespace {

std::vector<Exponent> flatten(const std::vector<std::vector<Exponent>> &rows) {
    std::vector<Exponent> out;
    for (const auto &r : rows) {
        if (r.size() != rows.front().size())
            throw Error(ErrorCode::invalid_argument, "ragged matrix rows");
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

} // namespace

PowerMatrix::PowerMatrix(const std::vector<std::vector<Exponent>> &rows)
    : PowerMatrix(rows.size(), rows.empty() ? 0 : rows.front().size(), flatten(rows)) {}

PowerMatrix PowerMatrix::of(const Decomposition &d) {
    std::vector<Exponent> entries;
    entries.reserve(d.size() * d.ambient());
    for (const auto &c : d.components())
        for (std::size_t k = 0; k < d.ambient(); ++k)
            entries.push_back(c[k]);
    return PowerMatrix(d.size(), d.ambient(), std::move(entries));
}

bool PowerMatrix::is_top_power(std::size_t i, std::size_t j) const {
    auto a = (*this)(i, j);
    return a > 0 && a == col_max_[j];
}

Exponent PowerMatrix::max_top_power(std::size_t i) const {
    Exponent best = 0;
    for (std::size_t j = 0; j < cols_; ++j)
        if (is_top_power(i, j))
            best = std::max(best, (*this)(i, j));
    return best;
}

std::vector<Exponent> TopBase::values() const {
    std::vector<Exponent> out;
    out.reserve(entries.size());
    for (const auto &e : entries)
        out.push_back(e ? e->value : 0);
    return out;
}

std::uint64_t TopBase::sum() const {
    std::uint64_t s = 0;
    for (auto v : values())
        s += v;
    return s;
}

namespace {

/// Columns j in `open` where row i holds a top power equal to max B^i_N.
std::vector<std::size_t> maximal_top_columns(const PowerMatrix &m, std::size_t i,
                                             const std::vector<bool> &open) {
    Exponent best = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (open[j] && m.is_top_power(i, j))
            best = std::max(best, m(i, j));
    std::vector<std::size_t> cols;
    if (best == 0)
        return cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (open[j] && m.is_top_power(i, j) && m(i, j) == best)
            cols.push_back(j);
    return cols;
}

} // namespace

TopBase build_top_base(const PowerMatrix &m) {
    TopBase base;
    base.entries.resize(m.rows());
    std::vector<bool> open(m.cols(), true);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto cols = maximal_top_columns(m, i, open);
        if (cols.empty())
            continue;
        auto j = cols.front();
        base.entries[i] = TopBaseEntry{m(i, j), i, j};
        open[j] = false;
    }
    return base;
}

std::vector<TopBase> enumerate_top_bases(const PowerMatrix &m, const Caps &caps) {
    std::set<TopBase> found;
    std::size_t leaves = 0;
    TopBase current;
    current.entries.resize(m.rows());
    std::vector<bool> open(m.cols(), true);

    auto walk = [&](auto &self, std::size_t i) -> void {
        if (i == m.rows()) {
            if (++leaves > caps.max_top_base_branches)
                throw Error(ErrorCode::cap_exceeded,
                            "more than " + std::to_string(caps.max_top_base_branches) +
                                " top-base branches");
            found.insert(current);
            return;
        }
        auto cols = maximal_top_columns(m, i, open);
        if (cols.empty()) {
            self(self, i + 1);
            return;
        }
        for (auto j : cols) {
            current.entries[i] = TopBaseEntry{m(i, j), i, j};
            open[j] = false;
            self(self, i + 1);
            open[j] = true;
            current.entries[i].reset();
        }
    };
    walk(walk, 0);
    return {found.begin(), found.end()};
}

std::vector<IrreducibleComponent> bar_family(const Decomposition &d, const TopBase &base,
                                             const PolarizationLayout &layout) {
    if (base.entries.size() != d.size())
        throw Error(ErrorCode::invalid_argument, "top base does not match the decomposition");
    if (layout.original_ambient() != d.ambient())
        throw Error(ErrorCode::invalid_argument, "layout does not match the decomposition");
    std::vector<IrreducibleComponent> out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const auto &q = d[i];
        const Exponent ci = base.entries[i] ? base.entries[i]->value : 0;
        for (Exponent j = 1; j <= ci; ++j) {
            Monomial exps(layout.ambient());
            for (std::size_t k = 0; k < d.ambient(); ++k)
                if (q[k] > 0)
                    exps[layout.slot(k, std::min(j, q[k]))] = 1;
            out.emplace_back(std::move(exps));
        }
    }
    return out;
}

PolarizationSizeReport polarization_sizes(const MonomialIdeal &ideal, const Caps &caps) {
    const auto d = irreducible_decomposition(ideal, caps);
    const auto pol = polarize(ideal, caps);
    const auto matrix = PowerMatrix::of(d);
    for (std::size_t k = 0; k < ideal.ambient(); ++k)
        if (matrix.column_max(k) != pol.bounds[k])
            throw Error(ErrorCode::internal,
                        "generator degree bound of x" + std::to_string(k + 1) +
                            " differs from the component exponent bound");

    PolarizationSizeReport r;
    r.n = ideal.ambient();
    r.n_prime = pol.layout.ambient();
    r.c = pol.c;
    r.size_i = size_of_decomposition(d).size;
    r.size_p = size_of_decomposition(irreducible_decomposition(pol.ideal_p, caps)).size;
    r.top_base = build_top_base(matrix);
    auto bar = bar_family(d, r.top_base, pol.layout);
    r.size_p_bar = size_of_decomposition(irredundantize(std::move(bar), r.n_prime)).size;
    r.bar_agrees = r.size_p_bar == r.size_p;
    r.bound_holds = r.size_p <= r.size_i + r.c;
    return r;
}

PolarizationSizeReport size_of_polarization(const MonomialIdeal &ideal, const Caps &caps) {
    auto r = polarization_sizes(ideal, caps);
    if (!r.bar_agrees)
        throw Error(ErrorCode::internal, "bar family size " + std::to_string(r.size_p_bar) +
                                             " differs from polarization size " +
                                             std::to_string(r.size_p));
    if (!r.bound_holds)
        throw Error(ErrorCode::internal, "size of polarization " + std::to_string(r.size_p) +
                                             " exceeds size + c = " +
                                             std::to_string(r.size_i + r.c));
    return r;
}

VariableSets compute_tlu(const Decomposition &d, std::size_t var) {
    if (var >= d.ambient())
        throw Error(ErrorCode::invalid_argument, "variable index out of range");
    const auto m = PowerMatrix::of(d);
    VariableSets s;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const auto a = d[i][var];
        if (a >= 2)
            s.t.push_back(i);
        if (a >= 1)
            s.l.push_back(i);
        if (a == 1 && m.max_top_power(i) > 1)
            s.u.push_back(i);
    }
    return s;
}

EqualityVerdict predict_equality(const Decomposition &d, const Caps &caps) {
    EqualityVerdict v;
    for (std::size_t i = 0; i < d.size(); ++i) {
        std::size_t big = 0;
        for (std::size_t k = 0; k < d.ambient(); ++k)
            big += d[i][k] >= 2 ? 1 : 0;
        if (big > 1)
            v.shape_violations.push_back(i);
    }
    v.shape_ok = v.shape_violations.empty();
    v.covers = minimal_covers(d, caps);

    bool all_hold = true;
    for (std::size_t k = 0; k < d.ambient(); ++k) {
        VariableVerdict vv;
        vv.var = k;
        vv.sets = compute_tlu(d, k);
        vv.shared = vv.sets.l.size() >= 2;
        const auto &t = vv.sets.t;
        vv.condition_1 = t.empty();
        if (!t.empty()) {
            vv.condition_2a = std::none_of(t.begin(), t.end(), [&](std::size_t ti) {
                return std::any_of(vv.sets.l.begin(), vv.sets.l.end(), [&](std::size_t li) {
                    return li != ti && v.covers.share_a_cover(ti, li);
                });
            });
            bool t_in_cover = std::any_of(t.begin(), t.end(),
                                          [&](std::size_t ti) { return v.covers.in_some_cover(ti); });
            vv.condition_2b = !t_in_cover || vv.sets.u.empty();
        }
        vv.holds = !vv.shared || vv.condition_1 || (vv.condition_2a && vv.condition_2b);
        all_hold = all_hold && vv.holds;
        v.per_variable.push_back(std::move(vv));
    }
    v.predicted = v.shape_ok && all_hold;
    return v;
}

EqualityVerdict verify_equality(const MonomialIdeal &ideal, const Caps &caps) {
    ideal.require_proper_nonzero("equality verification");
    auto v = predict_equality(irreducible_decomposition(ideal, caps), caps);
    v.actual = polarization_sizes(ideal, caps);
    return v;
}

} // namespace monosize
