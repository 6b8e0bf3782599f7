#include "monosize/harness.hpp"

#include "monosize/deformation.hpp"
#include "monosize/error.hpp"
#include "monosize/polarization.hpp"
#include "monosize/size.hpp"
#include "monosize/text.hpp"

#include <algorithm>
#include <sstream>

namespace monosize {

const std::vector<std::string> &fuzz_properties() {
    static const std::vector<std::string> names = {
        "decomposition", "bound", "bar-identity", "equality-iff", "radical-invariance",
        "deformation-inequality"};
    return names;
}

FuzzReport run_fuzz(const FuzzConfig &config, const Caps &caps) {
    for (const auto &s : config.skip)
        if (std::find(fuzz_properties().begin(), fuzz_properties().end(), s) ==
            fuzz_properties().end())
            throw Error(ErrorCode::invalid_argument, "unknown fuzz property '" + s + "'");
    auto enabled = [&](const std::string &name) {
        return std::find(config.skip.begin(), config.skip.end(), name) == config.skip.end();
    };

    FuzzReport report;
    SplitMix64 rng(config.seed);
    for (std::size_t i = 0; i < config.count; ++i) {
        const auto ideal = random_ideal(rng, config.bounds);
        const auto deform_seed = rng.next();
        ++report.instances;
        auto fail = [&](const std::string &property, const std::string &observed) {
            report.counterexamples.push_back({i, render(ideal), ideal.ambient(), property, observed});
        };
        const auto d = irreducible_decomposition(ideal, caps);
        const auto size_i = size_of_decomposition(d).size;

        if (enabled("decomposition")) {
            ++report.checked["decomposition"];
            if (recompose(d) != ideal) {
                fail("decomposition", "recomposed to " + render(recompose(d)));
            } else {
                for (std::size_t j = 0; j < d.size(); ++j) {
                    std::vector<IrreducibleComponent> rest;
                    for (std::size_t t = 0; t < d.size(); ++t)
                        if (t != j)
                            rest.push_back(d[t]);
                    if (recompose(rest, d.ambient()) == ideal) {
                        fail("decomposition", "component " + render(d[j]) + " is redundant");
                        break;
                    }
                }
            }
        }
        if (enabled("bound") || enabled("bar-identity") || enabled("equality-iff")) {
            auto verdict = verify_equality(ideal, caps);
            const auto &p = *verdict.actual;
            if (enabled("bound")) {
                ++report.checked["bound"];
                if (!p.bound_holds) {
                    std::ostringstream os;
                    os << "size_p=" << p.size_p << " size_i=" << p.size_i << " c=" << p.c;
                    fail("bound", os.str());
                }
            }
            if (enabled("bar-identity")) {
                ++report.checked["bar-identity"];
                if (!p.bar_agrees) {
                    std::ostringstream os;
                    os << "size_p=" << p.size_p << " size_p_bar=" << p.size_p_bar;
                    fail("bar-identity", os.str());
                }
            }
            if (enabled("equality-iff")) {
                ++report.checked["equality-iff"];
                if (!verdict.agree()) {
                    std::ostringstream os;
                    os << "predicted=" << (verdict.predicted ? "true" : "false")
                       << " size_p=" << p.size_p << " size_i=" << p.size_i << " c=" << p.c;
                    fail("equality-iff", os.str());
                }
            }
        }
        if (enabled("radical-invariance")) {
            ++report.checked["radical-invariance"];
            const auto size_r = size(recompose(radical(d)), caps).size;
            if (size_r != size_i)
                fail("radical-invariance",
                     "size=" + std::to_string(size_i) + " size_radical=" + std::to_string(size_r));
        }
        if (enabled("deformation-inequality")) {
            ++report.checked["deformation-inequality"];
            const auto eps = find_generic_deformation(ideal, deform_seed);
            const auto r = size_under_deformation(ideal, eps, caps);
            if (!r.generic || !r.inequality_holds)
                fail("deformation-inequality",
                     "size=" + std::to_string(r.size_i) + " size_eps=" + std::to_string(r.size_eps) +
                         " deformed=" + render(r.deformed) +
                         (r.generic ? "" : " (deformation not generic)"));
        }
    }
    return report;
}

namespace {

std::string str(std::size_t v) { return std::to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }

std::string str(const std::vector<std::vector<std::size_t>> &sets) {
    std::string out = "{";
    for (std::size_t i = 0; i < sets.size(); ++i) {
        out += i ? ",{" : "{";
        for (std::size_t j = 0; j < sets[i].size(); ++j)
            out += (j ? "," : "") + std::to_string(sets[i][j] + 1);
        out += "}";
    }
    return out + "}";
}

std::string str(const std::vector<Exponent> &values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i)
        out += (i ? "," : "") + std::to_string(values[i]);
    return out + ")";
}

class Corpus {
  public:
    explicit Corpus(const Caps &caps) : caps_(caps) {}

    void check(const std::string &example, const std::string &quantity,
               const std::string &expected, const std::string &observed) {
        checks.push_back({example, quantity, expected, observed, expected == observed});
    }

    /// Size, c, cover family, size of the polarization and the prediction.
    /// `parts` lists the components in published order; cover indices are
    /// translated to that order before comparison.
    void polarization_example(const std::string &name, const std::vector<std::string> &parts,
                              std::size_t size_i, std::size_t c, std::size_t size_p,
                              const std::string &covers = "", const std::string &predicted = "",
                              const std::string &failing = "") {
        std::string text;
        for (const auto &p : parts)
            text += (text.empty() ? "" : " & ") + p;
        const auto ideal = parse_ideal(text, std::nullopt, caps_);
        const auto verdict = verify_equality(ideal, caps_);
        const auto &p = *verdict.actual;
        check(name, "size I", str(size_i), str(p.size_i));
        check(name, "c", str(c), str(p.c));
        check(name, "size I^p", str(size_p), str(p.size_p));
        if (!covers.empty()) {
            const auto d = irreducible_decomposition(ideal, caps_);
            check(name, "A", covers, str(in_published_order(verdict.covers, d, parts)));
        }
        if (!predicted.empty())
            check(name, "predicted equality", predicted, str(verdict.predicted));
        if (!failing.empty())
            check(name, "failing condition", failing, failing_conditions(verdict));
    }

    std::vector<std::vector<std::size_t>> in_published_order(const CoverFamily &f,
                                                             const Decomposition &d,
                                                             const std::vector<std::string> &parts) {
        std::vector<std::size_t> published(d.size(), SIZE_MAX);
        for (std::size_t j = 0; j < parts.size(); ++j) {
            const auto comp = irreducible_decomposition(parse_ideal(parts[j], d.ambient(), caps_), caps_);
            for (std::size_t i = 0; i < d.size(); ++i)
                if (comp.size() == 1 && comp[0] == d[i])
                    published[i] = j;
        }
        std::vector<std::vector<std::size_t>> out;
        for (const auto &cover : f.covers) {
            std::vector<std::size_t> mapped;
            for (auto i : cover)
                mapped.push_back(published[i]);
            std::sort(mapped.begin(), mapped.end());
            out.push_back(mapped);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    static std::string failing_conditions(const EqualityVerdict &v) {
        std::string out;
        if (!v.shape_ok)
            out += "shape;";
        for (const auto &vv : v.per_variable) {
            if (vv.holds)
                continue;
            const auto var = "x" + std::to_string(vv.var + 1);
            if (!vv.condition_2a)
                out += var + ":2a;";
            if (!vv.condition_2b)
                out += var + ":2b;";
        }
        return out;
    }

    std::vector<ExampleCheck> checks;

  private:
    const Caps &caps_;
};

DeformationVectors deformation_towards(const MonomialIdeal &ideal,
                                       const std::vector<std::pair<std::string, std::string>> &pairs,
                                       const Caps &caps) {
    auto eps = zero_deformation(ideal);
    const auto gens = ideal.generators();
    for (const auto &[from, to] : pairs) {
        const auto a = parse_monomial(from, ideal.ambient(), caps);
        const auto b = parse_monomial(to, ideal.ambient(), caps);
        auto it = std::find(gens.begin(), gens.end(), a);
        if (it == gens.end())
            throw Error(ErrorCode::internal, "corpus generator " + from + " not found");
        auto &e = eps[static_cast<std::size_t>(it - gens.begin())];
        for (std::size_t k = 0; k < ideal.ambient(); ++k)
            e[k] = b[k] - a[k];
    }
    return eps;
}

} // namespace

std::vector<ExampleCheck> run_examples(const Caps &caps) {
    Corpus corpus(caps);

    {
        const PowerMatrix m({{10, 10, 1}, {10, 2, 0}, {1, 0, 4}});
        corpus.check("top-base-matrix", "deterministic top base", "(10,0,4)", str(build_top_base(m).values()));
        std::string all;
        for (const auto &b : enumerate_top_bases(m, caps))
            all += str(b.values());
        corpus.check("top-base-matrix", "all top bases", "(10,0,4)(10,10,4)", all);
    }

    corpus.polarization_example("two-squares", {"(x1^2,x2^2)", "(x3^2,x4^2)"}, 1, 4, 3);
    {
        const auto ideal = parse_ideal("(x1^2,x2^2) & (x3^2,x4^2)", std::nullopt, caps);
        const auto d = irreducible_decomposition(ideal, caps);
        const auto pol = polarize(ideal, caps);
        auto bar = bar_family(d, build_top_base(PowerMatrix::of(d)), pol.layout);
        corpus.check("two-squares", "bar components", "4", str(bar.size()));
        corpus.check("two-squares", "size of bar family", "3",
                     str(size_of_decomposition(irredundantize(bar, pol.layout.ambient())).size));
    }
    corpus.polarization_example("four-edges", {"(x1^2,x2)", "(x2,x3)", "(x3,x4)", "(x2,x4)"}, 2, 1, 3,
                                "{{1,2,3},{1,2,4}}", "true", "");
    corpus.polarization_example("triangle", {"(x1^2,x2)", "(x1,x3)", "(x2,x3)"}, 1, 1, 1,
                                "{{1,2},{1,3},{2,3}}", "false", "x1:2a;");
    corpus.polarization_example("square-and-edge", {"(x1^2,x2)", "(x3,x4)", "(x1,x4^2)"}, 1, 2, 2, "{{1,2}}",
                                "false", "x1:2b;");
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto kk = std::to_string(k);
        const auto k1 = std::to_string(k + 1);
        corpus.polarization_example("nested-pair k=" + kk,
                                    {"(x1^" + k1 + ",x2^" + kk + ")", "(x1,x2^" + k1 + ")"}, 0, 2 * k, k);
    }

    {
        // x, y, z, t, w -> x1 .. x5
        const auto ideal =
            parse_ideal("(x1*x2*x4, x1*x2*x5, x1*x4*x5, x2*x3*x4, x2*x3*x5, x3*x4*x5)", 5, caps);
        const auto eps1 = deformation_towards(
            ideal, {{"x1*x4*x5", "x1*x4^3*x5"}, {"x2*x3*x4", "x2*x3*x4^2"}}, caps);
        const auto eps2 = deformation_towards(ideal,
                                              {{"x1*x2*x4", "x1^3*x2^4*x4"},
                                               {"x1*x2*x5", "x1^2*x2^2*x5"},
                                               {"x1*x4*x5", "x1*x4^3*x5^3"},
                                               {"x2*x3*x4", "x2^3*x3*x4^2"},
                                               {"x2*x3*x5", "x2*x3^2*x5^2"},
                                               {"x3*x4*x5", "x3^3*x4*x5^4"}},
                                              caps);
        const auto r1 = size_under_deformation(ideal, eps1, caps);
        const auto r2 = size_under_deformation(ideal, eps2, caps);
        const std::string s = "deformation";
        corpus.check(s, "size I", "2", str(r1.size_i));
        corpus.check(s, "I_eps1",
                     render(parse_ideal("(x1*x2*x4,x1*x2*x5,x1*x4^3*x5,x2*x3*x4^2,x2*x3*x5,x3*x4*x5)",
                                        5, caps)),
                     render(r1.deformed));
        corpus.check(s, "I_eps2",
                     render(parse_ideal("(x1^3*x2^4*x4,x1^2*x2^2*x5,x1*x4^3*x5^3,x2^3*x3*x4^2,"
                                        "x2*x3^2*x5^2,x3^3*x4*x5^4)",
                                        5, caps)),
                     render(r2.deformed));
        corpus.check(s, "eps1 valid", "true", str(validate_deformation(ideal, eps1)));
        corpus.check(s, "eps2 valid", "true", str(validate_deformation(ideal, eps2)));
        corpus.check(s, "size I_eps1", "1", str(r1.size_eps));
        corpus.check(s, "size I_eps2", "1", str(r2.size_eps));
        corpus.check(s, "I_eps2 generic", "true", str(r2.generic));
    }
    return corpus.checks;
}

} // namespace monosize
