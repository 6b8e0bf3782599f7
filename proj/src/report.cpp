#include "monosize/report.hpp"

#include "monosize/error.hpp"
#include "monosize/text.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace monosize {

namespace {

Json one_based(const std::vector<std::size_t> &indices) {
    Json out = Json::array();
    for (auto i : indices)
        out.push_back(i + 1);
    return out;
}

std::string set_text(const std::vector<std::size_t> &indices) {
    std::string out = "{";
    for (std::size_t i = 0; i < indices.size(); ++i)
        out += (i ? "," : "") + std::to_string(indices[i] + 1);
    return out + "}";
}

std::string vars_text(const std::vector<std::size_t> &indices) {
    std::string out = "{";
    for (std::size_t i = 0; i < indices.size(); ++i)
        out += (i ? ", x" : "x") + std::to_string(indices[i] + 1);
    return out + "}";
}

} // namespace

Json to_json(const Decomposition &d) {
    Json comps = Json::array();
    Json exps = Json::array();
    for (const auto &c : d.components()) {
        comps.push_back(render(c));
        exps.push_back(std::vector<Exponent>(c.exponents().exponents().begin(),
                                             c.exponents().exponents().end()));
    }
    return Json{{"n", d.ambient()}, {"r", d.size()}, {"components", comps}, {"exponents", exps}};
}

Json to_json(const SizeReport &r) {
    return Json{{"v", r.v},
                {"h", r.h},
                {"n", r.n},
                {"size", r.size},
                {"inessential", one_based(r.inessential)},
                {"witness", one_based(r.witness)}};
}

Json to_json(const CoverFamily &f) {
    Json covers = Json::array();
    for (const auto &c : f.covers)
        covers.push_back(one_based(c));
    return Json{{"w", f.w},
                {"cardinality", f.cardinality},
                {"m", f.covers.size()},
                {"covers", covers},
                {"renumbering", one_based(f.renumbering)}};
}

Json to_json(const PolarizationResult &p) {
    Json vars = Json::array();
    for (std::size_t s = 0; s < p.layout.ambient(); ++s)
        vars.push_back(p.layout.name(s));
    Json gens = Json::array();
    for (const auto &g : p.ideal_p.generators())
        gens.push_back(render_polarized(g, p.layout));
    return Json{{"n", p.layout.original_ambient()},
                {"n_prime", p.layout.ambient()},
                {"c", p.c},
                {"bounds", p.bounds},
                {"variables", vars},
                {"ideal_p", render_polarized(p.ideal_p, p.layout)},
                {"generators", gens}};
}

Json to_json(const TopBase &b) {
    Json entries = Json::array();
    for (const auto &e : b.entries) {
        if (e)
            entries.push_back(Json{{"value", e->value}, {"row", e->row + 1}, {"column", e->column + 1}});
        else
            entries.push_back(nullptr);
    }
    return Json{{"c", b.values()}, {"sum", b.sum()}, {"entries", entries}};
}

Json matrix_json(const PowerMatrix &m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Exponent> row;
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const PolarizationSizeReport &r) {
    return Json{{"n", r.n},
                {"n_prime", r.n_prime},
                {"c", r.c},
                {"size", r.size_i},
                {"size_p", r.size_p},
                {"size_p_bar", r.size_p_bar},
                {"size_plus_c", r.size_i + r.c},
                {"bound_holds", r.bound_holds},
                {"bar_agrees", r.bar_agrees},
                {"top_base", to_json(r.top_base)}};
}

Json to_json(const EqualityVerdict &v) {
    Json tlu = Json::array();
    for (const auto &vv : v.per_variable) {
        tlu.push_back(Json{{"variable", "x" + std::to_string(vv.var + 1)},
                           {"T", one_based(vv.sets.t)},
                           {"L", one_based(vv.sets.l)},
                           {"U", one_based(vv.sets.u)},
                           {"shared", vv.shared},
                           {"condition_1", vv.condition_1},
                           {"condition_2A", vv.condition_2a},
                           {"condition_2B", vv.condition_2b},
                           {"holds", vv.holds}});
    }
    Json out{{"predicted", v.predicted},
             {"shape_ok", v.shape_ok},
             {"shape_violations", one_based(v.shape_violations)},
             {"covers", to_json(v.covers)},
             {"tlu", tlu}};
    if (v.actual) {
        out["actual"] = to_json(*v.actual);
        out["equal"] = v.actual_equal();
        out["agree"] = v.agree();
    }
    return out;
}

Json to_json(const DeformationSizeReport &r) {
    return Json{{"size", r.size_i},
                {"size_eps", r.size_eps},
                {"inequality_holds", r.inequality_holds},
                {"generic", r.generic},
                {"deformed", render(r.deformed)}};
}

Json to_json(const FuzzReport &r) {
    Json checked = Json::object();
    for (const auto &[k, v] : r.checked)
        checked[k] = v;
    Json cex = Json::array();
    for (const auto &c : r.counterexamples)
        cex.push_back(Json{{"instance", c.instance},
                           {"ideal", c.ideal},
                           {"n", c.n},
                           {"property", c.property},
                           {"observed", c.observed}});
    return Json{{"instances", r.instances},
                {"checked", checked},
                {"violations", r.counterexamples.size()},
                {"counterexamples", cex}};
}

Json to_json(const std::vector<ExampleCheck> &checks) {
    Json arr = Json::array();
    std::size_t failed = 0;
    for (const auto &c : checks) {
        failed += c.pass ? 0 : 1;
        arr.push_back(Json{{"example", c.example},
                           {"quantity", c.quantity},
                           {"expected", c.expected},
                           {"observed", c.observed},
                           {"pass", c.pass}});
    }
    return Json{{"checks", checks.size()}, {"failed", failed}, {"results", arr}};
}

Json deformation_json(const DeformationVectors &eps) { return Json(eps); }

DeformationVectors deformation_from_json(const std::string &text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::invalid_argument, std::string("deformation JSON: ") + e.what());
    }
    if (!j.is_array())
        throw Error(ErrorCode::invalid_argument, "deformation must be an array of arrays");
    DeformationVectors eps;
    for (const auto &row : j) {
        if (!row.is_array())
            throw Error(ErrorCode::invalid_argument, "deformation must be an array of arrays");
        std::vector<Exponent> v;
        for (const auto &x : row) {
            if (!x.is_number_unsigned())
                throw Error(ErrorCode::invalid_argument,
                            "deformation entries must be non-negative integers");
            v.push_back(x.get<Exponent>());
        }
        eps.push_back(std::move(v));
    }
    return eps;
}

std::string to_text(const Decomposition &d) {
    std::ostringstream os;
    os << render(d) << '\n';
    for (std::size_t i = 0; i < d.size(); ++i)
        os << "  Q" << std::left << std::setw(4) << (i + 1) << render(d[i]) << '\n';
    return os.str();
}

std::string to_text(const SizeReport &r, const CoverFamily *covers) {
    std::ostringstream os;
    os << "size        " << r.size << '\n'
       << "v           " << r.v << '\n'
       << "h           " << r.h << '\n'
       << "n           " << r.n << '\n'
       << "Z           " << vars_text(r.inessential) << '\n';
    if (covers) {
        os << "A           {";
        for (std::size_t i = 0; i < covers->covers.size(); ++i)
            os << (i ? ", " : "") << set_text(covers->covers[i]);
        os << "}\n";
    }
    return os.str();
}

std::string to_text(const PolarizationResult &p) {
    std::ostringstream os;
    os << "I^p         " << render_polarized(p.ideal_p, p.layout) << '\n'
       << "n'          " << p.layout.ambient() << '\n'
       << "c           " << p.c << '\n'
       << "a           (";
    for (std::size_t k = 0; k < p.bounds.size(); ++k)
        os << (k ? "," : "") << p.bounds[k];
    os << ")\n";
    return os.str();
}

std::string to_text(const PowerMatrix &m, const std::vector<TopBase> &bases) {
    std::ostringstream os;
    os << "M\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "  ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            os << std::right << std::setw(6) << m(i, j) << (m.is_top_power(i, j) ? '*' : ' ');
        }
        os << '\n';
    }
    for (const auto &b : bases) {
        os << "top base    {";
        auto values = b.values();
        for (std::size_t i = 0; i < values.size(); ++i)
            os << (i ? "," : "") << values[i];
        os << "}   C = [";
        for (std::size_t i = 0; i < b.entries.size(); ++i) {
            os << (i ? ", " : "");
            if (b.entries[i])
                os << "(" << b.entries[i]->value << "," << b.entries[i]->row + 1 << ","
                   << b.entries[i]->column + 1 << ")";
            else
                os << "-";
        }
        os << "]\n";
    }
    return os.str();
}

std::string to_text(const EqualityVerdict &v) {
    std::ostringstream os;
    os << "predicted   " << (v.predicted ? "size I^p = size I + c" : "size I^p < size I + c")
       << '\n'
       << "shape       " << (v.shape_ok ? "ok" : "violated by Q" + set_text(v.shape_violations))
       << '\n'
       << "A           {";
    for (std::size_t i = 0; i < v.covers.covers.size(); ++i)
        os << (i ? ", " : "") << set_text(v.covers.covers[i]);
    os << "}\n";
    for (const auto &vv : v.per_variable) {
        if (!vv.shared)
            continue;
        os << "  x" << std::left << std::setw(4) << (vv.var + 1) << "T=" << std::setw(10)
           << set_text(vv.sets.t) << "L=" << std::setw(10) << set_text(vv.sets.l)
           << "U=" << std::setw(10) << set_text(vv.sets.u);
        if (vv.condition_1)
            os << "(1)";
        else
            os << "(2)(A) " << (vv.condition_2a ? "ok" : "fails") << "  (2)(B) "
               << (vv.condition_2b ? "ok" : "fails");
        os << '\n';
    }
    if (v.actual) {
        const auto &a = *v.actual;
        os << "size I      " << a.size_i << '\n'
           << "c           " << a.c << '\n'
           << "size I^p    " << a.size_p << '\n'
           << "agree       " << (v.agree() ? "yes" : "NO") << '\n';
    }
    return os.str();
}

std::string to_text(const DeformationSizeReport &r) {
    std::ostringstream os;
    os << "I_eps       " << render(r.deformed) << '\n'
       << "generic     " << (r.generic ? "yes" : "no") << '\n'
       << "size I      " << r.size_i << '\n'
       << "size I_eps  " << r.size_eps << '\n'
       << "size I >= size I_eps  " << (r.inequality_holds ? "holds" : "FAILS") << '\n';
    return os.str();
}

std::string to_text(const FuzzReport &r) {
    std::ostringstream os;
    os << "instances   " << r.instances << '\n';
    for (const auto &[k, v] : r.checked)
        os << "  " << std::left << std::setw(24) << k << v << '\n';
    os << "violations  " << r.counterexamples.size() << '\n';
    for (const auto &c : r.counterexamples)
        os << "  #" << c.instance << " " << c.property << " " << c.ideal << " (n=" << c.n
           << "): " << c.observed << '\n';
    return os.str();
}

std::string to_text(const std::vector<ExampleCheck> &checks) {
    std::size_t width = 0;
    for (const auto &c : checks)
        width = std::max(width, c.example.size());
    std::ostringstream os;
    for (const auto &c : checks)
        os << (c.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width + 2))
           << c.example << std::setw(24) << c.quantity << "expected " << c.expected << "  observed "
           << c.observed << '\n';
    return os.str();
}

} // namespace monosize
