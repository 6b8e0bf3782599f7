#include "monosize/deformation.hpp"
#include "monosize/error.hpp"
#include "monosize/harness.hpp"
#include "monosize/polarization.hpp"
#include "monosize/report.hpp"
#include "monosize/size.hpp"
#include "monosize/text.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace monosize;

namespace {

using Rows = std::vector<std::vector<Exponent>>;

Rows rows_of(std::span<const Monomial> ms) {
    Rows out;
    for (const auto &m : ms)
        out.emplace_back(m.exponents().begin(), m.exponents().end());
    return out;
}

MonomialIdeal from_rows(const Rows &rows, std::optional<std::size_t> vars) {
    std::size_t n = vars.value_or(rows.empty() ? 0 : rows.front().size());
    std::vector<Monomial> gens;
    for (const auto &r : rows)
        gens.emplace_back(r);
    return MonomialIdeal(n, std::move(gens));
}

Caps caps_from_env() {
    const char *env = std::getenv("MONOSIZE_CAPS");
    return env ? parse_caps(env) : default_caps();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Size of monomial ideals, polarization and generic deformations";

    py::register_exception<Error>(m, "MonosizeError", PyExc_ValueError);

    py::class_<MonomialIdeal>(m, "Ideal")
        .def(py::init([](const std::string &text, std::optional<std::size_t> vars) {
                 return parse_ideal(text, vars, caps_from_env());
             }),
             py::arg("text"), py::arg("vars") = py::none())
        .def_static("from_generators", &from_rows, py::arg("generators"), py::arg("vars") = py::none())
        .def_property_readonly("n", &MonomialIdeal::ambient)
        .def_property_readonly("generators",
                               [](const MonomialIdeal &i) { return rows_of(i.generators()); })
        .def("__len__", &MonomialIdeal::size)
        .def("__eq__", [](const MonomialIdeal &a, const MonomialIdeal &b) { return a == b; })
        .def("__contains__",
             [](const MonomialIdeal &i, const std::vector<Exponent> &e) { return contains(i, Monomial(e)); })
        .def("__str__", [](const MonomialIdeal &i) { return render(i); })
        .def("__repr__", [](const MonomialIdeal &i) { return "Ideal('" + render(i) + "')"; });

    m.def("intersect", &intersect);
    m.def(
        "decompose",
        [](const MonomialIdeal &i) {
            const auto d = irreducible_decomposition(i, caps_from_env());
            Rows out;
            for (const auto &c : d.components())
                out.emplace_back(c.exponents().exponents().begin(), c.exponents().exponents().end());
            return out;
        },
        "Exponent vectors of the irredundant irreducible components, 0 meaning absent.");
    m.def("recompose", [](const Rows &components) {
        std::vector<IrreducibleComponent> comps;
        for (const auto &r : components)
            comps.emplace_back(Monomial(r));
        const std::size_t n = components.empty() ? 0 : components.front().size();
        return recompose(irredundantize(std::move(comps), n));
    });
    m.def("size_json", [](const MonomialIdeal &i, bool covers) {
        const auto caps = caps_from_env();
        Json j = to_json(size(i, caps));
        if (covers)
            j["covers"] = to_json(minimal_covers(irreducible_decomposition(i, caps), caps));
        return j.dump();
    });
    m.def("polarize_json", [](const MonomialIdeal &i) { return to_json(polarize(i, caps_from_env())).dump(); });
    m.def("polarization_sizes_json",
          [](const MonomialIdeal &i) { return to_json(polarization_sizes(i, caps_from_env())).dump(); });
    m.def(
        "top_bases",
        [](const Rows &matrix, bool all) {
            const PowerMatrix pm(matrix);
            Rows out;
            if (!all)
                out.push_back(build_top_base(pm).values());
            else
                for (const auto &b : enumerate_top_bases(pm, caps_from_env()))
                    out.push_back(b.values());
            return out;
        },
        py::arg("matrix"), py::arg("all") = false);
    m.def("predict_equality_json", [](const MonomialIdeal &i) {
        const auto caps = caps_from_env();
        return to_json(predict_equality(irreducible_decomposition(i, caps), caps)).dump();
    });
    m.def("verify_equality_json",
          [](const MonomialIdeal &i) { return to_json(verify_equality(i, caps_from_env())).dump(); });

    m.def("is_generic", &is_generic);
    m.def("is_strongly_generic", &is_strongly_generic);
    m.def("validate_deformation", &validate_deformation);
    m.def("apply_deformation", &apply_deformation);
    m.def("find_generic_deformation", &find_generic_deformation, py::arg("ideal"), py::arg("seed") = 0);
    m.def("size_under_deformation_json", [](const MonomialIdeal &i, const DeformationVectors &eps) {
        return to_json(size_under_deformation(i, eps, caps_from_env())).dump();
    });

    m.def(
        "fuzz_json",
        [](std::uint64_t seed, std::size_t count, std::size_t max_vars, std::size_t max_gens,
           Exponent max_exp, std::vector<std::string> skip) {
            FuzzConfig cfg;
            cfg.seed = seed;
            cfg.count = count;
            cfg.bounds = {max_vars, max_gens, max_exp};
            cfg.skip = std::move(skip);
            return to_json(run_fuzz(cfg, caps_from_env())).dump();
        },
        py::arg("seed") = 0, py::arg("count") = 500, py::arg("max_vars") = 4, py::arg("max_gens") = 4,
        py::arg("max_exp") = 3, py::arg("skip") = std::vector<std::string>{});
    m.def("examples_json", [] { return to_json(run_examples(caps_from_env())).dump(); });
}
