#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tracelab/catalog.hpp"
#include "tracelab/io.hpp"
#include "tracelab/koszul.hpp"
#include "tracelab/module.hpp"
#include "tracelab/parse.hpp"
#include "tracelab/suites.hpp"

namespace py = pybind11;
using namespace tracelab;

namespace {

RMatrix rmatrix_from_strings(AlgebraPtr A, const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty() || rows.front().empty()) throw std::invalid_argument("empty input");
    RMatrix P(A, rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.front().size()) throw std::invalid_argument("ragged matrix");
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            P.at(r, c) = parse_poly(rows[r][c], *A);
    }
    return P;
}

std::vector<std::string> subspace_strings(const ArtinianAlgebra& A, const Subspace& V) {
    std::vector<std::string> out;
    out.reserve(V.dim());
    for (const auto& v : V.basis()) out.push_back(A.element_string(v));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "trace ideals, syzygies and Ulrich certificates";

    py::class_<NumericalSemigroup>(m, "Semigroup")
        .def(py::init(&NumericalSemigroup::from_generators), py::arg("generators"))
        .def_static("from_gaps", &NumericalSemigroup::from_gaps, py::arg("gaps"))
        .def_property_readonly("generators", &NumericalSemigroup::generators)
        .def_property_readonly("frobenius", &NumericalSemigroup::frobenius)
        .def_property_readonly("gaps", &NumericalSemigroup::gaps)
        .def_property_readonly("multiplicity", &NumericalSemigroup::multiplicity)
        .def_property_readonly("embedding_dimension", &NumericalSemigroup::embedding_dimension)
        .def("contains", &NumericalSemigroup::contains, py::arg("n"))
        .def("apery_set", &NumericalSemigroup::apery_set, py::arg("n"))
        .def("is_regular", &NumericalSemigroup::is_regular)
        .def("has_minimal_multiplicity", &NumericalSemigroup::has_minimal_multiplicity)
        .def("is_symmetric", &NumericalSemigroup::is_symmetric)
        .def("is_arf", &NumericalSemigroup::is_arf)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__repr__", &NumericalSemigroup::to_string);
    m.def("enumerate_semigroups", &enumerate_semigroups, py::arg("max_frobenius"));
    m.def("endomorphism_ring", &endomorphism_ring, py::arg("S"));
    m.def("is_nearly_gorenstein", &is_nearly_gorenstein, py::arg("S"));

    py::class_<ValueIdeal>(m, "Ideal")
        .def(py::init<NumericalSemigroup, std::vector<i64>>(), py::arg("semigroup"),
             py::arg("values"))
        .def_static("ring", &ValueIdeal::ring, py::arg("S"))
        .def_static("maximal_ideal", &ValueIdeal::maximal_ideal, py::arg("S"))
        .def_static("canonical", &ValueIdeal::canonical, py::arg("S"))
        .def_property_readonly("semigroup", &ValueIdeal::semigroup)
        .def_property_readonly("sporadic", &ValueIdeal::sporadic)
        .def_property_readonly("conductor", &ValueIdeal::conductor)
        .def_property_readonly("min", &ValueIdeal::min)
        .def("contains", &ValueIdeal::contains, py::arg("x"))
        .def("shifted", &ValueIdeal::shifted, py::arg("a"))
        .def("normalized", &ValueIdeal::normalized)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__add__", &add)
        .def("__mul__", &multiply)
        .def("__repr__", &ValueIdeal::to_string);
    m.def("colon", &colon, py::arg("I"), py::arg("J"));
    m.def("trace", py::overload_cast<const ValueIdeal&>(&trace), py::arg("I"));
    m.def("minimal_generators", &minimal_generators, py::arg("I"));
    m.def("mu", py::overload_cast<const ValueIdeal&>(&mu), py::arg("I"));
    m.def("is_ulrich", py::overload_cast<const ValueIdeal&>(&is_ulrich), py::arg("I"));
    m.def("is_full_trace", py::overload_cast<const ValueIdeal&>(&is_full_trace), py::arg("I"));
    m.def("maximal_ideal_power", &maximal_ideal_power, py::arg("S"), py::arg("n"));
    m.def("enumerate_normalized_ideals", &enumerate_normalized_ideals, py::arg("S"));
    m.def(
        "isomorphism_shift",
        [](const ValueIdeal& I, const ValueIdeal& J) -> py::object {
            auto s = isomorphism_shift(I, J);
            return s ? py::cast(*s) : py::none();
        },
        py::arg("I"), py::arg("J"));

    py::class_<ModuleSum>(m, "ModuleSum")
        .def(py::init<std::vector<ValueIdeal>>(), py::arg("summands"))
        .def_readonly("summands", &ModuleSum::summands);
    m.def("trace_of_sum", py::overload_cast<const ModuleSum&>(&trace), py::arg("M"));
    m.def(
        "trace_over_endomorphism_ring",
        [](const ModuleSum& M) {
            auto r = trace_over_endomorphism_ring(M);
            return py::make_tuple(r.endo, r.trace_over_endo);
        },
        py::arg("M"));

    py::classh<ArtinianAlgebra>(m, "Algebra")
        .def_property_readonly("p", [](const ArtinianAlgebra& A) { return A.field().p(); })
        .def_property_readonly("dim", &ArtinianAlgebra::dim)
        .def_property_readonly("var_names", &ArtinianAlgebra::var_names)
        .def_property_readonly("embedding_dimension", &ArtinianAlgebra::embedding_dimension)
        .def("basis_strings",
             [](const ArtinianAlgebra& A) {
                 std::vector<std::string> out;
                 for (const auto& b : A.basis()) out.push_back(A.monomial_string(b));
                 return out;
             })
        .def("is_pir", &ArtinianAlgebra::is_pir)
        .def("has_minimal_multiplicity", &ArtinianAlgebra::has_minimal_multiplicity)
        .def("socle",
             [](const ArtinianAlgebra& A) { return subspace_strings(A, A.socle()); })
        .def("ideal_power_dim",
             [](const ArtinianAlgebra& A, int n) { return A.ideal_power(n).dim(); },
             py::arg("n"));
    m.def(
        "monomial_quotient",
        [](i64 p, const std::vector<std::string>& vars,
           const std::vector<std::string>& relations) {
            std::vector<Monomial> rels;
            rels.reserve(relations.size());
            for (const auto& r : relations) rels.push_back(parse_monomial(r, vars));
            return ArtinianAlgebra::monomial_quotient(p, vars, std::move(rels));
        },
        py::arg("p"), py::arg("vars"), py::arg("relations"));

    py::class_<PresentedModule>(m, "Module")
        .def_static("regular", &PresentedModule::regular, py::arg("A"))
        .def_static("residue_field", &PresentedModule::residue_field, py::arg("A"))
        .def_static(
            "ideal",
            [](AlgebraPtr A, const std::vector<std::string>& gens) {
                std::vector<std::vector<i64>> elems;
                elems.reserve(gens.size());
                for (const auto& g : gens) elems.push_back(parse_poly(g, *A));
                return PresentedModule::ideal(A, elems);
            },
            py::arg("A"), py::arg("generators"))
        .def_static(
            "cokernel",
            [](AlgebraPtr A, const std::vector<std::vector<std::string>>& rows) {
                return PresentedModule::cokernel(rmatrix_from_strings(A, rows));
            },
            py::arg("A"), py::arg("matrix"))
        .def_property_readonly("dim", &PresentedModule::dim)
        .def("min_gens", &PresentedModule::min_gens)
        .def("direct_sum", &PresentedModule::direct_sum, py::arg("other"))
        .def("trace",
             [](const PresentedModule& M) {
                 return subspace_strings(*M.algebra(), trace_ideal(M));
             })
        .def("is_full_trace", [](const PresentedModule& M) { return is_full_trace(M); })
        .def("has_free_summand", [](const PresentedModule& M) { return has_free_summand(M); })
        .def("annihilator",
             [](const PresentedModule& M) {
                 return subspace_strings(*M.algebra(), annihilator(M));
             })
        .def("betti_numbers", [](const PresentedModule& M, int steps) {
            return minimal_resolution(M, steps).betti;
        }, py::arg("steps"));

    m.def(
        "koszul_betti",
        [](int n) {
            auto K = koszul_build(n);
            std::vector<std::size_t> b;
            for (const auto& t : K.terms) b.push_back(t.size());
            return b;
        },
        py::arg("n"));
    m.def(
        "koszul_check",
        [](int n) {
            auto K = koszul_build(n);
            if (!koszul_verify(K)) return false;
            for (int i = 1; i <= n; ++i)
                if (koszul_variable_ideal(K, i).size() != static_cast<std::size_t>(n))
                    return false;
            return true;
        },
        py::arg("n"));

    m.def(
        "run_suites",
        [](std::uint64_t seed) {
            auto reports = run_all_suites(seed);
            return run_to_json(reports, seed).dump(2);
        },
        py::arg("seed") = 0);
}
