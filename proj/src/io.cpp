#include "tracelab/io.hpp"

#include <fstream>
#include <sstream>

#include "tracelab/parse.hpp"

namespace tracelab {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return j;
}

namespace {

const json& need(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    return *it;
}

}  // namespace

NumericalSemigroup semigroup_from_json(const json& j) {
    return NumericalSemigroup::from_generators(need(j, "generators").get<std::vector<i64>>());
}

json semigroup_to_json(const NumericalSemigroup& S) {
    return json{{"generators", S.generators()}};
}

ValueIdeal ideal_from_json(const json& j) {
    return ValueIdeal(semigroup_from_json(need(j, "semigroup")),
                      need(j, "values").get<std::vector<i64>>());
}

json ideal_to_json(const ValueIdeal& I) {
    return json{{"semigroup", semigroup_to_json(I.semigroup())},
                {"values", minimal_generators(I)}};
}

ModuleSum module_sum_from_json(const json& j) {
    std::vector<ValueIdeal> parts;
    for (const auto& item : need(j, "summands")) parts.push_back(ideal_from_json(item));
    return ModuleSum(std::move(parts));
}

json module_sum_to_json(const ModuleSum& M) {
    json arr = json::array();
    for (const auto& I : M.summands) arr.push_back(ideal_to_json(I));
    return json{{"summands", std::move(arr)}};
}

json value_window_json(const ValueIdeal& I) {
    return json{{"min", I.min()}, {"sporadic", I.sporadic()}, {"conductor", I.conductor()}};
}

AlgebraPtr algebra_from_json(const json& j) {
    const i64 p = need(j, "p").get<i64>();
    const auto vars = need(j, "vars").get<std::vector<std::string>>();
    std::vector<Monomial> rels;
    for (const auto& item : need(j, "monomial_relations"))
        rels.push_back(parse_monomial(item.get<std::string>(), vars));
    return ArtinianAlgebra::monomial_quotient(p, vars, rels);
}

json algebra_to_json(const ArtinianAlgebra& A) {
    std::vector<std::string> rels;
    for (const auto& r : A.relations()) rels.push_back(A.monomial_string(r));
    return json{{"p", A.field().p()}, {"vars", A.var_names()}, {"monomial_relations", rels}};
}

PresentedModule art_module_from_json(const json& j, AlgebraPtr A) {
    const std::string kind = need(j, "kind").get<std::string>();
    if (kind == "residue_field") return PresentedModule::residue_field(A);
    if (kind == "ideal") {
        std::vector<std::vector<i64>> gens;
        for (const auto& item : need(j, "generators"))
            gens.push_back(parse_poly(item.get<std::string>(), *A));
        return PresentedModule::ideal(A, gens);
    }
    if (kind == "presentation") {
        const json& m = need(j, "matrix");
        if (!m.is_array() || m.empty()) throw std::invalid_argument("matrix must be a nonempty array");
        const std::size_t rows = m.size(), cols = m[0].size();
        RMatrix P(A, rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            if (m[r].size() != cols) throw std::invalid_argument("ragged matrix");
            for (std::size_t c = 0; c < cols; ++c)
                P.at(r, c) = parse_poly(m[r][c].get<std::string>(), *A);
        }
        return PresentedModule::cokernel(P);
    }
    throw std::invalid_argument("unknown module kind '" + kind + "'");
}

json subspace_to_json(const ArtinianAlgebra& A, const Subspace& V) {
    std::vector<std::string> basis;
    for (const auto& v : V.basis()) basis.push_back(A.element_string(v));
    return json{{"dim", V.dim()}, {"basis", basis}};
}

std::string value_prefix(const ValueIdeal& I) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (i64 v : I.sporadic()) {
        if (!first) os << ",";
        os << v;
        first = false;
    }
    for (i64 v = I.conductor(); v < I.conductor() + 3; ++v) {
        if (!first) os << ",";
        os << v;
        first = false;
    }
    os << ",...}";
    return os.str();
}

}  // namespace tracelab
