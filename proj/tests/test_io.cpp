#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <random>

#include "doctest.h"
#include "tracelab/io.hpp"
#include "tracelab/parse.hpp"

using namespace tracelab;

namespace {

AlgebraPtr chain3(i64 p) { return ArtinianAlgebra::monomial_quotient(p, {"x"}, {Monomial{3}}); }
AlgebraPtr two_squares(i64 p) {
    return ArtinianAlgebra::monomial_quotient(p, {"x", "y"}, {Monomial{2, 0}, Monomial{0, 2}});
}

}  // namespace

TEST_CASE("polynomial parsing") {
    auto A = chain3(5);
    CHECK(parse_poly("x^2", *A) == A->monomial_element({2}));
    CHECK(parse_poly("x^3", *A) == A->zero_element());
    CHECK(parse_poly("(1+x)^2", *A) == std::vector<i64>{1, 2, 1});
    CHECK(parse_poly("2 - 3*x", *A) == std::vector<i64>{2, 2, 0});
    CHECK(parse_poly("-x", *A) == std::vector<i64>{0, 4, 0});
    CHECK(parse_poly("0", *A) == A->zero_element());

    auto B = two_squares(101);
    auto xy = B->mul_elements(B->var_element(0), B->var_element(1));
    auto twoxy = xy;
    twoxy[3] = 2;
    CHECK(parse_poly("x*y + y*x", *B) == twoxy);
    CHECK(parse_poly(" x * ( y + 1 ) ", *B) == B->mul_elements(B->var_element(0), parse_poly("y+1", *B)));

    auto B2 = two_squares(2);
    CHECK(parse_poly("x*y + y*x", *B2) == B2->zero_element());
}

TEST_CASE("parsing errors carry positions") {
    auto A = chain3(5);
    CHECK_THROWS_WITH(parse_poly("x + ", *A), "malformed expression at position 5");
    CHECK_THROWS_WITH(parse_poly("z", *A), "unknown variable 'z' at position 1");
    CHECK_THROWS_WITH(parse_poly("x^", *A), "malformed expression at position 3");
    CHECK_THROWS_WITH(parse_poly("(x", *A), "malformed expression at position 3");
    CHECK_THROWS_WITH(parse_poly("x y", *A), "malformed expression at position 3");
    CHECK_THROWS_WITH(parse_poly("", *A), "malformed expression at position 1");
}

TEST_CASE("monomial parsing") {
    const std::vector<std::string> vars{"x", "y"};
    CHECK(parse_monomial("x^2", vars) == Monomial{2, 0});
    CHECK(parse_monomial("x*y", vars) == Monomial{1, 1});
    CHECK(parse_monomial("y", vars) == Monomial{0, 1});
    CHECK(parse_monomial("x*x*y^3", vars) == Monomial{2, 3});
    CHECK_THROWS_WITH(parse_monomial("z", vars), "unknown variable 'z' at position 1");
    CHECK_THROWS_WITH(parse_monomial("x+", vars), "malformed expression at position 2");
    CHECK_THROWS_WITH(parse_monomial("", vars), "malformed expression at position 1");
    CHECK_THROWS_WITH(parse_monomial("2", vars), "malformed expression at position 1");
}

TEST_CASE("semigroup json round trip") {
    auto S = semigroup_from_json(json{{"generators", {6, 9, 20}}});
    CHECK(S.frobenius() == 43);
    CHECK(semigroup_to_json(S) == json{{"generators", {6, 9, 20}}});
    CHECK_THROWS_WITH(semigroup_from_json(json::object()), "missing field \"generators\"");
}

TEST_CASE("ideal json round trip") {
    auto S = NumericalSemigroup::from_generators({3, 4, 5});
    auto m = ValueIdeal::maximal_ideal(S);
    CHECK(ideal_from_json(ideal_to_json(m)) == m);

    // every normalized ideal, plus shifts, survives the round trip
    for (const auto& gens : {std::vector<i64>{3, 4, 5}, std::vector<i64>{2, 5},
                             std::vector<i64>{4, 6, 7}, std::vector<i64>{1}}) {
        auto T = NumericalSemigroup::from_generators(gens);
        for (const auto& I : enumerate_normalized_ideals(T)) {
            CHECK(ideal_from_json(ideal_to_json(I)) == I);
            auto J = I.shifted(-5);
            CHECK(ideal_from_json(ideal_to_json(J)) == J);
        }
    }

    auto parsed = ideal_from_json(
        json{{"semigroup", {{"generators", {2, 3}}}}, {"values", {0, 1}}});
    CHECK(parsed.min() == 0);
    CHECK(parsed.conductor() == 0);  // {0,1} + <2,3> closes up to all of N
    CHECK(parsed.sporadic().empty());
}

TEST_CASE("random ideal round trips") {
    std::mt19937_64 rng(99);
    auto S = NumericalSemigroup::from_generators({4, 7, 9});
    for (int t = 0; t < 40; ++t) {
        std::vector<i64> vals;
        const int k = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < k; ++i) vals.push_back(static_cast<i64>(rng() % 25) - 8);
        ValueIdeal I(S, vals);
        CHECK(ideal_from_json(ideal_to_json(I)) == I);
    }
}

TEST_CASE("module sum json") {
    auto S = NumericalSemigroup::from_generators({3, 4, 5});
    ModuleSum M({ValueIdeal::maximal_ideal(S), ValueIdeal::canonical(S)});
    auto back = module_sum_from_json(module_sum_to_json(M));
    REQUIRE(back.summands.size() == 2);
    CHECK(back.summands[0] == M.summands[0]);
    CHECK(back.summands[1] == M.summands[1]);
}

TEST_CASE("value windows and prefixes") {
    auto S = NumericalSemigroup::from_generators({3, 4, 5});
    auto m = ValueIdeal::maximal_ideal(S);
    CHECK(value_window_json(m) == json{{"min", 3}, {"sporadic", json::array()}, {"conductor", 3}});
    CHECK(value_prefix(m) == "{3,4,5,...}");
    auto w = ValueIdeal::canonical(S);
    CHECK(value_prefix(w) == "{0,1,3,4,5,...}");
}

TEST_CASE("algebra json") {
    auto A = algebra_from_json(
        json{{"p", 101}, {"vars", {"x", "y"}}, {"monomial_relations", {"x^2", "x*y", "y^2"}}});
    CHECK(A->dim() == 3);
    CHECK(A->has_minimal_multiplicity());
    auto j = algebra_to_json(*A);
    CHECK(j == json{{"p", 101}, {"vars", {"x", "y"}}, {"monomial_relations", {"x^2", "x*y", "y^2"}}});
    auto B = algebra_from_json(j);
    CHECK(B->basis() == A->basis());
}

TEST_CASE("artinian module json") {
    auto A = two_squares(101);
    CHECK(art_module_from_json(json{{"kind", "residue_field"}}, A).dim() == 1);

    auto I = art_module_from_json(json{{"kind", "ideal"}, {"generators", {"x", "x*y"}}}, A);
    CHECK(I.dim() == 2);

    auto P = art_module_from_json(
        json::parse(R"({"kind": "presentation", "matrix": [["x", "y"], ["0", "x*y"]]})"), A);
    CHECK(P.min_gens() == 2);

    CHECK_THROWS_WITH(art_module_from_json(json{{"kind", "shrub"}}, A),
                      "unknown module kind 'shrub'");
    CHECK_THROWS_WITH(
        art_module_from_json(
            json::parse(R"({"kind": "presentation", "matrix": [["x"], ["x", "y"]]})"), A),
        "ragged matrix");
}

TEST_CASE("subspace rendering") {
    auto A = two_squares(101);
    auto j = subspace_to_json(*A, A->socle());
    CHECK(j["dim"] == 1);
    CHECK(j["basis"] == json::array({"x*y"}));
}

TEST_CASE("file loading") {
    const char* path = "tracelab_io_test.json";
    {
        std::ofstream out(path);
        out << R"({"generators": [3, 7]})";
    }
    auto j = load_json_file(path);
    CHECK(semigroup_from_json(j).frobenius() == 11);
    std::remove(path);
    CHECK_THROWS(load_json_file("definitely_missing_file.json"));
}
