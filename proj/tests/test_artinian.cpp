#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "tracelab/catalog.hpp"
#include "tracelab/module.hpp"

using namespace tracelab;

namespace {

AlgebraPtr chain(i64 p, int n) {
    return ArtinianAlgebra::monomial_quotient(p, {"x"}, {Monomial{n}});
}
AlgebraPtr square_zero(i64 p) {
    return ArtinianAlgebra::monomial_quotient(p, {"x", "y"},
                                              {Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}});
}
AlgebraPtr two_squares(i64 p) {
    return ArtinianAlgebra::monomial_quotient(p, {"x", "y"}, {Monomial{2, 0}, Monomial{0, 2}});
}

// Socle of a monomial quotient, computed combinatorially: a standard
// monomial lies in the socle exactly when every variable bump leaves the
// basis.
Subspace socle_oracle(const ArtinianAlgebra& A) {
    std::vector<std::vector<i64>> vecs;
    for (std::size_t b = 0; b < A.dim(); ++b) {
        bool killed = true;
        for (std::size_t j = 0; j < A.nvars() && killed; ++j) {
            Monomial m = A.basis()[b];
            m[j] += 1;
            killed = A.basis_index(m) < 0;
        }
        if (killed) {
            std::vector<i64> e(A.dim(), 0);
            e[b] = 1;
            vecs.push_back(std::move(e));
        }
    }
    return Subspace::span(A.field(), A.dim(), vecs);
}

// Matrix of an RMatrix as a linear map between free modules, component
// slots of size dim(A) per free rank.
FMatrix rmatrix_fmat(const RMatrix& P) {
    const ArtinianAlgebra& A = *P.A;
    const std::size_t n = A.dim();
    FMatrix M(A.field(), P.rows * n, P.cols * n);
    for (std::size_t r = 0; r < P.rows; ++r)
        for (std::size_t c = 0; c < P.cols; ++c) {
            const FMatrix mm = A.mult_matrix(P.at(r, c));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) M.at(r * n + i, c * n + j) = mm.at(i, j);
        }
    return M;
}

Subspace column_space(const FMatrix& M) {
    std::vector<std::vector<i64>> cols;
    for (std::size_t c = 0; c < M.cols; ++c) {
        std::vector<i64> v(M.rows);
        for (std::size_t r = 0; r < M.rows; ++r) v[r] = M.at(r, c);
        cols.push_back(std::move(v));
    }
    return Subspace::span(M.F, M.rows, cols);
}

Subspace kernel_space(const FMatrix& M) {
    const std::size_t amb = M.cols;
    FMatrix K = nullspace(M);
    std::vector<std::vector<i64>> cols;
    for (std::size_t c = 0; c < K.cols; ++c) {
        std::vector<i64> v(amb);
        for (std::size_t r = 0; r < amb; ++r) v[r] = K.at(r, c);
        cols.push_back(std::move(v));
    }
    return Subspace::span(M.F, amb, cols);
}

// Independent certificate that a computed resolution really is a minimal
// free resolution: differentials have entries in m, ranks line up, and at
// every interior step the linear-algebra kernel of one differential equals
// the column space of the next.  Any complex with these properties has the
// true Betti numbers.
void check_resolution_certificate(const FreeResolution& res) {
    for (std::size_t i = 0; i < res.maps.size(); ++i) {
        CHECK(res.maps[i].entries_in_m());
        CHECK(res.maps[i].rows == res.betti[i]);
        CHECK(res.maps[i].cols == res.betti[i + 1]);
    }
    for (std::size_t i = 0; i + 1 < res.maps.size(); ++i) {
        CHECK(kernel_space(rmatrix_fmat(res.maps[i])) == column_space(rmatrix_fmat(res.maps[i + 1])));
    }
}

Subspace full_ring(const ArtinianAlgebra& A) { return A.ideal_power(0); }

}  // namespace

TEST_CASE("monomial quotient construction and basis order") {
    auto A = chain(5, 3);
    CHECK(A->dim() == 3);
    CHECK(A->basis() == std::vector<Monomial>{{0}, {1}, {2}});
    CHECK(A->is_pir());
    CHECK(!A->has_minimal_multiplicity());
    CHECK(A->embedding_dimension() == 1);
    CHECK(A->monomial_string({2}) == "x^2");

    auto B = square_zero(2);
    CHECK(B->dim() == 3);
    CHECK(B->has_minimal_multiplicity());
    CHECK(!B->is_pir());
    CHECK(B->embedding_dimension() == 2);
    CHECK(B->socle() == B->maximal_ideal());

    auto C = two_squares(101);
    CHECK(C->dim() == 4);
    CHECK(C->basis() == std::vector<Monomial>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(C->socle().dim() == 1);
    CHECK(C->socle().contains(C->monomial_element({1, 1})));
    CHECK(C->embedding_dimension() == 2);

    // degree then reverse-lex: 1 | x,y | x^2,xy,y^2 | x^2y,xy^2 | x^2y^2
    auto D = ArtinianAlgebra::monomial_quotient(101, {"x", "y"}, {Monomial{3, 0}, Monomial{0, 3}});
    CHECK(D->dim() == 9);
    CHECK(D->basis() ==
          std::vector<Monomial>{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {2, 1}, {1, 2}, {2, 2}});
    CHECK(D->basis_index({1, 1}) == 4);
    CHECK(D->basis_index({3, 1}) == -1);
    CHECK(D->product_index(1, 2) == 4);   // x * y = xy
    CHECK(D->product_index(3, 1) == -1);  // x^2 * x = 0
}

TEST_CASE("construction errors") {
    CHECK_THROWS_WITH(ArtinianAlgebra::monomial_quotient(4, {"x"}, {Monomial{2}}), "not prime");
    CHECK_THROWS_WITH(ArtinianAlgebra::monomial_quotient(2, {"x", "y"}, {Monomial{2, 0}}),
                      "not Artinian");
    CHECK_THROWS_WITH(ArtinianAlgebra::monomial_quotient(2, {"x"}, {Monomial{201}}), "size guard");
    CHECK_THROWS_WITH(ArtinianAlgebra::monomial_quotient(2, {}, {}), "empty input");
    CHECK_THROWS_WITH(ArtinianAlgebra::monomial_quotient(2, {"x"}, {Monomial{0}}), "unit relation");
    CHECK_THROWS_WITH(ArtinianAlgebra::monomial_quotient(2, {"x"}, {Monomial{2, 1}}),
                      "relation arity mismatch");
}

TEST_CASE("element arithmetic") {
    auto C = two_squares(101);
    auto u = C->one_element();
    u[1] = 1;  // 1 + x
    auto v = C->one_element();
    v[2] = 1;  // 1 + y
    auto w = C->mul_elements(u, v);
    CHECK(w == std::vector<i64>{1, 1, 1, 1});  // 1 + x + y + xy
    CHECK(C->element_string(w) == "1 + x + y + x*y");
    CHECK(C->is_unit(w));
    CHECK(!C->is_unit(C->var_element(0)));

    auto A = chain(5, 3);
    auto x = A->var_element(0);
    CHECK(A->mul_elements(x, A->mul_elements(x, x)) == A->zero_element());
    const FMatrix mx = A->mult_matrix(x);
    CHECK(mx.apply(A->one_element()) == x);
    CHECK(mx.apply(x) == A->monomial_element({2}));
}

TEST_CASE("socle matches the combinatorial oracle across the catalog") {
    for (const auto& entry : algebra_catalog()) {
        CAPTURE(entry.name);
        const auto& A = *entry.algebra;
        CHECK(A.socle() == socle_oracle(A));
        CHECK(A.maximal_ideal().contains(A.socle()));
        CHECK(A.ideal_power(0) == full_ring(A));
        CHECK(A.ideal_power(1) == A.maximal_ideal());
        CHECK(A.has_minimal_multiplicity() == (A.ideal_power(2).dim() == 0));
    }
    auto A = chain(5, 4);
    CHECK(A->ideal_power(2).dim() == 2);
    CHECK(A->ideal_power(3).dim() == 1);
    CHECK(A->ideal_power(4).dim() == 0);
}

TEST_CASE("hom spaces: frozen dimensions and images") {
    auto A = chain(5, 3);
    auto R = PresentedModule::regular(A);
    CHECK(hom_to_ring(R).size() == 3);
    CHECK(trace_ideal(R) == full_ring(*A));
    CHECK(has_free_summand(R));
    CHECK(!is_full_trace(R));

    auto k = PresentedModule::residue_field(A);
    auto homs = hom_to_ring(k);
    CHECK(homs.size() == 1);
    CHECK(trace_ideal(k) == A->socle());
    CHECK(!has_free_summand(k));

    auto B = square_zero(101);
    auto kB = PresentedModule::residue_field(B);
    auto homsB = hom_to_ring(kB);
    CHECK(homsB.size() == 2);
    std::vector<std::vector<i64>> images;
    for (const auto& h : homsB)
        for (std::size_t c = 0; c < h.cols; ++c) {
            std::vector<i64> v(h.rows);
            for (std::size_t r = 0; r < h.rows; ++r) v[r] = h.at(r, c);
            images.push_back(std::move(v));
        }
    CHECK(Subspace::span(B->field(), B->dim(), images) == B->maximal_ideal());
    CHECK(is_full_trace(kB));  // socle = m in the square-zero ring
}

TEST_CASE("trace of the residue field is the socle everywhere") {
    for (const auto& entry : algebra_catalog()) {
        CAPTURE(entry.name);
        auto k = PresentedModule::residue_field(entry.algebra);
        CHECK(trace_ideal(k) == entry.algebra->socle());
        CHECK(is_full_trace(k) == entry.algebra->has_minimal_multiplicity());
    }
}

TEST_CASE("annihilators") {
    auto A = chain(5, 4);
    auto k = PresentedModule::residue_field(A);
    CHECK(annihilator(k) == A->maximal_ideal());
    CHECK(annihilator(PresentedModule::regular(A)).dim() == 0);
    CHECK(annihilator(PresentedModule::zero(A)) == full_ring(*A));

    auto I = PresentedModule::ideal(A, {A->monomial_element({2})});
    CHECK(I.dim() == 2);  // x^2, x^3
    CHECK(annihilator(I) == A->ideal_power(2));
}

TEST_CASE("resolution of k over chain rings alternates x and x^(n-1)") {
    for (i64 p : {i64{2}, i64{101}}) {
        for (int n = 2; n <= 6; ++n) {
            CAPTURE(p);
            CAPTURE(n);
            auto A = chain(p, n);
            auto res = minimal_resolution(PresentedModule::residue_field(A), 6);
            REQUIRE(res.betti.size() == 7);
            for (auto b : res.betti) CHECK(b == 1);
            for (std::size_t i = 0; i < res.maps.size(); ++i) {
                const auto expected =
                    (i % 2 == 0) ? A->var_element(0) : A->monomial_element({n - 1});
                CHECK(res.maps[i].at(0, 0) == expected);
            }
            check_resolution_certificate(res);
            // syzygy traces alternate m and m^(n-1)
            CHECK(trace_ideal(res.syzygies[1]) == A->maximal_ideal());
            CHECK(trace_ideal(res.syzygies[2]) == A->ideal_power(n - 1));
            CHECK(trace_ideal(res.syzygies[3]) == A->maximal_ideal());
        }
    }
}

TEST_CASE("resolution of k over square-zero rings doubles") {
    for (i64 p : {i64{2}, i64{101}}) {
        auto res = minimal_resolution(PresentedModule::residue_field(square_zero(p)), 4);
        CHECK(res.betti == std::vector<std::size_t>{1, 2, 4, 8, 16});
        check_resolution_certificate(res);
    }
    auto T = ArtinianAlgebra::monomial_quotient(
        2, {"x", "y", "z"},
        {Monomial{2, 0, 0}, Monomial{1, 1, 0}, Monomial{1, 0, 1}, Monomial{0, 2, 0},
         Monomial{0, 1, 1}, Monomial{0, 0, 2}});
    auto res3 = minimal_resolution(PresentedModule::residue_field(T), 3);
    CHECK(res3.betti == std::vector<std::size_t>{1, 3, 9, 27});
}

TEST_CASE("resolution of a free module stops immediately") {
    auto A = two_squares(2);
    auto res = minimal_resolution(PresentedModule::regular(A), 5);
    CHECK(res.betti == std::vector<std::size_t>{1});
    CHECK(res.maps.empty());
    auto res2 = minimal_resolution(PresentedModule::regular(A).direct_sum(PresentedModule::regular(A)), 5);
    CHECK(res2.betti == std::vector<std::size_t>{2});
    CHECK_THROWS_WITH(minimal_resolution(PresentedModule::regular(A), 13), "size guard");
}

TEST_CASE("resolution certificate across the catalog") {
    for (const auto& entry : algebra_catalog()) {
        CAPTURE(entry.name);
        const int steps = entry.algebra->nvars() == 3 ? 3 : 4;
        auto res = minimal_resolution(PresentedModule::residue_field(entry.algebra), steps);
        check_resolution_certificate(res);
        CHECK(res.betti[1] == entry.algebra->embedding_dimension());
    }
}

TEST_CASE("cokernel presentations") {
    auto A = chain(5, 3);
    RMatrix P(A, 1, 1);
    P.at(0, 0) = A->var_element(0);
    auto M = PresentedModule::cokernel(P);
    CHECK(M.dim() == 1);
    CHECK(isomorphic_restricted(M, PresentedModule::residue_field(A)));

    CHECK(PresentedModule::cokernel(RMatrix::identity(A, 2)).is_zero_module());
    CHECK(PresentedModule::cokernel(RMatrix(A, 2, 1)).dim() == 6);  // zero relations: free R^2

    // coker [x 0; 0 x^2] = R/(x) + R/(x^2)
    RMatrix Q(A, 2, 2);
    Q.at(0, 0) = A->var_element(0);
    Q.at(1, 1) = A->monomial_element({2});
    auto N = PresentedModule::cokernel(Q);
    CHECK(N.dim() == 3);
    CHECK(N.min_gens() == 2);
}

TEST_CASE("trace via presentation agrees with the intertwiner route") {
    std::mt19937_64 rng(12345);
    for (const auto& entry : algebra_catalog()) {
        CAPTURE(entry.name);
        auto k = PresentedModule::residue_field(entry.algebra);
        CHECK(trace_via_presentation(k) == trace_ideal(k));
        auto R = PresentedModule::regular(entry.algebra);
        CHECK(trace_via_presentation(R) == trace_ideal(R));
        CHECK(trace_via_presentation(PresentedModule::zero(entry.algebra)).dim() == 0);
        for (int t = 0; t < 8; ++t) {
            auto M = random_module(rng, entry.algebra);
            CAPTURE(t);
            CHECK(trace_via_presentation(M) == trace_ideal(M));
        }
    }
}

TEST_CASE("matrix ideal lemma") {
    auto A = chain(5, 3);
    CHECK(matrix_ideal(RMatrix::identity(A, 2)) == full_ring(*A));
    CHECK(matrix_ideal(RMatrix(A, 2, 2)).dim() == 0);

    RMatrix P(A, 1, 1);
    P.at(0, 0) = A->var_element(0);
    CHECK(matrix_ideal(P) == Subspace::span(A->field(), 3, {{0, 1, 0}, {0, 0, 1}}));
    CHECK(image_module(P).dim() == 2);
    CHECK(check_lemma_matrix_trace(P));

    std::mt19937_64 rng(777);
    for (const auto& entry : algebra_catalog()) {
        CAPTURE(entry.name);
        for (int t = 0; t < 25; ++t) {
            auto M = random_rmatrix(rng, entry.algebra);
            CAPTURE(t);
            CHECK(check_lemma_matrix_trace(M));
        }
    }
}

TEST_CASE("ulrich modules and direct sums") {
    auto B = square_zero(101);
    auto k = PresentedModule::residue_field(B);
    CHECK(k.is_ulrich());
    CHECK(!PresentedModule::regular(B).is_ulrich());
    CHECK(!PresentedModule::zero(B).is_ulrich());
    auto m = PresentedModule::ideal(B, {B->var_element(0), B->var_element(1)});
    CHECK(m.dim() == 2);
    CHECK(m.is_ulrich());
    CHECK(is_full_trace(m));

    auto s = k.direct_sum(m);
    CHECK(s.dim() == 3);
    CHECK(s.min_gens() == k.min_gens() + m.min_gens());
    CHECK(trace_ideal(s) == trace_ideal(k).sum(trace_ideal(m)));
    CHECK(s.is_ulrich());

    auto C = two_squares(101);
    CHECK_THROWS_WITH((void)PresentedModule::regular(B).direct_sum(PresentedModule::regular(C)),
                      "algebra mismatch");
}

TEST_CASE("free summand witness agrees with the trace test") {
    std::mt19937_64 rng(2024);
    for (const auto& entry : algebra_catalog()) {
        CAPTURE(entry.name);
        auto R = PresentedModule::regular(entry.algebra);
        auto k = PresentedModule::residue_field(entry.algebra);
        CHECK(free_summand_witness(R));
        CHECK(!free_summand_witness(k));
        CHECK(free_summand_witness(R.direct_sum(k)));
        CHECK(has_free_summand(R.direct_sum(k)));
        for (int t = 0; t < 10; ++t) {
            auto M = random_module(rng, entry.algebra);
            CAPTURE(t);
            CHECK(free_summand_witness(M) == has_free_summand(M));
        }
    }
}

TEST_CASE("restricted isomorphism test") {
    auto A = chain(5, 4);
    auto k = PresentedModule::residue_field(A);
    auto m3 = PresentedModule::ideal(A, {A->monomial_element({3})});
    CHECK(isomorphic_restricted(k, m3));  // both are R/m
    auto m = PresentedModule::ideal(A, {A->var_element(0)});
    CHECK(!isomorphic_restricted(k, m));
    CHECK(!isomorphic_restricted(m, PresentedModule::regular(A)));
    CHECK(isomorphic_restricted(m, m));
}
