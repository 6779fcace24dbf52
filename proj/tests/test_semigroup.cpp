#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "oracles.hpp"
#include "tracelab/semigroup.hpp"

using tracelab::i64;
using tracelab::NumericalSemigroup;

TEST_CASE("construction and basic invariants") {
    auto S = NumericalSemigroup::from_generators({3, 4, 5});
    CHECK(S.generators() == std::vector<i64>{3, 4, 5});
    CHECK(S.frobenius() == 2);
    CHECK(S.gaps() == std::vector<i64>{1, 2});
    CHECK(S.multiplicity() == 3);
    CHECK(S.embedding_dimension() == 3);
    CHECK(S.genus() == 2);
    CHECK(S.conductor() == 3);

    auto N = NumericalSemigroup::from_generators({1});
    CHECK(N.frobenius() == -1);
    CHECK(N.gaps().empty());
    CHECK(N.is_regular());

    auto chicken = NumericalSemigroup::from_generators({6, 9, 20});
    CHECK(chicken.frobenius() == 43);
    CHECK(chicken.frobenius() == oracle::brute_frobenius({6, 9, 20}, 120));
}

TEST_CASE("generator minimalization and input normalization") {
    // redundant and unsorted input collapses to the minimal generating set
    auto S = NumericalSemigroup::from_generators({5, 3, 4, 8, 9});
    CHECK(S.generators() == std::vector<i64>{3, 4, 5});
    auto T = NumericalSemigroup::from_generators({2, 4, 7});
    CHECK(T.generators() == std::vector<i64>{2, 7});
}

TEST_CASE("construction errors") {
    CHECK_THROWS_WITH_AS(NumericalSemigroup::from_generators({}), "empty input",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(NumericalSemigroup::from_generators({4, 6}), "not cofinite",
                         std::invalid_argument);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({-2, 3}), std::invalid_argument);
}

TEST_CASE("membership agrees with coin-combination search") {
    for (auto gens : {std::vector<i64>{3, 4, 5}, {2, 3}, {2, 5}, {3, 7}, {5, 6, 9}, {6, 9, 20}}) {
        auto S = NumericalSemigroup::from_generators(gens);
        const i64 bound = S.frobenius() + 2 * S.multiplicity();
        auto can = oracle::coin_table(gens, bound);
        for (i64 n = -3; n <= bound; ++n)
            CHECK(S.contains(n) == (n >= 0 && can[static_cast<size_t>(n)]));
    }
    CHECK(NumericalSemigroup::from_generators({3, 4, 5}).contains(2) == false);
    CHECK(NumericalSemigroup::from_generators({3, 4, 5}).contains(0) == true);
    CHECK(NumericalSemigroup::from_generators({2, 3}).contains(7) == true);
}

TEST_CASE("apery sets") {
    auto S = NumericalSemigroup::from_generators({2, 3});
    CHECK(S.apery_set(2) == std::vector<i64>{0, 3});
    CHECK(NumericalSemigroup::from_generators({1}).apery_set(1) == std::vector<i64>{0});
    auto T = NumericalSemigroup::from_generators({3, 4, 5});
    CHECK(T.apery_set(3) == std::vector<i64>{0, 4, 5});

    CHECK_THROWS_WITH_AS(T.apery_set(2), "invalid Apéry base", std::invalid_argument);
    CHECK_THROWS_WITH_AS(T.apery_set(0), "invalid Apéry base", std::invalid_argument);
    CHECK_THROWS_WITH_AS(T.apery_set(-3), "invalid Apéry base", std::invalid_argument);
}

TEST_CASE("apery set properties over an enumerated family") {
    for (const auto& S : tracelab::enumerate_semigroups(8)) {
        const i64 e = S.multiplicity();
        auto ap = S.apery_set(e);
        REQUIRE(static_cast<i64>(ap.size()) == e);
        for (i64 r = 0; r < e; ++r) {
            CHECK(ap[static_cast<size_t>(r)] % e == r);
            CHECK(S.contains(ap[static_cast<size_t>(r)]));
            // minimality in the residue class
            for (i64 x = r; x < ap[static_cast<size_t>(r)]; x += e) CHECK(!S.contains(x));
        }
    }
}

TEST_CASE("classification predicates") {
    auto full = NumericalSemigroup::from_generators({1});
    CHECK(full.is_regular());
    CHECK(full.has_minimal_multiplicity());
    CHECK(full.is_symmetric());
    CHECK(full.is_arf());

    CHECK(NumericalSemigroup::from_generators({3, 4, 5}).has_minimal_multiplicity());
    CHECK(!NumericalSemigroup::from_generators({4, 5, 6}).has_minimal_multiplicity());

    CHECK(NumericalSemigroup::from_generators({2, 3}).is_symmetric());
    CHECK(!NumericalSemigroup::from_generators({3, 4, 5}).is_symmetric());

    CHECK(NumericalSemigroup::from_generators({3, 4, 5}).is_arf());
    // every multiplicity-two semigroup is Arf: each shifted tail is again a
    // numerical semigroup
    CHECK(NumericalSemigroup::from_generators({2, 5}).is_arf());
    CHECK(oracle::brute_arf(NumericalSemigroup::from_generators({2, 5})));
    // the tail of <3,7> at 3 contains 4 but not 4+4
    CHECK(!NumericalSemigroup::from_generators({3, 7}).is_arf());
    CHECK(!oracle::brute_arf(NumericalSemigroup::from_generators({3, 7})));
}

TEST_CASE("arf agrees with the x+y-z characterization") {
    for (const auto& S : tracelab::enumerate_semigroups(10)) CHECK(S.is_arf() == oracle::brute_arf(S));
}

TEST_CASE("arf implies minimal multiplicity") {
    for (const auto& S : tracelab::enumerate_semigroups(12))
        if (S.is_arf()) CHECK(S.has_minimal_multiplicity());
}

TEST_CASE("enumeration of small Frobenius numbers") {
    auto zero = tracelab::enumerate_semigroups(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].is_regular());

    auto one = tracelab::enumerate_semigroups(1);
    REQUIRE(one.size() == 2);
    CHECK(one[0].gaps().empty());
    CHECK(one[1].gaps() == std::vector<i64>{1});
    CHECK(one[1].generators() == std::vector<i64>{2, 3});

    auto two = tracelab::enumerate_semigroups(2);
    REQUIRE(two.size() == 3);
    CHECK(two[0].gaps().empty());
    CHECK(two[1].gaps() == std::vector<i64>{1});
    CHECK(two[2].gaps() == std::vector<i64>{1, 2});
    CHECK(two[2].generators() == std::vector<i64>{3, 4, 5});

    CHECK_THROWS_WITH_AS(tracelab::enumerate_semigroups(31), "enumeration bound",
                         std::invalid_argument);
}

TEST_CASE("enumeration matches raw subset filtering") {
    for (i64 f : {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}) {
        auto fast = tracelab::enumerate_semigroups(f);
        auto slow = oracle::brute_gap_sets(f);
        REQUIRE(fast.size() == slow.size());
        for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].gaps() == slow[i]);
    }
}

TEST_CASE("round trip through gaps") {
    for (const auto& S : tracelab::enumerate_semigroups(9)) {
        auto T = NumericalSemigroup::from_gaps(S.gaps());
        CHECK(S == T);
        CHECK(S.generators() == T.generators());
    }
    CHECK_THROWS_AS(NumericalSemigroup::from_gaps({2}), std::invalid_argument);
}
