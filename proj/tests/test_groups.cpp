#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ffcond/abelian_group.hpp"
#include "ffcond/delsarte.hpp"
#include "ffcond/numbers.hpp"

using namespace ffcond;

TEST_CASE("number helpers") {
    CHECK(floor_div(BigInt(7), BigInt(2)) == 3);
    CHECK(floor_div(BigInt(-7), BigInt(2)) == -4);
    CHECK(floor_rat(make_rat(BigInt(-1), BigInt(2))) == -1);
    CHECK(ceil_rat(make_rat(BigInt(5), BigInt(2))) == 3);
    CHECK(frac_part(make_rat(BigInt(-3), BigInt(2))) == make_rat(BigInt(1), BigInt(2)));
    CHECK(is_integer(BigRat(4)));
    CHECK(!is_integer(make_rat(BigInt(1), BigInt(3))));
    CHECK(valuation(BigInt(48), 2) == 4);
    CHECK(valuation_u64(162, 3) == 4);
    CHECK(euler_phi_u64(12) == 4);
    CHECK(euler_phi_u64(1) == 1);
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(97));
    CHECK(!is_prime_u64(1));
    CHECK(!is_prime_u64(91));
    CHECK(pow_si(BigInt(2), BigInt(-3)) == make_rat(BigInt(1), BigInt(8)));
    CHECK(pow_ui(BigInt(3), 4) == 81);
    auto fac = factorize_u64(360);
    REQUIRE(fac.size() == 3);
    CHECK(fac[0] == std::pair<std::uint64_t, unsigned>{2, 3});
    CHECK(fac[2] == std::pair<std::uint64_t, unsigned>{5, 1});
}

TEST_CASE("make_rat canonicalizes") {
    CHECK(make_rat(BigInt(2), BigInt(2)) == BigRat(1));
    CHECK(make_rat(BigInt(0), BigInt(4)) == BigRat(0));
    CHECK(make_rat(BigInt(4), BigInt(6)) == make_rat(BigInt(2), BigInt(3)));
    CHECK(rat_string(make_rat(BigInt(4), BigInt(6))) == "2/3");
    CHECK(rat_string(make_rat(BigInt(-1), BigInt(2))) == "-1/2");
    CHECK(rat_string(BigRat(7)) == "7");
}

TEST_CASE("group spec parsing") {
    CHECK(parse_group_spec("C8xC4xC2") == AbelianGroup({8, 4, 2}));
    CHECK(parse_group_spec("8,4,2") == AbelianGroup({8, 4, 2}));
    CHECK(parse_group_spec("c2Xc8") == AbelianGroup({8, 2}));
    CHECK(parse_group_spec("C1").is_trivial());
    CHECK(parse_group_spec("1").is_trivial());
    CHECK(parse_group_spec("trivial").is_trivial());
    CHECK_THROWS_AS(parse_group_spec(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("C0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("Cx"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("4,,2"), std::invalid_argument);
}

TEST_CASE("invariant factor canonical form") {
    // C6 x C4 = C12 x C2: equal groups compare equal whatever the spelling
    CHECK(AbelianGroup({6, 4}) == AbelianGroup({12, 2}));
    CHECK(AbelianGroup({6, 4}).to_string() == "C12xC2");
    CHECK(AbelianGroup({2, 4, 8}).invariant_factors() ==
          std::vector<std::uint64_t>{2, 4, 8});
    CHECK(AbelianGroup({3, 5}).to_string() == "C15");
    CHECK(AbelianGroup().to_string() == "C1");
    CHECK(AbelianGroup({2}).direct_product(AbelianGroup({3})) ==
          AbelianGroup({6}));
    CHECK(AbelianGroup({2}).direct_product(AbelianGroup({2})) ==
          AbelianGroup({2, 2}));
    CHECK_THROWS_AS(AbelianGroup({0}), std::invalid_argument);
    CHECK_THROWS_AS(AbelianGroup({1}), std::invalid_argument);
    CHECK(AbelianGroup({12, 2}).order() == 24);
    CHECK(AbelianGroup({12, 2}).exponent() == 12);
}

TEST_CASE("primary decomposition and ranks") {
    AbelianGroup g({12, 2});
    CHECK(g.primes() == std::vector<std::uint64_t>{2, 3});
    CHECK(g.primary_part(2) == PrimaryType(2, {2, 1}));
    CHECK(g.primary_part(3) == PrimaryType(3, {1}));
    CHECK(g.primary_part(5).is_trivial());
    CHECK(g.rank(2, 1) == 2);
    CHECK(g.rank(2, 2) == 1);
    CHECK(g.rank(2, 3) == 0);
    CHECK(g.rank(3, 1) == 1);

    PrimaryType t(2, {3, 1, 1});
    CHECK(t.order() == 32);
    CHECK(t.exponent_index() == 3);
    CHECK(t.rank(1) == 3);
    CHECK(t.rank(2) == 1);
    CHECK(t.rank(3) == 1);
    CHECK(t.rank(4) == 0);
    CHECK(t.rank_tilde(1) == 2);
    CHECK(t.rank_tilde(2) == 0);
    CHECK(t.rank_tilde(3) == 1);
    CHECK(t.to_group() == AbelianGroup({8, 2, 2}));
    CHECK(t.to_group().primary_part(2) == t);

    RankVector rv{2, {3, 1}};
    CHECK(rv.at(1) == 3);
    CHECK(rv.at(2) == 1);
    CHECK(rv.at(5) == 0);
}

TEST_CASE("injection and subgroup counts, small closed values") {
    // injections C2 -> C2^2: the three involutions
    CHECK(inj_count(PrimaryType(2, {1}), RankVector{2, {2}}) == 3);
    // injections C2^2 -> C2^2 = |Aut|
    CHECK(inj_count(PrimaryType(2, {1, 1}), RankVector{2, {2}}) == 6);
    CHECK(inj_count(PrimaryType(2, {1, 1}), RankVector{2, {3}}) == 42);
    CHECK(inj_count(PrimaryType(2, {2}), RankVector{2, {2}}) == 0);
    CHECK(inj_count(PrimaryType(2, {2}), RankVector{2, {2, 1}}) == 4);
    // trivial target embeds once
    CHECK(inj_count(PrimaryType(2), RankVector{2, {4}}) == 1);

    CHECK(aut_count(PrimaryType(2, {1})) == 1);
    CHECK(aut_count(PrimaryType(2, {2})) == 2);
    CHECK(aut_count(PrimaryType(2, {1, 1})) == 6);
    CHECK(aut_count(PrimaryType(2, {2, 1})) == 8);
    CHECK(aut_count(PrimaryType(2, {1, 1, 1})) == 168);
    CHECK(aut_count(PrimaryType(3, {1, 1})) == 48);
    CHECK(aut_count(AbelianGroup({12, 2})) == 8 * 2); // Aut(C4xC2) x Aut(C3)

    CHECK(subgroup_count(PrimaryType(2, {1}), RankVector{2, {2}}) == 3);
    CHECK(subgroup_count(PrimaryType(2, {1}), RankVector{2, {3}}) == 7);
    CHECK(subgroup_count(PrimaryType(2, {1, 1}), RankVector{2, {3}}) == 7);
    CHECK(subgroup_count(PrimaryType(2, {2}), RankVector{2, {2, 1}}) == 2);
    CHECK(subgroup_count(PrimaryType(2), RankVector{2, {5}}) == 1);
}

TEST_CASE("inj_count factorization agrees with the direct evaluation") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        std::uint64_t ell = (trial % 2) ? 2 : 3;
        std::vector<unsigned> lam;
        unsigned parts = 1 + rng() % 3;
        for (unsigned i = 0; i < parts; ++i) lam.push_back(1 + rng() % 3);
        std::sort(lam.rbegin(), lam.rend());
        PrimaryType t(ell, lam);
        std::vector<unsigned> ranks;
        unsigned len = 1 + rng() % 4;
        unsigned cur = 1 + rng() % 5;
        for (unsigned i = 0; i < len; ++i) {
            ranks.push_back(cur);
            if (cur > 1) cur -= rng() % cur;
        }
        RankVector a{ell, ranks};
        CHECK(inj_count(t, a) == inj_count_factored(t, a));
    }
}

TEST_CASE("subgroup_count_general multiplies over primes") {
    // subgroups of C12 x C2 isomorphic to C6: 2-part C2 inside C4 x C2 (3),
    // 3-part C3 inside C3 (1)
    AbelianGroup g({6});
    std::vector<RankVector> ambient;
    ambient.push_back(RankVector{2, {2, 1}});
    ambient.push_back(RankVector{3, {1}});
    CHECK(subgroup_count_general(g, ambient) == 3);
    CHECK(subgroup_count_general(AbelianGroup(), {}) == 1);
}
