#include "doctest.h"

#include <random>

#include "fano/bundle.hpp"
#include "test_support.hpp"

using namespace fano;
using fano::testing::random_bundle;

TEST_CASE("character of line and trivial bundles") {
    auto ring = make_hyperplane_ring(3, Rational(1));
    GradedClass H = ring->hyperplane();

    ChernCharacter line = chern_character(line_bundle(H), 3);
    CHECK(line.piece(0) == ring->one());
    CHECK(line.piece(1) == H);
    CHECK(line.piece(2) == ring->hyperplane_power(2) * Rational(1, 2));
    CHECK(line.piece(3) == ring->hyperplane_power(3) * Rational(1, 6));

    ChernCharacter triv = chern_character(trivial_bundle(ring, 5), 3);
    CHECK(triv.piece(0) == ring->constant(Rational(5)));
    CHECK(triv.piece(1).is_zero());
    CHECK(triv.piece(2).is_zero());
}

TEST_CASE("piece 2 equals (c1^2 - 2 c2)/2") {
    auto ring = make_hyperplane_ring(3, Rational(1));
    FormalBundle e =
        formal_bundle(ring, 2, {ring->zero(), ring->hyperplane_power(2)});
    CHECK(chern_character(e).piece(2) == -ring->hyperplane_power(2));

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        FormalBundle f = random_bundle(ring, rng);
        GradedClass c1 = f.chern_class(1);
        GradedClass c2 = f.chern_class(2);
        GradedClass want = (ring_mul(c1, c1) - c2 * Rational(2)) * Rational(1, 2);
        CHECK(chern_character(f).piece(2) == want);
    }
}

TEST_CASE("character degree is bounded by the ring dimension") {
    auto ring = make_hyperplane_ring(2, Rational(1));
    CHECK_THROWS_AS(chern_character(trivial_bundle(ring, 1), 3), PreconditionError);
}

TEST_CASE("whitney sums") {
    auto ring = make_hyperplane_ring(5, Rational(1));
    GradedClass H = ring->hyperplane();

    FormalBundle e = formal_bundle(ring, 1, {H * Rational(2)});
    FormalBundle sum = whitney_sum(e, trivial_bundle(ring, 3));
    CHECK(sum.rank == 4);
    CHECK(sum.chern_class(1) == H * Rational(2));
    CHECK(sum.chern_class(2).is_zero());

    FormalBundle a = line_bundle(H * Rational(2));
    FormalBundle b = line_bundle(H * Rational(3));
    FormalBundle ab = whitney_sum(a, b);
    CHECK(ab.chern_class(1) == H * Rational(5));
    CHECK(ab.chern_class(2) == ring->hyperplane_power(2) * Rational(6));

    // O(1)^(n+1) on P^n: total Chern class (1+H)^(n+1)
    int n = 5;
    FormalBundle euler = trivial_bundle(ring, 0);
    for (int i = 0; i <= n; ++i) euler = whitney_sum(euler, line_bundle(H));
    CHECK(euler.chern_class(1) == H * Rational(n + 1));
    for (int j = 1; j <= n; ++j)
        CHECK(euler.chern_class(j) == ring->hyperplane_power(j) * Rational(binomial(n + 1, j)));
}

TEST_CASE("character is additive over whitney sums") {
    std::mt19937_64 rng(17);
    auto rings = {make_hyperplane_ring(4, Rational(1)),
                  make_hyperplane_ring(4, Rational(3))};
    for (const auto& ring : rings) {
        for (int trial = 0; trial < 200; ++trial) {
            FormalBundle e = random_bundle(ring, rng);
            FormalBundle f = random_bundle(ring, rng);
            CHECK(chern_character(whitney_sum(e, f), 3) ==
                  chern_character(e, 3) + chern_character(f, 3));
        }
    }
}

TEST_CASE("bundle quotients") {
    auto ring = make_hyperplane_ring(5, Rational(1));
    GradedClass H = ring->hyperplane();

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        FormalBundle s = random_bundle(ring, rng);
        FormalBundle q = random_bundle(ring, rng);
        FormalBundle back = bundle_quotient(whitney_sum(s, q), s);
        CHECK(back.rank == q.rank);
        CHECK(total_chern(back) == total_chern(q));
    }

    // adjunction for a degree-d hypersurface in P^n: c1 = (n+1-d) H
    int n = 5, d = 3;
    GradedClass total = ring->one();
    for (int i = 0; i <= n; ++i) total = ring_mul(total, ring->one() + H);
    FormalBundle ambient = bundle_from_total_chern(ring, n + 1, total);
    FormalBundle tangent_p = bundle_quotient(ambient, trivial_bundle(ring, 1));
    FormalBundle tangent_x = bundle_quotient(tangent_p, line_bundle(H * Rational(d)));
    CHECK(tangent_x.chern_class(1) == H * Rational(n + 1 - d));

    // quotient by a trivial bundle leaves the classes unchanged
    FormalBundle e = formal_bundle(ring, 3, {H, ring->hyperplane_power(2)});
    FormalBundle same = bundle_quotient(whitney_sum(e, trivial_bundle(ring, 2)),
                                        trivial_bundle(ring, 2));
    CHECK(total_chern(same) == total_chern(e));

    CHECK_THROWS_AS(bundle_quotient(trivial_bundle(ring, 1), trivial_bundle(ring, 2)),
                    PreconditionError);
    // quotient would need nonzero classes above its rank: inconsistent data
    FormalBundle bad = formal_bundle(ring, 2, {H, ring->hyperplane_power(2)});
    CHECK_THROWS_AS(bundle_quotient(bad, trivial_bundle(ring, 1)), InconsistentDataError);
}

TEST_CASE("line bundle twists") {
    auto ring = make_hyperplane_ring(4, Rational(1));
    GradedClass H = ring->hyperplane();
    GradedClass a = H * Rational(3);
    GradedClass b = H * Rational(-1);

    CHECK(tensor_line(line_bundle(a), b).chern_class(1) == a + b);

    FormalBundle e = formal_bundle(ring, 2, {a, ring->hyperplane_power(2) * Rational(2)});
    CHECK(total_chern(tensor_line(e, ring->zero())) == total_chern(e));

    FormalBundle twisted = tensor_line(e, b);
    CHECK(twisted.chern_class(1) == a + b * Rational(2));
    CHECK(twisted.chern_class(2) ==
          e.chern_class(2) + ring_mul(a, b) + ring_mul(b, b));

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        FormalBundle f = random_bundle(ring, rng);
        GradedClass t = H * Rational(trial % 5 - 2);
        FormalBundle back = tensor_line(tensor_line(f, t), -t);
        CHECK(total_chern(back) == total_chern(f));
    }

    CHECK_THROWS_AS(tensor_line(e, ring->hyperplane_power(2)), PreconditionError);
}

TEST_CASE("duals negate odd character pieces") {
    auto ring = make_hyperplane_ring(4, Rational(1));
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        FormalBundle e = random_bundle(ring, rng);
        ChernCharacter ce = chern_character(e, 3);
        ChernCharacter cd = chern_character(dual(e), 3);
        for (int k = 0; k <= 3; ++k)
            CHECK(cd.piece(k) == (k % 2 == 0 ? ce.piece(k) : -ce.piece(k)));
    }
}

TEST_CASE("character round-trips through chern classes") {
    std::mt19937_64 rng(61);
    auto rings = {make_hyperplane_ring(4, Rational(1)),
                  make_hyperplane_ring(6, Rational(1, 2))};
    for (const auto& ring : rings) {
        for (int trial = 0; trial < 100; ++trial) {
            FormalBundle e = random_bundle(ring, rng);
            FormalBundle back = bundle_from_character(chern_character(e, ring->dimension()));
            CHECK(back.rank == e.rank);
            CHECK(total_chern(back) == total_chern(e));
        }
    }
}
