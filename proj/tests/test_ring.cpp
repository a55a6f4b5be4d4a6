#include "doctest.h"

#include <random>

#include "fano/ring.hpp"
#include "test_support.hpp"

using namespace fano;
using fano::testing::lr_coefficient;
using fano::testing::random_class;

namespace {

// Catalog ring shapes: projective / weighted / complete-intersection lines,
// Grassmannians, a product, a split bundle.
std::vector<std::shared_ptr<const Ring>> catalog_rings() {
    std::vector<std::shared_ptr<const Ring>> rings;
    rings.push_back(make_hyperplane_ring(3, Rational(1)));           // P^3
    rings.push_back(make_hyperplane_ring(5, Rational(1)));           // P^5
    rings.push_back(make_hyperplane_ring(3, Rational(1, 2)));        // P(1,1,1,2)
    rings.push_back(make_hyperplane_ring(4, Rational(3)));           // cubic fourfold
    rings.push_back(make_schubert_ring(2, 4));
    rings.push_back(make_schubert_ring(2, 5));
    rings.push_back(make_schubert_ring(3, 6));
    auto p2 = make_hyperplane_ring(2, Rational(1));
    rings.push_back(make_product_ring(p2, make_schubert_ring(2, 4)));
    auto base = make_hyperplane_ring(3, Rational(1));
    rings.push_back(make_bundle_ring(base, base->hyperplane() * Rational(2)));
    return rings;
}

} // namespace

TEST_CASE("additive structure") {
    auto ring = make_hyperplane_ring(4, Rational(1));
    GradedClass H = ring->hyperplane();
    CHECK(H + H == H * Rational(2));
    CHECK(ring_add(H, ring->zero()) == H);
    GradedClass H2 = ring->hyperplane_power(2);
    CHECK((H2 + (-H2)).is_zero());
}

TEST_CASE("hyperplane products truncate at the dimension") {
    auto ring = make_hyperplane_ring(4, Rational(1));
    GradedClass H = ring->hyperplane();
    CHECK(ring_mul(ring->hyperplane_power(2), ring->hyperplane_power(2)) ==
          ring->hyperplane_power(4));
    CHECK(ring_mul(ring->hyperplane_power(3), ring->hyperplane_power(2)).is_zero());
    CHECK(ring_mul(H, ring->one()) == H);
}

TEST_CASE("ring mismatch is rejected") {
    auto a = make_hyperplane_ring(3, Rational(1));
    auto b = make_hyperplane_ring(3, Rational(1));
    CHECK_THROWS_AS(ring_add(a->hyperplane(), b->hyperplane()), RingMismatchError);
    CHECK_THROWS_AS(ring_mul(a->hyperplane(), b->hyperplane()), RingMismatchError);
}

TEST_CASE("truncated exponential") {
    auto ring = make_hyperplane_ring(2, Rational(1)); // Q[H]/(H^3)
    GradedClass H = ring->hyperplane();

    CHECK(ring_exp(ring->zero()) == ring->one());

    GradedClass e = ring_exp(H);
    CHECK(e.coeff(0, 0) == 1);
    CHECK(e.coeff(1, 0) == 1);
    CHECK(e.coeff(2, 0) == Rational(1, 2));

    CHECK(ring_exp(H * Rational(2)).coeff(2, 0) == 2);

    CHECK_THROWS_AS(ring_exp(ring->one()), PreconditionError);
}

TEST_CASE("exp turns sums into products") {
    std::mt19937_64 rng(7);
    for (const auto& ring : catalog_rings()) {
        for (int trial = 0; trial < 25; ++trial) {
            GradedClass a = random_class(ring, rng);
            GradedClass b = random_class(ring, rng);
            a -= a.component(0); // nilpotent parts only
            b -= b.component(0);
            CHECK(ring_exp(a + b) == ring_mul(ring_exp(a), ring_exp(b)));
        }
    }
}

TEST_CASE("integration") {
    auto pn = make_hyperplane_ring(4, Rational(1));
    CHECK(integrate(pn->hyperplane_power(4)) == 1);
    CHECK(integrate(pn->hyperplane_power(3)) == 0);
    CHECK(integrate(pn->zero()) == 0);

    auto weighted = make_hyperplane_ring(3, Rational(1, 2)); // P(1,1,1,2)
    CHECK(integrate(weighted->hyperplane_power(3)) == Rational(1, 2));

    auto g24 = make_schubert_ring(2, 4);
    GradedClass s2 = g24->schubert_class({2});
    GradedClass s11 = g24->schubert_class({1, 1});
    CHECK(integrate(ring_mul(s2, s2)) == 1);
    CHECK(integrate(ring_mul(s11, s11)) == 1);
    CHECK(integrate(ring_mul(s2, s11)) == 0);
}

TEST_CASE("schubert products match the pieri expansion") {
    auto g24 = make_schubert_ring(2, 4);
    GradedClass s1 = g24->schubert_class({1});
    GradedClass want = g24->schubert_class({2}) + g24->schubert_class({1, 1});
    CHECK(ring_mul(s1, s1) == want);

    // full box kills further multiplication
    CHECK(ring_mul(g24->schubert_class({2, 2}), s1).is_zero());
}

TEST_CASE("schubert products match the littlewood-richardson rule") {
    std::mt19937_64 rng(11);
    for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
        auto ring = make_schubert_ring(k, n);
        int dim = ring->dimension();
        std::uniform_int_distribution<int> deg(0, dim);
        for (int trial = 0; trial < 40; ++trial) {
            int d1 = deg(rng);
            int d2 = deg(rng);
            if (d1 + d2 > dim || ring->basis_size(d1) == 0 || ring->basis_size(d2) == 0)
                continue;
            std::uniform_int_distribution<int> i1(0, ring->basis_size(d1) - 1);
            std::uniform_int_distribution<int> i2(0, ring->basis_size(d2) - 1);
            const auto& lambda = ring->basis_partitions(d1)[i1(rng)];
            const auto& mu = ring->basis_partitions(d2)[i2(rng)];
            GradedClass prod =
                ring_mul(ring->schubert_class(lambda), ring->schubert_class(mu));
            for (int j = 0; j < ring->basis_size(d1 + d2); ++j) {
                const auto& nu = ring->basis_partitions(d1 + d2)[j];
                CHECK(prod.coeff(d1 + d2, j) == lr_coefficient(nu, lambda, mu));
            }
        }
    }
}

TEST_CASE("schubert duality against the box complement") {
    for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}, {3, 7}}) {
        auto ring = make_schubert_ring(k, n);
        int dim = ring->dimension();
        for (int d = 0; d <= dim; ++d) {
            for (const auto& lambda : ring->basis_partitions(d)) {
                Partition p(lambda, k, n - k);
                for (const auto& mu : ring->basis_partitions(dim - d)) {
                    Rational v = integrate(
                        ring_mul(ring->schubert_class(lambda), ring->schubert_class(mu)));
                    CHECK(v == (mu == p.complement().parts ? 1 : 0));
                }
            }
        }
    }
}

TEST_CASE("grothendieck relation and pushforward in bundle rings") {
    auto base = make_hyperplane_ring(4, Rational(3)); // cubic fourfold shape
    GradedClass c1l = base->hyperplane() * Rational(2);
    auto ring = make_bundle_ring(base, c1l);

    GradedClass xi = ring->xi();
    CHECK(ring_mul(xi, xi) == ring_mul(ring->pullback(c1l), xi));

    // integration is pushforward then base integration
    for (int d = 0; d <= 4; ++d) {
        GradedClass a = base->hyperplane_power(d);
        Rational lhs = integrate(ring_mul(ring->pullback(a), xi));
        CHECK(lhs == (d == 4 ? integrate(a) : Rational(0)));
    }

    auto [pure, fiber] = ring->parts(ring->pullback(base->hyperplane()) + xi * Rational(5));
    CHECK(pure == base->hyperplane());
    CHECK(fiber == base->constant(Rational(5)));
}

TEST_CASE("kunneth integration is multiplicative") {
    auto a = make_hyperplane_ring(2, Rational(1));
    auto b = make_schubert_ring(2, 4);
    auto prod = make_product_ring(a, b);
    GradedClass top_a = a->hyperplane_power(2);
    GradedClass top_b = b->schubert_class({2, 2});
    CHECK(integrate(prod->kunneth(top_a, top_b)) == integrate(top_a) * integrate(top_b));
    CHECK(integrate(prod->kunneth(a->hyperplane(), top_b)) == 0);
    CHECK(ring_mul(prod->inject_left(top_a), prod->inject_right(top_b)) ==
          prod->kunneth(top_a, top_b));
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(2024);
    for (const auto& ring : catalog_rings()) {
        for (int trial = 0; trial < 1000; ++trial) {
            GradedClass a = random_class(ring, rng);
            GradedClass b = random_class(ring, rng);
            GradedClass c = random_class(ring, rng);
            CHECK(ring_mul(ring_mul(a, b), c) == ring_mul(a, ring_mul(b, c)));
            CHECK(ring_mul(a, b) == ring_mul(b, a));
            CHECK(ring_mul(a, b + c) == ring_mul(a, b) + ring_mul(a, c));
        }
    }
}

TEST_CASE("products above the dimension vanish") {
    std::mt19937_64 rng(5);
    for (const auto& ring : catalog_rings()) {
        int dim = ring->dimension();
        for (int trial = 0; trial < 50; ++trial) {
            std::uniform_int_distribution<int> deg(1, dim);
            int da = deg(rng);
            int db = dim + 1 - da;
            if (db < 0) continue;
            GradedClass a = fano::testing::random_homogeneous(ring, rng, da);
            GradedClass b = fano::testing::random_homogeneous(ring, rng, db);
            CHECK(ring_mul(a, b).is_zero());
        }
    }
}
