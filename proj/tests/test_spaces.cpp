#include "doctest.h"

#include "fano/spaces.hpp"

using namespace fano;

namespace {

// exposed data comparison across distinct ring instances
bool same_exposed_data(const Space& a, const Space& b) {
    if (a.dimension != b.dimension) return false;
    if (a.ring->fundamental_degree() != b.ring->fundamental_degree()) return false;
    if (a.tangent.rank != b.tangent.rank) return false;
    if (a.tangent.chern.size() != b.tangent.chern.size()) return false;
    for (std::size_t i = 0; i < a.tangent.chern.size(); ++i)
        if (a.tangent.chern[i].components() != b.tangent.chern[i].components()) return false;
    auto cones_equal = [](const std::vector<ConeGenerator>& x,
                          const std::vector<ConeGenerator>& y) {
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i].cls.components() != y[i].cls.components()) return false;
        return true;
    };
    return cones_equal(a.curve_cone, b.curve_cone) &&
           cones_equal(a.surface_cone, b.surface_cone);
}

} // namespace

TEST_CASE("projective space") {
    Space p2 = make_projective(2);
    ChernCharacter ch = chern_character(p2.tangent, 2);
    CHECK(ch.piece(1) == p2.ring->basis(1, 0) * Rational(3));
    CHECK(ch.piece(2) == p2.ring->basis(2, 0) * Rational(3, 2));
    CHECK(integrate(p2.ring->basis(2, 0)) == 1);

    Space p1 = make_projective(1);
    CHECK(p1.surface_cone.empty());
    CHECK(p1.curve_cone.size() == 1);

    Space p5 = make_projective(5);
    CHECK(chern_character(p5.tangent, 1).piece(1) == p5.ring->basis(1, 0) * Rational(6));

    CHECK_THROWS_AS(make_projective(0), PreconditionError);
}

TEST_CASE("weighted projective space") {
    Space plain = make_projective(3);
    Space ones = make_weighted_projective({1, 1, 1, 1});
    CHECK(same_exposed_data(plain, ones));

    Space w = make_weighted_projective({1, 1, 1, 2});
    CHECK(integrate(w.ring->basis(3, 0)) == Rational(1, 2));

    Space w2 = make_weighted_projective({1, 1, 2});
    // ch2(T) = (1 + 1 + 4) H^2 / 2 = 3 H^2
    CHECK(chern_character(w2.tangent, 2).piece(2) == w2.ring->basis(2, 0) * Rational(3));

    CHECK_THROWS_AS(make_weighted_projective({}), PreconditionError);
    CHECK_THROWS_AS(make_weighted_projective({1, 0, 1}), PreconditionError);
}

TEST_CASE("complete intersections") {
    Space cubic = make_complete_intersection(CompleteIntersectionSpec::plain(5, {3}));
    CHECK(cubic.dimension == 4);
    CHECK(chern_character(cubic.tangent, 1).piece(1) == cubic.ring->basis(1, 0) * Rational(3));
    CHECK(integrate(cubic.ring->basis(4, 0)) == 3);

    // empty degree list gives the ambient space
    Space ambient = make_complete_intersection(CompleteIntersectionSpec::plain(4, {}));
    CHECK(same_exposed_data(ambient, make_projective(4)));

    Space quadric = make_complete_intersection(CompleteIntersectionSpec::plain(3, {2}));
    CHECK(chern_character(quadric.tangent, 2).piece(2).is_zero());

    CHECK_THROWS_AS(make_complete_intersection(CompleteIntersectionSpec::plain(3, {2, 2, 2})),
                    PreconditionError);
    CHECK_THROWS_AS(make_complete_intersection(CompleteIntersectionSpec{{1, 1}, {0}}),
                    PreconditionError);
}

TEST_CASE("grassmannians") {
    Space g24 = make_grassmannian({2, 4});
    auto ring24 = std::static_pointer_cast<const SchubertRing>(g24.ring);
    GradedClass want = ring24->schubert_class({2}) + ring24->schubert_class({1, 1});
    CHECK(chern_character(g24.tangent, 2).piece(2) == want);

    Space g25 = make_grassmannian({2, 5});
    auto ring25 = std::static_pointer_cast<const SchubertRing>(g25.ring);
    CHECK(chern_character(g25.tangent, 1).piece(1) ==
          ring25->schubert_class({1}) * Rational(5));
    CHECK(g25.dimension == 6);
    CHECK(g25.surface_cone.size() == 2);

    // point class integrates to 1
    CHECK(integrate(ring25->schubert_class({3, 3})) == 1);

    // parameters normalize to n >= 2k
    Space g34 = make_grassmannian({3, 4});
    CHECK(g34.label == "G(1,4)");
    CHECK(g34.dimension == 3);

    // k = 1 has a single surface generator
    Space g15 = make_grassmannian({1, 5});
    CHECK(g15.surface_cone.size() == 1);

    CHECK_THROWS_AS(make_grassmannian({0, 4}), PreconditionError);
    CHECK_THROWS_AS(make_grassmannian({4, 4}), PreconditionError);
}

TEST_CASE("products") {
    Space p1p1 = make_product(make_projective(1), make_projective(1));
    CHECK(p1p1.dimension == 2);
    CHECK(p1p1.curve_cone.size() == 2);
    CHECK(p1p1.surface_cone.size() == 1); // only the mixed curve x curve class
    CHECK(chern_character(p1p1.tangent, 2).piece(2).is_zero());

    // c1 splits as a sum of pullbacks
    Space a = make_projective(2);
    Space prod = make_product(a, make_projective(1));
    auto ring = std::static_pointer_cast<const ProductRing>(prod.ring);
    GradedClass c1 = chern_character(prod.tangent, 1).piece(1);
    GradedClass want = ring->inject_left(chern_character(a.tangent, 1).piece(1)) +
                       ring->inject_right(ring->right()->basis(1, 0) * Rational(2));
    CHECK(c1 == want);

    CHECK(prod.tangent.rank == prod.dimension);
    CHECK(integrate(ring_mul(point_class(prod), prod.ring->one())) == 1);
}

TEST_CASE("split p1 bundles") {
    Space base = make_complete_intersection(CompleteIntersectionSpec::plain(5, {3}));
    GradedClass c1l = base.picard_generators[0] * Rational(2);
    Space y = make_p1_bundle(base, c1l);
    CHECK(y.dimension == 5);
    CHECK(y.tangent.rank == 5);

    auto ring = std::static_pointer_cast<const BundleRing>(y.ring);
    // ch2(T_Y) is the pullback of ch2(T_X) + c1(L)^2/2
    GradedClass ch2 = chern_character(y.tangent, 2).piece(2);
    GradedClass want = ring->pullback(chern_character(base.tangent, 2).piece(2) +
                                      ring_mul(c1l, c1l) * Rational(1, 2));
    CHECK(ch2 == want);

    // the bundle over P^1 with trivial L is P^1 x P^1: same pairing data
    Space p1 = make_projective(1);
    Space trivial = make_p1_bundle(p1, p1.ring->zero());
    CHECK(trivial.dimension == 2);
    GradedClass tch2 = chern_character(trivial.tangent, 2).piece(2);
    CHECK(tch2.is_zero());

    // L must be nef
    CHECK_THROWS_AS(make_p1_bundle(base, base.picard_generators[0] * Rational(-1)),
                    PreconditionError);
}

TEST_CASE("tangent rank equals dimension across the catalog") {
    std::vector<Space> spaces;
    spaces.push_back(make_projective(4));
    spaces.push_back(make_weighted_projective({1, 1, 2, 3}));
    spaces.push_back(make_complete_intersection(CompleteIntersectionSpec::plain(6, {2, 2})));
    spaces.push_back(make_grassmannian({2, 6}));
    spaces.push_back(make_product(make_projective(2), make_grassmannian({2, 4})));
    spaces.push_back(make_p1_bundle(make_projective(3),
                                    make_projective(3).picard_generators[0]));
    for (const auto& X : spaces) CHECK(X.tangent.rank == X.dimension);
}
