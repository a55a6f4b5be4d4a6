#include "fano/spaces.hpp"

#include <algorithm>
#include <numeric>

#include "fano/errors.hpp"

namespace fano {

namespace {

std::string int_list(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

bool all_ones(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int w) { return w == 1; });
}

} // namespace

CompleteIntersectionSpec CompleteIntersectionSpec::plain(int n, std::vector<int> degrees) {
    return CompleteIntersectionSpec{std::vector<int>(n + 1, 1), std::move(degrees)};
}

GrassmannianSpec GrassmannianSpec::normalized(int k, int n) {
    if (k < 1 || n < 2 || k > n - 1)
        throw PreconditionError("Grassmannian parameters out of range");
    if (n < 2 * k) k = n - k;
    return GrassmannianSpec{k, n};
}

GradedClass point_class(const Space& X) {
    return X.ring->basis(X.dimension, 0) * (Rational(1) / X.ring->fundamental_degree());
}

Space make_projective(int n) {
    if (n < 1) throw PreconditionError("projective space needs dimension >= 1");
    Space X = make_weighted_projective(std::vector<int>(n + 1, 1));
    X.label = "P^" + std::to_string(n);
    return X;
}

Space make_weighted_projective(const std::vector<int>& weights) {
    return make_complete_intersection(CompleteIntersectionSpec{weights, {}});
}

Space make_complete_intersection(const CompleteIntersectionSpec& spec) {
    if (spec.weights.empty()) throw PreconditionError("empty weight list");
    for (int w : spec.weights)
        if (w < 1) throw PreconditionError("weights must be positive");
    for (int d : spec.degrees)
        if (d < 1) throw PreconditionError("degrees must be positive");

    int n = spec.ambient_dim();
    int m = spec.dimension();
    if (m < 1 && !spec.degrees.empty())
        throw PreconditionError("complete intersection has nonpositive dimension");
    if (m < 0) throw PreconditionError("nonpositive dimension");

    Rational fundamental(1);
    for (int d : spec.degrees) fundamental *= d;
    for (int w : spec.weights) fundamental /= w;
    auto ring = make_hyperplane_ring(m, fundamental);
    GradedClass H = ring->hyperplane();

    // Euler sequence with weights: T_P = (+O(w_i)) / O, then adjunction
    // removes the normal directions (+O(d_j)).
    FormalBundle euler_sum = trivial_bundle(ring, 0);
    {
        GradedClass total = ring->one();
        for (int w : spec.weights) total = ring_mul(total, ring->one() + H * Rational(w));
        euler_sum = bundle_from_total_chern(ring, n + 1, total);
    }
    FormalBundle ambient_tangent = bundle_quotient(euler_sum, trivial_bundle(ring, 1));
    FormalBundle normal = trivial_bundle(ring, 0);
    {
        GradedClass total = ring->one();
        for (int d : spec.degrees) total = ring_mul(total, ring->one() + H * Rational(d));
        normal = bundle_from_total_chern(ring, static_cast<int>(spec.degrees.size()), total);
    }
    FormalBundle tangent = bundle_quotient(ambient_tangent, normal);

    Space X;
    if (spec.degrees.empty())
        X.label = all_ones(spec.weights) ? "P^" + std::to_string(n)
                                         : "P(" + int_list(spec.weights) + ")";
    else
        X.label = "X(" + int_list(spec.degrees) + ") in " +
                  (all_ones(spec.weights) ? "P^" + std::to_string(n)
                                          : "P(" + int_list(spec.weights) + ")");
    X.dimension = m;
    X.ring = ring;
    X.tangent = std::move(tangent);
    if (m >= 1)
        X.curve_cone.push_back({ring->hyperplane_power(m - 1),
                                m == 1 ? "1" : "H^" + std::to_string(m - 1)});
    if (m >= 2)
        X.surface_cone.push_back({ring->hyperplane_power(m - 2),
                                  m == 2 ? "1" : "H^" + std::to_string(m - 2)});
    X.picard_generators.push_back(H);
    return X;
}

Space make_grassmannian(const GrassmannianSpec& spec) {
    GrassmannianSpec g = GrassmannianSpec::normalized(spec.k, spec.n);
    int k = g.k, n = g.n, cols = n - k;
    auto ring = make_schubert_ring(k, n);
    int dim = ring->dimension();

    // T = S^dual (x) Q. c_i(S^dual) = sigma_{1^i}, c_j(Q) = sigma_j; the
    // character of the tensor product is the product of the characters.
    std::vector<GradedClass> cs, cq;
    for (int i = 1; i <= std::min(k, dim); ++i)
        cs.push_back(ring->schubert_class(std::vector<int>(i, 1)));
    for (int j = 1; j <= std::min(cols, dim); ++j)
        cq.push_back(ring->schubert_class({j}));
    FormalBundle sub_dual = formal_bundle(ring, k, std::move(cs));
    FormalBundle quot = formal_bundle(ring, cols, std::move(cq));

    ChernCharacter chs = chern_character(sub_dual, dim);
    ChernCharacter chq = chern_character(quot, dim);
    ChernCharacter cht;
    for (int d = 0; d <= dim; ++d) {
        GradedClass piece = ring->zero();
        for (int i = 0; i <= d; ++i) piece += ring_mul(chs.piece(i), chq.piece(d - i));
        cht.pieces.push_back(piece);
    }
    FormalBundle tangent = bundle_from_character(cht);

    Space X;
    X.label = "G(" + std::to_string(k) + "," + std::to_string(n) + ")";
    X.dimension = dim;
    X.ring = ring;
    X.tangent = std::move(tangent);

    auto dual_of = [&](std::vector<int> parts) {
        Partition p(std::move(parts), k, cols);
        Partition c = p.complement();
        return ConeGenerator{ring->schubert_class(c.parts), "s(" + c.to_string() + ")"};
    };
    if (dim >= 1) X.curve_cone.push_back(dual_of({1}));
    if (dim >= 2) {
        if (cols >= 2) X.surface_cone.push_back(dual_of({2}));
        if (k >= 2) X.surface_cone.push_back(dual_of({1, 1}));
    }
    X.picard_generators.push_back(ring->schubert_class({1}));
    return X;
}

Space make_product(const Space& A, const Space& B) {
    auto ring = make_product_ring(A.ring, B.ring);

    auto lift_bundle = [&](const FormalBundle& E, bool left) {
        std::vector<GradedClass> chern;
        for (const auto& c : E.chern)
            chern.push_back(left ? ring->inject_left(c) : ring->inject_right(c));
        return formal_bundle(ring, E.rank, std::move(chern));
    };
    FormalBundle tangent =
        whitney_sum(lift_bundle(A.tangent, true), lift_bundle(B.tangent, false));

    GradedClass ptA = point_class(A);
    GradedClass ptB = point_class(B);

    Space X;
    X.label = A.label + " x " + B.label;
    X.dimension = A.dimension + B.dimension;
    X.ring = ring;
    X.tangent = std::move(tangent);

    for (const auto& g : A.curve_cone)
        X.curve_cone.push_back({ring->kunneth(g.cls, ptB), g.label + " x pt"});
    for (const auto& g : B.curve_cone)
        X.curve_cone.push_back({ring->kunneth(ptA, g.cls), "pt x " + g.label});

    for (const auto& g : A.surface_cone)
        X.surface_cone.push_back({ring->kunneth(g.cls, ptB), g.label + " x pt"});
    for (const auto& g : B.surface_cone)
        X.surface_cone.push_back({ring->kunneth(ptA, g.cls), "pt x " + g.label});
    for (const auto& a : A.curve_cone)
        for (const auto& b : B.curve_cone)
            X.surface_cone.push_back({ring->kunneth(a.cls, b.cls), a.label + " x " + b.label});

    for (const auto& g : A.picard_generators) X.picard_generators.push_back(ring->inject_left(g));
    for (const auto& g : B.picard_generators) X.picard_generators.push_back(ring->inject_right(g));
    return X;
}

Space make_p1_bundle(const Space& base, const GradedClass& c1L) {
    if (c1L.ring().get() != base.ring.get())
        throw RingMismatchError("c1(L) must live on the base ring");
    for (const auto& g : base.curve_cone)
        if (integrate(ring_mul(c1L, g.cls)) < 0)
            throw PreconditionError("L is not nef on the base");

    auto ring = make_bundle_ring(base.ring, c1L);
    GradedClass xi = ring->xi();

    std::vector<GradedClass> pulled;
    for (const auto& c : base.tangent.chern) pulled.push_back(ring->pullback(c));
    FormalBundle base_part = formal_bundle(ring, base.tangent.rank, std::move(pulled));
    // relative Euler sequence: c1(T_rel) = 2 xi - pi* c1(L)
    FormalBundle rel = line_bundle(xi * Rational(2) - ring->pullback(c1L));
    FormalBundle tangent = whitney_sum(base_part, rel);

    Space Y;
    Y.label = "P(O+L^-1) over " + base.label;
    Y.dimension = base.dimension + 1;
    Y.ring = ring;
    Y.tangent = std::move(tangent);

    // zero section xi - pi*c1(L) (normal bundle L^dual), infinity section xi.
    auto s0 = [&](const GradedClass& a) {
        return ring->xi_times(a) - ring->pullback(ring_mul(a, c1L));
    };
    auto sinf = [&](const GradedClass& a) { return ring->xi_times(a); };

    Y.curve_cone.push_back({ring->pullback(point_class(base)), "fiber"});
    for (const auto& g : base.curve_cone) {
        Y.curve_cone.push_back({s0(g.cls), "s0(" + g.label + ")"});
        Y.curve_cone.push_back({sinf(g.cls), "sinf(" + g.label + ")"});
    }
    for (const auto& g : base.curve_cone)
        Y.surface_cone.push_back({ring->pullback(g.cls), "pi^-1(" + g.label + ")"});
    for (const auto& g : base.surface_cone) {
        Y.surface_cone.push_back({s0(g.cls), "s0(" + g.label + ")"});
        Y.surface_cone.push_back({sinf(g.cls), "sinf(" + g.label + ")"});
    }
    for (const auto& g : base.picard_generators) Y.picard_generators.push_back(ring->pullback(g));
    Y.picard_generators.push_back(xi);
    return Y;
}

Space make_p1_bundle(const BundleSpec& spec) { return make_p1_bundle(spec.base, spec.c1L); }

} // namespace fano
