#include "fano/classify.hpp"

#include <algorithm>

namespace fano {

namespace {

GradedClass character_piece(const Space& X, int k) {
    ChernCharacter ch = chern_character(X.tangent, std::min(k, X.dimension));
    return k < static_cast<int>(ch.pieces.size()) ? ch.pieces[k] : X.ring->zero();
}

} // namespace

ClassificationRecord classify(const Space& X) {
    ChernCharacter ch = chern_character(X.tangent, std::min(2, X.dimension));
    GradedClass c1 = ch.piece(1);
    GradedClass ch2 = ch.piece(2);

    ClassificationRecord rec;
    rec.label = X.label;
    rec.is_fano = true;
    rec.is_two_fano = true;
    rec.is_ch2_strictly_positive = true;
    rec.boundary_flag = false;

    for (const auto& g : X.curve_cone) {
        Rational v = integrate(ring_mul(c1, g.cls));
        rec.witness_pairings.push_back({"c1 . " + g.label, v});
        if (v <= 0) rec.is_fano = false;
        if (v == 0) rec.boundary_flag = true;
    }
    for (const auto& g : X.surface_cone) {
        Rational v = integrate(ring_mul(ch2, g.cls));
        rec.witness_pairings.push_back({"ch2 . " + g.label, v});
        if (v < 0) rec.is_two_fano = false;
        if (v <= 0) rec.is_ch2_strictly_positive = false;
        if (v == 0) rec.boundary_flag = true;
    }
    rec.fano_index = fano_index(X);
    return rec;
}

bool oracle_ci_fano(const CompleteIntersectionSpec& spec) {
    long long sum = 0;
    for (int d : spec.degrees) sum += d;
    return sum <= spec.ambient_dim();
}

bool oracle_ci_two_fano(const CompleteIntersectionSpec& spec) {
    long long sum = 0;
    for (int d : spec.degrees) sum += static_cast<long long>(d) * d;
    return sum <= spec.ambient_dim();
}

bool oracle_grassmannian_two_fano(const GrassmannianSpec& spec) {
    if (spec.n < 2 * spec.k)
        throw PreconditionError("Grassmannian spec must be normalized to n >= 2k");
    return spec.k == 1 || spec.n == 2 * spec.k || spec.n == 2 * spec.k + 1;
}

bool oracle_bundle_two_fano(const Space& base, const GradedClass& c1L) {
    for (const auto& g : base.curve_cone)
        if (integrate(ring_mul(c1L, g.cls)) < 0)
            throw PreconditionError("L is not nef on the base");
    GradedClass w = character_piece(base, 2) + ring_mul(c1L, c1L) * Rational(1, 2);
    for (const auto& g : base.surface_cone)
        if (integrate(ring_mul(w, g.cls)) < 0) return false;
    return true;
}

std::optional<Rational> fano_index(const Space& X) {
    if (X.dimension < 1) return std::nullopt;
    GradedClass c1 = character_piece(X, 1);

    if (X.picard_generators.size() == 1) {
        const GradedClass& g = X.picard_generators[0];
        if (!g.is_zero()) {
            const auto& [deg, row] = *g.components().begin();
            const auto& [idx, gc] = *row.begin();
            Rational ratio = c1.coeff(deg, idx) / gc;
            if (c1 == g * ratio) return ratio > 0 ? std::optional<Rational>(ratio) : std::nullopt;
        }
    }
    if (X.curve_cone.empty()) return std::nullopt;
    std::optional<Rational> least;
    for (const auto& g : X.curve_cone) {
        Rational v = integrate(ring_mul(c1, g.cls));
        if (!least || v < *least) least = v;
    }
    return *least > 0 ? least : std::nullopt;
}

Rational lemma3_bound(const Lemma3Input& input) {
    if (input.e < 1) throw PreconditionError("curve degree e must be >= 1");
    if (input.dim_x < 1) throw PreconditionError("dim(X) must be >= 1");
    if (input.genus < 0 || input.marked < 0)
        throw PreconditionError("genus and marked-point count must be nonnegative");
    Rational defect = Rational(input.e + input.dim_x - 3) *
                      Rational(1 - input.genus - input.marked);
    return input.ch2_deg + input.c1sq_deg / (2 * input.e) + defect;
}

Rational bend_and_break_degree(const Space& X, const GradedClass& surface_class, int e) {
    if (e < 1) throw PreconditionError("curve degree e must be >= 1");
    if (surface_class.ring().get() != X.ring.get())
        throw RingMismatchError("surface class lives on a different ring");
    if (!surface_class.is_zero() && !surface_class.is_homogeneous(X.dimension - 2))
        throw PreconditionError("surface class must be homogeneous of degree dimension-2");

    GradedClass c1 = character_piece(X, 1);
    GradedClass ch2 = character_piece(X, 2);
    Rational ch2_deg = integrate(ring_mul(ch2, surface_class));
    Rational c1sq_deg = integrate(ring_mul(ring_mul(c1, c1), surface_class));
    return ch2_deg + c1sq_deg / (2 * e);
}

} // namespace fano
