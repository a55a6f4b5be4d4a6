#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fano/bundle.hpp"
#include "fano/ring.hpp"

namespace fano {

/// Effective-cone generator together with a printable label for witness
/// reporting.
struct ConeGenerator {
    GradedClass cls;
    std::string label;
};

/// A catalog space: Chow ring, tangent bundle, and the generator sets the
/// positivity tests pair against. Curve generators have degree dim-1,
/// surface generators degree dim-2. Immutable once constructed.
struct Space {
    std::string label;
    int dimension = 0;
    std::shared_ptr<const Ring> ring;
    FormalBundle tangent;
    std::vector<ConeGenerator> curve_cone;
    std::vector<ConeGenerator> surface_cone;
    std::vector<GradedClass> picard_generators;
};

/// Complete intersection of multidegrees d_1..d_r in the weighted projective
/// space with weights w_0..w_n. All weights 1 is ordinary projective space;
/// an empty degree list is the ambient space itself. Smoothness of the
/// intersection is asserted by the caller, not verified.
struct CompleteIntersectionSpec {
    std::vector<int> weights;
    std::vector<int> degrees;

    int ambient_dim() const { return static_cast<int>(weights.size()) - 1; }
    int dimension() const { return ambient_dim() - static_cast<int>(degrees.size()); }

    static CompleteIntersectionSpec plain(int n, std::vector<int> degrees);
};

/// Grass(k, n), k-dimensional subspaces of an n-dimensional space,
/// normalized so that n >= 2k (k and n-k give isomorphic spaces).
struct GrassmannianSpec {
    int k = 0;
    int n = 0;

    static GrassmannianSpec normalized(int k, int n);
};

/// P(O + L^dual) over a base with a nef line bundle L.
struct BundleSpec {
    Space base;
    GradedClass c1L;
};

/// Normalized point class (integral 1).
GradedClass point_class(const Space& X);

Space make_projective(int n);
Space make_weighted_projective(const std::vector<int>& weights);
Space make_complete_intersection(const CompleteIntersectionSpec& spec);
Space make_grassmannian(const GrassmannianSpec& spec);
Space make_product(const Space& A, const Space& B);
Space make_p1_bundle(const Space& base, const GradedClass& c1L);
Space make_p1_bundle(const BundleSpec& spec);

} // namespace fano
