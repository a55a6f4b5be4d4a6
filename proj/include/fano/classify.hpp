#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fano/spaces.hpp"

namespace fano {

struct WitnessPairing {
    std::string generator; // "c1 . <curve label>" or "ch2 . <surface label>"
    Rational value;
};

/// Verdicts for one space together with the pairings that justify them.
/// is_two_fano means every ch2-surface pairing is >= 0; strict positivity
/// requires > 0. boundary_flag marks a decisive pairing that is exactly 0,
/// so the verdict sits on the nef boundary.
struct ClassificationRecord {
    std::string label;
    bool is_fano = false;
    bool is_two_fano = false;
    bool is_ch2_strictly_positive = false;
    std::optional<Rational> fano_index;
    std::vector<WitnessPairing> witness_pairings;
    bool boundary_flag = false;
};

/// Pairs c1(T) against the curve cone and ch2(T) against the surface cone
/// and fills every verdict. Deterministic and pure.
ClassificationRecord classify(const Space& X);

// Closed-form verdicts for the families that admit them. These are
// independent of the engine computation and are reported side by side.
bool oracle_ci_fano(const CompleteIntersectionSpec& spec);
bool oracle_ci_two_fano(const CompleteIntersectionSpec& spec);
/// Requires the normalized form n >= 2k.
bool oracle_grassmannian_two_fano(const GrassmannianSpec& spec);
/// Whether ch2(T_base) + c1L^2/2 pairs >= 0 against every base surface
/// generator. Requires L nef on the base.
bool oracle_bundle_two_fano(const Space& base, const GradedClass& c1L);

/// For a Picard-rank-1 space, the ratio of c1(T) to the ample generator;
/// otherwise the minimum pairing of c1 against the curve generators. A
/// computable lower bound for the pseudo-index; none when not positive.
std::optional<Rational> fano_index(const Space& X);

/// Inputs for the deformation-dimension lower bound: the two surface
/// degrees, the anticanonical degree e of the curve class, dim(X), the
/// genus of the base curve, and the number of marked points.
struct Lemma3Input {
    Rational ch2_deg;
    Rational c1sq_deg;
    int e = 1;
    int dim_x = 1;
    int genus = 0;
    int marked = 0;
};

/// ch2_deg + c1sq_deg/(2e) + (e + dim_x - 3)(1 - genus - marked), exactly.
Rational lemma3_bound(const Lemma3Input& input);

/// deg(ch2(T) . S) + deg(c1(T)^2 . S)/(2e) for a surface class S of degree
/// dimension-2.
Rational bend_and_break_degree(const Space& X, const GradedClass& surface_class, int e);

} // namespace fano
