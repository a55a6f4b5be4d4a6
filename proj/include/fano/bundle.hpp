#pragma once

#include <memory>
#include <vector>

#include "fano/ring.hpp"

namespace fano {

/// Formal vector bundle: a rank together with Chern classes c_1..c_t where
/// t = min(rank, ring dimension). Chern class i is homogeneous of degree i.
/// No geometric realizability is checked; the calculus is formal.
struct FormalBundle {
    int rank = 0;
    std::shared_ptr<const Ring> ring;
    std::vector<GradedClass> chern; // chern[i] has degree i+1

    const GradedClass& chern_class(int i) const; // c_i, zero class beyond list
};

/// Graded pieces of the Chern character: piece 0 is the rank, piece 1 is
/// c_1, piece 2 is (c_1^2 - 2 c_2)/2.
struct ChernCharacter {
    std::vector<GradedClass> pieces; // pieces[k] homogeneous of degree k

    const GradedClass& piece(int k) const;
    ChernCharacter& operator+=(const ChernCharacter& o);
    friend ChernCharacter operator+(ChernCharacter a, const ChernCharacter& b) {
        a += b;
        return a;
    }
    bool operator==(const ChernCharacter& o) const;
};

/// Builds a bundle, validating ring consistency and homogeneity and
/// normalizing the class list to length min(rank, dimension).
FormalBundle formal_bundle(std::shared_ptr<const Ring> ring, int rank,
                           std::vector<GradedClass> chern);
FormalBundle trivial_bundle(std::shared_ptr<const Ring> ring, int rank);
FormalBundle line_bundle(const GradedClass& c1);

/// 1 + c_1 + c_2 + ...
GradedClass total_chern(const FormalBundle& E);
/// Inverse of total_chern; throws InconsistentDataError if the class has
/// nonzero components in degrees above the rank.
FormalBundle bundle_from_total_chern(std::shared_ptr<const Ring> ring, int rank,
                                     const GradedClass& total);

/// Chern character through the given degree via Newton's identities.
/// Requires top <= ring dimension.
ChernCharacter chern_character(const FormalBundle& E, int top = 2);
/// Recovers Chern classes from character pieces; the pieces must reach at
/// least degree min(rank, dimension).
FormalBundle bundle_from_character(const ChernCharacter& ch);

/// Rank adds, total Chern class multiplies.
FormalBundle whitney_sum(const FormalBundle& E, const FormalBundle& F);
/// Formal quotient with c(Q) = c(E)/c(S) by truncated power-series division.
/// A nonzero quotient coefficient above rank(E)-rank(S) signals inconsistent
/// exact-sequence data and raises InconsistentDataError.
FormalBundle bundle_quotient(const FormalBundle& E, const FormalBundle& S);
/// Twist by a line bundle with first Chern class c1L (degree 1).
FormalBundle tensor_line(const FormalBundle& E, const GradedClass& c1L);
FormalBundle dual(const FormalBundle& E);

} // namespace fano
