#pragma once

#include <map>
#include <memory>
#include <functional>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fano/errors.hpp"
#include "fano/partition.hpp"
#include "fano/rational.hpp"

namespace fano {

class Ring;

enum class RingKind { hyperplane, schubert, product, bundle };

/// Element of a graded Chow ring, stored per cohomological degree as exact
/// rational coefficients over the ring's homogeneous basis. Components above
/// the ring dimension are truncated away on insertion. Values are immutable
/// in spirit: every operation returns a new class.
class GradedClass {
public:
    explicit GradedClass(std::shared_ptr<const Ring> ring);

    const std::shared_ptr<const Ring>& ring() const { return ring_; }
    bool is_zero() const { return comps_.empty(); }
    Rational coeff(int degree, int index) const;
    void add_term(int degree, int index, const Rational& c);

    bool is_homogeneous(int degree) const;
    int top_degree() const; // -1 for the zero class
    GradedClass component(int degree) const;
    /// degree -> (basis index -> coefficient); zero coefficients never stored
    const std::map<int, std::map<int, Rational>>& components() const { return comps_; }

    GradedClass& operator+=(const GradedClass& o);
    GradedClass& operator-=(const GradedClass& o);
    GradedClass& operator*=(const Rational& c);
    friend GradedClass operator+(GradedClass a, const GradedClass& b) { a += b; return a; }
    friend GradedClass operator-(GradedClass a, const GradedClass& b) { a -= b; return a; }
    friend GradedClass operator*(GradedClass a, const Rational& c) { a *= c; return a; }
    friend GradedClass operator*(const Rational& c, GradedClass a) { a *= c; return a; }
    friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
    GradedClass operator-() const;

    bool operator==(const GradedClass& o) const;
    bool operator!=(const GradedClass& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::shared_ptr<const Ring> ring_;
    std::map<int, std::map<int, Rational>> comps_;

    void require_same_ring(const GradedClass& o) const;
    friend GradedClass ring_mul(const GradedClass&, const GradedClass&);
};

/// Receives the terms of a normal-formed basis product.
using TermSink = std::function<void(int degree, int index, const Rational& coeff)>;

/// A graded ring presentation: finite homogeneous basis per degree,
/// normal-formed basis products, and integration of the top degree against
/// the fundamental class. Instances are immutable and shareable across
/// threads; internal memoization is guarded and transparent.
class Ring : public std::enable_shared_from_this<Ring> {
public:
    virtual ~Ring() = default;

    virtual RingKind kind() const = 0;
    virtual int dimension() const = 0;
    /// Value of the integral of the top-degree basis element.
    virtual const Rational& fundamental_degree() const = 0;
    virtual int basis_size(int degree) const = 0;
    virtual std::string basis_label(int degree, int index) const = 0;
    /// Emits the terms of the normal-formed product of two basis elements.
    virtual void basis_product_terms(int d1, int i1, int d2, int i2,
                                     const TermSink& emit) const = 0;

    /// Normal form of the product of two basis elements.
    GradedClass basis_product(int d1, int i1, int d2, int i2) const;

    GradedClass zero() const;
    GradedClass one() const;
    GradedClass constant(const Rational& c) const;
    GradedClass basis(int degree, int index) const;
};

// Spec-level operation names. operator+ / operator* on GradedClass are thin
// wrappers over these.
GradedClass ring_add(const GradedClass& a, const GradedClass& b);
GradedClass ring_mul(const GradedClass& a, const GradedClass& b);
/// Truncated exponential sum a^k/k!; requires a zero degree-0 part.
GradedClass ring_exp(const GradedClass& a);
GradedClass ring_pow(const GradedClass& a, int exponent);
/// Coefficient of the top-degree basis element times the fundamental degree;
/// zero when the class has no top-degree part.
Rational integrate(const GradedClass& a);

/// Q[H]/(H^{dim+1}) with a prescribed integral of H^dim. Covers projective
/// and weighted projective spaces and complete intersections in them.
class HyperplaneRing final : public Ring {
public:
    HyperplaneRing(int dimension, Rational fundamental, std::string symbol = "H");

    RingKind kind() const override { return RingKind::hyperplane; }
    int dimension() const override { return dim_; }
    const Rational& fundamental_degree() const override { return fund_; }
    int basis_size(int degree) const override;
    std::string basis_label(int degree, int index) const override;
    void basis_product_terms(int d1, int i1, int d2, int i2,
                             const TermSink& emit) const override;

    GradedClass hyperplane() const;
    GradedClass hyperplane_power(int d) const;

private:
    int dim_;
    Rational fund_;
    std::string sym_;
};

/// Chow ring of Grass(k, n) in the Schubert basis. Products are computed by
/// straightening one factor into products of single-row classes and applying
/// iterated Pieri steps; both the straightening table and pairwise products
/// are memoized.
class SchubertRing final : public Ring {
public:
    SchubertRing(int k, int n);

    RingKind kind() const override { return RingKind::schubert; }
    int dimension() const override { return dim_; }
    const Rational& fundamental_degree() const override { return fund_; }
    int basis_size(int degree) const override;
    std::string basis_label(int degree, int index) const override;
    void basis_product_terms(int d1, int i1, int d2, int i2,
                             const TermSink& emit) const override;

    int k() const { return k_; }
    int n() const { return n_; }
    int box_cols() const { return cols_; }

    const std::vector<std::vector<int>>& basis_partitions(int degree) const;
    int index_of(const std::vector<int>& parts) const;
    GradedClass schubert_class(const std::vector<int>& parts) const;

private:
    int k_, n_, cols_, dim_;
    Rational fund_;
    std::vector<std::vector<std::vector<int>>> basis_; // [degree][index]
    std::map<std::vector<int>, std::pair<int, int>> index_;

    // Internal products run over dense integer coefficient vectors, one
    // homogeneous degree at a time; Pieri and LR coefficients are integers.
    using DenseClass = std::pair<int, std::vector<Integer>>; // degree, coefficients
    // sigma_mu = sum of coeff * (product of single-row classes given by rows)
    using StraightExpr = std::vector<std::pair<Integer, std::vector<int>>>;

    mutable std::recursive_mutex cache_mu_;
    mutable std::map<std::tuple<int, int, int>, std::vector<int>> pieri_targets_;
    mutable std::map<std::vector<int>, StraightExpr> straighten_;
    mutable std::map<std::pair<std::vector<int>, std::vector<int>>, DenseClass> pair_cache_;

    const std::vector<int>& pieri_targets(int degree, int index, int row) const;
    DenseClass expand_rows(int degree, int index, const std::vector<int>& rows) const;
    const StraightExpr& straighten(const std::vector<int>& mu) const;
};

/// Tensor product of two ring presentations with the Kunneth basis
/// (pairs of factor basis elements).
class ProductRing final : public Ring {
public:
    ProductRing(std::shared_ptr<const Ring> left, std::shared_ptr<const Ring> right);

    RingKind kind() const override { return RingKind::product; }
    int dimension() const override { return dim_; }
    const Rational& fundamental_degree() const override { return fund_; }
    int basis_size(int degree) const override;
    std::string basis_label(int degree, int index) const override;
    void basis_product_terms(int d1, int i1, int d2, int i2,
                             const TermSink& emit) const override;

    const std::shared_ptr<const Ring>& left() const { return left_; }
    const std::shared_ptr<const Ring>& right() const { return right_; }

    GradedClass inject_left(const GradedClass& a) const;  // a (x) 1
    GradedClass inject_right(const GradedClass& b) const; // 1 (x) b
    GradedClass kunneth(const GradedClass& a, const GradedClass& b) const;

private:
    struct Block {
        int left_degree;
        int left_size;
        int right_size;
        int offset;
    };

    std::shared_ptr<const Ring> left_, right_;
    int dim_;
    Rational fund_;
    std::vector<std::vector<Block>> blocks_; // per total degree

    std::pair<std::pair<int, int>, std::pair<int, int>> decode(int degree, int index) const;
    int encode(int degree, int left_degree, int ia, int ib) const;
};

/// Chow ring of the P^1-bundle P(O + L^dual) over a base: the base ring
/// adjoined the relative hyperplane class xi with xi^2 = c1(L) xi. A class
/// is a + b*xi with a, b pulled back from the base; integration takes the
/// xi-coefficient and integrates it on the base.
class BundleRing final : public Ring {
public:
    BundleRing(std::shared_ptr<const Ring> base, GradedClass c1l);

    RingKind kind() const override { return RingKind::bundle; }
    int dimension() const override { return dim_; }
    const Rational& fundamental_degree() const override { return fund_; }
    int basis_size(int degree) const override;
    std::string basis_label(int degree, int index) const override;
    void basis_product_terms(int d1, int i1, int d2, int i2,
                             const TermSink& emit) const override;

    const std::shared_ptr<const Ring>& base() const { return base_; }
    const GradedClass& c1l() const { return c1l_; }

    GradedClass pullback(const GradedClass& a) const;
    GradedClass xi() const;
    GradedClass xi_times(const GradedClass& base_class) const;
    /// Decomposes y = a + b*xi into base classes (a, b); b is pi_*(y).
    std::pair<GradedClass, GradedClass> parts(const GradedClass& y) const;

private:
    std::shared_ptr<const Ring> base_;
    GradedClass c1l_;
    int dim_;
    Rational fund_;
};

std::shared_ptr<const HyperplaneRing> make_hyperplane_ring(int dimension,
                                                           Rational fundamental,
                                                           std::string symbol = "H");
std::shared_ptr<const SchubertRing> make_schubert_ring(int k, int n);
std::shared_ptr<const ProductRing> make_product_ring(std::shared_ptr<const Ring> left,
                                                     std::shared_ptr<const Ring> right);
std::shared_ptr<const BundleRing> make_bundle_ring(std::shared_ptr<const Ring> base,
                                                   GradedClass c1l);

} // namespace fano
