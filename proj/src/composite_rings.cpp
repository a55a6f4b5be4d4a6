#include <utility>

#include "fano/ring.hpp"

namespace fano {

// --- ProductRing -------------------------------------------------------------

ProductRing::ProductRing(std::shared_ptr<const Ring> left, std::shared_ptr<const Ring> right)
    : left_(std::move(left)), right_(std::move(right)) {
    if (!left_ || !right_) throw PreconditionError("product of null rings");
    dim_ = left_->dimension() + right_->dimension();
    fund_ = left_->fundamental_degree() * right_->fundamental_degree();
    blocks_.resize(dim_ + 1);
    for (int d = 0; d <= dim_; ++d) {
        int offset = 0;
        for (int i = 0; i <= d; ++i) {
            int sa = left_->basis_size(i);
            int sb = right_->basis_size(d - i);
            if (sa == 0 || sb == 0) continue;
            blocks_[d].push_back(Block{i, sa, sb, offset});
            offset += sa * sb;
        }
    }
}

int ProductRing::basis_size(int degree) const {
    if (degree < 0 || degree > dim_) return 0;
    int total = 0;
    for (const auto& b : blocks_[degree]) total += b.left_size * b.right_size;
    return total;
}

std::pair<std::pair<int, int>, std::pair<int, int>> ProductRing::decode(int degree,
                                                                        int index) const {
    for (const auto& b : blocks_[degree]) {
        int span = b.left_size * b.right_size;
        if (index < b.offset + span) {
            int local = index - b.offset;
            return {{b.left_degree, local / b.right_size},
                    {degree - b.left_degree, local % b.right_size}};
        }
    }
    throw PreconditionError("basis index out of range");
}

int ProductRing::encode(int degree, int left_degree, int ia, int ib) const {
    for (const auto& b : blocks_[degree])
        if (b.left_degree == left_degree) return b.offset + ia * b.right_size + ib;
    throw PreconditionError("no such basis block");
}

std::string ProductRing::basis_label(int degree, int index) const {
    auto [a, b] = decode(degree, index);
    std::string la = left_->basis_label(a.first, a.second);
    std::string lb = right_->basis_label(b.first, b.second);
    if (la == "1") return lb;
    if (lb == "1") return la;
    return la + " x " + lb;
}

void ProductRing::basis_product_terms(int d1, int i1, int d2, int i2,
                                      const TermSink& emit) const {
    auto [a1, b1] = decode(d1, i1);
    auto [a2, b2] = decode(d2, i2);
    left_->basis_product_terms(
        a1.first, a1.second, a2.first, a2.second, [&](int da, int ia, const Rational& ca) {
            right_->basis_product_terms(b1.first, b1.second, b2.first, b2.second,
                                        [&](int db, int ib, const Rational& cb) {
                                            emit(da + db, encode(da + db, da, ia, ib), ca * cb);
                                        });
        });
}

GradedClass ProductRing::inject_left(const GradedClass& a) const {
    if (a.ring().get() != left_.get())
        throw RingMismatchError("class does not live on the left factor");
    GradedClass out(shared_from_this());
    for (const auto& [d, row] : a.components())
        for (const auto& [i, c] : row) out.add_term(d, encode(d, d, i, 0), c);
    return out;
}

GradedClass ProductRing::inject_right(const GradedClass& b) const {
    if (b.ring().get() != right_.get())
        throw RingMismatchError("class does not live on the right factor");
    GradedClass out(shared_from_this());
    for (const auto& [d, row] : b.components())
        for (const auto& [i, c] : row) out.add_term(d, encode(d, 0, 0, i), c);
    return out;
}

GradedClass ProductRing::kunneth(const GradedClass& a, const GradedClass& b) const {
    if (a.ring().get() != left_.get() || b.ring().get() != right_.get())
        throw RingMismatchError("Kunneth factors live on the wrong rings");
    GradedClass out(shared_from_this());
    for (const auto& [da, rowA] : a.components())
        for (const auto& [ia, ca] : rowA)
            for (const auto& [db, rowB] : b.components())
                for (const auto& [ib, cb] : rowB) {
                    if (da + db > dim_) continue;
                    out.add_term(da + db, encode(da + db, da, ia, ib), ca * cb);
                }
    return out;
}

std::shared_ptr<const ProductRing> make_product_ring(std::shared_ptr<const Ring> left,
                                                     std::shared_ptr<const Ring> right) {
    return std::make_shared<const ProductRing>(std::move(left), std::move(right));
}

// --- BundleRing ---------------------------------------------------------------

BundleRing::BundleRing(std::shared_ptr<const Ring> base, GradedClass c1l)
    : base_(std::move(base)), c1l_(std::move(c1l)) {
    if (!base_) throw PreconditionError("bundle over a null ring");
    if (c1l_.ring().get() != base_.get())
        throw RingMismatchError("c1(L) must live on the base ring");
    if (!c1l_.is_zero() && !c1l_.is_homogeneous(1))
        throw PreconditionError("c1(L) must be homogeneous of degree 1");
    dim_ = base_->dimension() + 1;
    fund_ = base_->fundamental_degree();
}

// Degree-d basis: base degree-d elements first, then xi * (base degree d-1).
int BundleRing::basis_size(int degree) const {
    if (degree < 0 || degree > dim_) return 0;
    return base_->basis_size(degree) + base_->basis_size(degree - 1);
}

std::string BundleRing::basis_label(int degree, int index) const {
    int pure = base_->basis_size(degree);
    if (index < pure) return base_->basis_label(degree, index);
    std::string lb = base_->basis_label(degree - 1, index - pure);
    return lb == "1" ? "xi" : lb + "*xi";
}

GradedClass BundleRing::pullback(const GradedClass& a) const {
    if (a.ring().get() != base_.get())
        throw RingMismatchError("pullback expects a base class");
    GradedClass out(shared_from_this());
    for (const auto& [d, row] : a.components())
        for (const auto& [i, c] : row) out.add_term(d, i, c);
    return out;
}

GradedClass BundleRing::xi_times(const GradedClass& base_class) const {
    if (base_class.ring().get() != base_.get())
        throw RingMismatchError("xi_times expects a base class");
    GradedClass out(shared_from_this());
    for (const auto& [d, row] : base_class.components())
        for (const auto& [i, c] : row)
            out.add_term(d + 1, base_->basis_size(d + 1) + i, c);
    return out;
}

GradedClass BundleRing::xi() const { return xi_times(base_->one()); }

std::pair<GradedClass, GradedClass> BundleRing::parts(const GradedClass& y) const {
    if (y.ring().get() != this)
        throw RingMismatchError("class does not live on this bundle ring");
    GradedClass pure(base_), fiber(base_);
    for (const auto& [d, row] : y.components()) {
        int split = base_->basis_size(d);
        for (const auto& [i, c] : row) {
            if (i < split)
                pure.add_term(d, i, c);
            else
                fiber.add_term(d - 1, i - split, c);
        }
    }
    return {pure, fiber};
}

void BundleRing::basis_product_terms(int d1, int i1, int d2, int i2,
                                     const TermSink& emit) const {
    int pure1 = base_->basis_size(d1);
    int pure2 = base_->basis_size(d2);
    bool xi1 = i1 >= pure1;
    bool xi2 = i2 >= pure2;
    int bd1 = xi1 ? d1 - 1 : d1;
    int bi1 = xi1 ? i1 - pure1 : i1;
    int bd2 = xi2 ? d2 - 1 : d2;
    int bi2 = xi2 ? i2 - pure2 : i2;

    if (!xi1 && !xi2) {
        base_->basis_product_terms(bd1, bi1, bd2, bi2, emit);
        return;
    }
    if (xi1 != xi2) {
        base_->basis_product_terms(bd1, bi1, bd2, bi2,
                                   [&](int d, int i, const Rational& c) {
                                       emit(d + 1, base_->basis_size(d + 1) + i, c);
                                   });
        return;
    }
    // xi^2 = c1(L) xi
    GradedClass base_prod = base_->basis_product(bd1, bi1, bd2, bi2);
    GradedClass folded = ring_mul(base_prod, c1l_);
    for (const auto& [d, row] : folded.components())
        for (const auto& [i, c] : row) emit(d + 1, base_->basis_size(d + 1) + i, c);
}

std::shared_ptr<const BundleRing> make_bundle_ring(std::shared_ptr<const Ring> base,
                                                   GradedClass c1l) {
    return std::make_shared<const BundleRing>(std::move(base), std::move(c1l));
}

} // namespace fano
