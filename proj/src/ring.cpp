#include "fano/ring.hpp"

#include <utility>

namespace fano {

// --- GradedClass -----------------------------------------------------------

GradedClass::GradedClass(std::shared_ptr<const Ring> ring) : ring_(std::move(ring)) {
    if (!ring_) throw PreconditionError("graded class needs a ring");
}

void GradedClass::require_same_ring(const GradedClass& o) const {
    if (ring_.get() != o.ring_.get())
        throw RingMismatchError("classes belong to distinct rings");
}

Rational GradedClass::coeff(int degree, int index) const {
    auto d = comps_.find(degree);
    if (d == comps_.end()) return Rational(0);
    auto t = d->second.find(index);
    return t == d->second.end() ? Rational(0) : t->second;
}

void GradedClass::add_term(int degree, int index, const Rational& c) {
    if (c == 0) return;
    if (degree < 0 || degree > ring_->dimension()) return; // truncation
    auto& row = comps_[degree];
    auto it = row.find(index);
    if (it == row.end()) {
        row.emplace(index, c);
        return;
    }
    it->second += c;
    if (it->second == 0) {
        row.erase(it);
        if (row.empty()) comps_.erase(degree);
    }
}

bool GradedClass::is_homogeneous(int degree) const {
    for (const auto& [d, row] : comps_)
        if (d != degree && !row.empty()) return false;
    return true;
}

int GradedClass::top_degree() const {
    return comps_.empty() ? -1 : comps_.rbegin()->first;
}

GradedClass GradedClass::component(int degree) const {
    GradedClass out(ring_);
    auto d = comps_.find(degree);
    if (d != comps_.end()) out.comps_[degree] = d->second;
    return out;
}

GradedClass& GradedClass::operator+=(const GradedClass& o) {
    require_same_ring(o);
    for (const auto& [d, row] : o.comps_)
        for (const auto& [i, c] : row) add_term(d, i, c);
    return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& o) {
    require_same_ring(o);
    for (const auto& [d, row] : o.comps_)
        for (const auto& [i, c] : row) add_term(d, i, -c);
    return *this;
}

GradedClass& GradedClass::operator*=(const Rational& c) {
    if (c == 0) {
        comps_.clear();
        return *this;
    }
    for (auto& [d, row] : comps_)
        for (auto& [i, v] : row) v *= c;
    return *this;
}

GradedClass GradedClass::operator-() const {
    GradedClass out = *this;
    out *= Rational(-1);
    return out;
}

GradedClass operator*(const GradedClass& a, const GradedClass& b) {
    return ring_mul(a, b);
}

bool GradedClass::operator==(const GradedClass& o) const {
    require_same_ring(o);
    return comps_ == o.comps_;
}

std::string GradedClass::to_string() const {
    if (comps_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [d, row] : comps_) {
        for (const auto& [i, c] : row) {
            Rational a = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) s += "-";
                first = false;
            } else {
                s += c < 0 ? " - " : " + ";
            }
            std::string label = ring_->basis_label(d, i);
            if (label == "1") {
                s += fano::to_string(a);
            } else if (a == 1) {
                s += label;
            } else {
                s += fano::to_string(a) + "*" + label;
            }
        }
    }
    return s;
}

// --- Ring ------------------------------------------------------------------

GradedClass Ring::zero() const { return GradedClass(shared_from_this()); }

GradedClass Ring::one() const { return constant(Rational(1)); }

GradedClass Ring::constant(const Rational& c) const {
    GradedClass out(shared_from_this());
    out.add_term(0, 0, c);
    return out;
}

GradedClass Ring::basis(int degree, int index) const {
    GradedClass out(shared_from_this());
    out.add_term(degree, index, Rational(1));
    return out;
}

GradedClass Ring::basis_product(int d1, int i1, int d2, int i2) const {
    GradedClass out(shared_from_this());
    basis_product_terms(d1, i1, d2, i2,
                        [&](int d, int i, const Rational& c) { out.add_term(d, i, c); });
    return out;
}

// --- free operations --------------------------------------------------------

GradedClass ring_add(const GradedClass& a, const GradedClass& b) { return a + b; }

GradedClass ring_mul(const GradedClass& a, const GradedClass& b) {
    a.require_same_ring(b);
    const Ring& ring = *a.ring();
    GradedClass out(a.ring());
    int dim = ring.dimension();
    Rational scale;
    TermSink sink = [&](int d, int i, const Rational& c) { out.add_term(d, i, c * scale); };
    for (const auto& [da, rowA] : a.comps_) {
        for (const auto& [db, rowB] : b.comps_) {
            if (da + db > dim) continue;
            for (const auto& [ia, ca] : rowA) {
                for (const auto& [ib, cb] : rowB) {
                    scale = ca * cb;
                    ring.basis_product_terms(da, ia, db, ib, sink);
                }
            }
        }
    }
    return out;
}

GradedClass ring_exp(const GradedClass& a) {
    if (a.coeff(0, 0) != 0)
        throw PreconditionError("exp requires a zero degree-0 part");
    GradedClass result = a.ring()->one();
    GradedClass term = a.ring()->one();
    int dim = a.ring()->dimension();
    for (int k = 1; k <= dim; ++k) {
        term = ring_mul(term, a);
        term *= Rational(1, k);
        if (term.is_zero()) break;
        result += term;
    }
    return result;
}

GradedClass ring_pow(const GradedClass& a, int exponent) {
    if (exponent < 0) throw PreconditionError("negative power");
    GradedClass result = a.ring()->one();
    for (int i = 0; i < exponent; ++i) result = ring_mul(result, a);
    return result;
}

Rational integrate(const GradedClass& a) {
    const Ring& ring = *a.ring();
    return a.coeff(ring.dimension(), 0) * ring.fundamental_degree();
}

// --- HyperplaneRing ----------------------------------------------------------

HyperplaneRing::HyperplaneRing(int dimension, Rational fundamental, std::string symbol)
    : dim_(dimension), fund_(std::move(fundamental)), sym_(std::move(symbol)) {
    if (dim_ < 0) throw PreconditionError("negative ring dimension");
    if (fund_ <= 0) throw PreconditionError("fundamental degree must be positive");
}

int HyperplaneRing::basis_size(int degree) const {
    return degree >= 0 && degree <= dim_ ? 1 : 0;
}

std::string HyperplaneRing::basis_label(int degree, int) const {
    if (degree == 0) return "1";
    if (degree == 1) return sym_;
    return sym_ + "^" + std::to_string(degree);
}

void HyperplaneRing::basis_product_terms(int d1, int, int d2, int, const TermSink& emit) const {
    if (d1 + d2 <= dim_) emit(d1 + d2, 0, Rational(1));
}

GradedClass HyperplaneRing::hyperplane() const { return basis(1, 0); }

GradedClass HyperplaneRing::hyperplane_power(int d) const {
    if (d < 0) throw PreconditionError("negative power of the hyperplane class");
    return d <= dim_ ? basis(d, 0) : zero();
}

std::shared_ptr<const HyperplaneRing> make_hyperplane_ring(int dimension, Rational fundamental,
                                                           std::string symbol) {
    return std::make_shared<const HyperplaneRing>(dimension, std::move(fundamental),
                                                  std::move(symbol));
}

} // namespace fano
