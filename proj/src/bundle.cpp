#include "fano/bundle.hpp"

#include <algorithm>

namespace fano {

namespace {

const GradedClass& zero_of(const std::shared_ptr<const Ring>& ring) {
    thread_local std::map<const Ring*, GradedClass> zeros;
    auto it = zeros.find(ring.get());
    if (it == zeros.end()) it = zeros.emplace(ring.get(), GradedClass(ring)).first;
    return it->second;
}

} // namespace

const GradedClass& FormalBundle::chern_class(int i) const {
    if (i < 1 || i > static_cast<int>(chern.size())) return zero_of(ring);
    return chern[i - 1];
}

const GradedClass& ChernCharacter::piece(int k) const {
    if (k < 0 || k >= static_cast<int>(pieces.size()))
        return zero_of(pieces.at(0).ring());
    return pieces[k];
}

ChernCharacter& ChernCharacter::operator+=(const ChernCharacter& o) {
    std::size_t common = std::min(pieces.size(), o.pieces.size());
    for (std::size_t k = 0; k < common; ++k) pieces[k] += o.pieces[k];
    for (std::size_t k = pieces.size(); k < o.pieces.size(); ++k)
        pieces.push_back(o.pieces[k]);
    return *this;
}

bool ChernCharacter::operator==(const ChernCharacter& o) const {
    std::size_t n = std::max(pieces.size(), o.pieces.size());
    for (std::size_t k = 0; k < n; ++k) {
        const GradedClass& a = k < pieces.size() ? pieces[k] : zero_of(pieces.at(0).ring());
        const GradedClass& b = k < o.pieces.size() ? o.pieces[k] : zero_of(o.pieces.at(0).ring());
        if (!(a == b)) return false;
    }
    return true;
}

FormalBundle formal_bundle(std::shared_ptr<const Ring> ring, int rank,
                           std::vector<GradedClass> chern) {
    if (rank < 0) throw PreconditionError("negative bundle rank");
    int top = std::min(rank, ring->dimension());
    for (std::size_t i = 0; i < chern.size(); ++i) {
        if (chern[i].ring().get() != ring.get())
            throw RingMismatchError("Chern class on the wrong ring");
        if (!chern[i].is_zero() && !chern[i].is_homogeneous(static_cast<int>(i) + 1))
            throw PreconditionError("Chern class " + std::to_string(i + 1) +
                                    " is not homogeneous of its degree");
        if (static_cast<int>(i) >= top && !chern[i].is_zero())
            throw PreconditionError("Chern class beyond min(rank, dimension)");
    }
    chern.resize(top, GradedClass(ring));
    return FormalBundle{rank, std::move(ring), std::move(chern)};
}

FormalBundle trivial_bundle(std::shared_ptr<const Ring> ring, int rank) {
    return formal_bundle(std::move(ring), rank, {});
}

FormalBundle line_bundle(const GradedClass& c1) {
    return formal_bundle(c1.ring(), 1, {c1});
}

GradedClass total_chern(const FormalBundle& E) {
    GradedClass c = E.ring->one();
    for (const auto& ci : E.chern) c += ci;
    return c;
}

FormalBundle bundle_from_total_chern(std::shared_ptr<const Ring> ring, int rank,
                                     const GradedClass& total) {
    int dim = ring->dimension();
    std::vector<GradedClass> chern;
    for (int i = 1; i <= std::min(rank, dim); ++i) chern.push_back(total.component(i));
    for (int i = rank + 1; i <= dim; ++i)
        if (!total.component(i).is_zero())
            throw InconsistentDataError("total Chern class has a nonzero component above the rank");
    return formal_bundle(std::move(ring), rank, std::move(chern));
}

ChernCharacter chern_character(const FormalBundle& E, int top) {
    const auto& ring = E.ring;
    if (top < 0 || top > ring->dimension())
        throw PreconditionError("character degree exceeds the ring dimension");

    ChernCharacter ch;
    ch.pieces.push_back(ring->constant(Rational(E.rank)));
    // Newton's identities: p_k = sum_{i<k} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k
    std::vector<GradedClass> power_sums; // p_1..p_top
    for (int k = 1; k <= top; ++k) {
        GradedClass p = ring->zero();
        for (int i = 1; i < k; ++i) {
            GradedClass term = ring_mul(E.chern_class(i), power_sums[k - i - 1]);
            p += (i % 2 == 1) ? term : -term;
        }
        GradedClass last = E.chern_class(k) * Rational(k);
        p += (k % 2 == 1) ? last : -last;
        power_sums.push_back(p);
        ch.pieces.push_back(p * Rational(1, factorial(k)));
    }
    return ch;
}

FormalBundle bundle_from_character(const ChernCharacter& ch) {
    if (ch.pieces.empty()) throw PreconditionError("empty character");
    const auto& ring = ch.pieces[0].ring();
    Rational r0 = ch.pieces[0].coeff(0, 0);
    if (!ch.pieces[0].is_homogeneous(0) || denominator(r0) != 1 || r0 < 0)
        throw PreconditionError("character piece 0 must be a nonnegative integer rank");
    int rank = static_cast<int>(numerator(r0));

    int depth = std::min(rank, ring->dimension());
    if (static_cast<int>(ch.pieces.size()) - 1 < depth)
        throw PreconditionError("character does not reach degree min(rank, dimension)");

    std::vector<GradedClass> power_sums;
    for (int k = 1; k <= depth; ++k)
        power_sums.push_back(ch.pieces[k] * Rational(factorial(k)));

    std::vector<GradedClass> chern;
    for (int k = 1; k <= depth; ++k) {
        GradedClass c = power_sums[k - 1];
        c = (k % 2 == 1) ? c : -c;
        for (int i = 1; i < k; ++i) {
            GradedClass term = ring_mul(chern[i - 1], power_sums[k - i - 1]);
            // move (-1)^{i-1} c_i p_{k-i} across and apply the (-1)^{k-1} sign
            bool positive = ((i % 2 == 1) != (k % 2 == 1));
            c += positive ? term : -term;
        }
        c *= Rational(1, k);
        chern.push_back(c);
    }
    return formal_bundle(ring, rank, std::move(chern));
}

FormalBundle whitney_sum(const FormalBundle& E, const FormalBundle& F) {
    if (E.ring.get() != F.ring.get())
        throw RingMismatchError("Whitney sum across distinct rings");
    return bundle_from_total_chern(E.ring, E.rank + F.rank,
                                   ring_mul(total_chern(E), total_chern(F)));
}

FormalBundle bundle_quotient(const FormalBundle& E, const FormalBundle& S) {
    if (E.ring.get() != S.ring.get())
        throw RingMismatchError("quotient across distinct rings");
    if (S.rank > E.rank)
        throw PreconditionError("subbundle rank exceeds the total rank");

    // Power-series division c(E)/c(S) degree by degree.
    const auto& ring = E.ring;
    int dim = ring->dimension();
    std::vector<GradedClass> q;
    q.push_back(ring->one());
    for (int d = 1; d <= dim; ++d) {
        GradedClass qd = E.chern_class(d);
        for (int i = 1; i <= d; ++i) qd -= ring_mul(S.chern_class(i), q[d - i]);
        q.push_back(qd);
    }
    GradedClass total = ring->zero();
    for (const auto& comp : q) total += comp;
    return bundle_from_total_chern(ring, E.rank - S.rank, total);
}

FormalBundle tensor_line(const FormalBundle& E, const GradedClass& c1L) {
    if (E.ring.get() != c1L.ring().get())
        throw RingMismatchError("twist class on the wrong ring");
    if (!c1L.is_zero() && !c1L.is_homogeneous(1))
        throw PreconditionError("twist class must be homogeneous of degree 1");

    const auto& ring = E.ring;
    int top = std::min(E.rank, ring->dimension());
    std::vector<GradedClass> tpow{ring->one()};
    for (int j = 1; j <= top; ++j) tpow.push_back(ring_mul(tpow.back(), c1L));

    // c_j(E tensor M) = sum_i C(rank - i, j - i) c_i(E) t^{j-i}
    std::vector<GradedClass> chern;
    for (int j = 1; j <= top; ++j) {
        GradedClass cj = ring->zero();
        for (int i = 0; i <= j; ++i) {
            Integer b = binomial(E.rank - i, j - i);
            if (b == 0) continue;
            GradedClass ci = i == 0 ? ring->one() : E.chern_class(i);
            cj += ring_mul(ci, tpow[j - i]) * Rational(b);
        }
        chern.push_back(cj);
    }
    return formal_bundle(ring, E.rank, std::move(chern));
}

FormalBundle dual(const FormalBundle& E) {
    std::vector<GradedClass> chern;
    for (std::size_t i = 0; i < E.chern.size(); ++i)
        chern.push_back(i % 2 == 0 ? -E.chern[i] : E.chern[i]);
    return formal_bundle(E.ring, E.rank, std::move(chern));
}

} // namespace fano
