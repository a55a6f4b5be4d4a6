#include <algorithm>

#include "fano/ring.hpp"

namespace fano {

SchubertRing::SchubertRing(int k, int n)
    : k_(k), n_(n), cols_(n - k), dim_(k * (n - k)), fund_(1) {
    if (k < 1 || n < 2 || k > n - 1)
        throw PreconditionError("Grassmannian parameters out of range");
    basis_.resize(dim_ + 1);
    for (int d = 0; d <= dim_; ++d) {
        basis_[d] = partitions_in_box(k_, cols_, d);
        for (int i = 0; i < static_cast<int>(basis_[d].size()); ++i)
            index_.emplace(basis_[d][i], std::make_pair(d, i));
    }
}

int SchubertRing::basis_size(int degree) const {
    if (degree < 0 || degree > dim_) return 0;
    return static_cast<int>(basis_[degree].size());
}

std::string SchubertRing::basis_label(int degree, int index) const {
    const auto& parts = basis_[degree][index];
    if (parts.empty()) return "1";
    std::string s = "s(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

const std::vector<std::vector<int>>& SchubertRing::basis_partitions(int degree) const {
    return basis_[degree];
}

int SchubertRing::index_of(const std::vector<int>& parts) const {
    auto it = index_.find(parts);
    if (it == index_.end()) throw PreconditionError("partition not in the box");
    return it->second.second;
}

GradedClass SchubertRing::schubert_class(const std::vector<int>& parts) const {
    auto it = index_.find(parts);
    if (it == index_.end()) throw PreconditionError("partition not in the box");
    return basis(it->second.first, it->second.second);
}

const std::vector<int>& SchubertRing::pieri_targets(int degree, int index, int row) const {
    auto key = std::make_tuple(degree, index, row);
    auto it = pieri_targets_.find(key);
    if (it != pieri_targets_.end()) return it->second;

    std::vector<int> targets;
    Partition p(basis_[degree][index], k_, cols_);
    for (const Partition& mu : pieri_multiply(p, row))
        targets.push_back(index_.find(mu.parts)->second.second);
    return pieri_targets_.emplace(key, std::move(targets)).first->second;
}

SchubertRing::DenseClass SchubertRing::expand_rows(int degree, int index,
                                                   const std::vector<int>& rows) const {
    DenseClass cur{degree, std::vector<Integer>(basis_size(degree), 0)};
    cur.second[index] = 1;
    for (int r : rows) {
        int next_degree = cur.first + r;
        DenseClass next{next_degree, std::vector<Integer>(basis_size(next_degree), 0)};
        if (next.second.empty()) return next;
        for (int i = 0; i < static_cast<int>(cur.second.size()); ++i) {
            if (cur.second[i] == 0) continue;
            for (int tgt : pieri_targets(cur.first, i, r)) next.second[tgt] += cur.second[i];
        }
        cur = std::move(next);
    }
    return cur;
}

// sigma_mu as an integer combination of products of single-row classes.
// The expansion of such a product contains sigma_mu with coefficient 1 and
// otherwise only partitions strictly above mu in dominance order, so the
// recursion terminates.
const SchubertRing::StraightExpr& SchubertRing::straighten(const std::vector<int>& mu) const {
    auto it = straighten_.find(mu);
    if (it != straighten_.end()) return it->second;

    int weight = 0;
    for (int r : mu) weight += r;
    DenseClass e = expand_rows(0, 0, mu);
    std::map<std::vector<int>, Integer> acc;
    acc[mu] = 1;
    for (int i = 0; i < static_cast<int>(e.second.size()); ++i) {
        if (e.second[i] == 0) continue;
        const auto& nu = basis_[weight][i];
        if (nu == mu) continue;
        for (const auto& [c2, rows] : straighten(nu)) acc[rows] -= e.second[i] * c2;
    }
    StraightExpr expr;
    for (auto& [rows, c] : acc)
        if (c != 0) expr.emplace_back(c, rows);
    return straighten_.emplace(mu, std::move(expr)).first->second;
}

void SchubertRing::basis_product_terms(int d1, int i1, int d2, int i2,
                                       const TermSink& emit) const {
    const auto& p = basis_[d1][i1];
    const auto& q = basis_[d2][i2];
    if (p.empty()) {
        emit(d2, i2, Rational(1));
        return;
    }
    if (q.empty()) {
        emit(d1, i1, Rational(1));
        return;
    }

    // Straighten the lighter factor, iterate Pieri steps from the other.
    const auto* big = &p;
    const auto* small = &q;
    int big_degree = d1, big_index = i1;
    if (d1 < d2 || (d1 == d2 && p < q)) {
        std::swap(big, small);
        big_degree = d2;
        big_index = i2;
    }

    std::lock_guard<std::recursive_mutex> lock(cache_mu_);
    auto key = std::make_pair(*big, *small);
    auto hit = pair_cache_.find(key);
    if (hit == pair_cache_.end()) {
        DenseClass out{d1 + d2, std::vector<Integer>(basis_size(d1 + d2), 0)};
        for (const auto& [c, rows] : straighten(*small)) {
            DenseClass term = expand_rows(big_degree, big_index, rows);
            for (int i = 0; i < static_cast<int>(term.second.size()); ++i)
                if (term.second[i] != 0) out.second[i] += c * term.second[i];
        }
        hit = pair_cache_.emplace(std::move(key), std::move(out)).first;
    }
    const DenseClass& value = hit->second;
    for (int i = 0; i < static_cast<int>(value.second.size()); ++i)
        if (value.second[i] != 0) emit(value.first, i, Rational(value.second[i]));
}

std::shared_ptr<const SchubertRing> make_schubert_ring(int k, int n) {
    return std::make_shared<const SchubertRing>(k, n);
}

} // namespace fano
