#include "fano/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "fano/errors.hpp"

namespace fano {

Partition::Partition(std::vector<int> p, int rows, int cols)
    : parts(std::move(p)), box_rows(rows), box_cols(cols) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    if (box_rows < 0 || box_cols < 0)
        throw PreconditionError("negative box dimensions");
    if (static_cast<int>(parts.size()) > box_rows)
        throw PreconditionError("partition has more rows than the box");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0 || parts[i] > box_cols)
            throw PreconditionError("partition part outside the box");
        if (i > 0 && parts[i] > parts[i - 1])
            throw PreconditionError("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

Partition Partition::complement() const {
    std::vector<int> comp(box_rows);
    for (int i = 0; i < box_rows; ++i) {
        int rev = box_rows - 1 - i;
        int part = rev < static_cast<int>(parts.size()) ? parts[rev] : 0;
        comp[i] = box_cols - part;
    }
    return Partition(std::move(comp), box_rows, box_cols);
}

std::string Partition::to_string() const {
    if (parts.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(parts[i]);
    }
    return s;
}

std::vector<Partition> pieri_multiply(const Partition& p, int row_class_degree) {
    if (row_class_degree < 1 || row_class_degree > p.box_cols)
        throw PreconditionError("Pieri row class degree out of range");

    // mu interlaces p: p[i-1] >= mu[i] >= p[i] (at most one added box per
    // column), mu[0] <= box_cols, total added boxes = row_class_degree.
    std::vector<Partition> out;
    std::vector<int> padded(p.box_rows, 0);
    std::copy(p.parts.begin(), p.parts.end(), padded.begin());
    std::vector<int> mu(p.box_rows, 0);

    std::function<void(int, int)> rec = [&](int row, int remaining) {
        if (row == p.box_rows) {
            if (remaining == 0) out.emplace_back(mu, p.box_rows, p.box_cols);
            return;
        }
        int upper = row == 0 ? p.box_cols : padded[row - 1];
        upper = std::min(upper, padded[row] + remaining);
        for (int v = padded[row]; v <= upper; ++v) {
            mu[row] = v;
            rec(row + 1, remaining - (v - padded[row]));
        }
        mu[row] = padded[row];
    };
    rec(0, row_class_degree);
    return out;
}

std::vector<std::vector<int>> partitions_in_box(int rows, int cols, int weight) {
    std::vector<std::vector<int>> out;
    if (weight < 0 || weight > rows * cols) return out;
    std::vector<int> current;
    std::function<void(int, int, int)> rec = [&](int row, int maxPart, int remaining) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        if (row == rows) return;
        for (int v = std::min(maxPart, remaining); v >= 1; --v) {
            current.push_back(v);
            rec(row + 1, v, remaining - v);
            current.pop_back();
        }
    };
    rec(0, cols, weight);
    return out;
}

} // namespace fano
