#pragma once

#include <string>
#include <vector>

namespace fano {

/// Weakly decreasing nonnegative integer sequence confined to a
/// box_rows x box_cols box. Indexes Schubert basis elements; the weight
/// |lambda| is the cohomological degree of the class.
struct Partition {
    std::vector<int> parts; // positive entries, weakly decreasing
    int box_rows = 0;
    int box_cols = 0;

    Partition(std::vector<int> parts, int box_rows, int box_cols);

    int weight() const;
    bool empty() const { return parts.empty(); }

    /// Complement inside the box: the partition whose Schubert class is
    /// Poincare dual to this one.
    Partition complement() const;

    /// "2,1" (empty partition renders as "0").
    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts == b.parts && a.box_rows == b.box_rows &&
               a.box_cols == b.box_cols;
    }
};

/// Pieri rule: sigma_p * sigma_r as the multiplicity-free sum of sigma_mu
/// over mu obtained from p by adding a horizontal strip of size r inside
/// the box. Throws PreconditionError unless 1 <= r <= box_cols.
std::vector<Partition> pieri_multiply(const Partition& p, int row_class_degree);

/// All partitions of the given weight fitting in a rows x cols box, in
/// decreasing lexicographic order.
std::vector<std::vector<int>> partitions_in_box(int rows, int cols, int weight);

} // namespace fano
