#pragma once

#include "pentad/matrix.hpp"

#include <vector>

namespace pentad {

// An ordered tuple of m points of P^{n-1}, stored as the columns of an
// n x m matrix. Columns are never zero; two configs are the same tuple of
// projective points iff columns agree up to a nonzero scalar each.
struct ProjConfig {
    int n = 0;
    int m = 0;
    Mat cols; // n x m

    ProjConfig() = default;
    ProjConfig(int n_, int m_, Mat cols_);

    std::vector<Rat> point(int i) const { return cols.column(i); } // 0-based

    // Scales every column so its first nonzero entry is 1.
    ProjConfig normalized() const;

    // Columns picked by a bitmask over {0,...,m-1}.
    Mat submatrix(unsigned mask) const;

    int subset_rank(unsigned mask) const;
    int full_rank() const { return subset_rank((1u << m) - 1u); }
};

ProjConfig config_from_columns(int n, const std::vector<std::vector<Rat>>& columns);

// Coefficients of the target column in the independent columns listed in
// basis_indices (1-based). Errors: "dependent_basis", "target_outside_span".
std::vector<Rat> coordinates_in_span(const ProjConfig& v, const std::vector<int>& basis_indices,
                                     int target_index);

bool projectively_equal(const ProjConfig& a, const ProjConfig& b);

// Left action of g on every column; g must be invertible n x n.
ProjConfig act(const Mat& g, const ProjConfig& v);

// Columns permuted: result column i is v's column perm[i] (0-based).
ProjConfig permute_columns(const ProjConfig& v, const std::vector<int>& perm);

} // namespace pentad
