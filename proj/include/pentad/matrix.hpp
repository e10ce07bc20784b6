#pragma once

#include "pentad/rational.hpp"

#include <cstddef>
#include <vector>

namespace pentad {

// Dense rational matrix, row major.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rat(0)) {}

    Rat& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    std::vector<Rat> column(int c) const;
    void set_column(int c, const std::vector<Rat>& v);

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Mat identity(int n);
Mat transpose(const Mat& m);
Mat mat_mul(const Mat& x, const Mat& y);
Mat from_columns(int n, const std::vector<std::vector<Rat>>& cols);

// Column span dimension, by fraction-free elimination on the
// denominator-cleared integer matrix so intermediate growth stays bounded.
int rank(const Mat& m);
int rank(int rows, int cols, const std::vector<Rat>& entries);

// Exact determinant of a square matrix.
Rat determinant(const Mat& m);

// Determinant of the square submatrix picked by row/column index lists
// (0-based); alternating in the order the columns are listed.
Rat minor_det(const Mat& m, const std::vector<int>& row_indices,
              const std::vector<int>& col_indices);

// Unique coefficients expressing `target` in the given independent columns.
// Errors: "dependent_basis" and "target_outside_span".
std::vector<Rat> solve_in_basis(const std::vector<std::vector<Rat>>& basis,
                                const std::vector<Rat>& target);

// Square inverse; errors with "singular_matrix".
Mat inverse(const Mat& m);

} // namespace pentad
