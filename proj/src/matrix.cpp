#include "pentad/matrix.hpp"

#include "pentad/error.hpp"

namespace pentad {

std::vector<Rat> Mat::column(int c) const {
    std::vector<Rat> v(rows);
    for (int r = 0; r < rows; ++r) v[r] = at(r, c);
    return v;
}

void Mat::set_column(int c, const std::vector<Rat>& v) {
    for (int r = 0; r < rows; ++r) at(r, c) = v[r];
}

Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat transpose(const Mat& m) {
    Mat t(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
    return t;
}

Mat mat_mul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) fail("shape_mismatch", "matrix product shape mismatch");
    Mat z(x.rows, y.cols);
    for (int r = 0; r < x.rows; ++r)
        for (int k = 0; k < x.cols; ++k) {
            const Rat& xv = x.at(r, k);
            if (is_zero(xv)) continue;
            for (int c = 0; c < y.cols; ++c) z.at(r, c) += xv * y.at(k, c);
        }
    return z;
}

Mat from_columns(int n, const std::vector<std::vector<Rat>>& cols) {
    Mat m(n, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols; ++c) {
        if (static_cast<int>(cols[c].size()) != n)
            fail("shape_mismatch", "column has wrong length");
        m.set_column(c, cols[c]);
    }
    return m;
}

namespace {

// Clears denominators row by row; scaling rows changes neither the rank nor
// which pivots exist. Returns the integer matrix and the row scale product.
struct IntMat {
    int rows, cols;
    std::vector<mpz_class> a;
    mpz_class& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
};

IntMat clear_denominators(const Mat& m, mpz_class* scale = nullptr) {
    IntMat z{m.rows, m.cols, std::vector<mpz_class>(m.a.size())};
    mpz_class total = 1;
    for (int r = 0; r < m.rows; ++r) {
        mpz_class l = 1;
        for (int c = 0; c < m.cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den().get_mpz_t());
        for (int c = 0; c < m.cols; ++c) {
            Rat v = m.at(r, c) * Rat(l);
            z.at(r, c) = v.get_num();
        }
        total *= l;
    }
    if (scale) *scale = total;
    return z;
}

// Bareiss fraction-free elimination. Returns the rank; when `det` is wanted
// the matrix must be square and the sign-adjusted last pivot is written out.
int bareiss(IntMat m, mpz_class* det) {
    int r = 0;
    int sign = 1;
    mpz_class prev = 1;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
            sign = -sign;
        }
        for (int i = r + 1; i < m.rows; ++i) {
            for (int j = c + 1; j < m.cols; ++j) {
                mpz_class t = m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        ++r;
    }
    if (det) {
        if (m.rows != m.cols) fail("shape_mismatch", "determinant of non-square matrix");
        if (r < m.rows)
            *det = 0;
        else
            *det = sign * prev;
    }
    return r;
}

} // namespace

int rank(const Mat& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return bareiss(clear_denominators(m), nullptr);
}

int rank(int rows, int cols, const std::vector<Rat>& entries) {
    if (static_cast<std::size_t>(rows) * cols != entries.size())
        fail("shape_mismatch", "entry count does not match declared shape");
    Mat m(rows, cols);
    m.a = entries;
    return rank(m);
}

Rat determinant(const Mat& m) {
    if (m.rows != m.cols) fail("shape_mismatch", "determinant of non-square matrix");
    if (m.rows == 0) return Rat(1);
    mpz_class scale;
    IntMat z = clear_denominators(m, &scale);
    mpz_class d;
    bareiss(std::move(z), &d);
    return Rat(d) / Rat(scale);
}

Rat minor_det(const Mat& m, const std::vector<int>& row_indices,
              const std::vector<int>& col_indices) {
    if (row_indices.size() != col_indices.size())
        fail("cardinality_mismatch", "minor needs equally many rows and columns");
    int k = static_cast<int>(row_indices.size());
    Mat s(k, k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) {
            if (row_indices[r] < 0 || row_indices[r] >= m.rows || col_indices[c] < 0 ||
                col_indices[c] >= m.cols)
                fail("shape_mismatch", "minor index out of range");
            s.at(r, c) = m.at(row_indices[r], col_indices[c]);
        }
    return determinant(s);
}

std::vector<Rat> solve_in_basis(const std::vector<std::vector<Rat>>& basis,
                                const std::vector<Rat>& target) {
    if (basis.empty()) fail("dependent_basis", "empty basis");
    int n = static_cast<int>(basis[0].size());
    int k = static_cast<int>(basis.size());
    Mat aug(n, k + 1);
    for (int c = 0; c < k; ++c) {
        if (static_cast<int>(basis[c].size()) != n) fail("shape_mismatch", "basis vector length");
        aug.set_column(c, basis[c]);
    }
    aug.set_column(k, target);

    // Plain exact Gaussian elimination on the augmented system.
    std::vector<int> pivot_row(k, -1);
    int r = 0;
    for (int c = 0; c < k && r < n; ++c) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (!is_zero(aug.at(i, c))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j <= k; ++j) std::swap(aug.at(piv, j), aug.at(r, j));
        Rat inv = 1 / aug.at(r, c);
        for (int j = c; j <= k; ++j) aug.at(r, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == r || is_zero(aug.at(i, c))) continue;
            Rat f = aug.at(i, c);
            for (int j = c; j <= k; ++j) aug.at(i, j) -= f * aug.at(r, j);
        }
        pivot_row[c] = r;
        ++r;
    }
    for (int c = 0; c < k; ++c)
        if (pivot_row[c] < 0)
            fail("dependent_basis", "basis columns are linearly dependent");
    for (int i = r; i < n; ++i)
        if (!is_zero(aug.at(i, k)))
            fail("target_outside_span", "target is not in the span of the basis");
    std::vector<Rat> x(k);
    for (int c = 0; c < k; ++c) x[c] = aug.at(pivot_row[c], k);
    return x;
}

Mat inverse(const Mat& m) {
    if (m.rows != m.cols) fail("shape_mismatch", "inverse of non-square matrix");
    int n = m.rows;
    Mat aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!is_zero(aug.at(i, c))) { piv = i; break; }
        if (piv < 0) fail("singular_matrix", "matrix is not invertible");
        if (piv != c)
            for (int j = 0; j < 2 * n; ++j) std::swap(aug.at(piv, j), aug.at(c, j));
        Rat inv = 1 / aug.at(c, c);
        for (int j = 0; j < 2 * n; ++j) aug.at(c, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || is_zero(aug.at(i, c))) continue;
            Rat f = aug.at(i, c);
            for (int j = 0; j < 2 * n; ++j) aug.at(i, j) -= f * aug.at(c, j);
        }
    }
    Mat out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
    return out;
}

} // namespace pentad
