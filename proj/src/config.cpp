#include "pentad/config.hpp"

#include "pentad/error.hpp"

namespace pentad {

ProjConfig::ProjConfig(int n_, int m_, Mat cols_) : n(n_), m(m_), cols(std::move(cols_)) {
    if (cols.rows != n || cols.cols != m)
        fail("shape_mismatch", "configuration matrix has the wrong shape");
    if (n < 1 || m < 1) fail("invalid_config", "need n >= 1 and m >= 1");
    for (int c = 0; c < m; ++c) {
        bool nonzero = false;
        for (int r = 0; r < n; ++r)
            if (!is_zero(cols.at(r, c))) { nonzero = true; break; }
        if (!nonzero)
            fail("zero_column", "column " + std::to_string(c + 1) +
                                    " is zero and defines no projective point");
    }
}

ProjConfig ProjConfig::normalized() const {
    Mat out = cols;
    for (int c = 0; c < m; ++c) out.set_column(c, normalize_projective(out.column(c)));
    return ProjConfig(n, m, out);
}

Mat ProjConfig::submatrix(unsigned mask) const {
    std::vector<int> picked;
    for (int c = 0; c < m; ++c)
        if (mask & (1u << c)) picked.push_back(c);
    Mat s(n, static_cast<int>(picked.size()));
    for (int j = 0; j < s.cols; ++j)
        for (int r = 0; r < n; ++r) s.at(r, j) = cols.at(r, picked[j]);
    return s;
}

int ProjConfig::subset_rank(unsigned mask) const {
    if (mask == 0) return 0;
    return rank(submatrix(mask));
}

ProjConfig config_from_columns(int n, const std::vector<std::vector<Rat>>& columns) {
    return ProjConfig(n, static_cast<int>(columns.size()), from_columns(n, columns));
}

std::vector<Rat> coordinates_in_span(const ProjConfig& v, const std::vector<int>& basis_indices,
                                     int target_index) {
    std::vector<std::vector<Rat>> basis;
    for (int i : basis_indices) {
        if (i < 1 || i > v.m) fail("shape_mismatch", "basis index out of range");
        basis.push_back(v.point(i - 1));
    }
    if (target_index < 1 || target_index > v.m)
        fail("shape_mismatch", "target index out of range");
    return solve_in_basis(basis, v.point(target_index - 1));
}

bool projectively_equal(const ProjConfig& a, const ProjConfig& b) {
    if (a.n != b.n || a.m != b.m) return false;
    return a.normalized().cols == b.normalized().cols;
}

ProjConfig act(const Mat& g, const ProjConfig& v) {
    if (g.rows != v.n || g.cols != v.n) fail("shape_mismatch", "group element has wrong shape");
    return ProjConfig(v.n, v.m, mat_mul(g, v.cols));
}

ProjConfig permute_columns(const ProjConfig& v, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != v.m) fail("shape_mismatch", "permutation length");
    Mat out(v.n, v.m);
    for (int c = 0; c < v.m; ++c) out.set_column(c, v.cols.column(perm[c]));
    return ProjConfig(v.n, v.m, out);
}

} // namespace pentad
