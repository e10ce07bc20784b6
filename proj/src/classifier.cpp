#include "pentad/classifier.hpp"

#include "pentad/error.hpp"

#include <bit>

namespace pentad {

std::string ProjParam::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ":";
        s += rat_to_string(coords[i]);
    }
    return s + "]";
}

namespace {

std::vector<int> members(unsigned mask) { // 1-based
    std::vector<int> v;
    for (int i = 0; i < 32; ++i)
        if (mask & (1u << i)) v.push_back(i + 1);
    return v;
}

std::vector<Rat> scaled(const Rat& a, const std::vector<Rat>& x) {
    std::vector<Rat> v(x.size());
    for (std::size_t r = 0; r < x.size(); ++r) v[r] = a * x[r];
    return v;
}

// Scales the columns at `anchors` (1-based) so the column at `sum_point`
// is their plain sum, then returns the scaled columns.
std::vector<std::vector<Rat>> sum_frame(const ProjConfig& v, const std::vector<int>& anchors,
                                        int sum_point) {
    std::vector<std::vector<Rat>> basis;
    for (int a : anchors) basis.push_back(v.point(a - 1));
    auto coeff = solve_in_basis(basis, v.point(sum_point - 1));
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (is_zero(coeff[k]))
            fail("internal_error", "frame point is degenerate against its anchors");
        basis[k] = scaled(coeff[k], basis[k]);
    }
    return basis;
}

ProjParam read_param(const ProjConfig& v, const std::vector<std::vector<Rat>>& frame,
                     int point) {
    return ProjParam(solve_in_basis(frame, v.point(point - 1)));
}

} // namespace

OrbitClass classify(const ProjConfig& v) {
    if (v.n != 4 || v.m != 5)
        fail("dimension_mismatch", "classification needs five points in P^3 (n=4, m=5)");
    const Catalogue& cat = Catalogue::get();
    OrbitClass out;
    out.phi = compute_rank_matrix(v);
    int idx = cat.require(out.phi);
    const CatalogueEntry& entry = cat.entries()[idx];
    out.family = entry.family;
    out.type_label = entry.type_label;
    if (entry.single_orbit) return out;

    const FamilyKey& key = entry.family;
    switch (key.fam) {
        case Fam::P53: {
            // frame (1,2,3) scaled against point 4, parameter read at 5
            out.frame = {1, 2, 3, 4, 5};
            auto frame = sum_frame(v, {1, 2, 3}, 4);
            out.params = {read_param(v, frame, 5)};
            break;
        }
        case Fam::P53_J3: {
            // the two anchors of the collinear triple and the off point are
            // scaled against the remaining off point; the parameter is the
            // third collinear point in line coordinates
            auto j = members(key.J);
            auto d = members(~key.J & 31u);
            out.frame = {j[0], j[1], j[2], d[0], d[1]};
            auto frame = sum_frame(v, {j[0], j[1], d[0]}, d[1]);
            out.params = {read_param(v, {frame[0], frame[1]}, j[2])};
            break;
        }
        case Fam::P52: {
            out.frame = {1, 2, 3, 4, 5};
            auto frame = sum_frame(v, {1, 2}, 3);
            out.params = {read_param(v, frame, 4), read_param(v, frame, 5)};
            break;
        }
        case Fam::P52_J2: {
            auto j = members(key.J);
            auto rest = members(~key.J & 31u);
            out.frame = {rest[0], rest[1], rest[2], j[0], j[1]};
            auto frame = sum_frame(v, {rest[0], rest[1]}, rest[2]);
            out.params = {read_param(v, frame, j[0])};
            break;
        }
        case Fam::P42: {
            auto rest = members(~(1u << (key.i - 1)) & 31u);
            out.frame = {key.i, rest[0], rest[1], rest[2], rest[3]};
            auto frame = sum_frame(v, {rest[0], rest[1]}, rest[2]);
            out.params = {read_param(v, frame, rest[3])};
            break;
        }
        default:
            fail("internal_error", "parametrized family without an extraction rule");
    }
    return out;
}

bool same_orbit(const ProjConfig& v, const ProjConfig& w) { return classify(v) == classify(w); }

int orbit_dimension(const ProjConfig& v) {
    int n = v.n, m = v.m;
    // For each point, a change of basis whose first vector is the point; the
    // quotient coordinates of a vector are the remaining rows of T w.
    std::vector<Mat> quotient; // (n-1) x n each
    for (int i = 0; i < m; ++i) {
        Mat b(n, n);
        b.set_column(0, v.point(i));
        int filled = 1;
        for (int k = 0; k < n && filled < n; ++k) {
            b.set_column(filled, identity(n).column(k));
            Mat probe(n, filled + 1);
            for (int c = 0; c <= filled; ++c) probe.set_column(c, b.column(c));
            if (rank(probe) == filled + 1) ++filled;
        }
        Mat t = inverse(b);
        Mat q(n - 1, n);
        for (int r = 1; r < n; ++r)
            for (int c = 0; c < n; ++c) q.at(r - 1, c) = t.at(r, c);
        quotient.push_back(std::move(q));
    }
    // Row (i, k), column (r, c): the (k-th quotient coordinate at point i) of
    // E_{rc} v_i, which is (v_i)_c * Q_i[k, r].
    Mat act(m * (n - 1), n * n);
    for (int i = 0; i < m; ++i) {
        auto vi = v.point(i);
        for (int k = 0; k < n - 1; ++k)
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    act.at(i * (n - 1) + k, r * n + c) = vi[c] * quotient[i].at(k, r);
    }
    return rank(act);
}

} // namespace pentad
