#include "pentad/splitting.hpp"

#include "pentad/error.hpp"
#include "pentad/rank_matrix.hpp"

#include <algorithm>
#include <bit>

namespace pentad {

Splitting::Splitting(int m_, std::vector<Block> blocks_) : m(m_), blocks(std::move(blocks_)) {
    unsigned seen = 0;
    for (const Block& b : blocks) {
        if (b.mask == 0) fail("invalid_splitting", "empty block");
        if (b.mask & seen) fail("invalid_splitting", "blocks overlap");
        if (b.rank < 0) fail("invalid_splitting", "negative block rank");
        seen |= b.mask;
    }
    if (seen != (1u << m) - 1u) fail("invalid_splitting", "blocks do not cover the ground set");
    std::sort(blocks.begin(), blocks.end(),
              [](const Block& a, const Block& b) { return (a.mask & (~a.mask + 1u)) < (b.mask & (~b.mask + 1u)); });
}

std::vector<std::pair<int, int>> Splitting::type() const {
    std::vector<std::pair<int, int>> t;
    for (const Block& b : blocks) t.emplace_back(std::popcount(b.mask), b.rank);
    std::sort(t.begin(), t.end());
    return t;
}

std::string Splitting::type_string() const {
    std::string s = "{";
    auto t = type();
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i].first) + "^" + std::to_string(t[i].second);
    }
    return s + "}";
}

std::string Splitting::blocks_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += ",";
        s += subset_string(blocks[i].mask) + "^" + std::to_string(blocks[i].rank);
    }
    return s + "}";
}

int Splitting::total_rank() const {
    int t = 0;
    for (const Block& b : blocks) t += b.rank;
    return t;
}

bool Splitting::operator==(const Splitting& o) const {
    if (m != o.m || blocks.size() != o.blocks.size()) return false;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].mask != o.blocks[i].mask || blocks[i].rank != o.blocks[i].rank) return false;
    return true;
}

Splitting make_splitting(int m, const std::vector<std::pair<std::vector<int>, int>>& blocks) {
    std::vector<Splitting::Block> bl;
    for (const auto& [pts, r] : blocks) {
        unsigned mask = 0;
        for (int p : pts) {
            if (p < 1 || p > m) fail("invalid_splitting", "point out of range");
            mask |= 1u << (p - 1);
        }
        bl.push_back({mask, r});
    }
    return Splitting(m, std::move(bl));
}

Splitting compute_splitting(const ProjConfig& v) { return rho(compute_rank_matrix(v)); }

bool image_membership(const Splitting& s, int n) {
    int total = 0;
    for (const auto& b : s.blocks) {
        int size = std::popcount(b.mask);
        if (!(b.rank == 1 || (2 <= b.rank && b.rank <= size - 1))) return false;
        total += b.rank;
    }
    return total <= n;
}

bool pprime_membership(const Splitting& s) {
    for (const auto& b : s.blocks) {
        int size = std::popcount(b.mask);
        if (!(b.rank == 1 || (2 <= b.rank && b.rank == size - 1))) return false;
    }
    return true;
}

RankMatrix rho_inverse(const Splitting& s) {
    if (!pprime_membership(s))
        fail("not_pprime", "splitting " + s.blocks_string() +
                               " has a block with 2 <= rank < size-1; its fibre holds more "
                               "than one rank matrix");
    RankMatrix phi(s.m);
    for (unsigned I = 0; I <= phi.full_mask(); ++I) {
        int v = 0;
        for (const auto& b : s.blocks) v += std::min(std::popcount(I & b.mask), b.rank);
        phi.set(I, v);
    }
    return phi;
}

ProjConfig representative(const Splitting& s, int n,
                          const std::vector<std::vector<Rat>>& params) {
    if (s.total_rank() > n)
        fail("shape_mismatch", "block ranks sum beyond the ambient dimension");
    std::vector<std::vector<Rat>> cols(s.m, std::vector<Rat>(n, Rat(0)));
    std::size_t next_param = 0;
    int row_base = 0;
    for (const auto& b : s.blocks) {
        int size = std::popcount(b.mask);
        std::vector<int> pts;
        for (int i = 0; i < s.m; ++i)
            if (b.mask & (1u << i)) pts.push_back(i);
        if (b.rank == 1) {
            for (int p : pts) cols[p][row_base] = 1;
        } else {
            int extras = size - 1 - b.rank;
            for (int j = 0; j < b.rank; ++j) cols[pts[j]][row_base + j] = 1;
            for (int j = 0; j < b.rank; ++j) cols[pts[b.rank]][row_base + j] = 1;
            for (int e = 0; e < extras; ++e) {
                if (next_param >= params.size())
                    fail("bad_parameter_arity",
                         "missing parameter point for block " + subset_string(b.mask));
                const auto& p = params[next_param++];
                if (static_cast<int>(p.size()) != b.rank)
                    fail("bad_parameter_arity",
                         "parameter for block " + subset_string(b.mask) + " must have " +
                             std::to_string(b.rank) + " homogeneous coordinates");
                auto norm = normalize_projective(p);
                for (int j = 0; j < b.rank; ++j) cols[pts[b.rank + 1 + e]][row_base + j] = norm[j];
            }
        }
        row_base += b.rank;
    }
    if (next_param != params.size())
        fail("bad_parameter_arity", "more parameter points supplied than blocks need");
    return config_from_columns(n, cols);
}

} // namespace pentad
