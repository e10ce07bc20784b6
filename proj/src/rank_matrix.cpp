#include "pentad/rank_matrix.hpp"

#include "pentad/error.hpp"

#include <bit>

namespace pentad {

RankMatrix compute_rank_matrix(const ProjConfig& v) {
    RankMatrix phi(v.m);
    for (unsigned mask = 1; mask <= phi.full_mask(); ++mask)
        phi.set(mask, v.subset_rank(mask));
    return phi;
}

bool is_valid_rank_matrix(const RankMatrix& phi, int n, std::string* why) {
    auto bad = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    unsigned full = phi.full_mask();
    if (phi(0) != 0) return bad("value on the empty set is not 0");
    for (int i = 0; i < phi.m; ++i)
        if (phi(1u << i) != 1) return bad("singleton " + std::to_string(i + 1) + " has rank != 1");
    for (unsigned I = 0; I <= full; ++I) {
        int cnt = std::popcount(I);
        if (phi(I) > std::min(cnt, n)) return bad("value exceeds min(#I, n) on " + subset_string(I));
        for (int i = 0; i < phi.m; ++i) {
            if (I & (1u << i)) continue;
            unsigned J = I | (1u << i);
            if (phi(J) < phi(I) || phi(J) > phi(I) + 1)
                return bad("unit increment fails between " + subset_string(I) + " and " +
                           subset_string(J));
        }
    }
    for (unsigned I = 0; I <= full; ++I)
        for (unsigned J = I; J <= full; ++J)
            if (phi(I | J) + phi(I & J) > phi(I) + phi(J))
                return bad("submodularity fails on " + subset_string(I) + ", " + subset_string(J));
    return true;
}

std::vector<unsigned> faces(const RankMatrix& phi, int r) {
    std::vector<unsigned> out;
    unsigned full = phi.full_mask();
    for (unsigned I = 0; I <= full; ++I) {
        if (phi(I) != r) continue;
        bool maximal = true;
        for (int i = 0; i < phi.m && maximal; ++i)
            if (!(I & (1u << i)) && phi(I | (1u << i)) == r) maximal = false;
        if (maximal) out.push_back(I);
    }
    return out;
}

RankType rank_type(const RankMatrix& phi) {
    RankType t;
    int top = phi.top_rank();
    for (int r = 1; r <= top; ++r) t.counts.push_back(static_cast<int>(faces(phi, r).size()));
    std::string s = "(";
    for (int r = 0; r + 1 < static_cast<int>(t.counts.size()); ++r) {
        if (r) s += ",";
        s += std::to_string(t.counts[r]);
    }
    if (t.counts.size() <= 1) s += "∅";
    s += ")";
    t.label = s;
    return t;
}

bool leq(const RankMatrix& smaller, const RankMatrix& larger) {
    if (smaller.m != larger.m) fail("m_mismatch", "rank matrices have different ground sets");
    for (unsigned I = 0; I <= smaller.full_mask(); ++I)
        if (smaller(I) > larger(I)) return false;
    return true;
}

namespace {

// Does B1 | B2 separate the restriction of phi to B = B1 | B2?
bool separates(const RankMatrix& phi, unsigned B1, unsigned B2) {
    unsigned B = B1 | B2;
    for (unsigned I = B;; I = (I - 1) & B) {
        if (phi(I) != phi(I & B1) + phi(I & B2)) return false;
        if (I == 0) break;
    }
    return true;
}

} // namespace

Splitting rho(const RankMatrix& phi) {
    std::vector<unsigned> work{phi.full_mask()};
    std::vector<Splitting::Block> done;
    while (!work.empty()) {
        unsigned B = work.back();
        work.pop_back();
        if (std::popcount(B) <= 1) {
            done.push_back({B, phi(B)});
            continue;
        }
        // Search proper bipartitions of B; fix the lowest bit in one side so
        // each split is tried once.
        unsigned low = B & (~B + 1u);
        unsigned rest = B ^ low;
        bool split = false;
        for (unsigned S = rest;; S = (S - 1) & rest) {
            unsigned B1 = low | S;
            unsigned B2 = B ^ B1;
            if (B2 != 0 && separates(phi, B1, B2)) {
                work.push_back(B1);
                work.push_back(B2);
                split = true;
                break;
            }
            if (S == 0) break;
        }
        if (!split) done.push_back({B, phi(B)});
    }
    return Splitting(phi.m, std::move(done));
}

RankMatrix reduction(const RankMatrix& phi, unsigned J) {
    unsigned full = phi.full_mask();
    if (J > full || J == 0) fail("not_a_face", "subset out of range or empty");
    for (unsigned K = J;; K = (K + 1) | J) { // supersets of J in increasing order
        if (K != J && phi(K) == phi(J))
            fail("not_a_face", subset_string(J) + " is not a face: " + subset_string(K) +
                                   " is strictly larger with equal rank " +
                                   std::to_string(phi(J)));
        if (K == full) break;
    }
    RankMatrix out(phi.m);
    for (unsigned I = 0; I <= full; ++I) out.set(I, phi(I | J) + phi(I & J) - phi(J));
    return out;
}

std::string subset_string(unsigned mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i)
        if (mask & (1u << i)) {
            if (!first) s += ",";
            s += std::to_string(i + 1);
            first = false;
        }
    return s + "}";
}

} // namespace pentad
