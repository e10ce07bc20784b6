#pragma once

#include "pentad/config.hpp"
#include "pentad/splitting.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pentad {

// The function I -> dim span{v_i : i in I} on all subsets of {1,...,m},
// stored densely and indexed by bitmask (bit i <=> point i+1).
struct RankMatrix {
    int m = 0;
    std::vector<std::uint8_t> values; // size 2^m

    RankMatrix() = default;
    explicit RankMatrix(int m_) : m(m_), values(std::size_t(1) << m_, 0) {}

    unsigned full_mask() const { return (1u << m) - 1u; }
    int operator()(unsigned mask) const { return values[mask]; }
    void set(unsigned mask, int v) { values[mask] = static_cast<std::uint8_t>(v); }

    int top_rank() const { return values[full_mask()]; }

    // Dense key for hashing / map lookup.
    std::string key() const { return std::string(values.begin(), values.end()); }

    bool operator==(const RankMatrix& o) const { return m == o.m && values == o.values; }
};

RankMatrix compute_rank_matrix(const ProjConfig& v);

// Checks phi(empty)=0, phi({i})=1, monotonicity, unit increments,
// submodularity and phi(I) <= min(#I, n).
bool is_valid_rank_matrix(const RankMatrix& phi, int n, std::string* why = nullptr);

// Inclusion-maximal subsets with value r. Out-of-range r gives the empty set.
std::vector<unsigned> faces(const RankMatrix& phi, int r);

struct RankType {
    std::vector<int> counts; // r-face counts for r = 1..top rank
    std::string label;       // truncated form, e.g. "(4,4)"; "(∅)" when empty
};

RankType rank_type(const RankMatrix& phi);

// phi(I) <= psi(I) everywhere? Errors when the ground sets differ.
bool leq(const RankMatrix& smaller, const RankMatrix& larger);

// Finest partition {I_k} with phi(I) = sum_k phi(I cap I_k) for all I and
// every restriction indecomposable; block ranks are phi(I_k).
Splitting rho(const RankMatrix& phi);

// Degeneration of phi along a face J:  I -> phi(I u J) + phi(I n J) - phi(J).
// Errors with "not_a_face", naming a strictly larger subset of equal rank.
RankMatrix reduction(const RankMatrix& phi, unsigned face_mask);

std::string subset_string(unsigned mask); // e.g. "{1,3,5}"

// Generated partial orders on the enumerated catalogue for (n,m) = (4,5);
// see enumeration.hpp for the underlying graphs. Errors with "not_in_image"
// when an argument is not a catalogued rank matrix.
bool preceq(const RankMatrix& psi, const RankMatrix& phi);
bool prec(const RankMatrix& psi, const RankMatrix& phi);

} // namespace pentad
