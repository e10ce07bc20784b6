#pragma once

#include "pentad/config.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pentad {

struct RankMatrix;

// A partition of {1,...,m} into blocks, each with a rank. Blocks are kept
// sorted by their minimum element so equality is structural.
struct Splitting {
    struct Block {
        unsigned mask = 0; // bit i <=> point i+1 belongs to the block
        int rank = 0;
    };

    int m = 0;
    std::vector<Block> blocks;

    Splitting() = default;
    Splitting(int m_, std::vector<Block> blocks_); // validates and sorts

    // Multiset {(block size)^(block rank)}, sorted by size then rank.
    std::vector<std::pair<int, int>> type() const;
    std::string type_string() const;   // e.g. "{1^1,4^3}"
    std::string blocks_string() const; // e.g. "{{1}^1,{2,3,4,5}^3}"

    int total_rank() const;

    bool operator==(const Splitting& o) const;
};

Splitting make_splitting(int m, const std::vector<std::pair<std::vector<int>, int>>& blocks);

// Finest decomposition of v into blocks spanning independent subspaces with
// every block essentially indecomposable; block ranks are the span dimensions.
Splitting compute_splitting(const ProjConfig& v);

// Whether s arises from some configuration in P^{n-1}: every block has
// rank 1 or 2 <= rank <= size-1, and the ranks sum to at most n.
bool image_membership(const Splitting& s, int n);

// Whether every block has rank 1 or rank = size - 1 (with rank >= 2).
// Exactly these splittings have a single orbit as their full fibre.
bool pprime_membership(const Splitting& s);

// The unique rank matrix with the given splitting, I -> sum_k min(#(I cap I_k), r_k).
// Requires pprime_membership(s).
RankMatrix rho_inverse(const Splitting& s);

struct ProjParam; // classifier.hpp

// Block-diagonal representative: block k occupies rows R(k)+1..R(k)+r_k and
// its columns hold the standard basis, their sum, then the parameter points.
// Rank-1 blocks repeat their single basis vector. `params` supplies, for each
// block with rank >= 2, size-1-rank points of P^{rank-1}, flattened in block
// order; blocks needing none take none.
ProjConfig representative(const Splitting& s, int n,
                          const std::vector<std::vector<Rat>>& params = {});

} // namespace pentad
