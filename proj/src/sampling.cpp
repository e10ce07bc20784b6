#include "pentad/sampling.hpp"

#include "pentad/error.hpp"
#include "pentad/matrix.hpp"

#include <bit>

namespace pentad {

int Sampler::uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Rat Sampler::small_rat(int mag) {
    int num = uniform(-mag, mag);
    int den = uniform(1, 4);
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat Sampler::nonzero_rat(int mag) {
    while (true) {
        Rat q = small_rat(mag);
        if (!is_zero(q)) return q;
    }
}

std::vector<Rat> Sampler::vector(int n, bool nonzero) {
    while (true) {
        std::vector<Rat> v(n);
        bool any = false;
        for (int i = 0; i < n; ++i) {
            v[i] = small_rat();
            if (!is_zero(v[i])) any = true;
        }
        if (any || !nonzero) return v;
    }
}

Mat Sampler::invertible(int n, int mag) {
    while (true) {
        Mat g(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) g.at(r, c) = uniform(-mag, mag);
        if (!is_zero(determinant(g))) return g;
    }
}

std::vector<Rat> Sampler::p1_point() {
    while (true) {
        std::vector<Rat> p{Rat(1), nonzero_rat()};
        if (!is_zero(p[1] - 1)) return p;
    }
}

std::vector<Rat> Sampler::p2_point() {
    while (true) {
        std::vector<Rat> p{Rat(1), nonzero_rat(), nonzero_rat()};
        if (!is_zero(p[1] - 1) && !is_zero(p[2] - 1) && !is_zero(p[1] - p[2])) return p;
    }
}

Splitting Sampler::image_splitting(int n, int m) {
    while (true) {
        // random partition: each point picks a bucket
        std::vector<unsigned> buckets(m, 0);
        for (int i = 0; i < m; ++i) buckets[uniform(0, m - 1)] |= 1u << i;
        std::vector<Splitting::Block> blocks;
        int total = 0;
        bool ok = true;
        for (unsigned b : buckets) {
            if (!b) continue;
            int size = std::popcount(b);
            std::vector<int> ranks{1};
            for (int r = 2; r <= size - 1; ++r) ranks.push_back(r);
            int rk = ranks[uniform(0, static_cast<int>(ranks.size()) - 1)];
            blocks.push_back({b, rk});
            total += rk;
        }
        if (total > n) ok = false;
        if (ok) return Splitting(m, std::move(blocks));
    }
}

ProjConfig Sampler::config(int n, int m) {
    if (uniform(0, 1) == 0) {
        std::vector<std::vector<Rat>> cols;
        for (int c = 0; c < m; ++c) cols.push_back(vector(n));
        return config_from_columns(n, cols);
    }
    Splitting s = image_splitting(n, m);
    std::vector<std::vector<Rat>> params;
    for (const auto& b : s.blocks) {
        int size = std::popcount(b.mask);
        if (b.rank >= 2)
            for (int k = 0; k < size - 1 - b.rank; ++k) params.push_back(vector(b.rank));
    }
    ProjConfig v = representative(s, n, params);
    Mat g = invertible(n, 3);
    ProjConfig w = act(g, v);
    // random column rescaling keeps the projective tuple
    Mat cols = w.cols;
    for (int c = 0; c < m; ++c) {
        Rat sc = nonzero_rat(4);
        for (int r = 0; r < n; ++r) cols.at(r, c) *= sc;
    }
    return ProjConfig(n, m, std::move(cols));
}

} // namespace pentad
