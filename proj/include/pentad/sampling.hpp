#pragma once

#include "pentad/splitting.hpp"

#include <random>

namespace pentad {

// Deterministic sampling helpers; everything is seeded explicitly so runs
// are reproducible.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi); // inclusive
    Rat small_rat(int mag = 9);  // numerator in [-mag, mag], denominator in [1, 4]
    Rat nonzero_rat(int mag = 9);

    std::vector<Rat> vector(int n, bool nonzero = true);
    Mat invertible(int n, int mag = 5);

    // Generic parameter points for the three parameter spaces.
    std::vector<Rat> p1_point();
    std::vector<Rat> p2_point();

    // Random configuration: half the draws are structurally planted (a
    // random admissible splitting realized and translated), half generic.
    ProjConfig config(int n, int m);

    // A random admissible splitting for (n, m).
    Splitting image_splitting(int n, int m);

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace pentad
