#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace pentad {

// Exact rational scalar. mpq_class keeps values canonical: lowest terms,
// positive denominator, and all arithmetic is exact.
using Rat = mpq_class;

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

// Parses "a", "-a" or "a/b" with integer a, b and b != 0. Decimal literals
// and anything else are rejected with a structured error.
Rat rat_from_string(const std::string& text);

std::string rat_to_string(const Rat& q);

// First nonzero entry scaled to 1. Errors on the zero vector.
std::vector<Rat> normalize_projective(const std::vector<Rat>& coords);

} // namespace pentad
