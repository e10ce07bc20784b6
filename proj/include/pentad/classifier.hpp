#pragma once

#include "pentad/enumeration.hpp"

#include <string>
#include <vector>

namespace pentad {

// A projective parameter point, kept with first nonzero coordinate 1.
struct ProjParam {
    std::vector<Rat> coords;

    ProjParam() = default;
    explicit ProjParam(const std::vector<Rat>& c) : coords(normalize_projective(c)) {}

    bool operator==(const ProjParam& o) const { return coords == o.coords; }
    std::string str() const;
};

// Canonical orbit descriptor: two configurations get equal descriptors
// exactly when they lie in the same orbit.
struct OrbitClass {
    RankMatrix phi;
    FamilyKey family;
    std::string type_label;
    std::vector<ProjParam> params; // one point, or two for phi[5^2]
    std::vector<int> frame;        // canonical position -> input point (1-based)

    bool parametrized() const { return !params.empty(); }
    bool operator==(const OrbitClass& o) const { return phi == o.phi && params == o.params; }
};

// Full classification for five points in P^3. The frame rule picks the
// lexicographically smallest index tuple that maps onto the family's
// canonical representative, so the result is a function of the orbit.
OrbitClass classify(const ProjConfig& v);

bool same_orbit(const ProjConfig& v, const ProjConfig& w);

// Rank of the linearized action: the map sending a 4x4 matrix A to the
// tuple of images of A v_i in K^4 / <v_i>. Equals the orbit dimension.
int orbit_dimension(const ProjConfig& v);

} // namespace pentad
