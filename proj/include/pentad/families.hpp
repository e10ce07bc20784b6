#pragma once

#include "pentad/rank_matrix.hpp"
#include "pentad/splitting.hpp"

#include <optional>
#include <string>

namespace pentad {

// Kinds of rank matrices on five points in P^3. VarpiFibre rows are the
// single-orbit fibres of the splitting map; the others are the named
// families living over the splittings {5^3}, {5^2} and {1^1,4^2}.
enum class Fam {
    VarpiFibre, // whole splitting fibre, splitting in P'
    P53,        // phi[5^3],        type (5,10), parameter in (P^2)'
    P53_J3,     // phi[5^3;J] #J=3, type (5,8),  parameter in (P^1)'
    P53_J1J2,   // phi[5^3;J1,J2],  type (5,6),  single orbit
    P53_J2,     // phi[5^3;J] #J=2, type (4,6),  single orbit
    P52,        // phi[5^2],        type (5),    parameter in (P^1 x P^1)'
    P52_J2,     // phi[5^2;J] #J=2, type (4),    parameter in (P^1)'
    P52_J1J2,   // phi[5^2;J1,J2],  type (3)a,   single orbit
    P52_J3,     // phi[5^2;J] #J=3, type (3)b,   single orbit
    P42,        // phi[4^2;i],      type (5,5),  parameter in (P^1)'
    P42_J,      // phi[4^2;i;J],    type (4,4)b, single orbit
};

enum class ParamKind { None, P1, P2, P1xP1 };

struct FamilyKey {
    Fam fam = Fam::VarpiFibre;
    unsigned J = 0;   // primary index subset (mask), when applicable
    unsigned J2 = 0;  // secondary subset for the two-subset families
    int i = 0;        // distinguished point (1-based) for phi[4^2;...]
    Splitting split;  // the splitting, for VarpiFibre rows

    FamilyKey() = default;
    FamilyKey(Fam f, unsigned J_ = 0, unsigned J2_ = 0, int i_ = 0)
        : fam(f), J(J_), J2(J2_), i(i_) {}
    explicit FamilyKey(Splitting s) : fam(Fam::VarpiFibre), split(std::move(s)) {}

    bool parametrized() const;
    ParamKind param_kind() const;

    RankMatrix rank_matrix() const;
    std::string type_label() const; // Table-style label, e.g. "(4,4)b"
    std::string tag() const;        // e.g. "phi[4^2;1;{4,5}]"

    // Representative over Q at the given parameter points (homogeneous
    // coordinates, validated against the generic locus). Unparametrized
    // rows take none.
    ProjConfig representative_with(const std::vector<std::vector<Rat>>& params) const;

    // Catalogued representative, parametrized rows at the fixed generic
    // parameters [1:2], [1:2:3] and ([1:2],[1:3]).
    ProjConfig default_representative() const;

    bool operator==(const FamilyKey& o) const;
};

// Inverse of tag(); errors with "bad_family_tag".
FamilyKey parse_family_tag(const std::string& tag);

// Generic-locus predicates for the three parameter spaces.
bool p1_generic(const std::vector<Rat>& p);                          // p1 p2 (p1-p2) != 0
bool p2_generic(const std::vector<Rat>& p);                          // all coords and differences != 0
bool p1xp1_generic(const std::vector<Rat>& p, const std::vector<Rat>& q);

} // namespace pentad
