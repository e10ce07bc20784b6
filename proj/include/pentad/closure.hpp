#pragma once

#include "pentad/classifier.hpp"

#include <string>
#include <vector>

namespace pentad {

enum class Verdict { Disjoint, IntersectsOnly, Contains };

std::string verdict_string(Verdict v);

// One piece of an orbit-closure decomposition, kept exactly as the
// decomposition lists it (overlaps between pieces are not merged away).
struct ClosureComponent {
    enum class Kind { Orbit, ParamSweep, Fibre, VarpiFibre, LowRankLocus };
    Kind kind;

    ProjConfig sample; // Orbit: the orbit through this element

    // ParamSweep: orbits through `sweep_base` with column `sweep_col`
    // replaced by q1*line0 + q2*line1, q running over all of P^1.
    ProjConfig sweep_base;
    int sweep_col = -1;
    std::vector<Rat> line0, line1;

    int node = -1;   // Fibre: catalogue index of the whole pi-fibre
    Splitting split; // VarpiFibre: whole fibre of this splitting
    int low_rank = 0; // LowRankLocus: everything with full rank <= low_rank
};

struct ClosureDescription {
    OrbitClass orbit;
    std::vector<ClosureComponent> components;
};

// For single-orbit fibres: everything below phi. Errors with
// "parametrized_fibre" when the fibre splits into many orbits.
std::vector<RankMatrix> fibre_closure(const RankMatrix& phi);

// Whether the fibre of psi is contained in / meets / misses the closure of
// the orbit o, decided on the reachability graphs. o must be parametrized.
Verdict fibre_closure_verdict(const OrbitClass& o, const RankMatrix& psi);

// The explicit closure decomposition for the orbit o.
ClosureDescription orbit_closure_description(const OrbitClass& o);

// Verdict per catalogue node implied by a decomposition: a fibre fully
// listed is contained, a fibre only some of whose orbits appear is met.
std::vector<Verdict> project_to_fibres(const ClosureDescription& d);

// Representative of the orbit o rebuilt from its family and parameters.
ProjConfig orbit_representative(const OrbitClass& o);

// Sample configurations, one per component (closure members).
std::vector<ProjConfig> component_samples(const ClosureDescription& d);

// A formal sum of terms coeff * |i..| * |j..| in the column minors of a
// configuration written in low-rank coordinates; multihomogeneous per column.
struct MinorPolynomial {
    struct Term {
        Rat coeff;
        std::vector<std::vector<int>> minors; // canonical column positions, 1-based
    };
    std::vector<Term> terms;

    MinorPolynomial(std::initializer_list<Term> ts);
    MinorPolynomial(std::vector<Term> ts);

    // coords has one column per canonical position.
    Rat evaluate(const Mat& coords) const;
    std::string str() const;
};

// Published generators of the closure ideal with the orbit's parameters
// substituted. Defined for phi[5^2], phi[5^2;J] (#J=2), phi[4^2;i],
// phi[5^3] and phi[5^3;J] (#J=3); errors with "no_published_generators"
// otherwise and "nongeneric_parameter" off the generic locus.
std::vector<MinorPolynomial> ideal_generators(const OrbitClass& o);

// Exact zero-locus membership test for w against the ideal of o.
bool ideal_vanishes(const OrbitClass& o, const ProjConfig& w);

// The degeneration curve point v^c along a face J of pi(v): columns in J
// stay, every other column moves to c*(span part) + (complement part),
// the complement being spanned by greedily inserted standard vectors.
// c = 1 gives back v, c != 0 stays in the orbit, c = 0 lands in the fibre
// of the reduction of pi(v) by J.
ProjConfig face_degeneration(const ProjConfig& v, unsigned face_mask, const Rat& c);

} // namespace pentad
