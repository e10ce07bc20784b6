#pragma once

#include "pentad/families.hpp"
#include "pentad/rank_matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pentad {

struct CatalogueEntry {
    RankMatrix phi;
    Splitting rho_split;   // rho(phi)
    FamilyKey family;
    std::string type_label; // e.g. "(4,4)b"
    bool single_orbit = true;
    ProjConfig rep;         // catalogued representative, pi(rep) == phi
};

enum class OrderKind { Leq, Preceq, Prec };

struct PosetGraph {
    OrderKind kind;
    int nodes = 0;
    std::vector<std::pair<int, int>> edges; // (below, above), loops removed
};

// Every rank matrix of five points in P^3, built from the single-orbit
// splitting rows plus the indexed families, with the three partial orders
// materialized as reachability tables.
class Catalogue {
public:
    Catalogue();

    static const Catalogue& get();

    const std::vector<CatalogueEntry>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }

    std::optional<int> find(const RankMatrix& phi) const;
    int require(const RankMatrix& phi) const; // errors with "not_in_image"
    std::optional<int> find_family(const FamilyKey& key) const;

    // a below b, in the respective order. prec/preceq are the
    // reflexive-transitive closures of their generating relations;
    // *_strict drop the diagonal.
    bool leq_idx(int a, int b) const { return reach(leq_, a, b) || a == b; }
    bool preceq_idx(int a, int b) const { return reach(preceq_, a, b) || a == b; }
    bool prec_idx(int a, int b) const { return reach(prec_, a, b) || a == b; }
    bool preceq_strict(int a, int b) const { return a != b && reach(preceq_, a, b); }
    bool prec_strict(int a, int b) const { return a != b && reach(prec_, a, b); }

    std::map<std::string, int> label_multiplicities() const;

    PosetGraph build_poset(OrderKind kind) const;

private:
    using Row = std::vector<std::uint64_t>;
    static bool reach(const std::vector<Row>& t, int below, int above) {
        return (t[above][below >> 6] >> (below & 63)) & 1u;
    }

    std::vector<CatalogueEntry> entries_;
    std::map<std::string, int> index_;
    // row[a] = bitset of everything strictly reachable below a
    std::vector<Row> leq_, preceq_, prec_;
};

// Sequence of all catalogued rank matrices.
std::vector<RankMatrix> enumerate_image();

// Concrete rational configuration with pi(config) = phi; errors with
// "not_in_image" for an unknown matrix.
ProjConfig verify_realizability(const RankMatrix& phi);

// DOT rendering of the Hasse reduction (transitive edges removed).
std::string export_dot(const PosetGraph& g);

// Transitive reduction of a poset graph given by its full edge relation.
std::vector<std::pair<int, int>> hasse_edges(const PosetGraph& g);

// Point relabelling: result(I) = phi({perm[i] : i in I}), perm 0-based over
// columns, matching permute_columns.
RankMatrix permute_points(const RankMatrix& phi, const std::vector<int>& perm);

} // namespace pentad
