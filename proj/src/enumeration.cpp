#include "pentad/enumeration.hpp"

#include "pentad/error.hpp"

#include <algorithm>
#include <tuple>
#include <bit>

namespace pentad {

namespace {

constexpr int kM = 5;
constexpr unsigned kFull = 31;

void set_partitions(int m, std::vector<std::vector<unsigned>>& out) {
    std::vector<unsigned> blocks;
    auto rec = [&](auto&& self, int elem) -> void {
        if (elem == m) {
            out.push_back(blocks);
            return;
        }
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            blocks[k] |= 1u << elem;
            self(self, elem + 1);
            blocks[k] &= ~(1u << elem);
        }
        blocks.push_back(1u << elem);
        self(self, elem + 1);
        blocks.pop_back();
    };
    rec(rec, 0);
}

// All single-orbit splittings for five points in P^3: each block carries
// rank 1 or rank = size-1 (>= 2), ranks summing to at most 4.
std::vector<Splitting> pprime_splittings() {
    std::vector<std::vector<unsigned>> parts;
    set_partitions(kM, parts);
    std::vector<Splitting> out;
    for (const auto& part : parts) {
        std::vector<std::vector<int>> choices;
        for (unsigned b : part) {
            int size = std::popcount(b);
            std::vector<int> c{1};
            if (size - 1 >= 2) c.push_back(size - 1);
            choices.push_back(c);
        }
        std::vector<int> pick(part.size(), 0);
        while (true) {
            int total = 0;
            std::vector<Splitting::Block> blocks;
            for (std::size_t k = 0; k < part.size(); ++k) {
                int r = choices[k][pick[k]];
                blocks.push_back({part[k], r});
                total += r;
            }
            if (total <= 4) out.emplace_back(kM, std::move(blocks));
            // advance the mixed-radix counter
            std::size_t k = 0;
            while (k < pick.size()) {
                if (++pick[k] < static_cast<int>(choices[k].size())) break;
                pick[k] = 0;
                ++k;
            }
            if (k == pick.size()) break;
        }
    }
    return out;
}

std::vector<unsigned> subsets_of_size(int size) {
    std::vector<unsigned> out;
    for (unsigned I = 1; I <= kFull; ++I)
        if (std::popcount(I) == size) out.push_back(I);
    return out;
}

std::vector<FamilyKey> indexed_families() {
    std::vector<FamilyKey> fams;
    fams.push_back({Fam::P53});
    for (unsigned J : subsets_of_size(3)) fams.push_back({Fam::P53_J3, J});
    for (unsigned J1 : subsets_of_size(2))
        for (unsigned J2 : subsets_of_size(2))
            if (J1 < J2 && !(J1 & J2)) fams.push_back({Fam::P53_J1J2, J1, J2});
    for (unsigned J : subsets_of_size(2)) fams.push_back({Fam::P53_J2, J});
    fams.push_back({Fam::P52});
    for (unsigned J : subsets_of_size(2)) fams.push_back({Fam::P52_J2, J});
    for (unsigned J1 : subsets_of_size(2))
        for (unsigned J2 : subsets_of_size(2))
            if (J1 < J2 && !(J1 & J2)) fams.push_back({Fam::P52_J1J2, J1, J2});
    for (unsigned J : subsets_of_size(3)) fams.push_back({Fam::P52_J3, J});
    for (int i = 1; i <= kM; ++i) fams.push_back({Fam::P42, 0, 0, i});
    for (int i = 1; i <= kM; ++i)
        for (unsigned J : subsets_of_size(2))
            if (!(J & (1u << (i - 1)))) fams.push_back({Fam::P42_J, J, 0, i});
    return fams;
}

} // namespace

Catalogue::Catalogue() {
    for (const Splitting& s : pprime_splittings()) {
        FamilyKey key;
        key.fam = Fam::VarpiFibre;
        key.split = s;
        CatalogueEntry e;
        e.phi = rho_inverse(s);
        e.rho_split = rho(e.phi);
        e.family = key;
        e.type_label = key.type_label();
        e.single_orbit = true;
        e.rep = key.default_representative();
        entries_.push_back(std::move(e));
    }
    for (const FamilyKey& key : indexed_families()) {
        CatalogueEntry e;
        e.phi = key.rank_matrix();
        e.rho_split = rho(e.phi);
        e.family = key;
        e.type_label = key.type_label();
        e.single_orbit = !key.parametrized();
        e.rep = key.default_representative();
        entries_.push_back(std::move(e));
    }
    // group rows by type label: top rank, then face counts, then the a/b
    // marking, then the family tag
    std::stable_sort(entries_.begin(), entries_.end(),
                     [](const CatalogueEntry& a, const CatalogueEntry& b) {
                         auto key = [](const CatalogueEntry& e) {
                             return std::make_tuple(e.phi.top_rank(), rank_type(e.phi).counts,
                                                    e.type_label, e.family.tag());
                         };
                         return key(a) < key(b);
                     });
    for (int i = 0; i < size(); ++i) {
        const auto& e = entries_[i];
        auto [it, fresh] = index_.emplace(e.phi.key(), i);
        if (!fresh)
            fail("duplicate_entry", "catalogue rows " + entries_[it->second].family.tag() +
                                        " and " + e.family.tag() + " coincide");
        std::string why;
        if (!is_valid_rank_matrix(e.phi, 4, &why))
            fail("invalid_entry", e.family.tag() + ": " + why);
        if (!(compute_rank_matrix(e.rep) == e.phi))
            fail("invalid_entry", e.family.tag() + ": representative has the wrong rank matrix");
    }

    // Order tables. Rows hold everything strictly below a node.
    int n = size();
    int words = (n + 63) / 64;
    auto empty = std::vector<Row>(n, Row(words, 0));
    leq_ = preceq_ = prec_ = empty;
    auto add = [&](std::vector<Row>& t, int below, int above) {
        if (below != above) t[above][below >> 6] |= 1ull << (below & 63);
    };

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && leq(entries_[a].phi, entries_[b].phi)) add(leq_, a, b);

    // prec generators: equal block partitions, comparable values, and some
    // block rank strictly smaller.
    auto same_partition = [&](const Splitting& x, const Splitting& y) {
        if (x.blocks.size() != y.blocks.size()) return false;
        for (std::size_t k = 0; k < x.blocks.size(); ++k)
            if (x.blocks[k].mask != y.blocks[k].mask) return false;
        return true;
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            const auto& pa = entries_[a];
            const auto& pb = entries_[b];
            if (!same_partition(pa.rho_split, pb.rho_split)) continue;
            if (!reach(leq_, a, b)) continue;
            bool drop = false;
            for (std::size_t k = 0; k < pa.rho_split.blocks.size(); ++k)
                if (pa.rho_split.blocks[k].rank < pb.rho_split.blocks[k].rank) drop = true;
            if (drop) add(prec_, a, b);
        }

    // preceq generators: face reductions, block-respecting minorations, and
    // every prec generator.
    for (int b = 0; b < n; ++b) {
        const RankMatrix& phi = entries_[b].phi;
        for (int r = 1; r <= phi.top_rank(); ++r)
            for (unsigned J : faces(phi, r)) {
                RankMatrix red = reduction(phi, J);
                auto it = index_.find(red.key());
                if (it == index_.end())
                    fail("invalid_entry", "reduction of " + entries_[b].family.tag() +
                                              " by " + subset_string(J) +
                                              " left the catalogue");
                add(preceq_, it->second, b);
            }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !reach(leq_, a, b)) continue;
            const auto& pa = entries_[a].phi;
            const auto& pb = entries_[b].phi;
            bool blocks_equal = true;
            for (const auto& blk : entries_[b].rho_split.blocks) {
                for (unsigned I = blk.mask;; I = (I - 1) & blk.mask) {
                    if (pa(I) != pb(I)) { blocks_equal = false; break; }
                    if (I == 0) break;
                }
                if (!blocks_equal) break;
            }
            if (blocks_equal) add(preceq_, a, b);
            if (reach(prec_, a, b)) add(preceq_, a, b);
        }

    // Reflexive-transitive closure (reflexivity kept implicit).
    auto close = [&](std::vector<Row>& t) {
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                if (reach(t, k, i))
                    for (int w = 0; w < words; ++w) t[i][w] |= t[k][w];
    };
    close(prec_);
    close(preceq_);
    // leq is transitive already.
}

const Catalogue& Catalogue::get() {
    static const Catalogue instance;
    return instance;
}

std::optional<int> Catalogue::find(const RankMatrix& phi) const {
    auto it = index_.find(phi.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Catalogue::require(const RankMatrix& phi) const {
    auto idx = find(phi);
    if (!idx)
        fail("not_in_image",
             "rank matrix is not realized by any configuration of five points in P^3");
    return *idx;
}

std::optional<int> Catalogue::find_family(const FamilyKey& key) const {
    for (int i = 0; i < size(); ++i)
        if (entries_[i].family == key) return i;
    return std::nullopt;
}

std::map<std::string, int> Catalogue::label_multiplicities() const {
    std::map<std::string, int> mult;
    for (const auto& e : entries_) ++mult[e.type_label];
    return mult;
}

PosetGraph Catalogue::build_poset(OrderKind kind) const {
    PosetGraph g;
    g.kind = kind;
    g.nodes = size();
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b) {
            if (a == b) continue;
            bool rel = kind == OrderKind::Leq       ? leq_idx(a, b)
                       : kind == OrderKind::Preceq ? preceq_strict(a, b)
                                                   : prec_strict(a, b);
            if (rel) g.edges.emplace_back(a, b);
        }
    return g;
}

std::vector<RankMatrix> enumerate_image() {
    std::vector<RankMatrix> out;
    for (const auto& e : Catalogue::get().entries()) out.push_back(e.phi);
    return out;
}

ProjConfig verify_realizability(const RankMatrix& phi) {
    const Catalogue& cat = Catalogue::get();
    return cat.entries()[cat.require(phi)].rep;
}

std::vector<std::pair<int, int>> hasse_edges(const PosetGraph& g) {
    std::vector<std::vector<bool>> rel(g.nodes, std::vector<bool>(g.nodes, false));
    for (auto [a, b] : g.edges) rel[a][b] = true;
    std::vector<std::pair<int, int>> out;
    for (auto [a, b] : g.edges) {
        bool covered = false;
        for (int c = 0; c < g.nodes && !covered; ++c)
            if (c != a && c != b && rel[a][c] && rel[c][b]) covered = true;
        if (!covered) out.emplace_back(a, b);
    }
    return out;
}

std::string export_dot(const PosetGraph& g) {
    const Catalogue& cat = Catalogue::get();
    std::string name = g.kind == OrderKind::Leq       ? "leq"
                       : g.kind == OrderKind::Preceq ? "preceq"
                                                     : "prec";
    std::string s = "digraph hasse_" + name + " {\n  rankdir=BT;\n";
    for (int i = 0; i < g.nodes; ++i) {
        const auto& e = cat.entries()[i];
        s += "  n" + std::to_string(i) + " [label=\"" + e.type_label + "\\n" +
             e.family.tag() + "\"];\n";
    }
    for (auto [a, b] : hasse_edges(g))
        s += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    s += "}\n";
    return s;
}

RankMatrix permute_points(const RankMatrix& phi, const std::vector<int>& perm) {
    RankMatrix out(phi.m);
    for (unsigned I = 0; I <= phi.full_mask(); ++I) {
        unsigned image = 0;
        for (int i = 0; i < phi.m; ++i)
            if (I & (1u << i)) image |= 1u << perm[i];
        out.set(I, phi(image));
    }
    return out;
}

bool preceq(const RankMatrix& psi, const RankMatrix& phi) {
    const Catalogue& cat = Catalogue::get();
    return cat.preceq_idx(cat.require(psi), cat.require(phi));
}

bool prec(const RankMatrix& psi, const RankMatrix& phi) {
    const Catalogue& cat = Catalogue::get();
    return cat.prec_idx(cat.require(psi), cat.require(phi));
}

} // namespace pentad
