#include "pentad/closure.hpp"

#include "pentad/error.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace pentad {

std::string verdict_string(Verdict v) {
    switch (v) {
        case Verdict::Contains: return "contains";
        case Verdict::IntersectsOnly: return "intersects_only";
        case Verdict::Disjoint: return "disjoint";
    }
    return "?";
}

namespace {

constexpr unsigned kFull = 31;

std::vector<int> members(unsigned mask) { // 1-based
    std::vector<int> v;
    for (int i = 0; i < 32; ++i)
        if (mask & (1u << i)) v.push_back(i + 1);
    return v;
}

std::vector<Rat> e4(int k) {
    std::vector<Rat> v(4, Rat(0));
    v[k - 1] = 1;
    return v;
}

std::vector<Rat> line_pt(const Rat& a, const Rat& b) { return {a, b, Rat(0), Rat(0)}; }

Splitting partition_splitting(int m, const std::vector<unsigned>& blocks) {
    std::vector<Splitting::Block> bl;
    for (unsigned b : blocks) bl.push_back({b, 1});
    return Splitting(m, std::move(bl));
}

} // namespace

std::vector<RankMatrix> fibre_closure(const RankMatrix& phi) {
    const Catalogue& cat = Catalogue::get();
    int idx = cat.require(phi);
    if (!cat.entries()[idx].single_orbit)
        fail("parametrized_fibre",
             "the fibre of " + cat.entries()[idx].family.tag() +
                 " splits into many orbits; use orbit_closure_description");
    std::vector<RankMatrix> out;
    for (int a = 0; a < cat.size(); ++a)
        if (cat.leq_idx(a, idx)) out.push_back(cat.entries()[a].phi);
    return out;
}

Verdict fibre_closure_verdict(const OrbitClass& o, const RankMatrix& psi) {
    const Catalogue& cat = Catalogue::get();
    int above = cat.require(o.phi);
    if (cat.entries()[above].single_orbit)
        fail("unparametrized_family",
             "the whole fibre is one orbit; its closure is fibre_closure");
    int below = cat.require(psi);
    bool meets = cat.preceq_idx(below, above);
    if (!meets) return Verdict::Disjoint;
    bool single = cat.entries()[below].single_orbit;
    if (single || cat.prec_strict(below, above)) return Verdict::Contains;
    return Verdict::IntersectsOnly;
}

ProjConfig orbit_representative(const OrbitClass& o) {
    std::vector<std::vector<Rat>> params;
    for (const auto& p : o.params) params.push_back(p.coords);
    return o.family.representative_with(params);
}

ClosureDescription orbit_closure_description(const OrbitClass& o) {
    const Catalogue& cat = Catalogue::get();
    int idx = cat.require(o.phi);
    ClosureDescription d;
    d.orbit = o;
    auto orbit_comp = [&](const ProjConfig& cfg) {
        ClosureComponent c;
        c.kind = ClosureComponent::Kind::Orbit;
        c.sample = cfg;
        d.components.push_back(std::move(c));
    };
    auto varpi_comp = [&](const Splitting& s) {
        ClosureComponent c;
        c.kind = ClosureComponent::Kind::VarpiFibre;
        c.split = s;
        d.components.push_back(std::move(c));
    };
    auto fibre_comp = [&](const FamilyKey& key) {
        ClosureComponent c;
        c.kind = ClosureComponent::Kind::Fibre;
        auto found = cat.find_family(key);
        if (!found) fail("internal_error", "fibre component missing from catalogue");
        c.node = *found;
        d.components.push_back(std::move(c));
    };

    if (cat.entries()[idx].single_orbit) {
        for (int a = 0; a < cat.size(); ++a)
            if (cat.leq_idx(a, idx)) {
                ClosureComponent c;
                c.kind = ClosureComponent::Kind::Fibre;
                c.node = a;
                d.components.push_back(std::move(c));
            }
        return d;
    }

    const FamilyKey& key = o.family;
    switch (key.fam) {
        case Fam::P52: {
            orbit_comp(orbit_representative(o));
            for (int i = 1; i <= 5; ++i)
                varpi_comp(partition_splitting(5, {1u << (i - 1), kFull ^ (1u << (i - 1))}));
            varpi_comp(partition_splitting(5, {kFull}));
            break;
        }
        case Fam::P52_J2: {
            orbit_comp(orbit_representative(o));
            varpi_comp(partition_splitting(5, {key.J, kFull ^ key.J}));
            for (int i = 1; i <= 5; ++i)
                if (!(key.J & (1u << (i - 1))))
                    varpi_comp(partition_splitting(5, {1u << (i - 1), kFull ^ (1u << (i - 1))}));
            varpi_comp(partition_splitting(5, {kFull}));
            break;
        }
        case Fam::P42: {
            ProjConfig rep = orbit_representative(o);
            orbit_comp(rep);
            // every position of the fifth point on the line of the other four
            ClosureComponent sweep;
            sweep.kind = ClosureComponent::Kind::ParamSweep;
            sweep.sweep_base = rep;
            sweep.sweep_col = key.i - 1;
            sweep.line0 = e4(1);
            sweep.line1 = e4(2);
            d.components.push_back(std::move(sweep));
            unsigned ibit = 1u << (key.i - 1);
            for (int j = 1; j <= 5; ++j) {
                if (j == key.i) continue;
                unsigned jbit = 1u << (j - 1);
                varpi_comp(partition_splitting(5, {ibit, jbit, kFull ^ ibit ^ jbit}));
            }
            for (unsigned K = 1; K <= kFull; ++K)
                if (std::popcount(K) == 3 && !(K & ibit))
                    fibre_comp({Fam::P52_J3, K});
            for (int j = 1; j <= 5; ++j) {
                if (j == key.i) continue;
                unsigned pair = ibit | (1u << (j - 1));
                varpi_comp(partition_splitting(5, {pair, kFull ^ pair}));
            }
            for (int k = 1; k <= 5; ++k)
                varpi_comp(partition_splitting(5, {1u << (k - 1), kFull ^ (1u << (k - 1))}));
            varpi_comp(partition_splitting(5, {kFull}));
            break;
        }
        case Fam::P53: {
            orbit_comp(orbit_representative(o));
            const Rat &p1 = o.params[0].coords[0], &p2 = o.params[0].coords[1],
                      &p3 = o.params[0].coords[2];
            auto cfg = [&](std::vector<std::vector<Rat>> cols) {
                return config_from_columns(4, std::move(cols));
            };
            std::vector<Rat> sum12 = line_pt(Rat(1), Rat(1));
            orbit_comp(cfg({e4(3), e4(1), e4(2), sum12, line_pt(p2, p3)}));
            orbit_comp(cfg({e4(1), e4(3), e4(2), sum12, line_pt(p1, p3)}));
            orbit_comp(cfg({e4(1), e4(2), e4(3), sum12, line_pt(p1, p2)}));
            orbit_comp(cfg({e4(1), e4(2), sum12, e4(3), line_pt(p1 - p3, p2 - p3)}));
            orbit_comp(cfg({e4(1), e4(2), sum12, line_pt(p2 * (p1 - p3), p1 * (p2 - p3)), e4(3)}));
            for (int i = 1; i <= 5; ++i)
                for (int j = i + 1; j <= 5; ++j) {
                    unsigned ij = (1u << (i - 1)) | (1u << (j - 1));
                    varpi_comp(partition_splitting(
                        5, {1u << (i - 1), 1u << (j - 1), kFull ^ ij}));
                }
            ClosureComponent lr;
            lr.kind = ClosureComponent::Kind::LowRankLocus;
            lr.low_rank = 2;
            d.components.push_back(std::move(lr));
            break;
        }
        case Fam::P53_J3: {
            orbit_comp(orbit_representative(o));
            const Rat &p1 = o.params[0].coords[0], &p2 = o.params[0].coords[1];
            auto j = members(key.J);
            auto rest = members(kFull ^ key.J);
            int dpt = rest[0], ept = rest[1];
            auto with_roles = [&](const std::vector<Rat>& at_d, const std::vector<Rat>& at_e) {
                std::vector<std::vector<Rat>> cols(5);
                cols[j[0] - 1] = e4(1);
                cols[j[1] - 1] = e4(2);
                cols[j[2] - 1] = line_pt(p1, p2);
                cols[dpt - 1] = at_d;
                cols[ept - 1] = at_e;
                return config_from_columns(4, cols);
            };
            orbit_comp(with_roles(e4(3), line_pt(Rat(1), Rat(1))));
            orbit_comp(with_roles(line_pt(Rat(1), Rat(1)), e4(3)));
            for (int k : j) {
                unsigned kb = 1u << (k - 1);
                fibre_comp({Fam::P42_J, key.J ^ kb, 0, k});
            }
            {
                std::vector<Splitting::Block> bl{{key.J, 2}, {kFull ^ key.J, 1}};
                varpi_comp(Splitting(5, std::move(bl)));
            }
            for (int i = 1; i <= 5; ++i)
                for (int jj = i + 1; jj <= 5; ++jj) {
                    unsigned pair = (1u << (i - 1)) | (1u << (jj - 1));
                    if ((pair & key.J) == pair) continue; // both inside the triple
                    varpi_comp(partition_splitting(
                        5, {1u << (i - 1), 1u << (jj - 1), kFull ^ pair}));
                }
            for (int k : j) {
                unsigned kb = 1u << (k - 1);
                varpi_comp(partition_splitting(5, {kb, key.J ^ kb, kFull ^ key.J}));
            }
            ClosureComponent lr;
            lr.kind = ClosureComponent::Kind::LowRankLocus;
            lr.low_rank = 2;
            d.components.push_back(std::move(lr));
            break;
        }
        default:
            fail("internal_error", "parametrized family without a closure description");
    }
    return d;
}

namespace {

ProjConfig instantiate_sweep(const ClosureComponent& c, const Rat& q1, const Rat& q2) {
    std::vector<Rat> col(c.sweep_base.n);
    for (int r = 0; r < c.sweep_base.n; ++r) col[r] = q1 * c.line0[r] + q2 * c.line1[r];
    Mat m = c.sweep_base.cols;
    m.set_column(c.sweep_col, col);
    return ProjConfig(c.sweep_base.n, c.sweep_base.m, std::move(m));
}

std::vector<ProjConfig> sweep_instances(const ClosureDescription& d, const ClosureComponent& c) {
    std::vector<std::pair<Rat, Rat>> qs = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)},
                                           {Rat(1), Rat(7)}, {Rat(1), Rat(9)}};
    for (const auto& p : d.orbit.params)
        if (p.coords.size() == 2) qs.emplace_back(p.coords[0], p.coords[1]);
    std::vector<ProjConfig> out;
    for (auto& [a, b] : qs) out.push_back(instantiate_sweep(c, a, b));
    return out;
}

} // namespace

std::vector<Verdict> project_to_fibres(const ClosureDescription& d) {
    const Catalogue& cat = Catalogue::get();
    std::vector<Verdict> verdict(cat.size(), Verdict::Disjoint);
    auto bump = [&](int node, Verdict v) {
        if (static_cast<int>(v) > static_cast<int>(verdict[node])) verdict[node] = v;
    };
    auto orbit_hit = [&](const ProjConfig& cfg) {
        int node = cat.require(compute_rank_matrix(cfg));
        bump(node, cat.entries()[node].single_orbit ? Verdict::Contains
                                                    : Verdict::IntersectsOnly);
    };
    for (const auto& c : d.components) {
        switch (c.kind) {
            case ClosureComponent::Kind::Orbit: orbit_hit(c.sample); break;
            case ClosureComponent::Kind::ParamSweep:
                for (const auto& cfg : sweep_instances(d, c)) orbit_hit(cfg);
                break;
            case ClosureComponent::Kind::Fibre: bump(c.node, Verdict::Contains); break;
            case ClosureComponent::Kind::VarpiFibre:
                bump(cat.require(rho_inverse(c.split)), Verdict::Contains);
                break;
            case ClosureComponent::Kind::LowRankLocus:
                for (int a = 0; a < cat.size(); ++a)
                    if (cat.entries()[a].phi.top_rank() <= c.low_rank) bump(a, Verdict::Contains);
                break;
        }
    }
    return verdict;
}

std::vector<ProjConfig> component_samples(const ClosureDescription& d) {
    std::vector<ProjConfig> out;
    for (const auto& c : d.components) {
        switch (c.kind) {
            case ClosureComponent::Kind::Orbit: out.push_back(c.sample); break;
            case ClosureComponent::Kind::ParamSweep:
                out.push_back(instantiate_sweep(c, Rat(1), Rat(7)));
                break;
            case ClosureComponent::Kind::Fibre:
                out.push_back(Catalogue::get().entries()[c.node].rep);
                break;
            case ClosureComponent::Kind::VarpiFibre:
                out.push_back(verify_realizability(rho_inverse(c.split)));
                break;
            case ClosureComponent::Kind::LowRankLocus: {
                FamilyKey generic_line{Fam::P52};
                out.push_back(generic_line.default_representative());
                break;
            }
        }
    }
    return out;
}

MinorPolynomial::MinorPolynomial(std::initializer_list<Term> ts)
    : MinorPolynomial(std::vector<Term>(ts)) {}

MinorPolynomial::MinorPolynomial(std::vector<Term> ts) : terms(std::move(ts)) {
    // multihomogeneity: every term uses each column equally often
    std::map<int, int> degree;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        std::map<int, int> d;
        for (const auto& mn : terms[t].minors)
            for (int col : mn) ++d[col];
        if (t == 0)
            degree = d;
        else if (d != degree)
            fail("invalid_polynomial", "terms are not multihomogeneous per column");
    }
}

Rat MinorPolynomial::evaluate(const Mat& coords) const {
    Rat total(0);
    std::vector<int> rows(coords.rows);
    for (int r = 0; r < coords.rows; ++r) rows[r] = r;
    for (const auto& term : terms) {
        if (is_zero(term.coeff)) continue;
        Rat value = term.coeff;
        for (const auto& mn : term.minors) {
            std::vector<int> cols;
            for (int c : mn) cols.push_back(c - 1);
            if (static_cast<int>(cols.size()) != coords.rows)
                fail("shape_mismatch", "minor size does not match coordinate rank");
            value *= minor_det(coords, rows, cols);
            if (is_zero(value)) break;
        }
        total += value;
    }
    return total;
}

std::string MinorPolynomial::str() const {
    std::string s;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        if (t) s += " + ";
        s += "(" + rat_to_string(terms[t].coeff) + ")";
        for (const auto& mn : terms[t].minors) {
            s += "|";
            for (std::size_t i = 0; i < mn.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(mn[i]);
            }
            s += "|";
        }
    }
    return s;
}

std::vector<MinorPolynomial> ideal_generators(const OrbitClass& o) {
    using T = MinorPolynomial::Term;
    const FamilyKey& key = o.family;
    auto param = [&](std::size_t k) -> const std::vector<Rat>& {
        if (k >= o.params.size()) fail("bad_parameter_arity", "orbit descriptor lacks parameters");
        return o.params[k].coords;
    };
    switch (key.fam) {
        case Fam::P52: {
            const auto &p = param(0), &q = param(1);
            if (!p1xp1_generic(p, q))
                fail("nongeneric_parameter", "phi[5^2] parameters must be distinct and generic");
            const Rat &p1 = p[0], &p2 = p[1], &q1 = q[0], &q2 = q[1];
            return {
                MinorPolynomial{T{q1 * (p2 - p1), {{2, 4}, {5, 3}}}, T{p1 * (q2 - q1), {{2, 5}, {3, 4}}}},
                MinorPolynomial{T{q2 * (p2 - p1), {{1, 4}, {5, 3}}}, T{p2 * (q2 - q1), {{1, 5}, {3, 4}}}},
                MinorPolynomial{T{p1 * q2, {{1, 4}, {5, 2}}}, T{p2 * q1, {{1, 5}, {2, 4}}}},
                MinorPolynomial{T{q2, {{1, 3}, {5, 2}}}, T{q1, {{1, 5}, {2, 3}}}},
                MinorPolynomial{T{p2, {{1, 3}, {4, 2}}}, T{p1, {{1, 4}, {2, 3}}}},
            };
        }
        case Fam::P52_J2:
        case Fam::P42: {
            const auto& p = param(0);
            if (!p1_generic(p))
                fail("nongeneric_parameter", "parameter must lie in the generic locus of P^1");
            const Rat &p1 = p[0], &p2 = p[1];
            return {MinorPolynomial{T{p2, {{1, 3}, {4, 2}}}, T{p1, {{1, 4}, {2, 3}}}}};
        }
        case Fam::P53: {
            const auto& p = param(0);
            if (!p2_generic(p))
                fail("nongeneric_parameter", "parameter must lie in the generic locus of P^2");
            const Rat &p1 = p[0], &p2 = p[1], &p3 = p[2];
            return {
                MinorPolynomial{T{p3, {{1, 2, 4}, {1, 5, 3}}}, T{p2, {{1, 2, 5}, {1, 3, 4}}}},
                MinorPolynomial{T{p3, {{2, 1, 4}, {2, 5, 3}}}, T{p1, {{2, 1, 5}, {2, 3, 4}}}},
                MinorPolynomial{T{p2, {{3, 1, 4}, {3, 5, 2}}}, T{p1, {{3, 1, 5}, {3, 2, 4}}}},
                MinorPolynomial{T{p2 - p3, {{4, 1, 3}, {4, 5, 2}}},
                                T{p1 - p3, {{4, 1, 5}, {4, 2, 3}}}},
                MinorPolynomial{T{p1 * (p2 - p3), {{5, 1, 3}, {5, 4, 2}}},
                                T{p2 * (p1 - p3), {{5, 1, 4}, {5, 2, 3}}}},
            };
        }
        case Fam::P53_J3: {
            const auto& p = param(0);
            if (!p1_generic(p))
                fail("nongeneric_parameter", "parameter must lie in the generic locus of P^1");
            const Rat &p1 = p[0], &p2 = p[1];
            return {
                MinorPolynomial{T{Rat(1), {{1, 2, 3}}}},
                MinorPolynomial{T{p1, {{4, 1, 3}, {4, 5, 2}}}, T{p2, {{4, 1, 5}, {4, 2, 3}}}},
                MinorPolynomial{T{p1, {{5, 1, 3}, {5, 4, 2}}}, T{p2, {{5, 1, 4}, {5, 2, 3}}}},
            };
        }
        default:
            fail("no_published_generators",
                 "no generator set is catalogued for family " + key.tag());
    }
}

namespace {

// Canonical-order evaluation columns of w for the ideal of o, or nullopt-like
// failure signals via the bool.
struct EvalPlan {
    std::vector<int> cols; // 0-based input columns in canonical order
    int bound = 2;         // expected span dimension
    bool collapse_ok = true;
};

EvalPlan eval_plan(const OrbitClass& o, const ProjConfig& w) {
    EvalPlan plan;
    const FamilyKey& key = o.family;
    switch (key.fam) {
        case Fam::P52:
            plan.cols = {0, 1, 2, 3, 4};
            plan.bound = 2;
            break;
        case Fam::P52_J2: {
            auto j = members(key.J);
            auto rest = members(kFull ^ key.J);
            // the glued pair must already be one projective point
            Mat pair(4, 2);
            pair.set_column(0, w.point(j[0] - 1));
            pair.set_column(1, w.point(j[1] - 1));
            if (rank(pair) > 1) plan.collapse_ok = false;
            plan.cols = {rest[0] - 1, rest[1] - 1, rest[2] - 1, j[0] - 1};
            plan.bound = 2;
            break;
        }
        case Fam::P42: {
            auto rest = members(kFull ^ (1u << (key.i - 1)));
            plan.cols = {rest[0] - 1, rest[1] - 1, rest[2] - 1, rest[3] - 1};
            plan.bound = 2;
            break;
        }
        case Fam::P53:
            plan.cols = {0, 1, 2, 3, 4};
            plan.bound = 3;
            break;
        case Fam::P53_J3: {
            auto j = members(key.J);
            auto rest = members(kFull ^ key.J);
            plan.cols = {j[0] - 1, j[1] - 1, j[2] - 1, rest[0] - 1, rest[1] - 1};
            plan.bound = 3;
            break;
        }
        default:
            fail("no_published_generators",
                 "no generator set is catalogued for family " + key.tag());
    }
    return plan;
}

} // namespace

bool ideal_vanishes(const OrbitClass& o, const ProjConfig& w) {
    if (w.n != 4 || w.m != 5)
        fail("dimension_mismatch", "membership test needs five points in P^3");
    EvalPlan plan = eval_plan(o, w);
    if (!plan.collapse_ok) return false;

    Mat sub(w.n, static_cast<int>(plan.cols.size()));
    for (std::size_t c = 0; c < plan.cols.size(); ++c)
        sub.set_column(static_cast<int>(c), w.point(plan.cols[c]));
    if (rank(sub) > plan.bound) return false;

    // Basis: lexicographically first independent columns, padded with
    // standard vectors; the verdict does not depend on this choice.
    std::vector<std::vector<Rat>> basis;
    for (int c = 0; c < sub.cols && static_cast<int>(basis.size()) < plan.bound; ++c) {
        auto cand = basis;
        cand.push_back(sub.column(c));
        if (rank(from_columns(w.n, cand)) == static_cast<int>(cand.size())) basis = cand;
    }
    for (int k = 1; k <= w.n && static_cast<int>(basis.size()) < plan.bound; ++k) {
        auto cand = basis;
        cand.push_back(e4(k));
        if (rank(from_columns(w.n, cand)) == static_cast<int>(cand.size())) basis = cand;
    }
    Mat coords(plan.bound, sub.cols);
    for (int c = 0; c < sub.cols; ++c) {
        auto x = solve_in_basis(basis, sub.column(c));
        for (int r = 0; r < plan.bound; ++r) coords.at(r, c) = x[r];
    }
    for (const auto& gen : ideal_generators(o))
        if (!is_zero(gen.evaluate(coords))) return false;
    return true;
}

ProjConfig face_degeneration(const ProjConfig& v, unsigned face_mask, const Rat& c) {
    RankMatrix phi = compute_rank_matrix(v);
    reduction(phi, face_mask); // validates the face, errors otherwise

    // Pivot columns of the face span, extended by standard vectors.
    std::vector<std::vector<Rat>> basis;
    int span_dim = 0;
    for (int i = 0; i < v.m; ++i) {
        if (!(face_mask & (1u << i))) continue;
        auto cand = basis;
        cand.push_back(v.point(i));
        if (rank(from_columns(v.n, cand)) == static_cast<int>(cand.size())) basis = cand;
    }
    span_dim = static_cast<int>(basis.size());
    for (int k = 0; k < v.n && static_cast<int>(basis.size()) < v.n; ++k) {
        auto cand = basis;
        cand.push_back(identity(v.n).column(k));
        if (rank(from_columns(v.n, cand)) == static_cast<int>(cand.size())) basis = cand;
    }
    Mat b = from_columns(v.n, basis);
    Mat t = inverse(b);

    Mat out = v.cols;
    for (int i = 0; i < v.m; ++i) {
        if (face_mask & (1u << i)) continue;
        auto coords = mat_mul(t, from_columns(v.n, {v.point(i)}));
        std::vector<Rat> col(v.n, Rat(0));
        for (int r = 0; r < v.n; ++r) {
            // span part scaled by c, complement part kept
            Rat weight = (r < span_dim) ? c * coords.at(r, 0) : coords.at(r, 0);
            for (int rr = 0; rr < v.n; ++rr) col[rr] += weight * b.at(rr, r);
        }
        out.set_column(i, col);
    }
    return ProjConfig(v.n, v.m, std::move(out));
}

} // namespace pentad
