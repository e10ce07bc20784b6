#include "pentad/families.hpp"

#include "pentad/error.hpp"

#include <algorithm>
#include <bit>

namespace pentad {

namespace {

constexpr int kM = 5;
constexpr unsigned kFull = 31;

// Number of classes of I after gluing the subset J to one class.
int classes_mod(unsigned I, unsigned J) {
    return std::popcount(I & ~J) + ((I & J) ? 1 : 0);
}

// Same with two disjoint glued subsets.
int classes_mod2(unsigned I, unsigned J1, unsigned J2) {
    return std::popcount(I & ~(J1 | J2)) + ((I & J1) ? 1 : 0) + ((I & J2) ? 1 : 0);
}

std::vector<int> sorted_members(unsigned mask) {
    std::vector<int> v;
    for (int i = 0; i < kM; ++i)
        if (mask & (1u << i)) v.push_back(i + 1);
    return v;
}

std::vector<Rat> e(int n, int k) { // standard basis vector, 1-based k
    std::vector<Rat> v(n, Rat(0));
    v[k - 1] = 1;
    return v;
}

} // namespace

bool FamilyKey::parametrized() const { return param_kind() != ParamKind::None; }

ParamKind FamilyKey::param_kind() const {
    switch (fam) {
        case Fam::P53: return ParamKind::P2;
        case Fam::P52: return ParamKind::P1xP1;
        case Fam::P53_J3:
        case Fam::P52_J2:
        case Fam::P42: return ParamKind::P1;
        default: return ParamKind::None;
    }
}

RankMatrix FamilyKey::rank_matrix() const {
    if (fam == Fam::VarpiFibre) return rho_inverse(split);
    RankMatrix phi(kM);
    for (unsigned I = 0; I <= kFull; ++I) {
        int v = 0;
        switch (fam) {
            case Fam::P53: v = std::min(std::popcount(I), 3); break;
            case Fam::P53_J3:
                v = (I == J) ? 2 : std::min(std::popcount(I), 3);
                break;
            case Fam::P53_J1J2:
                v = (I == (kFull ^ J) || I == (kFull ^ J2)) ? 2 : std::min(std::popcount(I), 3);
                break;
            case Fam::P53_J2: v = std::min(classes_mod(I, J), 3); break;
            case Fam::P52: v = std::min(std::popcount(I), 2); break;
            case Fam::P52_J2:
            case Fam::P52_J3: v = std::min(classes_mod(I, J), 2); break;
            case Fam::P52_J1J2: v = std::min(classes_mod2(I, J, J2), 2); break;
            case Fam::P42: {
                unsigned ibit = 1u << (i - 1);
                v = ((I & ibit) ? 1 : 0) + std::min(std::popcount(I & ~ibit), 2);
                break;
            }
            case Fam::P42_J: {
                unsigned ibit = 1u << (i - 1);
                v = ((I & ibit) ? 1 : 0) + std::min(classes_mod(I & ~ibit, J), 2);
                break;
            }
            case Fam::VarpiFibre: break;
        }
        phi.set(I, v);
    }
    return phi;
}

std::string FamilyKey::type_label() const {
    switch (fam) {
        case Fam::P53: return "(5,10)";
        case Fam::P53_J3: return "(5,8)";
        case Fam::P53_J1J2: return "(5,6)";
        case Fam::P53_J2: return "(4,6)";
        case Fam::P52: return "(5)";
        case Fam::P52_J2: return "(4)";
        case Fam::P52_J1J2: return "(3)a";
        case Fam::P52_J3: return "(3)b";
        case Fam::P42: return "(5,5)";
        case Fam::P42_J: return "(4,4)b";
        case Fam::VarpiFibre: break;
    }
    std::string t = split.type_string();
    if (t == "{5^4}") return "(5,10,10)";
    if (t == "{5^1}") return "(∅)";
    if (t == "{1^1,4^3}") return "(5,10,7)";
    if (t == "{1^1,4^1}") return "(2)a";
    if (t == "{2^1,3^2}") return "(4,4)a";
    if (t == "{2^1,3^1}") return "(2)b";
    if (t == "{1^1,1^1,3^2}") return "(5,8,5)";
    if (t == "{1^1,1^1,3^1}") return "(3,3)b";
    if (t == "{1^1,2^1,2^1}") return "(3,3)a";
    if (t == "{1^1,1^1,1^1,2^1}") return "(4,6,4)";
    fail("not_in_image", "splitting " + t + " is not a single-orbit row for (4,5)");
}

std::string FamilyKey::tag() const {
    switch (fam) {
        case Fam::VarpiFibre: return "varpi" + split.blocks_string();
        case Fam::P53: return "phi[5^3]";
        case Fam::P53_J3:
        case Fam::P53_J2: return "phi[5^3;" + subset_string(J) + "]";
        case Fam::P53_J1J2:
            return "phi[5^3;" + subset_string(J) + "," + subset_string(J2) + "]";
        case Fam::P52: return "phi[5^2]";
        case Fam::P52_J2:
        case Fam::P52_J3: return "phi[5^2;" + subset_string(J) + "]";
        case Fam::P52_J1J2:
            return "phi[5^2;" + subset_string(J) + "," + subset_string(J2) + "]";
        case Fam::P42: return "phi[4^2;" + std::to_string(i) + "]";
        case Fam::P42_J:
            return "phi[4^2;" + std::to_string(i) + ";" + subset_string(J) + "]";
    }
    fail("bad_family_tag", "unknown family");
}

bool FamilyKey::operator==(const FamilyKey& o) const {
    return fam == o.fam && J == o.J && J2 == o.J2 && i == o.i &&
           (fam != Fam::VarpiFibre || split == o.split);
}

ProjConfig FamilyKey::representative_with(const std::vector<std::vector<Rat>>& params) const {
    const int n = 4;
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            fail("bad_parameter_arity", tag() + " takes " + std::to_string(count) +
                                            " parameter point(s), got " +
                                            std::to_string(params.size()));
    };
    auto generic1 = [&](const std::vector<Rat>& p) {
        auto q = normalize_projective(p);
        if (!p1_generic(q))
            fail("nongeneric_parameter", tag() + ": parameter must avoid [1:0],[0:1],[1:1]");
        return q;
    };
    if (fam == Fam::VarpiFibre) {
        need(0);
        return representative(split, n);
    }
    std::vector<std::vector<Rat>> c(kM);
    auto place = [&](int point_1based, std::vector<Rat> v) { c[point_1based - 1] = std::move(v); };
    auto on_line = [&](const std::vector<Rat>& p) {
        return std::vector<Rat>{p[0], p[1], Rat(0), Rat(0)};
    };
    switch (fam) {
        case Fam::P53: {
            // [e1,e2,e3,e1+e2+e3,p]
            need(1);
            auto p = normalize_projective(params[0]);
            if (!p2_generic(p))
                fail("nongeneric_parameter",
                     tag() + ": parameter must have nonzero, pairwise distinct coordinates");
            place(1, e(n, 1));
            place(2, e(n, 2));
            place(3, e(n, 3));
            place(4, {Rat(1), Rat(1), Rat(1), Rat(0)});
            place(5, {p[0], p[1], p[2], Rat(0)});
            break;
        }
        case Fam::P53_J3: {
            // collinear triple J carries the line; the parameter sits at max(J)
            need(1);
            auto p = generic1(params[0]);
            auto j = sorted_members(J);
            auto d = sorted_members(kFull ^ J);
            place(j[0], e(n, 1));
            place(j[1], e(n, 2));
            place(j[2], on_line(p));
            place(d[0], e(n, 3));
            place(d[1], {Rat(1), Rat(1), Rat(1), Rat(0)});
            break;
        }
        case Fam::P53_J1J2: {
            // two lines meeting at the leftover point x
            need(0);
            auto j1 = sorted_members(J);
            auto j2 = sorted_members(J2);
            int x = sorted_members(kFull ^ (J | J2))[0];
            place(j1[0], e(n, 1));
            place(j1[1], e(n, 2));
            place(x, {Rat(1), Rat(1), Rat(0), Rat(0)});
            place(j2[0], e(n, 3));
            place(j2[1], {Rat(1), Rat(1), Rat(1), Rat(0)});
            break;
        }
        case Fam::P53_J2: {
            // pair J coincident, the four classes in general position
            need(0);
            auto j = sorted_members(J);
            auto rest = sorted_members(kFull ^ J);
            place(j[0], e(n, 1));
            place(j[1], e(n, 1));
            place(rest[0], e(n, 2));
            place(rest[1], e(n, 3));
            place(rest[2], {Rat(1), Rat(1), Rat(1), Rat(0)});
            break;
        }
        case Fam::P52: {
            need(2);
            auto p = generic1(params[0]);
            auto q = generic1(params[1]);
            if (!p1xp1_generic(p, q))
                fail("nongeneric_parameter", tag() + ": the two parameters must differ");
            place(1, e(n, 1));
            place(2, e(n, 2));
            place(3, {Rat(1), Rat(1), Rat(0), Rat(0)});
            place(4, on_line(p));
            place(5, on_line(q));
            break;
        }
        case Fam::P52_J2: {
            need(1);
            auto p = generic1(params[0]);
            auto j = sorted_members(J);
            auto rest = sorted_members(kFull ^ J);
            place(rest[0], e(n, 1));
            place(rest[1], e(n, 2));
            place(rest[2], {Rat(1), Rat(1), Rat(0), Rat(0)});
            place(j[0], on_line(p));
            place(j[1], on_line(p));
            break;
        }
        case Fam::P52_J1J2: {
            need(0);
            auto j1 = sorted_members(J);
            auto j2 = sorted_members(J2);
            int x = sorted_members(kFull ^ (J | J2))[0];
            place(j1[0], e(n, 1));
            place(j1[1], e(n, 1));
            place(j2[0], e(n, 2));
            place(j2[1], e(n, 2));
            place(x, {Rat(1), Rat(1), Rat(0), Rat(0)});
            break;
        }
        case Fam::P52_J3: {
            need(0);
            auto j = sorted_members(J);
            auto rest = sorted_members(kFull ^ J);
            for (int p : j) place(p, e(n, 1));
            place(rest[0], e(n, 2));
            place(rest[1], {Rat(1), Rat(1), Rat(0), Rat(0)});
            break;
        }
        case Fam::P42: {
            need(1);
            auto p = generic1(params[0]);
            auto rest = sorted_members(kFull ^ (1u << (i - 1)));
            place(i, e(n, 3));
            place(rest[0], e(n, 1));
            place(rest[1], e(n, 2));
            place(rest[2], {Rat(1), Rat(1), Rat(0), Rat(0)});
            place(rest[3], on_line(p));
            break;
        }
        case Fam::P42_J: {
            need(0);
            auto j = sorted_members(J);
            auto rest = sorted_members(kFull ^ (J | (1u << (i - 1))));
            place(i, e(n, 3));
            place(rest[0], e(n, 1));
            place(rest[1], e(n, 2));
            place(j[0], {Rat(1), Rat(1), Rat(0), Rat(0)});
            place(j[1], {Rat(1), Rat(1), Rat(0), Rat(0)});
            break;
        }
        case Fam::VarpiFibre: break;
    }
    return config_from_columns(n, c);
}

ProjConfig FamilyKey::default_representative() const {
    switch (param_kind()) {
        case ParamKind::None: return representative_with({});
        case ParamKind::P1: return representative_with({{Rat(1), Rat(2)}});
        case ParamKind::P2: return representative_with({{Rat(1), Rat(2), Rat(3)}});
        case ParamKind::P1xP1:
            return representative_with({{Rat(1), Rat(2)}, {Rat(1), Rat(3)}});
    }
    fail("bad_family_tag", "unknown parameter kind");
}

namespace {

unsigned parse_subset(const std::string& s, std::size_t& pos) {
    if (pos >= s.size() || s[pos] != '{') fail("bad_family_tag", "expected '{' in " + s);
    ++pos;
    unsigned mask = 0;
    while (pos < s.size() && s[pos] != '}') {
        if (s[pos] == ',') { ++pos; continue; }
        if (s[pos] < '1' || s[pos] > '5') fail("bad_family_tag", "bad point index in " + s);
        mask |= 1u << (s[pos] - '1');
        ++pos;
    }
    if (pos >= s.size()) fail("bad_family_tag", "unterminated subset in " + s);
    ++pos; // '}'
    return mask;
}

} // namespace

FamilyKey parse_family_tag(const std::string& tag) {
    FamilyKey k;
    auto starts = [&](const char* p) { return tag.rfind(p, 0) == 0; };
    if (starts("varpi{")) {
        // varpi{{1,2}^1,{3,4,5}^2}
        std::size_t pos = 5;
        if (tag[pos] != '{') fail("bad_family_tag", tag);
        ++pos;
        std::vector<Splitting::Block> blocks;
        while (pos < tag.size() && tag[pos] != '}') {
            if (tag[pos] == ',') { ++pos; continue; }
            unsigned mask = parse_subset(tag, pos);
            if (pos >= tag.size() || tag[pos] != '^') fail("bad_family_tag", tag);
            ++pos;
            if (pos >= tag.size() || !isdigit(static_cast<unsigned char>(tag[pos])))
                fail("bad_family_tag", tag);
            int r = tag[pos] - '0';
            ++pos;
            blocks.push_back({mask, r});
        }
        k.fam = Fam::VarpiFibre;
        k.split = Splitting(5, std::move(blocks));
        return k;
    }
    if (starts("phi[5^3]") && tag == "phi[5^3]") { k.fam = Fam::P53; return k; }
    if (starts("phi[5^2]") && tag == "phi[5^2]") { k.fam = Fam::P52; return k; }
    if (starts("phi[5^3;") || starts("phi[5^2;")) {
        bool plane = starts("phi[5^3;");
        std::size_t pos = 8;
        unsigned J1 = parse_subset(tag, pos);
        unsigned J2 = 0;
        if (pos < tag.size() && tag[pos] == ',') {
            ++pos;
            J2 = parse_subset(tag, pos);
        }
        if (pos + 1 != tag.size() || tag[pos] != ']') fail("bad_family_tag", tag);
        if (J2) {
            if (std::popcount(J1) != 2 || std::popcount(J2) != 2 || (J1 & J2))
                fail("bad_family_tag", "need two disjoint pairs in " + tag);
            if (J1 > J2) std::swap(J1, J2);
            k.fam = plane ? Fam::P53_J1J2 : Fam::P52_J1J2;
            k.J = J1;
            k.J2 = J2;
            return k;
        }
        int size = std::popcount(J1);
        if (plane && size == 3) k.fam = Fam::P53_J3;
        else if (plane && size == 2) k.fam = Fam::P53_J2;
        else if (!plane && size == 2) k.fam = Fam::P52_J2;
        else if (!plane && size == 3) k.fam = Fam::P52_J3;
        else fail("bad_family_tag", "subset size not admissible in " + tag);
        k.J = J1;
        return k;
    }
    if (starts("phi[4^2;")) {
        std::size_t pos = 8;
        if (pos >= tag.size() || tag[pos] < '1' || tag[pos] > '5') fail("bad_family_tag", tag);
        k.i = tag[pos] - '0';
        ++pos;
        if (pos < tag.size() && tag[pos] == ']' && pos + 1 == tag.size()) {
            k.fam = Fam::P42;
            return k;
        }
        if (pos >= tag.size() || tag[pos] != ';') fail("bad_family_tag", tag);
        ++pos;
        k.J = parse_subset(tag, pos);
        if (pos + 1 != tag.size() || tag[pos] != ']') fail("bad_family_tag", tag);
        if (std::popcount(k.J) != 2 || (k.J & (1u << (k.i - 1))))
            fail("bad_family_tag", "pair must avoid the distinguished point in " + tag);
        k.fam = Fam::P42_J;
        return k;
    }
    fail("bad_family_tag", "unrecognized family tag: " + tag);
}

bool p1_generic(const std::vector<Rat>& p) {
    if (p.size() != 2) return false;
    return !is_zero(p[0]) && !is_zero(p[1]) && !is_zero(p[0] - p[1]);
}

bool p2_generic(const std::vector<Rat>& p) {
    if (p.size() != 3) return false;
    return !is_zero(p[0]) && !is_zero(p[1]) && !is_zero(p[2]) && !is_zero(p[0] - p[1]) &&
           !is_zero(p[1] - p[2]) && !is_zero(p[2] - p[0]);
}

bool p1xp1_generic(const std::vector<Rat>& p, const std::vector<Rat>& q) {
    if (!p1_generic(p) || !p1_generic(q)) return false;
    return !is_zero(p[0] * q[1] - p[1] * q[0]);
}

} // namespace pentad
