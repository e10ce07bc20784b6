#include "pentad/enumeration.hpp"
#include "pentad/error.hpp"
#include "pentad/sampling.hpp"

#include <doctest.h>

#include <bit>

using namespace pentad;

namespace {

std::vector<Rat> rv(std::initializer_list<int> xs) {
    std::vector<Rat> v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

// All splittings of five points realizable in P^3 (the full image, not just
// the single-orbit part): rank 1 or 2 <= rank <= size-1 per block, total <= 4.
std::vector<Splitting> all_image_splittings() {
    std::vector<Splitting> out;
    for (const RankMatrix& phi : enumerate_image()) {
        Splitting s = rho(phi);
        bool fresh = true;
        for (const auto& t : out)
            if (t == s) fresh = false;
        if (fresh) out.push_back(s);
    }
    return out;
}

} // namespace

TEST_CASE("compute_splitting examples") {
    ProjConfig a =
        config_from_columns(3, {rv({1, 0, 0}), rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})});
    CHECK(compute_splitting(a) == make_splitting(4, {{{1, 2}, 1}, {{3}, 1}, {{4}, 1}}));
    CHECK(compute_splitting(a).type_string() == "{1^1,1^1,2^1}");

    ProjConfig b =
        config_from_columns(3, {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1}), rv({0, 1, 1})});
    CHECK(compute_splitting(b) == make_splitting(4, {{{1}, 1}, {{2, 3, 4}, 2}}));
    CHECK(compute_splitting(b).type_string() == "{1^1,3^2}");

    ProjConfig c = config_from_columns(4, {rv({1, 0, 0, 0}), rv({0, 1, 0, 0}), rv({0, 0, 1, 0}),
                                           rv({0, 0, 0, 1}), rv({1, 1, 1, 1})});
    CHECK(compute_splitting(c) == make_splitting(5, {{{1, 2, 3, 4, 5}, 4}}));
}

TEST_CASE("image membership") {
    CHECK(image_membership(make_splitting(5, {{{1, 2, 3, 4, 5}, 3}}), 4));
    CHECK(image_membership(make_splitting(5, {{{1}, 1}, {{2, 3, 4, 5}, 2}}), 4));
    CHECK(!image_membership(make_splitting(5, {{{1, 2, 3, 4, 5}, 5}}), 4));
    CHECK(!image_membership(make_splitting(5, {{{1, 2, 3, 4, 5}, 4}}), 3)); // exceeds ambient
}

TEST_CASE("single-orbit splittings") {
    CHECK(pprime_membership(make_splitting(5, {{{1, 2, 3, 4, 5}, 4}})));
    CHECK(!pprime_membership(make_splitting(5, {{{1, 2, 3, 4, 5}, 3}})));
    CHECK(!pprime_membership(make_splitting(5, {{{1}, 1}, {{2, 3, 4, 5}, 2}})));
    CHECK(pprime_membership(
        make_splitting(5, {{{1}, 1}, {{2}, 1}, {{3}, 1}, {{4}, 1}, {{5}, 1}})));
}

TEST_CASE("rho_inverse") {
    Splitting s = make_splitting(5, {{{1}, 1}, {{2}, 1}, {{3}, 1}, {{4, 5}, 1}});
    ProjConfig rep = config_from_columns(4, {rv({1, 0, 0, 0}), rv({0, 1, 0, 0}), rv({0, 0, 1, 0}),
                                             rv({0, 0, 0, 1}), rv({0, 0, 0, 1})});
    CHECK(rho_inverse(s) == compute_rank_matrix(rep));
    CHECK(rank_type(rho_inverse(s)).label == "(4,6,4)");

    Splitting top = make_splitting(5, {{{1, 2, 3, 4, 5}, 4}});
    RankMatrix phi = rho_inverse(top);
    for (unsigned I = 0; I <= phi.full_mask(); ++I)
        CHECK(phi(I) == std::min(std::popcount(I), 4));

    Splitting flat = make_splitting(5, {{{1, 2, 3, 4, 5}, 1}});
    RankMatrix one = rho_inverse(flat);
    for (unsigned I = 1; I <= one.full_mask(); ++I) CHECK(one(I) == 1);

    CHECK_THROWS_WITH_AS(rho_inverse(make_splitting(5, {{{1, 2, 3, 4, 5}, 3}})),
                         doctest::Contains("more"), Error);
}

TEST_CASE("representatives of splittings") {
    ProjConfig top = representative(make_splitting(5, {{{1, 2, 3, 4, 5}, 4}}), 4);
    ProjConfig expect = config_from_columns(4, {rv({1, 0, 0, 0}), rv({0, 1, 0, 0}),
                                                rv({0, 0, 1, 0}), rv({0, 0, 0, 1}),
                                                rv({1, 1, 1, 1})});
    CHECK(projectively_equal(top, expect));

    ProjConfig plane = representative(make_splitting(5, {{{1, 2, 3, 4, 5}, 3}}), 4,
                                      {{Rat(1), Rat(2), Rat(3)}});
    ProjConfig expect_plane =
        config_from_columns(4, {rv({1, 0, 0, 0}), rv({0, 1, 0, 0}), rv({0, 0, 1, 0}),
                                rv({1, 1, 1, 0}), rv({1, 2, 3, 0})});
    CHECK(projectively_equal(plane, expect_plane));

    ProjConfig pairs = representative(make_splitting(5, {{{1}, 1}, {{2, 3}, 1}, {{4, 5}, 1}}), 4);
    ProjConfig expect_pairs =
        config_from_columns(4, {rv({1, 0, 0, 0}), rv({0, 1, 0, 0}), rv({0, 1, 0, 0}),
                                rv({0, 0, 1, 0}), rv({0, 0, 1, 0})});
    CHECK(projectively_equal(pairs, expect_pairs));

    CHECK_THROWS_WITH_AS(representative(make_splitting(5, {{{1, 2, 3, 4, 5}, 3}}), 4, {}),
                         doctest::Contains("parameter"), Error);
    CHECK_THROWS_WITH_AS(
        representative(make_splitting(5, {{{1, 2, 3, 4, 5}, 3}}), 4, {{Rat(1), Rat(2)}}),
        doctest::Contains("parameter"), Error);
}

TEST_CASE("representative round-trips over the whole splitting image") {
    // generic parameters: distinct values keep every block indecomposable
    int count = 0;
    for (const Splitting& s : all_image_splittings()) {
        CHECK(image_membership(s, 4));
        std::vector<std::vector<Rat>> params;
        int salt = 2;
        for (const auto& b : s.blocks) {
            int size = std::popcount(b.mask);
            if (b.rank < 2) continue;
            for (int k = 0; k < size - 1 - b.rank; ++k) {
                std::vector<Rat> p;
                for (int c = 0; c < b.rank; ++c) p.emplace_back(salt = salt + 1 + c);
                params.push_back(p);
            }
        }
        ProjConfig rep = representative(s, 4, params);
        CHECK(compute_splitting(rep) == s);
        // blocks span independently
        int total = 0;
        for (const auto& b : s.blocks) total += rep.subset_rank(b.mask);
        CHECK(total == rep.full_rank());
        ++count;
    }
    CHECK(count == 84); // 77 single-orbit rows + {5^3}, {5^2}, {1^1,4^2} x5
}

TEST_CASE("indecomposable blocks carry general-position certificates") {
    // A rank-3 indecomposable block of size five holds a 4-tuple in general
    // position; a rank-2 indecomposable block holds a triple with all pairs
    // independent.
    Sampler s(1234);
    auto tuples = [](unsigned block, int size) {
        std::vector<unsigned> out;
        for (unsigned T = 0; T < 32; ++T)
            if ((T & block) == T && std::popcount(T) == size) out.push_back(T);
        return out;
    };
    int seen3 = 0, seen2 = 0;
    std::vector<ProjConfig> pool;
    for (const auto& e : Catalogue::get().entries()) {
        pool.push_back(e.rep);
        pool.push_back(act(s.invertible(4), e.rep));
    }
    for (int it = 0; it < 50; ++it) pool.push_back(s.config(4, 5));
    for (const ProjConfig& v : pool) {
        for (const auto& b : compute_splitting(v).blocks) {
            int size = std::popcount(b.mask);
            if (b.rank == 3 && size == 5) {
                bool found = false;
                for (unsigned T : tuples(b.mask, 4)) {
                    bool general = true;
                    for (unsigned tri : tuples(T, 3))
                        if (v.subset_rank(tri) != 3) general = false;
                    if (general) found = true;
                }
                CHECK(found);
                ++seen3;
            }
            if (b.rank == 2 && size >= 3) {
                bool found = false;
                for (unsigned T : tuples(b.mask, 3)) {
                    bool general = true;
                    for (unsigned pr : tuples(T, 2))
                        if (v.subset_rank(pr) != 2) general = false;
                    if (general) found = true;
                }
                CHECK(found);
                ++seen2;
            }
        }
    }
    CHECK(seen3 >= 10);
    CHECK(seen2 >= 10);
}

TEST_CASE("splitting blocks are canonically ordered") {
    Splitting s = make_splitting(5, {{{4, 5}, 1}, {{2}, 1}, {{1, 3}, 1}});
    CHECK(s.blocks[0].mask == 0b00101u);
    CHECK(s.blocks[1].mask == 0b00010u);
    CHECK(s.blocks[2].mask == 0b11000u);
    CHECK(s.blocks_string() == "{{1,3}^1,{2}^1,{4,5}^1}");

    CHECK_THROWS_WITH_AS(make_splitting(5, {{{1, 2}, 1}, {{2, 3, 4, 5}, 1}}),
                         doctest::Contains("overlap"), Error);
    CHECK_THROWS_WITH_AS(make_splitting(5, {{{1, 2}, 1}}), doctest::Contains("cover"), Error);
}
