#include "pentad/config.hpp"
#include "pentad/error.hpp"
#include "pentad/sampling.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace pentad;

namespace {

std::vector<Rat> rv(std::initializer_list<int> xs) {
    std::vector<Rat> v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

} // namespace

TEST_CASE("rank of standard examples") {
    CHECK(rank(identity(4)) == 4);

    // columns (e1, e2, e2) in K^3
    ProjConfig v = config_from_columns(3, {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 1, 0})});
    CHECK(rank(v.cols) == 2);

    CHECK_THROWS_WITH_AS(rank(2, 3, {Rat(1)}), doctest::Contains("shape"), Error);
}

TEST_CASE("rank of a planted product factorization") {
    Sampler s(101);
    int done = 0;
    while (done < 10) {
        Mat b(4, 3), c(3, 5);
        for (auto* m : {&b, &c})
            for (auto& x : m->a) x = s.small_rat();
        if (rank(b) != 3 || rank(c) != 3) continue; // want generic factors
        Mat prod = mat_mul(b, c);
        CHECK(rank(prod) == 3);
        CHECK(oracles::rank_by_minors(prod) == 3);
        ++done;
    }
}

TEST_CASE("rank properties") {
    Sampler s(2024);
    for (int it = 0; it < 30; ++it) {
        Mat m(s.uniform(2, 4), s.uniform(2, 5));
        for (auto& x : m.a) x = s.small_rat();
        int r = rank(m);
        CHECK(r == rank(transpose(m)));
        CHECK(r == oracles::rank_by_minors(m));
        CHECK(r == oracles::gauss_rank(m));
        Mat g = s.invertible(m.rows);
        CHECK(rank(mat_mul(g, m)) == r);
    }
}

TEST_CASE("coordinates in span") {
    // basis {e1,e2}, target e1+2e2
    ProjConfig v = config_from_columns(3, {rv({1, 0, 0}), rv({0, 1, 0}), rv({1, 2, 0})});
    CHECK(coordinates_in_span(v, {1, 2}, 3) == std::vector<Rat>{Rat(1), Rat(2)});

    ProjConfig w =
        config_from_columns(3, {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1}), rv({1, 1, 1})});
    CHECK(coordinates_in_span(w, {1, 2, 3}, 4) == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});

    // basis {e1+e2, e1-e2}, target e1 -> (1/2, 1/2), matching Cramer
    ProjConfig u = config_from_columns(2, {rv({1, 1}), rv({1, -1}), rv({1, 0})});
    auto got = coordinates_in_span(u, {1, 2}, 3);
    auto want = oracles::cramer2(Rat(1), Rat(1), Rat(1), Rat(-1), Rat(1), Rat(0));
    CHECK(got == want);
    CHECK(got == std::vector<Rat>{Rat(1) / 2, Rat(1) / 2});

    CHECK_THROWS_WITH_AS((void)coordinates_in_span(w, {1, 1}, 4), doctest::Contains("dependent"),
                         Error);
    ProjConfig z = config_from_columns(3, {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})});
    CHECK_THROWS_WITH_AS((void)coordinates_in_span(z, {1, 2}, 3), doctest::Contains("span"),
                         Error);
}

TEST_CASE("recombination reproduces the target") {
    Sampler s(55);
    for (int it = 0; it < 25; ++it) {
        ProjConfig v = s.config(4, 5);
        std::vector<int> basis;
        for (int i = 1; i <= 5; ++i) {
            std::vector<std::vector<Rat>> cols;
            for (int b : basis) cols.push_back(v.point(b - 1));
            cols.push_back(v.point(i - 1));
            if (rank(from_columns(4, cols)) == static_cast<int>(cols.size())) basis.push_back(i);
        }
        for (int t = 1; t <= 5; ++t) {
            auto x = coordinates_in_span(v, basis, t);
            std::vector<Rat> rebuilt(4, Rat(0));
            for (std::size_t k = 0; k < basis.size(); ++k)
                for (int r = 0; r < 4; ++r) rebuilt[r] += x[k] * v.cols.at(r, basis[k] - 1);
            CHECK(rebuilt == v.point(t - 1));
        }
    }
}

TEST_CASE("minors") {
    Mat m(2, 2);
    m.at(0, 0) = 1;
    m.at(1, 1) = 1;
    CHECK(minor_det(m, {0, 1}, {0, 1}) == Rat(1));

    Mat rep(2, 2);
    rep.at(0, 0) = 1;
    rep.at(0, 1) = 1; // |e1 e1|
    CHECK(minor_det(rep, {0, 1}, {0, 1}) == Rat(0));

    Mat two(2, 2);
    two.at(0, 0) = 1;
    two.at(1, 0) = 2;
    two.at(0, 1) = 3;
    two.at(1, 1) = 4;
    CHECK(minor_det(two, {0, 1}, {0, 1}) == Rat(-2));
    CHECK(minor_det(two, {0, 1}, {1, 0}) == Rat(2)); // alternating in column order

    CHECK_THROWS_WITH_AS(minor_det(two, {0, 1}, {0}), doctest::Contains("equally many"), Error);
}

TEST_CASE("determinant agrees with Laplace expansion") {
    Sampler s(7);
    for (int it = 0; it < 20; ++it) {
        Mat m(4, 4);
        for (auto& x : m.a) x = s.small_rat();
        CHECK(determinant(m) == oracles::laplace_det(m));
    }
}

TEST_CASE("projective config validation and equality") {
    CHECK_THROWS_WITH_AS(config_from_columns(3, {rv({0, 0, 0})}), doctest::Contains("zero"),
                         Error);
    ProjConfig a = config_from_columns(2, {rv({1, 2}), rv({0, 3})});
    ProjConfig b = config_from_columns(2, {rv({2, 4}), rv({0, -5})});
    CHECK(projectively_equal(a, b));
    ProjConfig c = config_from_columns(2, {rv({1, 2}), rv({1, 3})});
    CHECK(!projectively_equal(a, c));
}
