#include <catch_amalgamated.hpp>

#include <set>

#include "segal/cyclic.hpp"

using namespace segal;

TEST_CASE("normalize translates into the fundamental window") {
    CHECK(normalize(1, 1, {2, 3}) == CyclicMap(1, 1, {0, 1}));
    CHECK(normalize(1, 1, {0, 1}) == CyclicMap(1, 1, {0, 1}));
    CHECK(normalize(1, 1, {1, 2}) == CyclicMap(1, 1, {1, 2}));
    CHECK(normalize(2, 1, {-3, -2, -2}) == CyclicMap(2, 1, {1, 2, 2}));
    CHECK_THROWS_AS(normalize(1, 1, {0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(normalize(1, 1, {1, 0}), std::invalid_argument);
}

TEST_CASE("the rotation by +1 squares to the identity on <1>") {
    auto tau = rotation_map(Rotation(1, 1));
    CHECK(tau == CyclicMap(1, 1, {1, 2}));
    CHECK(compose_cyclic(tau, tau) == CyclicMap::identity(1));
    CHECK(compose_cyclic(tau, CyclicMap::identity(1)) == tau);
    CHECK(compose_cyclic(project_from_delta(SimplexMap::identity(Ordinal{1})), tau) == CyclicMap(1, 1, {1, 2}));
}

TEST_CASE("project_from_delta is the evident inclusion") {
    for (int n = 0; n <= 4; ++n)
        CHECK(project_from_delta(SimplexMap::identity(Ordinal{n})) == CyclicMap::identity(n));
    CHECK(project_from_delta(SimplexMap(Ordinal{1}, Ordinal{2}, {0, 2})) == CyclicMap(1, 2, {0, 2}));
    CHECK(project_from_delta(SimplexMap(Ordinal{1}, Ordinal{0}, {0, 0})) == CyclicMap(1, 0, {0, 0}));
    CHECK_THROWS_AS(project_from_delta(SimplexMap(Ordinal{-1}, Ordinal{2}, {})), std::invalid_argument);
}

TEST_CASE("project_from_delta is a functor, injective on hom-sets") {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n) {
            std::set<std::vector<int>> seen;
            for (const auto& f : enumerate_maps(Ordinal{m}, Ordinal{n}))
                REQUIRE(seen.insert(project_from_delta(f).lift()).second);
        }
    for (int l = 0; l <= 3; ++l)
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n)
                for (const auto& f : enumerate_maps(Ordinal{m}, Ordinal{n}))
                    for (const auto& g : enumerate_maps(Ordinal{l}, Ordinal{m}))
                        REQUIRE(project_from_delta(compose(f, g)) ==
                                compose_cyclic(project_from_delta(f), project_from_delta(g)));
}

TEST_CASE("factorization into rotation and monotone part") {
    auto [r0, f0] = factorize(CyclicMap::identity(3));
    CHECK(r0.amount == 0);
    CHECK(f0 == SimplexMap::identity(Ordinal{3}));

    auto [r1, f1] = factorize(CyclicMap(1, 1, {1, 2}));
    CHECK(r1.amount == 1);
    CHECK(f1 == SimplexMap::identity(Ordinal{1}));
}

TEST_CASE("factorize is a bijection onto rotation x monotone, <= <3>") {
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n) {
            auto all = enumerate_cyclic_maps(m, n);
            REQUIRE(all.size() == (m + 1) * detail::binom(m + n + 1, m + 1));
            std::set<std::pair<int, std::vector<int>>> seen;
            for (const auto& c : all) {
                auto [r, f] = factorize(c);
                // recomposition and uniqueness of the window
                REQUIRE(compose_cyclic(project_from_delta(f), rotation_map(r)) == c);
                REQUIRE(seen.insert({r.amount, f.images()}).second);
                int windows = 0;
                for (int rr = 0; rr <= m; ++rr) {
                    int lo = c.lift_at(-rr), hi = c.lift_at(m - rr);
                    if (detail::floor_div(lo, n + 1) == detail::floor_div(hi, n + 1)) ++windows;
                }
                REQUIRE(windows == 1);
            }
            REQUIRE(seen.size() == all.size());
        }
}

TEST_CASE("hom-set counts and the automorphism group") {
    CHECK(enumerate_cyclic_maps(0, 0).size() == 1);
    CHECK(enumerate_cyclic_maps(1, 0).size() == 2);
    CHECK(enumerate_cyclic_maps(1, 1).size() == 6);

    for (int n = 0; n <= 5; ++n) {
        // Aut(<n>) is cyclic of order n+1 generated by +1
        std::set<std::vector<int>> autos;
        auto gen = rotation_map(Rotation(n, 1));
        auto cur = CyclicMap::identity(n);
        for (int k = 0; k <= n; ++k) {
            REQUIRE(autos.insert(cur.lift()).second);
            cur = compose_cyclic(gen, cur);
        }
        CHECK(cur == CyclicMap::identity(n));
        int iso_count = 0;
        for (const auto& c : enumerate_cyclic_maps(n, n)) {
            auto [r, f] = factorize(c);
            if (f.is_iso()) {
                ++iso_count;
                REQUIRE(autos.count(c.lift()) == 1);
            }
        }
        CHECK(iso_count == n + 1);
    }
}

TEST_CASE("cyclic composition is associative on objects <= <3>") {
    std::vector<std::vector<std::vector<CyclicMap>>> homs(4);
    for (int m = 0; m <= 3; ++m) {
        homs[m].resize(4);
        for (int n = 0; n <= 3; ++n) homs[m][n] = enumerate_cyclic_maps(m, n);
    }
    long bad = 0;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c)
                for (int d = 0; d <= 3; ++d)
                    for (const auto& f : homs[c][d])
                        for (const auto& g : homs[b][c]) {
                            auto fg = compose_cyclic(f, g);
                            for (const auto& h : homs[a][b])
                                if (compose_cyclic(fg, h) != compose_cyclic(f, compose_cyclic(g, h)))
                                    ++bad;
                        }
    REQUIRE(bad == 0);
}

TEST_CASE("display form") {
    CHECK(describe(rotation_map(Rotation(1, 1))) == "<1>-><1> points(1,0) order(1<0)");
}
