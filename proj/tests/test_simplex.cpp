#include <catch_amalgamated.hpp>

#include "segal/simplex.hpp"

using namespace segal;

namespace {

SimplexMap mk(int m, int n, std::vector<int> im) { return SimplexMap(Ordinal{m}, Ordinal{n}, std::move(im)); }

}  // namespace

TEST_CASE("composition is pointwise and unital") {
    // s0 o d1 = id on [1]
    auto s0 = mk(2, 1, {0, 0, 1});
    auto d1 = mk(1, 2, {0, 2});
    CHECK(compose(s0, d1) == SimplexMap::identity(Ordinal{1}));

    auto g = mk(1, 3, {1, 3});
    CHECK(compose(SimplexMap::identity(Ordinal{3}), g) == g);

    auto f = mk(2, 2, {0, 2, 2});
    auto h = mk(1, 2, {1, 2});
    CHECK(compose(f, h) == mk(1, 2, {2, 2}));

    CHECK_THROWS_AS(compose(h, g), std::invalid_argument);
}

TEST_CASE("composition is associative on all triples up to [3]") {
    std::vector<Ordinal> objs = {Ordinal{-1}, Ordinal{0}, Ordinal{1}, Ordinal{2}, Ordinal{3}};
    long bad = 0;
    for (auto a : objs)
        for (auto b : objs)
            for (auto c : objs)
                for (auto d : objs) {
                    auto fs = enumerate_maps(c, d);
                    auto gs = enumerate_maps(b, c);
                    auto hs = enumerate_maps(a, b);
                    for (const auto& f : fs)
                        for (const auto& g : gs) {
                            auto fg = compose(f, g);
                            for (const auto& h : hs)
                                if (compose(fg, h) != compose(f, compose(g, h))) ++bad;
                        }
                }
    REQUIRE(bad == 0);
}

TEST_CASE("join concatenates with a block shift") {
    auto f = mk(0, 1, {1});
    CHECK(join(f, SimplexMap::identity(Ordinal{0})) == mk(1, 2, {1, 2}));

    // [n] = [m] * [n \ m] at the level of identities
    for (int n = 0; n <= 5; ++n)
        for (int m = -1; m <= n; ++m) {
            auto lhs = join(SimplexMap::identity(Ordinal{m}), SimplexMap::identity(Ordinal{n - m - 1}));
            CHECK(lhs == SimplexMap::identity(Ordinal{n}));
        }

    auto empty = SimplexMap::identity(Ordinal{-1});
    auto g = mk(2, 2, {0, 2, 2});
    CHECK(join(g, empty) == g);
    CHECK(join(empty, g) == g);
}

TEST_CASE("join is strictly associative and respects injectivity") {
    auto maps = enumerate_maps(Ordinal{1}, Ordinal{1});
    auto more = enumerate_maps(Ordinal{0}, Ordinal{2});
    for (const auto& a : maps)
        for (const auto& b : more)
            for (const auto& c : maps) {
                CHECK(join(join(a, b), c) == join(a, join(b, c)));
                bool both = classify_map(a).injective && classify_map(b).injective;
                CHECK(classify_map(join(a, b)).injective == both);
            }
}

TEST_CASE("classify_map flags") {
    auto p = classify_map(mk(1, 2, {1, 2}));
    CHECK(p.right_active);
    CHECK_FALSE(p.left_active);
    CHECK(p.primitive);  // empty fiber over 0 is the only non-singleton

    for (int n = 0; n <= 5; ++n) {
        auto a_n = n == 0 ? mk(1, 0, {0, 0}) : mk(1, n, {0, n});
        CHECK(classify_map(a_n).active);
    }

    auto q = classify_map(mk(1, 0, {0, 0}));
    CHECK(q.active);
    CHECK_FALSE(q.left_strict);
    CHECK(q.primitive);

    CHECK(classify_map(SimplexMap::identity(Ordinal{3})).preprimitive);
    CHECK_FALSE(classify_map(SimplexMap::identity(Ordinal{3})).primitive);
}

TEST_CASE("joyal duality on pinned examples") {
    CHECK(joyal_minus(mk(1, 2, {0, 2})) == mk(2, 1, {0, 1, 1}));
    CHECK(joyal_minus(SimplexMap::identity(Ordinal{3})) == SimplexMap::identity(Ordinal{3}));
    CHECK(joyal_minus(mk(2, 2, {0, 0, 2})) == mk(2, 2, {0, 2, 2}));

    CHECK(joyal_plus(mk(2, 1, {0, 1, 1})) == mk(1, 2, {0, 2}));
    CHECK(joyal_plus(SimplexMap::identity(Ordinal{2})) == SimplexMap::identity(Ordinal{2}));
    CHECK(joyal_plus(mk(2, 2, {0, 2, 2})) == mk(2, 2, {0, 0, 2}));

    CHECK_THROWS_AS(joyal_minus(mk(1, 2, {0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(joyal_plus(mk(1, 2, {1, 2})), std::invalid_argument);
}

TEST_CASE("joyal duality roundtrips and contravariance up to [5]") {
    ActivityFilter ract;
    ract.right_active = true;
    ActivityFilter lact;
    lact.left_active = true;
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n) {
            for (const auto& f : enumerate_maps(Ordinal{m}, Ordinal{n}, ract)) {
                auto fm = joyal_minus(f);
                REQUIRE(classify_map(fm).left_active);
                REQUIRE(joyal_plus(fm) == f);
            }
            for (const auto& g : enumerate_maps(Ordinal{m}, Ordinal{n}, lact)) {
                auto gp = joyal_plus(g);
                REQUIRE(classify_map(gp).right_active);
                REQUIRE(joyal_minus(gp) == g);
            }
        }
    // contravariance: (f o f')^- = f'^- o f^-
    ActivityFilter ra;
    ra.right_active = true;
    for (int l = 0; l <= 3; ++l)
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n)
                for (const auto& f : enumerate_maps(Ordinal{m}, Ordinal{n}, ra))
                    for (const auto& fp : enumerate_maps(Ordinal{l}, Ordinal{m}, ra))
                        REQUIRE(joyal_minus(compose(f, fp)) ==
                                compose(joyal_minus(fp), joyal_minus(f)));
}

TEST_CASE("joyal duality restricts to active vs right strict") {
    // Active maps [n] -> [m] correspond under (-)^+ to the right strict maps
    // [m] -> [n], which are exactly the joins u * id_[0] for u in the
    // augmented category.
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n) {
            ActivityFilter act;
            act.active = true;
            std::vector<SimplexMap> via_plus;
            for (const auto& g : enumerate_maps(Ordinal{n}, Ordinal{m}, act))
                via_plus.push_back(joyal_plus(g));

            std::vector<SimplexMap> rstr;
            for (const auto& u : enumerate_maps(Ordinal{m - 1}, Ordinal{n - 1}))
                rstr.push_back(join(u, SimplexMap::identity(Ordinal{0})));

            REQUIRE(via_plus.size() == rstr.size());
            for (const auto& h : rstr)
                REQUIRE(std::find(via_plus.begin(), via_plus.end(), h) != via_plus.end());
        }
}

TEST_CASE("enumeration counts match the closed form") {
    CHECK(enumerate_maps(Ordinal{1}, Ordinal{1}).size() == 3);
    auto three = enumerate_maps(Ordinal{1}, Ordinal{1});
    CHECK(three[0] == mk(1, 1, {0, 0}));
    CHECK(three[1] == mk(1, 1, {0, 1}));
    CHECK(three[2] == mk(1, 1, {1, 1}));
    CHECK(enumerate_maps(Ordinal{2}, Ordinal{1}).size() == 4);
    for (int n = 0; n <= 6; ++n) CHECK(enumerate_maps(Ordinal{0}, Ordinal{n}).size() == static_cast<std::size_t>(n + 1));

    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n)
            REQUIRE(enumerate_maps(Ordinal{m}, Ordinal{n}).size() == detail::binom(m + n + 1, m + 1));

    CHECK(enumerate_maps(Ordinal{-1}, Ordinal{4}).size() == 1);
    CHECK(enumerate_maps(Ordinal{3}, Ordinal{-1}).empty());
}

TEST_CASE("map validation rejects bad input") {
    CHECK_THROWS_AS(mk(1, 2, {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(mk(1, 2, {0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(mk(1, 2, {0}), std::invalid_argument);
}
