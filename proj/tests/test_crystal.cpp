#include "doctest.h"

#include <numeric>

#include "crystaldeg/crystal.hpp"
#include "oracles.hpp"

using namespace crystaldeg;

namespace {

const Tableau kE3R = Tableau::from_rows({{1, 2}, {3, 4}});  // center of the 20-vertex crystal

}  // namespace

TEST_CASE("suffix_stat") {
    CHECK(suffix_stat({2, 3, 1, 2}, 1, 4, 4) == 1);
    CHECK(suffix_stat({2, 3, 1, 2}, 1, 5, 4) == 0);  // empty suffix
    CHECK(suffix_stat({2, 2, 1, 1}, 1, 1, 4) == 0);
    CHECK_THROWS_AS(suffix_stat({1, 2}, 1, 4, 4), UsageError);
    CHECK_THROWS_AS(suffix_stat({1, 2}, 0, 1, 4), UsageError);
    CHECK_THROWS_AS(suffix_stat({1, 2}, 4, 1, 4), UsageError);
}

TEST_CASE("prefix_stat mirrors suffix_stat") {
    const Word w{2, 3, 1, 2, 1};
    for (int c = 1; c <= 3; ++c) {
        const int total = -suffix_stat(w, c, 1, 4);
        CHECK(prefix_stat(w, c, static_cast<int>(w.size()), 4) == total);
    }
}

TEST_CASE("e_op fixtures") {
    CHECK(e_op(Tableau::from_rows({{1, 2}, {2, 3}}), 1, 4) ==
          Tableau::from_rows({{1, 1}, {2, 3}}));
    CHECK(e_op(Tableau::from_rows({{1, 1}, {2, 2}}), 1, 4) == std::nullopt);
    // the center vertex has no color-2 edges at all
    CHECK(e_op(kE3R, 2, 4) == std::nullopt);
}

TEST_CASE("f_op fixtures") {
    CHECK(f_op(Tableau::from_rows({{1, 1}, {2, 3}}), 1, 4) ==
          Tableau::from_rows({{1, 2}, {2, 3}}));
    // no letter equal to the color anywhere
    CHECK(f_op(Tableau::from_rows({{2, 2}, {3, 3}}), 1, 4) == std::nullopt);
    CHECK(f_op(Tableau::from_rows({{1, 1}, {2, 2}}), 2, 4) ==
          Tableau::from_rows({{1, 1}, {2, 3}}));
}

TEST_CASE("f_op matches the inverse-search oracle on shape (2,2), n=4") {
    for (const Tableau& t : enumerate_ssyt(Partition{{2, 2}}, 4))
        for (int c = 1; c <= 3; ++c)
            CHECK(f_op(t, c, 4) == oracles::inverse_search_f(t, c, 4));
}

TEST_CASE("e_op and f_op are mutually inverse at desk scale") {
    for (int m = 1; m <= 4; ++m)
        for (const Partition& shape : partitions_of(m)) {
            if (shape.length() > 4)
                continue;
            for (const Tableau& t : enumerate_ssyt(shape, 4))
                for (int c = 1; c <= 3; ++c) {
                    if (const auto down = f_op(t, c, 4))
                        CHECK(e_op(*down, c, 4) == t);
                    if (const auto up = e_op(t, c, 4))
                        CHECK(f_op(*up, c, 4) == t);
                }
        }
}

TEST_CASE("f_op shifts the content by one letter") {
    for (const Tableau& t : enumerate_ssyt(Partition{{3, 1}}, 4))
        for (int c = 1; c <= 3; ++c)
            if (const auto down = f_op(t, c, 4)) {
                WeightVector expected = content(t, 4);
                --expected[c - 1];
                ++expected[c];
                CHECK(content(*down, 4) == expected);
            }
}

TEST_CASE("build_crystal on the 20-vertex example") {
    const CrystalGraph g = build_crystal(Partition{{2, 2}}, 4);
    CHECK(g.num_vertices() == 20);
    for (int c = 1; c <= 3; ++c) {
        int edges = 0;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (g.lower_of(v, c) != -1)
                ++edges;
        CHECK(edges == 10);
    }
}

TEST_CASE("build_crystal degenerate shapes") {
    const CrystalGraph path = build_crystal(Partition{{1}}, 2);
    CHECK(path.vertices == std::vector<Tableau>{Tableau::from_rows({{1}}),
                                                Tableau::from_rows({{2}})});
    CHECK(path.lower_of(0, 1) == 1);
    CHECK(path.lower_of(1, 1) == -1);

    const CrystalGraph column = build_crystal(Partition{{1, 1, 1}}, 3);
    CHECK(column.num_vertices() == 1);
    for (int c = 1; c <= 2; ++c) {
        CHECK(column.lower_of(0, c) == -1);
        CHECK(column.raise_of(0, c) == -1);
    }
}

TEST_CASE("raise and lower maps are mutually inverse") {
    const CrystalGraph g = build_crystal(Partition{{2, 1}}, 4);
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int c = 1; c <= 3; ++c) {
            const int w = g.lower_of(v, c);
            if (w != -1)
                CHECK(g.raise_of(w, c) == v);
            const int u = g.raise_of(v, c);
            if (u != -1)
                CHECK(g.lower_of(u, c) == v);
        }
}

TEST_CASE("string_stats") {
    const CrystalGraph g22 = build_crystal(Partition{{2, 2}}, 4);
    CHECK(string_stats(g22, g22.index_of(kE3R), 1) == StringStats{1, -1});
    CHECK(string_stats(g22, g22.index_of(kE3R), 2) == StringStats{0, 0});
    const CrystalGraph g2 = build_crystal(Partition{{2}}, 2);
    CHECK(string_stats(g2, g2.index_of(Tableau::from_rows({{1, 2}})), 1) ==
          StringStats{1, -1});
}

TEST_CASE("character") {
    const CrystalGraph g22 = build_crystal(Partition{{2, 2}}, 4);
    const auto chi22 = character(g22);
    CHECK(chi22.at(WeightVector{1, 1, 1, 1}) == 2);

    const CrystalGraph g1 = build_crystal(Partition{{1}}, 3);
    const auto chi1 = character(g1);
    CHECK(chi1.size() == 3);
    CHECK(chi1.at(WeightVector{1, 0, 0}) == 1);
    CHECK(chi1.at(WeightVector{0, 1, 0}) == 1);
    CHECK(chi1.at(WeightVector{0, 0, 1}) == 1);

    const auto chi21 = character(build_crystal(Partition{{2, 1}}, 3));
    long long mass = 0;
    for (const auto& [w, mult] : chi21) {
        mass += mult;
        for (int i = 0; i + 1 < 3; ++i) {
            WeightVector s = w;
            std::swap(s[i], s[i + 1]);
            CHECK(chi21.at(s) == mult);
        }
    }
    CHECK(mass == 8);
}

TEST_CASE("highest_weights") {
    const CrystalGraph g22 = build_crystal(Partition{{2, 2}}, 4);
    CHECK(highest_weights(g22) ==
          std::vector<int>{g22.index_of(Tableau::from_rows({{1, 1}, {2, 2}}))});
    const CrystalGraph column = build_crystal(Partition{{1, 1}}, 2);
    CHECK(highest_weights(column) == std::vector<int>{0});
    const CrystalGraph g21 = build_crystal(Partition{{2, 1}}, 3);
    CHECK(highest_weights(g21) ==
          std::vector<int>{g21.index_of(Tableau::from_rows({{1, 1}, {2}}))});
}

TEST_CASE("crystals are connected with a unique highest weight") {
    for (int m = 1; m <= 8; ++m)
        for (const Partition& shape : partitions_of(m))
            for (int n = 2; n <= 6; ++n) {
                if (shape.length() > n)
                    continue;
                const CrystalGraph g = build_crystal(shape, n);
                CHECK(is_connected(g));
                CHECK(highest_weights(g).size() == 1);
            }
}
