#include <functional>

#include "doctest.h"
#include "slicegap/bredon.hpp"
#include "slicegap/error.hpp"
#include "slicegap/slice.hpp"

using namespace slicegap;

TEST_CASE("dimensions and cw ranges") {
    CHECK(SliceCell(8, 2, 3).dimension() == 6);
    CHECK(SliceCell(8, 2, 3, false).dimension() == 5);
    CHECK(cw_range(17, 8) == std::pair{2L, 17L});
    CHECK(cw_range(-17, 8) == std::pair{-17L, -3L});
    CHECK(cw_range(-8, 8) == std::pair{-8L, -1L});
    CHECK(cw_range(0, 4) == std::pair{0L, 0L});
    CHECK_THROWS_AS(SliceCell(8, 3, 1), InvalidInput);
    for (int g : {2, 4, 8, 16})
        for (int k : subgroups(g))
            for (long m = -4; m <= 4; ++m)
                for (bool reg : {true, false}) {
                    SliceCell c(g, k, m, reg);
                    auto [lo, hi] = cw_range(c);
                    auto dims = cell_dimensions(c);
                    for (long d : dims) {
                        CHECK(d >= lo);
                        CHECK(d <= hi);
                    }
                    // the cell dimensions agree with the chain model
                    if (g <= 8 && m != 0) {
                        auto C = slice_cell_complex(g, k, m, reg);
                        CHECK(C.min_degree() == dims.front());
                        CHECK(C.max_degree() == dims.back());
                    }
                }
}

TEST_CASE("restriction and smash products") {
    auto R = restrict_cell(SliceCell(8, 4, 3), 2);
    Wedge want;
    want.g = 2;
    want.add(SliceCell(2, 2, 6), 2);
    CHECK(R == want);
    for (int g : {2, 4, 8})
        for (int k : subgroups(g))
            for (int j : subgroups(g))
                for (long m = -2; m <= 2; ++m) {
                    SliceCell c(g, k, m);
                    auto W = restrict_cell(c, j);
                    CHECK(W.underlying_count() == c.underlying_count());
                    for (auto& [cell, count] : W.cells) CHECK(cell.dimension() == c.dimension());
                }

    auto S = smash(SliceCell(8, 2, 1), SliceCell(8, 4, 1));
    Wedge w2;
    w2.g = 8;
    w2.add(SliceCell(8, 2, 3), 2);
    CHECK(S == w2);
    CHECK_THROWS_AS(smash(SliceCell(4, 2, 1, false), SliceCell(4, 2, 1)), InvalidInput);
    for (int g : {1, 2, 4, 8})
        for (int h : subgroups(g))
            for (int k : subgroups(g))
                for (long a = -3; a <= 3; ++a)
                    for (long b = -3; b <= 3; ++b) {
                        SliceCell A(g, h, a), B(g, k, b);
                        auto W = smash(A, B);
                        CHECK(W == smash_brute(A, B));
                        CHECK(W == smash(B, A));
                        CHECK(W.underlying_count() == A.underlying_count() * B.underlying_count());
                        for (auto& [c, count] : W.cells) CHECK(c.dimension() == A.dimension() + B.dimension());
                    }
}

TEST_CASE("smash products on chain models") {
    // underlying rank and Bredon groups of the smash agree with the wedge
    MackeyCoefficient Z(MackeyKind::ConstantZ, 4);
    for (int h : subgroups(4))
        for (int k : subgroups(4))
            for (long a : {1L, 2L})
                for (long b : {-1L, 1L}) {
                    auto P = tensor(slice_cell_complex(4, h, a), slice_cell_complex(4, k, b));
                    auto W = smash(SliceCell(4, h, a), SliceCell(4, k, b));
                    REQUIRE(W.cells.size() == 1);
                    auto& [c, count] = *W.cells.begin();
                    auto one = slice_cell_complex(4, c.k, c.m);
                    auto HP = bredon_all(P, Z, Variance::Homology);
                    auto H1 = bredon_all(one, Z, Variance::Homology);
                    CHECK(HP.size() == H1.size());
                    for (auto& [j, grp] : H1) {
                        REQUIRE(HP.count(j));
                        CHECK(HP.at(j).betti == grp.betti * count);
                    }
                }
}

TEST_CASE("norm wedges") {
    auto W = norm_wedge(4, 2, {0, 1, 2, 3}, 100);
    CHECK(W.size() == 10);
    long diag = 0;
    for (auto& [c, count] : W.cells)
        if (c.k == 4) diag += count;
    CHECK(diag == 4);
    CHECK(W.cells.count(SliceCell(4, 2, 3)));
    CHECK(W.cells.count(SliceCell(4, 4, 2)));
    for (int g : {2, 4, 8, 16})
        for (int h : subgroups(g)) {
            if (g / h != 2 && g / h != 4) continue;
            for (int size = 1; size <= 6; ++size) {
                std::vector<long> exps;
                for (int i = 0; i < size; ++i) exps.push_back(i);
                for (long dmax : {6L, 1000L}) CHECK(norm_wedge(g, h, exps, dmax) == norm_wedge_brute(g, h, exps, dmax));
            }
        }
    CHECK(norm_wedge(8, 2, {0, 2, 5}, 1000) == norm_wedge_brute(8, 2, {0, 2, 5}, 1000));
    CHECK(norm_wedge(8, 2, {-1, 0, 1}, 1000) == norm_wedge_brute(8, 2, {-1, 0, 1}, 1000));
}

TEST_CASE("norm wedge orbit counts by period") {
    // orbits of exact period p and period-sum s, by Moebius inversion over the periods
    int g = 16, h = 4, r = 4;
    std::vector<long> exps{0, 1, 2, 3, 4};
    auto W = norm_wedge(g, h, exps, 1000);
    auto tuples = [&](int p, long s) {
        std::vector<long> c(s + 1, 0);
        c[0] = 1;
        for (int i = 0; i < p; ++i) {
            std::vector<long> next(s + 1, 0);
            for (long t = 0; t <= s; ++t)
                for (long x : exps)
                    if (t + x <= s) next[t + x] += c[t];
            c = next;
        }
        return c[s];
    };
    std::function<long(int, long)> exact = [&](int p, long s) {
        long n = tuples(p, s);
        for (int q = 1; q < p; q *= 2)
            if ((s * q) % p == 0) n -= exact(q, s * q / p);
        return n;
    };
    for (int p = 1; p <= r; p *= 2)
        for (long s = 0; s <= 4L * p; ++s) {
            long want = exact(p, s) / p;
            SliceCell c(g, h * (r / p), s);
            long got = W.cells.count(c) ? W.cells.at(c) : 0;
            CHECK(got == want);
        }
}

TEST_CASE("refinement census") {
    auto one = refinement_census(1, 12);
    std::vector<long> partitions{1, 1, 2, 3, 5, 7, 11};
    for (long d = 0; d <= 6; ++d) {
        CHECK(one.at(2 * d).size() == partitions[d]);
        CHECK(one.at(2 * d).cells.size() == (1u));
        CHECK(one.at(2 * d).cells.count(SliceCell(2, 2, d)));
    }
    for (int e = 1; e <= 3; ++e) {
        auto census = refinement_census(e, 24);
        auto series = hmu_series(1 << (e - 1), 24);
        for (long d = 0; d <= 12; ++d) {
            auto& W = census.at(2 * d);
            CHECK(W.underlying_count() == series[d]);
            for (auto& [c, count] : W.cells) {
                CHECK(c.isotropic());
                CHECK(c.dimension() == 2 * d);
            }
        }
    }
    // C_4: the smallest cells
    auto four = refinement_census(2, 4);
    Wedge w2;
    w2.g = 4;
    w2.add(SliceCell(4, 2, 1));
    CHECK(four.at(2) == w2);
    CHECK_THROWS_AS(refinement_census(3, 40), InvalidInput);
}

TEST_CASE("spectral sequence support and rho shifts") {
    CHECK(slice_ss_support(8, 0, 0));
    CHECK(slice_ss_support(8, 7, 8));
    CHECK_FALSE(slice_ss_support(8, 8, 9));
    CHECK_FALSE(slice_ss_support(8, -1, 2));
    CHECK(slice_ss_support(8, 0, -3));
    CHECK_FALSE(slice_ss_support(8, 1, -3));
    CHECK(slice_ss_support(2, -2, -3));
    CHECK_FALSE(slice_ss_support(2, -3, -4));
    auto census = refinement_census(3, 12);
    for (auto& [t, W] : census)
        for (long m : {-19L, -1L, 2L}) {
            auto S = rho_shift(W, m);
            CHECK(S.size() == W.size());
            for (auto& [c, count] : S.cells) CHECK(c.dimension() == t + 8 * m);
        }
}

TEST_CASE("gap check") {
    auto R = gap_report(3, 19, 16);
    CHECK(R.ok);
    CHECK(R.cells > 0);
    // smaller twists land cells in degrees -3..-1 and need actual Bredon groups
    for (long l : {1L, 2L, 3L}) {
        auto S = gap_report(3, l, 12);
        CHECK(S.ok);
        CHECK(S.computed > 0);
    }
    CHECK(gap_check(2, 1, 16));
    CHECK(gap_check(1, 1, 16));
    CHECK_THROWS_AS(gap_report(3, 0, 16), InvalidInput);
}
