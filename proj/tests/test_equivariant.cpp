#include <random>

#include "doctest.h"
#include "slicegap/equivariant.hpp"
#include "slicegap/error.hpp"

using namespace slicegap;

TEST_CASE("double coset restriction fixtures") {
    CHECK(double_coset_restrict(8, 2, 2, GSet::orbit(2)) == GSet::orbit(2, 4));
    CHECK(double_coset_restrict(8, 4, 2, GSet::orbit(4)) == GSet::orbit(2, 2));
    // H = G is plain restriction
    CHECK(double_coset_restrict(8, 8, 4, GSet::orbit(2)) == ExplicitGSet::from(8, GSet::orbit(2)).restrict_to(4).orbits());
    CHECK_THROWS_AS(double_coset_restrict(8, 3, 2, GSet::orbit(1)), InvalidInput);
    CHECK_THROWS_AS(double_coset_restrict(8, 2, 2, GSet::orbit(4)), InvalidInput);
}

TEST_CASE("double coset restriction matches coset enumeration") {
    for (int m : {1, 2, 4, 8, 16})
        for (int h : subgroups(m))
            for (int k : subgroups(m)) {
                GSet X;
                for (int d : subgroups(h)) X.orbits[d] = 1 + d % 3;
                CHECK(double_coset_restrict(m, h, k, X) == double_coset_restrict_brute(m, h, k, X));
            }
}

TEST_CASE("table of marks") {
    auto T = table_of_marks(8);
    // rows G/C_b, columns C_a, both ascending
    CHECK(T(0, 0) == 8);
    CHECK(T(2, 1) == 2);
    CHECK(T(1, 2) == 0);
    CHECK(T.det() != 0);
    for (int r = 0; r < 4; ++r)
        for (int c = r + 1; c < 4; ++c) CHECK(T(r, c) == 0);
    for (int m : {2, 4, 8})
        for (int a : subgroups(m))
            for (int b : subgroups(m))
                CHECK(mark(m, a, GSet::orbit(b)) == ExplicitGSet::from(m, GSet::orbit(b)).fixed_points(a));
}

TEST_CASE("Burnside products") {
    CHECK(burnside_product(8, GSet::orbit(2), GSet::orbit(4)) == GSet::orbit(2, 2));
    CHECK(burnside_product(8, GSet::orbit(8), GSet::orbit(2, 3)) == GSet::orbit(2, 3));
    for (int m : {2, 4, 8})
        for (int a : subgroups(m))
            for (int b : subgroups(m)) {
                auto P = burnside_product(m, GSet::orbit(a), GSet::orbit(b));
                auto E = ExplicitGSet::from(m, GSet::orbit(a)).product(ExplicitGSet::from(m, GSet::orbit(b)));
                CHECK(P == E.orbits());
            }
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        GSet X, Y;
        for (int d : subgroups(8)) {
            X.orbits[d] = rng() % 3;
            Y.orbits[d] = rng() % 3;
        }
        auto P = burnside_product(8, X, Y);
        for (int a : subgroups(8)) CHECK(mark(8, a, P) == mark(8, a, X) * mark(8, a, Y));
    }
}

TEST_CASE("Mackey levels") {
    MackeyCoefficient Z(MackeyKind::ConstantZ, 8), A(MackeyKind::Burnside, 8);
    CHECK(mackey_transfer(Z, 1, 2) == IntMatrix{{2}});
    CHECK(mackey_transfer(Z, 4, 4) == IntMatrix{{1}});
    // [pt] -> [C_2/C_1] in A(C_2) with basis (C_2/C_1, C_2/C_2)
    CHECK(mackey_transfer(A, 1, 2) == IntMatrix{{1}, {0}});
    CHECK_THROWS_AS(mackey_transfer(Z, 2, 3), InvalidInput);
    CHECK(A.level_rank(8) == 4);
    // Res^{C_2}_{C_1} [C_2/C_2] = [pt], Res [C_2/C_1] = 2[pt]
    CHECK(A.res(1, 2) == IntMatrix{{2, 1}});

    for (int m : {2, 4, 8})
        for (auto kind : {MackeyKind::ConstantZ, MackeyKind::Burnside}) {
            MackeyCoefficient M(kind, m);
            for (int l : subgroups(m))
                for (int h : subgroups(l))
                    for (int k : subgroups(l)) CHECK(mackey_axiom_holds(M, h, k, l));
        }
    // double cosets counted by enumeration agree with [L : HK]
    for (int l : subgroups(16))
        for (int h : subgroups(l))
            for (int k : subgroups(l)) CHECK(double_coset_count(l, h, k) == l / std::max(h, k));
}

TEST_CASE("real representations") {
    auto rho = rep_decompose(8, permutation_rep(8, GSet::orbit(1)));
    CHECK(rho == RealRep::regular(8));
    CHECK(rho.str() == "eps+sigma+lambda(1)+lambda(2)+lambda(3)");
    CHECK(rep_fixed(RealRep::lambda(8, 2), 2) == 2);
    CHECK(rep_fixed(RealRep::lambda(8, 2), 4) == 0);
    CHECK(rep_ind(RealRep::trivial(4), 8) == RealRep::trivial(8) + RealRep::sigma(8));
    for (int m : {2, 4, 8}) {
        CHECK(rep_ind(RealRep::regular(m / 2 > 0 ? m / 2 : 1), m) == RealRep::regular(m));
        CHECK(rep_ind(RealRep::regular(1), m) == RealRep::regular(m));
    }
    CHECK(is_orientable(RealRep::sigma(8).scaled(2)));
    CHECK_FALSE(is_orientable(RealRep::sigma(8)));
    CHECK(is_orientable(RealRep::lambda(8, 1)));
    CHECK_THROWS_AS(rep_decompose(4, IntMatrix{{1, 1}, {0, 1}}), InvalidInput);

    // permutation reps of every G-set
    for (int m : {2, 4, 8})
        for (int d : subgroups(m)) {
            auto V = rep_decompose(m, permutation_rep(m, GSet::orbit(d)));
            CHECK(V == rep_ind(RealRep::trivial(d), m));
        }

    std::mt19937 rng(11);
    for (int m : {1, 2, 4, 8, 16})
        for (int trial = 0; trial < 40; ++trial) {
            RealRep V(m);
            V.a = rng() % 4;
            if (m >= 2) V.b = rng() % 4;
            for (auto& x : V.c) x = rng() % 3;
            for (int h : subgroups(m)) {
                CHECK(rep_fixed(V, h) == rep_fixed_by_character(V, h));
                auto W = rep_res(V, h);
                CHECK(W.dim() == V.dim());
                CHECK(rep_fixed(W, h) == rep_fixed(V, h));
                auto I = rep_ind(W, m);
                CHECK(I.dim() == (m / h) * W.dim());
                // Frobenius reciprocity on trivial multiplicities
                CHECK(rep_fixed(I, m) == rep_fixed(W, h));
            }
            CHECK(RealRep::from_json(m, V.to_json()) == V);
        }
}
