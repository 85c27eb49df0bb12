#include "doctest.h"
#include "slicegap/bredon.hpp"
#include "slicegap/error.hpp"

using namespace slicegap;

namespace {

bool is_sphere(const ChainComplexZ& C, long dim) {
    if (!C.ranks().count(static_cast<int>(dim))) return false;
    for (auto& [k, r] : C.ranks()) {
        auto h = homology(C, k);
        if (k == dim ? !(h.betti == 1 && h.torsion.empty()) : !h.is_zero()) return false;
    }
    return true;
}

AbelianGroup Zgrp(int betti = 1) { return AbelianGroup{betti, {}}; }

}  // namespace

TEST_CASE("cell census") {
    auto C = cell_census(RealRep::regular(8));
    std::map<int, std::pair<int, int>> want{{0, {8, 1}}, {1, {8, 1}}, {2, {4, 1}}, {3, {1, 1}}, {4, {1, 1}},
                                            {5, {1, 1}}, {6, {1, 1}}, {7, {2, 1}}, {8, {2, 1}}};
    CHECK(C.dims == want);
    auto S = cell_census(RealRep::sigma(2));
    CHECK(S.dims == std::map<int, std::pair<int, int>>{{0, {2, 1}}, {1, {1, 1}}});
    CHECK(cell_census(RealRep(8)).dims == std::map<int, std::pair<int, int>>{{0, {8, 1}}});
}

TEST_CASE("atomic complexes and small models") {
    auto L = chain_model(RealRep::lambda(4, 1));
    L.validate();
    auto U = underlying(L);
    CHECK(homology(U, 2) == Zgrp());
    CHECK(homology(U, 1).is_zero());
    CHECK(homology(U, 0).is_zero());
    CHECK(homology(underlying(chain_model(RealRep::sigma(2))), 1) == Zgrp());
    auto D = chain_model(RealRep::regular(2).scaled(-1));
    CHECK(D.min_degree() >= -2);
    CHECK(D.max_degree() <= 0);
    CHECK(homology(underlying(D), -2) == Zgrp());

    MackeyCoefficient Z(MackeyKind::ConstantZ, 8);
    auto P = chain_model(RealRep(8));
    CHECK(bredon(P, Z, Variance::Homology, 0) == Zgrp());
    CHECK(orbit_complex(P).rank(0) == 1);

    MackeyCoefficient Z2(MackeyKind::ConstantZ, 2);
    auto R2 = chain_model(RealRep::regular(2));
    for (int k = 1; k <= 3; ++k) CHECK(bredon(R2, Z2, Variance::Cohomology, k).is_zero());
    // S^sigma over C_2: orbit space is an arc, reduced cohomology vanishes
    auto O = orbit_complex(chain_model(RealRep::sigma(2)));
    for (int k = 0; k <= 1; ++k) CHECK(cohomology(O, k).is_zero());

    EqCellComplex bad = atomic_complex(4, 'l', 1);
    bad.diff[2][{0, 0}] = {1, 0, 0, 0};
    CHECK_THROWS_AS(bad.validate(), MathError);
    CHECK_THROWS_AS(atomic_complex(4, 'x'), InvalidInput);
}

TEST_CASE("model invariants: underlying and fixed-point spheres") {
    for (int m : {2, 4, 8})
        for (auto& V : genuine_reps(m, 8)) {
            auto C = chain_model(V);
            CHECK(C.is_valid());
            CHECK(is_sphere(underlying(C), V.dim()));
            for (int h : subgroups(m)) CHECK(is_sphere(fixed_subcomplex(C, h), rep_fixed(V, h)));
        }
}

TEST_CASE("reduction does not change Bredon groups") {
    for (int m : {2, 4, 8})
        for (auto& V : genuine_reps(m, 4)) {
            EqCellComplex raw = sphere_zero(m);
            for (long i = 0; i < V.a; ++i) raw = tensor(raw, atomic_complex(m, 'e'));
            for (long i = 0; i < V.b; ++i) raw = tensor(raw, atomic_complex(m, 's'));
            for (int k = 1; k <= static_cast<int>(V.c.size()); ++k)
                for (long r = 0; r < V.c[k - 1]; ++r) raw = tensor(raw, atomic_complex(m, 'l', k));
            CHECK(raw.is_valid());
            auto red = chain_model(V);
            for (auto kind : {MackeyKind::ConstantZ, MackeyKind::Burnside}) {
                MackeyCoefficient M(kind, m);
                for (auto v : {Variance::Homology, Variance::Cohomology})
                    for (int k = -1; k <= V.dim() + 1; ++k) CHECK(bredon(raw, M, v, k) == bredon(red, M, v, k));
            }
        }
}

TEST_CASE("simplicial oracle agreement") {
    auto S = simplicial_model(RealRep::sigma(2));
    CHECK(homology(underlying(S), 1) == Zgrp());
    CHECK_THROWS_AS(simplicial_model(RealRep::regular(8)), InvalidInput);
    for (int m : {2, 4}) {
        for (auto& V : genuine_reps(m, 4)) {
            auto C = chain_model(V);
            auto O = simplicial_model(V);
            CHECK(O.is_valid());
            CHECK(is_sphere(underlying(O), V.dim()));
            for (auto kind : {MackeyKind::ConstantZ, MackeyKind::Burnside}) {
                MackeyCoefficient M(kind, m);
                for (auto v : {Variance::Homology, Variance::Cohomology})
                    for (int k = 0; k <= V.dim(); ++k) CHECK(bredon(C, M, v, k) == bredon(O, M, v, k));
            }
        }
    }
}

TEST_CASE("orbit complex equals Bredon cohomology with constant coefficients") {
    for (int m : {2, 4, 8}) {
        MackeyCoefficient Z(MackeyKind::ConstantZ, m);
        for (auto& V : genuine_reps(m, 6)) {
            auto C = chain_model(V);
            auto O = orbit_complex(C);
            for (int k = 0; k <= V.dim(); ++k) CHECK(cohomology(O, k) == bredon(C, Z, Variance::Cohomology, k));
        }
    }
}

TEST_CASE("duality") {
    for (int m : {2, 4, 8}) {
        MackeyCoefficient Z(MackeyKind::ConstantZ, m);
        for (auto& V : genuine_reps(m, 6)) {
            auto P = chain_model(V), N = chain_model(V.scaled(-1));
            CHECK(N.is_valid());
            for (int j = -static_cast<int>(V.dim()) - 1; j <= 1; ++j)
                CHECK(bredon(N, Z, Variance::Homology, j) == bredon(P, Z, Variance::Cohomology, -j));
        }
    }
}

TEST_CASE("virtual models") {
    // S^{V - W} for V, W genuine: underlying sphere of the virtual dimension
    for (int m : {4, 8}) {
        auto V = RealRep::regular(m) - RealRep::sigma(m).scaled(2) + RealRep::trivial(m);
        auto C = chain_model(V);
        CHECK(C.is_valid());
        CHECK(is_sphere(underlying(C), V.dim()));
        auto I = chain_model(RealRep::regular(m), -1);
        CHECK(is_sphere(underlying(I), m - 1));
    }
}

TEST_CASE("induction") {
    MackeyCoefficient Z2(MackeyKind::ConstantZ, 2), Z8(MackeyKind::ConstantZ, 8);
    auto C = chain_model(RealRep::regular(2));
    auto I = induce(C, 8);
    CHECK(I.is_valid());
    for (int k = 0; k <= 2; ++k) CHECK(bredon(I, Z8, Variance::Homology, k) == bredon(C, Z2, Variance::Homology, k));
    CHECK(induce(C, 2).diff == C.diff);
    // underlying: a wedge of [G:K] spheres
    CHECK(homology(underlying(I), 2) == Zgrp(4));
    CHECK_THROWS_AS(induce(chain_model(RealRep::regular(8)), 4), InvalidInput);
    for (int g : {4, 8})
        for (int k : subgroups(g))
            for (long m : {-2L, -1L, 1L, 2L}) {
                auto K = chain_model(RealRep::regular(k).scaled(m));
                auto G = induce(K, g);
                MackeyCoefficient ZK(MackeyKind::ConstantZ, k), ZG(MackeyKind::ConstantZ, g);
                for (int j = K.min_degree(); j <= K.max_degree(); ++j)
                    CHECK(bredon(G, ZG, Variance::Homology, j) == bredon(K, ZK, Variance::Homology, j));
            }
}

TEST_CASE("Cell Lemma") {
    CHECK(cell_lemma_check(2, 2, -1));
    CHECK(cell_lemma_check(8, 4, -2));
    for (long m = 0; m <= 2; ++m) CHECK(cell_lemma_check(8, 8, m));
    CHECK_THROWS_AS(cell_lemma_check(8, 1, -1), InvalidInput);
    CHECK_THROWS_AS(cell_lemma_check(8, 8, -5), InvalidInput);
    // the free cell is where the gap fails: S^{-rho_1} = S^{-1}
    MackeyCoefficient Z(MackeyKind::ConstantZ, 2);
    CHECK(bredon(slice_cell_complex(2, 1, -1), Z, Variance::Homology, -1) == Zgrp());
}
