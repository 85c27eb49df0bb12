#include <random>

#include "doctest.h"
#include "slicegap/fgl.hpp"

using namespace slicegap;

namespace {

template <class R>
Series<R> xy(const R& ring, int c, int i) {
    return Series<R>::variable(ring, {"x", "y"}, c, i);
}

}  // namespace

TEST_CASE("fgl_verify fixtures") {
    Integers Z;
    CHECK(fgl_verify(fgl_multiplicative(Z, 8, mpz_class(1))).ok());
    CHECK(fgl_verify(fgl_additive(Z, 8)).ok());
    auto bad = fgl_additive(Z, 6) + xy(Z, 6, 0) * xy(Z, 6, 0);
    auto r = fgl_verify(bad);
    CHECK(!r.associativity.is_zero());
    CHECK(!r.commutativity.is_zero());
    auto shifted = fgl_additive(Z, 6) + Series<Integers>::constant(Z, {"x", "y"}, 6, 1);
    CHECK(!fgl_verify(shifted).ok());
}

TEST_CASE("k-series fixtures") {
    PrimeField F2(2);
    auto Gm = fgl_multiplicative(F2, 8, F2.one());
    auto two = k_series(Gm, 2);
    CHECK(two == Series<PrimeField>::univariate(F2, 8, {0, 0, 1}));
    PrimeField F5(5);
    CHECK(k_series(fgl_additive(F5, 8), 5).is_zero());
    Integers Z;
    auto G = fgl_multiplicative(Z, 8, mpz_class(1));
    CHECK(k_series(G, 1) == identity_series(Z, 8));
    CHECK(k_series(G, 0).is_zero());
    // [-1] for G_m(u=1): 1 - (1 - t)^{-1}... i.e. -t - t^2 - t^3 - ...
    auto m1 = k_series(G, -1);
    for (int k = 1; k <= 8; ++k) CHECK(m1.coeff(k) == -1);
}

TEST_CASE("k-series homomorphism [a+b] = F([a],[b])") {
    Integers Z;
    for (const auto& F : {fgl_multiplicative(Z, 10, mpz_class(1)), from_log(series_reverse(identity_series(Z, 10) + identity_series(Z, 10).pow(2)))}) {
        REQUIRE(fgl_verify(F).ok());
        for (int a = -3; a <= 3; ++a)
            for (int b = -3; b <= 3; ++b)
                CHECK(k_series(F, a + b) == fgl_apply(F, k_series(F, a), k_series(F, b)));
    }
}

TEST_CASE("height fixtures") {
    for (std::uint64_t p : {2, 3, 5}) {
        PrimeField Fp(p);
        CHECK(height(fgl_additive(Fp, 9)).kind == Height::Kind::Infinite);
    }
    PrimeField F2(2);
    CHECK(height(fgl_multiplicative(F2, 8, F2.one())) == Height{Height::Kind::Finite, 1});
    CHECK(height(fgl_additive(F2, 8), 4).kind == Height::Kind::CutoffTooSmall);
    CHECK(height(fgl_additive(F2, 16), 4).kind == Height::Kind::Infinite);
    Integers Z;
    CHECK_THROWS_AS(height(fgl_additive(Z, 4)), InvalidInput);
}

TEST_CASE("height is invariant under strict conjugation over F_p") {
    std::mt19937 rng(23);
    for (std::uint64_t p : {2, 3}) {
        PrimeField Fp(p);
        std::uniform_int_distribution<long> c(0, static_cast<long>(p) - 1);
        auto Gm = fgl_multiplicative(Fp, 10, Fp.one());
        const auto h = height(Gm);
        for (int trial = 0; trial < 5; ++trial) {
            auto f = identity_series(Fp, 10);
            for (int k = 2; k <= 10; ++k) f.set(mono({k}), Fp.from_int(c(rng)));
            auto G = conjugation_act(f, Gm);
            CHECK(fgl_verify(G).ok());
            CHECK(height(G) == h);
        }
    }
}

TEST_CASE("logarithms") {
    Rationals Q;
    CHECK(logarithm(fgl_additive(Q, 6)) == identity_series(Q, 6));
    auto Gm = fgl_multiplicative(Q, 6, Q.one());
    auto l = logarithm(Gm);
    // log of x + y - xy is -log(1 - t) = sum t^i / i
    for (int i = 1; i <= 6; ++i) CHECK(l.coeff(i) == mpq_class(1, i));
    CHECK(from_log(l) == Gm);
    CHECK(fgl_verify(from_log(l)).ok());
    Integers Z;
    CHECK_THROWS_AS(logarithm(fgl_multiplicative(Z, 4, mpz_class(1))), MathError);
}

TEST_CASE("from_log always yields a formal group law") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> c(-3, 3);
    Rationals Q;
    for (int trial = 0; trial < 5; ++trial) {
        auto l = identity_series(Q, 7);
        for (int k = 2; k <= 7; ++k) l.set(mono({k}), mpq_class(c(rng), 1 + (c(rng) + 3)));
        auto F = from_log(l);
        CHECK(fgl_verify(F).ok());
        CHECK(logarithm(F) == l);
    }
}

TEST_CASE("conjugate formal group") {
    Integers Z;
    auto Ga = conjugate_fgl(fgl_additive(Z, 8));
    CHECK(Ga.Fbar == fgl_additive(Z, 8));
    CHECK(Ga.witness == identity_series(Z, 8));
    CHECK(Ga.witness_is_iso);

    const mpz_class u = 3;
    auto Gm = fgl_multiplicative(Z, 8, u);
    auto c = conjugate_fgl(Gm);
    CHECK(c.Fbar == xy(Z, 8, 0) + xy(Z, 8, 1) + (xy(Z, 8, 0) * xy(Z, 8, 1)).scale(u));
    CHECK(c.witness_is_iso);
    CHECK(c.witness.coeff(1) == 1);
    CHECK(c.witness.coeff(2) == u);
    CHECK(conjugate_fgl(c.Fbar).Fbar == Gm);
}

TEST_CASE("conjugation action") {
    Integers Z;
    auto t = identity_series(Z, 8);
    auto Gm = fgl_multiplicative(Z, 8, mpz_class(1));
    CHECK(conjugation_act(t, Gm) == Gm);
    CHECK_THROWS_AS(conjugation_act(t.scale(2), Gm), MathError);

    // ^f G_a has logarithm f^{-1}
    Rationals Q;
    auto tq = identity_series(Q, 8);
    auto f = tq + tq * tq;
    auto G = conjugation_act(f, fgl_additive(Q, 8));
    CHECK(logarithm(G) == series_reverse(f));

    std::mt19937 rng(41);
    std::uniform_int_distribution<long> c(-2, 2);
    for (int trial = 0; trial < 4; ++trial) {
        auto f1 = t, g1 = t;
        for (int k = 2; k <= 8; ++k) {
            f1.set(mono({k}), c(rng));
            g1.set(mono({k}), c(rng));
        }
        auto F = conjugation_act(g1, Gm);  // a random non-trivial FGL
        CHECK(conjugation_act(compose(f1, g1), F) == conjugation_act(f1, conjugation_act(g1, F)));
    }
}

TEST_CASE("hazewinkel logarithm") {
    for (int e = 1; e <= 3; ++e) {
        auto l = hazewinkel_log(e, 16);
        CHECK(hazewinkel_residual(l, e).is_zero());
        const auto& Q = l.ring();
        auto pi = Q.sub(Q.zeta(), Q.one());
        CHECK(Q.eq(Q.mul(l.coeff(8), Q.mul(pi, Q.mul(pi, pi))), Q.one()));
        CHECK(l.coeff(3) == Q.zero());
    }
    auto l1 = hazewinkel_log(1, 4);
    // e = 1: zeta = -1, pi = -2
    CHECK(l1.coeff(2) == CyclotomicRational::elem{mpq_class(-1, 2)});
    CHECK(l1.coeff(4) == CyclotomicRational::elem{mpq_class(1, 4)});
}

TEST_CASE("formal A-modules") {
    for (int e = 1; e <= 3; ++e) {
        auto M = formal_A_module(e, 8, 16);
        CHECK(fgl_verify(M.F).ok());
        CHECK(M.zeta_series.coeff(1) == M.ring.zeta());
        CHECK(is_strict(M.theta));
        CHECK(is_homomorphism(M.zeta_series, M.F, M.F));
        CHECK(compose(M.minus_one, M.minus_one) == identity_series(M.ring, 8));
    }
}

TEST_CASE("mu-cn identities") {
    for (int e = 1; e <= 2; ++e) {
        auto r = mu_cn_check(e, 10, 16);
        CHECK(r.ok());
        CHECK(!r.first_failure);
    }
}

TEST_CASE("height of the Hazewinkel module mod pi is 2^(e-1)") {
    for (int e = 1; e <= 2; ++e) {
        auto M = formal_A_module(e, 8, 16);
        auto Fbar = reduce_mod_pi(M.F);
        CHECK(fgl_verify(Fbar).ok());
        CHECK(height(Fbar) == Height{Height::Kind::Finite, 1 << (e - 1)});
    }
}

TEST_CASE("e = 3: mu-cn at degree 10 and height 4") {
    auto r = mu_cn_check(3, 10, 16);
    CHECK(r.ok());
    auto M = formal_A_module(3, 16, 16);
    CHECK(height(reduce_mod_pi(M.F)) == Height{Height::Kind::Finite, 4});
}
