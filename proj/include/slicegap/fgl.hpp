#pragma once

#include <optional>
#include <string>

#include "slicegap/series.hpp"

namespace slicegap {

// F(x, y) in variables {x, y}; one-variable series use {t}.
template <class R>
using Series = TruncSeries<R>;

template <class R>
Series<R> fgl_additive(const R& ring, int cutoff) {
    auto x = Series<R>::variable(ring, {"x", "y"}, cutoff, 0);
    auto y = Series<R>::variable(ring, {"x", "y"}, cutoff, 1);
    return x + y;
}

// G_m(x, y) = x + y - u x y
template <class R>
Series<R> fgl_multiplicative(const R& ring, int cutoff, const typename R::elem& u) {
    auto x = Series<R>::variable(ring, {"x", "y"}, cutoff, 0);
    auto y = Series<R>::variable(ring, {"x", "y"}, cutoff, 1);
    return x + y - (x * y).scale(u);
}

template <class R>
struct FglResiduals {
    Series<R> unit;            // F(x,0) - x and F(0,y) - y
    Series<R> commutativity;   // F(x,y) - F(y,x)
    Series<R> associativity;   // F(x,F(y,z)) - F(F(x,y),z)

    bool ok() const { return unit.is_zero() && commutativity.is_zero() && associativity.is_zero(); }
};

template <class R>
FglResiduals<R> fgl_verify(const Series<R>& F) {
    require(F.nvars() == 2, "fgl_verify: bivariate series expected");
    const auto& ring = F.ring();
    const int c = F.cutoff();
    auto x = Series<R>::variable(ring, {"x", "y"}, c, 0);
    auto y = Series<R>::variable(ring, {"x", "y"}, c, 1);
    auto zero = Series<R>(ring, {"x", "y"}, c);
    // (F(x,0) - x) + (F(0,y) - y - F(0,0)): the two pieces have disjoint support
    Series<R> unit = substitute(F, {x, zero}) - x + substitute(F, {zero, y}) - y;
    unit.add_to(Exponent{}, ring.neg(F.constant_term()));
    Series<R> comm = F - substitute(F, {y, x});
    if (!ring.is_zero(F.constant_term())) {
        // F(F(x,y),z) is undefined; report the constant as the residual
        auto bad = Series<R>::constant(ring, {"x", "y", "z"}, c, F.constant_term());
        return {unit, comm, bad};
    }
    std::vector<std::string> v3{"x", "y", "z"};
    auto X = Series<R>::variable(ring, v3, c, 0);
    auto Y = Series<R>::variable(ring, v3, c, 1);
    auto Z = Series<R>::variable(ring, v3, c, 2);
    auto Fxy = substitute(F, {X, Y});
    auto Fyz = substitute(F, {Y, Z});
    Series<R> assoc = substitute(F, {X, Fyz}) - substitute(F, {Fxy, Z});
    return {unit, comm, assoc};
}

// F(g(t), h(t))
template <class R>
Series<R> fgl_apply(const Series<R>& F, const Series<R>& g, const Series<R>& h) {
    return substitute(F, {g, h});
}

// [-1](t): the i(t) with F(t, i(t)) = 0, solved degree by degree
template <class R>
Series<R> fgl_inverse(const Series<R>& F) {
    const auto& ring = F.ring();
    const int c = F.cutoff();
    auto t = identity_series(ring, c);
    Series<R> i = -t;
    for (int k = 2; k <= c; ++k) {
        auto r = substitute(F, {t.truncated(k), i.truncated(k)});
        // d/dy F at 0 is 1, so the t^k coefficient of i enters linearly
        auto ck = r.coeff(k);
        if (!ring.is_zero(ck)) i.add_to(mono({k}), ring.neg(ck));
    }
    return i;
}

// [k](t) with [0] = 0, [k] = F([k-1], t), [-k] = [k]([-1](t))
template <class R>
Series<R> k_series(const Series<R>& F, long k) {
    const auto& ring = F.ring();
    const int c = F.cutoff();
    auto t = identity_series(ring, c);
    Series<R> acc(ring, {"t"}, c);
    const long m = k < 0 ? -k : k;
    for (long j = 0; j < m; ++j) acc = substitute(F, {acc, t});
    if (k < 0) acc = compose(acc, fgl_inverse(F));
    return acc;
}

struct Height {
    enum class Kind { Finite, Infinite, CutoffTooSmall };
    Kind kind;
    int n = 0;  // valid when Finite
    std::string str() const {
        switch (kind) {
            case Kind::Finite: return std::to_string(n);
            case Kind::Infinite: return "INFINITE";
            default: return "CUTOFF_TOO_SMALL";
        }
    }
    bool operator==(const Height&) const = default;
};

// Height over a characteristic-p field. `probe` is the largest height the
// caller wants certified; a [p]-series vanishing through the cutoff reads as
// INFINITE only if p^probe <= cutoff. probe < 0 means floor(log_p cutoff).
template <class R>
Height height(const Series<R>& F, int probe = -1) {
    const long p = F.ring().characteristic();
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw InvalidInput("height: coefficient ring must have prime characteristic");
    auto kp = k_series(F, p);
    const int v = kp.valuation();
    if (v >= 0) {
        long q = 1;
        int n = 0;
        while (q < v) q *= p, ++n;
        if (q != v) throw MathError("height: lowest term of [p](t) is not in degree a power of p");
        return {Height::Kind::Finite, n};
    }
    int max_certified = 0;
    for (long q = p; q <= F.cutoff(); q *= p) ++max_certified;
    if (probe < 0) probe = max_certified;
    if (probe > max_certified) return {Height::Kind::CutoffTooSmall, 0};
    return {Height::Kind::Infinite, 0};
}

// l with l(F(x,y)) = l(x) + l(y): l'(x) = 1 / (dF/dy)(x, 0)
template <class R>
Series<R> logarithm(const Series<R>& F) {
    const auto& ring = F.ring();
    const int c = F.cutoff();
    Series<R> dy(ring, {"t"}, c);
    for (const auto& [e, v] : F.terms())
        if (e[1] == 1) dy.set(mono({e[0]}), v);
    // 1/dy by iteration: dy = 1 + h, h(0) = 0
    if (!ring.eq(dy.constant_term(), ring.one())) throw MathError("logarithm: F is not of the form x + y + ...");
    auto h = dy - Series<R>::constant(ring, {"t"}, c, ring.one());
    Series<R> inv = Series<R>::constant(ring, {"t"}, c, ring.one());
    Series<R> term = inv;
    for (int k = 1; k <= c; ++k) {
        term = -(term * h);
        inv = inv + term;
    }
    Series<R> l(ring, {"t"}, c);
    for (const auto& [e, v] : inv.terms()) {
        const int i = e[0];
        if (i + 1 > c) continue;
        auto d = ring.inv(ring.from_int(i + 1));
        if (!d) throw MathError("logarithm: " + std::to_string(i + 1) + " is not invertible in the coefficient ring");
        l.set(mono({i + 1}), ring.mul(v, *d));
    }
    return l;
}

// l^{-1}(l(x) + l(y))
template <class R>
Series<R> from_log(const Series<R>& l) {
    require(l.nvars() == 1, "from_log: univariate logarithm expected");
    const auto& ring = l.ring();
    if (!ring.is_zero(l.constant_term()) || !ring.eq(l.coeff(1), ring.one()))
        throw MathError("from_log: logarithm must be t + higher terms");
    const int c = l.cutoff();
    auto x = Series<R>::variable(ring, {"x", "y"}, c, 0);
    auto y = Series<R>::variable(ring, {"x", "y"}, c, 1);
    auto sum = compose(l, x) + compose(l, y);
    return compose(series_reverse(l), sum);
}

// multiply the coefficient of each degree-d monomial by w(d)
template <class R, class W>
Series<R> reweight(const Series<R>& s, W w) {
    Series<R> r(s.ring(), s.vars(), s.cutoff());
    for (const auto& [e, v] : s.terms()) r.set(e, s.ring().mul(v, w(total_degree(e))));
    return r;
}

// Fbar(x, y) = -F(-x, -y)
template <class R>
Series<R> conjugate_series(const Series<R>& F) {
    const auto& ring = F.ring();
    return reweight(F, [&](int d) { return d % 2 ? ring.one() : ring.from_int(-1); });
}

template <class R>
bool is_strict(const Series<R>& f) {
    const auto& ring = f.ring();
    return f.nvars() == 1 && ring.is_zero(f.constant_term()) && ring.eq(f.coeff(1), ring.one());
}

// g(F(x, y)) == G(g(x), g(y)) to the cutoff
template <class R>
bool is_homomorphism(const Series<R>& g, const Series<R>& F, const Series<R>& G) {
    const int c = std::min({g.cutoff(), F.cutoff(), G.cutoff()});
    const auto& ring = F.ring();
    auto x = Series<R>::variable(ring, {"x", "y"}, c, 0);
    auto y = Series<R>::variable(ring, {"x", "y"}, c, 1);
    auto lhs = compose(g, F.truncated(c));
    auto rhs = substitute(G.truncated(c), {compose(g, x), compose(g, y)});
    return lhs == rhs;
}

template <class R>
struct Conjugate {
    Series<R> Fbar;
    Series<R> witness;  // -[-1]_F
    bool witness_is_iso;
};

template <class R>
Conjugate<R> conjugate_fgl(const Series<R>& F) {
    auto Fbar = conjugate_series(F);
    auto w = -fgl_inverse(F);
    const bool ok = is_strict(w) && is_homomorphism(w, F, Fbar);
    return {Fbar, w, ok};
}

// ^fF(x, y) = f(F(f^{-1}x, f^{-1}y))
template <class R>
Series<R> conjugation_act(const Series<R>& f, const Series<R>& F) {
    if (!is_strict(f)) throw MathError("conjugation_act: f must be strict (t + higher terms)");
    const int c = std::min(f.cutoff(), F.cutoff());
    const auto& ring = F.ring();
    auto finv = series_reverse(f.truncated(c));
    auto x = Series<R>::variable(ring, {"x", "y"}, c, 0);
    auto y = Series<R>::variable(ring, {"x", "y"}, c, 1);
    return compose(f.truncated(c), substitute(F.truncated(c), {compose(finv, x), compose(finv, y)}));
}

// ---- Hazewinkel formal A-modules over A = Z_2[zeta], 2n = 2^e

// sum_i t^{2^i} / pi^i with pi = zeta - 1, exact over Q(zeta)
Series<CyclotomicRational> hazewinkel_log(int e, int cutoff);

// l(t) - t - pi^{-1} l(t^2)
Series<CyclotomicRational> hazewinkel_residual(const Series<CyclotomicRational>& l, int e);

struct FormalAModule {
    int e;
    CyclotomicMod2 ring;
    Series<CyclotomicMod2> F;        // F0 = l^{-1}(l(x) + l(y))
    Series<CyclotomicMod2> zeta_series;  // [zeta](t)
    Series<CyclotomicMod2> theta;    // zeta^{-1} u^{-1} [zeta](u t) at u = 1
    Series<CyclotomicMod2> minus_one;    // [-1](t)
};

// exact over Q(zeta), reduced mod 2^N; MathError if a coefficient is not 2-integral
FormalAModule formal_A_module(int e, int cutoff, int precision = 16);

// gamma^k on F = u^{-1} F0(ux, uy) (and on theta): a degree-d coefficient
// carries u^{d-1}, so gamma^k multiplies it by zeta^{k(d-1)}
Series<CyclotomicMod2> gamma_act(const Series<CyclotomicMod2>& s, long k);

struct MuCnReport {
    int e = 0, n = 0, cutoff = 0, precision = 0;
    bool integral = false;
    bool gamma_n_conjugate = false;   // gamma^n F = Fbar
    bool theta_strict_iso = false;    // theta : F -> gamma F strict
    bool theta_composite = false;     // gamma^{n-1}theta o ... o theta = -[-1]_F
    bool cocycle = false;             // theta_{g1 g2} = g1 theta_{g2} o theta_{g1}, all pairs
    bool theta_identity = false;      // theta_1 = id
    std::optional<std::string> first_failure;  // "identity@degree"
    bool ok() const {
        return integral && gamma_n_conjugate && theta_strict_iso && theta_composite && cocycle && theta_identity;
    }
    json to_json() const;
};

MuCnReport mu_cn_check(int e, int cutoff, int precision = 16);

// reduce a series over A mod pi (z -> 1, then mod 2)
Series<PrimeField> reduce_mod_pi(const Series<CyclotomicMod2>& s);

}  // namespace slicegap
