#include "slicegap/fgl.hpp"

namespace slicegap {

namespace {

using QSeries = Series<CyclotomicRational>;
using ASeries = Series<CyclotomicMod2>;

ASeries reduce_series(const QSeries& s, const CyclotomicMod2& A, const char* what) {
    ASeries r(A, s.vars(), s.cutoff());
    for (const auto& [e, v] : s.terms()) {
        auto red = s.ring().reduce(v, A);
        if (!red)
            throw MathError(std::string("formal_A_module: ") + what + " coefficient " + s.key(e) +
                            " is not 2-integral");
        r.set(e, *red);
    }
    return r;
}

std::string at_degree(const std::string& what, int deg) { return what + "@" + std::to_string(deg); }

}  // namespace

QSeries hazewinkel_log(int e, int cutoff) {
    CyclotomicRational Q(e);
    auto pi_inv = *Q.inv(Q.sub(Q.zeta(), Q.one()));
    QSeries l(Q, {"t"}, cutoff);
    auto c = Q.one();
    for (long q = 1; q <= cutoff; q *= 2) {
        l.set(mono({static_cast<int>(q)}), c);
        c = Q.mul(c, pi_inv);
    }
    return l;
}

QSeries hazewinkel_residual(const QSeries& l, int e) {
    const auto& Q = l.ring();
    require(Q.e() == e, "hazewinkel_residual: ring mismatch");
    auto pi_inv = *Q.inv(Q.sub(Q.zeta(), Q.one()));
    auto t = identity_series(Q, l.cutoff());
    return l - t - compose(l, t * t).scale(pi_inv);
}

FormalAModule formal_A_module(int e, int cutoff, int precision) {
    require(e >= 1 && e <= 6, "formal_A_module: e out of range");
    require(cutoff >= 1, "formal_A_module: cutoff must be positive");
    CyclotomicRational Q(e);
    CyclotomicMod2 A(e, precision);
    auto l = hazewinkel_log(e, cutoff);
    auto linv = series_reverse(l);
    auto x = QSeries::variable(Q, {"x", "y"}, cutoff, 0);
    auto y = QSeries::variable(Q, {"x", "y"}, cutoff, 1);
    auto F0 = compose(linv, compose(l, x) + compose(l, y));
    auto zeta_series = compose(linv, l.scale(Q.zeta()));
    auto minus_one = compose(linv, -l);
    auto theta = zeta_series.scale(*Q.inv(Q.zeta()));
    return FormalAModule{e,
                         A,
                         reduce_series(F0, A, "F"),
                         reduce_series(zeta_series, A, "[zeta]"),
                         reduce_series(theta, A, "theta"),
                         reduce_series(minus_one, A, "[-1]")};
}

ASeries gamma_act(const ASeries& s, long k) {
    const auto& A = s.ring();
    return reweight(s, [&](int d) { return A.zeta_pow(k * (d - 1)); });
}

Series<PrimeField> reduce_mod_pi(const ASeries& s) {
    PrimeField F2(2);
    Series<PrimeField> r(F2, s.vars(), s.cutoff());
    for (const auto& [e, v] : s.terms()) {
        std::uint64_t sum = 0;
        for (auto c : v) sum += c;
        r.set(e, sum & 1);
    }
    return r;
}

json MuCnReport::to_json() const {
    json j{{"e", e},
           {"n", n},
           {"cutoff", cutoff},
           {"precision", precision},
           {"integral", integral},
           {"gammaNConjugate", gamma_n_conjugate},
           {"thetaStrictIso", theta_strict_iso},
           {"thetaComposite", theta_composite},
           {"cocycle", cocycle},
           {"thetaIdentity", theta_identity},
           {"ok", ok()}};
    j["firstFailure"] = first_failure ? json(*first_failure) : json(nullptr);
    return j;
}

MuCnReport mu_cn_check(int e, int cutoff, int precision) {
    MuCnReport rep;
    rep.e = e;
    rep.n = 1 << (e - 1);
    rep.cutoff = cutoff;
    rep.precision = precision;
    auto fail = [&](const std::string& what, int deg) {
        if (!rep.first_failure) rep.first_failure = at_degree(what, deg);
    };

    std::optional<FormalAModule> M;
    try {
        M = formal_A_module(e, cutoff, precision);
        rep.integral = true;
    } catch (const MathError&) {
        fail("integrality", 0);
        return rep;
    }
    const auto& F = M->F;
    const int n = rep.n;
    const auto t = identity_series(M->ring, cutoff);

    auto d1 = gamma_act(F, n) - conjugate_series(F);
    rep.gamma_n_conjugate = d1.is_zero();
    if (!rep.gamma_n_conjugate) fail("gamma^n F = Fbar", d1.valuation());

    rep.theta_strict_iso = is_strict(M->theta) && is_homomorphism(M->theta, F, gamma_act(F, 1));
    if (!rep.theta_strict_iso) fail("theta: F -> gamma F", 0);

    // theta_{gamma^{k+1}} = gamma^k theta o theta_{gamma^k}
    std::vector<ASeries> th{t};
    for (int k = 0; k < 2 * n; ++k) th.push_back(compose(gamma_act(M->theta, k), th.back()));

    auto d2 = th[n] + M->minus_one;
    rep.theta_composite = d2.is_zero();
    if (!rep.theta_composite) fail("gamma^{n-1}theta o ... o theta = -[-1]_F", d2.valuation());

    rep.cocycle = true;
    for (int a = 0; a < 2 * n; ++a)
        for (int b = 0; b < 2 * n; ++b) {
            auto d = th[(a + b) % (2 * n)] - compose(gamma_act(th[b], a), th[a]);
            if (!d.is_zero()) {
                rep.cocycle = false;
                fail("cocycle(" + std::to_string(a) + "," + std::to_string(b) + ")", d.valuation());
            }
        }
    rep.theta_identity = th[0] == t && th[2 * n] == t;
    if (!rep.theta_identity) fail("theta_1 = id", 0);
    return rep;
}

}  // namespace slicegap
