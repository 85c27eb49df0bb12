#include "slicegap/acceptance.hpp"

#include <chrono>
#include <functional>

#include "slicegap/arf.hpp"
#include "slicegap/bredon.hpp"
#include "slicegap/cyclic.hpp"
#include "slicegap/error.hpp"
#include "slicegap/fgl.hpp"
#include "slicegap/rog.hpp"
#include "slicegap/slice.hpp"

namespace slicegap {

json CriterionResult::to_json(bool timing) const {
    json j{{"id", id}, {"name", name}, {"exact", exact}, {"budgetMs", budget_ms}, {"detail", detail}};
    j["status"] = pass() ? "PASS" : "FAIL";
    j["elapsedMs"] = timing ? elapsed_ms : 0;
    return j;
}

namespace {

// collects failed checks, keeping the first few labels
struct Tally {
    long checks = 0;
    long failed = 0;
    json first = json::array();

    void check(bool ok, const std::string& label) {
        ++checks;
        if (ok) return;
        ++failed;
        if (first.size() < 5) first.push_back(label);
    }
    bool ok() const { return failed == 0; }
    json to_json() const { return json{{"checks", checks}, {"failed", failed}, {"firstFailures", first}}; }
};

std::string rep_label(const RealRep& V) { return "C" + std::to_string(V.m) + " " + V.str(); }

json cell_lemma(const AcceptanceOptions& opt, Tally& T) {
    long mmin = opt.quick ? -2 : -4;
    for (int g : {2, 4, 8})
        for (int k : subgroups(g)) {
            if (k == 1) continue;
            MackeyCoefficient Z(MackeyKind::ConstantZ, g);
            for (long m = mmin; m <= -1; ++m) {
                auto C = slice_cell_complex(g, k, m);
                if (opt.corrupt_cells && !C.diff.empty())
                    for (auto& [key, entry] : C.diff.rbegin()->second)
                        for (auto& x : entry) x *= 2;
                auto H = bredon_all(C, Z, Variance::Homology);
                bool vanish = true;
                for (int j = -3; j <= -1; ++j) vanish = vanish && !H.count(j);
                T.check(vanish, "G=C" + std::to_string(g) + " K=C" + std::to_string(k) + " m=" + std::to_string(m));
            }
        }
    return T.to_json();
}

json oracle(const AcceptanceOptions& opt, Tally& T) {
    long dmax = opt.quick ? 3 : 6;
    long reps = 0;
    for (int m : {2, 4, 8}) {
        MackeyCoefficient Z(MackeyKind::ConstantZ, m), B(MackeyKind::Burnside, m);
        for (auto& V : genuine_reps(m, dmax)) {
            ++reps;
            auto C = chain_model(V);
            for (auto* M : {&Z, &B})
                for (auto v : {Variance::Homology, Variance::Cohomology})
                    T.check(bredon_all(C, *M, v) == simplicial_oracle(V, *M, v),
                            rep_label(V) + " " + M->name() + (v == Variance::Homology ? " homology" : " cohomology"));
            auto O = orbit_complex(C);
            for (int k = 0; k <= V.dim(); ++k)
                T.check(cohomology(O, k) == bredon(C, Z, Variance::Cohomology, k), rep_label(V) + " orbit H^" + std::to_string(k));
        }
    }
    json j = T.to_json();
    j["representations"] = reps;
    return j;
}

json mu_cn(const AcceptanceOptions& opt, Tally& T) {
    int cutoff = opt.quick ? 5 : 10, precision = opt.quick ? 8 : 16;
    json rows = json::array();
    for (int e = 1; e <= 3; ++e) {
        auto r = mu_cn_check(e, cutoff, precision);
        T.check(r.ok(), "e=" + std::to_string(e) + (r.first_failure ? " " + *r.first_failure : ""));
        rows.push_back(r.to_json());
    }
    json j = T.to_json();
    j["cutoff"] = cutoff;
    j["precision"] = precision;
    j["reports"] = rows;
    return j;
}

json heights(const AcceptanceOptions&, Tally& T) {
    PrimeField F2(2), F3(3);
    T.check(height(fgl_additive(F2, 16)).kind == Height::Kind::Infinite, "additive over F_2");
    T.check(height(fgl_additive(F3, 9)).kind == Height::Kind::Infinite, "additive over F_3");
    T.check(height(fgl_multiplicative(F2, 8, F2.one())) == Height{Height::Kind::Finite, 1}, "multiplicative over F_2");
    json found = json::object();
    for (int e = 1; e <= 3; ++e) {
        // height n = 2^{e-1} shows up in degree 2^n of [2](t)
        int cutoff = std::max(8, 1 << (1 << (e - 1)));
        auto h = height(reduce_mod_pi(formal_A_module(e, cutoff, 16).F));
        found[std::to_string(e)] = h.str();
        T.check(h == Height{Height::Kind::Finite, 1 << (e - 1)}, "Hazewinkel e=" + std::to_string(e) + " gave " + h.str());
    }
    json j = T.to_json();
    j["hazewinkel"] = found;
    return j;
}

json detection(const AcceptanceOptions& opt, Tally& T) {
    int smax = opt.quick ? 3 : 6;
    for (int p : {3, 5}) {
        auto r = ravenel_pattern_check(p);
        T.check(r.ok() && r.dims == std::vector<int>(9, p - 1), "Ravenel pattern p=" + std::to_string(p));
        // exponent vectors (i_0, i_1, i_2) with sum <= smax
        for (int a = 0; a <= smax; ++a)
            for (int b = 0; a + b <= smax; ++b)
                for (int c = 0; a + b + c <= smax; ++c)
                    T.check(monomial_nonvanishing(p, {a, b, c}).nonzero,
                            "monomial p=" + std::to_string(p) + " (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
    }
    AbelianGroup z8{0, {8, 8, 8, 8}};
    for (int j = 4; j <= 10; ++j) {
        auto k = kervaire_target(j);
        T.check(k.nonzero && k.group == z8, "kervaire target j=" + std::to_string(j));
    }
    return T.to_json();
}

json degrees(const AcceptanceOptions&, Tally& T) {
    T.check(degree_str(build_D().degree) == "19*rho_8", "D = 19 rho_8");
    T.check(build_omega(4).degree == RealRep::trivial(8, 256), "omega in degree 256");
    for (int e = 1; e <= 3; ++e)
        for (int k = 1; k <= 5; ++k) T.check(differential_consistency(e, k), "differential e=" + std::to_string(e) + " k=" + std::to_string(k));
    T.check(periodicity_requirements(4, 2, 1) == 4, "periodicity (4,2,1)");
    T.check(periodicity_from(d_factors()) == 4, "periodicity read off D");
    T.check(fixed_point_certificate(8, d_factors()).complete(), "fixed point certificate");
    for (long j = 1; j <= 12; ++j) T.check(skeleton_deduction(j) == (j >= 8), "skeleton j=" + std::to_string(j));
    return T.to_json();
}

json arf_suite(const AcceptanceOptions& opt, Tally& T) {
    int gmax = opt.quick ? 2 : 3;
    std::vector<QuadraticSpace> small;
    long spaces = 0;
    for (int g = 0; g <= gmax; ++g)
        for_each_nondegenerate(g, [&](const QuadraticSpace& Q) {
            ++spaces;
            int a = arf(Q);
            long s = gauss_sum(Q);
            bool ok = witt_class(Q) == a && (s > 0) == (a == 0) && s != 0;
            T.check(ok, ok ? std::string() : "g=" + std::to_string(g) + " " + Q.to_json().dump());
            if (g <= gmax - 1) small.push_back(Q);
        });
    for (auto& A : small)
        for (auto& B : small) T.check(arf(direct_sum(A, B)) == (arf(A) ^ arf(B)), "additivity");
    T.check(arf(QuadraticSpace::hyperbolic()) == 0, "hyperbolic");
    json j = T.to_json();
    j["spaces"] = spaces;
    return j;
}

json slice_algebra(const AcceptanceOptions& opt, Tally& T) {
    long ab = opt.quick ? 2 : 3;
    for (int g : {1, 2, 4, 8})
        for (int h : subgroups(g))
            for (int k : subgroups(g))
                for (long a = -ab; a <= ab; ++a)
                    for (long b = -ab; b <= ab; ++b) {
                        SliceCell A(g, h, a), B(g, k, b);
                        T.check(smash(A, B) == smash_brute(A, B), "smash C" + std::to_string(g));
                    }
    int smax = opt.quick ? 3 : 6;
    for (int g : {2, 4, 8, 16})
        for (int h : subgroups(g)) {
            if (g / h != 2 && g / h != 4) continue;
            for (int size = 1; size <= smax; ++size) {
                std::vector<long> exps;
                for (int i = 0; i < size; ++i) exps.push_back(i);
                T.check(norm_wedge(g, h, exps, 1000) == norm_wedge_brute(g, h, exps, 1000),
                        "norm wedge C" + std::to_string(h) + " in C" + std::to_string(g) + " size " + std::to_string(size));
            }
        }
    long dmax = opt.quick ? 12 : 24;
    for (int e = 1; e <= 3; ++e) {
        auto census = refinement_census(e, dmax);
        auto series = hmu_series(1 << (e - 1), dmax);
        for (long d = 0; 2 * d <= dmax; ++d)
            T.check(census.at(2 * d).underlying_count() == series[d], "census e=" + std::to_string(e) + " dim " + std::to_string(2 * d));
    }
    return T.to_json();
}

json gap(const AcceptanceOptions& opt, Tally& T) {
    long tmax = opt.quick ? 8 : 16;
    auto R = gap_report(3, 19, tmax);
    T.check(R.ok, R.failure.value_or("gap"));
    json j = R.to_json();
    j["tmax"] = tmax;
    return j;
}

struct CriterionDef {
    const char* name;
    long budget_ms;
    std::function<json(const AcceptanceOptions&, Tally&)> run;
};

const std::vector<CriterionDef>& criteria() {
    static const std::vector<CriterionDef> s{
        {"cell-lemma", 60000, cell_lemma},      {"oracle", 120000, oracle}, {"mu-cn", 60000, mu_cn},
        {"heights", 10000, heights},            {"detection", 30000, detection}, {"degree-calculus", 1000, degrees},
        {"arf", 10000, arf_suite},              {"slice-algebra", 60000, slice_algebra}, {"gap", 120000, gap},
    };
    return s;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& opt) {
    require(id >= 1 && id <= 9, "criteria are numbered 1..9");
    auto& def = criteria()[id - 1];
    CriterionResult R;
    R.id = id;
    R.name = def.name;
    R.budget_ms = def.budget_ms;
    auto t0 = std::chrono::steady_clock::now();
    Tally T;
    try {
        R.detail = def.run(opt, T);
        R.exact = T.ok();
    } catch (const std::exception& e) {
        R.exact = false;
        R.detail = json{{"exception", e.what()}};
    }
    R.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return R;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 9; ++id) out.push_back(run_criterion(id, opt));
    return out;
}

}  // namespace slicegap
