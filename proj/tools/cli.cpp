#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "slicegap/acceptance.hpp"
#include "slicegap/arf.hpp"
#include "slicegap/bredon.hpp"
#include "slicegap/cyclic.hpp"
#include "slicegap/error.hpp"
#include "slicegap/fgl.hpp"
#include "slicegap/rog.hpp"
#include "slicegap/slice.hpp"

namespace slicegap::cli {

namespace {

struct Opts {
    int indent = -1;
    bool no_timing = false;

    // arf
    bool hyperbolic = false, arf_one = false;
    std::string form;
    // fgl
    std::string kind = "multiplicative";
    long p = 2, k = 2;
    int cutoff = 8, precision = 16, e = 3, probe = -1;
    // cohomology / detect / kervaire
    int m = 2, degree = 0, j = 4;
    std::string module = "Z", monomial;
    bool h0 = false;
    // equivariant
    int group = 8, from = 1, to = 1, subgroup = 1, h = 1;
    std::string gset, x, y, rep, matrix, coeff = "constZ", variance = "homology";
    // slice
    long mult = 1, a = 1, b = 1, dmax = 16, tmax = 16, l = 19;
    bool irregular = false;
    std::string exponents = "0,1,2,3";
    // verify
    std::string profile = "full";
    int criterion = 0;
    bool inject_fault = false;
};

struct Outcome {
    json result;
    bool ok = true;
};

// accepts relaxed objects like {a:1,b:1,c:[1,1,1]}
json parse_relaxed(const std::string& s) {
    static const std::regex bare(R"(([{,]\s*)([A-Za-z_][A-Za-z0-9_]*)\s*:)");
    try {
        return json::parse(std::regex_replace(s, bare, "$1\"$2\":"));
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("could not parse JSON argument: ") + e.what());
    }
}

std::vector<long> parse_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(std::stol(item));
        } catch (const std::exception&) {
            throw InvalidInput("not an integer list: " + s);
        }
    }
    return out;
}

int log2_group(int g) {
    require_group(g);
    int e = 0;
    while ((1 << e) < g) ++e;
    return e;
}

CyclicModule parse_module(int m, const std::string& s) {
    if (s == "Z") return CyclicModule::trivial_Z(m);
    if (s == "Z-") return CyclicModule::sign_Z(m);
    if (s.rfind("Z/", 0) == 0) return CyclicModule::trivial_cyclic(m, std::stol(s.substr(2)));
    auto parts = [&](char tag) {
        auto v = parse_list(s.substr(2));
        require(s.size() > 2 && s[0] == tag && s[1] == ':' && v.size() == 2, "module " + s + " needs two parameters");
        return v;
    };
    if (s[0] == 'F') {
        auto v = parts('F');
        return CyclicModule::trivial_field(m, static_cast<std::uint64_t>(v[0]), static_cast<int>(v[1]));
    }
    if (s[0] == 'A') {
        auto v = parts('A');
        return CyclicModule::cyclotomic(m, static_cast<int>(v[0]), v[1]);
    }
    throw InvalidInput("unknown module " + s + " (Z, Z-, Z/N, F:p:n, A:e:k)");
}

MackeyKind parse_coeff(const std::string& s) {
    if (s == "constZ") return MackeyKind::ConstantZ;
    if (s == "burnside") return MackeyKind::Burnside;
    throw InvalidInput("unknown coefficients " + s + " (constZ, burnside)");
}

Variance parse_variance(const std::string& s) {
    if (s == "homology") return Variance::Homology;
    if (s == "cohomology") return Variance::Cohomology;
    throw InvalidInput("unknown variance " + s + " (homology, cohomology)");
}

json graded(const std::map<int, AbelianGroup>& H) {
    json out = json::object();
    for (auto& [k, grp] : H) out[std::to_string(k)] = grp.to_json();
    return out;
}

template <class R>
Outcome fgl_over(const R& ring, const std::string& action, const Opts& o) {
    if (o.kind != "additive" && o.kind != "multiplicative") throw InvalidInput("unknown kind " + o.kind);
    auto F = o.kind == "additive" ? fgl_additive(ring, o.cutoff) : fgl_multiplicative(ring, o.cutoff, ring.one());
    if (action == "verify") {
        auto r = fgl_verify(F);
        return {json{{"unit", r.unit.is_zero()}, {"commutativity", r.commutativity.is_zero()}, {"associativity", r.associativity.is_zero()}},
                r.ok()};
    }
    if (action == "kseries") return {k_series(F, o.k).to_json()};
    if (action == "height") return {json{{"height", height(F, o.probe).str()}}};
    if (action == "log") return {logarithm(F).to_json()};
    auto c = conjugate_fgl(F);
    return {json{{"fbar", c.Fbar.to_json()}, {"witness", c.witness.to_json()}, {"witnessIsIso", c.witness_is_iso}}, c.witness_is_iso};
}

Outcome run_fgl(const std::string& action, const Opts& o) {
    require(o.cutoff >= 1 && o.cutoff <= 64, "cutoff must lie in 1..64");
    if (action == "hazewinkel") {
        auto M = formal_A_module(o.e, o.cutoff, o.precision);
        return {json{{"F", M.F.to_json()}, {"zeta", M.zeta_series.to_json()}, {"heightModPi", height(reduce_mod_pi(M.F)).str()}}};
    }
    if (action == "mucn") {
        auto r = mu_cn_check(o.e, o.cutoff, o.precision);
        return {r.to_json(), r.ok()};
    }
    if (o.p == 0) {
        if (action == "log") return fgl_over(Rationals{}, action, o);
        return fgl_over(Integers{}, action, o);
    }
    require(o.p >= 2 && is_prime(static_cast<std::uint64_t>(o.p)), "--p must be 0 or a prime");
    return fgl_over(PrimeField(static_cast<std::uint64_t>(o.p)), action, o);
}

Outcome run_slice(const std::string& action, const Opts& o) {
    if (action == "dim") {
        SliceCell c(o.group, o.subgroup, o.mult, !o.irregular);
        auto [lo, hi] = cw_range(c);
        return {json{{"dimension", c.dimension()}, {"cwRange", {lo, hi}}, {"cellDimensions", cell_dimensions(c)}, {"isotropic", c.isotropic()}}};
    }
    if (action == "smash") return {smash(SliceCell(o.group, o.h, o.a), SliceCell(o.group, o.subgroup, o.b)).to_json()};
    if (action == "norm-wedge") return {norm_wedge(o.group, o.h, parse_list(o.exponents), o.dmax).to_json()};
    if (action == "census") {
        json out = json::object();
        for (auto& [d, W] : refinement_census(log2_group(o.group), o.dmax)) out[std::to_string(d)] = W.to_json();
        return {out};
    }
    auto R = gap_report(log2_group(o.group), o.l, o.tmax);
    return {R.to_json(), R.ok};
}

Outcome run_classes(const std::string& action, const Opts& o, bool e_given, bool k_given) {
    if (action == "D") return {degree_str(build_D().degree)};
    if (action == "omega") return {degree_str(build_omega(k_given ? static_cast<int>(o.k) : 4).degree)};
    if (action == "diffcheck") {
        if (e_given && k_given) {
            bool ok = differential_consistency(o.e, static_cast<int>(o.k));
            return {ok, ok};
        }
        bool ok = true;
        for (int e = 1; e <= 3; ++e)
            for (int k = 1; k <= 5; ++k) ok = ok && differential_consistency(e, k);
        return {ok, ok};
    }
    if (action == "deduce") return {skeleton_deduction(o.j)};
    return {adams_fixtures(o.tmax).to_json()};
}

Outcome run_verify(const Opts& o) {
    require(o.profile == "quick" || o.profile == "full", "--profile must be quick or full");
    AcceptanceOptions opt{o.profile == "quick", o.inject_fault};
    std::vector<CriterionResult> rows;
    if (o.criterion) rows.push_back(run_criterion(o.criterion, opt));
    else rows = run_acceptance(opt);
    json out = json::array();
    bool ok = true;
    for (auto& r : rows) {
        out.push_back(r.to_json(!o.no_timing));
        ok = ok && r.pass();
    }
    return {out, ok};
}

// options set on the command line, flag values as true
json parameters(const CLI::App* sub) {
    json out = json::object();
    for (const CLI::App* s = sub; s;) {
        for (auto* opt : s->get_options()) {
            if (opt->count() == 0 || opt->get_name() == "--help") continue;
            std::string name = opt->get_name();
            name.erase(0, name.find_first_not_of('-'));
            if (opt->get_expected_min() == 0) out[name] = true;
            else {
                auto r = opt->results();
                std::string v;
                for (std::size_t i = 0; i < r.size(); ++i) v += (i ? "," : "") + r[i];
                out[name] = v;
            }
        }
        auto subs = s->get_subcommands();
        s = subs.empty() ? nullptr : subs.front();
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Opts o;
    CLI::App app{"slicegap: equivariant and chromatic computations for C_{2^e}"};
    app.name("slicegap");
    app.require_subcommand(1);
    app.add_option("--json-indent", o.indent, "indent JSON output (default: compact)");
    app.add_flag("--no-timing", o.no_timing, "report elapsedMs as 0");

    auto* arf = app.add_subcommand("arf", "Arf invariant of a quadratic form over F_2");
    arf->add_flag("--hyperbolic", o.hyperbolic);
    arf->add_flag("--arf-one", o.arf_one);
    arf->add_option("--form", o.form, "{g, qBasis, B}");

    auto* fgl = app.add_subcommand("fgl", "formal group laws");
    fgl->require_subcommand(1);
    for (const char* name : {"verify", "kseries", "height", "log", "conjugate", "hazewinkel", "mucn"}) {
        auto* s = fgl->add_subcommand(name);
        s->add_option("--kind", o.kind, "additive or multiplicative");
        s->add_option("--p", o.p, "characteristic: a prime, or 0 for Z (Q for log)");
        s->add_option("--cutoff", o.cutoff);
        s->add_option("--k", o.k, "k for [k](t)");
        s->add_option("--probe", o.probe, "largest height to certify");
        s->add_option("--e", o.e, "2n = 2^e");
        s->add_option("--precision", o.precision, "2-adic precision");
    }

    auto* coh = app.add_subcommand("cohomology", "H^s(C_m; M) from the periodic resolution");
    coh->add_option("--m", o.m)->required();
    coh->add_option("--module", o.module, "Z, Z-, Z/N, F:p:n or A:e:k");
    coh->add_option("--degree", o.degree)->required();

    auto* det = app.add_subcommand("detect", "detection images in H^*(C_p; F_{p^{p-1}})");
    det->add_option("--p", o.p)->required();
    det->add_option("--j", o.j);
    det->add_flag("--h0", o.h0);
    det->add_option("--monomial", o.monomial, "exponents i_0,i_1,...");

    auto* ker = app.add_subcommand("kervaire-target", "H^2(C_8; A u^{-2^{j-1}})");
    ker->add_option("--j", o.j)->required();

    auto* gs = app.add_subcommand("gset", "finite C_m-sets");
    gs->require_subcommand(1);
    auto* gr = gs->add_subcommand("restrict", "Res_K Ind_H X");
    gr->add_option("--group", o.group);
    gr->add_option("--from", o.from)->required();
    gr->add_option("--to", o.to)->required();
    gr->add_option("--gset", o.gset, "{\"d\": count}")->required();
    auto* gm = gs->add_subcommand("marks", "table of marks");
    gm->add_option("--group", o.group);
    auto* gp = gs->add_subcommand("product", "product of two C_m-sets");
    gp->add_option("--group", o.group);
    gp->add_option("--x", o.x)->required();
    gp->add_option("--y", o.y)->required();

    auto* rp = app.add_subcommand("rep", "real representations");
    rp->require_subcommand(1);
    for (const char* name : {"decompose", "fixed", "ind", "res"}) {
        auto* s = rp->add_subcommand(name);
        s->add_option("--group", o.group);
        s->add_option("--subgroup", o.subgroup);
        s->add_option("--rep", o.rep, "{a, b, c: [...]}");
        s->add_option("--matrix", o.matrix, "integer matrix of the generator");
    }

    auto* br = app.add_subcommand("bredon", "Bredon (co)homology of S^V");
    br->add_option("--group", o.group);
    br->add_option("--rep", o.rep)->required();
    br->add_option("--coeff", o.coeff, "constZ or burnside");
    br->add_option("--variance", o.variance, "homology or cohomology");

    auto* cl = app.add_subcommand("cell-lemma", "H_j(Ind_K S^{m rho_K}) = 0 for -3 <= j <= -1");
    cl->add_option("--group", o.group);
    cl->add_option("--k", o.subgroup)->required();
    cl->add_option("--m", o.mult)->required();

    auto* sl = app.add_subcommand("slice", "slice cells");
    sl->require_subcommand(1);
    auto* sd = sl->add_subcommand("dim");
    sd->add_option("--group", o.group);
    sd->add_option("--k", o.subgroup);
    sd->add_option("--m", o.mult);
    sd->add_flag("--irregular", o.irregular);
    auto* ss = sl->add_subcommand("smash");
    ss->add_option("--group", o.group);
    ss->add_option("--k1", o.h, "first cell over C_k1");
    ss->add_option("--a", o.a);
    ss->add_option("--k2", o.subgroup, "second cell over C_k2");
    ss->add_option("--b", o.b);
    auto* sn = sl->add_subcommand("norm-wedge");
    sn->add_option("--group", o.group);
    sn->add_option("--sub", o.h, "the subgroup H normed from");
    sn->add_option("--exponents", o.exponents);
    sn->add_option("--dmax", o.dmax);
    auto* sc = sl->add_subcommand("census");
    sc->add_option("--group", o.group);
    sc->add_option("--dmax", o.dmax);
    std::vector<CLI::App*> gap_cmds{sl->add_subcommand("gap"), app.add_subcommand("gap", "the gap check over the refinement census")};
    for (auto* s : gap_cmds) {
        s->add_option("--group", o.group);
        s->add_option("--l", o.l);
        s->add_option("--tmax", o.tmax);
    }

    auto* cs = app.add_subcommand("classes", "RO(G)-graded degree calculus");
    cs->require_subcommand(1);
    CLI::Option* e_opt = nullptr;
    CLI::Option* k_opt = nullptr;
    std::map<std::string, std::pair<CLI::Option*, CLI::Option*>> class_opts;
    for (const char* name : {"D", "omega", "diffcheck", "deduce", "adams"}) {
        auto* s = cs->add_subcommand(name);
        e_opt = s->add_option("--e", o.e);
        k_opt = s->add_option("--k", o.k);
        s->add_option("--j", o.j);
        s->add_option("--tmax", o.tmax);
        class_opts[name] = {e_opt, k_opt};
    }

    auto* vf = app.add_subcommand("verify", "acceptance criteria 1-9");
    vf->add_option("--profile", o.profile, "quick or full");
    vf->add_option("--criterion", o.criterion, "run a single criterion");
    vf->add_flag("--inject-fault", o.inject_fault, "double a Cell Lemma differential");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        err << app.help();
        return 2;
    }

    const CLI::App* top = app.get_subcommands().front();
    std::string command = top->get_name();
    std::string action;
    if (!top->get_subcommands().empty()) action = top->get_subcommands().front()->get_name();

    auto t0 = std::chrono::steady_clock::now();
    json res;
    std::string status = "ok";
    int code = 0;
    try {
        Outcome r;
        if (command == "arf") {
            int chosen = int(o.hyperbolic) + int(o.arf_one) + int(!o.form.empty());
            require(chosen == 1, "arf needs exactly one of --hyperbolic, --arf-one, --form");
            auto Q = o.hyperbolic ? QuadraticSpace::hyperbolic()
                     : o.arf_one  ? QuadraticSpace::arf_one()
                                  : QuadraticSpace::from_json(parse_relaxed(o.form));
            r = {arf_report(Q)};
        } else if (command == "fgl") {
            r = run_fgl(action, o);
        } else if (command == "cohomology") {
            r = {periodic_cohomology(parse_module(o.m, o.module), o.degree).to_json()};
        } else if (command == "detect") {
            if (!o.monomial.empty()) {
                std::vector<int> ex;
                for (long v : parse_list(o.monomial)) ex.push_back(static_cast<int>(v));
                auto mr = monomial_nonvanishing(static_cast<int>(o.p), ex);
                r = {mr.to_json(), mr.nonzero};
            } else if (o.h0) {
                r = {detection_image_h0(static_cast<int>(o.p)).to_json()};
            } else {
                r = {detection_image(static_cast<int>(o.p), o.j).to_json()};
            }
        } else if (command == "kervaire-target") {
            r = {kervaire_target(o.j).to_json()};
        } else if (command == "gset") {
            require_group(o.group);
            if (action == "restrict") r = {double_coset_restrict(o.group, o.from, o.to, GSet::from_json(parse_relaxed(o.gset))).to_json()};
            else if (action == "marks") r = {table_of_marks(o.group).to_json()};
            else r = {burnside_product(o.group, GSet::from_json(parse_relaxed(o.x)), GSet::from_json(parse_relaxed(o.y))).to_json()};
        } else if (command == "rep") {
            auto need = [&](const std::string& s, const char* flag) {
                require(!s.empty(), std::string("rep ") + action + " needs " + flag);
                return parse_relaxed(s);
            };
            if (action == "decompose") {
                auto V = rep_decompose(o.group, IntMatrix::from_json(need(o.matrix, "--matrix")));
                r = {json{{"rep", V.to_json()}, {"name", V.str()}}};
            } else if (action == "fixed") {
                auto V = RealRep::from_json(o.group, need(o.rep, "--rep"));
                r = {json{{"dim", rep_fixed(V, o.subgroup)}}};
            } else if (action == "ind") {
                require_subgroup(o.group, o.subgroup);
                auto W = RealRep::from_json(o.subgroup, need(o.rep, "--rep"));
                auto V = rep_ind(W, o.group);
                r = {json{{"rep", V.to_json()}, {"name", V.str()}}};
            } else {
                auto V = rep_res(RealRep::from_json(o.group, need(o.rep, "--rep")), o.subgroup);
                r = {json{{"rep", V.to_json()}, {"name", V.str()}}};
            }
        } else if (command == "bredon") {
            auto V = RealRep::from_json(o.group, parse_relaxed(o.rep));
            MackeyCoefficient M(parse_coeff(o.coeff), o.group);
            r = {graded(bredon_all(chain_model(V), M, parse_variance(o.variance)))};
        } else if (command == "cell-lemma") {
            bool ok = cell_lemma_check(o.group, o.subgroup, o.mult);
            r = {ok, ok};
        } else if (command == "slice") {
            r = run_slice(action, o);
        } else if (command == "gap") {
            r = run_slice("gap", o);
        } else if (command == "classes") {
            auto [eo, ko] = class_opts.at(action);
            r = run_classes(action, o, eo->count() > 0, ko->count() > 0);
        } else {
            r = run_verify(o);
        }
        res = r.result;
        if (!r.ok) {
            status = "check-failed";
            code = 1;
        }
    } catch (const std::exception& e) {
        res = json{{"message", e.what()}};
        status = "error";
        code = 2;
    }
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    json doc{{"command", action.empty() ? command : command + " " + action},
             {"parameters", parameters(top)},
             {"result", res},
             {"status", status},
             {"elapsedMs", o.no_timing ? 0 : ms}};
    out << doc.dump(o.indent) << "\n";
    return code;
}

}  // namespace slicegap::cli
