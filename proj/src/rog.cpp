#include "slicegap/rog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "slicegap/error.hpp"

namespace slicegap {

std::optional<long> rho_multiple(const RODegree& d) {
    long m = d.a;
    if (d == RealRep::regular(d.m).scaled(m)) return m;
    return std::nullopt;
}

std::string degree_str(const RODegree& d) {
    if (d.is_zero()) return "0";
    if (d.m >= 2) {
        if (auto m = rho_multiple(d)) {
            std::string rho = "rho_" + std::to_string(d.m);
            return *m == 1 ? rho : *m == -1 ? "-" + rho : std::to_string(*m) + "*" + rho;
        }
    }
    std::ostringstream os;
    bool first = true;
    if (d.a != 0) {
        os << d.a;
        first = false;
    }
    auto term = [&](long k, const std::string& s) {
        if (k == 0) return;
        if (k < 0) os << "-";
        else if (!first) os << "+";
        long ak = k < 0 ? -k : k;
        if (ak != 1) os << ak << "*";
        os << s;
        first = false;
    };
    term(d.b, "sigma");
    for (std::size_t k = 0; k < d.c.size(); ++k) term(d.c[k], "lambda(" + std::to_string(k + 1) + ")");
    return os.str();
}

RODegree norm_degree(int g, const RODegree& d) {
    require_subgroup(g, d.m);
    auto j = rho_multiple(d);
    if (!j) throw InvalidInput("norm_degree only takes multiples of rho, got " + d.str());
    return RealRep::regular(g).scaled(*j);
}

RODegree res_degree(int h, const RODegree& d) { return rep_res(d, h); }

long fixed_degree(int h, const RODegree& d) {
    require_subgroup(d.m, h);
    auto m = rho_multiple(d);
    if (!m) throw InvalidInput("fixed_degree only takes multiples of rho, got " + d.str());
    return *m * (d.m / h);
}

NamedClass NamedClass::operator*(const NamedClass& o) const {
    require(group == o.group, "classes over different groups");
    return NamedClass{symbol + "*" + o.symbol, group, degree + o.degree, s + o.s};
}

NamedClass NamedClass::pow(long k) const {
    require(k >= 0, "negative powers are not classes");
    return NamedClass{"(" + symbol + ")^" + std::to_string(k), group, degree.scaled(k), s * k};
}

json NamedClass::to_json() const {
    return json{{"symbol", symbol}, {"group", group}, {"degree", degree_str(degree)}, {"filtration", s}};
}

NamedClass class_u(const RODegree& V) {
    if (!is_orientable(V)) throw InvalidInput("u_V needs an orientable V, got " + V.str());
    return NamedClass{"u_{" + degree_str(V) + "}", V.m, RealRep::trivial(V.m, V.dim()) - V, 0};
}

NamedClass class_a(const RODegree& V) {
    // filtrations are only fixed for powers of a_sigma
    if (!(V == RealRep::sigma(V.m).scaled(V.b)) || V.b < 0)
        throw InvalidInput("a_V carries a filtration only for V a multiple of sigma, got " + V.str());
    return NamedClass{V.b == 1 ? "a" : "a^" + std::to_string(V.b), V.m, V.scaled(-1), V.b};
}

bool a_forced_null(const RODegree& V) { return rep_fixed(V, V.m) != 0; }

NamedClass class_rbar(int g, long j) {
    require_group(g);
    require(g >= 2 && j >= 1, "rbar_j needs j >= 1 over a group of even order");
    return NamedClass{"rbar_" + std::to_string(j), 2, RealRep::regular(2).scaled(j), 0};
}

NamedClass class_g(int g, long j) {
    auto c = norm_class(g, class_rbar(g, j));
    c.symbol = "g_" + std::to_string(j);
    return c;
}

NamedClass class_delta(int g, int k) {
    require(k >= 1 && k <= 30, "Delta_k needs 1 <= k <= 30");
    auto c = class_g(g, (1L << k) - 1);
    c.symbol = "Delta_" + std::to_string(k) + "^(" + std::to_string(g) + ")";
    return c;
}

NamedClass class_b(int g) {
    require_group(g);
    require(g >= 2, "b needs a group of even order");
    // 1 ^ a_rhobar : S^1 -> S^rho
    return NamedClass{"b", g, RealRep::trivial(g, 1) - RealRep::regular(g), g - 1};
}

NamedClass class_f(int g, long j) {
    require_group(g);
    require(g >= 2 && j >= 1, "f_j needs j >= 1 over a group of even order");
    return NamedClass{"f_" + std::to_string(j), g, RealRep::trivial(g, j), (g - 1) * j};
}

NamedClass class_v(int k) {
    require(k >= 0 && k <= 26, "v needs 0 <= k <= 26");
    long c = 1L << (k + 1);
    return NamedClass{"v", 8, (RealRep::trivial(8, 8) - RealRep::regular(8)).scaled(c), 0};
}

NamedClass norm_class(int g, const NamedClass& c) {
    require(c.s == 0, "norms are only formed on filtration-zero classes");
    auto d = norm_degree(g, c.degree);
    std::string sym = c.group == g ? c.symbol : "N_" + std::to_string(c.group) + "^" + std::to_string(g) + "(" + c.symbol + ")";
    return NamedClass{sym, g, d, 0};
}

bool orientation_identity_check(const RODegree& U, const RODegree& V, int h, const RODegree& W) {
    require(U.m == V.m, "U and V must live over the same group");
    int g = U.m;
    require_subgroup(g, h);
    require(W.m == h, "W must live over the subgroup");
    // u_{U+V} = u_U u_V
    auto sum = class_u(U + V), prod = class_u(U) * class_u(V);
    bool ok = sum.degree == prod.degree && sum.s == prod.s;
    // u_{Res V} = Res u_V
    ok = ok && class_u(rep_res(V, h)).degree == res_degree(h, class_u(V).degree);
    // u_{Ind W} = u_{Ind dim W} * N u_W, the norm of u_W in degree dim W - W carried to
    // Ind (dim W) - Ind W
    auto ind = class_u(rep_ind(W, g));
    auto triv = class_u(rep_ind(RealRep::trivial(h, W.dim()), g));
    RODegree normed = rep_ind(RealRep::trivial(h, W.dim()), g) - rep_ind(W, g);
    ok = ok && class_u(W).s == 0 && ind.degree == triv.degree + normed && ind.s == triv.s;
    return ok;
}

bool differential_consistency(int e, int k) {
    require(e >= 1 && e <= 10 && k >= 1 && k <= 20, "differential_consistency needs 1 <= e <= 10, 1 <= k <= 20");
    int g = 1 << e;
    long r = 1 + static_cast<long>(g) * ((1L << k) - 1);
    auto source = class_u(RealRep::sigma(g).scaled(2)).pow(1L << (k - 1));
    auto target = class_a(RealRep::sigma(g)).pow(1L << k) * class_f(g, (1L << k) - 1);
    bool filtration = target.s - source.s == r && (1L << k) + (g - 1) * ((1L << k) - 1) == r;
    bool degree = target.degree == source.degree - RealRep::trivial(g, 1);
    return filtration && degree;
}

std::vector<NormFactor> d_factors() { return {{2, 4}, {4, 2}, {8, 1}}; }

NamedClass build_D() {
    std::optional<NamedClass> D;
    for (auto [h, k] : d_factors()) {
        auto c = norm_class(8, class_delta(h, k));
        D = D ? *D * c : c;
    }
    D->symbol = "D";
    return *D;
}

NamedClass build_omega(int k) {
    require(k >= 0 && k <= 26, "omega needs 0 <= k <= 26");
    auto w = class_delta(8, 1).pow(1L << (k + 1)) * class_v(k);
    w.symbol = "omega";
    return w;
}

bool DivisibilityCertificate::complete() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.second.has_value(); });
}

json DivisibilityCertificate::to_json() const {
    json out = json::array();
    for (auto& [h, k] : entries) out.push_back(json{{"subgroup", h}, {"k", k ? json(*k) : json(nullptr)}});
    return out;
}

DivisibilityCertificate fixed_point_certificate(int g, const std::vector<NormFactor>& D) {
    require_group(g);
    DivisibilityCertificate C;
    C.g = g;
    RODegree total(g);
    for (auto [h, k] : D) total = total + norm_class(g, class_delta(h, k)).degree;
    for (int h : subgroups(g)) {
        if (h < 2) continue;
        // Delta_k^{(h)} divides Res_h N_h^g Delta_k^{(h)}, so a factor over h certifies h
        std::optional<int> best;
        for (auto [fh, fk] : D)
            if (fh == h && (!best || fk < *best)) best = fk;
        if (best) {
            // the quotient Res_h D / Delta_k^{(h)} must be a non-negative multiple of rho_h
            auto q = res_degree(h, total) - class_delta(h, *best).degree;
            auto m = rho_multiple(q);
            if (!m || *m < 0) throw MathError("divisibility certificate has an inconsistent degree");
        }
        C.entries.push_back({h, best});
    }
    return C;
}

int periodicity_requirements(int k1, int k2, int k3) {
    require(k1 >= 1 && k2 >= 1 && k3 >= 1, "periodicity requirements need k_i >= 1");
    return std::max({k1, k2 - 2, k3 - 3, 1});
}

std::optional<int> periodicity_from(const std::vector<NormFactor>& D) {
    auto C = fixed_point_certificate(8, D);
    if (!C.complete()) return std::nullopt;
    std::map<int, int> k;
    for (auto& [h, kk] : C.entries) k[h] = *kk;
    return periodicity_requirements(k.at(2), k.at(4), k.at(8));
}

bool skeleton_deduction(long j) {
    require(j >= 1, "skeleton_deduction needs j >= 1");
    // is 2^j - 2 = -2 mod 256
    long p = 1;
    for (long i = 0; i < j && p != 0; ++i) p = (2 * p) % 256;
    return p == 0;
}

json AdamsFixtures::to_json() const {
    auto rows = [](const std::vector<AdamsElement>& v) {
        json out = json::array();
        for (auto& e : v) out.push_back(json{{"name", e.name}, {"s", e.s}, {"t", e.t}, {"e3Survivor", e.e3_survivor}});
        return out;
    };
    return json{{"oneLine", rows(one_line)}, {"twoLine", rows(two_line)}, {"hopfDims", hopf_dims}};
}

AdamsFixtures adams_fixtures(long tmax) {
    require(tmax >= 0 && tmax <= (1L << 40), "tmax out of range");
    AdamsFixtures F;
    int jmax = 0;
    while ((1L << (jmax + 1)) <= tmax) ++jmax;
    auto h = [](int i) { return "h" + std::to_string(i); };
    for (int j = 0; (1L << j) <= tmax; ++j) F.one_line.push_back({h(j), 1, 1L << j, j <= 3});
    std::vector<std::pair<int, int>> sporadic{{0, 2}, {0, 3}, {2, 4}, {2, 5}, {3, 6}};
    for (int i = 0; i <= jmax; ++i)
        for (int j = i; j <= jmax; ++j) {
            if (j == i + 1) continue;
            long t = (1L << i) + (1L << j);
            if (t > tmax) continue;
            bool survivor = i == j || i == 1 || std::find(sporadic.begin(), sporadic.end(), std::pair{i, j}) != sporadic.end();
            std::string name = i == j ? h(i) + "^2" : h(i) + h(j);
            F.two_line.push_back({name, 2, t, survivor});
        }
    std::sort(F.two_line.begin(), F.two_line.end(), [](const auto& a, const auto& b) { return std::pair{a.t, a.name} < std::pair{b.t, b.name}; });
    for (auto& e : F.one_line)
        if (e.e3_survivor) F.hopf_dims.push_back(e.t - 1);
    return F;
}

std::optional<std::string> adams_d2(long j) {
    if (j <= 3) return std::nullopt;
    return "h0*h" + std::to_string(j - 1) + "^2";
}

}  // namespace slicegap
