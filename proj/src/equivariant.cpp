#include "slicegap/equivariant.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "slicegap/error.hpp"
#include "slicegap/rings.hpp"

namespace slicegap {

bool is_power_of_two(long m) { return m > 0 && (m & (m - 1)) == 0; }

void require_group(int m) { require(is_power_of_two(m), "group order must be a power of two"); }

void require_subgroup(int m, int d) {
    require_group(m);
    require(d > 0 && m % d == 0, "subgroup order " + std::to_string(d) + " does not divide " + std::to_string(m));
}

std::vector<int> subgroups(int m) {
    require_group(m);
    std::vector<int> out;
    for (int d = 1; d <= m; d *= 2) out.push_back(d);
    return out;
}

// ---- GSet

GSet GSet::orbit(int d, long count) {
    GSet X;
    if (count != 0) X.orbits[d] = count;
    return X;
}

long GSet::cardinality(int m) const {
    long n = 0;
    for (auto [d, c] : orbits) n += c * (m / d);
    return n;
}

GSet GSet::operator+(const GSet& o) const {
    GSet r = *this;
    for (auto [d, c] : o.orbits)
        if ((r.orbits[d] += c) == 0) r.orbits.erase(d);
    return r;
}

json GSet::to_json() const {
    json j = json::object();
    for (auto [d, c] : orbits) j[std::to_string(d)] = c;
    return j;
}

GSet GSet::from_json(const json& j) {
    require(j.is_object(), "G-set must be an object {subgroupOrder: count}");
    GSet X;
    for (auto it = j.begin(); it != j.end(); ++it) {
        int d = std::stoi(it.key());
        long c = it.value().get<long>();
        require(c >= 0, "orbit counts must be non-negative");
        if (c) X.orbits[d] += c;
    }
    return X;
}

// ---- explicit G-sets

ExplicitGSet ExplicitGSet::from(int m, const GSet& X) {
    ExplicitGSet E;
    E.m = m;
    for (auto [d, c] : X.orbits) {
        require_subgroup(m, d);
        for (long r = 0; r < c; ++r) {
            int base = E.size(), s = m / d;
            for (int i = 0; i < s; ++i) E.gen.push_back(base + (i + 1) % s);
        }
    }
    return E;
}

int ExplicitGSet::act(int point, long g) const {
    g %= m;
    if (g < 0) g += m;
    for (long i = 0; i < g; ++i) point = gen[point];
    return point;
}

GSet ExplicitGSet::orbits() const {
    GSet X;
    std::vector<char> seen(gen.size(), 0);
    for (int p = 0; p < size(); ++p) {
        if (seen[p]) continue;
        int len = 0;
        for (int q = p; !seen[q]; q = gen[q]) seen[q] = 1, ++len;
        X.orbits[m / len] += 1;
    }
    return X;
}

ExplicitGSet ExplicitGSet::restrict_to(int k) const {
    require_subgroup(m, k);
    ExplicitGSet R;
    R.m = k;
    R.gen.resize(gen.size());
    for (int p = 0; p < size(); ++p) R.gen[p] = act(p, m / k);
    return R;
}

ExplicitGSet ExplicitGSet::induce(const ExplicitGSet& X, int m) {
    require_subgroup(m, X.m);
    ExplicitGSet I;
    I.m = m;
    int idx = m / X.m, n = X.size();
    I.gen.resize(static_cast<std::size_t>(idx) * n);
    for (int i = 0; i < idx; ++i)
        for (int x = 0; x < n; ++x)
            I.gen[i * n + x] = i + 1 < idx ? (i + 1) * n + x : X.gen[x];
    return I;
}

ExplicitGSet ExplicitGSet::product(const ExplicitGSet& o) const {
    require(m == o.m, "product of G-sets over different groups");
    ExplicitGSet P;
    P.m = m;
    int n = o.size();
    P.gen.resize(gen.size() * o.gen.size());
    for (int p = 0; p < size(); ++p)
        for (int q = 0; q < n; ++q) P.gen[p * n + q] = gen[p] * n + o.gen[q];
    return P;
}

long ExplicitGSet::fixed_points(int a) const {
    require_subgroup(m, a);
    long n = 0;
    for (int p = 0; p < size(); ++p) n += act(p, m / a) == p;
    return n;
}

// ---- double cosets, marks, products

GSet double_coset_restrict(int m, int h, int k, const GSet& X) {
    require_subgroup(m, h);
    require_subgroup(m, k);
    int l = std::gcd(h, k), hk = std::lcm(h, k);
    GSet out;
    for (auto [d, c] : X.orbits) {
        require_subgroup(h, d);
        // Res^H_L(H/C_d) = [H : L C_d] copies of L/(L n C_d), induced up to K
        long copies = static_cast<long>(m / hk) * (h / std::lcm(l, d));
        out.orbits[std::gcd(l, d)] += copies * c;
    }
    return out;
}

GSet double_coset_restrict_brute(int m, int h, int k, const GSet& X) {
    require_subgroup(m, h);
    require_subgroup(m, k);
    return ExplicitGSet::induce(ExplicitGSet::from(h, X), m).restrict_to(k).orbits();
}

IntMatrix table_of_marks(int m) {
    auto subs = subgroups(m);
    int n = static_cast<int>(subs.size());
    IntMatrix T(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) T(r, c) = mark(m, subs[c], GSet::orbit(subs[r]));
    return T;
}

long mark(int m, int a, const GSet& X) {
    require_subgroup(m, a);
    long n = 0;
    for (auto [b, c] : X.orbits)
        if (b % a == 0) n += c * (m / b);
    return n;
}

GSet burnside_product(int m, const GSet& X, const GSet& Y) {
    require_group(m);
    GSet out;
    for (auto [a, x] : X.orbits)
        for (auto [b, y] : Y.orbits) out.orbits[std::gcd(a, b)] += x * y * (m / std::lcm(a, b));
    return out;
}

long double_coset_count(int l, int h, int k) {
    require_subgroup(l, h);
    require_subgroup(l, k);
    std::vector<char> seen(l, 0);
    long count = 0;
    for (int g = 0; g < l; ++g) {
        if (seen[g]) continue;
        ++count;
        for (int x = 0; x < k; ++x)
            for (int y = 0; y < h; ++y) seen[(g + x * (l / k) + y * (l / h)) % l] = 1;
    }
    return count;
}

// ---- Mackey levels

MackeyCoefficient::MackeyCoefficient(MackeyKind k, int order) : kind(k), m(order) { require_group(order); }

int MackeyCoefficient::level_rank(int d) const {
    require_subgroup(m, d);
    return kind == MackeyKind::ConstantZ ? 1 : static_cast<int>(subgroups(d).size());
}

std::vector<int> MackeyCoefficient::basis(int d) const {
    require_subgroup(m, d);
    return kind == MackeyKind::ConstantZ ? std::vector<int>{d} : subgroups(d);
}

namespace {
int basis_index(int e) {
    int i = 0;
    while ((1 << i) < e) ++i;
    return i;
}
}  // namespace

IntMatrix MackeyCoefficient::res(int d, int dp) const {
    require_subgroup(m, dp);
    require_subgroup(dp, d);
    if (kind == MackeyKind::ConstantZ) return IntMatrix{{1}};
    IntMatrix R(level_rank(d), level_rank(dp));
    for (int e : subgroups(dp)) {
        GSet img = double_coset_restrict(dp, dp, d, GSet::orbit(e));
        for (auto [f, c] : img.orbits) R(basis_index(f), basis_index(e)) += c;
    }
    return R;
}

IntMatrix MackeyCoefficient::tr(int d, int dp) const {
    require_subgroup(m, dp);
    require_subgroup(dp, d);
    if (kind == MackeyKind::ConstantZ) return IntMatrix{{static_cast<long>(dp / d)}};
    IntMatrix T(level_rank(dp), level_rank(d));
    for (int e : subgroups(d)) T(basis_index(e), basis_index(e)) = 1;
    return T;
}

IntMatrix MackeyCoefficient::conj(int d, long) const { return IntMatrix::identity(level_rank(d)); }

std::string MackeyCoefficient::name() const { return kind == MackeyKind::ConstantZ ? "constZ" : "burnside"; }

IntMatrix mackey_transfer(const MackeyCoefficient& M, int d, int dp) {
    require(d > 0 && dp % d == 0 && M.m % dp == 0, "transfer needs d | d' | |G|");
    return M.tr(d, dp);
}

bool mackey_axiom_holds(const MackeyCoefficient& M, int h, int k, int l) {
    require_subgroup(M.m, l);
    require_subgroup(l, h);
    require_subgroup(l, k);
    IntMatrix lhs = M.res(k, l) * M.tr(h, l);
    int i = std::gcd(h, k);
    IntMatrix term = M.tr(i, k) * M.conj(i, 0) * M.res(i, h);
    IntMatrix rhs = term.scaled(double_coset_count(l, h, k));
    return lhs == rhs;
}

// ---- real representations

RealRep::RealRep(int order) : m(order) {
    require_group(order);
    c.assign(std::max(order / 2 - 1, 0), 0);
}

RealRep RealRep::trivial(int m, long a) {
    RealRep V(m);
    V.a = a;
    return V;
}

RealRep RealRep::sigma(int m) {
    require(m >= 2, "sigma needs a group of even order");
    RealRep V(m);
    V.b = 1;
    return V;
}

RealRep RealRep::lambda(int m, int k) {
    RealRep V(m);
    require(k >= 1 && k <= V.n() - 1, "lambda(k) needs 1 <= k <= n-1");
    V.c[k - 1] = 1;
    return V;
}

RealRep RealRep::regular(int m) {
    RealRep V(m);
    V.a = 1;
    if (m >= 2) V.b = 1;
    for (auto& x : V.c) x = 1;
    return V;
}

long RealRep::dim() const {
    long d = a + b;
    for (long x : c) d += 2 * x;
    return d;
}

bool RealRep::genuine() const {
    return a >= 0 && b >= 0 && std::all_of(c.begin(), c.end(), [](long x) { return x >= 0; });
}

bool RealRep::is_zero() const {
    return a == 0 && b == 0 && std::all_of(c.begin(), c.end(), [](long x) { return x == 0; });
}

RealRep RealRep::operator+(const RealRep& o) const {
    require(m == o.m, "representations over different groups");
    RealRep r = *this;
    r.a += o.a;
    r.b += o.b;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

RealRep RealRep::operator-(const RealRep& o) const { return *this + o.scaled(-1); }

RealRep RealRep::scaled(long k) const {
    RealRep r = *this;
    r.a *= k;
    r.b *= k;
    for (auto& x : r.c) x *= k;
    return r;
}

std::vector<long> RealRep::characters() const {
    std::vector<long> mult(m, 0);
    mult[0] += a;
    if (m >= 2) mult[m / 2] += b;
    for (int k = 1; k <= static_cast<int>(c.size()); ++k) {
        mult[k] += c[k - 1];
        mult[m - k] += c[k - 1];
    }
    return mult;
}

RealRep RealRep::from_characters(int m, const std::vector<long>& mult) {
    require(static_cast<int>(mult.size()) == m, "character vector has the wrong length");
    RealRep V(m);
    V.a = mult[0];
    if (m >= 2) V.b = mult[m / 2];
    for (int k = 1; k <= static_cast<int>(V.c.size()); ++k) {
        if (mult[k] != mult[m - k]) throw MathError("character is not real");
        V.c[k - 1] = mult[k];
    }
    return V;
}

json RealRep::to_json() const { return json{{"a", a}, {"b", b}, {"c", c}}; }

RealRep RealRep::from_json(int m, const json& j) {
    require(j.is_object(), "representation must be an object {a, b, c}");
    RealRep V(m);
    V.a = j.value("a", 0L);
    V.b = j.value("b", 0L);
    require(m >= 2 || V.b == 0, "the trivial group has no sign representation");
    if (j.contains("c")) {
        auto cs = j.at("c").get<std::vector<long>>();
        require(cs.size() <= V.c.size(), "too many lambda multiplicities for this group");
        std::copy(cs.begin(), cs.end(), V.c.begin());
    }
    return V;
}

std::string RealRep::str() const {
    std::ostringstream os;
    bool first = true;
    auto term = [&](long k, const std::string& s) {
        if (k == 0) return;
        if (!first) os << (k > 0 ? "+" : "-");
        else if (k < 0) os << "-";
        long ak = k < 0 ? -k : k;
        if (ak != 1) os << ak << "*";
        os << s;
        first = false;
    };
    term(a, "eps");
    term(b, "sigma");
    for (std::size_t k = 0; k < c.size(); ++k) term(c[k], "lambda(" + std::to_string(k + 1) + ")");
    if (first) os << "0";
    return os.str();
}

int lambda_kernel(int m, int k) { return std::gcd(m, k); }

RealRep rep_decompose(int m, const IntMatrix& gamma) {
    require_group(m);
    int n = gamma.rows();
    require(gamma.cols() == n, "representation matrix must be square");
    IntMatrix I = IntMatrix::identity(n);
    require(gamma.transpose() * gamma == I, "representation matrix is not orthogonal");
    IntMatrix p = I;
    for (int i = 0; i < m; ++i) p = p * gamma;
    require(p == I, "gamma^m is not the identity");

    RealRep V(m);
    V.a = n - (gamma - I).rank();
    if (m >= 2) V.b = n - (gamma + I).rank();
    // primitive r-th roots have equal multiplicity for a rational matrix
    IntMatrix g2 = gamma;
    for (int r = 4; r <= m; r *= 2) {
        g2 = g2 * g2;  // gamma^{r/2}
        long mult = (n - (g2 + I).rank()) / (r / 2);
        for (int k = 1; k <= V.n() - 1; ++k)
            if (m / std::gcd(m, k) == r) V.c[k - 1] = mult;
    }
    if (V.dim() != n) throw MathError("eigenspace decomposition does not exhaust the representation");
    return V;
}

long rep_fixed(const RealRep& V, int h) {
    require_subgroup(V.m, h);
    long d = V.a;
    if ((V.m / h) % 2 == 0) d += V.b;
    for (int k = 1; k <= static_cast<int>(V.c.size()); ++k)
        if (k % h == 0) d += 2 * V.c[k - 1];
    return d;
}

long rep_fixed_by_character(const RealRep& V, int h) {
    require_subgroup(V.m, h);
    if (V.m == 1) return V.a;
    int e = basis_index(V.m);
    CyclotomicRational Q(e);
    auto mult = V.characters();
    auto total = Q.zero();
    for (long t = 0; t < h; ++t) {
        long g = t * (V.m / h);
        for (int j = 0; j < V.m; ++j)
            if (mult[j]) total = Q.add(total, Q.mul(Q.from_int(mult[j]), Q.zeta_pow(j * g)));
    }
    for (std::size_t i = 1; i < total.size(); ++i)
        if (total[i] != 0) throw MathError("character average is not rational");
    mpq_class avg = total[0] / h;
    if (avg.get_den() != 1) throw MathError("character average is not an integer");
    return avg.get_num().get_si();
}

RealRep rep_ind(const RealRep& W, int m) {
    require_subgroup(m, W.m);
    int h = W.m;
    auto in = W.characters();
    std::vector<long> out(m, 0);
    for (int i = 0; i < m; ++i) out[i] = in[i % h];
    return RealRep::from_characters(m, out);
}

RealRep rep_res(const RealRep& V, int h) {
    require_subgroup(V.m, h);
    auto in = V.characters();
    std::vector<long> out(h, 0);
    // gamma_H = gamma^{m/h} acts on zeta_m^j as zeta_h^j
    for (int j = 0; j < V.m; ++j) out[j % h] += in[j];
    return RealRep::from_characters(h, out);
}

bool is_orientable(const RealRep& V) { return V.b % 2 == 0; }

IntMatrix permutation_rep(int m, const GSet& X) {
    auto E = ExplicitGSet::from(m, X);
    IntMatrix P(E.size(), E.size());
    for (int p = 0; p < E.size(); ++p) P(E.gen[p], p) = 1;
    return P;
}

std::vector<RealRep> genuine_reps(int m, long dmax) {
    require_group(m);
    std::vector<RealRep> out;
    RealRep V(m);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (V.dim() > dmax) return;
        if (i == V.c.size()) {
            for (long a = 0; V.dim() + a <= dmax; ++a)
                for (long b = 0; V.dim() + a + b <= dmax && (m >= 2 || b == 0); ++b) {
                    RealRep W = V;
                    W.a = a;
                    W.b = b;
                    out.push_back(W);
                }
            return;
        }
        for (long x = 0; V.dim() + 2 * x <= dmax; ++x) {
            V.c[i] = x;
            rec(i + 1);
        }
        V.c[i] = 0;
    };
    rec(0);
    return out;
}

}  // namespace slicegap
