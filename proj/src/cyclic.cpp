#include "slicegap/cyclic.hpp"

#include "slicegap/error.hpp"

namespace slicegap {

namespace {

IntMatrix power(const IntMatrix& g, int k) {
    IntMatrix r = IntMatrix::identity(g.rows());
    for (int i = 0; i < k; ++i) r = r * g;
    return r;
}

using FpMatrix = std::vector<std::vector<std::uint64_t>>;  // row-major, n x cols

int fp_rank(FpMatrix M, const PrimeField& F) {
    const int rows = static_cast<int>(M.size());
    const int cols = rows ? static_cast<int>(M[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && M[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(M[r], M[p]);
        auto inv = *F.inv(M[r][c]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            auto f = F.mul(M[i][c], inv);
            for (int j = c; j < cols; ++j) M[i][j] = F.sub(M[i][j], F.mul(f, M[r][j]));
        }
        ++r;
    }
    return r;
}

}  // namespace

IntMatrix CyclicModule::norm() const {
    IntMatrix N(rank(), rank()), g = IntMatrix::identity(rank());
    for (int k = 0; k < m; ++k) {
        N = N + g;
        g = g * gamma;
    }
    return N;
}

void CyclicModule::validate() const {
    if (m < 1) throw InvalidInput("CyclicModule: group order must be positive");
    if (gamma.rows() != gamma.cols() || relations.rows() != gamma.rows())
        throw InvalidInput("CyclicModule: shape mismatch");
    if (!in_column_lattice(relations, power(gamma, m) - IntMatrix::identity(rank())))
        throw MathError("CyclicModule: gamma^m is not the identity on M");
    if (!in_column_lattice(relations, gamma * relations))
        throw MathError("CyclicModule: gamma does not preserve the relations");
}

CyclicModule CyclicModule::trivial_Z(int m) { return {m, IntMatrix{{1}}, IntMatrix(1, 0), 0}; }

CyclicModule CyclicModule::sign_Z(int m) {
    require(m % 2 == 0, "sign_Z: group order must be even");
    return {m, IntMatrix{{-1}}, IntMatrix(1, 0), 0};
}

CyclicModule CyclicModule::trivial_field(int m, std::uint64_t p, int n) {
    require(is_prime(p) && n >= 1, "trivial_field: need a prime p and n >= 1");
    return {m, IntMatrix::identity(n), IntMatrix::identity(n).scaled(static_cast<long>(p)), 0};
}

CyclicModule CyclicModule::trivial_cyclic(int m, long N) {
    require(N >= 1, "trivial_cyclic: modulus must be positive");
    return {m, IntMatrix{{1}}, IntMatrix{{N}}, 0};
}

CyclicModule CyclicModule::cyclotomic(int m, int e, long k) {
    require(e >= 1 && e <= 8, "cyclotomic: e out of range");
    const int d = 1 << (e - 1);
    const long order = 2L * d;
    IntMatrix g(d, d);
    for (int j = 0; j < d; ++j) {
        long r = ((j + k) % order + order) % order;
        if (r < d)
            g(static_cast<int>(r), j) = 1;
        else
            g(static_cast<int>(r - d), j) = -1;
    }
    return {m, g, IntMatrix(d, 0), 0};
}

AbelianGroup periodic_cohomology(const CyclicModule& X, int s) {
    require(s >= 0, "periodic_cohomology: degree must be nonnegative");
    X.validate();
    const int r = X.rank();
    const IntMatrix one_minus = IntMatrix::identity(r) - X.gamma;
    const IntMatrix N = X.norm();
    if (s == 0) return subquotient(one_minus, IntMatrix(r, r), X.relations);
    if (s % 2 == 0) return subquotient(one_minus, N, X.relations);
    return subquotient(N, one_minus, X.relations);
}

// ---- cup products

CyclicFieldCohomology::CyclicFieldCohomology(int m, FiniteField field, int frobenius)
    : m_(m), F_(std::move(field)), frob_(frobenius) {
    require(m >= 1, "CyclicFieldCohomology: group order must be positive");
    require(frobenius >= 0, "CyclicFieldCohomology: negative Frobenius power");
    if ((static_cast<long>(frobenius) * m) % F_.degree() != 0)
        throw MathError("CyclicFieldCohomology: gamma^m is not the identity");
}

CyclicFieldCohomology::Cochain CyclicFieldCohomology::act(long g, const Cochain& x) const {
    long k = ((g % m_) + m_) % m_ * frob_ % F_.degree();
    Cochain y = x;
    for (long i = 0; i < k; ++i) {
        Cochain z = F_.one();
        for (std::uint64_t j = 0; j < F_.p(); ++j) z = F_.mul(z, y);
        y = z;
    }
    return y;
}

CyclicFieldCohomology::Cochain CyclicFieldCohomology::cup(int p, const Cochain& a, int q, const Cochain& b) const {
    require(p >= 0 && q >= 0, "cup: negative degree");
    if (p % 2 == 0) return F_.mul(a, b);
    if (q % 2 == 0) return F_.mul(a, act(1, b));
    Cochain s = F_.zero();
    for (int i = 0; i < m_; ++i)
        for (int j = i + 1; j < m_; ++j) s = F_.add(s, F_.mul(act(i, a), act(j, b)));
    return s;
}

std::vector<std::vector<std::uint64_t>> CyclicFieldCohomology::map_matrix(bool norm) const {
    const int n = F_.degree();
    FpMatrix M(n, std::vector<std::uint64_t>(n, 0));
    for (int c = 0; c < n; ++c) {
        Cochain e = F_.zero();
        e[c] = 1;
        Cochain img = F_.zero();
        if (norm) {
            for (int k = 0; k < m_; ++k) img = F_.add(img, act(k, e));
        } else {
            img = F_.sub(act(1, e), e);
        }
        for (int r = 0; r < n; ++r) M[r][c] = img[r];
    }
    return M;
}

bool CyclicFieldCohomology::is_cocycle(int s, const Cochain& c) const {
    if (s % 2 == 0) return F_.is_zero(F_.sub(act(1, c), c));
    Cochain img = F_.zero();
    for (int k = 0; k < m_; ++k) img = F_.add(img, act(k, c));
    return F_.is_zero(img);
}

bool CyclicFieldCohomology::is_coboundary(int s, const Cochain& c) const {
    if (s == 0) return F_.is_zero(c);
    PrimeField Fp(F_.p());
    auto M = map_matrix(s % 2 == 0);  // into even degrees via Nm, odd via gamma - 1
    const int before = fp_rank(M, Fp);
    for (std::size_t r = 0; r < M.size(); ++r) M[r].push_back(c[r]);
    return fp_rank(M, Fp) == before;
}

int CyclicFieldCohomology::dim(int s) const {
    require(s >= 0, "dim: negative degree");
    PrimeField Fp(F_.p());
    const int n = F_.degree();
    const int out_rank = fp_rank(map_matrix(s % 2 == 1), Fp);
    const int in_rank = s == 0 ? 0 : fp_rank(map_matrix(s % 2 == 0), Fp);
    return n - out_rank - in_rank;
}

// ---- Ravenel pattern and detection

bool RavenelReport::ok() const {
    for (int d : dims)
        if (d != n) return false;
    return !dims.empty() && h_squared_zero && h_b_nonzero && b_powers_nonzero;
}

json RavenelReport::to_json() const {
    return json{{"p", p},
                {"n", n},
                {"dims", dims},
                {"hSquaredZero", h_squared_zero},
                {"hbNonzero", h_b_nonzero},
                {"bPowersNonzero", b_powers_nonzero},
                {"ok", ok()}};
}

RavenelReport ravenel_pattern_check(int p) {
    require(p >= 3 && is_prime(static_cast<std::uint64_t>(p)), "ravenel_pattern_check: p must be an odd prime");
    RavenelReport rep;
    rep.p = p;
    rep.n = p - 1;
    auto X = CyclicModule::trivial_field(p, static_cast<std::uint64_t>(p), rep.n);
    for (int s = 0; s <= 8; ++s) {
        auto H = periodic_cohomology(X, s);
        // an elementary abelian p-group of rank d; anything else is recorded as -1
        bool elementary = H.betti == 0;
        for (const auto& t : H.torsion) elementary = elementary && t == p;
        rep.dims.push_back(elementary ? static_cast<int>(H.torsion.size()) : -1);
    }
    CyclicFieldCohomology C(p, FiniteField::of_degree(static_cast<std::uint64_t>(p), rep.n));
    const auto one = C.field().one();
    rep.h_squared_zero = !C.nonzero_class(2, C.cup(1, one, 1, one));
    rep.h_b_nonzero = C.nonzero_class(3, C.cup(1, one, 2, one));
    rep.b_powers_nonzero = true;
    auto b = one;
    for (int e = 1; e <= 4; ++e) {
        if (!C.nonzero_class(2 * e, b)) rep.b_powers_nonzero = false;
        b = C.cup(2 * e, b, 2, one);
    }
    return rep;
}

json DetectionSymbol::to_json() const {
    return json{{"name", name}, {"s", s}, {"t", t}, {"uExponent", u_exponent}, {"image", image},
                {"consistent", consistent()}};
}

DetectionSymbol detection_image(int p, int j) {
    require(is_prime(static_cast<std::uint64_t>(p)), "detection_image: p must be prime");
    require(j >= 0 && j <= 12, "detection_image: j out of range");
    const long n = p - 1;
    long pj1 = 1;
    for (int i = 0; i <= j; ++i) pj1 *= p;
    DetectionSymbol d;
    d.name = "b_" + std::to_string(j);
    d.s = 2;
    d.t = 2 * (p - 1) * pj1;
    d.u_exponent = -n * pj1;
    d.image = "u^" + std::to_string(d.u_exponent) + " b";
    return d;
}

DetectionSymbol detection_image_h0(int p) {
    require(is_prime(static_cast<std::uint64_t>(p)), "detection_image: p must be prime");
    DetectionSymbol d;
    d.name = "h_0";
    d.s = 1;
    d.t = 2L * p - 2;
    d.u_exponent = -(p - 1);
    d.image = "u^" + std::to_string(d.u_exponent) + " h";
    return d;
}

json MonomialReport::to_json() const { return json{{"nonzero", nonzero}, {"s", s}, {"uExponent", u_exponent}}; }

MonomialReport monomial_nonvanishing(int p, const std::vector<int>& exponents) {
    require(p >= 3 && is_prime(static_cast<std::uint64_t>(p)), "monomial_nonvanishing: p must be an odd prime");
    int e = 0;
    long weight = 1;  // 1 + sum i_j p^{j+1}
    long pj1 = p;
    for (int i : exponents) {
        require(i >= 0, "monomial_nonvanishing: negative exponent");
        e += i;
        weight += i * pj1;
        pj1 *= p;
    }
    require(e <= 10, "monomial_nonvanishing: exponent sum must be <= 10");
    CyclicFieldCohomology C(p, FiniteField::of_degree(static_cast<std::uint64_t>(p), p - 1));
    const auto one = C.field().one();
    auto c = one;  // h
    int deg = 1;
    for (int k = 0; k < e; ++k) {
        c = C.cup(deg, c, 2, one);
        deg += 2;
    }
    return {C.nonzero_class(deg, c), deg, -static_cast<long>(p - 1) * weight};
}

json KervaireTarget::to_json() const {
    return json{{"j", j},
                {"actionExponent", action_exponent},
                {"group", group.to_json()},
                {"nonzero", nonzero},
                {"inRange", in_range}};
}

KervaireTarget kervaire_target(int j) {
    require(j >= 1 && j <= 62, "kervaire_target: j out of range");
    KervaireTarget k;
    k.j = j;
    // zeta has order 8, so only 2^{j-1} mod 8 matters
    const long shift = j - 1 >= 3 ? 0 : (1L << (j - 1));
    k.action_exponent = ((-shift) % 8 + 8) % 8;
    k.group = periodic_cohomology(CyclicModule::cyclotomic(8, 3, k.action_exponent), 2);
    k.nonzero = !k.group.is_zero();
    k.in_range = j >= 4;
    return k;
}

}  // namespace slicegap
