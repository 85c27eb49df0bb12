#include "slicegap/rings.hpp"

#include "slicegap/error.hpp"

namespace slicegap {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

namespace {

json big_to_json(const mpz_class& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

json rat_to_json(const mpq_class& v) {
    if (v.get_den() == 1) return big_to_json(v.get_num());
    return v.get_str();
}

}  // namespace

std::optional<Integers::elem> Integers::inv(const elem& a) const {
    if (a == 1 || a == -1) return a;
    return std::nullopt;
}

json Integers::to_json(const elem& a) const { return big_to_json(a); }

std::optional<Rationals::elem> Rationals::inv(const elem& a) const {
    if (sgn(a) == 0) return std::nullopt;
    return elem(1) / a;
}

json Rationals::to_json(const elem& a) const { return rat_to_json(a); }

// ---- F_p

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    require(p < (1ULL << 32), "PrimeField: p too large");
    if (!is_prime(p)) throw InvalidInput("PrimeField: " + std::to_string(p) + " is not prime");
}

PrimeField::elem PrimeField::from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    return static_cast<elem>(r);
}

PrimeField::elem PrimeField::pow(elem a, std::uint64_t k) const {
    elem r = one();
    while (k) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

std::optional<PrimeField::elem> PrimeField::inv(elem a) const {
    if (a == 0) return std::nullopt;
    return pow(a, p_ - 2);
}

std::string PrimeField::name() const { return "PrimeField(" + std::to_string(p_) + ")"; }

// ---- F_p[x]/(f)

namespace {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a modulo monic-or-not b (b nonzero, trimmed)
Poly poly_rem(Poly a, const Poly& b, const PrimeField& F) {
    trim(a);
    const auto lead_inv = *F.inv(b.back());
    while (a.size() >= b.size()) {
        auto c = F.mul(a.back(), lead_inv);
        auto shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] = F.sub(a[i + shift], F.mul(c, b[i]));
        trim(a);
    }
    return a;
}

bool irreducible(const Poly& f, const PrimeField& F) {
    const int n = static_cast<int>(f.size()) - 1;
    const auto p = F.p();
    for (int k = 1; k <= n / 2; ++k) {
        // every monic polynomial of degree k
        std::uint64_t count = 1;
        for (int i = 0; i < k; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g(k + 1, 0);
            g[k] = 1;
            auto t = idx;
            for (int i = 0; i < k; ++i) {
                g[i] = t % p;
                t /= p;
            }
            if (poly_rem(f, g, F).empty()) return false;
        }
    }
    return true;
}

}  // namespace

FiniteField::FiniteField(std::uint64_t p, std::vector<std::uint64_t> modulus)
    : base_(p), modulus_(std::move(modulus)) {
    for (auto& c : modulus_) c %= p;
    require(modulus_.size() >= 2, "FiniteField: modulus must have degree >= 1");
    require(modulus_.back() == 1, "FiniteField: modulus must be monic");
    require(modulus_.size() <= 16, "FiniteField: degree too large");
    if (!irreducible(modulus_, base_)) throw InvalidInput("FiniteField: modulus is reducible");
}

FiniteField FiniteField::of_degree(std::uint64_t p, int n) {
    require(n >= 1 && n <= 8, "FiniteField::of_degree: degree out of range");
    PrimeField F(p);
    std::uint64_t count = 1;
    for (int i = 0; i < n; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly f(n + 1, 0);
        f[n] = 1;
        auto t = idx;
        for (int i = 0; i < n; ++i) {
            f[i] = t % p;
            t /= p;
        }
        if (n > 1 && f[0] == 0) continue;
        if (irreducible(f, F)) return FiniteField(p, f);
    }
    throw MathError("FiniteField::of_degree: no irreducible polynomial found");
}

FiniteField::elem FiniteField::one() const {
    elem r = zero();
    r[0] = 1;
    return r;
}

FiniteField::elem FiniteField::gen() const {
    if (degree() == 1) return elem{base_.neg(modulus_[0])};
    elem r = zero();
    r[1] = 1;
    return r;
}

FiniteField::elem FiniteField::from_int(long v) const {
    elem r = zero();
    r[0] = base_.from_int(v);
    return r;
}

FiniteField::elem FiniteField::add(const elem& a, const elem& b) const {
    elem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.add(a[i], b[i]);
    return r;
}

FiniteField::elem FiniteField::sub(const elem& a, const elem& b) const {
    elem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.sub(a[i], b[i]);
    return r;
}

FiniteField::elem FiniteField::neg(const elem& a) const {
    elem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.neg(a[i]);
    return r;
}

FiniteField::elem FiniteField::mul(const elem& a, const elem& b) const {
    const int n = degree();
    Poly prod(2 * n, 0);
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
    }
    auto r = poly_rem(prod, modulus_, base_);
    r.resize(n, 0);
    return r;
}

bool FiniteField::is_zero(const elem& a) const {
    for (auto c : a)
        if (c) return false;
    return true;
}

std::optional<FiniteField::elem> FiniteField::inv(const elem& a) const {
    if (is_zero(a)) return std::nullopt;
    std::uint64_t q = 1;
    for (int i = 0; i < degree(); ++i) q *= p();
    // a^(q-2)
    elem r = one(), b = a;
    for (auto k = q - 2; k; k >>= 1) {
        if (k & 1) r = mul(r, b);
        b = mul(b, b);
    }
    return r;
}

std::string FiniteField::name() const {
    return "FiniteField(" + std::to_string(p()) + "," + std::to_string(degree()) + ")";
}

// ---- Z[z]/(z^d + 1, 2^N)

CyclotomicMod2::CyclotomicMod2(int e, int N) : e_(e), N_(N) {
    require(e >= 1 && e <= 12, "CyclotomicMod2: e out of range");
    require(N >= 1 && N <= 64, "CyclotomicMod2: precision out of range");
    d_ = 1 << (e - 1);
    mask_ = N == 64 ? ~0ULL : ((1ULL << N) - 1);
}

CyclotomicMod2::elem CyclotomicMod2::one() const {
    elem r = zero();
    r[0] = 1;
    return r;
}

CyclotomicMod2::elem CyclotomicMod2::zeta() const {
    if (d_ == 1) return from_int(-1);
    elem r = zero();
    r[1] = 1;
    return r;
}

CyclotomicMod2::elem CyclotomicMod2::zeta_pow(long k) const {
    // z^(2d) = 1
    const long m = 2L * d_;
    long r = ((k % m) + m) % m;
    elem out = zero();
    if (r < d_) {
        out[r] = 1;
    } else {
        out[r - d_] = mask_;  // -1
    }
    return out;
}

CyclotomicMod2::elem CyclotomicMod2::from_int(long v) const {
    elem r = zero();
    r[0] = static_cast<std::uint64_t>(v) & mask_;
    return r;
}

CyclotomicMod2::elem CyclotomicMod2::add(const elem& a, const elem& b) const {
    elem r(d_);
    for (int i = 0; i < d_; ++i) r[i] = (a[i] + b[i]) & mask_;
    return r;
}

CyclotomicMod2::elem CyclotomicMod2::sub(const elem& a, const elem& b) const {
    elem r(d_);
    for (int i = 0; i < d_; ++i) r[i] = (a[i] - b[i]) & mask_;
    return r;
}

CyclotomicMod2::elem CyclotomicMod2::neg(const elem& a) const {
    elem r(d_);
    for (int i = 0; i < d_; ++i) r[i] = (0 - a[i]) & mask_;
    return r;
}

CyclotomicMod2::elem CyclotomicMod2::mul(const elem& a, const elem& b) const {
    // wrapping uint64 arithmetic is exact mod 2^64, hence mod 2^N
    elem r(d_, 0);
    for (int i = 0; i < d_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < d_; ++j) {
            const std::uint64_t t = a[i] * b[j];
            if (i + j < d_)
                r[i + j] += t;
            else
                r[i + j - d_] -= t;
        }
    }
    for (auto& c : r) c &= mask_;
    return r;
}

bool CyclotomicMod2::is_zero(const elem& a) const {
    for (auto c : a)
        if (c) return false;
    return true;
}

std::optional<CyclotomicMod2::elem> CyclotomicMod2::inv(const elem& a) const {
    std::uint64_t residue = 0;
    for (auto c : a) residue += c;
    if ((residue & 1) == 0) return std::nullopt;
    // Newton: x <- x(2 - a x); the error lies in (pi) and squares each step
    elem x = one();
    const elem two = from_int(2);
    for (int it = 0; it < 64; ++it) {
        auto ax = mul(a, x);
        if (ax == one()) return x;
        x = mul(x, sub(two, ax));
    }
    throw MathError("CyclotomicMod2: inverse iteration did not converge");
}

std::string CyclotomicMod2::name() const {
    return "CyclotomicMod2(" + std::to_string(e_) + "," + std::to_string(N_) + ")";
}

// ---- Q[z]/(z^d + 1)

CyclotomicRational::CyclotomicRational(int e) : e_(e) {
    require(e >= 1 && e <= 12, "CyclotomicRational: e out of range");
    d_ = 1 << (e - 1);
}

CyclotomicRational::elem CyclotomicRational::one() const { return from_int(1); }

CyclotomicRational::elem CyclotomicRational::zeta() const {
    if (d_ == 1) return from_int(-1);
    elem r = zero();
    r[1] = 1;
    return r;
}

CyclotomicRational::elem CyclotomicRational::zeta_pow(long k) const {
    const long m = 2L * d_;
    long r = ((k % m) + m) % m;
    elem out = zero();
    if (r < d_)
        out[r] = 1;
    else
        out[r - d_] = -1;
    return out;
}

CyclotomicRational::elem CyclotomicRational::from_int(long v) const {
    elem r = zero();
    r[0] = v;
    return r;
}

CyclotomicRational::elem CyclotomicRational::add(const elem& a, const elem& b) const {
    elem r(d_);
    for (int i = 0; i < d_; ++i) r[i] = a[i] + b[i];
    return r;
}

CyclotomicRational::elem CyclotomicRational::sub(const elem& a, const elem& b) const {
    elem r(d_);
    for (int i = 0; i < d_; ++i) r[i] = a[i] - b[i];
    return r;
}

CyclotomicRational::elem CyclotomicRational::neg(const elem& a) const {
    elem r(d_);
    for (int i = 0; i < d_; ++i) r[i] = -a[i];
    return r;
}

CyclotomicRational::elem CyclotomicRational::mul(const elem& a, const elem& b) const {
    elem r(d_, 0);
    for (int i = 0; i < d_; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (int j = 0; j < d_; ++j) {
            if (sgn(b[j]) == 0) continue;
            if (i + j < d_)
                r[i + j] += a[i] * b[j];
            else
                r[i + j - d_] -= a[i] * b[j];
        }
    }
    return r;
}

bool CyclotomicRational::is_zero(const elem& a) const {
    for (const auto& c : a)
        if (sgn(c) != 0) return false;
    return true;
}

std::optional<CyclotomicRational::elem> CyclotomicRational::inv(const elem& a) const {
    if (is_zero(a)) return std::nullopt;
    // solve M x = e_0 where M is multiplication by a
    std::vector<std::vector<mpq_class>> M(d_, std::vector<mpq_class>(d_ + 1, 0));
    for (int j = 0; j < d_; ++j) {
        elem basis = zero();
        basis[j] = 1;
        auto col = mul(a, basis);
        for (int i = 0; i < d_; ++i) M[i][j] = col[i];
    }
    M[0][d_] = 1;
    for (int c = 0; c < d_; ++c) {
        int piv = c;
        while (piv < d_ && sgn(M[piv][c]) == 0) ++piv;
        if (piv == d_) return std::nullopt;
        std::swap(M[c], M[piv]);
        for (int r = 0; r < d_; ++r) {
            if (r == c || sgn(M[r][c]) == 0) continue;
            mpq_class f = M[r][c] / M[c][c];
            for (int k = c; k <= d_; ++k) M[r][k] -= f * M[c][k];
        }
    }
    elem x(d_);
    for (int i = 0; i < d_; ++i) x[i] = M[i][d_] / M[i][i];
    return x;
}

json CyclotomicRational::to_json(const elem& a) const {
    json out = json::array();
    for (const auto& c : a) out.push_back(rat_to_json(c));
    return out;
}

std::string CyclotomicRational::name() const { return "CyclotomicRational(" + std::to_string(e_) + ")"; }

bool CyclotomicRational::is_2_integral(const elem& a) const {
    for (const auto& c : a)
        if (mpz_even_p(c.get_den().get_mpz_t())) return false;
    return true;
}

std::optional<CyclotomicMod2::elem> CyclotomicRational::reduce(const elem& a,
                                                                const CyclotomicMod2& target) const {
    require(target.degree() == d_, "reduce: degree mismatch");
    if (!is_2_integral(a)) return std::nullopt;
    CyclotomicMod2::elem r(d_);
    mpz_class modulus = 1;
    modulus <<= target.precision();
    for (int i = 0; i < d_; ++i) {
        mpz_class den_inv;
        mpz_invert(den_inv.get_mpz_t(), a[i].get_den().get_mpz_t(), modulus.get_mpz_t());
        mpz_class v = a[i].get_num() * den_inv;
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
        r[i] = mpz_get_ui(v.get_mpz_t());
    }
    return r;
}

}  // namespace slicegap
