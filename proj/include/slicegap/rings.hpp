#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace slicegap {

using json = nlohmann::json;

bool is_prime(std::uint64_t n);

// Every ring below is a small value type: `elem` carries no context, the
// ring object supplies the operations. TruncSeries<R> is written against
// this surface.

struct Integers {
    using elem = mpz_class;
    elem zero() const { return 0; }
    elem one() const { return 1; }
    elem from_int(long v) const { return v; }
    elem add(const elem& a, const elem& b) const { return a + b; }
    elem sub(const elem& a, const elem& b) const { return a - b; }
    elem mul(const elem& a, const elem& b) const { return a * b; }
    elem neg(const elem& a) const { return -a; }
    bool is_zero(const elem& a) const { return sgn(a) == 0; }
    bool eq(const elem& a, const elem& b) const { return a == b; }
    std::optional<elem> inv(const elem& a) const;
    long characteristic() const { return 0; }
    json to_json(const elem& a) const;
    std::string name() const { return "Integers"; }
    bool operator==(const Integers&) const = default;
};

struct Rationals {
    using elem = mpq_class;
    elem zero() const { return 0; }
    elem one() const { return 1; }
    elem from_int(long v) const { return v; }
    elem add(const elem& a, const elem& b) const { return a + b; }
    elem sub(const elem& a, const elem& b) const { return a - b; }
    elem mul(const elem& a, const elem& b) const { return a * b; }
    elem neg(const elem& a) const { return -a; }
    bool is_zero(const elem& a) const { return sgn(a) == 0; }
    bool eq(const elem& a, const elem& b) const { return a == b; }
    std::optional<elem> inv(const elem& a) const;
    long characteristic() const { return 0; }
    json to_json(const elem& a) const;
    std::string name() const { return "Rationals"; }
    bool operator==(const Rationals&) const = default;
};

class PrimeField {
public:
    using elem = std::uint64_t;
    explicit PrimeField(std::uint64_t p);
    std::uint64_t p() const { return p_; }
    elem zero() const { return 0; }
    elem one() const { return 1 % p_; }
    elem from_int(long v) const;
    elem add(elem a, elem b) const { return (a + b) % p_; }
    elem sub(elem a, elem b) const { return (a + p_ - b) % p_; }
    elem mul(elem a, elem b) const {
        return static_cast<elem>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    elem neg(elem a) const { return a == 0 ? 0 : p_ - a; }
    bool is_zero(elem a) const { return a == 0; }
    bool eq(elem a, elem b) const { return a == b; }
    std::optional<elem> inv(elem a) const;
    elem pow(elem a, std::uint64_t k) const;
    long characteristic() const { return static_cast<long>(p_); }
    json to_json(elem a) const { return a; }
    std::string name() const;
    bool operator==(const PrimeField&) const = default;

private:
    std::uint64_t p_;
};

// F_p[x]/(modulus), modulus monic and irreducible. Elements are coefficient
// vectors of length deg(modulus), low degree first.
class FiniteField {
public:
    using elem = std::vector<std::uint64_t>;
    FiniteField(std::uint64_t p, std::vector<std::uint64_t> modulus);
    // F_{p^n} on the first monic irreducible of degree n (coefficients read
    // as base-p digits, constant term lowest)
    static FiniteField of_degree(std::uint64_t p, int n);
    std::uint64_t p() const { return base_.p(); }
    int degree() const { return static_cast<int>(modulus_.size()) - 1; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }
    elem zero() const { return elem(degree(), 0); }
    elem one() const;
    elem gen() const;  // the class of x
    elem from_int(long v) const;
    elem add(const elem& a, const elem& b) const;
    elem sub(const elem& a, const elem& b) const;
    elem mul(const elem& a, const elem& b) const;
    elem neg(const elem& a) const;
    bool is_zero(const elem& a) const;
    bool eq(const elem& a, const elem& b) const { return a == b; }
    std::optional<elem> inv(const elem& a) const;
    long characteristic() const { return static_cast<long>(p()); }
    json to_json(const elem& a) const { return a; }
    std::string name() const;
    bool operator==(const FiniteField&) const = default;

private:
    PrimeField base_;
    std::vector<std::uint64_t> modulus_;
};

// Z[z]/(Phi_{2^e}(z), 2^N). Phi_{2^e} = z^d + 1 with d = 2^{e-1}, which
// also covers e = 1 (z + 1), so multiplication is always negacyclic.
class CyclotomicMod2 {
public:
    using elem = std::vector<std::uint64_t>;
    CyclotomicMod2(int e, int N = 16);
    int e() const { return e_; }
    int precision() const { return N_; }
    int degree() const { return d_; }
    std::uint64_t mask() const { return mask_; }
    elem zero() const { return elem(d_, 0); }
    elem one() const;
    elem zeta() const;
    elem zeta_pow(long k) const;
    elem from_int(long v) const;
    elem add(const elem& a, const elem& b) const;
    elem sub(const elem& a, const elem& b) const;
    elem mul(const elem& a, const elem& b) const;
    elem neg(const elem& a) const;
    bool is_zero(const elem& a) const;
    bool eq(const elem& a, const elem& b) const { return a == b; }
    // Units are exactly the elements with odd residue mod (2, z - 1).
    std::optional<elem> inv(const elem& a) const;
    long characteristic() const { return N_ >= 62 ? 0 : (1L << N_); }
    json to_json(const elem& a) const { return a; }
    std::string name() const;
    bool operator==(const CyclotomicMod2&) const = default;

private:
    int e_, N_, d_;
    std::uint64_t mask_;
};

// Q(zeta_{2^e}) = Q[z]/(Phi_{2^e}); exact scratch ring for the Hazewinkel
// computations, reduced into CyclotomicMod2 once integrality is known.
class CyclotomicRational {
public:
    using elem = std::vector<mpq_class>;
    explicit CyclotomicRational(int e);
    int e() const { return e_; }
    int degree() const { return d_; }
    elem zero() const { return elem(d_, 0); }
    elem one() const;
    elem zeta() const;
    elem zeta_pow(long k) const;
    elem from_int(long v) const;
    elem add(const elem& a, const elem& b) const;
    elem sub(const elem& a, const elem& b) const;
    elem mul(const elem& a, const elem& b) const;
    elem neg(const elem& a) const;
    bool is_zero(const elem& a) const;
    bool eq(const elem& a, const elem& b) const { return a == b; }
    std::optional<elem> inv(const elem& a) const;
    long characteristic() const { return 0; }
    json to_json(const elem& a) const;
    std::string name() const;
    bool operator==(const CyclotomicRational&) const = default;

    // 2-adic integrality of every coordinate (odd denominators only).
    bool is_2_integral(const elem& a) const;
    // Image in Z[z]/(Phi, 2^N); nullopt if some denominator is even.
    std::optional<CyclotomicMod2::elem> reduce(const elem& a, const CyclotomicMod2& target) const;

private:
    int e_, d_;
};

}  // namespace slicegap
