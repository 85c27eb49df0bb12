#pragma once

#include <map>
#include <string>
#include <vector>

#include "slicegap/matrix.hpp"

namespace slicegap {

// C_m with m a power of two; the subgroup C_d is named by its order d.
bool is_power_of_two(long m);
void require_group(int m);
void require_subgroup(int m, int d);
std::vector<int> subgroups(int m);  // ascending divisors of m

// Multiset of orbits G/C_d, keyed by d.
struct GSet {
    std::map<int, long> orbits;

    static GSet orbit(int d, long count = 1);
    long cardinality(int m) const;
    GSet operator+(const GSet& o) const;
    bool operator==(const GSet&) const = default;
    json to_json() const;
    static GSet from_json(const json& j);
};

// A C_m-set given by the permutation of its points induced by the generator.
struct ExplicitGSet {
    int m = 1;
    std::vector<int> gen;

    static ExplicitGSet from(int m, const GSet& X);
    int size() const { return static_cast<int>(gen.size()); }
    int act(int point, long g) const;
    GSet orbits() const;
    ExplicitGSet restrict_to(int k) const;
    // G x_H X for X over the subgroup C_h, into C_m
    static ExplicitGSet induce(const ExplicitGSet& X, int m);
    ExplicitGSet product(const ExplicitGSet& o) const;
    long fixed_points(int a) const;
};

// Res_K Ind_H^G X for X over C_h; closed form.
GSet double_coset_restrict(int m, int h, int k, const GSet& X);
// Same by coset enumeration.
GSet double_coset_restrict_brute(int m, int h, int k, const GSet& X);

// Rows C_a, columns C_b, divisors ascending: |(G/C_b)^{C_a}|.
IntMatrix table_of_marks(int m);
long mark(int m, int a, const GSet& X);
GSet burnside_product(int m, const GSet& X, const GSet& Y);

// Number of double cosets K g H inside C_l, counted over group elements.
long double_coset_count(int l, int h, int k);

enum class MackeyKind { ConstantZ, Burnside };

// Level data of a Mackey functor for C_m. Burnside levels A(C_d) use the
// basis of orbits C_d/C_e, e | d ascending.
struct MackeyCoefficient {
    MackeyKind kind = MackeyKind::ConstantZ;
    int m = 1;

    MackeyCoefficient(MackeyKind k, int order);

    int level_rank(int d) const;
    std::vector<int> basis(int d) const;
    IntMatrix res(int d, int dp) const;  // level(dp) -> level(d)
    IntMatrix tr(int d, int dp) const;   // level(d) -> level(dp)
    IntMatrix conj(int d, long g) const; // abelian group: identity
    std::string name() const;
};

IntMatrix mackey_transfer(const MackeyCoefficient& M, int d, int dp);
// res^L_K tr^L_H against the double-coset sum, for C_h, C_k inside C_l
bool mackey_axiom_holds(const MackeyCoefficient& M, int h, int k, int l);

// a eps + b sigma + sum c_k lambda(k) over C_m, m = 2n. Negative
// multiplicities make it virtual. For m = 1 only eps exists.
struct RealRep {
    int m = 1;
    long a = 0, b = 0;
    std::vector<long> c;  // c[k-1] for 1 <= k <= n-1

    RealRep() = default;
    explicit RealRep(int order);
    static RealRep trivial(int m, long a = 1);
    static RealRep sigma(int m);
    static RealRep lambda(int m, int k);
    static RealRep regular(int m);

    int n() const { return m / 2; }
    long dim() const;
    bool genuine() const;
    bool is_zero() const;
    RealRep operator+(const RealRep& o) const;
    RealRep operator-(const RealRep& o) const;
    RealRep scaled(long k) const;
    bool operator==(const RealRep&) const = default;

    // complex character multiplicities indexed by j in Z/m (gamma -> zeta_m^j)
    std::vector<long> characters() const;
    static RealRep from_characters(int m, const std::vector<long>& mult);

    json to_json() const;
    static RealRep from_json(int m, const json& j);
    std::string str() const;
};

// order of the kernel of gamma acting on lambda(k)
int lambda_kernel(int m, int k);

// gamma given as an integer orthogonal matrix with gamma^m = 1
RealRep rep_decompose(int m, const IntMatrix& gamma);
long rep_fixed(const RealRep& V, int h);
// dim V^H as the average of the character over H
long rep_fixed_by_character(const RealRep& V, int h);
RealRep rep_ind(const RealRep& W, int m);
RealRep rep_res(const RealRep& V, int h);
bool is_orientable(const RealRep& V);
// every genuine V over C_m with dim V <= dmax
std::vector<RealRep> genuine_reps(int m, long dmax);
// permutation matrix of gamma on C_m/C_d summed over the orbits of X
IntMatrix permutation_rep(int m, const GSet& X);

}  // namespace slicegap
