#pragma once

#include <string>
#include <vector>

#include "slicegap/matrix.hpp"
#include "slicegap/rings.hpp"

namespace slicegap {

// C_m acting on M = Z^r / im(relations) through `gamma` (on generators).
struct CyclicModule {
    int m = 1;
    IntMatrix gamma;
    IntMatrix relations;  // r x s
    int t = 0;            // internal degree, bookkeeping only

    int rank() const { return gamma.rows(); }
    IntMatrix norm() const;  // sum_{k<m} gamma^k
    // gamma^m = 1 on M and gamma preserves the relations; throws MathError
    void validate() const;

    static CyclicModule trivial_Z(int m);
    static CyclicModule sign_Z(int m);  // gamma = -1, m even
    // F_q = F_p^n with trivial action
    static CyclicModule trivial_field(int m, std::uint64_t p, int n);
    // A = Z[z]/(Phi_{2^e}) with gamma acting as multiplication by zeta^k
    static CyclicModule cyclotomic(int m, int e, long k);
    // Z/N with trivial action
    static CyclicModule trivial_cyclic(int m, long N);
};

// H^0 = ker(1 - gamma); H^{2i} = ker(1 - gamma)/im Nm; H^{2i-1} = ker Nm / im(1 - gamma)
AbelianGroup periodic_cohomology(const CyclicModule& X, int s);

// Cochain-level cup products on the periodic resolution with coefficients in
// a finite field F_q (gamma acting by the Frobenius power x -> x^{p^frob}).
// A cochain in degree s is its value on the generator e_s.
class CyclicFieldCohomology {
public:
    using Cochain = FiniteField::elem;

    CyclicFieldCohomology(int m, FiniteField field, int frobenius = 0);

    int order() const { return m_; }
    const FiniteField& field() const { return F_; }
    Cochain act(long g, const Cochain& x) const;  // gamma^g x

    Cochain cup(int p, const Cochain& a, int q, const Cochain& b) const;
    bool is_cocycle(int s, const Cochain& c) const;
    bool is_coboundary(int s, const Cochain& c) const;
    bool nonzero_class(int s, const Cochain& c) const { return is_cocycle(s, c) && !is_coboundary(s, c); }
    // F_p-dimension of H^s, by direct linear algebra on cochains
    int dim(int s) const;

private:
    // F_p-matrix (n x n, columns = images of the F_p-basis) of x -> sum_k coeffs gamma^k x
    std::vector<std::vector<std::uint64_t>> map_matrix(bool norm) const;

    int m_;
    FiniteField F_;
    int frob_;
};

struct RavenelReport {
    int p = 0, n = 0;
    std::vector<int> dims;  // s = 0..8
    bool h_squared_zero = false;
    bool h_b_nonzero = false;
    bool b_powers_nonzero = false;
    bool ok() const;
    json to_json() const;
};

// H^*(C_p; F_{p^n} trivial), n = p - 1: dims n for s <= 8, h^2 = 0, h b != 0, b^e != 0
RavenelReport ravenel_pattern_check(int p);

struct DetectionSymbol {
    std::string name;
    int s = 0;
    long t = 0;
    long u_exponent = 0;
    std::string image;  // e.g. "u^-20 b"
    // |u| = -2: the u-power carries the whole internal degree t
    bool consistent() const { return -2 * u_exponent == t; }
    json to_json() const;
};

// b_j -> u^{-n p^{j+1}} b in bidegree (2, 2(p-1)p^{j+1}), n = p - 1
DetectionSymbol detection_image(int p, int j);
// h_0 -> u^{-n} h in bidegree (1, 2p - 2)
DetectionSymbol detection_image_h0(int p);

struct MonomialReport {
    bool nonzero = false;
    int s = 0;           // 1 + 2e
    long u_exponent = 0; // -n(1 + sum i_j p^{j+1})
    json to_json() const;
};

// image of h_0 b_0^{i_0} ... b_k^{i_k}, nonzero iff h b^e != 0 in H^{1+2e}(C_p; F_q)
MonomialReport monomial_nonvanishing(int p, const std::vector<int>& exponents);

struct KervaireTarget {
    int j = 0;
    long action_exponent = 0;  // gamma acts by zeta^{action_exponent}
    AbelianGroup group;
    bool nonzero = false;
    bool in_range = false;  // j >= 4
    json to_json() const;
};

// H^2(C_8; A u^{-2^{j-1}}), A = Z[z]/(z^4 + 1), gamma u = zeta u
KervaireTarget kervaire_target(int j);

}  // namespace slicegap
