#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slicegap/equivariant.hpp"

namespace slicegap {

// a virtual representation of C_{2n}, read as an RO(G)-grading
using RODegree = RealRep;

// m when d = m rho_G
std::optional<long> rho_multiple(const RODegree& d);
// "19*rho_8", "256", "2-2*sigma", "-sigma+lambda(1)"
std::string degree_str(const RODegree& d);

RODegree norm_degree(int g, const RODegree& d);
RODegree res_degree(int h, const RODegree& d);
// Phi^H S^{m rho_G} = S^{m [G:H]}
long fixed_degree(int h, const RODegree& d);

// a class in the slice spectral sequence: stem degree t - s and filtration s
struct NamedClass {
    std::string symbol;
    int group = 1;
    RODegree degree;
    long s = 0;

    NamedClass operator*(const NamedClass& o) const;
    NamedClass pow(long k) const;
    json to_json() const;
};

NamedClass class_u(const RODegree& V);
NamedClass class_a(const RODegree& V);
// a_V is null when V^G != 0
bool a_forced_null(const RODegree& V);
NamedClass class_rbar(int g, long j);  // over C_2, in Res_2^g
NamedClass class_g(int g, long j);
NamedClass class_delta(int g, int k);
NamedClass class_b(int g);
NamedClass class_f(int g, long j);
NamedClass class_v(int k);
// N_H^G of a filtration-zero class over H
NamedClass norm_class(int g, const NamedClass& c);

bool orientation_identity_check(const RODegree& U, const RODegree& V, int h, const RODegree& W);
bool differential_consistency(int e, int k);

// D as a product of norms N_h^8 Delta_k^{(h)}
struct NormFactor {
    int h;
    int k;
};
std::vector<NormFactor> d_factors();
NamedClass build_D();
NamedClass build_omega(int k);

// for each divisor 2m of the group, the k of a factor Delta_k^{(2m)} dividing
// Res_{2m} D; nullopt for a divisor with none
struct DivisibilityCertificate {
    int g = 8;
    std::vector<std::pair<int, std::optional<int>>> entries;
    bool complete() const;
    json to_json() const;
};
DivisibilityCertificate fixed_point_certificate(int g, const std::vector<NormFactor>& D);

// minimal k with k1 <= k, k2 <= k + 2, k3 <= k + 3
int periodicity_requirements(int k1, int k2, int k3);
// the same read off a product D over C_8; nullopt when a divisor is uncovered
std::optional<int> periodicity_from(const std::vector<NormFactor>& D);

bool skeleton_deduction(long j);

struct AdamsElement {
    std::string name;
    long s;
    long t;
    bool e3_survivor = false;
};
struct AdamsFixtures {
    std::vector<AdamsElement> one_line;
    std::vector<AdamsElement> two_line;
    std::vector<long> hopf_dims;
    json to_json() const;
};
AdamsFixtures adams_fixtures(long tmax);
// d_2 h_j = h_0 h_{j-1}^2 for j > 3
std::optional<std::string> adams_d2(long j);

}  // namespace slicegap
