#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slicegap/matrix.hpp"

namespace slicegap {

// Ind_K^G S^{m rho_K}, smashed with S^{-1} when irregular; K = C_k in G = C_g.
struct SliceCell {
    int g = 1;
    int k = 1;
    long m = 0;
    bool regular = true;

    SliceCell() = default;
    SliceCell(int group, int sub, long mult, bool reg = true);

    long dimension() const { return m * k - (regular ? 0 : 1); }
    bool isotropic() const { return k > 1; }
    long underlying_count() const { return g / k; }
    auto operator<=>(const SliceCell&) const = default;
    json to_json() const;
};

struct Wedge {
    int g = 1;
    std::map<SliceCell, long> cells;

    void add(const SliceCell& c, long count = 1);
    long underlying_count() const;
    long size() const;
    bool operator==(const Wedge&) const = default;
    // sorted list of {k, m, regular, count}
    json to_json() const;
};

// the window of CW dimensions for an n-dimensional slice cell in G
std::pair<long, long> cw_range(long n, int g);
std::pair<long, long> cw_range(const SliceCell& c);
// CW dimensions of the cells of the induced representation sphere (the
// basepoint excluded unless m = 0)
std::vector<long> cell_dimensions(const SliceCell& c);

// Res_J of a slice cell, via the double coset formula
Wedge restrict_cell(const SliceCell& c, int j);
Wedge smash(const SliceCell& a, const SliceCell& b);
// smash computed cell by cell through coset enumeration and rep_res
Wedge smash_brute(const SliceCell& a, const SliceCell& b);

// N_H^G of the wedge of S^{i rho_H} over the given exponents, cut at dmax
Wedge norm_wedge(int g, int h, const std::vector<long>& exponents, long dmax);
// the same by union of all translates of every function, stabilizers by
// checking every group element
Wedge norm_wedge_brute(int g, int h, const std::vector<long>& exponents, long dmax);

// cells of N_2^{2n}(smash_j wedge_i S^{ij rho_2}) by dimension, up to dmax
std::map<long, Wedge> refinement_census(int e, long dmax);
// degree-2d coefficient of prod_j (1 - x^j)^{-n}, d <= dmax/2
std::vector<long> hmu_series(int n, long dmax);

bool slice_ss_support(int g, long s, long t);

Wedge rho_shift(const Wedge& W, long m);

struct GapReport {
    bool ok = true;
    long cells = 0;           // distinct (cell type, twist) pairs examined
    long computed = 0;        // pairs whose Bredon groups were computed
    long outside_range = 0;   // pairs whose cells miss the degree window
    std::optional<std::string> failure;
    json to_json() const;
};

// twists -k l rho_G of the census cells, k >= 0, H_j for -3 <= j <= -1
GapReport gap_report(int e, long l, long tmax);
bool gap_check(int e, long l, long tmax);

}  // namespace slicegap
