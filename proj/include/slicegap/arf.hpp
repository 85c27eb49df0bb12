#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "json.hpp"

namespace slicegap {

using json = nlohmann::json;
using BitVec = std::uint64_t;  // bit i = coordinate i

// Quadratic refinement over F_2 of an alternating form on F_2^{2g}:
// q is given on the basis, B as row bitmasks.
class QuadraticSpace {
public:
    QuadraticSpace(int g, std::vector<int> q_basis, std::vector<BitVec> B_rows);

    static QuadraticSpace hyperbolic();   // q(a) = q(b) = 0
    static QuadraticSpace arf_one();      // q(a) = q(b) = 1
    static QuadraticSpace from_json(const json& j);
    json to_json() const;

    int g() const { return g_; }
    int dim() const { return 2 * g_; }
    int q_basis(int i) const { return q_[i]; }
    BitVec row(int i) const { return B_[i]; }
    int pairing(BitVec x, BitVec y) const;
    bool nondegenerate() const;

    // q(x) by expanding over the support of x
    int eval(BitVec x) const;
    int eval(const std::vector<int>& bits) const;

    // same form in the basis f_i = basis[i] (basis must be invertible)
    QuadraticSpace change_basis(const std::vector<BitVec>& basis) const;

    bool operator==(const QuadraticSpace&) const = default;

private:
    int g_;
    std::vector<int> q_;
    std::vector<BitVec> B_;
};

QuadraticSpace direct_sum(const QuadraticSpace& a, const QuadraticSpace& b);

// counts of q = 0 and q = 1 over all 2^{2g} vectors
std::array<std::uint64_t, 2> value_histogram(const QuadraticSpace& Q);

int arf(const QuadraticSpace& Q);
int witt_class(const QuadraticSpace& Q);
// sum_x (-1)^{q(x)}
long gauss_sum(const QuadraticSpace& Q);

// CLI payload: {arf, wittClass, valueHistogram}
json arf_report(const QuadraticSpace& Q);

// every nondegenerate Q of genus g (g <= 3), all refinements of all forms
void for_each_nondegenerate(int g, const std::function<void(const QuadraticSpace&)>& fn);

// rank over F_2 of a list of bit vectors
int f2_rank(std::vector<BitVec> rows);

}  // namespace slicegap
