#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace slicegap {

using json = nlohmann::json;

// Dense storage; serialized sparsely as {"rows","cols","entries":{"r,c":v}}.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpz_class& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const mpz_class& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix transpose() const;
    IntMatrix scaled(long k) const;
    bool operator==(const IntMatrix& o) const = default;
    bool is_zero() const;

    // Bareiss determinant (square only)
    mpz_class det() const;
    // rank over Q
    int rank() const;

    json to_json() const;
    static IntMatrix from_json(const json& j);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<mpz_class> a_;
};

struct SNF {
    IntMatrix U, D, V;  // U * M * V = D
    // nonzero diagonal entries, d1 | d2 | ...
    std::vector<mpz_class> invariant_factors() const;
    int rank() const;
};

SNF snf(const IntMatrix& M);
// Diagonal only; skips the transform bookkeeping.
std::vector<mpz_class> invariant_factors(const IntMatrix& M);

// columns form a basis of {x : A x = 0}
IntMatrix integer_kernel(const IntMatrix& A);
// columns form a basis of the lattice spanned by the columns of P
IntMatrix lattice_basis(const IntMatrix& P);
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
// every column of V lies in the column lattice of R
bool in_column_lattice(const IntMatrix& R, const IntMatrix& V);

// finitely generated abelian group Z^betti + sum Z/t_i, t ascending
struct AbelianGroup {
    int betti = 0;
    std::vector<mpz_class> torsion;

    bool is_zero() const { return betti == 0 && torsion.empty(); }
    bool operator==(const AbelianGroup&) const = default;
    json to_json() const;
    std::string str() const;
};

// Degree k -> rank; diffs[k] : C_k -> C_{k-1} as a ranks(k-1) x ranks(k) matrix.
class ChainComplexZ {
public:
    ChainComplexZ() = default;
    void set_rank(int k, int r) { ranks_[k] = r; }
    void set_diff(int k, IntMatrix d) { diffs_[k] = std::move(d); }
    int rank(int k) const;
    IntMatrix diff(int k) const;  // zero matrix of the right shape if unset
    const std::map<int, int>& ranks() const { return ranks_; }

    // exact dd = 0 plus shape check; throws MathError on failure
    void validate() const;
    bool is_valid() const;

    json to_json() const;

private:
    std::map<int, int> ranks_;
    std::map<int, IntMatrix> diffs_;
};

AbelianGroup homology(const ChainComplexZ& C, int k);

// Integer chain complex with sparse differentials; entry (target, source).
class SparseComplexZ {
public:
    using Column = std::map<int, mpz_class>;  // target -> value

    void set_rank(int k, int r) { ranks_[k] = r; }
    void add(int k, int target, int source, const mpz_class& v);
    int rank(int k) const;
    const std::map<int, int>& ranks() const { return ranks_; }
    const std::map<int, std::map<int, Column>>& diffs() const { return cols_; }

    // exact sparse dd = 0; throws MathError
    void validate() const;
    // cancels cell pairs joined by a +-1 entry; chain homotopy equivalent
    SparseComplexZ reduced() const;
    ChainComplexZ dense() const;

private:
    std::map<int, int> ranks_;
    std::map<int, std::map<int, Column>> cols_;  // degree -> source -> column
};

// all homology groups, zero groups included, for degrees carrying cells
std::map<int, AbelianGroup> homology_all(const SparseComplexZ& C);


// ker(f)/im(g) for endomorphisms of the presented module M = Z^r / im(R).
// f and g are r x r (or r x r'), R is r x s; requires f g = 0 on M.
AbelianGroup subquotient(const IntMatrix& f, const IntMatrix& g, const IntMatrix& R);
// H^k of Hom(C, Z)
AbelianGroup cohomology(const ChainComplexZ& C, int k);

}  // namespace slicegap
