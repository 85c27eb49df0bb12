#pragma once

#include <map>
#include <utility>
#include <vector>

#include "slicegap/equivariant.hpp"
#include "slicegap/matrix.hpp"

namespace slicegap {

// Coefficients on the cosets gamma^i C_d, 0 <= i < m/d.
using GroupRingElem = std::vector<long>;

// Reduced chain complex of permutation modules Z[G/C_d]. The entry at
// (target, source) in diff[k] is the image of the source's base cell.
struct EqCellComplex {
    int order = 1;
    std::map<int, std::vector<int>> cells;  // degree -> isotropy of each orbit
    std::map<int, std::map<std::pair<int, int>, GroupRingElem>> diff;

    int orbit_count(int k) const;
    int isotropy(int k, int i) const { return cells.at(k)[i]; }
    long underlying_rank(int k) const;
    int min_degree() const;
    int max_degree() const;
    const GroupRingElem* entry(int k, int target, int source) const;

    // entries invariant under the source isotropy, dd = 0; throws MathError
    void validate() const;
    bool is_valid() const;
    json to_json() const;
};

// image of the base cell under Y -> A -> X, with Y -> A given by alpha and
// A -> X by beta (beta lives over the isotropy of X, alpha over that of A)
GroupRingElem compose(int m, const GroupRingElem& alpha, const GroupRingElem& beta);

struct CellCensus {
    int order = 1;
    std::map<int, std::pair<int, int>> dims;  // degree -> (isotropy, orbit count)
    json to_json() const;
};

CellCensus cell_census(const RealRep& V);

EqCellComplex sphere_zero(int m);
EqCellComplex atomic_complex(int m, char kind, int k = 0);  // 'e', 's', 'l'
EqCellComplex tensor(const EqCellComplex& A, const EqCellComplex& B);
EqCellComplex dual(const EqCellComplex& C);
EqCellComplex shifted(const EqCellComplex& C, int s);
// cancels orbit pairs joined by an entry +-gamma^i; an equivariant chain
// homotopy equivalence
EqCellComplex reduce(const EqCellComplex& C);
EqCellComplex induce(const EqCellComplex& C, int m);

// Tensor of atomic complexes (exact duals for negative summands), reduced
// after every factor, then shifted.
EqCellComplex chain_model(const RealRep& V, int shift = 0);

ChainComplexZ underlying(const EqCellComplex& C);
// H-fixed cells and the entries between them
ChainComplexZ fixed_subcomplex(const EqCellComplex& C, int h);
ChainComplexZ orbit_complex(const EqCellComplex& C);

enum class Variance { Homology, Cohomology };

// Bredon chains (homology) or cochains placed in degree -k (cohomology)
SparseComplexZ bredon_complex(const EqCellComplex& C, const MackeyCoefficient& M, Variance v);
AbelianGroup bredon(const EqCellComplex& C, const MackeyCoefficient& M, Variance v, int k);
// nonzero groups only
std::map<int, AbelianGroup> bredon_all(const EqCellComplex& C, const MackeyCoefficient& M, Variance v);

// Augmented simplicial chains of the join model of S(V), shifted once.
EqCellComplex simplicial_model(const RealRep& V);
std::map<int, AbelianGroup> simplicial_oracle(const RealRep& V, const MackeyCoefficient& M, Variance v);

// Ind_K^G S^{m rho_K} for G = C_g, K = C_k
EqCellComplex slice_cell_complex(int g, int k, long m, bool regular = true);
bool cell_lemma_check(int g, int k, long m);

}  // namespace slicegap
