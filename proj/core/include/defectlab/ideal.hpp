#pragma once

#include <vector>

#include "defectlab/hompoly.hpp"
#include "defectlab/matrix.hpp"

namespace defectlab {

// monomial_basis(n, D): the fixed coordinates of the graded piece V_D.
inline MonomialOrder monomial_basis(int n, int D) { return MonomialOrder(n, D); }

struct GradedPiece {
    Subspace subspace;   // span{ x^gamma * g } inside V_D
    std::size_t hilbert; // dim V_D - dim subspace
};

// Degree-D piece of the ideal generated by `gens` (all sharing the same n).
GradedPiece ideal_graded_piece(const std::vector<HomPoly>& gens, int D);

struct LocusResult {
    bool empty = false;
    int dimension = -1;              // projective dimension when nonempty
    int certificate_degree = -1;     // degree at which hilbert hit 0 (emptiness)
    std::vector<std::size_t> window; // hilbert values used for dimension inference
};

// Certify emptiness or infer the projective dimension of the common zero
// locus of `gens` by a Macaulay sweep up to D* = (#gens)(maxdeg-1)+1, capped.
LocusResult projective_locus(const std::vector<HomPoly>& gens, int cap = 24);

} // namespace defectlab
