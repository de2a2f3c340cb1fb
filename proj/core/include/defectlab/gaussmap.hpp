#pragma once

#include <string>
#include <vector>

#include "defectlab/bounds.hpp"
#include "defectlab/mpoly.hpp"
#include "defectlab/nevanlinna.hpp"
#include "defectlab/position.hpp"

namespace defectlab {

// Polynomially parametrized submanifold patch f : C^m -> C^n.
struct PolyImmersion {
    int m = 0;                    // source dimension
    int n = 0;                    // target dimension
    std::vector<MPoly> components; // f_1..f_n in m variables

    void validate() const;
};

// The Gauss map in Pluecker coordinates: all m x m minors of the Jacobian,
// divided by their common polynomial factor (reduced representation).
struct GaussRepresentation {
    int m = 0, n = 0;
    int N_amb = 0;                               // binom(n, m) - 1
    std::vector<std::vector<int>> column_subsets; // lexicographic order
    std::vector<MPoly> pluecker;                 // reduced minors, same order
    MPoly removed_factor{1};                     // the gcd divided out
    bool degenerate = false;                     // all reduced minors constant
};

// Errors: every minor identically zero -> degeneracy ("not an immersion").
GaussRepresentation gauss_map(const PolyImmersion& f);

struct GaussDefectRow {
    std::string label;
    double defect = 0.0; // truncated defect at level u - 1
};

struct GaussPipelineReport {
    GaussRepresentation gauss;
    ParameterSet params;  // ambient dimension N_amb playing the n role
    std::vector<GaussDefectRow> defects;
    double defect_sum = 0.0;
    Rational rhs;         // p(N+1) + eps + rho u(u-1)/d
    bool holds = false;
    bool position_checked = false; // subgeneral position verified (q >= k+1)
    Int display_bound;             // 3^{N+2} (d p (N+1)^2 I)^N, ambient N
    bool display_bound_holds = false;
    std::string note;
};

// Theorem 6.1 pipeline for one-variable sources: defects of the Gauss map
// against a hypersurface family in P^{binom(n,1)-1} versus the explicit
// right-hand side.
GaussPipelineReport gauss_defect_pipeline(const PolyImmersion& f, const HypersurfaceFamily& family,
                                          const Rational& eps, const Rational& rho,
                                          const RGrid& grid);

} // namespace defectlab
