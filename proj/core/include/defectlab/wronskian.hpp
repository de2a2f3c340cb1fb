#pragma once

#include <complex>
#include <vector>

#include "defectlab/mpoly.hpp"
#include "defectlab/rng.hpp"
#include "defectlab/unipoly.hpp"

namespace defectlab {

// Derivative multi-indices alpha_0..alpha_L with |alpha_i| <= i.
struct AdmissibleSet {
    int m = 1;
    std::vector<MultiIndex> alphas;

    void validate(std::size_t count) const;
};

// Entries F_0..F_L of a generalized Wronskian, polynomials in m variables.
struct SymbolicTuple {
    int m = 1;
    std::vector<MPoly> entries;

    void validate() const;
};

// Iterated partial derivative D^alpha p.
MPoly apply_derivative(const MPoly& p, const MultiIndex& alpha);

// Smallest admissible set (graded-lex greedy per level) whose Wronskian is
// not identically zero.  Linear dependence of the entries is an error that
// names a vanishing combination.
AdmissibleSet admissible_search(const SymbolicTuple& F);

// Exact determinant det(D^{alpha_i} F_j).
MPoly wronskian_symbolic(const SymbolicTuple& F, const AdmissibleSet& A);

// Numeric evaluation of the same determinant at a point.
std::complex<double> wronskian_numeric(const SymbolicTuple& F, const AdmissibleSet& A,
                                       const std::vector<std::complex<double>>& point);

// Rank of a polynomial matrix over the rational function field.
std::size_t mpoly_rank(std::vector<std::vector<MPoly>> mat);

// Circle average at radius r of |z^{sum alpha} W(F) / prod_i forms_i(F)|^t
// for m = 1; `forms` are L+1 linear forms (rows of rational coefficients)
// applied to the tuple.  Node jitter (seeded) is applied if a node lands on
// a zero of the denominator.
double log_derivative_integrand(const SymbolicTuple& F, const AdmissibleSet& A,
                                const std::vector<std::vector<Rational>>& forms, double t,
                                double r, std::size_t nodes, std::uint64_t seed = 0);

} // namespace defectlab
