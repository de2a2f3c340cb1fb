#pragma once

#include <string>

#include "defectlab/rational.hpp"

namespace defectlab {

// Least integer strictly greater than x: I(x) = min{ a in Z : a > x }.
Int strict_ceiling(const Rational& x);

struct ParameterSet {
    int n = 0, k = 0, d = 0;
    Rational eps, rho;
    Int p;        // k - n + 1
    Int I_eps;    // I(eps^-1)
    Int N;        // (n+1)d + p(n+1)^3 I(eps^-1) d
    Int u;        // binom(N+n, n)
    Rational rhs_base; // p(n+1) + eps
    Rational rhs_full; // p(n+1) + eps + rho u(u-1)/d
    Rational corollary_rhs; // p(n+1) + 1 (the eps = 1+eps' specialization limit)
};

ParameterSet theorem_parameters(int n, int k, int d, const Rational& eps, const Rational& rho);

// Proof lower bound for the filtration weight: N(N-d)...(N-nd) / ((n+1)! d).
Rational b_lower_bound(int n, int d, const Int& N);

struct LemmaNewReport {
    Rational b;         // weight used (supplied or the formula lower bound)
    Rational lhs_a;     // puN / (db)
    Rational bound_a;   // p(n+1) + eps
    bool a_pass = false;
    Int u;
    Rational rhs_b_lo;  // e_lo^{n+2} (dp(n+1)^2 I)^n
    Rational rhs_b_hi;  // e_hi^{n+2} (dp(n+1)^2 I)^n
    bool b_pass = false;
    bool roundings_agree = false;
};

// Lemma "new" (a) and (b) with exact rational arithmetic; e^{n+2} is
// sandwiched between two rational approximations accurate to < 1e-12 and
// both roundings must agree on the verdict.
LemmaNewReport verify_lemma_new(const ParameterSet& params, const Rational& b);
LemmaNewReport verify_lemma_new(const ParameterSet& params); // b = formula bound

// Display-only comparison values from the earlier result the theorem
// improves on: N_B = 2kd n^2 (n+1)^2 I(eps^-1), u_B <= (3ekdI)^n (n+1)^{3n}.
struct ComparisonDisplay {
    Int N;
    Rational u_bound; // using the upper rational approximation of e
};

ComparisonDisplay comparison_parameters(int n, int k, int d, const Rational& eps);

// Rational sandwich e_lo <= e <= e_hi with e_hi - e_lo < 1e-12 (Taylor at 20
// terms plus tail bound 1/(20! * 20)).
Rational e_lower();
Rational e_upper();

} // namespace defectlab
