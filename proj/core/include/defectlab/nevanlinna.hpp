#pragma once

#include <optional>
#include <string>
#include <vector>

#include "defectlab/bounds.hpp"
#include "defectlab/filtration.hpp"
#include "defectlab/position.hpp"
#include "defectlab/unipoly.hpp"

namespace defectlab {

// Reduced representation of a polynomial curve f: C -> P^n.
struct MeromorphicCurve {
    int n = 0;
    std::vector<GPoly> components; // f_0..f_n, no common root

    void validate() const;
    bool is_constant() const;
    int max_degree() const;
};

// Radius grid with one quadrature resolution for all circle averages.
struct RGrid {
    double r0 = 1.0;
    std::vector<double> radii; // ascending, all > r0
    std::size_t nodes = 4096;  // power of two, >= 256

    static RGrid geometric(double lo, double hi, std::size_t count, double r0 = 1.0,
                           std::size_t nodes = 4096);
    void validate() const;
};

// Circle average of log ||f~|| at radius r (no singularities: f~ is reduced).
double circle_avg_log_norm(const MeromorphicCurve& f, double r, std::size_t nodes);

// T_f(r, r_0) over the grid.
std::vector<double> characteristic(const MeromorphicCurve& f, const RGrid& grid);

// N(r, r_0, f*Q) over the grid; exact root multiplicities, closed-form
// piecewise-log integration, multiplicities capped at `truncation` when set.
std::vector<double> counting(const MeromorphicCurve& f, const HomPoly& Q, const RGrid& grid,
                             const std::optional<Int>& truncation = std::nullopt);

// m_f(r, r_0, Q) over the grid (circle averages with seeded node jitter).
std::vector<double> proximity(const MeromorphicCurve& f, const HomPoly& Q, const RGrid& grid,
                              std::uint64_t seed = 0);

struct FmtReport {
    std::vector<double> r, T, N_full, N_trunc, m, residual; // residual = dT - m - N
    double residual_variation = 0.0;                        // max - min over the grid
    double defect = 0.0;   // 1 - lim N^[l]/(dT), the exact slope ratio (no clamping)
    Int truncation_level;  // l; 0 marks the untruncated defect
    int d = 0;
};

FmtReport fmt_report(const MeromorphicCurve& f, const HomPoly& Q, const RGrid& grid,
                     const std::optional<Int>& l = std::nullopt, std::uint64_t seed = 0);

struct VeroneseReport {
    std::vector<double> diff; // T_F - d*T_f per radius
    double variation = 0.0;
    int d = 0;
    std::size_t u = 0;
};

// Lemma 3.3b check: L spans V_d (u = binom(n+d, n) independent forms); the
// optional positive weights scale each |L_i(f~)| inside the norm of F~.
VeroneseReport veronese_check(const MeromorphicCurve& f, const std::vector<HomPoly>& L,
                              const RGrid& grid, const std::vector<double>& weights = {});

struct SmtReport {
    long long b = 0;
    std::size_t u = 0;
    long long p = 0;
    bool p_le_b = true;
    bool vacuous = false; // q <= p(n+1) + eps
    std::vector<std::vector<long long>> per_subset_weights;
    double pointwise_max_gap = 0.0;
    std::size_t pointwise_samples = 0;
    Rational coefficient_exact; // q - puN/(db)
    std::vector<double> r, T, sum_counting, margin;
};

// Theorem 5.3 margins: per-subset replacements + filtrations give u and b,
// then (i) the pointwise chain gap on |z| = pointwise_radius and (ii) the
// integrated margin over the grid.
SmtReport smt_margin(const MeromorphicCurve& f, const HypersurfaceFamily& family,
                     const Rational& eps, int N_custom, const RGrid& grid, std::uint64_t seed,
                     std::size_t pointwise_samples = 10000, double pointwise_radius = 2.0);

struct DivisorCheckRow {
    std::string factor; // coprime-basis factor of prod Q_i(f~) and W
    int factor_degree = 0;
    std::vector<int> nu_Q;
    int nu_W = 0;
    long long lhs = 0; // b * sum nu_Q - p * nu_W
    long long rhs = 0; // b * sum min(u-1, nu_Q)
    bool ok = true;
};

struct DivisorCheckReport {
    std::vector<DivisorCheckRow> rows;
    bool pass = true;
    std::size_t u = 0;
    long long b = 0;
    long long p = 0;
};

// Claim 3.10 at every zero, exactly: the Wronskian of the monomial V_N basis
// composed with f~ against the family's zero multiplicities.
DivisorCheckReport divisor_truncation_check(const MeromorphicCurve& f,
                                            const HypersurfaceFamily& family, int N, long long b);

} // namespace defectlab
