#pragma once

#include <vector>

#include "defectlab/hompoly.hpp"
#include "defectlab/ideal.hpp"
#include "defectlab/matrix.hpp"

namespace defectlab {

// All n-tuples (i_1..i_n) with sigma(i) = sum <= cap, ascending lexicographic;
// the chain index s is 1-based to match the W_(i)_s notation.
class TupleOrder {
public:
    TupleOrder(int n, int cap);

    int n() const { return n_; }
    int cap() const { return cap_; }
    std::size_t K() const { return tuples_.size(); }
    const std::vector<MultiIndex>& tuples() const { return tuples_; }
    const MultiIndex& at(std::size_t s) const { return tuples_[s - 1]; } // 1-based

private:
    int n_, cap_;
    std::vector<MultiIndex> tuples_;
};

struct AdaptedBasisElement {
    HomPoly psi;   // basis vector of V_N
    std::size_t s; // 1-based tuple index of its block
    HomPoly h;     // witness: psi = P_1^{i_1s} ... P_n^{i_ns} * h
};

struct FiltrationTable {
    int n = 0, d = 0, N = 0, cap = 0;
    std::vector<HomPoly> P;
    TupleOrder tuples{1, 0};
    std::vector<std::size_t> dims;           // dim W_(i)_s, index s-1
    std::vector<long long> jumps;            // m_s (m_K = 1 by convention)
    std::vector<AdaptedBasisElement> basis;  // u elements, grouped by tuple index s ascending
    std::vector<long long> weights;          // b_j = sum_s m_s * i_js, j = 1..n
    std::size_t u = 0;                       // dim V_N
    bool locus_certified = false;
    int locus_dimension = -1;
};

// Corvaja-Zannier filtration of V_N by W_(i) = sum_{(j)>=(i)} P^(j) V_{N-d sigma(j)}.
// P must be n forms of one degree d in P^n with N divisible by d.  When
// `certify_locus` is set the common locus is certified zero-dimensional (the
// proper-intersection hypothesis); otherwise the table is built uncertified.
FiltrationTable build_filtration(const std::vector<HomPoly>& P, int N, bool certify_locus = true);

struct CzRow {
    std::size_t s = 0;
    MultiIndex tuple;
    long long m = 0;
    bool qualifies = false; // d*sigma(i) < N - n*d
    bool ok = true;         // m == d^n when qualifying
};

struct CzReport {
    long long expected = 0; // d^n
    std::vector<CzRow> rows;
    bool pass = true;
};

CzReport verify_cz(const FiltrationTable& table);

struct WeightSummary {
    long long b = 0;                          // min over tables and j of b_j
    std::vector<std::vector<long long>> per_table;
};

WeightSummary weight_summary(const std::vector<FiltrationTable>& tables);

} // namespace defectlab
