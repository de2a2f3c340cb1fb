#include "defectlab/filtration.hpp"

#include <algorithm>

namespace defectlab {

TupleOrder::TupleOrder(int n, int cap) : n_(n), cap_(cap) {
    require(n >= 1, ErrorKind::InvalidInput, "tuple length must be >= 1");
    require(cap >= 0, ErrorKind::InvalidInput, "negative tuple cap");
    MultiIndex cur(n, 0);
    // Ascending lexicographic enumeration of { sigma(i) <= cap }.
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n) {
            tuples_.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[pos] = e;
            self(self, pos + 1, left - e);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, cap);
}

FiltrationTable build_filtration(const std::vector<HomPoly>& P, int N, bool certify_locus) {
    require(!P.empty(), ErrorKind::InvalidInput, "empty hypersurface list");
    int n = P.front().n();
    require(static_cast<int>(P.size()) == n, ErrorKind::InvalidInput,
            "filtration needs exactly n forms in P^n");
    int d = P.front().degree();
    require(d >= 1, ErrorKind::InvalidInput, "forms must have degree >= 1");
    for (const auto& p : P) {
        require(p.n() == n, ErrorKind::AmbientMismatch, "forms in different ambient spaces");
        require(p.degree() == d, ErrorKind::InvalidInput, "forms must share one degree");
        require(!p.is_zero(), ErrorKind::InvalidInput, "zero form in filtration input");
    }
    require(N >= d, ErrorKind::InvalidInput, "N must be at least d");
    require(N % d == 0, ErrorKind::InvalidInput, "N must be divisible by d");

    FiltrationTable t;
    t.n = n;
    t.d = d;
    t.N = N;
    t.cap = N / d;
    t.P = P;
    t.tuples = TupleOrder(n, t.cap);
    if (certify_locus) {
        LocusResult loc = projective_locus(P);
        t.locus_dimension = loc.empty ? -1 : loc.dimension;
        t.locus_certified = true;
        require(t.locus_dimension <= 0, ErrorKind::PositionViolation,
                "filtration forms must intersect in dimension <= 0");
    }

    std::size_t K = t.tuples.K();
    MonomialOrder order(n, N);
    t.u = order.size();

    // Power table P_j^e for e <= cap.
    std::vector<std::vector<HomPoly>> powers(n);
    for (int j = 0; j < n; ++j) {
        powers[j].push_back(HomPoly::monomial(n, MultiIndex(n + 1, 0), Rational(1)));
        for (int e = 1; e <= t.cap; ++e) powers[j].push_back(powers[j].back() * P[j]);
    }

    // Top-down accumulation: W_(i)_s = W_(i)_{s+1} + P^{(i)_s} V_{N - d sigma}.
    // Processing s = K..1 makes each step one incremental RREF extension, and
    // greedy selection among the generating products yields the adapted basis
    // with exact product witnesses.
    RrefAccumulator acc(order.size());
    t.dims.assign(K, 0);
    std::vector<std::vector<AdaptedBasisElement>> blocks(K);
    for (std::size_t s = K; s >= 1; --s) {
        const MultiIndex& tup = t.tuples.at(s);
        int sigma = mi_degree(tup);
        HomPoly prod = powers[0][static_cast<std::size_t>(tup[0])];
        for (int j = 1; j < n; ++j) prod = prod * powers[j][static_cast<std::size_t>(tup[j])];

        MonomialOrder shifts(n, N - d * sigma);
        for (const auto& gamma : shifts.monomials()) {
            std::vector<Rational> row(order.size(), Rational(0));
            for (const auto& [I, c] : prod.terms()) row[order.index(mi_add(I, gamma))] = c;
            if (acc.insert(row)) {
                AdaptedBasisElement el{prod * HomPoly::monomial(n, gamma, Rational(1)), s,
                                       HomPoly::monomial(n, gamma, Rational(1))};
                blocks[s - 1].push_back(std::move(el));
            }
        }
        t.dims[s - 1] = acc.dim();
    }
    require(t.dims.front() == t.u, ErrorKind::Degeneracy,
            "filtration does not exhaust V_N (W at (0,...,0) must equal V_N)");
    require(t.dims.back() == 1, ErrorKind::Degeneracy,
            "innermost filtration space is not one-dimensional");

    t.jumps.assign(K, 0);
    for (std::size_t s = 1; s < K; ++s)
        t.jumps[s - 1] = static_cast<long long>(t.dims[s - 1]) - static_cast<long long>(t.dims[s]);
    t.jumps[K - 1] = 1; // m_K = 1 by convention

    // Assemble psi_1..psi_u so the last m_s + ... + m_K elements span W_(i)_s.
    for (std::size_t s = 1; s <= K; ++s)
        for (auto& el : blocks[s - 1]) t.basis.push_back(std::move(el));
    require(t.basis.size() == t.u, ErrorKind::Degeneracy, "adapted basis has wrong size");

    t.weights.assign(n, 0);
    for (std::size_t s = 1; s <= K; ++s) {
        const MultiIndex& tup = t.tuples.at(s);
        for (int j = 0; j < n; ++j) t.weights[j] += t.jumps[s - 1] * tup[j];
    }
    return t;
}

CzReport verify_cz(const FiltrationTable& table) {
    CzReport rep;
    rep.expected = 1;
    for (int j = 0; j < table.n; ++j) rep.expected *= table.d;
    for (std::size_t s = 1; s <= table.tuples.K(); ++s) {
        CzRow row;
        row.s = s;
        row.tuple = table.tuples.at(s);
        row.m = table.jumps[s - 1];
        row.qualifies = table.d * mi_degree(row.tuple) < table.N - table.n * table.d;
        row.ok = !row.qualifies || row.m == rep.expected;
        if (!row.ok) rep.pass = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

WeightSummary weight_summary(const std::vector<FiltrationTable>& tables) {
    require(!tables.empty(), ErrorKind::InvalidInput, "no filtration tables");
    WeightSummary out;
    bool first = true;
    for (const auto& t : tables) {
        out.per_table.push_back(t.weights);
        for (long long b : t.weights) {
            if (first || b < out.b) out.b = b;
            first = false;
        }
    }
    return out;
}

} // namespace defectlab
