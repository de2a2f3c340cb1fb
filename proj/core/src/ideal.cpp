#include "defectlab/ideal.hpp"

#include <algorithm>

namespace defectlab {

namespace {

// Rows of the Macaulay multiplication map in degree D: x^gamma * g for every
// generator g and every monomial x^gamma of degree D - deg g.
RatMatrix macaulay_rows(const std::vector<HomPoly>& gens, int D, const MonomialOrder& order) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& g : gens) {
        if (g.is_zero() || g.degree() > D) continue;
        MonomialOrder shifts(g.n(), D - g.degree());
        for (const auto& gamma : shifts.monomials()) {
            std::vector<Rational> row(order.size(), Rational(0));
            for (const auto& [I, c] : g.terms()) row[order.index(mi_add(I, gamma))] = c;
            rows.push_back(std::move(row));
        }
    }
    RatMatrix m(rows.size(), order.size());
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

int common_n(const std::vector<HomPoly>& gens) {
    require(!gens.empty(), ErrorKind::InvalidInput, "empty generator list");
    int n = gens.front().n();
    for (const auto& g : gens)
        require(g.n() == n, ErrorKind::AmbientMismatch, "generators in different ambient spaces");
    return n;
}

} // namespace

GradedPiece ideal_graded_piece(const std::vector<HomPoly>& gens, int D) {
    require(D >= 0, ErrorKind::InvalidInput, "negative degree");
    int n = gens.empty() ? 0 : common_n(gens);
    if (gens.empty()) {
        // Zero ideal: piece is the zero subspace of an unspecified ambient;
        // callers that hit this path only use the hilbert count.
        MonomialOrder order(n, D);
        return {Subspace(order.size()), order.size()};
    }
    MonomialOrder order(n, D);
    Subspace s = Subspace::span(macaulay_rows(gens, D, order));
    return {s, order.size() - s.dim()};
}

LocusResult projective_locus(const std::vector<HomPoly>& gens, int cap) {
    int n = common_n(gens);
    bool all_zero = true;
    int max_deg = 0, min_deg = 0;
    for (const auto& g : gens)
        if (!g.is_zero()) {
            if (all_zero) min_deg = g.degree();
            all_zero = false;
            max_deg = std::max(max_deg, g.degree());
            min_deg = std::min(min_deg, g.degree());
        }
    require(!all_zero, ErrorKind::InvalidInput, "all generators are zero");

    int dstar = std::min(static_cast<int>(gens.size()) * (max_deg - 1) + 1, cap);
    dstar = std::max(dstar, max_deg); // pieces below max_deg cannot be full

    LocusResult res;
    auto hilbert = [&](int D) { return ideal_graded_piece(gens, D).hilbert; };

    for (int D = min_deg; D <= dstar; ++D) {
        if (hilbert(D) == 0) {
            res.empty = true;
            res.certificate_degree = D;
            return res;
        }
    }

    // Dimension inference: hilbert values over [D*, D* + n + 2]; the minimal
    // interpolating polynomial degree (via finite differences) is the
    // projective dimension.
    int window_len = n + 3;
    std::vector<std::size_t> window;
    for (int D = dstar; D < dstar + window_len; ++D) {
        std::size_t h = hilbert(D);
        if (h == 0) { // late fill-up still certifies emptiness
            res.empty = true;
            res.certificate_degree = D;
            return res;
        }
        window.push_back(h);
    }

    std::vector<long long> diff(window.begin(), window.end());
    for (int deg = 0; deg <= n + 1; ++deg) {
        // diff currently holds the deg-th differences; constant-zero next
        // level means an exact degree-`deg` polynomial fit.
        bool next_zero = true;
        std::vector<long long> next(diff.size() - 1);
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) {
            next[i] = diff[i + 1] - diff[i];
            if (next[i] != 0) next_zero = false;
        }
        if (next_zero) {
            res.empty = false;
            res.dimension = deg;
            res.window = window;
            return res;
        }
        diff = std::move(next);
    }
    fail(ErrorKind::InconclusiveAtCap,
         "Hilbert function not polynomial of admissible degree within the sweep window");
}

} // namespace defectlab
