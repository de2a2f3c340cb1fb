#include "defectlab/wronskian.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "defectlab/matrix.hpp"

namespace defectlab {

void AdmissibleSet::validate(std::size_t count) const {
    require(alphas.size() == count, ErrorKind::InvalidInput, "admissible set size mismatch");
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        require(static_cast<int>(alphas[i].size()) == m, ErrorKind::InvalidInput,
                "derivative index arity mismatch");
        require(mi_degree(alphas[i]) <= static_cast<int>(i), ErrorKind::InvalidInput,
                "admissibility |alpha_i| <= i violated");
    }
}

void SymbolicTuple::validate() const {
    require(!entries.empty(), ErrorKind::InvalidInput, "empty tuple");
    bool any = false;
    for (const auto& e : entries) {
        require(e.vars() == m, ErrorKind::AmbientMismatch, "entry variable count mismatch");
        any = any || !e.is_zero();
    }
    require(any, ErrorKind::InvalidInput, "all tuple entries are zero");
}

MPoly apply_derivative(const MPoly& p, const MultiIndex& alpha) {
    MPoly out = p;
    for (std::size_t v = 0; v < alpha.size(); ++v)
        for (int k = 0; k < alpha[v]; ++k) out = out.derivative(static_cast<int>(v));
    return out;
}

namespace {

// All alpha with |alpha| <= bound in m variables, graded-lex ascending
// (degree first, then lexicographic within one degree).
std::vector<MultiIndex> graded_candidates(int m, int bound) {
    std::vector<MultiIndex> out;
    for (int deg = 0; deg <= bound; ++deg) {
        std::vector<MultiIndex> level;
        MultiIndex cur(m, 0);
        auto rec = [&](auto&& self, int pos, int left) -> void {
            if (pos == m - 1) {
                cur[pos] = left;
                level.push_back(cur);
                return;
            }
            for (int e = left; e >= 0; --e) { // lex-descending tail keeps x1-heavy first
                cur[pos] = e;
                self(self, pos + 1, left - e);
            }
            cur[pos] = 0;
        };
        rec(rec, 0, deg);
        std::sort(level.begin(), level.end());
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

// Coefficient matrix of the tuple over all monomials present (rows = entries).
RatMatrix coefficient_matrix(const SymbolicTuple& F) {
    std::set<MultiIndex> monos;
    for (const auto& e : F.entries)
        for (const auto& [mi, c] : e.terms()) monos.insert(mi);
    std::vector<MultiIndex> cols(monos.begin(), monos.end());
    RatMatrix mat(F.entries.size(), cols.size());
    for (std::size_t i = 0; i < F.entries.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) mat.at(i, j) = F.entries[i].coeff(cols[j]);
    return mat;
}

} // namespace

std::size_t mpoly_rank(std::vector<std::vector<MPoly>> mat) {
    if (mat.empty() || mat[0].empty()) return 0;
    std::size_t rows = mat.size(), cols = mat[0].size();
    int m = mat[0][0].vars();
    MPoly prev = MPoly::constant(m, Rational(1));
    std::size_t rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && mat[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(mat[piv], mat[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                MPoly t = mat[r][c] * mat[i][j] - mat[i][c] * mat[r][j];
                auto q = mpoly_divide(t, prev);
                require(q.has_value(), ErrorKind::NumericFailure, "Bareiss division not exact");
                mat[i][j] = *q;
            }
            mat[i][c] = MPoly(m);
        }
        prev = mat[r][c];
        ++r;
        ++rank;
    }
    return rank;
}

AdmissibleSet admissible_search(const SymbolicTuple& F) {
    F.validate();
    std::size_t L1 = F.entries.size(); // L + 1 entries
    int m = F.m;

    // Linear independence over constants comes first; a dependent tuple has
    // every generalized Wronskian identically zero.
    RatMatrix coeffs = coefficient_matrix(F);
    auto [rr, rank] = rref_rank(coeffs);
    if (rank < L1) {
        RatMatrix ker = nullspace(coeffs.transposed());
        std::ostringstream os;
        os << "tuple is linearly dependent; vanishing combination:";
        if (ker.rows() > 0)
            for (std::size_t j = 0; j < L1; ++j)
                if (!ker.at(0, j).is_zero()) os << " " << ker.at(0, j).str() << "*F" << j;
        fail(ErrorKind::Dependence, os.str());
    }

    AdmissibleSet A;
    A.m = m;

    if (m == 1) {
        // Ordinary Wronskian: independence already guarantees W != 0.
        for (std::size_t i = 0; i < L1; ++i) A.alphas.push_back(MultiIndex{static_cast<int>(i)});
        return A;
    }

    // Greedy DFS, graded-lex smallest first per level; accept alpha_i when
    // the stacked derivative rows stay independent over the function field.
    std::vector<std::vector<MPoly>> rows;
    auto row_of = [&](const MultiIndex& alpha) {
        std::vector<MPoly> row;
        row.reserve(L1);
        for (const auto& e : F.entries) row.push_back(apply_derivative(e, alpha));
        return row;
    };
    auto rec = [&](auto&& self, std::size_t level) -> bool {
        if (level == L1) return true;
        for (const auto& alpha : graded_candidates(m, static_cast<int>(level))) {
            if (std::find(A.alphas.begin(), A.alphas.end(), alpha) != A.alphas.end()) continue;
            rows.push_back(row_of(alpha));
            if (mpoly_rank(rows) == rows.size()) {
                A.alphas.push_back(alpha);
                if (self(self, level + 1)) return true;
                A.alphas.pop_back();
            }
            rows.pop_back();
        }
        return false;
    };
    require(rec(rec, 0), ErrorKind::SearchFailure, "no admissible set found");
    return A;
}

MPoly wronskian_symbolic(const SymbolicTuple& F, const AdmissibleSet& A) {
    F.validate();
    A.validate(F.entries.size());
    require(A.m == F.m, ErrorKind::AmbientMismatch, "admissible set arity mismatch");
    std::vector<std::vector<MPoly>> mat;
    mat.reserve(A.alphas.size());
    for (const auto& alpha : A.alphas) {
        std::vector<MPoly> row;
        row.reserve(F.entries.size());
        for (const auto& e : F.entries) row.push_back(apply_derivative(e, alpha));
        mat.push_back(std::move(row));
    }
    return mpoly_det(mat);
}

std::complex<double> wronskian_numeric(const SymbolicTuple& F, const AdmissibleSet& A,
                                       const std::vector<std::complex<double>>& point) {
    MPoly w = wronskian_symbolic(F, A);
    return w.eval(std::span<const std::complex<double>>(point));
}

double log_derivative_integrand(const SymbolicTuple& F, const AdmissibleSet& A,
                                const std::vector<std::vector<Rational>>& forms, double t,
                                double r, std::size_t nodes, std::uint64_t seed) {
    F.validate();
    A.validate(F.entries.size());
    require(F.m == 1, ErrorKind::InvalidInput, "integrand evaluator is one-variable only");
    require(forms.size() == F.entries.size(), ErrorKind::InvalidInput,
            "need exactly L+1 linear forms");
    std::size_t L1 = F.entries.size();
    {
        RatMatrix mat(L1, L1);
        for (std::size_t i = 0; i < L1; ++i) {
            require(forms[i].size() == L1, ErrorKind::InvalidInput, "linear form arity mismatch");
            for (std::size_t j = 0; j < L1; ++j) mat.at(i, j) = forms[i][j];
        }
        require(rref_rank(mat).second == L1, ErrorKind::InvalidInput,
                "linear forms must be independent");
    }
    int l = 0;
    for (const auto& alpha : A.alphas) l += mi_degree(alpha);
    require(t > 0.0 && t * l < 1.0, ErrorKind::InvalidInput,
            "exponent must satisfy 0 < t*l < 1");

    QPoly w = to_unipoly(wronskian_symbolic(F, A));
    require(!w.is_zero(), ErrorKind::Dependence, "Wronskian identically zero");
    std::vector<QPoly> denoms;
    for (std::size_t i = 0; i < L1; ++i) {
        QPoly acc;
        for (std::size_t j = 0; j < L1; ++j)
            acc += forms[i][j] * to_unipoly(F.entries[j]);
        require(!acc.is_zero(), ErrorKind::Degeneracy, "linear form vanishes on the tuple");
        denoms.push_back(std::move(acc));
    }

    const double pi = 3.14159265358979323846;
    Rng rng = Rng::derive(seed, "log-derivative-jitter");
    for (int attempt = 0; attempt < 5; ++attempt) {
        double phase = attempt == 0 ? 0.0 : rng.next_double() * 2.0 * pi / static_cast<double>(nodes);
        double sum = 0.0;
        bool ok = true;
        for (std::size_t j = 0; j < nodes && ok; ++j) {
            double th = 2.0 * pi * static_cast<double>(j) / static_cast<double>(nodes) + phase;
            std::complex<double> z = r * std::complex<double>(std::cos(th), std::sin(th));
            double log_num = static_cast<double>(l) * std::log(r) + std::log(std::abs(w.eval(z)));
            double log_den = 0.0;
            for (const auto& dpoly : denoms) log_den += std::log(std::abs(dpoly.eval(z)));
            double v = std::exp(t * (log_num - log_den));
            if (!std::isfinite(v)) {
                ok = false;
                break;
            }
            sum += v;
        }
        if (ok) return sum / static_cast<double>(nodes);
    }
    fail(ErrorKind::NumericFailure, "integrand evaluation kept hitting singular nodes");
}

} // namespace defectlab
