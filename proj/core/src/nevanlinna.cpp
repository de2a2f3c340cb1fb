#include "defectlab/nevanlinna.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "defectlab/matrix.hpp"
#include "defectlab/rng.hpp"
#include "defectlab/threads.hpp"

namespace defectlab {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

double log_norm(const std::vector<GPoly>& comps, const std::complex<double>& z) {
    double s = 0.0;
    for (const auto& c : comps) s += std::norm(c.eval(z));
    return 0.5 * std::log(s);
}

template <typename F>
std::optional<double> try_circle_avg(double r, std::size_t nodes, double phase, F&& integrand) {
    double acc = 0.0;
    for (std::size_t j = 0; j < nodes; ++j) {
        const double th = phase + kTau * static_cast<double>(j) / static_cast<double>(nodes);
        const double v = integrand(std::polar(r, th));
        if (!std::isfinite(v)) return std::nullopt;
        acc += v;
    }
    return acc / static_cast<double>(nodes);
}

// Trapezoid average over the circle |z| = r; singular nodes trigger seeded
// phase jitter (the integrands have at worst log singularities, so any
// phase avoiding the finitely many bad angles works).
template <typename F>
double circle_avg(double r, std::size_t nodes, std::uint64_t seed, const std::string& purpose,
                  F&& integrand) {
    Rng rng = Rng::derive(seed, purpose);
    for (int attempt = 0; attempt < 5; ++attempt) {
        const double phase =
            attempt == 0 ? 0.0 : rng.next_double() * (kTau / static_cast<double>(nodes));
        if (auto v = try_circle_avg(r, nodes, phase, integrand)) return *v;
    }
    fail(ErrorKind::NumericFailure, "circle average hit singular nodes after jitter retries");
}

GPoly div_exact(const GPoly& a, const GPoly& b) {
    auto [q, r] = a.divrem(b);
    require(r.is_zero(), ErrorKind::NumericFailure, "inexact division in fraction-free elimination");
    return q;
}

// Fraction-free (Bareiss) determinant over the ring of polynomials in one
// variable with Gaussian-rational coefficients.
GPoly gpoly_det(std::vector<std::vector<GPoly>> m) {
    const std::size_t sz = m.size();
    require(sz > 0, ErrorKind::InvalidInput, "determinant of an empty matrix");
    int sign = 1;
    GPoly prev = GPoly::constant(GaussRational(1));
    for (std::size_t k = 0; k + 1 < sz; ++k) {
        std::size_t piv = k;
        while (piv < sz && m[piv][k].is_zero()) ++piv;
        if (piv == sz) return GPoly();
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < sz; ++i) {
            for (std::size_t j = k + 1; j < sz; ++j)
                m[i][j] = div_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = GPoly();
        }
        prev = m[k][k];
    }
    GPoly det = m[sz - 1][sz - 1];
    return sign < 0 ? -det : det;
}

std::vector<GPoly> compose_family(const HypersurfaceFamily& family, const MeromorphicCurve& f) {
    std::vector<GPoly> out(family.size());
    for (std::size_t j = 0; j < family.size(); ++j) {
        out[j] = compose_hom(family.members[j], f.components);
        require(!out[j].is_zero(), ErrorKind::Degeneracy,
                "curve lies in family member '" + family.labels[j] + "'");
    }
    return out;
}

int common_family_degree(const HypersurfaceFamily& family) {
    const int d = family.members.front().degree();
    for (const auto& Q : family.members)
        require(Q.degree() == d, ErrorKind::InvalidInput,
                "family must be normalized to one common degree");
    require(d >= 1, ErrorKind::InvalidInput, "family degree must be positive");
    return d;
}

} // namespace

void MeromorphicCurve::validate() const {
    require(n >= 1, ErrorKind::InvalidInput, "curve target dimension must be at least 1");
    require(components.size() == static_cast<std::size_t>(n) + 1, ErrorKind::InvalidInput,
            "curve needs exactly n+1 components");
    GPoly g;
    bool any = false;
    for (const auto& c : components) {
        if (c.is_zero()) continue;
        any = true;
        g = g.is_zero() ? c : poly_gcd(g, c);
    }
    require(any, ErrorKind::InvalidInput, "curve components are all zero");
    require(g.degree() <= 0, ErrorKind::InvalidInput,
            "curve representation is not reduced: components share the factor " + g.str());
}

bool MeromorphicCurve::is_constant() const { return max_degree() <= 0; }

int MeromorphicCurve::max_degree() const {
    int d = -1;
    for (const auto& c : components) d = std::max(d, c.degree());
    return d;
}

RGrid RGrid::geometric(double lo, double hi, std::size_t count, double r0, std::size_t nodes) {
    require(count >= 1, ErrorKind::InvalidInput, "grid needs at least one radius");
    require(lo > 0.0 && hi >= lo, ErrorKind::InvalidInput, "grid endpoints must satisfy 0 < lo <= hi");
    RGrid g;
    g.r0 = r0;
    g.nodes = nodes;
    if (count == 1) {
        g.radii = {lo};
    } else {
        g.radii.resize(count);
        for (std::size_t i = 0; i < count; ++i)
            g.radii[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(count - 1));
        g.radii.front() = lo;
        g.radii.back() = hi;
    }
    g.validate();
    return g;
}

void RGrid::validate() const {
    require(r0 > 0.0, ErrorKind::InvalidInput, "base radius must be positive");
    require(!radii.empty(), ErrorKind::InvalidInput, "radius grid is empty");
    require(radii.front() > r0, ErrorKind::InvalidInput, "all radii must exceed the base radius");
    for (std::size_t i = 1; i < radii.size(); ++i)
        require(radii[i] > radii[i - 1], ErrorKind::InvalidInput, "radii must be strictly increasing");
    require(nodes >= 256 && (nodes & (nodes - 1)) == 0, ErrorKind::InvalidInput,
            "quadrature node count must be a power of two, at least 256");
}

double circle_avg_log_norm(const MeromorphicCurve& f, double r, std::size_t nodes) {
    require(r > 0.0, ErrorKind::InvalidInput, "radius must be positive");
    return circle_avg(r, nodes, 0, "log-norm",
                      [&](const std::complex<double>& z) { return log_norm(f.components, z); });
}

std::vector<double> characteristic(const MeromorphicCurve& f, const RGrid& grid) {
    f.validate();
    grid.validate();
    auto integrand = [&](const std::complex<double>& z) { return log_norm(f.components, z); };
    const double base = circle_avg(grid.r0, grid.nodes, 0, "characteristic-base", integrand);
    std::vector<double> T(grid.radii.size());
    parallel_for(grid.radii.size(), [&](std::size_t i) {
        T[i] = circle_avg(grid.radii[i], grid.nodes, 0, "characteristic/r=" + std::to_string(i),
                          integrand) -
               base;
    });
    return T;
}

std::vector<double> counting(const MeromorphicCurve& f, const HomPoly& Q, const RGrid& grid,
                             const std::optional<Int>& truncation) {
    f.validate();
    grid.validate();
    require(Q.n() == f.n, ErrorKind::AmbientMismatch,
            "hypersurface and curve live in different projective spaces");
    require(!Q.is_zero(), ErrorKind::InvalidInput, "the zero form carries no divisor");
    if (truncation)
        require(*truncation >= 1, ErrorKind::InvalidInput, "truncation level must be at least 1");
    GPoly Qf = compose_hom(Q, f.components);
    require(!Qf.is_zero(), ErrorKind::Degeneracy,
            "curve lies in the hypersurface; its counting function is undefined");

    std::vector<std::pair<double, int>> zeros; // (modulus, capped multiplicity)
    for (const auto& [a, mult] : roots_with_multiplicity(Qf)) {
        int capped = mult;
        if (truncation && Int(mult) > *truncation) capped = static_cast<int>(truncation->get_si());
        zeros.emplace_back(std::abs(a), capped);
    }

    std::vector<double> N(grid.radii.size(), 0.0);
    for (std::size_t i = 0; i < N.size(); ++i) {
        const double r = grid.radii[i];
        double acc = 0.0;
        for (const auto& [mod, c] : zeros)
            if (mod <= r) acc += static_cast<double>(c) * (std::log(r) - std::log(std::max(grid.r0, mod)));
        N[i] = acc;
    }
    return N;
}

std::vector<double> proximity(const MeromorphicCurve& f, const HomPoly& Q, const RGrid& grid,
                              std::uint64_t seed) {
    f.validate();
    grid.validate();
    require(Q.n() == f.n, ErrorKind::AmbientMismatch,
            "hypersurface and curve live in different projective spaces");
    const int d = Q.degree();
    require(!Q.is_zero() && d >= 1, ErrorKind::InvalidInput,
            "proximity needs a nonzero form of positive degree");
    GPoly Qf = compose_hom(Q, f.components);
    require(!Qf.is_zero(), ErrorKind::Degeneracy,
            "curve lies in the hypersurface; its proximity function is undefined");
    auto integrand = [&](const std::complex<double>& z) {
        return static_cast<double>(d) * log_norm(f.components, z) - std::log(std::abs(Qf.eval(z)));
    };
    std::vector<double> m(grid.radii.size());
    parallel_for(grid.radii.size(), [&](std::size_t i) {
        m[i] = circle_avg(grid.radii[i], grid.nodes, seed, "proximity-jitter/r=" + std::to_string(i),
                          integrand);
    });
    return m;
}

FmtReport fmt_report(const MeromorphicCurve& f, const HomPoly& Q, const RGrid& grid,
                     const std::optional<Int>& l, std::uint64_t seed) {
    f.validate();
    grid.validate();
    require(!f.is_constant(), ErrorKind::UndefinedDefect,
            "constant curve: the characteristic is bounded, so defects are undefined");
    const int d = Q.degree();
    require(d >= 1, ErrorKind::InvalidInput, "hypersurface degree must be positive");
    require(!l || *l >= Int(1), ErrorKind::InvalidInput, "truncation level must be at least 1");

    FmtReport rep;
    rep.d = d;
    rep.r = grid.radii;
    rep.T = characteristic(f, grid);
    rep.N_full = counting(f, Q, grid);
    rep.N_trunc = l ? counting(f, Q, grid, l) : rep.N_full;
    rep.m = proximity(f, Q, grid, seed);
    rep.truncation_level = l.value_or(Int(0));

    rep.residual.resize(rep.r.size());
    for (std::size_t i = 0; i < rep.r.size(); ++i)
        rep.residual[i] = static_cast<double>(d) * rep.T[i] - rep.m[i] - rep.N_full[i];
    auto [lo, hi] = std::minmax_element(rep.residual.begin(), rep.residual.end());
    rep.residual_variation = *hi - *lo;

    // Defect estimate: for a polynomial curve the limsup of N^[l]/(d T) is an
    // exact slope ratio -- T grows like maxdeg * log r while every root of
    // Q(f~) adds min(mult, l) * log r to N^[l] -- so the estimate is the exact
    // rational 1 - sum(min(mult, l) * deg factor) / (d * maxdeg), and the
    // sandwich 0 <= delta <= 1 holds with zero tolerance.
    const GPoly Qf = compose_hom(Q, f.components);
    long long slope = 0;
    if (Qf.degree() > 0)
        for (const auto& [factor, mult] : yun_squarefree(Qf)) {
            long long capped = mult;
            if (l && Int(mult) > *l) capped = l->get_si();
            slope += capped * factor.degree();
        }
    const long long growth = static_cast<long long>(d) * f.max_degree();
    rep.defect = Rational(Int(static_cast<long>(growth - slope)), Int(static_cast<long>(growth))).to_double();
    return rep;
}

VeroneseReport veronese_check(const MeromorphicCurve& f, const std::vector<HomPoly>& L,
                              const RGrid& grid, const std::vector<double>& weights) {
    f.validate();
    grid.validate();
    require(!L.empty(), ErrorKind::InvalidInput, "no forms supplied");
    const int n = f.n;
    const int d = L.front().degree();
    require(d >= 1, ErrorKind::InvalidInput, "forms must have positive degree");
    for (const auto& q : L) {
        require(q.n() == n, ErrorKind::AmbientMismatch,
                "form and curve live in different projective spaces");
        require(!q.is_zero() && q.degree() == d, ErrorKind::InvalidInput,
                "all forms must be nonzero of one common degree");
    }
    const std::size_t u = L.size();
    require(Int(static_cast<unsigned long>(u)) ==
                binomial(static_cast<unsigned long>(n + d), static_cast<unsigned long>(n)),
            ErrorKind::InvalidInput, "need exactly dim V_d forms");

    MonomialOrder ord(n, d);
    RatMatrix M(u, ord.size());
    for (std::size_t i = 0; i < u; ++i) M.set_row(i, L[i].coords(ord));
    require(rref_rank(M).second == u, ErrorKind::Dependence, "the forms do not span V_d");

    std::vector<double> w = weights.empty() ? std::vector<double>(u, 1.0) : weights;
    require(w.size() == u, ErrorKind::InvalidInput, "weight count must match the form count");
    for (double x : w)
        require(x > 0.0, ErrorKind::InvalidInput, "norm weights must be positive");

    std::vector<GPoly> Lf(u);
    for (std::size_t i = 0; i < u; ++i) Lf[i] = compose_hom(L[i], f.components);

    auto integrand = [&](const std::complex<double>& z) {
        double s = 0.0;
        for (std::size_t i = 0; i < u; ++i) s += w[i] * w[i] * std::norm(Lf[i].eval(z));
        return 0.5 * std::log(s);
    };
    const double base = circle_avg(grid.r0, grid.nodes, 0, "veronese-base", integrand);
    const std::vector<double> T = characteristic(f, grid);

    VeroneseReport rep;
    rep.d = d;
    rep.u = u;
    rep.diff.resize(grid.radii.size());
    parallel_for(grid.radii.size(), [&](std::size_t i) {
        const double TF =
            circle_avg(grid.radii[i], grid.nodes, 0, "veronese/r=" + std::to_string(i), integrand) -
            base;
        rep.diff[i] = TF - static_cast<double>(d) * T[i];
    });
    for (double v : rep.diff) rep.variation = std::max(rep.variation, std::abs(v));
    return rep;
}

SmtReport smt_margin(const MeromorphicCurve& f, const HypersurfaceFamily& family,
                     const Rational& eps, int N_custom, const RGrid& grid, std::uint64_t seed,
                     std::size_t pointwise_samples, double pointwise_radius) {
    f.validate();
    grid.validate();
    family.validate();
    const int n = f.n;
    require(family.n == n, ErrorKind::AmbientMismatch,
            "family and curve live in different projective spaces");
    require(!f.is_constant(), ErrorKind::Degeneracy, "constant curve: margins are undefined");
    const std::size_t q = family.size();
    const int k = family.k;
    require(k >= n, ErrorKind::InvalidInput, "position parameter k must be at least n");
    require(q >= static_cast<std::size_t>(k) + 1, ErrorKind::InvalidInput,
            "need at least k+1 family members");
    const int d = common_family_degree(family);
    require(N_custom > n * d && N_custom % d == 0, ErrorKind::InvalidInput,
            "the auxiliary degree N must be a multiple of d exceeding n*d");
    require(eps > Rational(0), ErrorKind::InvalidInput, "epsilon must be positive");
    require(pointwise_radius > grid.r0, ErrorKind::InvalidInput,
            "sampling radius must exceed the base radius");
    const long long p = k - n + 1;

    const std::vector<GPoly> Qf = compose_family(family, f);

    // Canonical member order: ascending labels.
    std::vector<std::size_t> order(q);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return family.labels[a] < family.labels[b]; });
    std::vector<std::size_t> label_rank(q);
    for (std::size_t i = 0; i < q; ++i) label_rank[order[i]] = i;

    // Replacement chains are cached per ordered index tuple; the pointwise
    // stage reuses canonical-subset chains built for the weight scan.
    std::map<std::vector<std::size_t>, std::vector<GPoly>> chain_cache;
    auto chain_for = [&](const std::vector<std::size_t>& tuple) -> const std::vector<GPoly>& {
        auto it = chain_cache.find(tuple);
        if (it != chain_cache.end()) return it->second;
        std::vector<std::string> labels;
        labels.reserve(tuple.size());
        for (std::size_t idx : tuple) labels.push_back(family.labels[idx]);
        const ReplacementResult repl = replace_hypersurfaces(family, labels, seed);
        std::vector<GPoly> comp(n);
        for (int t = 0; t < n; ++t) comp[t] = compose_hom(repl.outputs[t], f.components);
        return chain_cache.emplace(tuple, std::move(comp)).first->second;
    };

    SmtReport rep;
    rep.p = p;

    // One replacement + filtration per (k+1)-subset, subsets in ascending
    // label order; u and the weight floor b come from these tables.
    std::vector<FiltrationTable> tables;
    std::vector<std::size_t> comb(static_cast<std::size_t>(k) + 1);
    std::iota(comb.begin(), comb.end(), std::size_t{0});
    for (;;) {
        std::vector<std::size_t> tuple;
        std::vector<std::string> labels;
        for (std::size_t pos : comb) {
            tuple.push_back(order[pos]);
            labels.push_back(family.labels[order[pos]]);
        }
        const ReplacementResult repl = replace_hypersurfaces(family, labels, seed);
        tables.push_back(build_filtration(
            std::vector<HomPoly>(repl.outputs.begin(), repl.outputs.begin() + n), N_custom, true));
        std::vector<GPoly> comp(n);
        for (int t = 0; t < n; ++t) comp[t] = compose_hom(repl.outputs[t], f.components);
        chain_cache.emplace(std::move(tuple), std::move(comp));

        // next (k+1)-combination of {0..q-1} in lexicographic order
        std::size_t i = comb.size();
        while (i > 0 && comb[i - 1] == q - comb.size() + (i - 1)) --i;
        if (i == 0) break;
        ++comb[i - 1];
        for (std::size_t j = i; j < comb.size(); ++j) comb[j] = comb[j - 1] + 1;
    }

    const WeightSummary ws = weight_summary(tables);
    rep.b = ws.b;
    rep.per_subset_weights = ws.per_table;
    require(rep.b >= 1, ErrorKind::Degeneracy, "filtration weights are degenerate (b < 1)");
    rep.u = tables.front().u;
    rep.p_le_b = p <= rep.b;
    rep.vacuous = Rational(static_cast<long>(q)) <=
                  Rational(static_cast<long>(p)) * Rational(n + 1) + eps;
    rep.coefficient_exact =
        Rational(static_cast<long>(q)) -
        Rational(Int(Int(static_cast<long>(p)) * Int(static_cast<unsigned long>(rep.u)) *
                     Int(N_custom)),
                 Int(Int(d) * Int(static_cast<long>(rep.b))));

    rep.r = grid.radii;
    rep.T = characteristic(f, grid);
    rep.sum_counting.assign(grid.radii.size(), 0.0);
    const Int trunc = Int(static_cast<unsigned long>(rep.u)) - 1;
    for (std::size_t j = 0; j < q; ++j) {
        const std::vector<double> Nt = counting(f, family.members[j], grid, trunc);
        for (std::size_t i = 0; i < Nt.size(); ++i)
            rep.sum_counting[i] += Nt[i] / static_cast<double>(d);
    }
    const double coeff = rep.coefficient_exact.to_double();
    rep.margin.resize(grid.radii.size());
    for (std::size_t i = 0; i < grid.radii.size(); ++i)
        rep.margin[i] = rep.sum_counting[i] - coeff * rep.T[i];

    // Pointwise chain gap on |z| = pointwise_radius.  The tuple I orders the
    // members by |Q_i(f~)(z)| ascending; its first k+1 entries choose the
    // replacement chain.
    Rng rng = Rng::derive(seed, "smt-pointwise");
    double max_gap = -std::numeric_limits<double>::infinity();
    std::size_t accepted = 0;
    for (std::size_t s = 0; s < pointwise_samples; ++s) {
        const double th = rng.next_double() * kTau;
        const std::complex<double> z = std::polar(pointwise_radius, th);
        const double ln = log_norm(f.components, z);
        std::vector<double> mods(q);
        bool skip = false;
        for (std::size_t j = 0; j < q; ++j) {
            mods[j] = std::abs(Qf[j].eval(z));
            if (mods[j] == 0.0) skip = true;
        }
        if (skip) continue;
        std::vector<std::size_t> idx(q);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            if (mods[a] != mods[b]) return mods[a] < mods[b];
            return label_rank[a] < label_rank[b];
        });
        const std::vector<std::size_t> tuple(idx.begin(), idx.begin() + k + 1);
        const std::vector<GPoly>& chain = chain_for(tuple);

        double lhs = 0.0;
        for (std::size_t j = 0; j < q; ++j)
            lhs += static_cast<double>(d) * ln - std::log(mods[j]);
        double rhs = 0.0;
        for (int t = 0; t < n; ++t) {
            const double pv = std::abs(chain[t].eval(z));
            if (pv == 0.0) {
                skip = true;
                break;
            }
            rhs += static_cast<double>(d) * ln - std::log(pv);
        }
        if (skip) continue;
        const double gap = lhs - static_cast<double>(p) * rhs;
        if (!std::isfinite(gap)) continue;
        max_gap = std::max(max_gap, gap);
        ++accepted;
    }
    require(accepted > 0, ErrorKind::NumericFailure, "every pointwise sample was singular");
    rep.pointwise_max_gap = max_gap;
    rep.pointwise_samples = accepted;
    return rep;
}

DivisorCheckReport divisor_truncation_check(const MeromorphicCurve& f,
                                            const HypersurfaceFamily& family, int N, long long b) {
    f.validate();
    family.validate();
    const int n = f.n;
    require(family.n == n, ErrorKind::AmbientMismatch,
            "family and curve live in different projective spaces");
    const int k = family.k;
    require(k >= n, ErrorKind::InvalidInput, "position parameter k must be at least n");
    common_family_degree(family);
    require(N >= 1, ErrorKind::InvalidInput, "the auxiliary degree N must be positive");
    require(b >= 1, ErrorKind::InvalidInput, "the weight b must be positive");
    const std::size_t q = family.size();
    const long long p = k - n + 1;

    const std::vector<GPoly> Qf = compose_family(family, f);

    MonomialOrder ord(n, N);
    const std::size_t u = ord.size();
    std::vector<GPoly> phi(u);
    for (std::size_t l = 0; l < u; ++l)
        phi[l] = compose_hom(HomPoly::monomial(n, ord.at(l), Rational(1)), f.components);

    // Independence of phi_1(f~)..phi_u(f~) over C, checked by realifying the
    // coefficient matrix ([[Re, Im], [-Im, Re]] has twice the complex rank).
    int maxdeg = 0;
    for (const auto& g : phi) maxdeg = std::max(maxdeg, g.degree());
    const std::size_t cols = static_cast<std::size_t>(maxdeg) + 1;
    RatMatrix B(2 * u, 2 * cols);
    for (std::size_t l = 0; l < u; ++l)
        for (std::size_t c = 0; c < cols; ++c) {
            const GaussRational v = phi[l].coeff(c);
            B.at(l, c) = v.re;
            B.at(l, cols + c) = v.im;
            B.at(u + l, c) = -v.im;
            B.at(u + l, cols + c) = v.re;
        }
    if (rref_rank(B).second < 2 * u) {
        std::string msg = "the degree-N monomial basis composed with the curve is dependent";
        const RatMatrix ker = nullspace(B.transposed());
        if (ker.rows() > 0) {
            msg += ":";
            for (std::size_t l = 0; l < u; ++l) {
                const GaussRational c{ker.at(0, l), ker.at(0, u + l)};
                if (c.is_zero()) continue;
                msg += " + (" + c.str() + ")*phi[" + std::to_string(l) + "]";
            }
            msg += " = 0";
        }
        fail(ErrorKind::Dependence, msg);
    }

    std::vector<std::vector<GPoly>> W(u, std::vector<GPoly>(u));
    W[0] = phi;
    for (std::size_t i = 1; i < u; ++i)
        for (std::size_t l = 0; l < u; ++l) W[i][l] = W[i - 1][l].derivative();
    const GPoly wronskian = gpoly_det(std::move(W));
    require(!wronskian.is_zero(), ErrorKind::NumericFailure,
            "Wronskian vanished for an independent system");

    std::vector<GPoly> inputs = Qf;
    inputs.push_back(wronskian);
    const CoprimeFactorization<GaussRational> fact = gcd_free_basis(inputs);

    DivisorCheckReport rep;
    rep.u = u;
    rep.b = b;
    rep.p = p;
    for (std::size_t h = 0; h < fact.basis.size(); ++h) {
        if (fact.basis[h].degree() < 1) continue;
        DivisorCheckRow row;
        row.factor = fact.basis[h].str();
        row.factor_degree = fact.basis[h].degree();
        long long sum_nu = 0, sum_cap = 0;
        for (std::size_t j = 0; j < q; ++j) {
            const int nu = fact.exponents[j][h];
            row.nu_Q.push_back(nu);
            sum_nu += nu;
            sum_cap += std::min<long long>(static_cast<long long>(u) - 1, nu);
        }
        row.nu_W = fact.exponents[q][h];
        row.lhs = b * sum_nu - p * row.nu_W;
        row.rhs = b * sum_cap;
        row.ok = row.lhs <= row.rhs;
        rep.pass = rep.pass && row.ok;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace defectlab
