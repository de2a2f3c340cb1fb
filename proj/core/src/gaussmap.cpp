#include "defectlab/gaussmap.hpp"

#include <algorithm>
#include <utility>

#include "defectlab/unipoly.hpp"

namespace defectlab {

namespace {

// All m-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> lex_subsets(int n, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(m);
    for (int i = 0; i < m; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        int i = m;
        while (i > 0 && cur[i - 1] == n - m + (i - 1)) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (int j = i; j < m; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

} // namespace

void PolyImmersion::validate() const {
    require(m >= 1, ErrorKind::InvalidInput, "source dimension must be at least 1");
    require(n >= m, ErrorKind::InvalidInput, "target dimension must be at least the source dimension");
    require(components.size() == static_cast<std::size_t>(n), ErrorKind::InvalidInput,
            "immersion needs exactly n components");
    for (const auto& c : components)
        require(c.vars() == m, ErrorKind::AmbientMismatch,
                "every component must be a polynomial in the m source variables");
}

GaussRepresentation gauss_map(const PolyImmersion& f) {
    f.validate();

    // Jacobian rows D_i f = (df_1/dz_i, ..., df_n/dz_i), i = 1..m.
    std::vector<std::vector<MPoly>> J(f.m, std::vector<MPoly>(f.n, MPoly(f.m)));
    for (int i = 0; i < f.m; ++i)
        for (int j = 0; j < f.n; ++j) J[i][j] = f.components[j].derivative(i);

    GaussRepresentation g;
    g.m = f.m;
    g.n = f.n;
    g.column_subsets = lex_subsets(f.n, f.m);
    g.N_amb = static_cast<int>(g.column_subsets.size()) - 1;

    g.pluecker.reserve(g.column_subsets.size());
    for (const auto& cols : g.column_subsets) {
        std::vector<std::vector<MPoly>> sub(f.m, std::vector<MPoly>(f.m, MPoly(f.m)));
        for (int r = 0; r < f.m; ++r)
            for (int c = 0; c < f.m; ++c) sub[r][c] = J[r][cols[c]];
        g.pluecker.push_back(mpoly_det(sub));
    }

    MPoly gcd(f.m);
    bool any = false;
    for (const auto& p : g.pluecker) {
        if (p.is_zero()) continue;
        gcd = any ? mpoly_gcd(gcd, p) : p;
        any = true;
    }
    require(any, ErrorKind::Degeneracy,
            "not an immersion: every m x m Jacobian minor vanishes identically");

    if (gcd.total_degree() > 0) {
        for (auto& p : g.pluecker) {
            if (p.is_zero()) continue;
            auto q = mpoly_divide(p, gcd);
            require(q.has_value(), ErrorKind::NumericFailure, "gcd does not divide a minor");
            p = std::move(*q);
        }
    }
    g.removed_factor = gcd.total_degree() > 0 ? gcd : MPoly::constant(f.m, Rational(1));

    g.degenerate = true;
    for (const auto& p : g.pluecker)
        if (p.total_degree() > 0) g.degenerate = false;
    return g;
}

GaussPipelineReport gauss_defect_pipeline(const PolyImmersion& f, const HypersurfaceFamily& family,
                                          const Rational& eps, const Rational& rho,
                                          const RGrid& grid) {
    require(f.m == 1, ErrorKind::InvalidInput,
            "the defect pipeline needs a one-variable source (m = 1)");
    grid.validate();
    family.validate();

    GaussPipelineReport rep;
    rep.gauss = gauss_map(f);
    require(!rep.gauss.degenerate, ErrorKind::Degeneracy,
            "constant Gauss map: defects are undefined (the image is a point)");

    MeromorphicCurve G;
    G.n = rep.gauss.N_amb;
    G.components.reserve(rep.gauss.pluecker.size());
    for (const auto& p : rep.gauss.pluecker)
        G.components.push_back(p.is_zero() ? GPoly() : widen(to_unipoly(p)));
    G.validate();

    require(family.n == rep.gauss.N_amb, ErrorKind::AmbientMismatch,
            "family must live in the Pluecker ambient space P^{binom(n,m)-1}");
    const int N_amb = rep.gauss.N_amb;
    const int k = family.k;
    require(k >= N_amb, ErrorKind::InvalidInput,
            "position parameter k must be at least the ambient dimension");
    const int d = family.members.front().degree();
    for (const auto& Q : family.members)
        require(Q.degree() == d, ErrorKind::InvalidInput,
                "family must be normalized to one common degree");
    require(d >= 1, ErrorKind::InvalidInput, "family degree must be positive");

    const std::size_t q = family.size();
    if (q >= static_cast<std::size_t>(k) + 1) {
        const PositionCheck pc = check_subgeneral(family, k);
        require(pc.holds, ErrorKind::PositionViolation,
                "family is not in k-subgeneral position (violating subset found)");
        rep.position_checked = true;
    } else {
        rep.position_checked = false;
        rep.note = "fewer than k+1 members: the position condition is vacuous; ";
    }

    rep.params = theorem_parameters(N_amb, k, d, eps, rho);
    rep.rhs = rep.params.rhs_full;

    // Truncated defects at level u-1, exactly: for a polynomial Gauss curve
    // the limsup of N^[u-1]/(d T) is the slope ratio
    // sum(min(mult, u-1) * deg factor) / (d * maxdeg).
    const Int trunc = rep.params.u - 1;
    const long long growth = static_cast<long long>(d) * G.max_degree();
    for (std::size_t j = 0; j < q; ++j) {
        const GPoly Qg = compose_hom(family.members[j], G.components);
        require(!Qg.is_zero(), ErrorKind::Degeneracy,
                "the Gauss curve maps into a family member (defect undefined)");
        long long slope = 0;
        if (Qg.degree() > 0)
            for (const auto& [factor, mult] : yun_squarefree(Qg)) {
                long long capped = mult;
                if (Int(mult) > trunc) capped = trunc.get_si();
                slope += capped * factor.degree();
            }
        const double defect = Rational(Int(static_cast<long>(growth - slope)), Int(static_cast<long>(growth))).to_double();
        rep.defects.push_back({family.labels[j], defect});
        rep.defect_sum += defect;
    }
    rep.holds = rep.defect_sum <= rep.rhs.to_double() + 1e-9;

    // The theorem's displayed estimate u <= 3^{N+2} (d p (N+1)^2 I)^N; the
    // sharper base-e form is what the bounds module certifies.
    const Int base = Int(d) * rep.params.p * Int((N_amb + 1) * (N_amb + 1)) * rep.params.I_eps;
    rep.display_bound = int_pow(Int(3), static_cast<unsigned long>(N_amb) + 2) *
                        int_pow(base, static_cast<unsigned long>(N_amb));
    rep.display_bound_holds = rep.params.u <= rep.display_bound;
    rep.note += "the displayed base-3 coefficient exceeds the base-e bound certified separately";
    return rep;
}

} // namespace defectlab
