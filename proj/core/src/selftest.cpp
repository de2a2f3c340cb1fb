#include "defectlab/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "defectlab/bounds.hpp"
#include "defectlab/filtration.hpp"
#include "defectlab/gaussmap.hpp"
#include "defectlab/ideal.hpp"
#include "defectlab/nevanlinna.hpp"
#include "defectlab/position.hpp"
#include "defectlab/threads.hpp"
#include "defectlab/unipoly.hpp"
#include "defectlab/wronskian.hpp"

namespace defectlab {

namespace {

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// Nonzero random form of degree d in P^n, integer coefficients in [lo, hi].
HomPoly random_form(int n, int d, Rng& rng, long lo = -5, long hi = 5) {
    for (;;) {
        HomPoly p(n, d);
        const MonomialOrder ord(n, d);
        for (const auto& mono : ord.monomials())
            p.set_coeff(mono, Rational(static_cast<int>(rng.next_int(lo, hi))));
        if (!p.is_zero()) return p;
    }
}

// Nonzero random one-variable polynomial of degree <= maxdeg; about one
// coefficient in four picks up a small imaginary part.
GPoly random_gpoly(int maxdeg, Rng& rng) {
    for (;;) {
        const int deg = static_cast<int>(rng.next_int(0, maxdeg));
        std::vector<GaussRational> c(static_cast<std::size_t>(deg) + 1);
        for (auto& v : c) {
            const Rational re(static_cast<int>(rng.next_int(-4, 4)));
            const Rational im(rng.next_int(0, 3) == 0 ? static_cast<int>(rng.next_int(-2, 2)) : 0);
            v = GaussRational(re, im);
        }
        GPoly p(std::move(c));
        if (!p.is_zero()) return p;
    }
}

// Reduced nonconstant polynomial curve with all components nonzero.
MeromorphicCurve random_curve(int n, int maxdeg, Rng& rng) {
    for (int attempt = 0; attempt < 400; ++attempt) {
        MeromorphicCurve f;
        f.n = n;
        f.components.reserve(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) f.components.push_back(random_gpoly(maxdeg, rng));
        if (f.max_degree() < 1) continue;
        try {
            f.validate();
            return f;
        } catch (const Error&) {
            continue; // common root: redraw
        }
    }
    fail(ErrorKind::SearchFailure, "could not draw a reduced nonconstant curve");
}

// Nonzero random polynomial in m variables of total degree <= maxdeg.
MPoly random_mpoly(int m, int maxdeg, Rng& rng, long lo = -3, long hi = 3) {
    std::vector<MultiIndex> exps;
    MultiIndex cur(static_cast<std::size_t>(m), 0);
    const std::function<void(int, int)> walk = [&](int var, int left) {
        if (var == m) {
            exps.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[static_cast<std::size_t>(var)] = e;
            walk(var + 1, left - e);
        }
        cur[static_cast<std::size_t>(var)] = 0;
    };
    walk(0, maxdeg);
    for (;;) {
        MPoly p(m);
        for (const auto& e : exps)
            p.set_coeff(e, Rational(static_cast<int>(rng.next_int(lo, hi))));
        if (!p.is_zero()) return p;
    }
}

RGrid battery_grid() { return RGrid::geometric(2.0, 64.0, 24); }

// Aggregates per-job error strings: the criterion fails on the first one.
struct JobBoard {
    std::vector<std::string> errors;

    explicit JobBoard(std::size_t jobs) : errors(jobs) {}

    bool pass() const {
        return std::all_of(errors.begin(), errors.end(),
                           [](const std::string& e) { return e.empty(); });
    }
    std::string first_error() const {
        for (const auto& e : errors)
            if (!e.empty()) return e;
        return {};
    }
};

// --- criterion 1: Corvaja-Zannier jump law m_(i) = d^n in the stable range --

CriterionResult cz_dimension_law(std::uint64_t seed) {
    struct Cell {
        int n, d, N, fam;
    };
    std::vector<Cell> jobs;
    for (int n = 1; n <= 2; ++n)
        for (int d = 1; d <= 2; ++d)
            for (int N = d; N <= 12; N += d)
                for (int fam = 0; fam < 10; ++fam) jobs.push_back({n, d, N, fam});

    JobBoard board(jobs.size());
    std::vector<long long> stable_rows(jobs.size(), 0);
    parallel_for(jobs.size(), [&](std::size_t i) {
        const Cell& c = jobs[i];
        std::ostringstream tag;
        tag << "n=" << c.n << " d=" << c.d << " N=" << c.N << " family " << c.fam;
        Rng rng = Rng::derive(seed, "accept/cz/n=" + std::to_string(c.n) + "/d=" +
                                        std::to_string(c.d) + "/N=" + std::to_string(c.N) +
                                        "/fam=" + std::to_string(c.fam));
        try {
            bool built = false;
            for (int attempt = 0; attempt < 50 && !built; ++attempt) {
                std::vector<HomPoly> P;
                P.reserve(static_cast<std::size_t>(c.n));
                for (int j = 0; j < c.n; ++j) P.push_back(random_form(c.n, c.d, rng, -3, 3));
                FiltrationTable table;
                try {
                    table = build_filtration(P, c.N, true);
                } catch (const Error& e) {
                    if (e.kind() == ErrorKind::PositionViolation ||
                        e.kind() == ErrorKind::Degeneracy)
                        continue; // improper intersection: redraw
                    throw;
                }
                built = true;
                const CzReport rep = verify_cz(table);
                if (!rep.pass) {
                    board.errors[i] = "jump law broken at " + tag.str();
                    return;
                }
                for (const auto& row : rep.rows)
                    if (row.qualifies) ++stable_rows[i];
            }
            if (!built) board.errors[i] = "no proper family within 50 draws at " + tag.str();
        } catch (const std::exception& e) {
            board.errors[i] = tag.str() + ": " + e.what();
        }
    });

    CriterionResult res{1, "cz-dimension-law", board.pass(), ""};
    if (res.pass) {
        long long total = 0;
        for (long long v : stable_rows) total += v;
        res.detail = std::to_string(jobs.size()) + " certified filtrations, " +
                     std::to_string(total) + " stable-range jumps, every jump equal to d^n";
    } else {
        res.detail = board.first_error();
    }
    return res;
}

// --- criterion 2: emptiness verdicts vs. the binary-form gcd oracle --------

CriterionResult emptiness_oracle(std::uint64_t seed) {
    const std::size_t jobs = 200;
    JobBoard board(jobs);
    std::vector<int> verdicts(jobs, 0); // 1 = empty, 2 = nonempty
    parallel_for(jobs, [&](std::size_t i) {
        Rng rng = Rng::derive(seed, "accept/empty/" + std::to_string(i));
        try {
            const int q = static_cast<int>(rng.next_int(1, 4));
            const bool plant = q >= 2 && rng.next_int(0, 1) == 1;
            std::vector<HomPoly> gens;
            gens.reserve(static_cast<std::size_t>(q));
            if (plant) {
                const HomPoly ell = random_form(1, 1, rng);
                for (int j = 0; j < q; ++j) {
                    const int dj = static_cast<int>(rng.next_int(2, 4));
                    gens.push_back(ell * random_form(1, dj - 1, rng));
                }
            } else {
                for (int j = 0; j < q; ++j)
                    gens.push_back(random_form(1, static_cast<int>(rng.next_int(1, 4)), rng));
            }

            // Oracle: a common zero exists iff the dehomogenized forms share a
            // nonconstant gcd (zero of shape (1:t)) or all forms vanish at
            // (0:1) (zero coefficient on the pure x1 power).
            QPoly g;
            bool all_vanish_at_infinity = true;
            for (const auto& form : gens) {
                const int dj = form.degree();
                std::vector<Rational> c(static_cast<std::size_t>(dj) + 1);
                for (int b = 0; b <= dj; ++b) c[static_cast<std::size_t>(b)] =
                    form.coeff(MultiIndex{dj - b, b});
                const QPoly dehom{std::vector<Rational>(c)};
                g = g.is_zero() ? dehom : poly_gcd(g, dehom);
                if (!form.coeff(MultiIndex{0, dj}).is_zero()) all_vanish_at_infinity = false;
            }
            const bool oracle_nonempty = g.degree() >= 1 || all_vanish_at_infinity;

            const LocusResult loc = projective_locus(gens);
            if (loc.empty == oracle_nonempty) {
                board.errors[i] = "verdict mismatch on family " + std::to_string(i) +
                                  " (oracle says " + (oracle_nonempty ? "nonempty" : "empty") +
                                  ")";
                return;
            }
            if (!loc.empty && loc.dimension != 0) {
                board.errors[i] =
                    "nonempty locus in P^1 must have dimension 0 (family " + std::to_string(i) +
                    " reported " + std::to_string(loc.dimension) + ")";
                return;
            }
            verdicts[i] = loc.empty ? 1 : 2;
        } catch (const std::exception& e) {
            board.errors[i] = "family " + std::to_string(i) + ": " + e.what();
        }
    });

    CriterionResult res{2, "emptiness-oracle", board.pass(), ""};
    if (res.pass) {
        const long long empty_count = std::count(verdicts.begin(), verdicts.end(), 1);
        res.detail = "200 families, " + std::to_string(empty_count) + " empty / " +
                     std::to_string(200 - empty_count) +
                     " nonempty, all verdicts match the gcd oracle";
    } else {
        res.detail = board.first_error();
    }
    return res;
}

// --- criterion 3: hypersurface replacement construction --------------------

CriterionResult replacement_construction(std::uint64_t seed) {
    struct Combo {
        int n, k, d;
    };
    std::vector<Combo> combos;
    for (int n = 1; n <= 2; ++n)
        for (int k = n; k <= 4; ++k)
            for (int d = 1; d <= 2; ++d) combos.push_back({n, k, d});

    const std::size_t jobs = 100;
    JobBoard board(jobs);
    parallel_for(jobs, [&](std::size_t i) {
        const Combo c = combos[i % combos.size()];
        Rng rng = Rng::derive(seed, "accept/replace/" + std::to_string(i));
        std::ostringstream tag;
        tag << "case " << i << " (n=" << c.n << " k=" << c.k << " d=" << c.d << ")";
        try {
            const int q = c.k + 1;
            HypersurfaceFamily family;
            family.n = c.n;
            family.k = c.k;
            bool positioned = false;
            for (int attempt = 0; attempt < 60 && !positioned; ++attempt) {
                family.labels.clear();
                family.members.clear();
                for (int j = 0; j < q; ++j) {
                    family.labels.push_back("Q" + std::to_string(j + 1));
                    family.members.push_back(random_form(c.n, c.d, rng));
                }
                family.validate();
                positioned = check_subgeneral(family, c.k).holds;
            }
            if (!positioned) {
                board.errors[i] = "no k-subgeneral family within 60 draws for " + tag.str();
                return;
            }

            const std::uint64_t rseed = rng.next_u64();
            const ReplacementResult rr = replace_hypersurfaces(family, family.labels, rseed);

            std::map<std::string, const HomPoly*> by_label;
            for (std::size_t j = 0; j < family.size(); ++j)
                by_label[family.labels[j]] = &family.members[j];

            if (rr.source_labels.size() != static_cast<std::size_t>(c.k) + 1 ||
                std::set<std::string>(rr.source_labels.begin(), rr.source_labels.end()).size() !=
                    rr.source_labels.size()) {
                board.errors[i] = "source labels are not a (k+1)-subset in " + tag.str();
                return;
            }
            for (const auto& lab : rr.source_labels)
                if (by_label.find(lab) == by_label.end()) {
                    board.errors[i] = "unknown source label in " + tag.str();
                    return;
                }
            if (rr.outputs.size() != static_cast<std::size_t>(c.n) + 1 ||
                rr.combination.size() != static_cast<std::size_t>(c.n)) {
                board.errors[i] = "wrong output shape in " + tag.str();
                return;
            }

            // Span form: P_1 = Q_{i_1}; P_t = sum_{j=2}^{k-n+t} c_tj Q_{i_j}.
            if (!(rr.outputs[0] == *by_label.at(rr.source_labels[0]))) {
                board.errors[i] = "P_1 is not the first chosen member in " + tag.str();
                return;
            }
            for (int t = 2; t <= c.n + 1; ++t) {
                const auto& row = rr.combination[static_cast<std::size_t>(t) - 2];
                if (row.size() != static_cast<std::size_t>(c.k - c.n + t) - 1) {
                    board.errors[i] = "combination row size is off in " + tag.str();
                    return;
                }
                HomPoly expect(c.n, c.d);
                for (int j = 2; j <= c.k - c.n + t; ++j)
                    expect += row[static_cast<std::size_t>(j) - 2] *
                              *by_label.at(rr.source_labels[static_cast<std::size_t>(j) - 1]);
                if (!(rr.outputs[static_cast<std::size_t>(t) - 1] == expect)) {
                    board.errors[i] = "span form broken at t=" + std::to_string(t) + " in " +
                                      tag.str();
                    return;
                }
            }

            // Prefix dimension chain and final emptiness, re-certified.
            if (rr.prefix_dimension.size() != static_cast<std::size_t>(c.n) + 1) {
                board.errors[i] = "prefix chain has wrong length in " + tag.str();
                return;
            }
            for (int t = 1; t <= c.n + 1; ++t)
                if (rr.prefix_dimension[static_cast<std::size_t>(t) - 1] > c.n - t) {
                    board.errors[i] = "prefix dimension exceeds n-t at t=" + std::to_string(t) +
                                      " in " + tag.str();
                    return;
                }
            if (!projective_locus(rr.outputs).empty) {
                board.errors[i] = "outputs have a common zero in " + tag.str();
                return;
            }
        } catch (const std::exception& e) {
            board.errors[i] = tag.str() + ": " + e.what();
        }
    });

    CriterionResult res{3, "replacement-construction", board.pass(), ""};
    res.detail = res.pass ? "100 constructions: span form, prefix chain dim <= n-t, and empty "
                            "final locus all certified"
                          : board.first_error();
    return res;
}

// --- criterion 4: parameter lemma over the (n, k, d, eps) grid --------------

CriterionResult lemma_new_bounds(std::uint64_t) {
    const Rational eps_list[4] = {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2)};
    int points = 0;
    for (int n = 1; n <= 4; ++n)
        for (int k = n; k <= 6; ++k)
            for (int d = 1; d <= 3; ++d)
                for (const auto& eps : eps_list) {
                    const ParameterSet ps = theorem_parameters(n, k, d, eps, Rational(0));
                    const LemmaNewReport rep = verify_lemma_new(ps);
                    if (!(rep.a_pass && rep.b_pass && rep.roundings_agree)) {
                        std::ostringstream what;
                        what << "inequality failed at n=" << n << " k=" << k << " d=" << d
                             << " eps=" << eps.str() << " (a=" << rep.a_pass
                             << " b=" << rep.b_pass << ")";
                        return {4, "lemma-new-bounds", false, what.str()};
                    }
                    ++points;
                }

    const ParameterSet spot = theorem_parameters(1, 1, 1, Rational(1), Rational(0));
    if (spot.N != Int(18) || spot.u != Int(19))
        return {4, "lemma-new-bounds", false,
                "spot values off: N=" + spot.N.get_str() + " u=" + spot.u.get_str() +
                    " (want 18, 19)"};

    return {4, "lemma-new-bounds", true,
            std::to_string(points) +
                " grid points verified exactly; spot check N=18, u=19 reproduced"};
}

// --- criterion 5: First Main Theorem residual flatness ----------------------

struct FmtDraw {
    MeromorphicCurve f;
    HomPoly Q{0, 1};
    std::uint64_t jitter_seed = 0;
};

// Draws a pair whose composed roots keep |log(|a|/r)| >= 2e-3 from every grid
// radius, so trapezoidal quadrature meets the 1e-5 budget.
FmtDraw draw_separated_pair(int n, int d, Rng& rng, const RGrid& grid) {
    for (int attempt = 0; attempt < 300; ++attempt) {
        FmtDraw draw;
        draw.f = random_curve(n, 4, rng);
        draw.Q = random_form(n, d, rng);
        const GPoly Qf = compose_hom(draw.Q, draw.f.components);
        if (Qf.is_zero()) continue;
        bool separated = true;
        for (const auto& [root, mult] : roots_with_multiplicity(Qf)) {
            (void)mult;
            const double a = std::abs(root);
            if (a == 0.0) continue;
            for (double r : grid.radii)
                if (std::abs(std::log(a / r)) < 2e-3) separated = false;
            if (std::abs(std::log(a / grid.r0)) < 2e-3) separated = false;
        }
        if (!separated) continue;
        draw.jitter_seed = rng.next_u64();
        return draw;
    }
    fail(ErrorKind::SearchFailure, "no root-separated (curve, hypersurface) pair in 300 draws");
}

CriterionResult fmt_residual(std::uint64_t seed) {
    const RGrid grid = battery_grid();
    const std::size_t jobs = 20;
    JobBoard board(jobs);
    std::vector<double> variation(jobs, 0.0);
    parallel_for(jobs, [&](std::size_t i) {
        Rng rng = Rng::derive(seed, "accept/fmt/" + std::to_string(i));
        try {
            const int n = 1 + static_cast<int>(i % 3);
            const int d = 1 + static_cast<int>(i % 2);
            const FmtDraw draw = draw_separated_pair(n, d, rng, grid);
            const FmtReport rep =
                fmt_report(draw.f, draw.Q, grid, std::nullopt, draw.jitter_seed);
            variation[i] = rep.residual_variation;
            if (!(rep.residual_variation <= 1e-5))
                board.errors[i] = "pair " + std::to_string(i) + " residual variation " +
                                  fmt6(rep.residual_variation) + " exceeds 1e-5";
        } catch (const std::exception& e) {
            board.errors[i] = "pair " + std::to_string(i) + ": " + e.what();
        }
    });

    CriterionResult res{5, "fmt-residual", board.pass(), ""};
    if (res.pass) {
        const double worst = *std::max_element(variation.begin(), variation.end());
        res.detail = "20 pairs, worst dT - m - N variation " + fmt6(worst) + " (budget 1e-05)";
    } else {
        res.detail = board.first_error();
    }
    return res;
}

// --- criterion 6: Wronskian scaling law -------------------------------------

bool downward_closed(const std::vector<MultiIndex>& alphas) {
    const std::set<MultiIndex> have(alphas.begin(), alphas.end());
    for (const auto& a : alphas)
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > 0) {
                MultiIndex b = a;
                --b[i];
                if (have.find(b) == have.end()) return false;
            }
    return true;
}

CriterionResult wronskian_scaling(std::uint64_t seed) {
    const std::size_t jobs = 25;
    JobBoard board(jobs);
    std::vector<int> dims(jobs, 0);
    parallel_for(jobs, [&](std::size_t i) {
        Rng rng = Rng::derive(seed, "accept/wronskian/" + std::to_string(i));
        const int m = (i % 5 < 3) ? 1 : 2;
        try {
            bool done = false;
            for (int attempt = 0; attempt < 100 && !done; ++attempt) {
                const int count = m == 1 ? 2 + static_cast<int>(i % 3)
                                         : 3 + static_cast<int>(i % 2);
                SymbolicTuple F;
                F.m = m;
                for (int j = 0; j < count; ++j)
                    F.entries.push_back(random_mpoly(m, m == 1 ? 3 : 2, rng));
                AdmissibleSet A;
                try {
                    A = admissible_search(F);
                } catch (const Error& e) {
                    if (e.kind() == ErrorKind::Dependence) continue;
                    throw;
                }
                // The scaling identity is exact precisely for downward-closed
                // index sets; the greedy search yields them generically.
                if (!downward_closed(A.alphas)) continue;

                const MPoly h = random_mpoly(m, 2, rng);
                const MPoly WF = wronskian_symbolic(F, A);
                SymbolicTuple hF;
                hF.m = m;
                for (const auto& e : F.entries) hF.entries.push_back(h * e);
                const MPoly WhF = wronskian_symbolic(hF, A);
                if (!(WhF == h.pow(static_cast<unsigned>(count)) * WF)) {
                    board.errors[i] = "scaling identity broken in case " + std::to_string(i) +
                                      " (m=" + std::to_string(m) + ", L+1=" +
                                      std::to_string(count) + ")";
                    return;
                }
                dims[i] = m;
                done = true;
            }
            if (!done)
                board.errors[i] =
                    "no independent tuple with downward-closed indices in case " +
                    std::to_string(i);
        } catch (const std::exception& e) {
            board.errors[i] = "case " + std::to_string(i) + ": " + e.what();
        }
    });

    CriterionResult res{6, "wronskian-scaling", board.pass(), ""};
    if (res.pass) {
        const long long two = std::count(dims.begin(), dims.end(), 2);
        res.detail = "25 exact identities W(hF) = h^{L+1} W(F) (" +
                     std::to_string(25 - two) + " one-variable, " + std::to_string(two) +
                     " two-variable, downward-closed index sets)";
    } else {
        res.detail = board.first_error();
    }
    return res;
}

// --- criterion 7: Veronese growth T_F = d T_f + O(1) ------------------------

CriterionResult veronese_growth(std::uint64_t seed) {
    const RGrid grid = battery_grid();
    const int cells[4][2] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    const std::size_t jobs = 20;
    JobBoard board(jobs);
    std::vector<double> variation(jobs, 0.0);
    parallel_for(jobs, [&](std::size_t i) {
        const int n = cells[i % 4][0];
        const int d = cells[i % 4][1];
        Rng rng = Rng::derive(seed, "accept/veronese/" + std::to_string(i));
        try {
            const MeromorphicCurve f = random_curve(n, 3, rng);
            const MonomialOrder ord(n, d);
            std::vector<HomPoly> L;
            std::vector<double> w;
            for (const auto& mono : ord.monomials()) {
                L.push_back(HomPoly::monomial(n, mono, Rational(1)));
                Rational coef(factorial(static_cast<unsigned long>(d)));
                for (int e : mono) coef /= Rational(factorial(static_cast<unsigned long>(e)));
                // sqrt(multinomial) weights make ||F~||^2 = ||f~||^{2d} exact.
                w.push_back(std::sqrt(coef.to_double()));
            }
            const VeroneseReport rep = veronese_check(f, L, grid, w);
            variation[i] = rep.variation;
            if (!(rep.variation <= 1e-5))
                board.errors[i] = "cell (n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                                  ") variation " + fmt6(rep.variation) + " exceeds 1e-5";
        } catch (const std::exception& e) {
            board.errors[i] = "case " + std::to_string(i) + ": " + e.what();
        }
    });

    CriterionResult res{7, "veronese-growth", board.pass(), ""};
    if (res.pass) {
        const double worst = *std::max_element(variation.begin(), variation.end());
        res.detail = "20 weighted Veronese checks, worst |T_F - d T_f| variation " + fmt6(worst);
    } else {
        res.detail = board.first_error();
    }
    return res;
}

// --- criterion 8: divisor truncation inequality ------------------------------

// The filtration weight b obtained the long way: replacement plus filtration
// for every (k+1)-subset, then the minimum weight.
long long honest_weight(const HypersurfaceFamily& family, int N, std::uint64_t seed) {
    const int n = family.n;
    const int k = family.k;
    const std::size_t q = family.size();
    std::vector<std::size_t> idx(static_cast<std::size_t>(k) + 1);
    for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = j;
    std::vector<FiltrationTable> tables;
    for (;;) {
        std::vector<std::string> subset;
        for (std::size_t j : idx) subset.push_back(family.labels[j]);
        const ReplacementResult rr = replace_hypersurfaces(family, subset, seed);
        std::vector<HomPoly> P(rr.outputs.begin(), rr.outputs.begin() + n);
        tables.push_back(build_filtration(P, N, true));
        // next (k+1)-combination of {0..q-1}
        std::size_t t = idx.size();
        while (t > 0 && idx[t - 1] == q - idx.size() + (t - 1)) --t;
        if (t == 0) break;
        ++idx[t - 1];
        for (std::size_t j = t; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
    }
    return weight_summary(tables).b;
}

CriterionResult divisor_truncation(std::uint64_t seed) {
    try {
        // Hand case: f = (1, z^3) against {x0, x1, x0 + x1} with N = 2.  The
        // basis (1, z^3, z^6) has Wronskian 54 z^6; the z-row reads
        // 3*3 - 1*6 = 3 <= 3*min(2,3) = 6 and exercises the truncation.
        MeromorphicCurve f3;
        f3.n = 1;
        f3.components = {GPoly({GaussRational(1)}),
                         GPoly({GaussRational(0), GaussRational(0), GaussRational(0),
                                GaussRational(1)})};
        HypersurfaceFamily lines;
        lines.n = 1;
        lines.k = 1;
        lines.labels = {"Q1", "Q2", "Q3"};
        lines.members = {HomPoly::variable(1, 0), HomPoly::variable(1, 1),
                         HomPoly::variable(1, 0) + HomPoly::variable(1, 1)};
        lines.validate();
        const long long b_hand = honest_weight(lines, 2, seed);
        if (b_hand != 3)
            return {8, "divisor-truncation", false,
                    "hand case weight b = " + std::to_string(b_hand) + ", expected 3"};
        const DivisorCheckReport hand = divisor_truncation_check(f3, lines, 2, b_hand);
        if (!hand.pass || hand.u != 3)
            return {8, "divisor-truncation", false, "hand case inequality failed"};
        bool saw_truncation = false;
        for (const auto& row : hand.rows)
            for (int nu : row.nu_Q)
                if (nu >= static_cast<int>(hand.u)) saw_truncation = true;
        if (!saw_truncation)
            return {8, "divisor-truncation", false,
                    "hand case lost its multiplicity >= u zero"};

        // Random line batteries in P^1 (N alternating 2, 3) plus one conic
        // battery in P^2.
        int zero_rows = static_cast<int>(hand.rows.size());
        for (std::size_t i = 0; i < 6; ++i) {
            Rng rng = Rng::derive(seed, "accept/divisor/" + std::to_string(i));
            HypersurfaceFamily fam;
            fam.n = 1;
            fam.k = 1;
            for (int attempt = 0;; ++attempt) {
                if (attempt >= 60)
                    return {8, "divisor-truncation", false,
                            "no subgeneral line family in 60 draws (case " +
                                std::to_string(i) + ")"};
                fam.labels = {"Q1", "Q2", "Q3"};
                fam.members.clear();
                for (int j = 0; j < 3; ++j) fam.members.push_back(random_form(1, 1, rng));
                fam.validate();
                if (check_subgeneral(fam, 1).holds) break;
            }
            MeromorphicCurve f = random_curve(1, 3, rng);
            const int N = 2 + static_cast<int>(i % 2);
            const long long b = honest_weight(fam, N, rng.next_u64());
            const DivisorCheckReport rep = divisor_truncation_check(f, fam, N, b);
            if (!rep.pass)
                return {8, "divisor-truncation", false,
                        "line battery " + std::to_string(i) + " failed (b=" +
                            std::to_string(b) + ", N=" + std::to_string(N) + ")"};
            zero_rows += static_cast<int>(rep.rows.size());
        }

        Rng rng = Rng::derive(seed, "accept/divisor/n2");
        HypersurfaceFamily conics;
        conics.n = 2;
        conics.k = 2;
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 60)
                return {8, "divisor-truncation", false, "no subgeneral conic family in 60 draws"};
            conics.labels = {"Q1", "Q2", "Q3"};
            conics.members.clear();
            for (int j = 0; j < 3; ++j) conics.members.push_back(random_form(2, 2, rng));
            conics.validate();
            if (check_subgeneral(conics, 2).holds) break;
        }
        const long long b2 = honest_weight(conics, 2, rng.next_u64());
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 60)
                return {8, "divisor-truncation", false,
                        "no nondegenerate curve for the conic battery in 60 draws"};
            const MeromorphicCurve f = random_curve(2, 3, rng);
            DivisorCheckReport rep;
            try {
                rep = divisor_truncation_check(f, conics, 2, b2);
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::Degeneracy || e.kind() == ErrorKind::Dependence)
                    continue; // curve linearly degenerate w.r.t. V_2: redraw
                throw;
            }
            if (!rep.pass)
                return {8, "divisor-truncation", false,
                        "conic battery failed (b=" + std::to_string(b2) + ")"};
            zero_rows += static_cast<int>(rep.rows.size());
            break;
        }

        return {8, "divisor-truncation", true,
                "hand case (b=3, truncated multiplicity-3 zero) plus 6 line and 1 conic "
                "batteries: " +
                    std::to_string(zero_rows) + " factor rows, all exact"};
    } catch (const std::exception& e) {
        return {8, "divisor-truncation", false, e.what()};
    }
}

// --- criterion 9: pointwise chain gap stability ------------------------------

CriterionResult pointwise_chain(std::uint64_t seed) {
    try {
        MeromorphicCurve f;
        f.n = 1;
        f.components = {GPoly({GaussRational(1)}), GPoly({GaussRational(0), GaussRational(1)})};
        HypersurfaceFamily fam;
        fam.n = 1;
        fam.k = 1;
        fam.labels = {"Q1", "Q2", "Q3"};
        fam.members = {HomPoly::variable(1, 0), HomPoly::variable(1, 1),
                       HomPoly::variable(1, 0) + HomPoly::variable(1, 1)};
        fam.validate();
        const RGrid grid = RGrid::geometric(2.0, 8.0, 4, 1.0, 1024);

        const SmtReport rep1 = smt_margin(f, fam, Rational(1, 2), 4, grid, seed, 10000, 2.0);
        const SmtReport rep2 = smt_margin(f, fam, Rational(1, 2), 4, grid, seed, 20000, 2.0);

        if (rep1.b != 10 || rep1.u != 5 || rep1.p != 1 ||
            !(rep1.coefficient_exact == Rational(1)))
            return {9, "pointwise-chain", false,
                    "scenario constants off: b=" + std::to_string(rep1.b) + " u=" +
                        std::to_string(rep1.u) + " coeff=" + rep1.coefficient_exact.str()};
        if (rep1.vacuous || !rep1.p_le_b)
            return {9, "pointwise-chain", false, "scenario flags off (vacuous or p > b)"};

        const double g1 = rep1.pointwise_max_gap;
        const double g2 = rep2.pointwise_max_gap;
        if (!std::isfinite(g1) || !std::isfinite(g2))
            return {9, "pointwise-chain", false, "gap maximum is not finite"};
        if (g2 < g1)
            return {9, "pointwise-chain", false,
                    "doubling samples lowered the maximum (seeded prefix property broken)"};
        const double change = (g2 - g1) / std::max(std::abs(g1), 1e-12);
        if (!(change < 0.01))
            return {9, "pointwise-chain", false,
                    "gap moved " + fmt6(100.0 * change) + "% when samples doubled"};

        for (std::size_t i = 0; i + 1 < rep1.margin.size(); ++i)
            if (!(rep1.margin[i + 1] >= rep1.margin[i] - 1e-9))
                return {9, "pointwise-chain", false, "integrated margin is not increasing"};
        if (!(rep1.margin.back() > 0.0))
            return {9, "pointwise-chain", false, "integrated margin tail is not positive"};

        return {9, "pointwise-chain", true,
                "max gap " + fmt6(g1) + " at 10^4 samples, " + fmt6(g2) + " at 2x10^4 (" +
                    fmt6(100.0 * change) + "% move); margin increasing, b=10, u=5"};
    } catch (const std::exception& e) {
        return {9, "pointwise-chain", false, e.what()};
    }
}

// --- criterion 10: profile invariants (monotonicity, truncation, sandwich) --

CriterionResult profile_invariants(std::uint64_t seed) {
    const RGrid grid = battery_grid();
    const std::size_t jobs = 10;
    JobBoard board(jobs);
    parallel_for(jobs, [&](std::size_t i) {
        Rng rng = Rng::derive(seed, "accept/profiles/" + std::to_string(i));
        try {
            const int n = 1 + static_cast<int>(i % 3);
            const int d = 1 + static_cast<int>(i % 2);
            MeromorphicCurve f;
            HomPoly Q(n, d);
            for (int attempt = 0;; ++attempt) {
                if (attempt >= 100) {
                    board.errors[i] = "no nondegenerate pair in 100 draws (profile " +
                                      std::to_string(i) + ")";
                    return;
                }
                f = random_curve(n, 4, rng);
                Q = random_form(n, d, rng);
                if (!compose_hom(Q, f.components).is_zero()) break;
            }
            const std::uint64_t jseed = rng.next_u64();
            const FmtReport full = fmt_report(f, Q, grid, std::nullopt, jseed);
            const FmtReport t1 = fmt_report(f, Q, grid, Int(1), jseed);
            const FmtReport t3 = fmt_report(f, Q, grid, Int(3), jseed);

            auto bad = [&](const std::string& what) {
                board.errors[i] = "profile " + std::to_string(i) + ": " + what;
            };
            for (std::size_t j = 0; j + 1 < full.r.size(); ++j) {
                if (!(full.T[j + 1] >= full.T[j] - 1e-9)) return bad("T not nondecreasing");
                if (!(full.N_full[j + 1] >= full.N_full[j])) return bad("N not nondecreasing");
                if (!(t1.N_trunc[j + 1] >= t1.N_trunc[j]))
                    return bad("N^[1] not nondecreasing");
                if (!(t3.N_trunc[j + 1] >= t3.N_trunc[j]))
                    return bad("N^[3] not nondecreasing");
            }
            for (std::size_t j = 0; j < full.r.size(); ++j) {
                if (!(t1.N_trunc[j] <= t3.N_trunc[j] && t3.N_trunc[j] <= full.N_full[j]))
                    return bad("truncation chain N^[1] <= N^[3] <= N broken");
                if (!(t3.N_trunc[j] <= 3.0 * t1.N_trunc[j] + 1e-9))
                    return bad("N^[3] <= 3 N^[1] broken");
            }
            for (const FmtReport* rep : {&full, &t1, &t3})
                if (!(rep->defect >= -1e-3 && rep->defect <= 1.0 + 1e-3))
                    return bad("defect " + fmt6(rep->defect) + " outside [0,1] sandwich");
            if (!(t1.defect >= t3.defect && t3.defect >= full.defect))
                return bad("defect ordering delta^[1] >= delta^[3] >= delta broken");
        } catch (const std::exception& e) {
            board.errors[i] = "profile " + std::to_string(i) + ": " + e.what();
        }
    });

    CriterionResult res{10, "profile-invariants", board.pass(), ""};
    res.detail = res.pass ? "10 profiles x levels {1, 3, inf}: T and N monotone, truncation "
                            "chains exact, defects inside [0,1]"
                          : board.first_error();
    return res;
}

// --- criterion 11: Gauss map minors and the Pluecker relation ----------------

CriterionResult gauss_pluecker(std::uint64_t seed) {
    const int shapes[8][2] = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4}, {2, 4}};
    const std::size_t jobs = 20;
    JobBoard board(jobs);
    std::vector<int> relations(jobs, 0);
    parallel_for(jobs, [&](std::size_t i) {
        const int m = shapes[i % 8][0];
        const int n = shapes[i % 8][1];
        Rng rng = Rng::derive(seed, "accept/gauss/" + std::to_string(i));
        try {
            PolyImmersion f;
            GaussRepresentation g;
            for (int attempt = 0;; ++attempt) {
                if (attempt >= 100) {
                    board.errors[i] = "no immersion with a nonzero minor in 100 draws (case " +
                                      std::to_string(i) + ")";
                    return;
                }
                f.m = m;
                f.n = n;
                f.components.clear();
                for (int j = 0; j < n; ++j) f.components.push_back(random_mpoly(m, 3, rng));
                try {
                    g = gauss_map(f);
                    break;
                } catch (const Error& e) {
                    if (e.kind() == ErrorKind::Degeneracy) continue;
                    throw;
                }
            }

            // Independent oracle: permutation-expansion minors of the Jacobian.
            std::vector<std::vector<MPoly>> J(
                static_cast<std::size_t>(m),
                std::vector<MPoly>(static_cast<std::size_t>(n), MPoly(m)));
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < n; ++c) J[r][c] = f.components[c].derivative(r);

            std::vector<std::vector<int>> subsets;
            if (m == 1)
                for (int a = 0; a < n; ++a) subsets.push_back({a});
            else
                for (int a = 0; a < n; ++a)
                    for (int b = a + 1; b < n; ++b) subsets.push_back({a, b});

            if (g.column_subsets != subsets ||
                g.N_amb != static_cast<int>(subsets.size()) - 1) {
                board.errors[i] = "subset enumeration off in case " + std::to_string(i);
                return;
            }
            for (std::size_t s = 0; s < subsets.size(); ++s) {
                const MPoly raw =
                    m == 1 ? J[0][static_cast<std::size_t>(subsets[s][0])]
                           : J[0][static_cast<std::size_t>(subsets[s][0])] *
                                     J[1][static_cast<std::size_t>(subsets[s][1])] -
                                 J[0][static_cast<std::size_t>(subsets[s][1])] *
                                     J[1][static_cast<std::size_t>(subsets[s][0])];
                if (!(raw == g.pluecker[s] * g.removed_factor)) {
                    board.errors[i] = "minor " + std::to_string(s) +
                                      " disagrees with the expansion oracle in case " +
                                      std::to_string(i);
                    return;
                }
            }

            if (m == 2 && n == 4) {
                const MPoly rel = g.pluecker[0] * g.pluecker[5] -
                                  g.pluecker[1] * g.pluecker[4] +
                                  g.pluecker[2] * g.pluecker[3];
                if (!rel.is_zero()) {
                    board.errors[i] =
                        "Pluecker relation nonzero in case " + std::to_string(i);
                    return;
                }
                relations[i] = 1;
            }
        } catch (const std::exception& e) {
            board.errors[i] = "case " + std::to_string(i) + ": " + e.what();
        }
    });

    CriterionResult res{11, "gauss-pluecker", board.pass(), ""};
    if (res.pass) {
        const long long rels = std::count(relations.begin(), relations.end(), 1);
        res.detail = "20 immersions match the expansion oracle; " + std::to_string(rels) +
                     " Pluecker relations identically zero";
    } else {
        res.detail = board.first_error();
    }
    return res;
}

} // namespace

CriterionResult run_criterion(int index, std::uint64_t seed) {
    try {
        switch (index) {
        case 1: return cz_dimension_law(seed);
        case 2: return emptiness_oracle(seed);
        case 3: return replacement_construction(seed);
        case 4: return lemma_new_bounds(seed);
        case 5: return fmt_residual(seed);
        case 6: return wronskian_scaling(seed);
        case 7: return veronese_growth(seed);
        case 8: return divisor_truncation(seed);
        case 9: return pointwise_chain(seed);
        case 10: return profile_invariants(seed);
        case 11: return gauss_pluecker(seed);
        default:
            fail(ErrorKind::InvalidInput,
                 "criterion index must be 1.." + std::to_string(criterion_count));
        }
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        return {index, "criterion-" + std::to_string(index), false, e.what()};
    }
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
    std::vector<CriterionResult> out;
    out.reserve(criterion_count);
    for (int i = 1; i <= criterion_count; ++i) out.push_back(run_criterion(i, seed));
    return out;
}

} // namespace defectlab
