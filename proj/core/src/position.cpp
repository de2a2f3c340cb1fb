#include "defectlab/position.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace defectlab {

void HypersurfaceFamily::validate() const {
    require(n >= 1, ErrorKind::InvalidInput, "ambient dimension must be >= 1");
    require(!members.empty(), ErrorKind::InvalidInput, "empty family");
    require(labels.size() == members.size(), ErrorKind::InvalidInput, "label/member count mismatch");
    std::set<std::string> seen;
    for (const auto& l : labels)
        require(seen.insert(l).second, ErrorKind::InvalidInput, "duplicate label: " + l);
    for (std::size_t i = 0; i < members.size(); ++i) {
        require(!members[i].is_zero(), ErrorKind::InvalidInput,
                "zero polynomial member: " + labels[i]);
        require(members[i].n() == n, ErrorKind::AmbientMismatch,
                "member in wrong ambient space: " + labels[i]);
    }
}

std::pair<HypersurfaceFamily, int> normalize_degrees(const HypersurfaceFamily& family) {
    family.validate();
    Int d(1);
    for (const auto& q : family.members) {
        require(q.degree() >= 1, ErrorKind::InvalidInput, "member of degree 0 cannot be normalized");
        d = int_lcm(d, Int(q.degree()));
    }
    int dd = static_cast<int>(d.get_si());
    HypersurfaceFamily out = family;
    for (auto& q : out.members) q = q.pow(static_cast<unsigned>(dd / q.degree()));
    return {out, dd};
}

namespace {

int common_degree(const HypersurfaceFamily& family) {
    int d = family.members.front().degree();
    for (const auto& q : family.members)
        require(q.degree() == d, ErrorKind::InvalidInput,
                "family degrees are not normalized (run normalize_degrees first)");
    return d;
}

std::vector<std::size_t> label_sorted_indices(const HypersurfaceFamily& family) {
    std::vector<std::size_t> idx(family.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return family.labels[a] < family.labels[b]; });
    return idx;
}

} // namespace

PositionCheck check_subgeneral(const HypersurfaceFamily& family, int k) {
    family.validate();
    require(k >= family.n, ErrorKind::InvalidInput, "position parameter k must be >= n");
    require(family.size() >= static_cast<std::size_t>(k) + 1, ErrorKind::InvalidInput,
            "need at least k+1 members");
    common_degree(family);

    std::vector<std::size_t> order = label_sorted_indices(family);
    std::size_t q = family.size(), r = static_cast<std::size_t>(k) + 1;

    // Enumerate (k+1)-subsets in lexicographic label order; first violation wins.
    std::vector<std::size_t> pick(r);
    std::iota(pick.begin(), pick.end(), 0u);
    for (;;) {
        std::vector<HomPoly> gens;
        gens.reserve(r);
        for (std::size_t i : pick) gens.push_back(family.members[order[i]]);
        if (!projective_locus(gens).empty) {
            PositionCheck out;
            out.holds = false;
            for (std::size_t i : pick) out.violating.push_back(family.labels[order[i]]);
            return out;
        }
        // next combination
        std::size_t i = r;
        while (i-- > 0) {
            if (pick[i] != i + q - r) {
                ++pick[i];
                for (std::size_t j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
                break;
            }
            if (i == 0) return PositionCheck{};
        }
    }
}

ReplacementResult replace_hypersurfaces(const HypersurfaceFamily& family,
                                        const std::vector<std::string>& subset,
                                        std::uint64_t seed, int retry_budget) {
    family.validate();
    int n = family.n, k = family.k;
    require(k >= n, ErrorKind::InvalidInput, "position parameter k must be >= n");
    require(subset.size() == static_cast<std::size_t>(k) + 1, ErrorKind::InvalidInput,
            "replacement needs exactly k+1 labels");

    std::vector<HomPoly> chosen;
    for (const auto& label : subset) {
        auto it = std::find(family.labels.begin(), family.labels.end(), label);
        require(it != family.labels.end(), ErrorKind::InvalidInput, "unknown label: " + label);
        chosen.push_back(family.members[it - family.labels.begin()]);
    }
    int d = chosen.front().degree();
    for (const auto& qp : chosen)
        require(qp.degree() == d, ErrorKind::InvalidInput, "subset members must share one degree");

    require(projective_locus(chosen).empty, ErrorKind::PositionViolation,
            "chosen k+1 members have a nonempty common locus");

    ReplacementResult res;
    res.source_labels = subset;
    res.seed = seed;
    res.outputs.push_back(chosen[0]); // P_1 = Q_{i_1}
    {
        LocusResult l1 = projective_locus({chosen[0]});
        res.prefix_dimension.push_back(l1.empty ? -1 : l1.dimension);
    }

    for (int t = 2; t <= n + 1; ++t) {
        int hi = k - n + t; // combination over Q_{i_2}..Q_{i_hi}
        bool accepted = false;
        for (int attempt = 1; attempt <= retry_budget && !accepted; ++attempt) {
            Rng rng = Rng::derive(seed, "replace/t=" + std::to_string(t) +
                                            "/r=" + std::to_string(attempt));
            long bound = 10L * attempt;
            std::vector<Rational> c;
            HomPoly cand(family.n, d);
            for (int j = 2; j <= hi; ++j) {
                Rational cj(static_cast<int>(rng.next_int(-bound, bound)));
                c.push_back(cj);
                cand += cj * chosen[static_cast<std::size_t>(j) - 1];
            }
            ++res.retries_used;
            if (cand.is_zero()) continue;

            std::vector<HomPoly> prefix(res.outputs.begin(), res.outputs.end());
            prefix.push_back(cand);
            LocusResult loc = projective_locus(prefix);
            int dim = loc.empty ? -1 : loc.dimension;
            if (dim <= n - t) {
                res.outputs.push_back(cand);
                res.combination.push_back(std::move(c));
                res.prefix_dimension.push_back(dim);
                accepted = true;
            }
        }
        if (!accepted) {
            std::ostringstream os;
            os << "replacement step t=" << t << " exhausted " << retry_budget
               << " retries; partial chain:";
            for (const auto& p : res.outputs) os << " [" << p.str() << "]";
            fail(ErrorKind::SearchFailure, os.str());
        }
    }
    return res;
}

PositionConstants position_constants(const HypersurfaceFamily& family, std::size_t samples,
                                     std::uint64_t seed, double floor) {
    family.validate();
    int d = common_degree(family);
    int n = family.n;

    auto h_of = [&](const std::vector<std::complex<double>>& x) {
        double norm2 = 0.0;
        for (const auto& v : x) norm2 += std::norm(v);
        double norm = std::sqrt(norm2);
        double best = 0.0;
        for (const auto& q : family.members)
            best = std::max(best, std::abs(q.eval(std::span<const std::complex<double>>(x))));
        return best / std::pow(norm, d);
    };

    PositionConstants out;
    out.samples = samples;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;

    auto account = [&](double h) {
        lo = std::min(lo, h);
        hi = std::max(hi, h);
        if (h < floor) out.warning = true;
    };

    for (int i = 0; i <= n; ++i) { // coordinate points e_0..e_n
        std::vector<std::complex<double>> x(n + 1, {0.0, 0.0});
        x[i] = {1.0, 0.0};
        account(h_of(x));
    }

    Rng rng = Rng::derive(seed, "position-constants");
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<std::complex<double>> x(n + 1);
        double norm2 = 0.0;
        do {
            norm2 = 0.0;
            for (auto& v : x) {
                v = {rng.next_gaussian(), rng.next_gaussian()};
                norm2 += std::norm(v);
            }
        } while (norm2 < 1e-12);
        double inv = 1.0 / std::sqrt(norm2);
        for (auto& v : x) v *= inv;
        account(h_of(x));
    }

    out.alpha = lo;
    out.beta = hi;
    return out;
}

} // namespace defectlab
