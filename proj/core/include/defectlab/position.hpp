#pragma once

#include <string>
#include <utility>
#include <vector>

#include "defectlab/hompoly.hpp"
#include "defectlab/ideal.hpp"
#include "defectlab/rng.hpp"

namespace defectlab {

// A labeled family Q_1..Q_q of hypersurfaces in P^n with a claimed position
// parameter k.
struct HypersurfaceFamily {
    int n = 0;
    int k = 0;
    std::vector<std::string> labels;
    std::vector<HomPoly> members;

    std::size_t size() const { return members.size(); }
    void validate() const; // nonzero members, matching n, label count
};

// Replace every member by the (d/d_j)-th power so all degrees equal d = lcm.
std::pair<HypersurfaceFamily, int> normalize_degrees(const HypersurfaceFamily& family);

struct PositionCheck {
    bool holds = true;
    std::vector<std::string> violating; // first violating (k+1)-subset, label order
};

// Every (k+1)-subset must have empty common locus.  Members must already
// share one degree; subsets are scanned in lexicographic label order.
PositionCheck check_subgeneral(const HypersurfaceFamily& family, int k);

// Output of the replacement construction: P_1 = Q_{i_1} and, for t >= 2,
// P_t = sum_{j=2}^{k-n+t} c_tj * Q_{i_j}, with the prefix dimension chain
// dim(P_1 cap ... cap P_t) <= n - t certified for every t.
struct ReplacementResult {
    std::vector<std::string> source_labels;         // i_1 .. i_{k+1}
    std::vector<HomPoly> outputs;                   // P_1 .. P_{n+1}
    std::vector<std::vector<Rational>> combination; // c_tj for t = 2..n+1, j = 2..k-n+t
    std::vector<int> prefix_dimension;              // certified dim after each t (empty = -1)
    std::uint64_t seed = 0;
    int retries_used = 0;
};

ReplacementResult replace_hypersurfaces(const HypersurfaceFamily& family,
                                        const std::vector<std::string>& subset,
                                        std::uint64_t seed, int retry_budget = 64);

struct PositionConstants {
    double alpha = 0.0; // min of h over samples (an upper estimate of true alpha)
    double beta = 0.0;  // max of h over samples (a lower estimate of true beta)
    std::size_t samples = 0;
    bool warning = false; // some sample fell below the floor
};

// h(x) = max_i |Q_i(x)| / ||x||^d sampled on the unit sphere of C^{n+1}
// (seeded Gaussian draws) plus the coordinate points.
PositionConstants position_constants(const HypersurfaceFamily& family, std::size_t samples,
                                     std::uint64_t seed, double floor = 1e-12);

} // namespace defectlab
