#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "defectlab/error.hpp"

namespace defectlab {

// Exponent multi-index (i_0, ..., i_n).
using MultiIndex = std::vector<int>;

inline int mi_degree(const MultiIndex& I) { return std::accumulate(I.begin(), I.end(), 0); }

inline MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// All multi-indices of total degree D in n+1 variables, lexicographically
// descending, starting at (D, 0, ..., 0).  This fixes the coordinates of the
// graded piece V_D once and for all.
class MonomialOrder {
public:
    MonomialOrder(int n, int degree);

    int n() const { return n_; }
    int degree() const { return degree_; }
    std::size_t size() const { return monomials_.size(); }
    const std::vector<MultiIndex>& monomials() const { return monomials_; }
    const MultiIndex& at(std::size_t i) const { return monomials_[i]; }

    std::size_t index(const MultiIndex& I) const {
        auto it = index_.find(I);
        require(it != index_.end(), ErrorKind::InvalidInput, "multi-index not in graded piece");
        return it->second;
    }

private:
    int n_, degree_;
    std::vector<MultiIndex> monomials_;
    std::map<MultiIndex, std::size_t> index_;
};

} // namespace defectlab
