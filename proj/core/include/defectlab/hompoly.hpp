#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "defectlab/multiindex.hpp"
#include "defectlab/rational.hpp"

namespace defectlab {

// Homogeneous polynomial of fixed degree in n+1 variables with exact
// rational coefficients.  The zero polynomial is the empty coefficient map.
class HomPoly {
public:
    HomPoly(int n, int degree) : n_(n), degree_(degree) {
        require(n >= 0 && degree >= 0, ErrorKind::InvalidInput, "negative dimension or degree");
    }

    static HomPoly monomial(int n, const MultiIndex& I, const Rational& c);
    static HomPoly variable(int n, int i); // x_i

    int n() const { return n_; }
    int degree() const { return degree_; }
    bool is_zero() const { return coeffs_.empty(); }

    const std::map<MultiIndex, Rational>& terms() const { return coeffs_; }

    Rational coeff(const MultiIndex& I) const {
        auto it = coeffs_.find(I);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void set_coeff(const MultiIndex& I, const Rational& c);

    HomPoly& operator+=(const HomPoly& o);
    HomPoly& operator-=(const HomPoly& o);
    friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
    friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
    friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
    friend HomPoly operator*(const Rational& c, const HomPoly& p);
    friend bool operator==(const HomPoly& a, const HomPoly& b) {
        return a.n_ == b.n_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

    HomPoly pow(unsigned e) const;

    Rational eval(std::span<const Rational> point) const;
    std::complex<double> eval(std::span<const std::complex<double>> point) const;

    // Coefficient vector in the coordinates fixed by `order` (which must
    // match n and degree).
    std::vector<Rational> coords(const MonomialOrder& order) const;
    static HomPoly from_coords(const MonomialOrder& order, std::span<const Rational> v);

    std::string str() const; // human-readable, deterministic term order

private:
    int n_, degree_;
    std::map<MultiIndex, Rational> coeffs_; // nonzero coefficients only
};

} // namespace defectlab
