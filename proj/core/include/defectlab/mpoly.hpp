#pragma once

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "defectlab/multiindex.hpp"
#include "defectlab/rational.hpp"

namespace defectlab {

// Inhomogeneous polynomial in m variables z_1..z_m with rational
// coefficients; terms keyed by exponent vectors of length m, no stored
// zeros.  Used for Wronskian tuples and Jacobian minors.
class MPoly {
public:
    explicit MPoly(int m) : m_(m) {
        require(m >= 1, ErrorKind::InvalidInput, "polynomial needs at least one variable");
    }

    static MPoly constant(int m, const Rational& c);
    static MPoly variable(int m, int i); // z_{i+1}, 0-based i
    static MPoly monomial(int m, const MultiIndex& e, const Rational& c);

    int vars() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && mi_degree(terms_.begin()->first) == 0); }
    int total_degree() const; // -1 for the zero polynomial
    int degree_in(int var) const;

    const std::map<MultiIndex, Rational>& terms() const { return terms_; }
    Rational coeff(const MultiIndex& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    void set_coeff(const MultiIndex& e, const Rational& c);

    MPoly derivative(int var) const;

    Rational eval(std::span<const Rational> point) const;
    std::complex<double> eval(std::span<const std::complex<double>> point) const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const Rational& c, const MPoly& p);
    friend MPoly operator-(const MPoly& a) { return Rational(-1) * a; }
    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(unsigned e) const;

    std::string str() const; // human-readable, deterministic term order

private:
    int m_;
    std::map<MultiIndex, Rational> terms_;
};

// Exact division: returns a/b when b divides a exactly, nullopt otherwise.
std::optional<MPoly> mpoly_divide(const MPoly& a, const MPoly& b);

// GCD over Q[z_1..z_m], normalized so the lex-leading coefficient is 1.
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

// Fraction-free (Bareiss) determinant of a square matrix of polynomials.
MPoly mpoly_det(const std::vector<std::vector<MPoly>>& mat);

} // namespace defectlab
