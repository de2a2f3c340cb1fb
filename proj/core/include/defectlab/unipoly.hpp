#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "defectlab/hompoly.hpp"
#include "defectlab/mpoly.hpp"
#include "defectlab/rational.hpp"

namespace defectlab {

inline std::complex<double> to_complex(const Rational& r) { return {r.to_double(), 0.0}; }
inline std::complex<double> to_complex(const GaussRational& g) {
    return {g.re.to_double(), g.im.to_double()};
}

// Dense one-variable polynomial over an exact field K (Rational or
// GaussRational), coefficients ascending, no trailing zeros.
template <typename K>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const K& v) { return UniPoly(std::vector<K>{v}); }
    static UniPoly variable() { return UniPoly(std::vector<K>{K(0), K(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const std::vector<K>& coeffs() const { return c_; }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    K lead() const {
        require(!c_.empty(), ErrorKind::InvalidInput, "leading coefficient of zero polynomial");
        return c_.back();
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<K> out(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(out));
    }
    friend UniPoly operator*(const K& s, const UniPoly& p) {
        std::vector<K> out = p.c_;
        for (auto& v : out) v = s * v;
        return UniPoly(std::move(out));
    }
    friend UniPoly operator-(const UniPoly& a) { return K(-1) * a; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly pow(unsigned e) const {
        UniPoly r = constant(K(1)), base = *this;
        while (e > 0) {
            if (e & 1u) r = r * base;
            base = base * base;
            e >>= 1u;
        }
        return r;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<K> out(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = K(static_cast<int>(i)) * c_[i];
        return UniPoly(std::move(out));
    }

    std::pair<UniPoly, UniPoly> divrem(const UniPoly& b) const {
        require(!b.is_zero(), ErrorKind::InvalidInput, "division by zero polynomial");
        UniPoly rem = *this, quot;
        if (degree() < b.degree()) return {quot, rem};
        quot.c_.assign(degree() - b.degree() + 1, K(0));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            int shift = rem.degree() - b.degree();
            K f = rem.lead() / b.lead();
            quot.c_[shift] += f;
            for (std::size_t i = 0; i < b.c_.size(); ++i) rem.c_[i + shift] -= f * b.c_[i];
            rem.trim();
        }
        quot.trim();
        return {quot, rem};
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return (K(1) / lead()) * *this;
    }

    K eval(const K& x) const {
        K acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    std::complex<double> eval(const std::complex<double>& x) const {
        std::complex<double> acc(0.0, 0.0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_complex(*it);
        return acc;
    }

    std::string str() const; // "(c0, c1, ...)" ascending, exact strings

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

template <typename K>
std::string UniPoly<K>::str() const {
    if (is_zero()) return "(0)";
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ", ";
        s += c_[i].str();
    }
    return s + ")";
}

using QPoly = UniPoly<Rational>;
using GPoly = UniPoly<GaussRational>;

template <typename K>
UniPoly<K> poly_gcd(UniPoly<K> a, UniPoly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divrem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Yun square-free decomposition: f = unit * prod factor_i ^ mult_i with the
// factors monic, square-free, pairwise coprime; multiplicities distinct.
template <typename K>
std::vector<std::pair<UniPoly<K>, int>> yun_squarefree(const UniPoly<K>& f) {
    require(!f.is_zero(), ErrorKind::InvalidInput, "square-free decomposition of zero");
    std::vector<std::pair<UniPoly<K>, int>> out;
    if (f.degree() == 0) return out;
    UniPoly<K> fp = f.derivative();
    UniPoly<K> g = poly_gcd(f, fp);
    UniPoly<K> w = f.divrem(g).first;
    UniPoly<K> y = fp.divrem(g).first;
    int i = 1;
    while (w.degree() > 0) {
        UniPoly<K> z = y - w.derivative();
        UniPoly<K> gi = poly_gcd(w, z);
        if (gi.degree() > 0) out.emplace_back(gi.monic(), i);
        w = w.divrem(gi).first;
        y = z.divrem(gi).first;
        ++i;
    }
    return out;
}

// Largest e with h^e | f (h nonconstant).
template <typename K>
int factor_multiplicity(UniPoly<K> f, const UniPoly<K>& h) {
    require(h.degree() >= 1, ErrorKind::InvalidInput, "multiplicity of a constant factor");
    require(!f.is_zero(), ErrorKind::InvalidInput, "multiplicity in zero polynomial");
    int e = 0;
    for (;;) {
        auto [q, r] = f.divrem(h);
        if (!r.is_zero()) return e;
        ++e;
        f = std::move(q);
    }
}

// Multiplicity of the root `a` in f (0 when f(a) != 0).
template <typename K>
int vanishing_order(const UniPoly<K>& f, const K& a) {
    require(!f.is_zero(), ErrorKind::InvalidInput, "vanishing order of zero polynomial");
    UniPoly<K> lin({K(0) - a, K(1)});
    return factor_multiplicity(f, lin);
}

// Pairwise-coprime square-free basis of a polynomial collection, with exact
// exponent vectors: polys[j] = units[j] * prod basis[i] ^ exponents[j][i].
template <typename K>
struct CoprimeFactorization {
    std::vector<UniPoly<K>> basis;
    std::vector<std::vector<int>> exponents; // [poly][basis element]
    std::vector<K> units;
};

template <typename K>
CoprimeFactorization<K> gcd_free_basis(const std::vector<UniPoly<K>>& polys) {
    CoprimeFactorization<K> out;
    auto& basis = out.basis;
    auto add_squarefree = [&](UniPoly<K> g) {
        // Refine against current basis until g is coprime to every element.
        std::size_t i = 0;
        while (i < basis.size() && g.degree() > 0) {
            UniPoly<K> h = poly_gcd(g, basis[i]);
            if (h.degree() == 0) {
                ++i;
                continue;
            }
            if (h.degree() < basis[i].degree()) {
                UniPoly<K> rest = basis[i].divrem(h).first.monic();
                basis[i] = h;
                basis.push_back(rest);
            }
            g = g.divrem(h).first.monic();
            i = 0; // basis changed; rescan
        }
        if (g.degree() > 0) basis.push_back(g.monic());
    };
    for (const auto& f : polys) {
        require(!f.is_zero(), ErrorKind::InvalidInput, "zero polynomial in factorization input");
        for (const auto& [factor, mult] : yun_squarefree(f)) add_squarefree(factor);
    }
    for (const auto& f : polys) {
        std::vector<int> e(basis.size(), 0);
        UniPoly<K> rest = f;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            e[i] = factor_multiplicity(rest, basis[i]);
            for (int t = 0; t < e[i]; ++t) rest = rest.divrem(basis[i]).first;
        }
        require(rest.degree() == 0, ErrorKind::NumericFailure, "coprime factorization incomplete");
        out.exponents.push_back(std::move(e));
        out.units.push_back(rest.coeff(0));
    }
    return out;
}

// Numeric roots (Durand-Kerner) of a complex-coefficient polynomial given by
// ascending coefficients; the polynomial must be nonconstant.
std::vector<std::complex<double>> durand_kerner(std::vector<std::complex<double>> coeffs);

// Numeric roots of an exact polynomial with exact multiplicities attached
// (square-free decomposition first, then per-factor root finding).
template <typename K>
std::vector<std::pair<std::complex<double>, int>> roots_with_multiplicity(const UniPoly<K>& f) {
    std::vector<std::pair<std::complex<double>, int>> out;
    if (f.degree() <= 0) return out;
    for (const auto& [factor, mult] : yun_squarefree(f)) {
        std::vector<std::complex<double>> cs;
        cs.reserve(factor.coeffs().size());
        for (const auto& v : factor.coeffs()) cs.push_back(to_complex(v));
        for (const auto& r : durand_kerner(std::move(cs))) out.emplace_back(r, mult);
    }
    return out;
}

inline GPoly widen(const QPoly& p) {
    std::vector<GaussRational> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return GPoly(std::move(c));
}

// One-variable MPoly -> QPoly bridge.
QPoly to_unipoly(const MPoly& p);

// Composition Q(f_0, ..., f_n) of a homogeneous form with curve components.
GPoly compose_hom(const HomPoly& Q, const std::vector<GPoly>& comps);

} // namespace defectlab
