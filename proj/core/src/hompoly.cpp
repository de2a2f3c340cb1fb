#include "defectlab/hompoly.hpp"

#include <algorithm>
#include <sstream>

namespace defectlab {

namespace {

// Enumerate all exponent vectors of total degree D on n+1 variables in
// lexicographically descending order, starting from (D,0,...,0).
void enumerate(int n, int D, std::vector<MultiIndex>& out) {
    MultiIndex cur(n + 1, 0);
    // Recursive descent: assign x_0..x_n greedily from the largest exponent.
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == n) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, rem - e);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, D);
}

} // namespace

MonomialOrder::MonomialOrder(int n, int degree) : n_(n), degree_(degree) {
    require(n >= 0 && degree >= 0, ErrorKind::InvalidInput, "negative dimension or degree");
    enumerate(n, degree, monomials_);
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_[monomials_[i]] = i;
}

HomPoly HomPoly::monomial(int n, const MultiIndex& I, const Rational& c) {
    require(static_cast<int>(I.size()) == n + 1, ErrorKind::InvalidInput, "exponent vector length mismatch");
    for (int e : I) require(e >= 0, ErrorKind::InvalidInput, "negative exponent");
    HomPoly p(n, mi_degree(I));
    if (!c.is_zero()) p.coeffs_[I] = c;
    return p;
}

HomPoly HomPoly::variable(int n, int i) {
    require(i >= 0 && i <= n, ErrorKind::InvalidInput, "variable index out of range");
    MultiIndex I(n + 1, 0);
    I[i] = 1;
    return monomial(n, I, Rational(1));
}

void HomPoly::set_coeff(const MultiIndex& I, const Rational& c) {
    require(static_cast<int>(I.size()) == n_ + 1, ErrorKind::InvalidInput, "exponent vector length mismatch");
    require(mi_degree(I) == degree_, ErrorKind::InvalidInput, "exponent degree mismatch");
    if (c.is_zero())
        coeffs_.erase(I);
    else
        coeffs_[I] = c;
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
    require(n_ == o.n_ && degree_ == o.degree_, ErrorKind::AmbientMismatch, "degree or ambient mismatch in sum");
    for (const auto& [I, c] : o.coeffs_) {
        Rational s = coeff(I) + c;
        if (s.is_zero())
            coeffs_.erase(I);
        else
            coeffs_[I] = s;
    }
    return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& o) {
    require(n_ == o.n_ && degree_ == o.degree_, ErrorKind::AmbientMismatch, "degree or ambient mismatch in difference");
    for (const auto& [I, c] : o.coeffs_) {
        Rational s = coeff(I) - c;
        if (s.is_zero())
            coeffs_.erase(I);
        else
            coeffs_[I] = s;
    }
    return *this;
}

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
    require(a.n_ == b.n_, ErrorKind::AmbientMismatch, "ambient mismatch in product");
    HomPoly p(a.n_, a.degree_ + b.degree_);
    for (const auto& [I, c] : a.coeffs_)
        for (const auto& [J, d] : b.coeffs_) {
            MultiIndex K = mi_add(I, J);
            Rational s = p.coeff(K) + c * d;
            if (s.is_zero())
                p.coeffs_.erase(K);
            else
                p.coeffs_[K] = s;
        }
    return p;
}

HomPoly operator*(const Rational& c, const HomPoly& p) {
    HomPoly q(p.n_, p.degree_);
    if (c.is_zero()) return q;
    for (const auto& [I, v] : p.coeffs_) q.coeffs_[I] = c * v;
    return q;
}

HomPoly HomPoly::pow(unsigned e) const {
    HomPoly result = HomPoly::monomial(n_, MultiIndex(n_ + 1, 0), Rational(1));
    HomPoly base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

Rational HomPoly::eval(std::span<const Rational> point) const {
    require(static_cast<int>(point.size()) == n_ + 1, ErrorKind::InvalidInput, "evaluation point length mismatch");
    Rational acc(0);
    for (const auto& [I, c] : coeffs_) {
        Rational t = c;
        for (int i = 0; i <= n_; ++i)
            for (int e = 0; e < I[i]; ++e) t *= point[i];
        acc += t;
    }
    return acc;
}

std::complex<double> HomPoly::eval(std::span<const std::complex<double>> point) const {
    require(static_cast<int>(point.size()) == n_ + 1, ErrorKind::InvalidInput, "evaluation point length mismatch");
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [I, c] : coeffs_) {
        std::complex<double> t(c.to_double(), 0.0);
        for (int i = 0; i <= n_; ++i)
            for (int e = 0; e < I[i]; ++e) t *= point[i];
        acc += t;
    }
    return acc;
}

std::vector<Rational> HomPoly::coords(const MonomialOrder& order) const {
    require(order.n() == n_ && order.degree() == degree_, ErrorKind::AmbientMismatch,
            "monomial order does not match polynomial");
    std::vector<Rational> v(order.size(), Rational(0));
    for (const auto& [I, c] : coeffs_) v[order.index(I)] = c;
    return v;
}

std::string HomPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Reverse map order prints the lex-largest exponent first.
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [I, c] = *it;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        Rational a = first ? c : abs(c);
        first = false;
        bool has_var = mi_degree(I) > 0;
        if (!has_var || a != Rational(1)) {
            os << a.str();
            if (has_var) os << "*";
        }
        bool star = false;
        for (int i = 0; i <= n_; ++i) {
            if (I[i] == 0) continue;
            if (star) os << "*";
            star = true;
            os << "x" << i;
            if (I[i] > 1) os << "^" << I[i];
        }
    }
    return os.str();
}

HomPoly HomPoly::from_coords(const MonomialOrder& order, std::span<const Rational> v) {
    require(v.size() == order.size(), ErrorKind::InvalidInput, "coordinate vector length mismatch");
    HomPoly p(order.n(), order.degree());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) p.coeffs_[order.at(i)] = v[i];
    return p;
}

} // namespace defectlab
