#include "defectlab/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace defectlab {

MPoly MPoly::constant(int m, const Rational& c) {
    MPoly p(m);
    if (!c.is_zero()) p.terms_[MultiIndex(m, 0)] = c;
    return p;
}

MPoly MPoly::variable(int m, int i) {
    require(i >= 0 && i < m, ErrorKind::InvalidInput, "variable index out of range");
    MultiIndex e(m, 0);
    e[i] = 1;
    MPoly p(m);
    p.terms_[e] = Rational(1);
    return p;
}

MPoly MPoly::monomial(int m, const MultiIndex& e, const Rational& c) {
    require(static_cast<int>(e.size()) == m, ErrorKind::InvalidInput, "exponent vector length mismatch");
    for (int x : e) require(x >= 0, ErrorKind::InvalidInput, "negative exponent");
    MPoly p(m);
    if (!c.is_zero()) p.terms_[e] = c;
    return p;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, mi_degree(e));
    return d;
}

int MPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

void MPoly::set_coeff(const MultiIndex& e, const Rational& c) {
    require(static_cast<int>(e.size()) == m_, ErrorKind::InvalidInput, "exponent vector length mismatch");
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

MPoly MPoly::derivative(int var) const {
    require(var >= 0 && var < m_, ErrorKind::InvalidInput, "variable index out of range");
    MPoly d(m_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        MultiIndex e2 = e;
        e2[var] -= 1;
        d.terms_[e2] = c * Rational(e[var]);
    }
    return d;
}

Rational MPoly::eval(std::span<const Rational> point) const {
    require(static_cast<int>(point.size()) == m_, ErrorKind::InvalidInput, "evaluation point length mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < m_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

std::complex<double> MPoly::eval(std::span<const std::complex<double>> point) const {
    require(static_cast<int>(point.size()) == m_, ErrorKind::InvalidInput, "evaluation point length mismatch");
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
        std::complex<double> t(c.to_double(), 0.0);
        for (int i = 0; i < m_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    require(m_ == o.m_, ErrorKind::AmbientMismatch, "variable count mismatch");
    for (const auto& [e, c] : o.terms_) {
        Rational s = coeff(e) + c;
        if (s.is_zero())
            terms_.erase(e);
        else
            terms_[e] = s;
    }
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    require(m_ == o.m_, ErrorKind::AmbientMismatch, "variable count mismatch");
    for (const auto& [e, c] : o.terms_) {
        Rational s = coeff(e) - c;
        if (s.is_zero())
            terms_.erase(e);
        else
            terms_[e] = s;
    }
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    require(a.m_ == b.m_, ErrorKind::AmbientMismatch, "variable count mismatch");
    MPoly p(a.m_);
    for (const auto& [e, c] : a.terms_)
        for (const auto& [f, d] : b.terms_) {
            MultiIndex g = mi_add(e, f);
            Rational s = p.coeff(g) + c * d;
            if (s.is_zero())
                p.terms_.erase(g);
            else
                p.terms_[g] = s;
        }
    return p;
}

MPoly operator*(const Rational& c, const MPoly& p) {
    MPoly q(p.m_);
    if (c.is_zero()) return q;
    for (const auto& [e, v] : p.terms_) q.terms_[e] = c * v;
    return q;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly result = MPoly::constant(m_, Rational(1));
    MPoly base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Iterate in reverse map order so the lex-largest term prints first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        Rational a = first ? c : abs(c);
        first = false;
        bool has_var = mi_degree(e) > 0;
        if (!has_var || a != Rational(1)) {
            os << a.str();
            if (has_var) os << "*";
        }
        bool star = false;
        for (int i = 0; i < m_; ++i) {
            if (e[i] == 0) continue;
            if (star) os << "*";
            star = true;
            os << "z" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

namespace {

// Lex-leading term (largest exponent vector under std::vector ordering).
std::pair<MultiIndex, Rational> lead(const MPoly& p) {
    auto it = p.terms().rbegin();
    return {it->first, it->second};
}

bool divides_mi(const MultiIndex& a, const MultiIndex& b) { // a | b componentwise
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

MultiIndex sub_mi(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

// Coefficient of x_var^e viewed univariately: polynomial in the other
// variables (still carried with m variables, exponent of var = 0).
MPoly coeff_of(const MPoly& p, int var, int e) {
    MPoly c(p.vars());
    for (const auto& [f, v] : p.terms())
        if (f[var] == e) {
            MultiIndex g = f;
            g[var] = 0;
            c.set_coeff(g, v);
        }
    return c;
}

MPoly shift_var(const MPoly& p, int var, int e) { // multiply by x_var^e
    MPoly q(p.vars());
    for (const auto& [f, v] : p.terms()) {
        MultiIndex g = f;
        g[var] += e;
        q.set_coeff(g, v);
    }
    return q;
}

// Pseudo-remainder of a by b with respect to the chosen main variable:
// lc(b)^(deg a - deg b + 1) * a = q*b + r with deg_var r < deg_var b.
MPoly pseudo_rem(MPoly a, const MPoly& b, int var) {
    int db = b.degree_in(var);
    MPoly lcb = coeff_of(b, var, db);
    int da = a.degree_in(var);
    int steps = da - db + 1;
    for (int i = 0; i < steps && !a.is_zero(); ++i) {
        int cur = a.degree_in(var);
        if (cur < db) {
            a = lcb * a; // keep the pseudo-division scaling consistent
            continue;
        }
        MPoly lca = coeff_of(a, var, cur);
        a = lcb * a - shift_var(lca * b, var, cur - db);
    }
    return a;
}

int highest_var(const MPoly& p) { // largest variable index present, -1 if constant
    int v = -1;
    for (const auto& [e, c] : p.terms())
        for (int i = 0; i < p.vars(); ++i)
            if (e[i] > 0) v = std::max(v, i);
    return v;
}

MPoly monic_lex(const MPoly& p) {
    if (p.is_zero()) return p;
    return (Rational(1) / lead(p).second) * p;
}

MPoly gcd_rec(const MPoly& a, const MPoly& b);

// GCD of the univariate-in-var coefficients of p (its content w.r.t. var).
MPoly content_wrt(const MPoly& p, int var) {
    MPoly g(p.vars());
    for (int e = 0; e <= p.degree_in(var); ++e) {
        MPoly c = coeff_of(p, var, e);
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : gcd_rec(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return monic_lex(g);
}

MPoly gcd_rec(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return monic_lex(b);
    if (b.is_zero()) return monic_lex(a);
    int va = highest_var(a), vb = highest_var(b);
    if (va < 0 || vb < 0) return MPoly::constant(a.vars(), Rational(1));
    int var = std::max(va, vb);
    if (va != vb) return gcd_rec(content_wrt(var == va ? a : b, var), var == va ? b : a);

    MPoly ca = content_wrt(a, var), cb = content_wrt(b, var);
    MPoly pa = *mpoly_divide(a, ca), pb = *mpoly_divide(b, cb);
    // Primitive Euclidean loop on the primitive parts.
    while (!pb.is_zero()) {
        if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
        MPoly r = pseudo_rem(pa, pb, var);
        pa = pb;
        if (r.is_zero()) {
            pb = r;
        } else {
            MPoly cr = content_wrt(r, var);
            pb = *mpoly_divide(r, cr);
        }
    }
    MPoly cont = gcd_rec(ca, cb);
    return monic_lex(cont * pa);
}

} // namespace

std::optional<MPoly> mpoly_divide(const MPoly& a, const MPoly& b) {
    require(a.vars() == b.vars(), ErrorKind::AmbientMismatch, "variable count mismatch");
    require(!b.is_zero(), ErrorKind::InvalidInput, "division by zero polynomial");
    MPoly rem = a, quot(a.vars());
    auto [lb, cb] = lead(b);
    while (!rem.is_zero()) {
        auto [lr, cr] = lead(rem);
        if (!divides_mi(lb, lr)) return std::nullopt;
        MPoly t = MPoly::monomial(a.vars(), sub_mi(lr, lb), cr / cb);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
    require(a.vars() == b.vars(), ErrorKind::AmbientMismatch, "variable count mismatch");
    return gcd_rec(a, b);
}

MPoly mpoly_det(const std::vector<std::vector<MPoly>>& mat) {
    std::size_t n = mat.size();
    require(n > 0, ErrorKind::InvalidInput, "empty matrix");
    for (const auto& row : mat)
        require(row.size() == n, ErrorKind::InvalidInput, "non-square matrix");
    int m = mat[0][0].vars();

    std::vector<std::vector<MPoly>> w = mat;
    MPoly prev = MPoly::constant(m, Rational(1));
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && w[piv][c].is_zero()) ++piv;
        if (piv == n) return MPoly(m); // zero determinant
        if (piv != c) {
            std::swap(w[piv], w[c]);
            sign = -sign;
        }
        // Bareiss update; divisions by the previous pivot are exact.
        for (std::size_t i = c + 1; i < n; ++i)
            for (std::size_t j = c + 1; j < n; ++j) {
                MPoly t = w[c][c] * w[i][j] - w[i][c] * w[c][j];
                auto q = mpoly_divide(t, prev);
                require(q.has_value(), ErrorKind::NumericFailure, "Bareiss division not exact");
                w[i][j] = *q;
            }
        for (std::size_t i = c + 1; i < n; ++i) w[i][c] = MPoly(m);
        prev = w[c][c];
    }
    return sign == 1 ? w[n - 1][n - 1] : Rational(-1) * w[n - 1][n - 1];
}

} // namespace defectlab
