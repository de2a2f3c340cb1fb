#include "defectlab/bounds.hpp"

namespace defectlab {

Int strict_ceiling(const Rational& x) {
    // floor(x) + 1 is strictly above x whether or not x is an integer.
    return int_fdiv(x.numerator(), x.denominator()) + 1;
}

ParameterSet theorem_parameters(int n, int k, int d, const Rational& eps, const Rational& rho) {
    require(n >= 1, ErrorKind::InvalidInput, "n must be >= 1");
    require(k >= n, ErrorKind::InvalidInput, "k must be >= n");
    require(d >= 1, ErrorKind::InvalidInput, "d must be >= 1");
    require(eps.sign() > 0, ErrorKind::InvalidInput, "eps must be positive");
    require(rho.sign() >= 0, ErrorKind::InvalidInput, "rho must be nonnegative");

    ParameterSet ps;
    ps.n = n;
    ps.k = k;
    ps.d = d;
    ps.eps = eps;
    ps.rho = rho;
    ps.p = Int(k - n + 1);
    ps.I_eps = strict_ceiling(Rational(1) / eps);
    Int np1(n + 1);
    ps.N = np1 * d + ps.p * np1 * np1 * np1 * ps.I_eps * d;
    ps.u = binomial(ps.N + n, static_cast<unsigned long>(n));
    ps.rhs_base = Rational(Int(ps.p * np1)) + eps;
    ps.rhs_full = ps.rhs_base + rho * Rational(Int(ps.u * (ps.u - 1)), Int(d));
    ps.corollary_rhs = Rational(Int(ps.p * np1 + 1));
    return ps;
}

Rational b_lower_bound(int n, int d, const Int& N) {
    require(n >= 1 && d >= 1, ErrorKind::InvalidInput, "n and d must be >= 1");
    require(N > Int(n) * d, ErrorKind::InvalidInput, "requires N > nd");
    Int num(1);
    for (int j = 0; j <= n; ++j) num *= N - Int(j) * d;
    return Rational(num, factorial(static_cast<unsigned long>(n) + 1) * d);
}

namespace {

Rational e_taylor_20() {
    Rational s(0);
    for (unsigned long i = 0; i <= 20; ++i) s += Rational(Int(1), factorial(i));
    return s;
}

} // namespace

Rational e_lower() {
    static const Rational v = e_taylor_20();
    return v;
}

Rational e_upper() {
    // Tail sum_{i>20} 1/i! < 1/(20! * 20).
    static const Rational v = e_taylor_20() + Rational(Int(1), factorial(20) * 20);
    return v;
}

LemmaNewReport verify_lemma_new(const ParameterSet& ps, const Rational& b) {
    require(!b.is_zero(), ErrorKind::Degeneracy, "degenerate filtration weight b = 0");
    LemmaNewReport rep;
    rep.b = b;
    rep.lhs_a = Rational(Int(ps.p * ps.u * ps.N)) / (Rational(Int(ps.d)) * b);
    rep.bound_a = ps.rhs_base;
    rep.a_pass = rep.lhs_a <= rep.bound_a;

    rep.u = ps.u;
    Rational base = Rational(Int(Int(ps.d) * ps.p * Int(ps.n + 1) * Int(ps.n + 1) * ps.I_eps));
    Rational base_pow = rat_pow(base, static_cast<unsigned long>(ps.n));
    rep.rhs_b_lo = rat_pow(e_lower(), static_cast<unsigned long>(ps.n) + 2) * base_pow;
    rep.rhs_b_hi = rat_pow(e_upper(), static_cast<unsigned long>(ps.n) + 2) * base_pow;
    bool pass_lo = Rational(ps.u) <= rep.rhs_b_lo;
    bool pass_hi = Rational(ps.u) <= rep.rhs_b_hi;
    rep.roundings_agree = pass_lo == pass_hi;
    require(rep.roundings_agree, ErrorKind::NumericFailure,
            "e^{n+2} sandwich too coarse to decide bound (b)");
    rep.b_pass = pass_lo;
    return rep;
}

LemmaNewReport verify_lemma_new(const ParameterSet& ps) {
    return verify_lemma_new(ps, b_lower_bound(ps.n, ps.d, ps.N));
}

ComparisonDisplay comparison_parameters(int n, int k, int d, const Rational& eps) {
    require(n >= 1 && k >= n && d >= 1, ErrorKind::InvalidInput, "invalid comparison parameters");
    require(eps.sign() > 0, ErrorKind::InvalidInput, "eps must be positive");
    Int I = strict_ceiling(Rational(1) / eps);
    ComparisonDisplay out;
    out.N = Int(2) * k * d * Int(n) * Int(n) * Int(n + 1) * Int(n + 1) * I;
    Rational core = Rational(Int(3)) * e_upper() * Rational(Int(Int(k) * d * I));
    out.u_bound = rat_pow(core, static_cast<unsigned long>(n)) *
                  Rational(int_pow(Int(n + 1), 3ul * static_cast<unsigned long>(n)));
    return out;
}

} // namespace defectlab
