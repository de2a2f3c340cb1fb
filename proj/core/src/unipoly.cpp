#include "defectlab/unipoly.hpp"

#include <algorithm>
#include <cmath>

namespace defectlab {

std::vector<std::complex<double>> durand_kerner(std::vector<std::complex<double>> coeffs) {
    while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    require(coeffs.size() >= 2, ErrorKind::InvalidInput, "root finding needs degree >= 1");
    std::size_t n = coeffs.size() - 1;
    std::complex<double> lead = coeffs.back();
    for (auto& c : coeffs) c /= lead;

    if (n == 1) return {-coeffs[0]};

    double radius = 0.0;
    for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(coeffs[i]));
    radius = 1.0 + radius; // Cauchy bound on root moduli

    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = coeffs[n];
        for (std::size_t i = n; i-- > 0;) acc = acc * x + coeffs[i];
        return acc;
    };

    std::vector<std::complex<double>> x(n);
    const double pi = 3.14159265358979323846;
    for (std::size_t j = 0; j < n; ++j) {
        double th = 2.0 * pi * (static_cast<double>(j) + 0.25) / static_cast<double>(n);
        x[j] = 0.5 * radius * std::complex<double>(std::cos(th), std::sin(th));
    }

    for (int iter = 0; iter < 1000; ++iter) {
        double worst = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            std::complex<double> denom(1.0, 0.0);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) denom *= x[j] - x[k];
            std::complex<double> delta = eval(x[j]) / denom;
            x[j] -= delta;
            worst = std::max(worst, std::abs(delta) / std::max(1.0, std::abs(x[j])));
        }
        if (worst < 1e-14) break;
    }
    return x;
}

QPoly to_unipoly(const MPoly& p) {
    require(p.vars() == 1, ErrorKind::InvalidInput, "not a one-variable polynomial");
    std::vector<Rational> c(static_cast<std::size_t>(std::max(0, p.total_degree())) + 1, Rational(0));
    for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e[0])] = v;
    return QPoly(std::move(c));
}

GPoly compose_hom(const HomPoly& Q, const std::vector<GPoly>& comps) {
    require(static_cast<int>(comps.size()) == Q.n() + 1, ErrorKind::AmbientMismatch,
            "component count does not match the form's ambient dimension");
    GPoly acc;
    for (const auto& [I, c] : Q.terms()) {
        GPoly term = GPoly::constant(GaussRational(c));
        for (std::size_t i = 0; i < comps.size(); ++i)
            if (I[i] > 0) term = term * comps[i].pow(static_cast<unsigned>(I[i]));
        acc += term;
    }
    return acc;
}

} // namespace defectlab
