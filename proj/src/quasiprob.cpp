#include "spinrep/quasiprob.hpp"

#include <cmath>
#include <numbers>

#include "spinrep/polynomial.hpp"
#include "spinrep/trep.hpp"

namespace spinrep {

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    if (n < 1)
        throw InvalidArgument("gauss_legendre: need at least one node");
    x.assign(static_cast<size_t>(n), 0.0);
    w.assign(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = z;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (z * p1 - p0) / (z * z - 1.0);
            const double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16)
                break;
        }
        // recompute the derivative at the converged node
        double p0 = 1.0, p1 = z;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (z * p1 - p0) / (z * z - 1.0);
        x[static_cast<size_t>(i)] = -z;
        x[static_cast<size_t>(n - 1 - i)] = z;
        w[static_cast<size_t>(i)] = w[static_cast<size_t>(n - 1 - i)] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
}

SphereGrid SphereGrid::exact_to(int degree) {
    if (degree < 0)
        throw InvalidArgument("SphereGrid: negative degree");
    const int nt = degree / 2 + 1;
    const int np = degree + 1;
    std::vector<double> x, w;
    gauss_legendre(nt, x, w);
    SphereGrid g;
    for (int i = 0; i < nt; ++i)
        for (int j = 0; j < np; ++j)
            g.nodes.push_back({{std::acos(x[static_cast<size_t>(i)]), 2 * std::numbers::pi * j / np},
                               w[static_cast<size_t>(i)] * 2 * std::numbers::pi / np});
    return g;
}

double SphereGrid::integrate(const std::function<double(const Star&)>& f) const {
    double acc = 0.0;
    for (const auto& node : nodes)
        acc += node.weight * f(node.point);
    return acc;
}

double husimi(const Matrix& rho, const Star& n) {
    // <n|rho|n> is the polynomial at the point whose BSC bra is <n|.
    const MajoranaPoly p = poly_from_operator(rho);
    const cplx z1 = std::cos(n.theta / 2);
    const cplx z2 = -std::sin(n.theta / 2) * std::polar(1.0, -n.phi);
    return p.evaluate(z1, z2).real();
}

cplx spherical_harmonic(int l, int m, double theta, double phi) {
    if (l < 0 || std::abs(m) > l)
        throw InvalidArgument("spherical_harmonic: need |m| <= l");
    const int am = std::abs(m);
    const cplx y = std::sph_legendre(static_cast<unsigned>(l), static_cast<unsigned>(am), theta) *
                   std::polar(1.0, am * phi);
    return m >= 0 ? y : parity_sign(am) * std::conj(y);
}

double p_function_weight(Spin s, int sigma) {
    const int n = s.two_s();
    if (sigma < 0 || sigma > n)
        throw InvalidArgument("p_function_weight: rank outside [0, 2s]");
    return std::sqrt(factorial_ratio({n + sigma + 1, n - sigma}, {n, n})) / std::sqrt(4 * std::numbers::pi);
}

std::vector<Vector> p_function_multipoles(const Matrix& rho) {
    const Spin s(static_cast<int>(rho.rows()) - 1);
    std::vector<Vector> out;
    for (int sigma = 0; sigma <= s.two_s(); ++sigma)
        out.push_back(p_function_weight(s, sigma) * block_components(rho, sigma));
    return out;
}

double p_function(const Matrix& rho, const Star& n) {
    const auto terms = p_function_multipoles(rho);
    cplx acc = 0.0;
    for (int sigma = 0; sigma < static_cast<int>(terms.size()); ++sigma)
        for (int i = 0; i <= 2 * sigma; ++i)
            acc += terms[static_cast<size_t>(sigma)](i) * spherical_harmonic(sigma, sigma - i, n.theta, n.phi);
    return acc.real();
}

void write_grid_csv(std::ostream& os, int n, const std::function<double(const Star&)>& f) {
    if (n < 1)
        throw InvalidArgument("grid size must be positive");
    os << "theta,phi,value\n";
    char buf[96];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 2 * n; ++j) {
            const Star pt{std::numbers::pi * (i + 0.5) / n, std::numbers::pi * j / n};
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", pt.theta, pt.phi, f(pt));
            os << buf;
        }
}

} // namespace spinrep
