#include "spinrep/srep.hpp"

#include <cmath>

namespace spinrep {

std::vector<NuIndex> nu_indices(int n) {
    if (n < 0)
        throw InvalidArgument("nu_indices: negative degree");
    std::vector<NuIndex> out;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b)
            for (int c = 0; a + b + c <= n; ++c)
                out.push_back({a, b, c, n - a - b - c});
    return out;
}

MajoranaPoly factor_poly(int which) {
    MajoranaPoly p = MajoranaPoly::zero(Spin(1));
    // coeffs(alpha, gamma) multiplies z1^alpha z2^(1-alpha) zb1^gamma zb2^(1-gamma)
    switch (which) {
    case 0:
        p.coeffs(1, 1) = 1.0;
        p.coeffs(0, 0) = 1.0;
        break;
    case 1: // -2 z2 zb1
        p.coeffs(0, 1) = -2.0;
        break;
    case 2:
        p.coeffs(1, 1) = 1.0;
        p.coeffs(0, 0) = -1.0;
        break;
    case 3: // -2 z1 zb2
        p.coeffs(1, 0) = -2.0;
        break;
    default:
        throw InvalidArgument("factor_poly: index must be 0..3");
    }
    return p;
}

MajoranaPoly s_poly(const NuIndex& nu) {
    if (nu.nu0 < 0 || nu.nu_minus < 0 || nu.nu_z < 0 || nu.nu_plus < 0)
        throw InvalidArgument("s_poly: negative exponent");
    MajoranaPoly p = MajoranaPoly::identity(Spin(0));
    const int exps[4] = {nu.nu0, nu.nu_minus, nu.nu_z, nu.nu_plus};
    for (int j = 0; j < 4; ++j) {
        const MajoranaPoly f = factor_poly(j);
        for (int k = 0; k < exps[j]; ++k)
            p = multiply(p, f);
    }
    return p;
}

Matrix s_operator(const NuIndex& nu) { return operator_from_poly(s_poly(nu)); }

SRepVector srep_coefficients(const Matrix& rho) {
    const MajoranaPoly p = poly_from_operator(rho);
    SRepVector out{p.spin, {}};
    for (const auto& nu : nu_indices(p.degree()))
        out.coeffs.emplace(nu, trace_product(p, s_poly(nu)));
    return out;
}

double lift_norm(Spin s, int sigma) {
    const int n = s.two_s();
    if (sigma < 0 || sigma > n)
        throw InvalidArgument("lift_norm: rank outside [0, 2s]");
    return std::sqrt(factorial_ratio({n + sigma + 1, n - sigma}, {2 * sigma + 1})) *
           factorial_ratio({sigma}, {n});
}

double reduction_factor(Spin s, int sigma) {
    const int n = s.two_s();
    if (n == 0)
        throw InvalidArgument("reduction_factor: spin 0 has no constituent to trace out");
    if (sigma < 0 || sigma > n)
        throw InvalidArgument("reduction_factor: rank outside [0, 2s]");
    return std::sqrt(static_cast<double>((n + sigma + 1) * (n - sigma))) / n;
}

MajoranaPoly embed_lift(const MajoranaPoly& top_rank, Spin s) {
    const int sigma = top_rank.degree();
    if (sigma > s.two_s())
        throw InvalidArgument("embed_lift: target spin smaller than the rank");
    MajoranaPoly p = multiply(MajoranaPoly::identity(Spin(s.two_s() - sigma)), top_rank);
    p *= 1.0 / lift_norm(s, sigma);
    return p;
}

SExpansion t_in_s_expansion(Spin s, int sigma, int mu) {
    const int n = s.two_s();
    if (sigma < 0 || sigma > n)
        throw InvalidArgument("t_in_s_expansion: rank outside [0, 2s]");
    if (std::abs(mu) > sigma)
        throw InvalidArgument("t_in_s_expansion: |mu| > sigma");
    const double pre = std::sqrt(factorial_ratio({sigma + mu, sigma - mu}, {2 * sigma})) /
                       lift_norm(s, sigma);
    SExpansion out;
    for (int k = std::max(0, mu); 2 * k <= sigma + mu; ++k) {
        const double a = pre * parity_sign(k) * std::ldexp(1.0, mu - 2 * k) *
                         factorial_ratio({sigma}, {k, k - mu, sigma + mu - 2 * k});
        out.push_back({NuIndex{n - sigma, k - mu, sigma + mu - 2 * k, k}, a});
    }
    return out;
}

SExpansion ladder_commutator(const NuIndex& nu) {
    SExpansion out;
    if (nu.nu_z > 0)
        out.push_back({NuIndex{nu.nu0, nu.nu_minus + 1, nu.nu_z - 1, nu.nu_plus}, static_cast<double>(nu.nu_z)});
    if (nu.nu_plus > 0)
        out.push_back({NuIndex{nu.nu0, nu.nu_minus, nu.nu_z + 1, nu.nu_plus - 1}, -2.0 * nu.nu_plus});
    return out;
}

SExpansion nested_commutator_expansion(int tau, int mu) {
    if (tau < 0 || std::abs(mu) > tau)
        throw InvalidArgument("nested_commutator_expansion: need |mu| <= tau");
    std::map<NuIndex, double> terms{{NuIndex{0, 0, 0, tau}, std::ldexp(parity_sign(tau), -tau)}};
    for (int step = 0; step < tau - mu; ++step) {
        std::map<NuIndex, double> next;
        for (const auto& [nu, c] : terms)
            for (const auto& [nu2, c2] : ladder_commutator(nu))
                next[nu2] += c * c2;
        terms = std::move(next);
    }
    const double norm = std::sqrt(factorial_ratio({tau + mu}, {2 * tau, tau - mu}));
    SExpansion out;
    for (const auto& [nu, c] : terms)
        if (c != 0.0)
            out.push_back({nu, norm * c});
    return out;
}

Matrix materialize(Spin s, const SExpansion& terms) {
    Matrix m = Matrix::Zero(s.dim(), s.dim());
    for (const auto& [nu, c] : terms) {
        if (nu.total() != s.two_s())
            throw InvalidArgument("materialize: index does not sum to 2s");
        m += c * s_operator(nu);
    }
    return m;
}

} // namespace spinrep
