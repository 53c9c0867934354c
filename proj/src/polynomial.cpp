#include "spinrep/polynomial.hpp"

#include <cmath>

#include "spinrep/constellation.hpp"

namespace spinrep {

namespace {

void require_same_degree(const MajoranaPoly& a, const MajoranaPoly& b, const char* what) {
    if (a.spin != b.spin)
        throw InvalidArgument(std::string(what) + ": degree mismatch (" +
                              std::to_string(a.degree()) + " vs " + std::to_string(b.degree()) +
                              ")");
}

cplx ipow(cplx z, int k) {
    cplx r = 1.0;
    for (int i = 0; i < k; ++i)
        r *= z;
    return r;
}

/// Monomial transfer matrix of the linear substitution (z1, z2) -> m (z1, z2):
/// z1'^alpha z2'^(N-alpha) = sum_beta S(beta, alpha) z1^beta z2^(N-beta).
Matrix substitution_matrix(int n, const Eigen::Matrix2cd& m) {
    Matrix out = Matrix::Zero(n + 1, n + 1);
    for (int alpha = 0; alpha <= n; ++alpha) {
        const int rest = n - alpha;
        for (int i = 0; i <= alpha; ++i) {
            const cplx left = binomial(alpha, i) * ipow(m(0, 0), i) * ipow(m(0, 1), alpha - i);
            for (int k = 0; k <= rest; ++k) {
                const cplx right = binomial(rest, k) * ipow(m(1, 0), k) * ipow(m(1, 1), rest - k);
                out(i + k, alpha) += left * right;
            }
        }
    }
    return out;
}

} // namespace

double bsc_weight(int n, int alpha) { return parity_sign(n - alpha) * std::sqrt(binomial(n, alpha)); }

MajoranaPoly MajoranaPoly::zero(Spin s) { return {s, Matrix::Zero(s.dim(), s.dim())}; }

MajoranaPoly MajoranaPoly::identity(Spin s) {
    MajoranaPoly p = zero(s);
    for (int a = 0; a <= s.two_s(); ++a)
        p.coeffs(a, a) = binomial(s.two_s(), a);
    return p;
}

cplx MajoranaPoly::evaluate(cplx z1, cplx z2, cplx zb1, cplx zb2) const {
    const int n = degree();
    Vector hol(n + 1), anti(n + 1);
    for (int a = 0; a <= n; ++a) {
        hol(a) = ipow(z1, a) * ipow(z2, n - a);
        anti(a) = ipow(zb1, a) * ipow(zb2, n - a);
    }
    return (hol.transpose() * coeffs * anti)(0, 0);
}

MajoranaPoly MajoranaPoly::adjoint() const { return {spin, coeffs.adjoint()}; }

double MajoranaPoly::hermiticity_residual() const {
    return (coeffs - coeffs.adjoint()).cwiseAbs().maxCoeff();
}

MajoranaPoly& MajoranaPoly::operator+=(const MajoranaPoly& o) {
    require_same_degree(*this, o, "operator+");
    coeffs += o.coeffs;
    return *this;
}

MajoranaPoly& MajoranaPoly::operator-=(const MajoranaPoly& o) {
    require_same_degree(*this, o, "operator-");
    coeffs -= o.coeffs;
    return *this;
}

MajoranaPoly& MajoranaPoly::operator*=(cplx k) {
    coeffs *= k;
    return *this;
}

cplx PureMajoranaPoly::evaluate(cplx z1, cplx z2) const {
    cplx acc = 0.0;
    for (int a = 0; a <= degree(); ++a)
        acc += coeffs(a) * ipow(z1, a) * ipow(z2, degree() - a);
    return acc;
}

MajoranaPoly poly_from_operator(const Matrix& op) {
    if (op.rows() != op.cols() || op.rows() == 0)
        throw InvalidArgument("poly_from_operator: operator must be square and non-empty");
    const Spin s(static_cast<int>(op.rows()) - 1);
    const int n = s.two_s();
    MajoranaPoly p = MajoranaPoly::zero(s);
    // alpha = s + m, i.e. row index n - alpha.
    for (int a = 0; a <= n; ++a)
        for (int g = 0; g <= n; ++g)
            p.coeffs(a, g) = bsc_weight(n, a) * bsc_weight(n, g) * op(n - a, n - g);
    return p;
}

Matrix operator_from_poly(const MajoranaPoly& p) {
    const int n = p.degree();
    Matrix op(n + 1, n + 1);
    for (int a = 0; a <= n; ++a)
        for (int g = 0; g <= n; ++g)
            op(n - a, n - g) = p.coeffs(a, g) / (bsc_weight(n, a) * bsc_weight(n, g));
    return op;
}

PureMajoranaPoly pure_poly(Spin s, const Vector& psi) {
    if (psi.size() != s.dim())
        throw InvalidArgument("pure_poly: dimension mismatch");
    const int n = s.two_s();
    PureMajoranaPoly p{s, Vector(n + 1)};
    for (int a = 0; a <= n; ++a)
        p.coeffs(a) = bsc_weight(n, a) * psi(n - a);
    return p;
}

PureMajoranaPoly pure_poly(const PureState& psi) { return pure_poly(psi.spin, psi.amplitudes); }

Vector ket_from_pure_poly(const PureMajoranaPoly& p) {
    const int n = p.degree();
    Vector psi(n + 1);
    for (int a = 0; a <= n; ++a)
        psi(n - a) = p.coeffs(a) / bsc_weight(n, a);
    return psi;
}

MajoranaPoly poly_of_pure_density(const PureMajoranaPoly& p) {
    return {p.spin, p.coeffs * p.coeffs.adjoint()};
}

MajoranaPoly partial_trace_L(const MajoranaPoly& p) {
    const int n = p.degree();
    if (n == 0)
        throw InvalidArgument("partial_trace_L: degree-zero polynomial has no constituent to trace");
    MajoranaPoly out = MajoranaPoly::zero(Spin(n - 1));
    const double norm = 1.0 / (static_cast<double>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int g = 0; g < n; ++g)
            out.coeffs(a, g) = norm * (static_cast<double>((a + 1) * (g + 1)) * p.coeffs(a + 1, g + 1) +
                                       static_cast<double>((n - a) * (n - g)) * p.coeffs(a, g));
    return out;
}

MajoranaPoly partial_trace_L(const MajoranaPoly& p, int k) {
    if (k < 0 || k > p.degree())
        throw InvalidArgument("partial_trace_L: cannot trace out " + std::to_string(k) +
                              " constituents of a degree-" + std::to_string(p.degree()) +
                              " polynomial");
    MajoranaPoly out = p;
    for (int i = 0; i < k; ++i)
        out = partial_trace_L(out);
    return out;
}

cplx trace(const MajoranaPoly& p) {
    if (p.degree() == 0)
        return p.coeffs(0, 0);
    return partial_trace_L(p, p.degree()).coeffs(0, 0);
}

MajoranaPoly product(const MajoranaPoly& pd, const MajoranaPoly& pe) {
    require_same_degree(pd, pe, "product");
    // Each monomial z^alpha d^gamma of p_D only survives on the monomial z^gamma of
    // p_E, with factor gamma!(N-gamma)!; dividing by N! leaves 1/C(N, gamma).
    const int n = pd.degree();
    Vector w(n + 1);
    for (int g = 0; g <= n; ++g)
        w(g) = 1.0 / binomial(n, g);
    return {pd.spin, pd.coeffs * w.asDiagonal() * pe.coeffs};
}

MajoranaPoly product_dual(const MajoranaPoly& pd, const MajoranaPoly& pe) {
    require_same_degree(pd, pe, "product_dual");
    // p_E(d^a, z^a): monomial db^alpha zb^gamma meets zb^alpha in p_D.
    const int n = pd.degree();
    MajoranaPoly out = MajoranaPoly::zero(pd.spin);
    for (int a = 0; a <= n; ++a) {
        const double f = factorial_ratio({a, n - a}, {n});
        for (int ad = 0; ad <= n; ++ad)
            for (int g = 0; g <= n; ++g)
                out.coeffs(ad, g) += f * pe.coeffs(a, g) * pd.coeffs(ad, a);
    }
    return out;
}

cplx trace_product(const MajoranaPoly& pc, const MajoranaPoly& pd) {
    require_same_degree(pc, pd, "trace_product");
    const int n = pc.degree();
    cplx acc = 0.0;
    for (int a = 0; a <= n; ++a)
        for (int g = 0; g <= n; ++g)
            acc += pc.coeffs(a, g) * pd.coeffs(g, a) / (binomial(n, a) * binomial(n, g));
    return acc;
}

MajoranaPoly multiply(const MajoranaPoly& a, const MajoranaPoly& b) {
    const int na = a.degree(), nb = b.degree();
    MajoranaPoly out = MajoranaPoly::zero(Spin(na + nb));
    for (int a1 = 0; a1 <= na; ++a1)
        for (int g1 = 0; g1 <= na; ++g1) {
            const cplx ca = a.coeffs(a1, g1);
            if (ca == 0.0)
                continue;
            for (int a2 = 0; a2 <= nb; ++a2)
                for (int g2 = 0; g2 <= nb; ++g2)
                    out.coeffs(a1 + a2, g1 + g2) += ca * b.coeffs(a2, g2);
        }
    return out;
}

PureMajoranaPoly directional_derivative(const PureMajoranaPoly& p, const Star& m) {
    const int n = p.degree();
    if (n == 0)
        throw InvalidArgument("directional_derivative: degree-zero polynomial");
    const double c = std::cos(m.theta / 2);
    const cplx sb = std::sin(m.theta / 2) * std::polar(1.0, -m.phi);
    PureMajoranaPoly out{Spin(n - 1), Vector::Zero(n)};
    for (int a = 0; a < n; ++a)
        out.coeffs(a) = c * static_cast<double>(a + 1) * p.coeffs(a + 1) -
                        sb * static_cast<double>(n - a) * p.coeffs(a);
    return out;
}

namespace {

/// Apply the holomorphic directional derivative to the rows of a rectangular
/// coefficient block (row degree decreases by one).
Matrix derive_rows(const Matrix& c, cplx cos_part, cplx sin_part) {
    const int n = static_cast<int>(c.rows()) - 1;
    Matrix out(n, c.cols());
    for (int a = 0; a < n; ++a)
        out.row(a) = cos_part * static_cast<double>(a + 1) * c.row(a + 1) -
                     sin_part * static_cast<double>(n - a) * c.row(a);
    return out;
}

} // namespace

cplx expectation(const PureState& psi, const MajoranaPoly& pc) {
    if (psi.spin != pc.spin)
        throw InvalidArgument("expectation: spin mismatch");
    const int n = pc.degree();
    if (n == 0)
        return std::norm(psi.amplitudes(0)) * pc.coeffs(0, 0);
    const auto stars = constellation_of(psi);

    // p_tilde = prod_k (alpha_k z1 - beta_k z2) is the polynomial the star derivatives realise.
    Vector tilde = Vector::Zero(n + 1);
    tilde(0) = 1.0; // tilde(a) multiplies z1^a z2^(k-a) after k factors
    int deg = 0;
    Matrix block = pc.coeffs;
    for (const auto& st : stars) {
        const Eigen::Vector2cd k = st.ket();
        Vector next = Vector::Zero(n + 1);
        for (int a = 0; a <= deg; ++a) {
            next(a + 1) += k(0) * tilde(a);
            next(a) -= k(1) * tilde(a);
        }
        tilde = next;
        ++deg;
        block = derive_rows(block, std::conj(k(0)), std::conj(k(1)));
        block = derive_rows(block.transpose(), k(0), k(1)).transpose();
    }
    const double nf = factorial(n);
    const cplx raw = block(0, 0) / (nf * nf);
    double tilde_norm = 0.0;
    for (int a = 0; a <= n; ++a)
        tilde_norm += std::norm(tilde(a)) / binomial(n, a);
    return raw / tilde_norm * psi.amplitudes.squaredNorm();
}

MajoranaPoly self_action(const MajoranaPoly& p) {
    return product(p, p);
}

bool is_pure_poly(const MajoranaPoly& p, double tol) {
    Eigen::JacobiSVD<Matrix> svd(p.coeffs);
    const auto& sv = svd.singularValues();
    if (sv(0) == 0.0)
        return false;
    if (sv.size() > 1 && sv(1) > tol * sv(0))
        return false;
    if (p.hermiticity_residual() > tol * sv(0))
        return false;
    return std::abs(trace(p) - 1.0) <= tol;
}

MajoranaPoly rotate_poly(const MajoranaPoly& p, const Rotation& r) {
    const auto& u = r.su2();
    Eigen::Matrix2cd mh;
    mh << u(0, 0), -u(1, 0), -u(0, 1), u(1, 1);
    const Eigen::Matrix2cd ma = mh.conjugate();
    const Matrix sh = substitution_matrix(p.degree(), mh);
    const Matrix sa = substitution_matrix(p.degree(), ma);
    return {p.spin, sh * p.coeffs * sa.transpose()};
}

AnticoherenceReport anticoherence(const MajoranaPoly& p, double tol) {
    const int n = p.degree();
    AnticoherenceReport report;
    report.residuals.assign(static_cast<size_t>(n + 1), 0.0);
    MajoranaPoly reduced = p;
    for (int t = n; t >= 0; --t) {
        const Matrix rho = operator_from_poly(reduced);
        const Matrix mixed = rho.trace() / static_cast<double>(t + 1) * Matrix::Identity(t + 1, t + 1);
        report.residuals[static_cast<size_t>(t)] = (rho - mixed).norm();
        if (t > 0)
            reduced = partial_trace_L(reduced);
    }
    report.order = 0;
    for (int t = 1; t <= n; ++t) {
        if (report.residuals[static_cast<size_t>(t)] > tol)
            break;
        report.order = t;
    }
    return report;
}

} // namespace spinrep
