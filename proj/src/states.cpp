#include "spinrep/states.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "spinrep/angular.hpp"

namespace spinrep {

Star Star::from_vector(const Vec3& v) {
    const double r = v.norm();
    if (r == 0.0)
        throw InvalidArgument("Star::from_vector: zero vector");
    Star s;
    s.theta = std::atan2(std::hypot(v.x(), v.y()), v.z());
    s.phi = std::atan2(v.y(), v.x());
    if (s.phi < 0)
        s.phi += 2 * std::numbers::pi;
    if (s.phi >= 2 * std::numbers::pi) // -tiny wraps to exactly 2 pi
        s.phi = 0.0;
    return s;
}

Vec3 Star::vector() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

Star Star::antipode() const { return from_vector(-vector()); }

Eigen::Vector2cd Star::ket() const {
    return {cplx(std::cos(theta / 2), 0.0), std::sin(theta / 2) * std::polar(1.0, phi)};
}

double angular_distance(const Star& a, const Star& b) {
    const Vec3 u = a.vector(), v = b.vector();
    return std::atan2(u.cross(v).norm(), u.dot(v));
}

namespace {

void fix_phase(Vector& v) {
    const double scale = v.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > 1e-12 * scale) {
            v *= std::conj(v(i)) / std::abs(v(i));
            v(i) = std::abs(v(i));
            return;
        }
    }
}

} // namespace

PureState pure_from_stars(std::span<const Star> stars) {
    if (stars.empty())
        throw InvalidArgument("pure_from_stars: need at least one star");
    std::vector<Eigen::Vector2cd> kets;
    kets.reserve(stars.size());
    for (const auto& s : stars)
        kets.push_back(s.ket());
    Vector v = symmetric_projector_apply(kets);
    v.normalize();
    fix_phase(v);
    return {Spin(static_cast<int>(stars.size())), v};
}

PureState coherent_state(Spin s, const Star& n) {
    if (s.two_s() == 0)
        return {s, Vector::Ones(1)};
    std::vector<Star> stars(static_cast<size_t>(s.two_s()), n);
    return pure_from_stars(stars);
}

PureState dicke_state(Spin s, int two_m) {
    if (std::abs(two_m) > s.two_s() || (s.two_s() + two_m) % 2)
        throw InvalidArgument("dicke_state: m out of range for spin " + s.to_string());
    Vector v = Vector::Zero(s.dim());
    v(index_of(s, two_m)) = 1.0;
    return {s, v};
}

NamedState parse_named_state(const std::string& name) {
    if (name == "sc" || name == "coherent")
        return NamedState::coherent;
    if (name == "dicke")
        return NamedState::dicke;
    if (name == "ghz")
        return NamedState::ghz;
    if (name == "w")
        return NamedState::w;
    if (name == "cat-q" || name == "cat_q")
        return NamedState::cat_quantum;
    if (name == "cat-c" || name == "cat_c")
        return NamedState::cat_classical;
    if (name == "mixed" || name == "maximally_mixed")
        return NamedState::maximally_mixed;
    throw InvalidArgument("unknown state name '" + name + "'");
}

Matrix named_state(const NamedStateSpec& spec) {
    const Spin s = spec.spin;
    const int n = s.two_s();
    switch (spec.kind) {
    case NamedState::coherent:
        return coherent_state(s, spec.direction).density();
    case NamedState::dicke:
        return dicke_state(s, spec.two_m).density();
    case NamedState::w:
        if (n < 2)
            throw InvalidArgument("W state requires s >= 1");
        return dicke_state(s, n - 2).density();
    case NamedState::ghz:
    case NamedState::cat_quantum: {
        if (n == 0)
            throw InvalidArgument("cat states require s >= 1/2");
        Vector v = Vector::Zero(s.dim());
        v(0) = v(n) = 1.0 / std::sqrt(2.0);
        return v * v.adjoint();
    }
    case NamedState::cat_classical: {
        if (n == 0)
            throw InvalidArgument("cat states require s >= 1/2");
        Matrix m = Matrix::Zero(s.dim(), s.dim());
        m(0, 0) = m(n, n) = 0.5;
        return m;
    }
    case NamedState::maximally_mixed:
        return Matrix::Identity(s.dim(), s.dim()) / static_cast<double>(s.dim());
    }
    throw InvalidArgument("unhandled named state");
}

double min_eigenvalue(const Matrix& hermitian) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

bool is_density_matrix(const Matrix& rho, double herm_tol, double eig_tol) {
    if (rho.rows() != rho.cols() || rho.rows() == 0)
        return false;
    if (hermiticity_residual(rho) > herm_tol)
        return false;
    if (std::abs(rho.trace() - 1.0) > herm_tol)
        return false;
    return min_eigenvalue(0.5 * (rho + rho.adjoint())) >= -eig_tol;
}

namespace oracle {

namespace {

void check_size(int n) {
    if (n < 0 || n > max_constituents)
        throw InvalidArgument("oracle: at most " + std::to_string(max_constituents) +
                              " constituents supported");
}

} // namespace

Matrix dicke_isometry(int n) {
    check_size(n);
    const int full = 1 << n;
    Matrix v = Matrix::Zero(full, n + 1);
    for (int b = 0; b < full; ++b) {
        const int downs = std::popcount(static_cast<unsigned>(b));
        v(b, downs) = 1.0 / std::sqrt(binomial(n, downs));
    }
    return v;
}

Matrix partial_trace(const Matrix& rho, int k) {
    const int n = static_cast<int>(rho.rows()) - 1;
    if (rho.rows() != rho.cols() || n < 0)
        throw InvalidArgument("oracle::partial_trace: matrix must be square");
    if (k < 0 || k > n)
        throw InvalidArgument("oracle::partial_trace: cannot trace out more than 2s constituents");
    check_size(n);
    const Matrix v = dicke_isometry(n);
    const Matrix full = v * rho * v.adjoint();
    const int keep = n - k;
    const int dim_keep = 1 << keep, dim_env = 1 << k;
    Matrix reduced = Matrix::Zero(dim_keep, dim_keep);
    // Kept qubits are the high bits, traced ones the low bits.
    for (int a = 0; a < dim_keep; ++a)
        for (int b = 0; b < dim_keep; ++b) {
            cplx acc = 0.0;
            for (int e = 0; e < dim_env; ++e)
                acc += full(a * dim_env + e, b * dim_env + e);
            reduced(a, b) = acc;
        }
    const Matrix vk = dicke_isometry(keep);
    return vk.adjoint() * reduced * vk;
}

Matrix projected_tensor_product(std::span<const Eigen::Matrix2cd> factors) {
    const int n = static_cast<int>(factors.size());
    check_size(n);
    Matrix full = Matrix::Ones(1, 1);
    for (const auto& f : factors) {
        Matrix next(full.rows() * 2, full.cols() * 2);
        for (Eigen::Index i = 0; i < full.rows(); ++i)
            for (Eigen::Index j = 0; j < full.cols(); ++j)
                next.block<2, 2>(2 * i, 2 * j) = full(i, j) * f;
        full = std::move(next);
    }
    const Matrix v = dicke_isometry(n);
    return v.adjoint() * full * v;
}

Vector contract_constituent(const Vector& psi, const Eigen::Vector2cd& m) {
    const int n = static_cast<int>(psi.size()) - 1;
    if (n < 1)
        throw InvalidArgument("oracle::contract_constituent: need at least one constituent");
    check_size(n);
    const Vector full = dicke_isometry(n) * psi;
    const int rest = 1 << (n - 1);
    Vector out = Vector::Zero(rest);
    for (int r = 0; r < rest; ++r)
        out(r) = std::conj(m(0)) * full(r) + std::conj(m(1)) * full(rest + r);
    return dicke_isometry(n - 1).adjoint() * out;
}

Matrix matrix_product(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw InvalidArgument("oracle::matrix_product: dimension mismatch");
    return a * b;
}

cplx trace(const Matrix& a) {
    if (a.rows() != a.cols())
        throw InvalidArgument("oracle::trace: matrix is not square");
    return a.trace();
}

cplx expectation(const Vector& psi, const Matrix& c) {
    if (c.rows() != psi.size() || c.cols() != psi.size())
        throw InvalidArgument("oracle::expectation: dimension mismatch");
    return psi.dot(c * psi);
}

} // namespace oracle

} // namespace spinrep
