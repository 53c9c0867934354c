#include "spinrep/rotation.hpp"

#include <cmath>

namespace spinrep {

namespace {

Eigen::Matrix2cd pauli(int i) {
    Eigen::Matrix2cd m;
    const cplx I(0.0, 1.0);
    switch (i) {
    case 0:
        m << 0, 1, 1, 0;
        break;
    case 1:
        m << 0, -I, I, 0;
        break;
    default:
        m << 1, 0, 0, -1;
        break;
    }
    return m;
}

} // namespace

Rotation::Rotation(const Eigen::Matrix2cd& u) : u_(u) {
    const double err = (u * u.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
    if (err > 1e-9 || std::abs(u.determinant() - 1.0) > 1e-9)
        throw InvalidArgument("rotation: matrix is not in SU(2)");
}

Rotation Rotation::from_euler(double alpha, double beta, double gamma) {
    const cplx I(0.0, 1.0);
    auto rz = [&](double a) {
        Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
        m(0, 0) = std::exp(-I * (a / 2));
        m(1, 1) = std::exp(I * (a / 2));
        return m;
    };
    Eigen::Matrix2cd ry;
    const double c = std::cos(beta / 2), s = std::sin(beta / 2);
    ry << c, -s, s, c;
    return Rotation(rz(alpha) * ry * rz(gamma));
}

Rotation Rotation::from_axis_angle(const Vec3& axis, double eta) {
    const double norm = axis.norm();
    if (norm == 0.0)
        throw InvalidArgument("rotation axis must be non-zero");
    const Vec3 e = axis / norm;
    const cplx I(0.0, 1.0);
    Eigen::Matrix2cd m = std::cos(eta / 2) * Eigen::Matrix2cd::Identity();
    for (int i = 0; i < 3; ++i)
        m -= I * std::sin(eta / 2) * e[i] * pauli(i);
    return Rotation(m);
}

Rotation Rotation::from_axis_angle(double axis_theta, double axis_phi, double eta) {
    return from_axis_angle(Vec3(std::sin(axis_theta) * std::cos(axis_phi),
                                std::sin(axis_theta) * std::sin(axis_phi), std::cos(axis_theta)),
                           eta);
}

Eigen::Matrix3d Rotation::so3() const {
    Eigen::Matrix3d r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r(i, j) = 0.5 * (pauli(i) * u_ * pauli(j) * u_.adjoint()).trace().real();
    return r;
}

} // namespace spinrep
