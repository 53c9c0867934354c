#pragma once

#include <array>

#include "spinrep/spin.hpp"

namespace spinrep {

/// Unit 3-vector.
using Vec3 = Eigen::Vector3d;

/// An SU(2) element, stored as its 2x2 matrix in the |1/2,+1/2>, |1/2,-1/2> basis.
/// Acts on kets actively; the induced SO(3) rotation moves Bloch vectors and stars.
class Rotation {
  public:
    Rotation() : u_(Eigen::Matrix2cd::Identity()) {}
    explicit Rotation(const Eigen::Matrix2cd& u);

    /// exp(-i alpha Sz) exp(-i beta Sy) exp(-i gamma Sz)
    static Rotation from_euler(double alpha, double beta, double gamma);
    /// exp(-i eta e.S) about the unit axis with polar angles (axis_theta, axis_phi).
    static Rotation from_axis_angle(double axis_theta, double axis_phi, double eta);
    static Rotation from_axis_angle(const Vec3& axis, double eta);

    const Eigen::Matrix2cd& su2() const { return u_; }
    Eigen::Matrix3d so3() const;
    Vec3 apply(const Vec3& v) const { return so3() * v; }

    Rotation inverse() const { return Rotation(u_.adjoint()); }
    friend Rotation operator*(const Rotation& a, const Rotation& b) {
        return Rotation(a.u_ * b.u_);
    }

  private:
    Eigen::Matrix2cd u_;
};

/// Euler triple in the z-y-z convention.
struct EulerAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    Rotation rotation() const { return Rotation::from_euler(alpha, beta, gamma); }
};

} // namespace spinrep
