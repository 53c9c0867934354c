#pragma once

#include <span>
#include <vector>

#include "spinrep/rotation.hpp"
#include "spinrep/spin.hpp"

namespace spinrep {

/// Clebsch-Gordan coefficient C^{J M}_{j1 m1, j2 m2} (Condon-Shortley phases).
///
/// All arguments are doubled quantum numbers. The Racah sum is evaluated with
/// exact rational arithmetic and rounded once at the end, so the result is
/// accurate to the last bit for any spin that fits in an int. Returns 0 when a
/// selection rule fails. Results are memoised in a process-wide table that is
/// safe for concurrent readers.
double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2, int two_j, int two_m);

/// Irreducible tensor operator T^{(s)}_{sigma mu}.
struct TensorOperator {
    Spin spin;
    int sigma = 0;
    int mu = 0;
    Matrix matrix;
};

/// Entry (m, m') = (-1)^{s-m'} C^{sigma mu}_{s m, s -m'}.
TensorOperator tensor_operator(Spin s, int sigma, int mu);

/// The full orthonormal basis {T_{sigma mu}} for one spin, cached per spin.
class TensorBasis {
  public:
    static const TensorBasis& get(Spin s);

    Spin spin() const { return spin_; }
    /// T_{sigma mu}.
    const Matrix& op(int sigma, int mu) const;

  private:
    explicit TensorBasis(Spin s);
    Spin spin_;
    std::vector<Matrix> ops_;
};

/// Spin operators in the |s,m> basis (m descending).
Matrix spin_z(Spin s);
Matrix spin_plus(Spin s);
Matrix spin_minus(Spin s);
Matrix spin_x(Spin s);
Matrix spin_y(Spin s);

/// Wigner matrix D^{(j)}_{m' m}(R) = <j m'| U(R) |j m>, rows and columns m descending.
/// Built as the symmetric tensor power of the SU(2) matrix, so it is valid for
/// half-integer j and composes exactly: D(R1) D(R2) = D(R1 R2).
Matrix wigner_D(Spin j, const Rotation& r);
/// Integer-rank convenience for D^{(sigma)}(alpha, beta, gamma).
Matrix wigner_D(int sigma, const EulerAngles& euler);

/// U(R) op U(R)^dagger.
Matrix rotate_operator(const Matrix& op, const Rotation& r);

/// Components <sigma, mu| P_sigma (|n_1> x ... x |n_2sigma>) for spin-1/2 kets.
///
/// Evaluated through elementary symmetric functions of the constituent
/// amplitudes (the Dicke overlaps are permanents of a two-column matrix), so
/// the cost is quadratic in the number of kets rather than exponential.
Vector symmetric_projector_apply(std::span<const Eigen::Vector2cd> kets);

/// Projection of |phi> x |chi> onto the stretched spin j1 + j2 subspace.
Vector couple_stretched(Spin j1, const Vector& phi, Spin j2, const Vector& chi);

/// Time reversal: component m of the result is (-1)^{s+m} conj(lambda_{-m}).
Vector antipodal_map(Spin s, const Vector& psi);

/// A rho A^dagger for the antiunitary A above.
Matrix antipodal_conjugate_operator(Spin s, const Matrix& rho);

} // namespace spinrep
