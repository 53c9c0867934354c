#pragma once

#include <span>
#include <string>
#include <vector>

#include "spinrep/rotation.hpp"
#include "spinrep/spin.hpp"

namespace spinrep {

/// A point on the unit sphere in polar angles.
struct Star {
    double theta = 0.0; ///< [0, pi]
    double phi = 0.0;   ///< [0, 2 pi)

    static Star from_vector(const Vec3& v);
    Vec3 vector() const;
    Star antipode() const;
    /// Spin-1/2 coherent ket cos(theta/2)|+> + sin(theta/2) e^{i phi}|->.
    Eigen::Vector2cd ket() const;
};

/// Great-circle distance in radians.
double angular_distance(const Star& a, const Star& b);

/// Normalised spin-s ket, amplitudes indexed m = s..-s.
struct PureState {
    Spin spin;
    Vector amplitudes;

    Matrix density() const { return amplitudes * amplitudes.adjoint(); }
};

/// Normalised symmetrisation of the constituent kets |n_k>; the first amplitude
/// that is non-negligible is made real and positive.
PureState pure_from_stars(std::span<const Star> stars);

/// Spin coherent state |s, n>.
PureState coherent_state(Spin s, const Star& n);
PureState dicke_state(Spin s, int two_m);

enum class NamedState { coherent, dicke, ghz, w, cat_quantum, cat_classical, maximally_mixed };

struct NamedStateSpec {
    NamedState kind = NamedState::coherent;
    Spin spin{1};
    int two_m = 0;          ///< dicke only
    Star direction{};       ///< coherent only
};

NamedState parse_named_state(const std::string& name);
Matrix named_state(const NamedStateSpec& spec);

/// Whether rho is a density matrix: Hermitian, unit trace, eigenvalues >= -eig_tol.
bool is_density_matrix(const Matrix& rho, double herm_tol = 1e-12, double eig_tol = 1e-10);
double min_eigenvalue(const Matrix& hermitian);

/// Reference implementations on (C^2)^{xN}. These materialise 2^N dimensional
/// objects and are meant for verification only.
namespace oracle {

inline constexpr int max_constituents = 12;

/// Isometry from the spin-N/2 Dicke basis into (C^2)^{xN}; qubit 0 is the most
/// significant bit and a set bit is a spin-down constituent.
Matrix dicke_isometry(int n_constituents);

/// Trace out `k` constituents through the full tensor embedding.
Matrix partial_trace(const Matrix& rho, int k);

/// P_s (C_1 x ... x C_N) P_s for single-constituent operators C_k.
Matrix projected_tensor_product(std::span<const Eigen::Matrix2cd> factors);

/// (<m| x 1 x ... x 1) acting on the symmetric embedding of psi, returned in the
/// spin-(s-1/2) Dicke basis.
Vector contract_constituent(const Vector& psi, const Eigen::Vector2cd& m);

Matrix matrix_product(const Matrix& a, const Matrix& b);
cplx trace(const Matrix& a);
cplx expectation(const Vector& psi, const Matrix& c);

} // namespace oracle

} // namespace spinrep
