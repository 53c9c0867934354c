#pragma once

#include <vector>

#include "spinrep/rotation.hpp"
#include "spinrep/spin.hpp"
#include "spinrep/states.hpp"

namespace spinrep {

/// Bihomogeneous polynomial of degree (N, N) in (z1, z2, zb1, zb2).
///
/// coeffs(alpha, gamma) multiplies z1^alpha z2^(N-alpha) zb1^gamma zb2^(N-gamma),
/// so bihomogeneity and the Euler identities hold by construction. The
/// antiholomorphic variables are treated as independent of the holomorphic ones
/// for differentiation.
struct MajoranaPoly {
    Spin spin;
    Matrix coeffs;

    int degree() const { return spin.two_s(); }

    /// Polynomial with every coefficient zero.
    static MajoranaPoly zero(Spin s);
    /// (z^a z_a)^N, the polynomial of the identity.
    static MajoranaPoly identity(Spin s);

    cplx evaluate(cplx z1, cplx z2, cplx zb1, cplx zb2) const;
    /// Evaluation on the real slice zb = conj(z).
    cplx evaluate(cplx z1, cplx z2) const { return evaluate(z1, z2, std::conj(z1), std::conj(z2)); }

    /// Swap z_a <-> z^a and conjugate the coefficients: the polynomial of C^dagger.
    MajoranaPoly adjoint() const;
    /// max |c(a, g) - conj(c(g, a))|
    double hermiticity_residual() const;

    MajoranaPoly& operator+=(const MajoranaPoly& o);
    MajoranaPoly& operator-=(const MajoranaPoly& o);
    MajoranaPoly& operator*=(cplx k);
    friend MajoranaPoly operator+(MajoranaPoly a, const MajoranaPoly& b) { return a += b; }
    friend MajoranaPoly operator-(MajoranaPoly a, const MajoranaPoly& b) { return a -= b; }
    friend MajoranaPoly operator*(cplx k, MajoranaPoly a) { return a *= k; }
};

/// Holomorphic polynomial sum_alpha q_alpha z1^alpha z2^(N-alpha) of a ket.
struct PureMajoranaPoly {
    Spin spin;
    Vector coeffs;

    int degree() const { return spin.two_s(); }
    cplx evaluate(cplx z1, cplx z2) const;
};

/// Signed binomial weight (-1)^{N-alpha} sqrt(C(N, alpha)) linking matrix
/// entries to polynomial coefficients.
double bsc_weight(int n, int alpha);

MajoranaPoly poly_from_operator(const Matrix& op);
Matrix operator_from_poly(const MajoranaPoly& p);

PureMajoranaPoly pure_poly(const PureState& psi);
PureMajoranaPoly pure_poly(Spin s, const Vector& psi);
Vector ket_from_pure_poly(const PureMajoranaPoly& p);
/// p_psi(z_a) conj-coefficient p_psi(z^a).
MajoranaPoly poly_of_pure_density(const PureMajoranaPoly& p);

/// Partial trace over one constituent: N^{-2} (d_1 db_1 + d_2 db_2) p.
MajoranaPoly partial_trace_L(const MajoranaPoly& p);
/// L applied k times.
MajoranaPoly partial_trace_L(const MajoranaPoly& p, int k);

/// (N!)^{-2} (d_a d^a)^N p, evaluated as L^N.
cplx trace(const MajoranaPoly& p);

/// Polynomial of D E: (N!)^{-1} p_D(z_a, d_a) p_E(z_a, z^a).
MajoranaPoly product(const MajoranaPoly& pd, const MajoranaPoly& pe);
/// Polynomial of D E through the dual contraction (N!)^{-1} p_E(d^a, z^a) p_D(z_a, z^a).
MajoranaPoly product_dual(const MajoranaPoly& pd, const MajoranaPoly& pe);

/// Tr(C D) = (N!)^{-2} p_C(d^a, d_a) p_D(z_a, z^a).
cplx trace_product(const MajoranaPoly& pc, const MajoranaPoly& pd);

/// Ordinary product of polynomials; degrees add. Realises the symmetrised tensor product.
MajoranaPoly multiply(const MajoranaPoly& a, const MajoranaPoly& b);

/// (cos(theta/2) d_1 - sin(theta/2) e^{-i phi} d_2) p: contraction of one
/// constituent with |m>, up to a global factor.
PureMajoranaPoly directional_derivative(const PureMajoranaPoly& p, const Star& m);

/// <psi|C|psi> through the star-directional derivatives of the constellation of psi.
cplx expectation(const PureState& psi, const MajoranaPoly& pc);

/// Rank-one test of the coefficient matrix together with unit trace and
/// Hermiticity: true exactly for projectors onto a pure state.
bool is_pure_poly(const MajoranaPoly& p, double tol = 1e-8);

/// p(z_a, d_a) p / N!, the differential self-action that fixes pure-state polynomials.
MajoranaPoly self_action(const MajoranaPoly& p);

/// Polynomial of U(R) C U(R)^dagger obtained by substituting the transformed variables.
MajoranaPoly rotate_poly(const MajoranaPoly& p, const Rotation& r);

struct AnticoherenceReport {
    int order = 0;
    /// residuals[t] = || rho_{t/2} - Tr(rho_{t/2}) 1/(t+1) ||_F for t = 0..N
    std::vector<double> residuals;
};

/// Largest t with L^{N-t} p proportional to (z^a z_a)^t, for every t' <= t.
AnticoherenceReport anticoherence(const MajoranaPoly& p, double tol = 1e-9);

} // namespace spinrep
