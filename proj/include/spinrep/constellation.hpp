#pragma once

#include <array>
#include <span>
#include <vector>

#include "spinrep/spin.hpp"
#include "spinrep/states.hpp"

namespace spinrep {

/// A point of the extended complex plane.
struct ExtendedComplex {
    cplx value{0.0};
    bool infinite = false;

    static ExtendedComplex infinity() { return {cplx(0.0), true}; }
};

using Constellation = std::vector<Star>;

/// zeta = tan(theta/2) e^{i phi}; 0 is +z and infinity is -z.
Star stereographic(const ExtendedComplex& zeta);
ExtendedComplex inverse_stereographic(const Star& s);
/// -1 / conj(zeta)
ExtendedComplex antipode(const ExtendedComplex& zeta);

/// Roots of sum_k a(k) zeta^k counted with multiplicity. The result always has
/// a.size() - 1 entries; vanishing leading coefficients give roots at infinity.
std::vector<ExtendedComplex> polynomial_roots(const Vector& a);

/// Roots of the block polynomial sum_mu (-1)^{sigma-mu} sqrt(C(2 sigma, sigma-mu)) v_mu zeta^{sigma+mu},
/// v indexed mu = sigma..-sigma.
std::vector<ExtendedComplex> roots(const Vector& v);
Constellation block_stars(const Vector& v);

/// Majorana constellation of a pure state; pure_from_stars inverts it up to phase.
Constellation constellation_of(const PureState& psi);

/// Image of zeta under the rotation by eta about the axis (Theta, Phi).
ExtendedComplex mobius_rotate(const ExtendedComplex& zeta, const Star& axis, double eta);

struct Pairing {
    std::vector<std::array<int, 2>> pairs;
    double residual = 0.0; ///< worst angle between a star and the antipode of its partner
};

/// Greedy matching of each star with the antipode of another. Throws
/// NumericalError when no matching is within `tol` radians.
Pairing antipodal_pairing(std::span<const Star> stars, double tol = 1e-6);

/// The member of {n, -n} used as class representative: z > 0, then x > 0, then y > 0.
Star canonical_orientation(const Star& n);

/// Unit vector u_mu proportional to <phi|T^dagger_{sigma mu}|phi> with phi built from `tuple`.
Vector block_u_vector(std::span<const Star> tuple);

struct SubconstellationClass {
    int sigma = 0;
    /// stars[2k] is the representative of pair k, stars[2k + 1] its antipode.
    std::vector<Star> stars;
    int parity = 1;

    std::vector<Star> representative() const;
    std::vector<std::array<int, 2>> pairs() const;
    /// parity * u(representative): the normalised block vector.
    Vector block_vector() const;
};

/// Class with the given tuple as representative up to orientation: each star
/// is replaced by its canonical orientation and the parity adjusted for every flip.
SubconstellationClass make_class(std::span<const Star> tuple, int parity);

/// Class of a unit, Hermitian-symmetric block vector v (size 2 sigma + 1).
SubconstellationClass extract_class(const Vector& v, double angle_tol = 1e-6);

/// Sign of Re<u(tuple), v>; NumericalError unless |<u, v>| is 1 within 1e-6 (v unit norm).
int parity_relative_to(const Vector& v, std::span<const Star> tuple);

/// Same axes (as multisets, within tol) and the same sign when both are referred
/// to the representative of `a`.
bool same_class(const SubconstellationClass& a, const SubconstellationClass& b, double tol = 1e-7);

} // namespace spinrep
