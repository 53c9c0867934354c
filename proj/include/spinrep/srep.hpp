#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "spinrep/polynomial.hpp"
#include "spinrep/spin.hpp"

namespace spinrep {

/// Exponents of the factor polynomials p_0, p_-, p_z, p_+ (equivalently the
/// number of sigma_0, sigma_-, sigma_z, sigma_+ factors in the tensor product).
struct NuIndex {
    int nu0 = 0;
    int nu_minus = 0;
    int nu_z = 0;
    int nu_plus = 0;

    int total() const { return nu0 + nu_minus + nu_z + nu_plus; }
    friend auto operator<=>(const NuIndex&, const NuIndex&) = default;
};

/// All compositions of n into four non-negative parts, lexicographic.
std::vector<NuIndex> nu_indices(int n);

struct SRepVector {
    Spin spin;
    std::map<NuIndex, cplx> coeffs;
};

using SExpansion = std::vector<std::pair<NuIndex, double>>;

/// Polynomials of the single-constituent operators sigma_0, sigma_-, sigma_z, sigma_+
/// with sigma_- = [[0,0],[2,0]] and sigma_+ = [[0,2],[0,0]].
MajoranaPoly factor_poly(int which);

/// prod_j p_j^{nu_j}
MajoranaPoly s_poly(const NuIndex& nu);
/// P_s sigma_{tau_1} x ... x sigma_{tau_N} P_s
Matrix s_operator(const NuIndex& nu);

/// c_nu = Tr(rho S_nu) over every composition of N.
SRepVector srep_coefficients(const Matrix& rho);

/// l(s, sigma) = sqrt((2s+sigma+1)! (2s-sigma)! / (2 sigma + 1)!) sigma! / (2s)!
double lift_norm(Spin s, int sigma);

/// sqrt((2s+sigma+1)(2s-sigma)) / (2s): the rescaling of T_{sigma mu} under one partial trace.
double reduction_factor(Spin s, int sigma);

/// Polynomial of T^{(s)}_{sigma mu} from that of T^{(sigma/2)}_{sigma mu}.
MajoranaPoly embed_lift(const MajoranaPoly& top_rank, Spin s);

/// T_{sigma mu} = sum_k A(s, sigma, mu, k) S_nu(k).
SExpansion t_in_s_expansion(Spin s, int sigma, int mu);

/// [S_-, S_nu] as a combination of two S operators (zero terms omitted).
SExpansion ladder_commutator(const NuIndex& nu);

/// T^{(tau/2)}_{tau mu} from (tau - mu) nested commutators of S_- with T_{tau tau}.
SExpansion nested_commutator_expansion(int tau, int mu);

/// sum_k c_k S_{nu_k}
Matrix materialize(Spin s, const SExpansion& terms);

} // namespace spinrep
