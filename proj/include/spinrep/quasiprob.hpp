#pragma once

#include <functional>
#include <ostream>
#include <vector>

#include "spinrep/spin.hpp"
#include "spinrep/states.hpp"

namespace spinrep {

struct GridNode {
    Star point;
    double weight = 0.0;
};

/// Product rule: Gauss-Legendre in cos(theta) times the uniform rule in phi.
struct SphereGrid {
    std::vector<GridNode> nodes;

    /// Integrates spherical harmonics up to `degree` exactly.
    static SphereGrid exact_to(int degree);
    double integrate(const std::function<double(const Star&)>& f) const;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

/// H(n) = <n|rho|n>, evaluated from the polynomial of rho.
double husimi(const Matrix& rho, const Star& n);

/// Y_lm with Condon-Shortley phase.
cplx spherical_harmonic(int l, int m, double theta, double phi);

/// Coefficient of rho_{sigma mu} Y_{sigma mu} in the P-function of a spin-s state.
double p_function_weight(Spin s, int sigma);
/// weight_sigma * rho_{sigma mu}, one vector per sigma (mu = sigma..-sigma).
std::vector<Vector> p_function_multipoles(const Matrix& rho);
/// P(n) with rho = int P(n) |n><n| dOmega.
double p_function(const Matrix& rho, const Star& n);

/// CSV rows "theta,phi,value" on n polar by 2n azimuthal cell centres.
void write_grid_csv(std::ostream& os, int n, const std::function<double(const Star&)>& f);

} // namespace spinrep
