#pragma once

#include <optional>
#include <random>
#include <vector>

#include "spinrep/constellation.hpp"
#include "spinrep/spin.hpp"
#include "spinrep/states.hpp"

namespace spinrep {

struct TBlock {
    int sigma = 0;
    double w = 0.0;
    SubconstellationClass cls;
};

/// rho = trace_component T_00 + sum_sigma w_sigma sum_mu (rho~_sigma)_mu T_{sigma mu},
/// with rho~_sigma the unit block vector recovered from the class.
struct TRep {
    Spin spin;
    double trace_component = 0.0;
    /// Present blocks only, ascending sigma.
    std::vector<TBlock> blocks;

    const TBlock* block(int sigma) const;
    /// w_sigma, 0 for absent blocks.
    double radius(int sigma) const;
    /// (w_1, ..., w_2s)
    std::vector<double> radii() const;
};

inline constexpr double absent_block_threshold = 1e-12;

/// rho_{sigma mu} = Tr(rho T^dagger_{sigma mu}) for mu = sigma..-sigma.
Vector block_components(const Matrix& rho, int sigma);

TRep decompose(const Matrix& rho, double angle_tol = 1e-6);
Matrix reconstruct(const TRep& t);

/// Trace out k constituents directly on the radii; classes are inherited.
TRep reduce(const TRep& t, int k);

struct CatRadii {
    double classical = 0.0;
    double quantum = 0.0;
};

/// Top-block radii of the classical and quantum cat states.
CatRadii cat_radii(Spin s);

struct PositivityReport {
    double sum_w2 = 0.0; ///< sum over sigma >= 1
    bool purity_bound_ok = false;
    bool mehta_ball = false;
    bool eigen_positive = false;
    double min_eigenvalue = 0.0;
};

/// Requires a unit-trace TRep.
PositivityReport positivity_checks(const TRep& t, double eig_tol = 1e-10);

/// TRep of A rho A^dagger.
TRep antipodal_conjugate(const TRep& t);

TRep pure_state_classes(const PureState& psi);

/// Standard Majorana constellation of a pure state from the top-rank class of its TRep.
Constellation recover_majorana(const TRep& t);

/// Unit-trace TRep with random classes and radii, sum_sigma w_sigma^2 = sum_w2.
TRep sample_trep(Spin s, double sum_w2, std::mt19937_64& rng);

} // namespace spinrep
