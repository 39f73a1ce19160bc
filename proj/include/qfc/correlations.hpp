#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qfc/bogoliubov.hpp"
#include "qfc/params.hpp"

namespace qfc {

/// Stationary second moments of a fluctuation pair (+k, -k):
/// occupation n_k = <phi_k^dag phi_k>, pair correlation c_k = <phi_k phi_-k>.
struct ModeMoments {
    double occupation = 0.0;
    Complex pair{};
};

/// Delayed moments n_k(tau) = <phi_k^dag(t+tau) phi_k(t)>,
/// c_k(tau) = <phi_k(t+tau) phi_-k(t)>; both complex for tau > 0.
struct DelayedMoments {
    double tau = 0.0;
    Complex occupation{};
    Complex pair{};
};

/// Closed-form stationary moments:
///   n_k = (g n0)^2 / 2 / (omega_k^2 + gamma^2/4)
///   c_k = -(g psi0^2 / 2) (eps_k + g n0 + i gamma/2) / (omega_k^2 + gamma^2/4)
/// with omega_k^2 = eps (eps + 2 mu) used as a real number everywhere.
/// Throws UnstableError if the mean field has no stationary state.
ModeMoments steady_moments(double k, const MeanFieldState& mf);

/// Quantum-regression evolution of the stationary moments (tau >= 0).
DelayedMoments delayed_moments(double k, const MeanFieldState& mf, double tau);

/// Independent oracle #1: integrate the moment equations
///   d_t n_k = -gamma n_k + 2 Im[g psi0^2 c_k*]
///   i d_t c_k = (2 eps_k + 2 g n0 - i gamma) c_k + g psi0^2 (2 n_k + 1)
/// from (0, 0) until the residual of the right-hand side drops below tol.
struct OdeOracleResult {
    ModeMoments moments;
    double residual = 0.0;        ///< max(|d_t n|, |d_t c|) at the fixed point
    double elapsed_time = 0.0;    ///< integration time used
    std::vector<std::pair<double, double>> residual_history;  ///< (t, residual)
};
OdeOracleResult ode_steady_oracle(double k, const MeanFieldState& mf,
                                  double tol = 1e-12);

/// Independent oracle #2: ensemble of linear quantum Langevin trajectories.
struct LangevinConfig {
    int n_traj = 10000;
    std::uint64_t seed = 1;
    double dt = 0.0;     ///< 0: default 0.01 / max(gamma, |omega_k|, mu)
    double t_end = 0.0;  ///< 0: default 12/gamma plus diffusive relaxation margin
};

struct LangevinEstimate {
    ModeMoments moments;     ///< ordering-corrected sample means
    double se_occupation = 0.0;
    double se_pair = 0.0;    ///< combined SE of the complex mean
    double dt = 0.0;
    double t_end = 0.0;
    bool se_ok = true;       ///< flagged (not fatal) when SE > requested tolerance
};

/// Stochastic-Heun integration of the two-component complex SDE
///   dz = -i (B_k - i gamma/2) z dt + noise,   z = (phi_k, phi_-k^*),
/// with independent complex Wiener increments of variance gamma dt / 2 per
/// component (the symmetric-ordering convention; the sampled occupation is
/// corrected by the 1/2 vacuum offset).  One splitmix64 stream per trajectory
/// derived from (seed, index); reduction in fixed index order.
LangevinEstimate langevin_oracle(double k, const MeanFieldState& mf,
                                 const LangevinConfig& cfg = {},
                                 double se_tolerance = 0.0);

/// Two-time Monte-Carlo estimates used to cross-check the quantum-regression
/// formulas.  Values are the raw symmetric-ordering averages
///   nn = <z1*(t) z1(t+tau)>,  cc = <z1(t+tau) z2*(t)>
/// whose predictions are n_k(tau)* + e^{-gamma tau/2} eta(tau)/2 and
/// c_k(tau) + e^{-gamma tau/2} zeta~(tau)/2.
struct TwoTimeEstimate {
    double tau = 0.0;
    Complex nn{};
    Complex cc{};
    double se_nn = 0.0;
    double se_cc = 0.0;
};
TwoTimeEstimate langevin_two_time(double k, const MeanFieldState& mf, double tau,
                                  const LangevinConfig& cfg = {});

}  // namespace qfc
