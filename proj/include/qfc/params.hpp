#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qfc/errors.hpp"

namespace qfc {

using Complex = std::complex<double>;

/// Fluid and drive parameters.  The CLI works in natural units
/// (m = 1, gamma = 1: momenta in sqrt(m*gamma), energies in gamma,
/// lengths in 1/sqrt(m*gamma), times in 1/gamma); the library itself only
/// assumes a consistent unit system.
struct PhysicalParams {
    double mass = 1.0;        ///< m > 0, sets the momentum unit sqrt(m*gamma)
    double interaction = 0.0; ///< g >= 0 (energy * area)
    double loss = 1.0;        ///< gamma > 0 (energy)
    double detuning = 0.0;    ///< delta = omega_L - eps_LP(0) (energy)
    Complex pump = 0.0;       ///< F; convention: real >= 0 at input

    /// Dimensionless interaction constant m*g (recorded for reporting).
    double dimensionless_interaction() const { return mass * interaction; }

    /// Throws DomainError listing every violated constraint.
    void validate() const;
};

enum class PumpRegime { OpticalLimiter, Bistable };
enum class Branch { Single, Low, Middle, High };

const char* to_string(PumpRegime r);
const char* to_string(Branch b);

/// Mean-field steady state of the condensate mode.
struct MeanFieldState {
    PhysicalParams params;
    Complex psi0{};                   ///< condensate amplitude (sqrt density)
    double density = 0.0;             ///< n0 = |psi0|^2
    double interaction_energy = 0.0;  ///< mu = g * n0
    double effective_detuning = 0.0;  ///< Delta = delta - g * n0
    PumpRegime regime = PumpRegime::OpticalLimiter;
    Branch branch = Branch::Single;
    bool dynamically_stable = true;   ///< Gamma_max < gamma/2 (middle branch: never)
    double max_growth_rate = 0.0;     ///< Gamma_max = max_k Im omega_k

    double mu() const { return interaction_energy; }
    double gamma() const { return params.loss; }
    double mass() const { return params.mass; }
};

/// |F| that sustains density n0:  |F| = sqrt(n0 ((delta - g n0)^2 + gamma^2/4)).
double pump_for_density(const PhysicalParams& p, double n0);

/// All real non-negative roots n0 of  n0 ((delta - g n0)^2 + gamma^2/4) = |F|^2,
/// ascending; 1 or 3 entries, degenerate double roots repeated.
std::vector<MeanFieldState> density_branches(const PhysicalParams& p);

/// Condensate phase from mean-field stationarity: psi0 = F / (Delta + i gamma/2).
/// Throws DomainError if |psi0|^2 disagrees with n0 beyond 1e-9 relative.
Complex condensate_phase(const PhysicalParams& p, double n0);

struct StabilityResult {
    bool stable = true;
    double max_growth_rate = 0.0;  ///< Gamma_max over the diffusive set
};

/// Gamma_max = mu if Delta >= mu; sqrt(Delta (2 mu - Delta)) if 0 < Delta < mu;
/// 0 otherwise.  Stable iff Gamma_max < gamma/2.
StabilityResult dynamical_stability(const PhysicalParams& p, double n0);

/// Emission angle of an in-plane momentum k: sin(theta) = c k / omega_L.
/// Throws RegimeError for evanescent modes (c k > omega_L).
double emission_angle(double k, double omega_laser, double c_light);

/// Mean field with the pump fixed implicitly by the density (the workflow used
/// throughout: F follows from n0).  Branch label derived from the cubic.
MeanFieldState mean_field_at_density(const PhysicalParams& p, double n0);

/// Convenience constructor from the (mu, Delta) parametrization used for all
/// the scans: n0 = mu/g and delta = Delta + mu.
MeanFieldState mean_field_from_mu_delta(double mu, double Delta, double gamma = 1.0,
                                        double mg = 1e-4, double mass = 1.0);

}  // namespace qfc
