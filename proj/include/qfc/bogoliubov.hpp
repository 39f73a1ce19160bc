#pragma once

#include <complex>

#include "qfc/mat2.hpp"
#include "qfc/params.hpp"

namespace qfc {

/// Classification of a fluctuation mode by the sign of eps_k (eps_k + 2 mu).
enum class ModeClass {
    Propagating,  ///< eps (eps + 2 mu) > 0: real frequency +-omega_k
    Diffusive,    ///< -2 mu < eps < 0: purely imaginary +-i Gamma_k
    Boundary,     ///< |eps (eps + 2 mu)| below tolerance: degenerate
};

const char* to_string(ModeClass c);

/// Shifted single-particle dispersion eps_k = k^2/(2m) - Delta.
double epsilon(double k, const MeanFieldState& mf);

/// omega_k = sqrt(eps (eps + 2 mu)), principal branch with Im omega >= 0:
/// real >= 0 for a non-negative radicand, i*Gamma_k otherwise.
Complex omega(double k, const MeanFieldState& mf);

/// Boundary tolerance |eps (eps + 2 mu)| < 1e-10 mu^2.
ModeClass classify(double k, const MeanFieldState& mf);

/// Bogoliubov matrix B_k = [[eps + mu, mu], [-mu, -eps - mu]] (condensate
/// phase gauged away; the physical matrix has mu e^{+-2i arg psi0} off
/// diagonal and is similar to this one).
Mat2 bogoliubov_matrix(double k, const MeanFieldState& mf);

/// Transformation coefficients for modes with a real frequency.
/// eps >= 0:       u = sqrt((eps+mu)/(2w) + 1/2), v = -sqrt((eps+mu)/(2w) - 1/2)
/// eps <= -2 mu:   same radicals continued with |eps+mu|, and v > 0 (the sign
///                 the 2x2 diagonalization selects in the inner disk).
/// Normalization u^2 - v^2 = 1 in both cases.
struct PropagatingCoeffs {
    double u = 1.0;
    double v = 0.0;
};
PropagatingCoeffs coeffs_propagating(double k, const MeanFieldState& mf);

/// Coefficients of the diffusive parametrization:
/// s = sqrt(mu / (2 Gamma)), r = -mu / (eps + mu + i Gamma) * s,
/// with s r* - r s* = -i and |r| = |s| (no bosonic normalization exists here).
struct DiffusiveCoeffs {
    Complex r{};
    Complex s{};
};
DiffusiveCoeffs coeffs_diffusive(double k, const MeanFieldState& mf);

/// Columns of U diagonalize B_k with the amplified/positive branch first:
/// U^-1 B U = diag(omega, -omega), Im omega >= 0.
Mat2 transform_matrix(double k, const MeanFieldState& mf);

/// Time-dependent coefficients of phi_k(t) = e^{-gamma t/2} (eta phi_k(0)
/// + zeta phi^dag_{-k}(0)) + noise.  eta(0) = 1, zeta(0) = 0.  The global
/// damping factor e^{-gamma t/2} is kept separate.
struct EvolutionCoeffs {
    Complex eta{1.0, 0.0};
    Complex zeta{};
    double damping = 1.0;  ///< e^{-gamma t / 2}

    Complex damped_eta() const { return damping * eta; }
    Complex damped_zeta() const { return damping * zeta; }
};

/// Regime-wise closed forms (equal to the entries of exp(-i B_k t)):
///   real frequency, eps >= 0:  eta = u^2 e^{-iwt} - v^2 e^{+iwt},
///                              zeta = 2 i u v sin(wt)
///   diffusive:                 eta = i (s r* e^{Gt} - s* r e^{-Gt}),
///                              zeta = -2 i |s|^2 sinh(Gt)
///   inner disk, eps <= -2 mu:  eta = u^2 e^{+iwt} - v^2 e^{-iwt},
///                              zeta = -2 i u v sin(wt)
/// Boundary modes use the degenerate limit of the propagator.
EvolutionCoeffs evolution_coeffs(double k, const MeanFieldState& mf, double t);

/// Per-mode summary record.
struct ModeRecord {
    double k = 0.0;
    double epsilon = 0.0;
    Complex omega{};
    ModeClass mode_class = ModeClass::Propagating;
    Complex coeff_a{};  ///< u (propagating) or r (diffusive)
    Complex coeff_b{};  ///< v (propagating) or s (diffusive)
};

ModeRecord mode_record(double k, const MeanFieldState& mf);

/// Radii of the diffusive set: disk k < sqrt(2m Delta) for 0 < Delta < 2 mu,
/// ring sqrt(2m(Delta - 2mu)) < k < sqrt(2m Delta) for Delta > 2 mu.
struct DiffusiveSet {
    bool present = false;
    double k_inner = 0.0;
    double k_outer = 0.0;
};
DiffusiveSet diffusive_set(const MeanFieldState& mf);

}  // namespace qfc
