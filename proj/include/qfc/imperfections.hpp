#pragma once

#include <complex>
#include <optional>

#include "qfc/correlations.hpp"
#include "qfc/params.hpp"
#include "qfc/upb.hpp"

namespace qfc {

/// Linear response of the condensate to one Fourier component of a static
/// disorder potential.
struct DisorderMode {
    double k = 0.0;
    double potential = 0.0;              ///< V_k (energy)
    Complex response{};                  ///< delta psi_k from the 2x2 solve
    double density_response_solved = 0.0;///< |delta psi_k|^2
    double density_response_closed = 0.0;///< V_k^2 n0 (eps^2 + g^2/4)/(w^2 + g^2/4)^2
    double difference = 0.0;             ///< |solved - closed|
};

/// Solves L_k (dpsi_k, dpsi_-k^*)^T = (-V_k psi0, V_k psi0^*)^T directly and
/// evaluates the closed form; returns both.  Throws RegimeError when L_k is
/// singular (resonant response).
DisorderMode disorder_response(double k, const MeanFieldState& mf, double V_k);

struct DisorderTolerance {
    double ratio = 0.0;  ///< 2 <V^2> dV_c / (g mu)
    bool pass = false;   ///< ratio < 0.1 (artifact convention for "<<")
};

/// Disorder budget: the potential must satisfy <V^2> dV_c << g mu / 2.
/// Inputs in any consistent unit system (the ratio is dimensionless).
DisorderTolerance disorder_tolerance(const MeanFieldState& mf, double v_rms,
                                     double corr_volume);

struct DephasingBudget {
    double extra_density = 0.0;  ///< dn|_deph = (gamma_deph/gamma) n0 lambda_dB^2
    bool cw_feasible = false;    ///< gamma_deph < gamma / (n0 lambda_dB^2)
};

/// Phonon-dephasing population budget; lambda_dB is the phonon de Broglie
/// wavelength (the correlation volume is taken as lambda_dB^2).
DephasingBudget dephasing_budget(double gamma_deph, const MeanFieldState& mf,
                                 double lambda_dB);

struct ThermalDegradation {
    ModeMoments before;
    ModeMoments after;                    ///< occupation shifted by n_inc
    SqueezeParams squeeze_before;
    SqueezeParams squeeze_after;
    std::optional<double> g2_opt_before;  ///< empty when |c| <= n
    std::optional<double> g2_opt_after;
};

/// Incoherent polaritons add to n_k and degrade squeezing: recomputes the
/// squeeze parameters and the optimal g2 for occupation n + n_inc.
ThermalDegradation thermal_degradation(const ModeMoments& moments, double n_inc);

}  // namespace qfc
