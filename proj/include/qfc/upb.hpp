#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "qfc/correlations.hpp"
#include "qfc/params.hpp"

namespace qfc {

/// (n_th, r, theta) parametrization of a squeezed thermal state.
struct SqueezeParams {
    double thermal_occupation = 0.0;  ///< n_th >= 0
    double amplitude = 0.0;           ///< r >= 0
    double phase = 0.0;               ///< theta in (-pi, pi]
};

/// Displaced squeezed thermal single-mode state, stored through its
/// displacement and the second moments (n, c) of the fluctuation part.
struct GaussianSingleMode {
    Complex displacement{};  ///< alpha = alpha_bar e^{i zeta}
    double occupation = 0.0; ///< n of the fluctuation part
    Complex pair{};          ///< c of the fluctuation part

    double total_occupation() const {  ///< <sigma^dag sigma>
        return std::norm(displacement) + occupation;
    }
    /// <sigma sigma> = alpha^2 + c.
    Complex total_pair() const { return displacement * displacement + pair; }
};

/// Selection/interference configuration for the output mode
/// sigma_k = alpha_bar e^{i zeta} + (phi_k e^{i phi+} + phi_-k e^{i phi-})/sqrt(2).
struct InterferenceConfig {
    double k = 0.0;
    double phase_plus = 0.0;            ///< phi_+
    double phase_minus = 0.0;           ///< phi_-
    double displacement_phase = 0.0;    ///< zeta
    double displacement_amplitude = 0.0;///< alpha_bar >= 0

    /// Only phi_+ + phi_- and eta = phi_+ + phi_- - 2 zeta affect observables.
    double arm_phase_sum() const { return phase_plus + phase_minus; }
    double total_phase() const {
        return phase_plus + phase_minus - 2.0 * displacement_phase;
    }
};

/// n = (n_th + 1/2) cosh(2r) - 1/2,  c = -(n_th + 1/2) e^{i theta} sinh(2r).
ModeMoments moments_from_squeeze(const SqueezeParams& sq);

/// Inverse map:
///   theta = arg(c) - pi
///   tanh(2r) = |c| / (n + 1/2)
///   n_th = sqrt((n + 1/2)^2 - |c|^2) - 1/2   (minus sign: forced by the
///   round trip with the forward map).
/// Throws UnphysicalStateError outside the physicality bound.
SqueezeParams squeeze_params_from_moments(double occupation, Complex pair);

/// Output state after selection and interference.  Fluctuation part keeps
/// n_k; its pair moment is c_k e^{i(phi+ + phi-)}; squeezing phase
/// theta_k = arg c_k + phi+ + phi-.
GaussianSingleMode assemble_output(const MeanFieldState& mf,
                                   const InterferenceConfig& cfg);

/// Delayed intensity correlation of the output mode:
/// g2(tau) = 1 + [2 a^2 Re{n_k(tau) + c_k(tau) e^{i eta}} + |n_k(tau)|^2
///               + |c_k(tau)|^2] / (a^2 + n_k(0))^2,  a = alpha_bar.
double g2_delay(const MeanFieldState& mf, const InterferenceConfig& cfg,
                double tau);

/// Total phase aligning the squeezing with the amplitude quadrature:
/// eta_opt = pi - arg c_k(0), wrapped to (-pi, pi].
double eta_opt(const MeanFieldState& mf, double k);

/// Optimal displacement alpha_opt = sqrt((cbar + n) cbar / (cbar - n)).
/// Requires cbar > n (throws NoOptimumError otherwise).
double alpha_opt(double occupation, double cbar);

/// Minimal g2(0) = 1 - (cbar - n)^2 / (cbar^2 + 2 cbar n - n^2), in [0, 1].
double g2_opt(double occupation, double cbar);

struct UpbScanRow {
    double k = 0.0;
    ModeMoments moments;
    SqueezeParams squeeze;
    std::optional<double> alpha_optimal;  ///< empty when |c| <= n
    std::optional<double> g2_optimal;
};

/// Per-k table of squeezing parameters and optimal-antibunching figures,
/// ascending in k.
std::vector<UpbScanRow> upb_scan(const MeanFieldState& mf,
                                 std::span<const double> k_grid);

}  // namespace qfc
