#include "qfc/upb.hpp"

#include <cmath>
#include <numbers>

#include "qfc/parallel.hpp"

namespace qfc {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double a) {
    while (a > kPi) a -= 2.0 * kPi;
    while (a <= -kPi) a += 2.0 * kPi;
    return a;
}

}  // namespace

ModeMoments moments_from_squeeze(const SqueezeParams& sq) {
    if (!(sq.thermal_occupation >= 0.0) || !(sq.amplitude >= 0.0))
        throw DomainError("moments_from_squeeze: need n_th >= 0 and r >= 0");
    const double a = sq.thermal_occupation + 0.5;
    ModeMoments mm;
    mm.occupation = a * std::cosh(2.0 * sq.amplitude) - 0.5;
    mm.pair = -a * std::sinh(2.0 * sq.amplitude) *
              std::exp(Complex(0.0, sq.phase));
    return mm;
}

SqueezeParams squeeze_params_from_moments(double occupation, Complex pair) {
    const double a = occupation + 0.5;
    const double cb = std::abs(pair);
    // physicality (n + 1/2)^2 - |c|^2 >= 1/4, evaluated in factored form
    const double prod = (a - cb) * (a + cb);
    if (occupation < 0.0 || prod < 0.25 * (1.0 - 1e-9) - 1e-12)
        throw UnphysicalStateError(
            "squeeze_params_from_moments: moments violate the Gaussian "
            "physicality bound (n + 1/2)^2 - |c|^2 >= 1/4");
    SqueezeParams sq;
    // minus sign under the radical: the inverse of the forward map
    sq.thermal_occupation = std::sqrt(std::max(prod, 0.25)) - 0.5;
    sq.amplitude = 0.5 * std::atanh(cb / a);
    sq.phase = cb > 0.0 ? wrap_angle(std::arg(pair) - kPi) : 0.0;
    return sq;
}

GaussianSingleMode assemble_output(const MeanFieldState& mf,
                                   const InterferenceConfig& cfg) {
    if (!(cfg.displacement_amplitude >= 0.0))
        throw DomainError("assemble_output: alpha_bar must be >= 0");
    const ModeMoments mm = steady_moments(cfg.k, mf);
    GaussianSingleMode out;
    out.displacement = cfg.displacement_amplitude *
                       std::exp(Complex(0.0, cfg.displacement_phase));
    out.occupation = mm.occupation;
    out.pair = mm.pair * std::exp(Complex(0.0, cfg.arm_phase_sum()));
    return out;
}

double g2_delay(const MeanFieldState& mf, const InterferenceConfig& cfg,
                double tau) {
    if (!(tau >= 0.0)) throw DomainError("g2_delay: tau must be >= 0");
    const ModeMoments mm = steady_moments(cfg.k, mf);
    const DelayedMoments dm = delayed_moments(cfg.k, mf, tau);
    const double a2 = cfg.displacement_amplitude * cfg.displacement_amplitude;
    const double den = a2 + mm.occupation;
    if (den == 0.0)
        throw DomainError("g2_delay: no photons in the output mode "
                          "(alpha_bar = 0 and n_k = 0)");
    const Complex rot = std::exp(Complex(0.0, cfg.total_phase()));
    // the quadratic terms enter as squared moduli, keeping g2 real
    const double num = 2.0 * a2 * std::real(dm.occupation + dm.pair * rot) +
                       std::norm(dm.occupation) + std::norm(dm.pair);
    return 1.0 + num / (den * den);
}

double eta_opt(const MeanFieldState& mf, double k) {
    const ModeMoments mm = steady_moments(k, mf);
    if (std::abs(mm.pair) == 0.0) return 0.0;
    return wrap_angle(kPi - std::arg(mm.pair));
}

double alpha_opt(double occupation, double cbar) {
    if (!(occupation >= 0.0) || !(cbar >= 0.0))
        throw DomainError("alpha_opt: need n >= 0 and cbar >= 0");
    if (!(cbar > occupation))
        throw NoOptimumError("alpha_opt: no optimal displacement, requires "
                             "cbar > n");
    return std::sqrt((cbar + occupation) * cbar / (cbar - occupation));
}

double g2_opt(double occupation, double cbar) {
    if (!(occupation >= 0.0) || !(cbar >= 0.0))
        throw DomainError("g2_opt: need n >= 0 and cbar >= 0");
    if (!(cbar > occupation))
        throw NoOptimumError("g2_opt: no optimal displacement, requires "
                             "cbar > n");
    const double d = cbar - occupation;
    return 1.0 - d * d / (cbar * cbar + 2.0 * cbar * occupation -
                          occupation * occupation);
}

std::vector<UpbScanRow> upb_scan(const MeanFieldState& mf,
                                 std::span<const double> k_grid) {
    for (std::size_t i = 1; i < k_grid.size(); ++i)
        if (!(k_grid[i] > k_grid[i - 1]))
            throw DomainError("upb_scan: k grid must be strictly increasing");
    std::vector<UpbScanRow> rows(k_grid.size());
    parallel_for(k_grid.size(), [&](std::size_t i) {
        UpbScanRow row;
        row.k = k_grid[i];
        row.moments = steady_moments(row.k, mf);
        row.squeeze = squeeze_params_from_moments(row.moments.occupation,
                                                  row.moments.pair);
        const double cb = std::abs(row.moments.pair);
        if (cb > row.moments.occupation) {
            row.alpha_optimal = alpha_opt(row.moments.occupation, cb);
            row.g2_optimal = g2_opt(row.moments.occupation, cb);
        }
        rows[i] = row;
    });
    return rows;
}

}  // namespace qfc
