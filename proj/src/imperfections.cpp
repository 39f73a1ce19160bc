#include "qfc/imperfections.hpp"

#include <cmath>

#include "qfc/bogoliubov.hpp"
#include "qfc/mat2.hpp"

namespace qfc {

DisorderMode disorder_response(double k, const MeanFieldState& mf, double V_k) {
    if (!mf.dynamically_stable)
        throw UnstableError("disorder_response: mean field is not stationary");
    const double eps = epsilon(k, mf);  // Appendix-C eps_k equals Eq.-(9) eps_k
    const double mu = mf.mu();
    const double gamma = mf.gamma();
    const double n0 = mf.density;
    const Complex gpsi2 = mf.params.interaction * mf.psi0 * mf.psi0;

    // static response matrix L_k = B~_k - i gamma/2
    const Mat2 L{Complex(eps + mu, -gamma / 2.0), gpsi2,
                 -std::conj(gpsi2), Complex(-eps - mu, -gamma / 2.0)};
    if (std::abs(L.det()) < 1e-14)
        throw RegimeError("disorder_response: resonant response, L_k singular");

    const auto [dpsi, dpsi_conj] = L.solve(-V_k * mf.psi0,
                                           V_k * std::conj(mf.psi0));
    (void)dpsi_conj;

    const double w2 = eps * (eps + 2.0 * mu);
    const double g2q = gamma * gamma / 4.0;
    DisorderMode mode;
    mode.k = k;
    mode.potential = V_k;
    mode.response = dpsi;
    mode.density_response_solved = std::norm(dpsi);
    mode.density_response_closed =
        V_k * V_k * n0 * (eps * eps + g2q) / ((w2 + g2q) * (w2 + g2q));
    mode.difference = std::abs(mode.density_response_solved -
                               mode.density_response_closed);
    return mode;
}

DisorderTolerance disorder_tolerance(const MeanFieldState& mf, double v_rms,
                                     double corr_volume) {
    if (!(v_rms >= 0.0) || !(corr_volume >= 0.0))
        throw DomainError("disorder_tolerance: need v_rms >= 0, corr_volume >= 0");
    const double g = mf.params.interaction;
    const double mu = mf.mu();
    if (!(g > 0.0) || !(mu > 0.0))
        throw DomainError("disorder_tolerance: needs g > 0 and mu > 0");
    DisorderTolerance tol;
    tol.ratio = 2.0 * v_rms * v_rms * corr_volume / (g * mu);
    tol.pass = tol.ratio < 0.1;  // artifact convention for "<<"
    return tol;
}

DephasingBudget dephasing_budget(double gamma_deph, const MeanFieldState& mf,
                                 double lambda_dB) {
    if (!(gamma_deph >= 0.0) || !(lambda_dB >= 0.0))
        throw DomainError("dephasing_budget: need gamma_deph >= 0, lambda_dB >= 0");
    const double occupancy = mf.density * lambda_dB * lambda_dB;
    DephasingBudget budget;
    budget.extra_density = gamma_deph / mf.gamma() * occupancy;
    budget.cw_feasible = gamma_deph * occupancy < mf.gamma();
    return budget;
}

ThermalDegradation thermal_degradation(const ModeMoments& moments, double n_inc) {
    if (!(n_inc >= 0.0)) throw DomainError("thermal_degradation: n_inc must be >= 0");
    ThermalDegradation deg;
    deg.before = moments;
    deg.after = {moments.occupation + n_inc, moments.pair};
    deg.squeeze_before =
        squeeze_params_from_moments(deg.before.occupation, deg.before.pair);
    deg.squeeze_after =
        squeeze_params_from_moments(deg.after.occupation, deg.after.pair);
    const double cb = std::abs(moments.pair);
    if (cb > deg.before.occupation)
        deg.g2_opt_before = g2_opt(deg.before.occupation, cb);
    if (cb > deg.after.occupation)
        deg.g2_opt_after = g2_opt(deg.after.occupation, cb);
    return deg;
}

}  // namespace qfc
