#include "qfc/correlations.hpp"

#include <array>
#include <cmath>

#include "qfc/parallel.hpp"
#include "qfc/rng.hpp"

namespace qfc {

namespace {

constexpr Complex kI{0.0, 1.0};

/// Unit phase e^{2i arg psi0} (the pair moments carry the condensate phase).
Complex condensate_phase2(const MeanFieldState& mf) {
    const Complex p2 = mf.psi0 * mf.psi0;
    const double m = std::abs(p2);
    return m > 0.0 ? p2 / m : Complex(1.0, 0.0);
}

void require_stationary(const MeanFieldState& mf) {
    if (!mf.dynamically_stable)
        throw UnstableError(
            "no stationary fluctuation state: gamma/2 <= Gamma_max, or the "
            "middle bistable branch");
}

// ---------------------------------------------------------------------------
// Moment ODE, real state (n, Re c, Im c)
// ---------------------------------------------------------------------------

using Vec3 = std::array<double, 3>;

struct MomentOde {
    double eps, mu, gamma;
    Complex gpsi2;  // g psi0^2

    Vec3 rhs(const Vec3& y) const {
        const double n = y[0];
        const Complex c{y[1], y[2]};
        const double dn = -gamma * n + 2.0 * std::imag(gpsi2 * std::conj(c));
        const Complex dc = -kI * (2.0 * (eps + mu) * c + gpsi2 * (2.0 * n + 1.0))
                           - gamma * c;
        return {dn, dc.real(), dc.imag()};
    }

    double residual(const Vec3& y) const {
        const Vec3 d = rhs(y);
        return std::max(std::abs(d[0]), std::hypot(d[1], d[2]));
    }
};

/// One adaptive Dormand-Prince 5(4) step; returns the accepted step size used
/// and updates y, suggesting the next step in h.
bool dopri5_step(const MomentOde& ode, Vec3& y, double& h, double h_max) {
    static constexpr double a21 = 1.0 / 5.0;
    static constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
    static constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
    static constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                            a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
    static constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                            a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                            a65 = -5103.0 / 18656.0;
    static constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0,
                            b4 = 125.0 / 192.0, b5 = -2187.0 / 6784.0,
                            b6 = 11.0 / 84.0;
    static constexpr double e1 = 35.0 / 384.0 - 5179.0 / 57600.0,
                            e3 = 500.0 / 1113.0 - 7571.0 / 16695.0,
                            e4 = 125.0 / 192.0 - 393.0 / 640.0,
                            e5 = -2187.0 / 6784.0 + 92097.0 / 339200.0,
                            e6 = 11.0 / 84.0 - 187.0 / 2100.0,
                            e7 = -1.0 / 40.0;
    constexpr double rtol = 1e-11, atol = 1e-14;

    auto axpy = [](const Vec3& y0, std::initializer_list<std::pair<double, const Vec3*>> terms,
                   double h) {
        Vec3 out = y0;
        for (const auto& [c, k] : terms)
            for (int i = 0; i < 3; ++i) out[i] += h * c * (*k)[i];
        return out;
    };

    const Vec3 k1 = ode.rhs(y);
    const Vec3 k2 = ode.rhs(axpy(y, {{a21, &k1}}, h));
    const Vec3 k3 = ode.rhs(axpy(y, {{a31, &k1}, {a32, &k2}}, h));
    const Vec3 k4 = ode.rhs(axpy(y, {{a41, &k1}, {a42, &k2}, {a43, &k3}}, h));
    const Vec3 k5 = ode.rhs(axpy(y, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}, h));
    const Vec3 k6 = ode.rhs(axpy(y, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}, h));
    const Vec3 y5 = axpy(y, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}}, h);
    const Vec3 k7 = ode.rhs(y5);

    double err = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                              e6 * k6[i] + e7 * k7[i]);
        const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
        err += (e / sc) * (e / sc);
    }
    err = std::sqrt(err / 3.0);

    const double factor = std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
    if (err <= 1.0) {
        y = y5;
        h = std::min(h * factor, h_max);
        return true;
    }
    h *= factor;
    return false;
}

// ---------------------------------------------------------------------------
// Langevin machinery
// ---------------------------------------------------------------------------

struct LangevinSystem {
    Complex a11, a12, a21, a22;  // drift A = -i (B~ - i gamma/2)
    double noise_sd = 0.0;       // per real quadrature, sqrt(gamma dt / 4)
    double dt = 0.0;
    long n_steps = 0;
};

LangevinSystem make_system(double k, const MeanFieldState& mf,
                           const LangevinConfig& cfg, double extra_time) {
    const double eps = epsilon(k, mf);
    const double mu = mf.mu();
    const double gamma = mf.gamma();
    const Complex gpsi2 = mu * condensate_phase2(mf);

    LangevinSystem sys;
    sys.a11 = -kI * (eps + mu) - gamma / 2.0;
    sys.a12 = -kI * gpsi2;
    sys.a21 = kI * std::conj(gpsi2);
    sys.a22 = kI * (eps + mu) - gamma / 2.0;

    const double w_mag = std::abs(omega(k, mf));
    sys.dt = cfg.dt > 0.0 ? cfg.dt
                          : 0.01 / std::max({gamma, w_mag, mu});
    if (sys.dt * std::max(w_mag, gamma) > 0.05)
        throw DomainError("langevin_oracle: dt too large, need "
                          "dt * max(|omega_k|, gamma) <= 0.05");

    double t_end = cfg.t_end;
    if (t_end <= 0.0) {
        // burn-in 10/gamma, extended by the slow relaxation of this mode when
        // it is parametrically amplified (moments relax at gamma - 2 Gamma_k)
        const double growth = std::max(0.0, omega(k, mf).imag());
        const double slow = gamma - 2.0 * growth;
        t_end = std::max(12.0 / gamma, 2.0 / gamma + 10.0 / slow);
    }
    sys.n_steps = static_cast<long>(std::ceil(t_end / sys.dt)) +
                  static_cast<long>(std::ceil(extra_time / sys.dt));
    sys.noise_sd = std::sqrt(gamma * sys.dt / 4.0);
    return sys;
}

struct TrajState {
    Complex z1{}, z2{};
};

/// One stochastic-Heun step (additive noise): second-order weak accuracy for
/// this linear drift, so the sampled moments carry O(dt^2) bias only.
inline void heun_step(const LangevinSystem& sys, TrajState& st, RngStream& rng) {
    const Complex xi1{sys.noise_sd * rng.next_normal(),
                      sys.noise_sd * rng.next_normal()};
    const Complex xi2{sys.noise_sd * rng.next_normal(),
                      sys.noise_sd * rng.next_normal()};
    const Complex k11 = sys.a11 * st.z1 + sys.a12 * st.z2;
    const Complex k12 = sys.a21 * st.z1 + sys.a22 * st.z2;
    const Complex p1 = st.z1 + sys.dt * k11 + xi1;
    const Complex p2 = st.z2 + sys.dt * k12 + xi2;
    const Complex k21 = sys.a11 * p1 + sys.a12 * p2;
    const Complex k22 = sys.a21 * p1 + sys.a22 * p2;
    st.z1 += 0.5 * sys.dt * (k11 + k21) + xi1;
    st.z2 += 0.5 * sys.dt * (k12 + k22) + xi2;
}

struct MeanSe {
    double mean = 0.0, se = 0.0;
};

MeanSe reduce(const std::vector<double>& xs) {
    const std::size_t n = xs.size();
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    var /= static_cast<double>(n - 1);
    return {mean, std::sqrt(var / static_cast<double>(n))};
}

struct ComplexMeanSe {
    Complex mean{};
    double se = 0.0;
};

ComplexMeanSe reduce(const std::vector<Complex>& xs) {
    const std::size_t n = xs.size();
    Complex mean{};
    for (const Complex& x : xs) mean += x;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (const Complex& x : xs) var += std::norm(x - mean);
    var /= static_cast<double>(n - 1);
    return {mean, std::sqrt(var / static_cast<double>(n))};
}

}  // namespace

ModeMoments steady_moments(double k, const MeanFieldState& mf) {
    require_stationary(mf);
    const double mu = mf.mu();
    if (mu == 0.0) return {};  // no pair creation without interactions
    const double eps = epsilon(k, mf);
    const double gamma = mf.gamma();
    const double w2 = eps * (eps + 2.0 * mu);  // real in every regime
    const double denom = w2 + gamma * gamma / 4.0;
    const Complex gpsi2 = mf.params.interaction * mf.psi0 * mf.psi0;
    ModeMoments mm;
    mm.occupation = 0.5 * mu * mu / denom;
    mm.pair = -0.5 * gpsi2 * Complex(eps + mu, gamma / 2.0) / denom;
    return mm;
}

DelayedMoments delayed_moments(double k, const MeanFieldState& mf, double tau) {
    if (!(tau >= 0.0))
        throw DomainError("delayed_moments: tau must be >= 0 (use stationarity "
                          "to map negative delays)");
    const ModeMoments mm = steady_moments(k, mf);
    const EvolutionCoeffs ec = evolution_coeffs(k, mf, tau);
    const Complex ph2 = condensate_phase2(mf);
    DelayedMoments dm;
    dm.tau = tau;
    dm.occupation = ec.damping * (std::conj(ec.eta) * mm.occupation +
                                  std::conj(ec.zeta * ph2) * mm.pair);
    dm.pair = ec.damping * (ec.eta * mm.pair + ec.zeta * ph2 * mm.occupation);
    return dm;
}

OdeOracleResult ode_steady_oracle(double k, const MeanFieldState& mf,
                                  double tol) {
    require_stationary(mf);
    const double gamma = mf.gamma();
    const MomentOde ode{epsilon(k, mf), mf.mu(), gamma,
                        mf.params.interaction * mf.psi0 * mf.psi0};

    // explicit RK stability bound for the fastest moment eigenvalue
    const double rate = gamma + 2.0 * (std::abs(ode.eps + ode.mu) + ode.mu);
    const double h_max = 2.0 / rate;
    const double chunk = 1.0 / gamma;
    const double t_max = 2000.0 / gamma;

    OdeOracleResult res;
    Vec3 y{0.0, 0.0, 0.0};
    double t = 0.0, h = h_max / 10.0;
    while (t < t_max) {
        double t_chunk = 0.0;
        while (t_chunk < chunk) {
            const double h_try = std::min(h, chunk - t_chunk);
            double h_step = h_try;
            if (dopri5_step(ode, y, h_step, h_max)) {
                t_chunk += h_try;
                h = h_step;
            } else {
                h = h_step;
            }
        }
        t += chunk;
        const double r = ode.residual(y);
        res.residual_history.emplace_back(t, r);
        if (r < tol) {
            res.moments = {y[0], Complex(y[1], y[2])};
            res.residual = r;
            res.elapsed_time = t;
            return res;
        }
    }
    throw ConvergenceError("ode_steady_oracle: residual did not reach tolerance "
                           "(input close to an instability threshold?)");
}

LangevinEstimate langevin_oracle(double k, const MeanFieldState& mf,
                                 const LangevinConfig& cfg, double se_tolerance) {
    require_stationary(mf);
    if (cfg.n_traj < 2) throw DomainError("langevin_oracle: need n_traj >= 2");
    const LangevinSystem sys = make_system(k, mf, cfg, 0.0);

    const std::size_t n = static_cast<std::size_t>(cfg.n_traj);
    std::vector<double> occ(n);
    std::vector<Complex> pair(n);
    parallel_for(n, [&](std::size_t i) {
        RngStream rng(cfg.seed, i);
        TrajState st;
        for (long s = 0; s < sys.n_steps; ++s) heun_step(sys, st, rng);
        // symmetric-ordering samples; +k/-k symmetry halves the variance
        occ[i] = 0.5 * (std::norm(st.z1) + std::norm(st.z2)) - 0.5;
        pair[i] = st.z1 * std::conj(st.z2);
    });

    const MeanSe n_est = reduce(occ);
    const ComplexMeanSe c_est = reduce(pair);
    LangevinEstimate est;
    est.moments = {n_est.mean, c_est.mean};
    est.se_occupation = n_est.se;
    est.se_pair = c_est.se;
    est.dt = sys.dt;
    est.t_end = sys.dt * static_cast<double>(sys.n_steps);
    if (se_tolerance > 0.0)
        est.se_ok = n_est.se <= se_tolerance && c_est.se <= se_tolerance;
    return est;
}

TwoTimeEstimate langevin_two_time(double k, const MeanFieldState& mf, double tau,
                                  const LangevinConfig& cfg) {
    require_stationary(mf);
    if (!(tau >= 0.0)) throw DomainError("langevin_two_time: tau must be >= 0");
    if (cfg.n_traj < 2) throw DomainError("langevin_two_time: need n_traj >= 2");
    const LangevinSystem sys = make_system(k, mf, cfg, 0.0);
    const long n_tau = static_cast<long>(std::ceil(tau / sys.dt));
    const double tau_actual = n_tau * sys.dt;

    const std::size_t n = static_cast<std::size_t>(cfg.n_traj);
    std::vector<Complex> nn(n), cc(n);
    parallel_for(n, [&](std::size_t i) {
        RngStream rng(cfg.seed, i);
        TrajState st;
        for (long s = 0; s < sys.n_steps; ++s) heun_step(sys, st, rng);
        const TrajState at_t = st;
        for (long s = 0; s < n_tau; ++s) heun_step(sys, st, rng);
        nn[i] = std::conj(at_t.z1) * st.z1;
        cc[i] = st.z1 * std::conj(at_t.z2);
    });

    const ComplexMeanSe nn_est = reduce(nn);
    const ComplexMeanSe cc_est = reduce(cc);
    TwoTimeEstimate est;
    est.tau = tau_actual;
    est.nn = nn_est.mean;
    est.cc = cc_est.mean;
    est.se_nn = nn_est.se;
    est.se_cc = cc_est.se;
    return est;
}

}  // namespace qfc
