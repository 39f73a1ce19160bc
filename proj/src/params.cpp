#include "qfc/params.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qfc {

namespace {

constexpr double kPi = std::numbers::pi;

/// Cubic in n0 from the mean-field fixed point:
///   g^2 n^3 - 2 delta g n^2 + (delta^2 + gamma^2/4) n - |F|^2 = 0.
struct MeanFieldCubic {
    double c3, c2, c1, c0;

    double eval(double n) const { return ((c3 * n + c2) * n + c1) * n + c0; }
    double deriv(double n) const { return (3.0 * c3 * n + 2.0 * c2) * n + c1; }

    double polish(double n) const {
        for (int it = 0; it < 8; ++it) {
            const double f = eval(n);
            const double df = deriv(n);
            if (df == 0.0) break;
            const double step = f / df;
            n -= step;
            if (std::abs(step) <= 1e-16 * std::abs(n)) break;
        }
        return n;
    }
};

/// Real roots of the monic cubic t^3 + p t^2 + q t + r, ascending.
/// Discriminant-based: trigonometric branch for three real roots, Cardano
/// otherwise.  Near-degenerate discriminants fall into the trig branch and
/// come out as (almost) repeated values.
std::vector<double> solve_monic_cubic(double p, double q, double r) {
    const double P = q - p * p / 3.0;
    const double Q = 2.0 * p * p * p / 27.0 - p * q / 3.0 + r;
    const double shift = -p / 3.0;
    const double disc = -4.0 * P * P * P - 27.0 * Q * Q;

    std::vector<double> roots;
    if (disc > 0.0) {
        // three distinct real roots; P < 0 here
        const double m = 2.0 * std::sqrt(-P / 3.0);
        const double arg = std::clamp(3.0 * Q / (P * m), -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        for (int j = 0; j < 3; ++j)
            roots.push_back(shift + m * std::cos(theta - 2.0 * kPi * j / 3.0));
    } else if (P == 0.0 && Q == 0.0) {
        roots.assign(3, shift);
    } else if (disc == 0.0) {
        // double root t1, simple root t2
        const double t1 = -1.5 * Q / P;
        const double t2 = 3.0 * Q / P;
        roots = {shift + t1, shift + t1, shift + t2};
    } else {
        // one real root (Cardano, cancellation-safe sign choice)
        const double u = -Q / 2.0 + std::sqrt(Q * Q / 4.0 + P * P * P / 27.0);
        double t;
        if (u != 0.0) {
            const double cu = std::cbrt(u);
            t = cu - P / (3.0 * cu);
        } else {
            t = std::cbrt(-Q);
        }
        roots = {shift + t};
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

void PhysicalParams::validate() const {
    std::string violations;
    auto add = [&violations](const std::string& msg) {
        if (!violations.empty()) violations += "; ";
        violations += msg;
    };
    if (!(mass > 0.0)) add("mass must be > 0");
    if (!(loss > 0.0)) add("loss rate gamma must be > 0");
    if (!(interaction >= 0.0)) add("interaction g must be >= 0");
    if (!std::isfinite(detuning)) add("detuning must be finite");
    if (!std::isfinite(pump.real()) || !std::isfinite(pump.imag()))
        add("pump must be finite");
    if (!violations.empty()) throw DomainError("invalid parameters: " + violations);
}

const char* to_string(PumpRegime r) {
    return r == PumpRegime::Bistable ? "bistable" : "optical-limiter";
}

const char* to_string(Branch b) {
    switch (b) {
        case Branch::Low: return "low";
        case Branch::Middle: return "middle";
        case Branch::High: return "high";
        default: return "single";
    }
}

double pump_for_density(const PhysicalParams& p, double n0) {
    p.validate();
    if (!(n0 >= 0.0)) throw DomainError("pump_for_density: n0 must be >= 0");
    const double Delta = p.detuning - p.interaction * n0;
    return std::sqrt(n0 * (Delta * Delta + p.loss * p.loss / 4.0));
}

Complex condensate_phase(const PhysicalParams& p, double n0) {
    p.validate();
    if (!(n0 >= 0.0)) throw DomainError("condensate_phase: n0 must be >= 0");
    const double Delta = p.detuning - p.interaction * n0;
    const Complex psi0 = p.pump / Complex(Delta, p.loss / 2.0);
    const double got = std::norm(psi0);
    const double scale = std::max(n0, got);
    if (scale > 0.0 && std::abs(got - n0) > 1e-9 * scale)
        throw DomainError("condensate_phase: (n0, F) pair is inconsistent with "
                          "the mean-field fixed point");
    return psi0;
}

StabilityResult dynamical_stability(const PhysicalParams& p, double n0) {
    p.validate();
    const double mu = p.interaction * n0;
    const double Delta = p.detuning - mu;
    double growth = 0.0;
    if (Delta > 0.0) {
        // max over the diffusive set of Im omega = sqrt(-eps (eps + 2 mu));
        // the unconstrained max sits at eps = -mu, reachable iff Delta >= mu.
        growth = (Delta >= mu) ? mu : std::sqrt(Delta * (2.0 * mu - Delta));
    }
    return {growth < p.loss / 2.0, growth};
}

double emission_angle(double k, double omega_laser, double c_light) {
    if (!(omega_laser > 0.0) || !(c_light > 0.0) || !(k >= 0.0))
        throw DomainError("emission_angle: need k >= 0, omega_L > 0, c > 0");
    const double s = c_light * k / omega_laser;
    if (s > 1.0)
        throw RegimeError("emission_angle: evanescent mode, c k > omega_L");
    return std::asin(s);
}

std::vector<MeanFieldState> density_branches(const PhysicalParams& p) {
    p.validate();
    const double g = p.interaction;
    const double gamma = p.loss;
    const double delta = p.detuning;
    const double f2 = std::norm(p.pump);
    const PumpRegime regime = delta > std::sqrt(3.0) * gamma / 2.0
                                  ? PumpRegime::Bistable
                                  : PumpRegime::OpticalLimiter;

    std::vector<double> roots;
    if (g == 0.0) {
        roots = {f2 / (delta * delta + gamma * gamma / 4.0)};
    } else {
        const MeanFieldCubic cubic{g * g, -2.0 * delta * g,
                                   delta * delta + gamma * gamma / 4.0, -f2};
        roots = solve_monic_cubic(cubic.c2 / cubic.c3, cubic.c1 / cubic.c3,
                                  cubic.c0 / cubic.c3);
        for (double& n : roots) n = cubic.polish(n);
        // physical roots only; tiny negative excursions are roundoff at F = 0
        std::erase_if(roots, [](double n) { return n < -1e-14; });
        for (double& n : roots) n = std::max(n, 0.0);
        std::sort(roots.begin(), roots.end());
    }

    std::vector<MeanFieldState> out;
    const bool three = roots.size() == 3;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const double n0 = roots[i];
        MeanFieldState mf;
        mf.params = p;
        mf.density = n0;
        mf.interaction_energy = g * n0;
        mf.effective_detuning = delta - g * n0;
        mf.psi0 = p.pump / Complex(mf.effective_detuning, gamma / 2.0);
        mf.regime = regime;
        mf.branch = three ? (i == 0 ? Branch::Low
                                    : (i == 1 ? Branch::Middle : Branch::High))
                          : Branch::Single;
        const StabilityResult st = dynamical_stability(p, n0);
        mf.max_growth_rate = st.max_growth_rate;
        // the middle branch of the hysteresis loop is always unstable
        mf.dynamically_stable = st.stable && mf.branch != Branch::Middle;
        out.push_back(mf);
    }
    return out;
}

MeanFieldState mean_field_at_density(const PhysicalParams& params, double n0) {
    PhysicalParams p = params;
    p.pump = pump_for_density(p, n0);
    auto branches = density_branches(p);
    // pick the branch that reproduces n0 (always present by construction)
    const MeanFieldState* best = &branches.front();
    for (const auto& b : branches)
        if (std::abs(b.density - n0) < std::abs(best->density - n0)) best = &b;
    MeanFieldState mf = *best;
    // keep the caller's density bit-exact; the cubic round trip is < 1e-10
    mf.density = n0;
    mf.interaction_energy = p.interaction * n0;
    mf.effective_detuning = p.detuning - mf.interaction_energy;
    mf.psi0 = p.pump / Complex(mf.effective_detuning, p.loss / 2.0);
    return mf;
}

MeanFieldState mean_field_from_mu_delta(double mu, double Delta, double gamma,
                                        double mg, double mass) {
    if (!(mu >= 0.0)) throw DomainError("mean_field_from_mu_delta: mu must be >= 0");
    if (!(mg > 0.0)) throw DomainError("mean_field_from_mu_delta: mg must be > 0");
    PhysicalParams p;
    p.mass = mass;
    p.loss = gamma;
    p.interaction = mg / mass;
    p.detuning = Delta + mu;
    const double n0 = mu / p.interaction;
    return mean_field_at_density(p, n0);
}

}  // namespace qfc
