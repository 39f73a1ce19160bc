#include "qfc/bogoliubov.hpp"

#include <cmath>

namespace qfc {

namespace {

constexpr Complex kI{0.0, 1.0};

double radicand(double eps, double mu) { return eps * (eps + 2.0 * mu); }

bool is_boundary(double rad, double mu) {
    return std::abs(rad) < 1e-10 * mu * mu;
}

}  // namespace

const char* to_string(ModeClass c) {
    switch (c) {
        case ModeClass::Diffusive: return "diffusive";
        case ModeClass::Boundary: return "boundary";
        default: return "propagating";
    }
}

double epsilon(double k, const MeanFieldState& mf) {
    return k * k / (2.0 * mf.mass()) - mf.effective_detuning;
}

Complex omega(double k, const MeanFieldState& mf) {
    const double rad = radicand(epsilon(k, mf), mf.mu());
    return rad >= 0.0 ? Complex(std::sqrt(rad), 0.0)
                      : Complex(0.0, std::sqrt(-rad));
}

ModeClass classify(double k, const MeanFieldState& mf) {
    const double rad = radicand(epsilon(k, mf), mf.mu());
    if (is_boundary(rad, mf.mu())) return ModeClass::Boundary;
    return rad > 0.0 ? ModeClass::Propagating : ModeClass::Diffusive;
}

Mat2 bogoliubov_matrix(double k, const MeanFieldState& mf) {
    const double eps = epsilon(k, mf);
    const double mu = mf.mu();
    return {Complex(eps + mu), Complex(mu), Complex(-mu), Complex(-eps - mu)};
}

PropagatingCoeffs coeffs_propagating(double k, const MeanFieldState& mf) {
    if (classify(k, mf) != ModeClass::Propagating)
        throw RegimeError("coeffs_propagating: mode is not propagating");
    const double eps = epsilon(k, mf);
    const double mu = mf.mu();
    if (mu == 0.0) return {1.0, 0.0};  // free particles
    const double w = std::sqrt(radicand(eps, mu));
    if (eps >= 0.0) {
        const double h = (eps + mu) / (2.0 * w);
        return {std::sqrt(h + 0.5), -std::sqrt(h - 0.5)};
    }
    // inner disk (eps <= -2 mu): continue the radicals with |eps + mu|;
    // diagonalizing B_k puts both components on the same sign here.
    const double h = -(eps + mu) / (2.0 * w);
    return {std::sqrt(h + 0.5), std::sqrt(h - 0.5)};
}

DiffusiveCoeffs coeffs_diffusive(double k, const MeanFieldState& mf) {
    if (classify(k, mf) != ModeClass::Diffusive)
        throw RegimeError("coeffs_diffusive: mode is not diffusive");
    const double eps = epsilon(k, mf);
    const double mu = mf.mu();
    const double Gamma = std::sqrt(-radicand(eps, mu));
    if (!(Gamma > 0.0))
        throw RegimeError("coeffs_diffusive: degenerate mode (Gamma ~ 0)");
    const Complex s{std::sqrt(mu / (2.0 * Gamma)), 0.0};
    const Complex r = -mu / Complex(eps + mu, Gamma) * s;
    return {r, s};
}

Mat2 transform_matrix(double k, const MeanFieldState& mf) {
    switch (classify(k, mf)) {
        case ModeClass::Propagating: {
            const auto [u, v] = coeffs_propagating(k, mf);
            if (epsilon(k, mf) >= 0.0)
                return {Complex(u), Complex(v), Complex(v), Complex(u)};
            // inner disk: the +omega eigenvector is (v, u)
            return {Complex(v), Complex(u), Complex(u), Complex(v)};
        }
        case ModeClass::Diffusive: {
            // amplified branch (+i Gamma) first: its eigenvector is (r*, s*)
            const auto [r, s] = coeffs_diffusive(k, mf);
            return {std::conj(r), r, std::conj(s), s};
        }
        default:
            throw RegimeError("transform_matrix: boundary mode is degenerate");
    }
}

EvolutionCoeffs evolution_coeffs(double k, const MeanFieldState& mf, double t) {
    if (!(t >= 0.0)) throw DomainError("evolution_coeffs: t must be >= 0");
    const double eps = epsilon(k, mf);
    const double mu = mf.mu();
    const double gamma = mf.gamma();
    const double rad = radicand(eps, mu);

    EvolutionCoeffs ec;
    ec.damping = std::exp(-gamma * t / 2.0);

    if (is_boundary(rad, mu)) {
        // both closed forms are singular at omega -> 0: use the degenerate
        // limit of exp(-i B t), with series in q = rad t^2 (valid both signs)
        const double q = rad * t * t;
        const double cosz = 1.0 + q * (-0.5 + q * (1.0 / 24.0 - q / 720.0));
        const double sinc = 1.0 + q * (-1.0 / 6.0 + q * (1.0 / 120.0 - q / 5040.0));
        ec.eta = cosz - kI * (eps + mu) * t * sinc;
        ec.zeta = -kI * mu * t * sinc;
        return ec;
    }

    if (rad > 0.0) {
        const double w = std::sqrt(rad);
        const auto [u, v] = coeffs_propagating(k, mf);
        const Complex rot = std::exp(-kI * w * t);
        if (eps >= 0.0) {
            ec.eta = u * u * rot - v * v / rot;
            ec.zeta = 2.0 * kI * u * v * std::sin(w * t);
        } else {
            // inner disk: phases flip sign relative to the eps >= 0 case
            ec.eta = u * u / rot - v * v * rot;
            ec.zeta = -2.0 * kI * u * v * std::sin(w * t);
        }
        return ec;
    }

    const double Gamma = std::sqrt(-rad);
    const auto [r, s] = coeffs_diffusive(k, mf);
    const double grow = std::exp(Gamma * t);
    ec.eta = kI * (s * std::conj(r) * grow - std::conj(s) * r / grow);
    ec.zeta = -2.0 * kI * std::norm(s) * std::sinh(Gamma * t);
    return ec;
}

ModeRecord mode_record(double k, const MeanFieldState& mf) {
    ModeRecord rec;
    rec.k = k;
    rec.epsilon = epsilon(k, mf);
    rec.omega = omega(k, mf);
    rec.mode_class = classify(k, mf);
    if (rec.mode_class == ModeClass::Propagating) {
        const auto [u, v] = coeffs_propagating(k, mf);
        rec.coeff_a = u;
        rec.coeff_b = v;
    } else if (rec.mode_class == ModeClass::Diffusive) {
        const auto [r, s] = coeffs_diffusive(k, mf);
        rec.coeff_a = r;
        rec.coeff_b = s;
    }
    return rec;
}

DiffusiveSet diffusive_set(const MeanFieldState& mf) {
    const double Delta = mf.effective_detuning;
    const double mu = mf.mu();
    const double m = mf.mass();
    if (!(Delta > 0.0) || !(mu > 0.0)) return {};
    DiffusiveSet set;
    set.present = true;
    set.k_outer = std::sqrt(2.0 * m * Delta);
    set.k_inner = Delta > 2.0 * mu ? std::sqrt(2.0 * m * (Delta - 2.0 * mu)) : 0.0;
    return set;
}

}  // namespace qfc
