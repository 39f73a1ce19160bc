// Independent numerical oracles used by the tests.  Everything here is kept
// deliberately separate from the implementation paths it checks: the matrix
// exponential is scaling-and-squaring Taylor (the library uses closed forms),
// J0 is an integral representation (the library uses minimax approximations),
// and the optimizers are plain grid/golden-section searches.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "qfc/mat2.hpp"

namespace oracle {

using qfc::Complex;
using qfc::Mat2;

/// exp(M) by scaling-and-squaring with a Taylor series on the scaled matrix.
inline Mat2 mat2_exp(const Mat2& m) {
    int s = 0;
    double norm = m.max_abs();
    while (norm > 0.25 && s < 60) {
        norm /= 2.0;
        ++s;
    }
    const double scale = std::ldexp(1.0, -s);
    const Mat2 a = Complex(scale) * m;
    Mat2 result = qfc::identity2();
    Mat2 term = qfc::identity2();
    for (int n = 1; n <= 30; ++n) {
        term = Complex(1.0 / n) * (term * a);
        result = result + term;
        if (term.max_abs() < 1e-20) break;
    }
    for (int i = 0; i < s; ++i) result = result * result;
    return result;
}

/// J0(x) = (1/pi) Int_0^pi cos(x sin t) dt, composite Simpson sized to the
/// oscillation count; abs error far below 1e-11 for |x| < 3000.
inline double j0_integral(double x) {
    x = std::abs(x);
    int n = 512 + 16 * static_cast<int>(x);
    if (n % 2) ++n;
    const double h = std::numbers::pi / n;
    double acc = std::cos(x * std::sin(0.0)) + std::cos(x * std::sin(n * h));
    for (int i = 1; i < n; ++i)
        acc += (i % 2 ? 4.0 : 2.0) * std::cos(x * std::sin(i * h));
    return acc * h / 3.0 / std::numbers::pi;
}

/// Least-squares line through (x, y); returns {slope, intercept}.
inline std::pair<double, double> linear_fit(const std::vector<double>& x,
                                            const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return {slope, (sy - slope * sx) / n};
}

/// Golden-section minimum of f on [a, b].
inline double golden_min(const std::function<double(double)>& f, double a,
                         double b, double tol = 1e-10) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    while (std::abs(b - a) > tol * (std::abs(a) + std::abs(b) + 1.0)) {
        if (f(c) < f(d)) {
            b = d;
        } else {
            a = c;
        }
        c = b - gr * (b - a);
        d = a + gr * (b - a);
    }
    return (a + b) / 2.0;
}

/// Indices of strict local extrema of a sampled signal.
inline std::vector<std::size_t> local_extrema(const std::vector<double>& y) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        if ((y[i] > y[i - 1] && y[i] > y[i + 1]) ||
            (y[i] < y[i - 1] && y[i] < y[i + 1]))
            idx.push_back(i);
    }
    return idx;
}

/// Zero crossings of a sampled signal, linearly interpolated.
inline std::vector<double> zero_crossings(const std::vector<double>& t,
                                          const std::vector<double>& y) {
    std::vector<double> zs;
    for (std::size_t i = 0; i + 1 < y.size(); ++i) {
        if ((y[i] > 0 && y[i + 1] < 0) || (y[i] < 0 && y[i + 1] > 0)) {
            const double f = y[i] / (y[i] - y[i + 1]);
            zs.push_back(t[i] + f * (t[i + 1] - t[i]));
        }
    }
    return zs;
}

/// Oscillation frequency from the mean zero-crossing spacing (= pi / spacing).
inline double crossing_frequency(const std::vector<double>& t,
                                 const std::vector<double>& y) {
    const auto zs = zero_crossings(t, y);
    if (zs.size() < 2) return 0.0;
    return std::numbers::pi * static_cast<double>(zs.size() - 1) /
           (zs.back() - zs.front());
}

/// Exponential decay rate of the oscillation envelope: log-linear fit
/// through the magnitudes of the local extrema.
inline double envelope_decay_rate(const std::vector<double>& t,
                                  const std::vector<double>& y) {
    const auto idx = local_extrema(y);
    std::vector<double> ts, logs;
    for (const std::size_t i : idx) {
        if (std::abs(y[i]) > 0.0) {
            ts.push_back(t[i]);
            logs.push_back(std::log(std::abs(y[i])));
        }
    }
    if (ts.size() < 3) return 0.0;
    return -linear_fit(ts, logs).first;
}

}  // namespace oracle
