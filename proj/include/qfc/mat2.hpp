#pragma once

#include <complex>

#include "qfc/errors.hpp"

namespace qfc {

using Complex = std::complex<double>;

/// Dense 2x2 complex matrix, row major: [[a, b], [c, d]].
/// All the linear algebra in this project is 2x2, done in closed form.
struct Mat2 {
    Complex a{}, b{}, c{}, d{};

    friend Mat2 operator*(const Mat2& l, const Mat2& r) {
        return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
                l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
    }
    friend Mat2 operator+(const Mat2& l, const Mat2& r) {
        return {l.a + r.a, l.b + r.b, l.c + r.c, l.d + r.d};
    }
    friend Mat2 operator*(Complex s, const Mat2& m) {
        return {s * m.a, s * m.b, s * m.c, s * m.d};
    }

    Complex det() const { return a * d - b * c; }

    Mat2 inverse() const {
        const Complex dt = det();
        if (std::abs(dt) < 1e-300) throw DomainError("mat2: singular matrix");
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    /// Solve M x = rhs for x = (x1, x2).
    std::pair<Complex, Complex> solve(Complex r1, Complex r2) const {
        const Complex dt = det();
        if (std::abs(dt) < 1e-300) throw DomainError("mat2: singular system");
        return {(d * r1 - b * r2) / dt, (a * r2 - c * r1) / dt};
    }

    double max_abs() const {
        return std::max(std::max(std::abs(a), std::abs(b)),
                        std::max(std::abs(c), std::abs(d)));
    }
};

inline Mat2 identity2() { return {1.0, 0.0, 0.0, 1.0}; }

}  // namespace qfc
