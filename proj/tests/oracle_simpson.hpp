#pragma once

// Test-only adaptive Simpson oracle, independent of the Carlson-form
// implementation under test. Integrands use the theta substitution
// z = sin(theta), which removes the endpoint singularity of the
// defining z-form integrals.

#include <cmath>
#include <functional>

namespace test_oracle {

inline double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                           double fb, double fm, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_step(f, a, m, fa, fm, flm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, fb, frm, right, 0.5 * tol, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-12) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fb, fm, whole, tol, 50);
}

inline double ellip_k_oracle(double k, double tol = 1e-12) {
    return adaptive_simpson(
        [k](double th) {
            const double s = std::sin(th);
            return 1.0 / std::sqrt(1.0 - k * k * s * s);
        },
        0.0, 1.5707963267948966, tol);
}

inline double ellip_e_oracle(double k, double tol = 1e-12) {
    return adaptive_simpson(
        [k](double th) {
            const double s = std::sin(th);
            return std::sqrt(1.0 - k * k * s * s);
        },
        0.0, 1.5707963267948966, tol);
}

inline double ellip_pi_oracle(double n, double k, double tol = 1e-12) {
    return adaptive_simpson(
        [n, k](double th) {
            const double s2 = std::sin(th) * std::sin(th);
            return 1.0 / ((1.0 - n * s2) * std::sqrt(1.0 - k * k * s2));
        },
        0.0, 1.5707963267948966, tol);
}

// -(1/2pi) int_0^pi sqrt((a-cos t)^2 + g^2 sin^2 t) dt, split at the
// gamma = 0 kink.
inline double ground_energy_oracle(double a, double g, double tol = 1e-12) {
    const auto f = [a, g](double t) {
        const double d = a - std::cos(t);
        const double s = g * std::sin(t);
        return std::sqrt(d * d + s * s);
    };
    constexpr double pi = 3.14159265358979323846264338327950288;
    double total;
    if (std::abs(a) <= 1.0) {
        const double t0 = std::acos(std::abs(a));
        total = adaptive_simpson(f, 0.0, t0, 0.5 * tol) + adaptive_simpson(f, t0, pi, 0.5 * tol);
    } else {
        total = adaptive_simpson(f, 0.0, pi, tol);
    }
    return -total / (2.0 * pi);
}

}  // namespace test_oracle
