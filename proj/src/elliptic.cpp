#include "xychain/elliptic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace xychain::elliptic {

namespace {

// Duplication-theorem tolerances; the truncation error of the final
// Taylor tail scales like errtol^6 for R_F and errtol^6 for R_D/R_J,
// so 2e-4 leaves the results at full double accuracy.
constexpr double kErrTol = 2e-4;
constexpr int kMaxIter = 200;

[[noreturn]] void domain_fail(const char* fn, double v) {
    throw std::domain_error(std::string(fn) + ": argument out of domain, value = " + std::to_string(v));
}

}  // namespace

double carlson_rf(double x, double y, double z) {
    double xt = x, yt = y, zt = z;
    double mu = 0, dx = 0, dy = 0, dz = 0;
    for (int it = 0; it < kMaxIter; ++it) {
        const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
        const double lam = sx * (sy + sz) + sy * sz;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        zt = 0.25 * (zt + lam);
        mu = (xt + yt + zt) / 3.0;
        dx = (mu - xt) / mu;
        dy = (mu - yt) / mu;
        dz = (mu - zt) / mu;
        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < kErrTol) break;
    }
    const double e2 = dx * dy - dz * dz;
    const double e3 = dx * dy * dz;
    return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / std::sqrt(mu);
}

double carlson_rd(double x, double y, double z) {
    double xt = x, yt = y, zt = z;
    double sum = 0.0, fac = 1.0;
    double mu = 0, dx = 0, dy = 0, dz = 0;
    for (int it = 0; it < kMaxIter; ++it) {
        const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
        const double lam = sx * (sy + sz) + sy * sz;
        sum += fac / (sz * (zt + lam));
        fac *= 0.25;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        zt = 0.25 * (zt + lam);
        mu = 0.2 * (xt + yt + 3.0 * zt);
        dx = (mu - xt) / mu;
        dy = (mu - yt) / mu;
        dz = (mu - zt) / mu;
        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < kErrTol) break;
    }
    const double ea = dx * dy;
    const double eb = dz * dz;
    const double ec = ea - eb;
    const double ed = ea - 6.0 * eb;
    const double ee = ed + ec + ec;
    return 3.0 * sum +
           fac *
               (1.0 + ed * (-3.0 / 14.0 + 9.0 / 88.0 * ed - 4.5 / 26.0 * dz * ee) +
                dz * (1.0 / 6.0 * ee + dz * (-9.0 / 22.0 * ec + 3.0 / 26.0 * dz * ea))) /
               (mu * std::sqrt(mu));
}

double carlson_rj(double x, double y, double z, double p) {
    if (p <= 0.0) domain_fail("carlson_rj", p);
    double xt = x, yt = y, zt = z, pt = p;
    double sum = 0.0, fac = 1.0;
    double mu = 0, dx = 0, dy = 0, dz = 0, dp = 0;
    for (int it = 0; it < kMaxIter; ++it) {
        const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
        const double lam = sx * (sy + sz) + sy * sz;
        const double alpha = pt * (sx + sy + sz) + sx * sy * sz;
        const double beta = pt * (pt + lam) * (pt + lam);
        // R_C(alpha^2, beta) = R_F(alpha^2, beta, beta)
        sum += fac * carlson_rf(alpha * alpha, beta, beta);
        fac *= 0.25;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        zt = 0.25 * (zt + lam);
        pt = 0.25 * (pt + lam);
        mu = 0.2 * (xt + yt + zt + 2.0 * pt);
        dx = (mu - xt) / mu;
        dy = (mu - yt) / mu;
        dz = (mu - zt) / mu;
        dp = (mu - pt) / mu;
        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz), std::abs(dp)}) < kErrTol) break;
    }
    const double ea = dx * (dy + dz) + dy * dz;
    const double eb = dx * dy * dz;
    const double ec = dp * dp;
    const double ed = ea - 3.0 * ec;
    const double ee = eb + 2.0 * dp * (ea - ec);
    return 3.0 * sum +
           fac *
               (1.0 + ed * (-3.0 / 14.0 + 9.0 / 88.0 * ed - 9.0 / 52.0 * dp * ee) +
                eb * (1.0 / 6.0 + dp * (-6.0 / 22.0 + dp * 3.0 / 26.0)) +
                dp * ea * (1.0 / 3.0 - dp * 3.0 / 22.0) - 1.0 / 3.0 * dp * ec) /
               (mu * std::sqrt(mu));
}

double ellip_k(double k) {
    if (k < 0.0 || k >= 1.0) domain_fail("ellip_k", k);
    return carlson_rf(0.0, 1.0 - k * k, 1.0);
}

double ellip_e(double k) {
    if (k < 0.0 || k > 1.0) domain_fail("ellip_e", k);
    if (k == 1.0) return 1.0;
    const double kc2 = 1.0 - k * k;
    return carlson_rf(0.0, kc2, 1.0) - (k * k / 3.0) * carlson_rd(0.0, kc2, 1.0);
}

double ellip_pi(double n, double k) {
    if (n >= 1.0) domain_fail("ellip_pi", n);
    if (k < 0.0 || k >= 1.0) domain_fail("ellip_pi", k);
    const double kc2 = 1.0 - k * k;
    return carlson_rf(0.0, kc2, 1.0) + (n / 3.0) * carlson_rj(0.0, kc2, 1.0, 1.0 - n);
}

double e_deriv_at_zero(int m) {
    if (m < 0) domain_fail("e_deriv_at_zero", m);
    const double half_pi = 1.5707963267948966192313216916398;
    if (m <= 20) {
        // c_m = (2m)!/(2^{2m}(m!)^2) = (2m-1)!!/(2^m m!), kept as an exact
        // 128-bit rational before squaring.
        unsigned __int128 num = 1, den = 1;
        for (int j = 1; j <= m; ++j) {
            num *= static_cast<unsigned>(2 * j - 1);
            den *= static_cast<unsigned>(2 * j);
        }
        const double c = static_cast<double>(num) / static_cast<double>(den);
        return half_pi * c * c / (1.0 - 2.0 * m);
    }
    // log-Gamma fallback; c_m = exp(lgamma(2m+1) - 2m log 2 - 2 lgamma(m+1))
    const double logc = std::lgamma(2.0 * m + 1.0) - 2.0 * m * std::log(2.0) - 2.0 * std::lgamma(m + 1.0);
    return half_pi * std::exp(2.0 * logc) / (1.0 - 2.0 * m);
}

ImagModulusTransform imaginary_modulus_transform(double k) {
    if (k < 0.0 || k >= 1.0) domain_fail("imaginary_modulus_transform", k);
    const double kc2 = 1.0 - k * k;
    const double kappa2 = k * k / kc2;
    // K(i kappa) = R_F(0, 1+kappa^2, 1), E(i kappa) = R_F + (kappa^2/3) R_D,
    // both real since (i kappa)^2 = -kappa^2.
    const double k_imag = carlson_rf(0.0, 1.0 + kappa2, 1.0);
    const double e_imag = carlson_rf(0.0, 1.0 + kappa2, 1.0) + (kappa2 / 3.0) * carlson_rd(0.0, 1.0 + kappa2, 1.0);
    return {k_imag / std::sqrt(kc2), std::sqrt(kc2) * e_imag, std::sqrt(kappa2)};
}

}  // namespace xychain::elliptic
