#include "xychain/closedform.hpp"

#include <cmath>
#include <stdexcept>

#include "xychain/elliptic.hpp"

namespace xychain {

const char* to_string(PhaseRegion r) {
    switch (r) {
        case PhaseRegion::DiskInterior: return "disk_interior";
        case PhaseRegion::AnnulusWeakField: return "annulus_weak_field";
        case PhaseRegion::StrongField: return "strong_field";
        case PhaseRegion::CircleBoundary: return "circle_boundary";
        case PhaseRegion::CriticalLine: return "critical_line";
        case PhaseRegion::IsotropyLine: return "isotropy_line";
    }
    return "?";
}

}  // namespace xychain

namespace xychain::closedform {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

using elliptic::e_deriv_at_zero;
using elliptic::ellip_e;
using elliptic::ellip_k;
using elliptic::ellip_pi;

struct Folded {
    double a;  // |alpha|
    double g;  // |gamma|
};

Folded fold(const ModelParams& p) { return {std::abs(p.alpha), std::abs(p.gamma)}; }

double energy_critical_line(double g) {
    // At alpha = 1 the band factorizes, Lambda = 2 sin(t/2) sqrt(1 - (1-g^2)
    // cos^2(t/2)), and the integral is elementary:
    //   eps_g(1, g) = -(g + asin(kb)/kb)/pi,  kb = sqrt(1 - g^2).
    // Limits: g -> 0 gives -1/2 (circle corner), g -> 1 gives -2/pi.
    const double kb2 = std::max(0.0, 1.0 - g * g);
    const double kb = std::sqrt(kb2);
    const double ratio = (kb < 1e-8) ? 1.0 + kb2 / 6.0 : std::asin(kb) / kb;
    return -(g + ratio) / kPi;
}

double energy_isotropy_line(double a) {
    if (a >= 1.0) return -0.5 * a;
    return -(2.0 * std::sqrt(1.0 - a * a) + a * (kPi - 2.0 * std::acos(a))) / (2.0 * kPi);
}

}  // namespace

PhaseRegion classify(const ModelParams& p) {
    const auto [a, g] = fold(p);
    const double r2 = a * a + g * g;
    if (std::abs(r2 - 1.0) <= kBoundaryTol) return PhaseRegion::CircleBoundary;
    if (std::abs(a - 1.0) <= kBoundaryTol) return PhaseRegion::CriticalLine;
    if (g <= kBoundaryTol) return PhaseRegion::IsotropyLine;
    if (r2 < 1.0) return PhaseRegion::DiskInterior;
    if (a < 1.0) return PhaseRegion::AnnulusWeakField;
    return PhaseRegion::StrongField;
}

double ground_energy(const ModelParams& p) {
    const auto [a, g] = fold(p);
    switch (classify(p)) {
        case PhaseRegion::CircleBoundary:
            return -0.5;
        case PhaseRegion::CriticalLine:
            return energy_critical_line(g);
        case PhaseRegion::IsotropyLine:
            return energy_isotropy_line(a);
        case PhaseRegion::DiskInterior: {
            const double oma2 = 1.0 - a * a;
            const double k = std::sqrt((oma2 - g * g) / oma2);
            // g^2/(1-a^2) below machine epsilon: modulus rounds to 1; the
            // isotropy-line limit is then exact to working precision
            if (k >= 1.0) return energy_isotropy_line(a);
            const double n = -a * a / oma2;
            return -std::sqrt(oma2) / kPi * (ellip_e(k) - ellip_k(k) + ellip_pi(n, k) / oma2);
        }
        case PhaseRegion::AnnulusWeakField: {
            const double r2m1 = a * a + g * g - 1.0;
            const double k = std::sqrt(r2m1) / g;
            const double oma2 = 1.0 - a * a;
            return -oma2 / (kPi * g) * (ellip_pi(a * a, k) - ellip_k(k) + g * g * ellip_e(k) / oma2);
        }
        case PhaseRegion::StrongField: {
            const double r2m1 = a * a + g * g - 1.0;
            const double k = g / std::sqrt(r2m1);
            const double a2m1 = a * a - 1.0;
            return -a2m1 / (kPi * std::sqrt(r2m1)) *
                   (ellip_pi(1.0 / (a * a), k) - ellip_k(k) + r2m1 * ellip_e(k) / a2m1);
        }
    }
    throw std::logic_error("unreachable");
}

double magnetization(const ModelParams& p) {
    const auto [a, g] = fold(p);
    if (a == 0.0) return 0.0;
    const double sign = (p.alpha < 0.0) ? -1.0 : 1.0;  // M is odd in alpha
    switch (classify(p)) {
        case PhaseRegion::CircleBoundary:
            // k -> 0 limit, identical from both sides.
            return sign * (1.0 - std::sqrt(1.0 - a * a)) / (2.0 * a);
        case PhaseRegion::CriticalLine: {
            const double d = 1e-7;
            const double lo = magnetization({a - d, g}), hi = magnetization({a + d, g});
            return sign * 0.5 * (lo + hi);
        }
        case PhaseRegion::IsotropyLine:
            return sign * ((a >= 1.0) ? 0.5 : (kPi - 2.0 * std::acos(a)) / (2.0 * kPi));
        case PhaseRegion::DiskInterior: {
            const double oma2 = 1.0 - a * a;
            const double k = std::sqrt((oma2 - g * g) / oma2);
            if (k >= 1.0)  // degenerate modulus, see ground_energy
                return sign * (kPi - 2.0 * std::acos(a)) / (2.0 * kPi);
            return sign / (kPi * a * std::sqrt(oma2)) *
                   (ellip_pi(-a * a / oma2, k) - oma2 * ellip_k(k));
        }
        case PhaseRegion::AnnulusWeakField: {
            const double k = std::sqrt(a * a + g * g - 1.0) / g;
            return sign * (1.0 - a * a) / (kPi * a * g) * (ellip_pi(a * a, k) - ellip_k(k));
        }
        case PhaseRegion::StrongField: {
            const double r2m1 = a * a + g * g - 1.0;
            const double k = g / std::sqrt(r2m1);
            return sign * (a * a - 1.0) / (kPi * a * std::sqrt(r2m1)) * ellip_pi(1.0 / (a * a), k);
        }
    }
    throw std::logic_error("unreachable");
}

double susceptibility(const ModelParams& p) {
    const auto [a, g] = fold(p);
    switch (classify(p)) {
        case PhaseRegion::CriticalLine:
            throw std::domain_error("susceptibility diverges on the critical line alpha = 1");
        case PhaseRegion::IsotropyLine:
            throw std::domain_error("susceptibility diverges on the isotropy line gamma = 0");
        case PhaseRegion::CircleBoundary:
            return 1.0 / (4.0 * g);
        case PhaseRegion::DiskInterior: {
            const double oma2 = 1.0 - a * a;
            const double k = std::sqrt((oma2 - g * g) / oma2);
            return (oma2 * ellip_e(k) - g * g * ellip_k(k)) /
                   (kPi * std::sqrt(oma2) * (oma2 - g * g));
        }
        case PhaseRegion::AnnulusWeakField: {
            const double r2m1 = a * a + g * g - 1.0;
            const double k = std::sqrt(r2m1) / g;
            return g * (ellip_k(k) - ellip_e(k)) / (kPi * r2m1);
        }
        case PhaseRegion::StrongField: {
            // sign corrected relative to the source's printed third branch:
            // chi = -d^2 eps/d alpha^2 must be positive (eps is concave).
            const double r2m1 = a * a + g * g - 1.0;
            const double k = g / std::sqrt(r2m1);
            return (ellip_k(k) - ellip_e(k)) / (kPi * std::sqrt(r2m1));
        }
    }
    throw std::logic_error("unreachable");
}

double chi_expansion_near_critical(const ModelParams& p) {
    const double g = p.gamma;
    if (g <= 0.0) throw std::domain_error("chi_expansion_near_critical: gamma must be positive");
    const double x = std::abs(1.0 - p.alpha);
    if (x == 0.0)
        throw std::domain_error("chi_expansion_near_critical: log divergence at alpha = 1");
    const double g3 = g * g * g;
    return (std::log(1.0 / std::sqrt(x)) + std::log(2.0 * std::sqrt(2.0) * g) - 1.0) / (kPi * g) +
           (8.0 - 9.0 * std::log(2.0) - g * g - 6.0 * std::log(g)) / (4.0 * kPi * g3) * x +
           3.0 / (4.0 * kPi * g3) * x * std::log(x);
}

double d2e_dgamma2_expansion(const ModelParams& p) {
    const double a = std::abs(p.alpha);
    const double g = std::abs(p.gamma);
    if (a >= 1.0)
        throw std::domain_error("d2e_dgamma2_expansion: valid for alpha < 1 only");
    if (g == 0.0)
        throw std::domain_error("d2e_dgamma2_expansion: log divergence at gamma = 0");
    const double s = std::sqrt(1.0 - a * a);
    const double asn = std::asin(a);
    const double g2 = g * g;
    return s / kPi * (2.0 - a / s * asn + std::log(g / (4.0 * s))) +
           (15.0 - 21.0 * a * a - 18.0 * a * s * asn) / (4.0 * kPi * s) * g2 +
           9.0 * (1.0 - 2.0 * a * a) / (8.0 * kPi * s) * std::log(g2 / (16.0 * (1.0 - a * a))) * g2;
}

double circle_derivative(int total_order, double gamma) {
    if (total_order < 2) throw std::domain_error("circle_derivative: order must be >= 2");
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::domain_error("circle_derivative: gamma must lie in (0,1)");
    const int n = total_order - 2;
    const double a = std::sqrt(1.0 - gamma * gamma);
    const double inv_g2 = 1.0 / (gamma * gamma);
    double nfact = 1.0;
    for (int j = 2; j <= n; ++j) nfact *= j;
    double sum = 0.0;
    for (int k = 0; k <= n / 2; ++k) {
        double kfact = 1.0, n2kfact = 1.0;
        for (int j = 2; j <= k; ++j) kfact *= j;
        for (int j = 2; j <= n - 2 * k; ++j) n2kfact *= j;
        // Faa di Bruno for d^n/d alpha^n of E'(ktilde^2(alpha)) with
        // ktilde^2 = (alpha^2 + gamma^2 - 1)/gamma^2: the inner E-derivative
        // order is n - k + 1, and g''' = 0 truncates the partition sum.
        // e_deriv_at_zero returns the Taylor coefficient of E in k^2; the
        // true derivative needs the (n-k+1)! factor (the finite-difference
        // oracle confirms this normalization).
        double dfact = 1.0;
        for (int j = 2; j <= n - k + 1; ++j) dfact *= j;
        sum += std::pow(2.0, n - 2 * k) * nfact / (kfact * n2kfact) *
               std::pow(inv_g2, n - k) * std::pow(a, n - 2 * k) * dfact *
               e_deriv_at_zero(n - k + 1);
    }
    return -2.0 / (kPi * gamma) * sum;
}

}  // namespace xychain::closedform
