#include "xychain/quadoracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace xychain::quadoracle {

namespace {

// G7/K15 abscissae and weights (positive half, QUADPACK values).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    double integral;
    double error;
};

PanelResult gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const double fc = f(c);
    double gauss = fc * kWg[3];
    double kronrod = fc * kWgk[7];
    for (int i = 0; i < 7; ++i) {
        const double x = h * kXgk[i];
        const double fsum = f(c - x) + f(c + x);
        kronrod += fsum * kWgk[i];
        if (i % 2 == 1) gauss += fsum * kWg[i / 2];
    }
    return {kronrod * h, std::abs(kronrod - gauss) * h};
}

double adapt(const std::function<double(double)>& f, double a, double b, double tol, int depth,
             int max_depth, double& achieved_err) {
    const auto r = gauss_kronrod(f, a, b);
    if (r.error <= tol || r.error <= 1e-17 * std::abs(r.integral)) {
        achieved_err += r.error;
        return r.integral;
    }
    if (depth >= max_depth) {
        achieved_err += r.error;
        throw std::runtime_error("quadrature tolerance not reached: panel error " +
                                 std::to_string(r.error) + ", estimate " +
                                 std::to_string(r.integral));
    }
    const double m = 0.5 * (a + b);
    return adapt(f, a, m, 0.5 * tol, depth + 1, max_depth, achieved_err) +
           adapt(f, m, b, 0.5 * tol, depth + 1, max_depth, achieved_err);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
    if (spec.abs_tol < 1e-14 || spec.max_depth > 60)
        throw std::invalid_argument("QuadratureSpec out of bounds");
    double err = 0.0;
    return adapt(f, a, b, spec.abs_tol, 0, spec.max_depth, err);
}

double ground_energy_integral(const ModelParams& p, const QuadratureSpec& spec) {
    const double alpha = std::abs(p.alpha), gamma = std::abs(p.gamma);
    const auto integrand = [alpha, gamma](double t) {
        const double d = alpha - std::cos(t);
        const double s = gamma * std::sin(t);
        return std::sqrt(d * d + s * s);
    };
    constexpr double pi = 3.14159265358979323846264338327950288;
    double total;
    if (alpha <= 1.0) {
        // |alpha - cos t| vanishes at t0 when gamma = 0; split there.
        const double t0 = std::acos(alpha);
        total = integrate(integrand, 0.0, t0, {0.5 * spec.abs_tol, spec.max_depth}) +
                integrate(integrand, t0, pi, {0.5 * spec.abs_tol, spec.max_depth});
    } else {
        total = integrate(integrand, 0.0, pi, spec);
    }
    return -total / (2.0 * pi);
}

namespace {

// Fornberg finite-difference weights: derivative of order m at x0 = 0
// on the given stencil points.
std::vector<double> fornberg_weights(const std::vector<double>& pts, int m) {
    const int n = static_cast<int>(pts.size());
    std::vector<std::vector<double>> w(n, std::vector<double>(m + 1, 0.0));
    double c1 = 1.0;
    double c4 = pts[0];
    w[0][0] = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = pts[i];
        for (int j = 0; j < i; ++j) {
            const double c3 = pts[i] - pts[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    w[i][k] = c1 * (k * w[i - 1][k - 1] - c5 * w[i - 1][k]) / c2;
                w[i][0] = -c1 * c5 * w[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k)
                w[j][k] = (c4 * w[j][k] - k * w[j][k - 1]) / c3;
            w[j][0] = c4 * w[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = w[i][m];
    return out;
}

double stencil_eval(const std::function<double(double)>& f, double x, int order, double h,
                    StencilSide side) {
    std::vector<double> pts;
    if (side == StencilSide::Central) {
        const int m = (order + 2) / 2;
        for (int i = -m; i <= m; ++i) pts.push_back(static_cast<double>(i));
    } else {
        const int n = order + 3;
        const int sgn = (side == StencilSide::Forward) ? 1 : -1;
        for (int i = 0; i < n; ++i) pts.push_back(static_cast<double>(sgn * i));
    }
    const auto w = fornberg_weights(pts, order);
    double acc = 0.0;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (w[i] == 0.0) continue;
        const double fv = f(x + pts[i] * h);
        if (!std::isfinite(fv))
            throw std::runtime_error("derivative: non-finite function value at x = " +
                                     std::to_string(x + pts[i] * h));
        acc += w[i] * fv;
    }
    return acc / std::pow(h, order);
}

}  // namespace

DerivativeResult derivative(const std::function<double(double)>& f, double x, int order, double h0,
                            StencilSide side) {
    if (order < 1 || order > 6) throw std::invalid_argument("derivative: order must be 1..6");
    if (h0 <= 0.0) {
        // roundoff grows like eps / h^order (worse for one-sided stencils,
        // whose weights are large), so the default base step must widen
        // with the order
        static constexpr double kCentral[6] = {1e-4, 5e-3, 1e-1, 4e-1, 4e-1, 5e-1};
        static constexpr double kOneSided[6] = {1e-3, 1e-2, 5e-2, 1e-1, 2e-1, 2e-1};
        h0 = (side == StencilSide::Central) ? kCentral[order - 1] : kOneSided[order - 1];
    }

    // Neville table: central stencils have an even error series (steps of
    // h^2 per column); one-sided ones gain one power per column.
    const int levels = 4;
    const int p0 = (side == StencilSide::Central) ? ((order % 2 == 0) ? 4 : 2) : 3;
    const int pstep = (side == StencilSide::Central) ? 2 : 1;
    std::vector<std::vector<double>> tab(levels);
    for (int i = 0; i < levels; ++i) {
        tab[i].resize(i + 1);
        tab[i][0] = stencil_eval(f, x, order, h0 / std::pow(2.0, i), side);
        for (int j = 1; j <= i; ++j) {
            const double r = std::pow(2.0, p0 + (j - 1) * pstep);
            tab[i][j] = tab[i][j - 1] + (tab[i][j - 1] - tab[i - 1][j - 1]) / (r - 1.0);
        }
    }
    const double best = tab[levels - 1][levels - 1];
    const double err = std::abs(best - tab[levels - 1][levels - 2]) +
                       std::abs(best - tab[levels - 2][levels - 2]);
    return {best, err};
}

}  // namespace xychain::quadoracle
