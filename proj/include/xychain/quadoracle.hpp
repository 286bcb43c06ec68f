#pragma once

#include <functional>

#include "xychain/model.hpp"

// Independent numerical oracles used to certify the closed forms:
// adaptive Gauss-Kronrod quadrature of the defining energy integral and
// Richardson-extrapolated finite-difference derivatives.

namespace xychain::quadoracle {

struct QuadratureSpec {
    double abs_tol = 1e-12;  // >= 1e-14
    int max_depth = 50;      // <= 60
};

// Adaptive G7/K15 integral of f over [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec);

// -(1/2pi) int_0^pi sqrt((alpha - cos t)^2 + gamma^2 sin^2 t) dt.
// The interval is split at t = arccos(alpha) for alpha <= 1, where the
// gamma = 0 integrand has a derivative kink.
double ground_energy_integral(const ModelParams& p, const QuadratureSpec& spec = {});

enum class StencilSide { Central, Forward, Backward };

struct DerivativeResult {
    double value;
    double error_estimate;
};

// Finite-difference derivative of given order (1..6) with Richardson
// extrapolation over three step halvings. h0 = 0 picks a default base
// step (1e-5 for orders <= 2, 1e-3 above).
DerivativeResult derivative(const std::function<double(double)>& f, double x, int order,
                            double h0 = 0.0, StencilSide side = StencilSide::Central);

}  // namespace xychain::quadoracle
