#pragma once

#include "xychain/model.hpp"

// Closed-form ground-state thermodynamics of the anisotropic XY chain:
// region classification, three-branch elliptic-integral energy,
// magnetization, susceptibility, near-critical expansions and the
// arbitrary-order derivative limits on the circle alpha^2 + gamma^2 = 1.
//
// All formulas are even in alpha and in gamma; inputs are folded to
// alpha >= 0, gamma >= 0 before dispatch.

namespace xychain::closedform {

// Tolerance on the defining expressions for boundary classification.
inline constexpr double kBoundaryTol = 1e-12;

PhaseRegion classify(const ModelParams& p);

// Ground-state energy per site. Total on the valid domain; boundary
// regions use the (finite) limiting values, in particular -1/2 on the
// circle alpha^2 + gamma^2 = 1.
double ground_energy(const ModelParams& p);

// Transverse magnetization <M> = -d eps_g / d alpha. Zero at alpha = 0
// by evenness; boundary regions use two-sided limit averaging.
double magnetization(const ModelParams& p);

// Magnetic susceptibility chi = -d^2 eps_g / d alpha^2 (positive on the
// interior; eps_g is concave in alpha). Throws std::domain_error on the
// critical line alpha = 1 and the isotropy line gamma = 0 where it
// diverges logarithmically.
double susceptibility(const ModelParams& p);

// Logarithmic expansion of chi near alpha = 1, through the
// |1-alpha| log|1-alpha| term. Requires gamma > 0 and alpha != 1.
double chi_expansion_near_critical(const ModelParams& p);

// Expansion of d^2 eps_g / d gamma^2 near gamma = 0 for alpha < 1,
// through the gamma^2 log gamma^2 term. Throws for alpha >= 1 (energy
// is smooth there) and for gamma = 0 (log divergence).
double d2e_dgamma2_expansion(const ModelParams& p);

// Limit, as alpha -> sqrt(1-gamma^2) from either side, of the
// (n+2)-th alpha-derivative of the NEGATED ground-state energy.
// Derivatives of -eps_g are the natural sign here: the order-2 value is
// the susceptibility limit 1/(4 gamma) > 0, and eps_g itself is concave
// in alpha. Both one-sided limits coincide (the energy is smooth on the
// circle). total_order = n + 2 >= 2; gamma in (0,1).
double circle_derivative(int total_order, double gamma);

}  // namespace xychain::closedform
