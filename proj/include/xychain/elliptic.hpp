#pragma once

#include <cstdint>

// Complete elliptic integrals in the modulus-k convention,
//   K(k) = int_0^1 dz / sqrt((1-z^2)(1-k^2 z^2))
//   E(k) = int_0^1 dz sqrt((1-k^2 z^2)/(1-z^2))
//   Pi(n;k) = int_0^1 dz / ((1-n z^2) sqrt((1-z^2)(1-k^2 z^2)))
// evaluated through the Carlson symmetric forms R_F, R_D, R_J.
// All functions are pure and thread-safe.

namespace xychain::elliptic {

struct EllipticArgs {
    double k = 0.0;  // modulus
    double n = 0.0;  // characteristic, third kind only
};

// Carlson symmetric forms (duplication iteration).
double carlson_rf(double x, double y, double z);
double carlson_rd(double x, double y, double z);
double carlson_rj(double x, double y, double z, double p);

// K(k), 0 <= k < 1. Throws std::domain_error outside.
double ellip_k(double k);

// E(k), 0 <= k <= 1.
double ellip_e(double k);

// Pi(n;k), n < 1, 0 <= k < 1.
double ellip_pi(double n, double k);

// m-th derivative of E with respect to k^2 at k = 0:
//   (pi/2) [(2m)! / (2^{2m} (m!)^2)]^2 / (1 - 2m).
// Exact 128-bit rational arithmetic for m <= 20, log-Gamma beyond.
double e_deriv_at_zero(int m);

// Imaginary-modulus transformation of K and E. For a real k in [0,1)
// the right-hand sides of
//   K(k) = (1/sqrt(1-k^2)) K(ik/sqrt(1-k^2))
//   E(k) = sqrt(1-k^2)     E(ik/sqrt(1-k^2))
// are evaluated through the Carlson forms at the (real, >1) arguments
// 1 + kappa^2, kappa = k/sqrt(1-k^2), giving an independent route to
// K(k) and E(k) that the identity tests compare against ellip_k/ellip_e.
struct ImagModulusTransform {
    double k_via_transform;      // right-hand side of the K identity
    double e_via_transform;      // right-hand side of the E identity
    double transformed_modulus;  // kappa = k/sqrt(1-k^2), magnitude of the imaginary modulus
};
ImagModulusTransform imaginary_modulus_transform(double k);

}  // namespace xychain::elliptic
