#pragma once

// Shared domain types: a point of the (alpha, gamma) phase diagram and
// its region classification. alpha is the transverse field, gamma the
// anisotropy, in units where J = -1 (ferromagnetic chain).

namespace xychain {

struct ModelParams {
    double alpha = 0.0;
    double gamma = 0.0;
};

enum class PhaseRegion {
    DiskInterior,     // alpha^2 + gamma^2 < 1
    AnnulusWeakField, // alpha^2 + gamma^2 > 1, alpha < 1
    StrongField,      // alpha > 1
    CircleBoundary,   // alpha^2 + gamma^2 = 1 within tolerance
    CriticalLine,     // alpha = 1
    IsotropyLine,     // gamma = 0
};

const char* to_string(PhaseRegion r);

}  // namespace xychain
