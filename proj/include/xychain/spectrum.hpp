#pragma once

#include <vector>

#include "xychain/model.hpp"

// Finite-chain free-fermion spectra: closed-form c-cyclic eigenvalues
// and open-chain one-particle energies from the singular values of the
// quadratic-form coupling matrix.

namespace xychain::spectrum {

enum class Boundary { Open, Cyclic };

struct ChainSpec {
    int n_sites = 2;
    Boundary boundary = Boundary::Open;
};

struct SpectrumResult {
    std::vector<double> lambdas;  // sorted ascending, all >= 0
    double ground_energy;         // -1/2 sum(lambdas)
    double gap;                   // min(lambdas) / N
};

inline constexpr int kMaxOpenChain = 4000;

// Lambda_k = sqrt((alpha - cos k)^2 + gamma^2 sin^2 k), k = 2 pi m / N.
SpectrumResult cyclic_lambdas(const ModelParams& p, int n_sites);

// One-particle energies of the open chain: singular values of A + B with
// hopping A (A_ii = alpha, A_{i,i+1} = -1/2, symmetric) and pairing B
// (B_{i,i+1} = -gamma/2, antisymmetric). Since (A - B) = (A + B)^T, the
// eigenvalues of (A - B)(A + B) are exactly the squared singular values.
SpectrumResult open_chain_spectrum(const ModelParams& p, int n_sites);

// Delta_N = min_k Lambda_k / N for either boundary condition.
double gap(const ModelParams& p, const ChainSpec& chain);

// lim_{N->inf} N Delta_N for the cyclic chain. Piecewise closed form
// with the interior-stationary-point condition alpha <= 1 - gamma^2,
// cross-checked at runtime by direct minimization of Lambda(k) over a
// fine k-grid with golden-section refinement.
double gap_thermo_limit(const ModelParams& p);

// All 2^N many-body levels E_g + sum_{k in S} Lambda_k, sorted.
// Requires lambdas.size() <= 24.
std::vector<double> reconstruct_levels(const SpectrumResult& s);

}  // namespace xychain::spectrum
