#pragma once

#include <Eigen/Dense>
#include <vector>

#include "xychain/model.hpp"

// Brute-force oracle: dense construction and full diagonalization of the
// original 2^N spin-1/2 Hamiltonian (open chain, J = -1):
//   H = -sum_i [(1+gamma) Sx_i Sx_{i+1} + (1-gamma) Sy_i Sy_{i+1}]
//       - alpha sum_i Sz_i.
// All matrix elements are real; in the Sz product basis the interaction
// flips a neighbour pair with amplitude -1/2 (antiparallel) or
// -gamma/2 (parallel).

namespace xychain::exactspin {

inline constexpr int kMaxSites = 14;

struct SpinHamiltonian {
    int n_sites;
    Eigen::MatrixXd matrix;  // dense real symmetric, dimension 2^N
};

SpinHamiltonian build(const ModelParams& p, int n_sites);

// Serial reference for the row-parallel builder, kept for testing.
SpinHamiltonian build_serial(const ModelParams& p, int n_sites);

// All 2^N eigenvalues, ascending.
std::vector<double> full_spectrum(const SpinHamiltonian& h);

}  // namespace xychain::exactspin
