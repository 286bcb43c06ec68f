#include "xychain/exactspin.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace xychain::exactspin {

namespace {

// Fill one row (basis state s) of H by bit operations on s.
void fill_row(Eigen::MatrixXd& h, const ModelParams& p, int n, std::uint64_t s) {
    // Diagonal: -alpha sum_i Sz, Sz = +1/2 for a set bit.
    const int ups = __builtin_popcountll(s);
    h(s, s) = -p.alpha * (ups - 0.5 * n);
    // Off-diagonal: flip each neighbour pair (i, i+1).
    for (int i = 0; i + 1 < n; ++i) {
        const std::uint64_t mask = (std::uint64_t{1} << i) | (std::uint64_t{1} << (i + 1));
        const std::uint64_t t = s ^ mask;
        const bool parallel = ((s >> i) & 1) == ((s >> (i + 1)) & 1);
        h(s, t) = parallel ? -0.5 * p.gamma : -0.5;
    }
}

}  // namespace

SpinHamiltonian build(const ModelParams& p, int n_sites) {
    if (n_sites < 2 || n_sites > kMaxSites) throw std::invalid_argument("build: N out of range");
    const std::int64_t dim = std::int64_t{1} << n_sites;
    SpinHamiltonian h{n_sites, Eigen::MatrixXd::Zero(dim, dim)};
#pragma omp parallel for schedule(static)
    for (std::int64_t s = 0; s < dim; ++s)
        fill_row(h.matrix, p, n_sites, static_cast<std::uint64_t>(s));
    return h;
}

SpinHamiltonian build_serial(const ModelParams& p, int n_sites) {
    if (n_sites < 2 || n_sites > kMaxSites) throw std::invalid_argument("build: N out of range");
    const std::int64_t dim = std::int64_t{1} << n_sites;
    SpinHamiltonian h{n_sites, Eigen::MatrixXd::Zero(dim, dim)};
    for (std::int64_t s = 0; s < dim; ++s)
        fill_row(h.matrix, p, n_sites, static_cast<std::uint64_t>(s));
    return h;
}

std::vector<double> full_spectrum(const SpinHamiltonian& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("full_spectrum: eigensolver failed");
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

}  // namespace xychain::exactspin
