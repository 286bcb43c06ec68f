#include "xychain/spectrum.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace xychain::spectrum {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kClampFloor = -1e-12;

double lambda_at(const ModelParams& p, double k) {
    const double d = p.alpha - std::cos(k);
    const double s = p.gamma * std::sin(k);
    return std::sqrt(d * d + s * s);
}

SpectrumResult assemble(std::vector<double> lambdas, int n) {
    for (double& l : lambdas) {
        if (l < 0.0) {
            if (l < kClampFloor)
                throw std::runtime_error("negative one-particle energy beyond clamp floor");
            l = 0.0;
        }
    }
    std::sort(lambdas.begin(), lambdas.end());
    const double sum = std::accumulate(lambdas.begin(), lambdas.end(), 0.0);
    SpectrumResult r;
    r.gap = lambdas.front() / n;
    r.ground_energy = -0.5 * sum;
    r.lambdas = std::move(lambdas);
    return r;
}

}  // namespace

SpectrumResult cyclic_lambdas(const ModelParams& p, int n_sites) {
    if (n_sites < 2) throw std::invalid_argument("cyclic_lambdas: N >= 2 required");
    std::vector<double> lambdas(n_sites);
    for (int m = 0; m < n_sites; ++m) lambdas[m] = lambda_at(p, 2.0 * kPi * m / n_sites);
    return assemble(std::move(lambdas), n_sites);
}

SpectrumResult open_chain_spectrum(const ModelParams& p, int n_sites) {
    if (n_sites < 2 || n_sites > kMaxOpenChain)
        throw std::invalid_argument("open_chain_spectrum: N out of range");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_sites, n_sites);  // A + B
    for (int i = 0; i < n_sites; ++i) m(i, i) = p.alpha;
    for (int i = 0; i + 1 < n_sites; ++i) {
        m(i, i + 1) = -0.5 - 0.5 * p.gamma;  // A_{i,i+1} + B_{i,i+1}
        m(i + 1, i) = -0.5 + 0.5 * p.gamma;  // A_{i+1,i} + B_{i+1,i}
    }
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
    if (svd.info() != Eigen::Success)
        throw std::runtime_error("open_chain_spectrum: SVD failed");
    const auto& sv = svd.singularValues();
    std::vector<double> lambdas(sv.data(), sv.data() + sv.size());
    return assemble(std::move(lambdas), n_sites);
}

double gap(const ModelParams& p, const ChainSpec& chain) {
    const auto r = (chain.boundary == Boundary::Cyclic)
                       ? cyclic_lambdas(p, chain.n_sites)
                       : open_chain_spectrum(p, chain.n_sites);
    return r.gap;
}

double gap_thermo_limit(const ModelParams& p) {
    const double a = std::abs(p.alpha), g = std::abs(p.gamma);
    // Candidate minima of Lambda(k): the band edges k = 0, pi and the
    // interior stationary point cos k* = alpha / (1 - gamma^2), which
    // exists only for alpha <= 1 - gamma^2.
    double best = std::min(std::abs(a - 1.0), std::abs(a + 1.0));
    const double omg2 = 1.0 - g * g;
    if (omg2 > 0.0 && a <= omg2) {
        const double interior = g * std::sqrt((1.0 - a * a - g * g) / omg2);
        best = std::min(best, interior);
    }

    // Direct minimization over k as an internal guard against a wrong
    // piecewise branch: coarse grid, then golden-section refinement.
    const int grid = 100000;
    double kmin = 0.0, fmin = lambda_at({a, g}, 0.0);
    for (int i = 1; i <= grid; ++i) {
        const double k = kPi * i / grid;
        const double f = lambda_at({a, g}, k);
        if (f < fmin) {
            fmin = f;
            kmin = k;
        }
    }
    double lo = std::max(0.0, kmin - kPi / grid), hi = std::min(kPi, kmin + kPi / grid);
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
        if (lambda_at({a, g}, x1) < lambda_at({a, g}, x2))
            hi = x2;
        else
            lo = x1;
    }
    const double direct = lambda_at({a, g}, 0.5 * (lo + hi));
    return std::min(best, direct);
}

std::vector<double> reconstruct_levels(const SpectrumResult& s) {
    const int n = static_cast<int>(s.lambdas.size());
    if (n > 24) throw std::invalid_argument("reconstruct_levels: too many modes");
    std::vector<double> levels{s.ground_energy};
    levels.reserve(std::size_t{1} << n);
    for (int i = 0; i < n; ++i) {
        const std::size_t sz = levels.size();
        for (std::size_t j = 0; j < sz; ++j) levels.push_back(levels[j] + s.lambdas[i]);
    }
    std::sort(levels.begin(), levels.end());
    return levels;
}

}  // namespace xychain::spectrum
