#include "xychain/analysis.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>
#include <ostream>
#include <stdexcept>

#include "xychain/closedform.hpp"

namespace xychain::analysis {

namespace {

double axis_point(const AxisRange& r, int i) {
    if (r.count == 1) return r.lo;
    return r.lo + (r.hi - r.lo) * i / (r.count - 1);
}

ScanRow eval_node(const ScanGrid& grid, double alpha, double gamma) {
    ScanRow row{alpha, gamma, std::numeric_limits<double>::quiet_NaN(), NodeStatus::Ok};
    const ModelParams p{alpha, gamma};
    try {
        switch (grid.quantity) {
            case Quantity::Energy: row.value = closedform::ground_energy(p); break;
            case Quantity::Magnetization: row.value = closedform::magnetization(p); break;
            case Quantity::Susceptibility: row.value = closedform::susceptibility(p); break;
            case Quantity::Gap:
                row.value = spectrum::gap(p, {grid.chain_length, grid.boundary});
                break;
            case Quantity::CircleDerivative:
                row.value = closedform::circle_derivative(grid.derivative_order, gamma);
                break;
        }
    } catch (const std::domain_error&) {
        const auto region = closedform::classify(p);
        row.status = (region == PhaseRegion::CriticalLine || region == PhaseRegion::IsotropyLine)
                         ? NodeStatus::DivergentLine
                         : NodeStatus::DomainError;
    } catch (const std::exception&) {
        row.status = NodeStatus::DomainError;
    }
    return row;
}

}  // namespace

std::vector<ScanRow> scan(const ScanGrid& grid, int n_threads) {
    if (grid.alpha_range.count < 2 || grid.gamma_range.count < 2)
        throw std::invalid_argument("scan: axis counts must be >= 2");
    if (!(std::isfinite(grid.alpha_range.lo) && std::isfinite(grid.alpha_range.hi) &&
          std::isfinite(grid.gamma_range.lo) && std::isfinite(grid.gamma_range.hi)))
        throw std::invalid_argument("scan: axis ranges must be finite");
    const int na = grid.alpha_range.count, ng = grid.gamma_range.count;
    std::vector<ScanRow> rows(static_cast<std::size_t>(na) * ng);
    if (n_threads <= 0) n_threads = omp_get_max_threads();
    // Result slots are preassigned, so completion order cannot affect
    // the emitted ordering (row-major in alpha, then gamma).
#pragma omp parallel for collapse(2) schedule(dynamic) num_threads(n_threads)
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < ng; ++j)
            rows[static_cast<std::size_t>(i) * ng + j] =
                eval_node(grid, axis_point(grid.alpha_range, i), axis_point(grid.gamma_range, j));
    return rows;
}

std::vector<std::pair<int, double>> gap_series(const ModelParams& p, const std::vector<int>& ns,
                                               spectrum::Boundary boundary, int n_threads) {
    for (std::size_t i = 1; i < ns.size(); ++i)
        if (ns[i] <= ns[i - 1]) throw std::invalid_argument("gap_series: Ns must be ascending");
    std::vector<std::pair<int, double>> out(ns.size());
    if (n_threads <= 0) n_threads = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(n_threads)
    for (std::size_t i = 0; i < ns.size(); ++i)
        out[i] = {ns[i], spectrum::gap(p, {ns[i], boundary})};
    return out;
}

GapFit fit_gap_scaling(const std::vector<std::pair<int, double>>& points) {
    const int m = static_cast<int>(points.size());
    if (m < 3) throw std::invalid_argument("fit_gap_scaling: need >= 3 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [n, d] : points) {
        const double x = 1.0 / n;
        sx += x;
        sy += d;
        sxx += x * x;
        sxy += x * d;
    }
    const double det = m * sxx - sx * sx;
    if (std::abs(det) < 1e-300 * m * sxx || det == 0.0)
        throw std::invalid_argument("fit_gap_scaling: rank-deficient (all N equal?)");
    GapFit fit;
    fit.a = (m * sxy - sx * sy) / det;
    fit.delta_inf = (sxx * sy - sx * sxy) / det;
    double ss = 0;
    for (const auto& [n, d] : points) {
        const double r = d - (fit.a / n + fit.delta_inf);
        ss += r * r;
    }
    fit.residual_norm = std::sqrt(ss / m);
    const double sigma2 = (m > 2) ? ss / (m - 2) : 0.0;
    fit.stderr_a = std::sqrt(sigma2 * m / det);
    fit.stderr_delta_inf = std::sqrt(sigma2 * sxx / det);
    return fit;
}

const char* to_string(NodeStatus s) {
    switch (s) {
        case NodeStatus::Ok: return "ok";
        case NodeStatus::DivergentLine: return "divergent_line";
        case NodeStatus::DomainError: return "domain_error";
    }
    return "?";
}

const char* to_string(Quantity q) {
    switch (q) {
        case Quantity::Energy: return "energy";
        case Quantity::Magnetization: return "magnetization";
        case Quantity::Susceptibility: return "susceptibility";
        case Quantity::Gap: return "gap";
        case Quantity::CircleDerivative: return "circle_derivative";
    }
    return "?";
}

namespace {

void print_g17(std::ostream& os, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<ScanRow>& rows, Quantity q) {
    os << "alpha,gamma,quantity,value,status\n";
    for (const auto& r : rows) {
        print_g17(os, r.alpha);
        os << ',';
        print_g17(os, r.gamma);
        os << ',' << to_string(q) << ',';
        if (r.status == NodeStatus::Ok)
            print_g17(os, r.value);
        else
            os << "nan";
        os << ',' << to_string(r.status) << '\n';
    }
}

void write_plot_script(std::ostream& os, const std::string& csv_path, Quantity q) {
    const bool heatmap = (q == Quantity::Energy || q == Quantity::Gap);
    os << "#!/usr/bin/env python3\n"
          "import csv\n"
          "import matplotlib\n"
          "matplotlib.use('Agg')\n"
          "import matplotlib.pyplot as plt\n\n"
          "rows = []\n"
          "with open('"
       << csv_path
       << "') as fh:\n"
          "    for r in csv.DictReader(fh):\n"
          "        if r['status'] == 'ok':\n"
          "            rows.append((float(r['alpha']), float(r['gamma']), float(r['value'])))\n\n";
    if (heatmap) {
        os << "alphas = sorted({r[0] for r in rows})\n"
              "gammas = sorted({r[1] for r in rows})\n"
              "import numpy as np\n"
              "grid = np.full((len(gammas), len(alphas)), np.nan)\n"
              "ai = {a: i for i, a in enumerate(alphas)}\n"
              "gi = {g: i for i, g in enumerate(gammas)}\n"
              "for a, g, v in rows:\n"
              "    grid[gi[g], ai[a]] = v\n"
              "plt.pcolormesh(alphas, gammas, grid, shading='auto')\n"
              "plt.colorbar(label='"
           << to_string(q)
           << "')\n"
              "plt.xlabel('alpha')\n"
              "plt.ylabel('gamma')\n";
    } else {
        os << "for g in sorted({r[1] for r in rows}):\n"
              "    pts = sorted((a, v) for a, gg, v in rows if gg == g)\n"
              "    plt.plot([p[0] for p in pts], [p[1] for p in pts], label=f'gamma={g:g}')\n"
              "plt.xlabel('alpha')\n"
              "plt.ylabel('"
           << to_string(q)
           << "')\n"
              "plt.legend()\n";
    }
    os << "plt.savefig('" << to_string(q) << ".png', dpi=150)\n";
}

}  // namespace xychain::analysis
