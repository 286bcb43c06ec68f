#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "xychain/model.hpp"
#include "xychain/spectrum.hpp"

// Parameter scans, gap-vs-N series, the a/N + Delta_inf fit, and the
// CSV / plot-script outputs. Grid nodes evaluate concurrently; the
// emitted ordering is row-major in alpha then gamma regardless of the
// thread count, so runs are byte-reproducible.

namespace xychain::analysis {

enum class Quantity { Energy, Magnetization, Susceptibility, Gap, CircleDerivative };

struct AxisRange {
    double lo = 0.0;
    double hi = 1.0;
    int count = 2;  // >= 2
};

struct ScanGrid {
    AxisRange alpha_range;
    AxisRange gamma_range;
    Quantity quantity = Quantity::Energy;
    int chain_length = 100;                                    // Gap only
    spectrum::Boundary boundary = spectrum::Boundary::Open;    // Gap only
    int derivative_order = 2;                                  // CircleDerivative only
};

enum class NodeStatus { Ok, DivergentLine, DomainError };

struct ScanRow {
    double alpha;
    double gamma;
    double value;  // NaN unless status == Ok
    NodeStatus status;
};

struct GapFit {
    double a = 0.0;          // slope versus 1/N
    double delta_inf = 0.0;  // intercept
    double stderr_a = 0.0;
    double stderr_delta_inf = 0.0;
    double residual_norm = 0.0;  // rms residual
};

std::vector<ScanRow> scan(const ScanGrid& grid, int n_threads = 0);

std::vector<std::pair<int, double>> gap_series(const ModelParams& p, const std::vector<int>& ns,
                                               spectrum::Boundary boundary, int n_threads = 0);

// Ordinary least squares of Delta_N against 1/N. Needs >= 3 points with
// distinct N; throws std::invalid_argument otherwise.
GapFit fit_gap_scaling(const std::vector<std::pair<int, double>>& points);

const char* to_string(NodeStatus s);
const char* to_string(Quantity q);

// CSV with header alpha,gamma,quantity,value,status; 17 significant digits.
void write_csv(std::ostream& os, const std::vector<ScanRow>& rows, Quantity q);

// Self-contained python script that plots the given CSV.
void write_plot_script(std::ostream& os, const std::string& csv_path, Quantity q);

}  // namespace xychain::analysis
