// Compares the OpenMP kernels against their serial references:
// spin-Hamiltonian row fill and phase-diagram scans.

#include <omp.h>

#include <chrono>
#include <cstdio>

#include "xychain/analysis.hpp"
#include "xychain/exactspin.hpp"

using namespace xychain;

namespace {

template <typename F>
double time_s(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    std::printf("threads available: %d\n\n", omp_get_max_threads());

    {
        const ModelParams p{0.5, 0.5};
        const int n = 13;
        double checksum_par = 0, checksum_ser = 0;
        const double t_ser =
            time_s([&] { checksum_ser = exactspin::build_serial(p, n).matrix.squaredNorm(); });
        const double t_par =
            time_s([&] { checksum_par = exactspin::build(p, n).matrix.squaredNorm(); });
        std::printf("spin hamiltonian build, N = %d (dim %d)\n", n, 1 << n);
        std::printf("  serial : %8.3f s\n  openmp : %8.3f s  (speedup %.2fx)\n", t_ser, t_par,
                    t_ser / t_par);
        std::printf("  checksums match: %s\n\n", checksum_par == checksum_ser ? "yes" : "NO");
    }

    {
        analysis::ScanGrid grid;
        grid.alpha_range = {0.0, 2.0, 200};
        grid.gamma_range = {0.01, 1.0, 200};
        grid.quantity = analysis::Quantity::Energy;
        std::vector<analysis::ScanRow> r1, rn;
        const double t_ser = time_s([&] { r1 = analysis::scan(grid, 1); });
        const double t_par = time_s([&] { rn = analysis::scan(grid, 0); });
        bool same = r1.size() == rn.size();
        for (std::size_t i = 0; same && i < r1.size(); ++i) same = r1[i].value == rn[i].value;
        std::printf("energy scan, 200 x 200 grid\n");
        std::printf("  serial : %8.3f s\n  openmp : %8.3f s  (speedup %.2fx)\n", t_ser, t_par,
                    t_ser / t_par);
        std::printf("  results identical: %s\n\n", same ? "yes" : "NO");
    }

    {
        const ModelParams p{1.5, 0.6};
        std::vector<int> ns;
        for (int n = 100; n <= 700; n += 100) ns.push_back(n);
        std::vector<std::pair<int, double>> s1, sn;
        const double t_ser =
            time_s([&] { s1 = analysis::gap_series(p, ns, spectrum::Boundary::Open, 1); });
        const double t_par =
            time_s([&] { sn = analysis::gap_series(p, ns, spectrum::Boundary::Open, 0); });
        bool same = s1 == sn;
        std::printf("open-chain gap series, N up to 700\n");
        std::printf("  serial : %8.3f s\n  openmp : %8.3f s  (speedup %.2fx)\n", t_ser, t_par,
                    t_ser / t_par);
        std::printf("  results identical: %s\n", same ? "yes" : "NO");
    }
    return 0;
}
