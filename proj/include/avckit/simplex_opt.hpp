#ifndef AVCKIT_SIMPLEX_OPT_HPP
#define AVCKIT_SIMPLEX_OPT_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "avckit/channel.hpp"

namespace avckit {

struct SearchConfig {
    int grid_resolution = 32;   // simplex grid step 1/grid_resolution
    int refinement_rounds = 3;  // pattern-search rounds, step halves each round
    int multistart_count = 8;
    uint64_t rng_seed = 1;
    double tolerance = 1e-7;
    uint64_t grid_budget = 200000;  // max grid points enumerated at once
};

// All compositions p/res with p summing to res: the resolution-res grid on the
// (k-1)-simplex.
std::vector<Dist> simplex_grid(int k, int res);

struct ScanResult {
    double value = 0.0;
    Dist arg;
    double bracket = 0.0;  // final pattern step: certified localization width
};

// Global grid scan (parallel) + deterministic pattern refinement.  Exact for
// the convex/concave objectives this library minimizes/maximizes, heuristic
// otherwise; the bracket reports the final step size either way.
ScanResult optimize_simplex(const std::function<double(const Dist&)>& f, int k, bool minimize,
                            const SearchConfig& cfg);

struct KernelScanResult {
    double value = 0.0;
    Kernel arg;
    double bracket = 0.0;
};

// Same over a product of simplices (a row-stochastic kernel).  Enumerates the
// product grid when small enough, otherwise seeds deterministically and
// pattern-sweeps row by row.
KernelScanResult optimize_kernel(const std::function<double(const Kernel&)>& f, int rows, int cols,
                                 bool minimize, const SearchConfig& cfg);

// Capacity max_q I(q, rows) of a DMC by Blahut-Arimoto iteration.
struct BaResult {
    double capacity = 0.0;
    Dist q_x;
};
BaResult blahut_arimoto(const Kernel& rows, double tol = 1e-12, int max_iters = 2000);

}  // namespace avckit

#endif
