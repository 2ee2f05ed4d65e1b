// Benchmark comparing the OpenMP-parallel kernels against the serial
// reference on the library's three hot paths: jammer grid scans, all-pairs
// graph construction, and Monte Carlo coding trials.

#include <chrono>
#include <cmath>
#include <cstdio>

#include "avckit/builtin_channels.hpp"
#include "avckit/channel_graph.hpp"
#include "avckit/jammer_opt.hpp"
#include "avckit/parallel.hpp"
#include "avckit/rng.hpp"
#include "avckit/trials.hpp"

using namespace avckit;

namespace {

double seconds_of(void (*fn)(), int reps = 1) {
    auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count() / reps;
}

StateChannel random_channel(int nx, int ns, int nj, int ny, uint64_t seed) {
    Rng rng(seed);
    StateChannel ch;
    ch.nx = nx;
    ch.ns = ns;
    ch.nj = nj;
    ch.ny = ny;
    ch.ns_hat = ns;
    ch.w.resize(static_cast<std::size_t>(nx) * ns * nj * ny);
    for (int x = 0; x < nx; ++x)
        for (int s = 0; s < ns; ++s)
            for (int j = 0; j < nj; ++j) {
                double sum = 0.0;
                for (int y = 0; y < ny; ++y) {
                    double e = -std::log(1.0 - rng.next_double());
                    ch.wp(x, s, j, y) = e;
                    sum += e;
                }
                for (int y = 0; y < ny; ++y) ch.wp(x, s, j, y) /= sum;
            }
    ch.q_s.assign(ns, 1.0 / ns);
    ch.distortion = hamming_distortion(ns, ns);
    return validate_channel(ch);
}

void bench_minimax() {
    StateChannel ch = random_channel(4, 2, 3, 4, 11);
    SearchConfig cfg;
    cfg.grid_resolution = 64;
    minimax_capacity(average_out_state(ch), cfg);
}

void bench_graph() {
    StateChannel ch = random_channel(12, 2, 3, 4, 12);
    build_graph(average_out_state(ch));
}

void bench_trials() {
    SimSetup setup;
    setup.ch = binary_example_channel();
    setup.mode = CodeMode::strictly_causal;
    setup.q_x = {0.5, 0.5};
    setup.q_u_given_xs = identity_u_equals_s(setup.ch);
    setup.h = estimator_s_hat_equals_u(setup.ch, 2);
    setup.params.eta = 0.6;
    setup.params.delta = 0.3;
    setup.params.tau = 0.02;
    SearchConfig cfg;
    setup.plan = rate_plan_sc(setup.ch, setup.q_x, setup.q_u_given_xs, 0.02, cfg);
    run_trials(setup, {JammerStrategy::iid({0.5, 0.5}, "iid")}, {12}, 60, 5);
}

void run_pair(const char* name, void (*fn)()) {
    set_parallel(false);
    double serial = seconds_of(fn);
    set_parallel(true);
    double parallel = seconds_of(fn);
    std::printf("%-22s serial %8.3fs   openmp %8.3fs   speedup %5.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
    std::printf("avckit kernel benchmark (serial reference vs OpenMP)\n");
    run_pair("minimax grid scan", bench_minimax);
    run_pair("all-pairs graph", bench_graph);
    run_pair("monte carlo trials", bench_trials);
    set_parallel(true);
    return 0;
}
