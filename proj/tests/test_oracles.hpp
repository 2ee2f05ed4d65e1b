// Shared independent oracles for the test suites.  These evaluate the
// defining equalities straight from the channel tensors and minimize by grid
// scan plus pattern search, with no dependence on the library's LP path.
#ifndef AVCKIT_TEST_ORACLES_HPP
#define AVCKIT_TEST_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "avckit/builtin_channels.hpp"
#include "avckit/channel.hpp"
#include "avckit/rng.hpp"
#include "avckit/symmetrizability.hpp"

namespace avckit::testing {

inline StateChannel random_channel(int nx, int ns, int nj, int ny, uint64_t seed) {
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

// Max violation of the Definition-2 equality for variant `v` under kernel T,
// written out directly from the channel tensor.
inline double oracle_violation(const StateChannel& ch, SymVariant v, const Kernel& t) {
    double worst = 0.0;
    auto upd = [&](double lhs, double rhs) { worst = std::max(worst, std::fabs(lhs - rhs)); };
    auto mixed = [&](int x, int s, int trow, int y) {
        double acc = 0.0;
        for (int j = 0; j < ch.nj; ++j) acc += ch.wp(x, s, j, y) * t.at(trow, j);
        return acc;
    };
    switch (v) {
        case SymVariant::XS:
            for (int x = 0; x < ch.nx; ++x)
                for (int s = 0; s < ch.ns; ++s)
                    for (int xp = 0; xp < ch.nx; ++xp)
                        for (int sp = 0; sp < ch.ns; ++sp)
                            for (int y = 0; y < ch.ny; ++y)
                                upd(mixed(x, s, xp * ch.ns + sp, y), mixed(xp, sp, x * ch.ns + s, y));
            break;
        case SymVariant::X:
            for (int x = 0; x < ch.nx; ++x)
                for (int xp = 0; xp < ch.nx; ++xp)
                    for (int s = 0; s < ch.ns; ++s)
                        for (int y = 0; y < ch.ny; ++y) upd(mixed(x, s, xp, y), mixed(xp, s, x, y));
            break;
        case SymVariant::S:
            for (int s = 0; s < ch.ns; ++s)
                for (int sp = 0; sp < ch.ns; ++sp)
                    for (int x = 0; x < ch.nx; ++x)
                        for (int y = 0; y < ch.ny; ++y) upd(mixed(x, s, sp, y), mixed(x, sp, s, y));
            break;
        case SymVariant::X_given_S:
            for (int s = 0; s < ch.ns; ++s)
                for (int x = 0; x < ch.nx; ++x)
                    for (int xp = 0; xp < ch.nx; ++xp)
                        for (int y = 0; y < ch.ny; ++y)
                            upd(mixed(x, s, xp * ch.ns + s, y), mixed(xp, s, x * ch.ns + s, y));
            break;
        case SymVariant::S_given_X:
            for (int x = 0; x < ch.nx; ++x)
                for (int s = 0; s < ch.ns; ++s)
                    for (int sp = 0; sp < ch.ns; ++sp)
                        for (int y = 0; y < ch.ny; ++y)
                            upd(mixed(x, s, x * ch.ns + sp, y), mixed(x, sp, x * ch.ns + s, y));
            break;
        default:
            break;
    }
    return worst;
}

inline int t_rows_of(const StateChannel& ch, SymVariant v) {
    if (v == SymVariant::X) return ch.nx;
    if (v == SymVariant::S) return ch.ns;
    return ch.nx * ch.ns;
}

// Grid minimization over binary-J kernels at the given resolution, then a
// pattern search over every sign direction so the piecewise-linear objective
// cannot stall on a single-coordinate ridge.
inline double brute_force_margin(const StateChannel& ch, SymVariant v, int res) {
    const int rows = t_rows_of(ch, v);
    std::vector<int> idx(rows, 0);
    Kernel t(rows, 2);
    double best = 1e300;
    Kernel best_t = t;
    for (;;) {
        for (int r = 0; r < rows; ++r) {
            t.at(r, 0) = static_cast<double>(idx[r]) / res;
            t.at(r, 1) = 1.0 - t.at(r, 0);
        }
        double viol = oracle_violation(ch, v, t);
        if (viol < best) {
            best = viol;
            best_t = t;
        }
        int r = rows - 1;
        while (r >= 0 && ++idx[r] > res) idx[r--] = 0;
        if (r < 0) break;
    }

    std::vector<std::vector<int>> dirs;
    std::vector<int> d(rows, -1);
    for (;;) {
        if (std::any_of(d.begin(), d.end(), [](int v2) { return v2 != 0; })) dirs.push_back(d);
        int r = rows - 1;
        while (r >= 0 && ++d[r] > 1) d[r--] = -1;
        if (r < 0) break;
    }
    double h = 1.0 / res;
    for (int round = 0; round < 12; ++round) {
        h /= 2.0;
        bool improved = true;
        while (improved) {
            improved = false;
            for (const auto& dir : dirs) {
                Kernel trial = best_t;
                bool ok = true;
                for (int r = 0; r < rows; ++r) {
                    double v0 = trial.at(r, 0) + dir[r] * h;
                    if (v0 < 0.0 || v0 > 1.0) {
                        ok = false;
                        break;
                    }
                    trial.at(r, 0) = v0;
                    trial.at(r, 1) = 1.0 - v0;
                }
                if (!ok) continue;
                double viol = oracle_violation(ch, v, trial);
                if (viol < best - 1e-15) {
                    best = viol;
                    best_t = trial;
                    improved = true;
                }
            }
        }
    }
    return best;
}

}  // namespace avckit::testing

#endif
