#include "avckit/simplex_opt.hpp"

#include <algorithm>
#include <cmath>

#include "avckit/distributions.hpp"
#include "avckit/parallel.hpp"
#include "avckit/rng.hpp"

namespace avckit {

namespace {

void compositions(int k, int res, Dist& cur, int pos, int left, std::vector<Dist>& out) {
    if (pos == k - 1) {
        cur[pos] = static_cast<double>(left) / res;
        out.push_back(cur);
        return;
    }
    for (int c = 0; c <= left; ++c) {
        cur[pos] = static_cast<double>(c) / res;
        compositions(k, res, cur, pos + 1, left - c, out);
    }
}

uint64_t grid_size(int k, int res) {
    // C(res + k - 1, k - 1), saturating
    uint64_t v = 1;
    for (int i = 1; i < k; ++i) {
        v = v * static_cast<uint64_t>(res + i) / static_cast<uint64_t>(i);
        if (v > (1ull << 62)) return 1ull << 62;
    }
    return v;
}

bool better(double a, double b, bool minimize) { return minimize ? a < b : a > b; }

// Pattern refinement: moves x += h(e_i - e_j), step halved each round.
void refine_point(const std::function<double(const Dist&)>& f, Dist& x, double& fx, double h0,
                  int rounds, bool minimize) {
    const int k = static_cast<int>(x.size());
    double h = h0;
    for (int round = 0; round < rounds; ++round) {
        h /= 2.0;
        bool improved = true;
        int guard = 0;
        while (improved && guard++ < 400) {
            improved = false;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    if (i == j || x[j] < h - 1e-15) continue;
                    Dist y = x;
                    y[i] += h;
                    y[j] -= h;
                    double fy = f(y);
                    if (better(fy, fx, minimize)) {
                        x = y;
                        fx = fy;
                        improved = true;
                    }
                }
        }
    }
}

}  // namespace

std::vector<Dist> simplex_grid(int k, int res) {
    std::vector<Dist> out;
    if (k <= 0) return out;
    if (k == 1) {
        out.push_back({1.0});
        return out;
    }
    Dist cur(k, 0.0);
    compositions(k, res, cur, 0, res, out);
    return out;
}

ScanResult optimize_simplex(const std::function<double(const Dist&)>& f, int k, bool minimize,
                            const SearchConfig& cfg) {
    ScanResult res;
    if (k == 1) {
        res.arg = {1.0};
        res.value = f(res.arg);
        return res;
    }
    int grid_res = cfg.grid_resolution;
    while (grid_res > 2 && grid_size(k, grid_res) > cfg.grid_budget) grid_res /= 2;
    std::vector<Dist> pts = simplex_grid(k, grid_res);
    std::vector<double> vals(pts.size());
    par_for(pts.size(), [&](std::size_t i) { vals[i] = f(pts[i]); });
    std::size_t best = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (better(vals[i], vals[best], minimize)) best = i;
    res.arg = pts[best];
    res.value = vals[best];
    refine_point(f, res.arg, res.value, 1.0 / grid_res, cfg.refinement_rounds, minimize);
    res.bracket = 1.0 / grid_res / std::pow(2.0, cfg.refinement_rounds);
    return res;
}

KernelScanResult optimize_kernel(const std::function<double(const Kernel&)>& f, int rows, int cols,
                                 bool minimize, const SearchConfig& cfg) {
    KernelScanResult res;
    res.arg = Kernel(rows, cols, 1.0 / cols);
    if (cols == 1) {
        res.value = f(res.arg);
        return res;
    }

    // Seed set: uniform kernel, product grid if it fits the budget, otherwise
    // all deterministic kernels (if small) plus seeded random kernels.
    std::vector<Kernel> seeds;
    seeds.push_back(res.arg);
    int grid_res = cfg.grid_resolution;
    auto row_pts_count = [&](int r) { return grid_size(cols, r); };
    double total = 1.0;
    while (grid_res > 2) {
        total = std::pow(static_cast<double>(row_pts_count(grid_res)), rows);
        if (total <= static_cast<double>(cfg.grid_budget)) break;
        grid_res /= 2;
    }
    if (total <= static_cast<double>(cfg.grid_budget)) {
        std::vector<Dist> row_pts = simplex_grid(cols, grid_res);
        std::vector<std::size_t> idx(rows, 0);
        for (;;) {
            Kernel k(rows, cols);
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < cols; ++c) k.at(r, c) = row_pts[idx[r]][c];
            seeds.push_back(std::move(k));
            int r = rows - 1;
            while (r >= 0 && ++idx[r] == row_pts.size()) idx[r--] = 0;
            if (r < 0) break;
        }
    } else {
        double det_total = std::pow(static_cast<double>(cols), rows);
        if (det_total <= 4096.0) {
            std::vector<int> choice(rows, 0);
            for (;;) {
                Kernel k(rows, cols);
                for (int r = 0; r < rows; ++r) k.at(r, choice[r]) = 1.0;
                seeds.push_back(std::move(k));
                int r = rows - 1;
                while (r >= 0 && ++choice[r] == cols) choice[r--] = 0;
                if (r < 0) break;
            }
        }
        Rng rng = Rng::stream(cfg.rng_seed, 0x6b65726e);
        for (int s = 0; s < cfg.multistart_count; ++s) {
            Kernel k(rows, cols);
            for (int r = 0; r < rows; ++r) {
                double sum = 0.0;
                for (int c = 0; c < cols; ++c) {
                    double e = -std::log(1.0 - rng.next_double());
                    k.at(r, c) = e;
                    sum += e;
                }
                for (int c = 0; c < cols; ++c) k.at(r, c) /= sum;
            }
            seeds.push_back(std::move(k));
        }
    }

    std::vector<double> vals(seeds.size());
    par_for(seeds.size(), [&](std::size_t i) { vals[i] = f(seeds[i]); });
    std::size_t best = 0;
    for (std::size_t i = 1; i < seeds.size(); ++i)
        if (better(vals[i], vals[best], minimize)) best = i;
    res.arg = seeds[best];
    res.value = vals[best];

    // Row-wise pattern sweeps with halving step.
    double h = 1.0 / std::max(2, grid_res);
    for (int round = 0; round < cfg.refinement_rounds + 2; ++round) {
        h /= 2.0;
        bool improved = true;
        int guard = 0;
        while (improved && guard++ < 200) {
            improved = false;
            for (int r = 0; r < rows; ++r)
                for (int i = 0; i < cols; ++i)
                    for (int j = 0; j < cols; ++j) {
                        if (i == j || res.arg.at(r, j) < h - 1e-15) continue;
                        Kernel y = res.arg;
                        y.at(r, i) += h;
                        y.at(r, j) -= h;
                        double fy = f(y);
                        if (better(fy, res.value, minimize)) {
                            res.arg = y;
                            res.value = fy;
                            improved = true;
                        }
                    }
        }
    }
    res.bracket = h;
    return res;
}

BaResult blahut_arimoto(const Kernel& rows, double tol, int max_iters) {
    const int nx = rows.rows, ny = rows.cols;
    BaResult res;
    res.q_x.assign(nx, 1.0 / nx);
    Dist out(ny);
    std::vector<double> d(nx);
    for (int it = 0; it < max_iters; ++it) {
        std::fill(out.begin(), out.end(), 0.0);
        for (int x = 0; x < nx; ++x)
            for (int y = 0; y < ny; ++y) out[y] += res.q_x[x] * rows.at(x, y);
        double lo = 0.0, hi = 0.0;  // I <= C <= max_x d(x): standard BA bracket
        for (int x = 0; x < nx; ++x) {
            double dx = 0.0;
            for (int y = 0; y < ny; ++y) {
                double w = rows.at(x, y);
                if (w > 0.0 && out[y] > 0.0) dx += w * std::log2(w / out[y]);
            }
            d[x] = dx;
            lo += res.q_x[x] * dx;
            hi = std::max(hi, dx);
        }
        if (hi - lo < tol) {
            res.capacity = lo;
            return res;
        }
        double norm = 0.0;
        for (int x = 0; x < nx; ++x) {
            res.q_x[x] *= std::exp2(d[x]);
            norm += res.q_x[x];
        }
        for (int x = 0; x < nx; ++x) res.q_x[x] /= norm;
    }
    double mi = 0.0;
    std::fill(out.begin(), out.end(), 0.0);
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y) out[y] += res.q_x[x] * rows.at(x, y);
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y) {
            double w = rows.at(x, y);
            if (w > 0.0 && out[y] > 0.0) mi += res.q_x[x] * w * std::log2(w / out[y]);
        }
    res.capacity = mi;
    return res;
}

}  // namespace avckit
