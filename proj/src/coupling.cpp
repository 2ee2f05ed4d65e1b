#include "avckit/coupling.hpp"

#include <cmath>

#include "avckit/distributions.hpp"
#include "avckit/lp.hpp"

namespace avckit {

namespace {

double coupling_mi(const std::vector<double>& p, const Dist& q, int n) {
    double mi = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double v = p[static_cast<std::size_t>(i) * n + j];
            if (v > 0.0 && q[i] > 0.0 && q[j] > 0.0) mi += v * std::log2(v / (q[i] * q[j]));
        }
    return mi < 0.0 ? 0.0 : mi;
}

}  // namespace

CouplingResult coupling_min_mi(const Dist& q_u, const ChannelGraph& graph, const SearchConfig& cfg) {
    (void)cfg;
    const int n = static_cast<int>(q_u.size());
    if (graph.n != n) throw DimensionMismatch("coupling_min_mi: graph/marginal size mismatch");
    CouplingResult res;
    res.coupling.assign(static_cast<std::size_t>(n) * n, 0.0);

    // Allowed cells: connected pairs plus the diagonal.  With full support the
    // product coupling is feasible and exactly optimal.
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i == j || graph.connected(i, j)) cells.emplace_back(i, j);
    const int nv = static_cast<int>(cells.size());
    if (nv == n * n) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) res.coupling[static_cast<std::size_t>(i) * n + j] = q_u[i] * q_u[j];
        res.value = 0.0;
        return res;
    }

    // Feasible start: the diagonal coupling.
    for (int i = 0; i < n; ++i) res.coupling[static_cast<std::size_t>(i) * n + i] = q_u[i];

    auto transport_lp = [&](const std::vector<double>& grad) {
        LpBuilder lp(nv);
        std::vector<double> obj(nv);
        for (int v = 0; v < nv; ++v) obj[v] = -grad[v];  // minimize <grad, p>
        lp.set_objective(obj);
        for (int i = 0; i < n; ++i) {
            std::vector<double> row(nv, 0.0);
            for (int v = 0; v < nv; ++v)
                if (cells[v].first == i) row[v] = 1.0;
            lp.add_eq(row, q_u[i]);
        }
        for (int j = 0; j < n; ++j) {
            std::vector<double> col(nv, 0.0);
            for (int v = 0; v < nv; ++v)
                if (cells[v].second == j) col[v] = 1.0;
            lp.add_eq(col, q_u[j]);
        }
        return lp.solve().x;
    };

    const double floor = 1e-15;
    std::vector<double> grad(nv), vert(static_cast<std::size_t>(n) * n, 0.0);
    const int max_iters = 400;
    for (int it = 0; it < max_iters; ++it) {
        for (int v = 0; v < nv; ++v) {
            auto [i, j] = cells[v];
            double p = std::max(res.coupling[static_cast<std::size_t>(i) * n + j], floor);
            grad[v] = std::log2(p / std::max(q_u[i] * q_u[j], floor));
        }
        std::vector<double> vx = transport_lp(grad);
        std::fill(vert.begin(), vert.end(), 0.0);
        double gap = 0.0;
        for (int v = 0; v < nv; ++v) {
            auto [i, j] = cells[v];
            vert[static_cast<std::size_t>(i) * n + j] = std::max(0.0, vx[v]);
            gap += grad[v] * (res.coupling[static_cast<std::size_t>(i) * n + j] - vx[v]);
        }
        if (gap < 1e-12) break;
        // Exact line search on the segment: objective convex in gamma.
        double lo = 0.0, hi = 1.0;
        auto at = [&](double g) {
            std::vector<double> mix(res.coupling.size());
            for (std::size_t c = 0; c < mix.size(); ++c)
                mix[c] = (1.0 - g) * res.coupling[c] + g * vert[c];
            return coupling_mi(mix, q_u, n);
        };
        for (int b = 0; b < 40; ++b) {
            double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
            if (at(m1) <= at(m2))
                hi = m2;
            else
                lo = m1;
        }
        double g = (lo + hi) / 2.0;
        if (at(g) > at(1.0)) g = 1.0;
        if (g <= 1e-14) break;
        for (std::size_t c = 0; c < res.coupling.size(); ++c)
            res.coupling[c] = (1.0 - g) * res.coupling[c] + g * vert[c];
    }

    // Cheap polish: rebalance 2x2 submatrices inside the allowed support.
    auto idx = [&](int i, int j) { return static_cast<std::size_t>(i) * n + j; };
    auto allowed = [&](int i, int j) { return i == j || graph.connected(i, j); };
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool moved = false;
        for (int i = 0; i < n; ++i)
            for (int k = i + 1; k < n; ++k)
                for (int j = 0; j < n; ++j)
                    for (int l = 0; l < n; ++l) {
                        if (j == l) continue;
                        if (!allowed(i, j) || !allowed(i, l) || !allowed(k, j) || !allowed(k, l))
                            continue;
                        // move: p(i,j)+d, p(k,l)+d, p(i,l)-d, p(k,j)-d
                        double dmax = std::min(res.coupling[idx(i, l)], res.coupling[idx(k, j)]);
                        double dmin = -std::min(res.coupling[idx(i, j)], res.coupling[idx(k, l)]);
                        if (dmax - dmin < 1e-14) continue;
                        auto val = [&](double d) {
                            double t = 0.0;
                            auto term = [&](int a, int b, double dd) {
                                double v = res.coupling[idx(a, b)] + dd;
                                if (v > 0.0) t += v * std::log2(v / std::max(q_u[a] * q_u[b], floor));
                            };
                            term(i, j, d);
                            term(k, l, d);
                            term(i, l, -d);
                            term(k, j, -d);
                            return t;
                        };
                        double lo = dmin, hi = dmax;
                        for (int b = 0; b < 35; ++b) {
                            double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
                            if (val(m1) <= val(m2))
                                hi = m2;
                            else
                                lo = m1;
                        }
                        double d = (lo + hi) / 2.0;
                        if (val(d) < val(0.0) - 1e-15) {
                            res.coupling[idx(i, j)] += d;
                            res.coupling[idx(k, l)] += d;
                            res.coupling[idx(i, l)] -= d;
                            res.coupling[idx(k, j)] -= d;
                            moved = true;
                        }
                    }
        if (!moved) break;
    }

    res.value = coupling_mi(res.coupling, q_u, n);
    return res;
}

}  // namespace avckit
