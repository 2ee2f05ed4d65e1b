#include "avckit/channel_graph.hpp"

#include "avckit/lp.hpp"
#include "avckit/parallel.hpp"

namespace avckit {

bool ChannelGraph::is_complete() const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!connected(i, j)) return false;
    return true;
}

std::vector<std::pair<int, int>> ChannelGraph::isolated_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!connected(i, j)) out.emplace_back(i, j);
    return out;
}

EdgeResult edge_test(const AvChannel& avc, int i1, int i2, double tol) {
    if (i1 < 0 || i1 >= avc.n_in || i2 < 0 || i2 >= avc.n_in)
        throw IndexError("edge_test: input index out of range");
    EdgeResult res;
    if (i1 == i2) {
        res.distance = 0.0;
        res.connected = true;
        res.q1.assign(avc.nj, 1.0 / avc.nj);
        res.q2 = res.q1;
        return res;
    }
    // min sum_y |sum_j q(y|i1,j)Q1(j) - sum_j q(y|i2,j)Q2(j)|
    // Variables: Q1 (nj), Q2 (nj), z_y (ny).  Minimize sum z.
    const int nj = avc.nj, ny = avc.ny;
    LpBuilder lp(2 * nj + ny);
    std::vector<double> obj(2 * nj + ny, 0.0);
    for (int y = 0; y < ny; ++y) obj[2 * nj + y] = -1.0;
    lp.set_objective(obj);
    for (int y = 0; y < ny; ++y) {
        std::vector<double> row(2 * nj + ny, 0.0);
        for (int j = 0; j < nj; ++j) {
            row[j] = avc.qp(i1, j, y);
            row[nj + j] = -avc.qp(i2, j, y);
        }
        row[2 * nj + y] = -1.0;
        lp.add_le(row, 0.0);
        for (int j = 0; j < nj; ++j) {
            row[j] = -row[j];
            row[nj + j] = -row[nj + j];
        }
        lp.add_le(row, 0.0);
    }
    std::vector<double> ones(2 * nj + ny, 0.0);
    for (int j = 0; j < nj; ++j) ones[j] = 1.0;
    lp.add_eq(ones, 1.0);
    std::vector<double> ones2(2 * nj + ny, 0.0);
    for (int j = 0; j < nj; ++j) ones2[nj + j] = 1.0;
    lp.add_eq(ones2, 1.0);

    LpResult sol = lp.solve();
    res.distance = -sol.value;
    if (res.distance < 0.0) res.distance = 0.0;
    res.connected = res.distance <= tol;
    res.q1.assign(sol.x.begin(), sol.x.begin() + nj);
    res.q2.assign(sol.x.begin() + nj, sol.x.begin() + 2 * nj);
    return res;
}

ChannelGraph build_graph(const AvChannel& avc, double tol) {
    ChannelGraph g;
    g.n = avc.n_in;
    g.tol = tol;
    g.dist.assign(static_cast<std::size_t>(g.n) * g.n, 0.0);
    g.adj.assign(static_cast<std::size_t>(g.n) * g.n, 0);
    for (int i = 0; i < g.n; ++i) g.adj[static_cast<std::size_t>(i) * g.n + i] = 1;

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) pairs.emplace_back(i, j);
    std::vector<EdgeResult> results(pairs.size());
    par_for(pairs.size(), [&](std::size_t k) {
        results[k] = edge_test(avc, pairs[k].first, pairs[k].second, tol);
    });
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        auto [i, j] = pairs[k];
        g.dist[static_cast<std::size_t>(i) * g.n + j] = results[k].distance;
        g.dist[static_cast<std::size_t>(j) * g.n + i] = results[k].distance;
        g.adj[static_cast<std::size_t>(i) * g.n + j] = results[k].connected ? 1 : 0;
        g.adj[static_cast<std::size_t>(j) * g.n + i] = results[k].connected ? 1 : 0;
    }
    return g;
}

}  // namespace avckit
