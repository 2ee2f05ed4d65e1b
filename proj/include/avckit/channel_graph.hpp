#ifndef AVCKIT_CHANNEL_GRAPH_HPP
#define AVCKIT_CHANNEL_GRAPH_HPP

#include <utility>
#include <vector>

#include "avckit/channel.hpp"

namespace avckit {

// Connectivity structure of an AVC input alphabet: two inputs are connected
// when the convex hulls of their jammed output rows intersect; the distance
// is the minimal total-variation gap between the hulls (an LP).
struct ChannelGraph {
    int n = 0;
    std::vector<double> dist;      // n*n symmetric, zero diagonal
    std::vector<uint8_t> adj;      // dist <= tol (reflexive)
    double tol = 1e-7;

    double distance(int i, int j) const { return dist[static_cast<std::size_t>(i) * n + j]; }
    bool connected(int i, int j) const { return adj[static_cast<std::size_t>(i) * n + j] != 0; }
    bool is_complete() const;
    std::vector<std::pair<int, int>> isolated_pairs() const;
    bool has_isolated_pair() const { return !is_complete(); }
};

struct EdgeResult {
    double distance = 0.0;
    bool connected = false;
    Dist q1, q2;  // minimizing jammer laws
};

EdgeResult edge_test(const AvChannel& avc, int i1, int i2, double tol = 1e-7);

// All-pairs edge_test (pairs run in parallel).
ChannelGraph build_graph(const AvChannel& avc, double tol = 1e-7);

}  // namespace avckit

#endif
