#ifndef AVCKIT_COUPLING_HPP
#define AVCKIT_COUPLING_HPP

#include "avckit/channel_graph.hpp"
#include "avckit/simplex_opt.hpp"

namespace avckit {

struct CouplingResult {
    double value = 0.0;            // D(Q_U) in bits
    std::vector<double> coupling;  // n*n row-major optimal joint law
};

// D(Q_U): minimize I(U;U') over couplings with both marginals q_u and support
// restricted to connected pairs of the graph (self-loops always allowed).
// With fixed marginals this is max-entropy over a transportation polytope;
// solved by Frank-Wolfe with exact transportation-LP steps (the diagonal
// coupling is always feasible).  Complete graphs short-circuit to the product
// coupling, which is exactly optimal.
CouplingResult coupling_min_mi(const Dist& q_u, const ChannelGraph& graph,
                               const SearchConfig& cfg = {});

}  // namespace avckit

#endif
