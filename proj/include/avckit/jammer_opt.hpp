#ifndef AVCKIT_JAMMER_OPT_HPP
#define AVCKIT_JAMMER_OPT_HPP

#include <string>

#include "avckit/channel.hpp"
#include "avckit/simplex_opt.hpp"

namespace avckit {

enum class JammerFamily { iid, per_input_kernel };

struct JammerMin {
    double value = 0.0;
    JammerFamily family = JammerFamily::iid;
    Dist q_j;       // iid family argmin
    Kernel kernel;  // per-input family argmin (rows = AVC inputs)
    double bracket = 0.0;
};

// min over jammer laws of I(input; output) at a fixed input distribution.
// I is convex in the jammer law (the channel is affine in it), so the grid
// scan plus refinement localizes the global minimum to the reported bracket.
JammerMin worst_jammer_mi(const AvChannel& avc, const Dist& q_in, JammerFamily family,
                          const SearchConfig& cfg = {});

// min over iid Q_J of I(U;Y|X) on a composite (u,x) AVC with the given input
// marginal over pairs.
JammerMin worst_jammer_conditional_mi(const AvChannel& composite, const Dist& pair_marginal,
                                      const SearchConfig& cfg = {});

struct MinimaxResult {
    double value = 0.0;
    Dist q_x;      // outer argmax
    Dist worst_qj; // inner argmin at the outer argmax
    double duality_gap = 0.0;
    bool feasible = true;
    std::string infeasibility_reason;
};

// max_{Q_X} min_{Q_J} I(X;Y); value forced to 0 (infeasible) when the AVC is
// symmetrizable.  duality_gap = min_{Q_J} max_{Q_X} - max_{Q_X} min_{Q_J}.
MinimaxResult minimax_capacity(const AvChannel& avc, const SearchConfig& cfg = {});

}  // namespace avckit

#endif
