#ifndef AVCKIT_BOUNDS_HPP
#define AVCKIT_BOUNDS_HPP

#include <limits>
#include <string>

#include "avckit/channel.hpp"
#include "avckit/coupling.hpp"
#include "avckit/jammer_opt.hpp"
#include "avckit/symmetrizability.hpp"

namespace avckit {

struct BoundResult {
    double value = 0.0;
    bool feasible = true;
    std::string infeasibility_reason;

    // term breakdown (bits); NaN when not applicable
    double term_message = std::numeric_limits<double>::quiet_NaN();      // min I(X;Y) / min I(U;Y)
    double term_description = std::numeric_limits<double>::quiet_NaN();  // min I(U;Y|X)
    double term_cost = std::numeric_limits<double>::quiet_NaN();         // I(U;S|X), I(U;S), max H(S|X,Y)
    double d_coupling = std::numeric_limits<double>::quiet_NaN();        // D(Q_U) / D(Q_X)
    double distortion = std::numeric_limits<double>::quiet_NaN();        // worst-case E[d]
    double duality_gap = 0.0;

    Dist inner_argmin_qj;        // worst iid jammer for the message term
    Kernel inner_argmin_kernel;  // worst per-input jammer kernel (maximal-error terms)
    Dist outer_qx;
    Kernel outer_u_kernel;  // Q_{U|XS} (strictly causal) or Q_{U|S} (noncausal)
    Kernel outer_x_kernel;  // Q_{X|US} (noncausal)
    Estimator estimator;
};

// Average-error strictly causal lower bound at fixed kernels:
//   min_{Q_J} I(X;Y) + min_{Q_J} I(U;Y|X) - I(U;S|X),
// feasible iff Q_{Y|XJ} is nonsymmetrizable-X, the U|X indicator is 1, and
// the worst-case distortion is within D.
BoundResult theorem2_bound_at(const StateChannel& ch, const Dist& q_x, const Kernel& q_u_given_xs,
                              const Estimator& h, double distortion_budget,
                              const SearchConfig& cfg = {});

// Joint message + lossless state bound:
//   max_{Q_X} min_{Q_J,Q_J'} [I_{Q_J}(X;Y) - H_{Q_J'}(S|X,Y)]^+,
// requires nonsymmetrizable-S|X.
BoundResult lossless_strictly_causal_bound(const StateChannel& ch, const SearchConfig& cfg = {});

struct LosslessFeasibility {
    bool feasible = false;
    bool sym_ok = false;  // nonsymmetrizable-XS
    double lhs = 0.0;     // H(S)
    double rhs = 0.0;     // min_{Q_J} max_{Q_{X|S}} I(X,S;Y)
    Dist worst_qj;
    Kernel best_x_given_s;
};

// Pure lossless state-communication test: feasible iff nonsymmetrizable-XS
// and H(S) <= min_{Q_J} max_{Q_{X|S}} I(X,S;Y).
LosslessFeasibility pure_lossless_feasibility(const StateChannel& ch, const SearchConfig& cfg = {});

// Noncausal average-error bound at fixed kernels:
//   min_{Q_J} I(U;Y) - I(U;S), feasible iff Q_{Y|UJ} nonsymmetrizable-U.
BoundResult corollary2_bound_at(const StateChannel& ch, const Kernel& q_u_given_s,
                                const Kernel& q_x_given_us, const Estimator& h,
                                double distortion_budget, const SearchConfig& cfg = {});

// Noncausal maximal-error bound at fixed kernels:
//   min{min_{Q_{J|U}} I(U;Y), D(Q_U)} - I(U;S),
// feasible iff the graph of Q_{Y|UJ} contains isolated vertices.
BoundResult theorem3_bound_at(const StateChannel& ch, const Kernel& q_u_given_s,
                              const Kernel& q_x_given_us, const Estimator& h,
                              double distortion_budget, const SearchConfig& cfg = {});

// Strictly causal maximal-error bound at fixed kernels:
//   min{min_{Q_{J|X}} I(X;Y), D(Q_X)} + min_{Q_J} I(U;Y|X) - I(U;S|X).
BoundResult corollary4_bound_at(const StateChannel& ch, const Dist& q_x, const Kernel& q_u_given_xs,
                                const Estimator& h, double distortion_budget,
                                const SearchConfig& cfg = {});

enum class BinaryOutputMode { noncausal, strictly_causal };

// Binary-output maximal-error bounds: the inner minimization runs over
// row-convex extensions with no graph side condition.
// noncausal: min_{Q_{J|U}} I(U;Y) - I(U;S) at the given kernels;
// strictly causal (lossless): [min_{Q_{J|X}} I(X;Y) - max_{Q_J} H(S|X,Y)]^+.
BoundResult binary_output_bound_nc(const StateChannel& ch, const Kernel& q_u_given_s,
                                   const Kernel& q_x_given_us, const SearchConfig& cfg = {});
BoundResult binary_output_bound_sc(const StateChannel& ch, const Dist& q_x,
                                   const SearchConfig& cfg = {});

struct RatePlan {
    double r = 0.0;          // message rate R
    double r_s = 0.0;        // bin rate R_S
    double r_s_tilde = 0.0;  // description rate
    double r_s_prime = 0.0;  // within-bin rate
    double tau = 0.0;
    // diagnostics
    double min_ixy = 0.0;   // min_QJ I(X;Y)  (or min_{QJ|U} I(U;Y) noncausal)
    double min_iuyx = 0.0;  // min_QJ I(U;Y|X) (or D(Q_U) noncausal)
    double i_us = 0.0;      // I(U;S|X) (or I(U;S))
};

enum class PlanMode { strictly_causal, noncausal };

RatePlan rate_plan_sc(const StateChannel& ch, const Dist& q_x, const Kernel& q_u_given_xs,
                      double tau, const SearchConfig& cfg = {});
RatePlan rate_plan_nc(const StateChannel& ch, const Kernel& q_u_given_s, const Kernel& q_x_given_us,
                      double tau, const SearchConfig& cfg = {});

enum class BoundObjective { theorem2, corollary2, corollary4, theorem3 };

struct BoundSearchConfig {
    SearchConfig search;
    int num_u = 0;  // |U|; 0 means |S| + 1
};

// Multi-start derivative-free maximization over the free kernels (and the
// Bayes estimator).  Returns the best feasible point found: a certified lower
// bound on the paper-exact maximum, not a certified global optimum.
BoundResult bound_search(BoundObjective objective, const StateChannel& ch, double distortion_budget,
                         const BoundSearchConfig& cfg = {});

// I(U;S|X) of the design joint Q_X Q_S Q_{U|XS} and I(U;S) of Q_S Q_{U|S}.
double description_cost_sc(const StateChannel& ch, const Dist& q_x, const Kernel& q_u_given_xs);
double description_cost_nc(const StateChannel& ch, const Kernel& q_u_given_s);

// Bayes estimator against a fixed iid jammer law.
Estimator bayes_estimator_sc(const StateChannel& ch, const Dist& q_x, const Kernel& q_u_given_xs,
                             const Dist& q_j);
Estimator bayes_estimator_nc(const StateChannel& ch, const Kernel& q_u_given_s,
                             const Kernel& q_x_given_us, const Dist& q_j);

}  // namespace avckit

#endif
