#ifndef AVCKIT_SYMMETRIZABILITY_HPP
#define AVCKIT_SYMMETRIZABILITY_HPP

#include <string>

#include "avckit/channel.hpp"

namespace avckit {

// Symmetrizability variants.  XS/X/S/X_given_S/S_given_X apply to a
// StateChannel; P2P_X applies to a stateless AVC; U_given_X applies to a
// composite-(u,x) AVC.  Unreachable composite inputs keep an all-zero output
// row, so pairing a reachable u with an unreachable u' can never be
// symmetrized; this matches how the indicator is used downstream.
enum class SymVariant { XS, X, S, X_given_S, S_given_X, P2P_X, U_given_X };

std::string to_string(SymVariant v);

struct SymReport {
    SymVariant variant;
    // Optimal LP value: the smallest achievable max-violation of the defining
    // equality over row-stochastic kernels T.  +inf when the variant has no
    // pair to symmetrize (vacuous quantifier).
    double margin = 0.0;
    Kernel certificate;  // T achieving the margin
    double tol = 1e-7;
    bool symmetrizable = false;  // margin <= tol
    int num_constraints = 0;
};

SymReport sym_margin(const StateChannel& ch, SymVariant variant, double tol = 1e-7);
SymReport sym_margin(const AvChannel& avc, SymVariant variant, double tol = 1e-7);

// Max absolute violation of the defining equality for a given kernel T
// (used to verify certificates; equals the LP margin at the optimum).
double sym_violation(const StateChannel& ch, SymVariant variant, const Kernel& t);
double sym_violation(const AvChannel& avc, SymVariant variant, const Kernel& t);

// Indicator of Theorem-2 feasibility: induces Q_{Y|UXJ} and returns 1 iff it
// is nonsymmetrizable-U|X (vacuously 1 when no two descriptions share an x).
int indicator_u_given_x(const StateChannel& ch, const Dist& q_x, const Kernel& q_u_given_xs,
                        double tol = 1e-7);

}  // namespace avckit

#endif
