#ifndef AVCKIT_PSI_HPP
#define AVCKIT_PSI_HPP

#include "avckit/channel.hpp"
#include "avckit/joint_type.hpp"

namespace avckit {

struct TypicalityParams {
    double eta = 0.5;
    double delta = 0.25;
    double tau = 0.05;

    // Default eta covers the type fluctuation of the true law at blocklength n
    // with `cells` joint cells; delta = eta/2.
    static TypicalityParams defaults(int n, int cells, double tau = 0.05);
};

enum class PsiSet { psi1, psi2, psi3, psi4 };

// Strictly causal design joint Q_X Q_S Q_{U|XS} W and its derived reference
// laws for the four decoder sets:
//   psi1 over (x,y,j):   D(P || Q_X P_J Q_{Y|XJ})
//   psi2 over (x,u,s):   D(P || Q_X Q_S Q_{U|XS})
//   psi3 over (x,u,y,j): D(P || Q_X P_J Q_{YU|XJ})
//   psi4 over (x,u,s,j): D(P || Q_{XUS} P_J)
// P_J is always the type's own j-marginal.
struct PsiContextSc {
    StateChannel ch;
    Dist q_x;
    Kernel q_u_given_xs;  // rows (x,s), cols u
    int nu = 0;

    // derived tables
    std::vector<double> q_y_given_xj;   // (x,j,y)
    std::vector<double> q_yu_given_xj;  // (x,j,u,y)
    std::vector<double> q_xus;          // (x,u,s)

    static PsiContextSc make(const StateChannel& ch, const Dist& q_x, const Kernel& q_u_given_xs);
};

// Noncausal design joint Q_S Q_{U|S} Q_{X|US} W:
//   psi1 over (u,y,j): conditional divergence D(P_{Y|UJ} || Q_{Y|UJ} | P_{UJ})
//   psi2 over (u,s):   D(P || Q_{US})
struct PsiContextNc {
    StateChannel ch;
    Kernel q_u_given_s;   // rows s, cols u
    Kernel q_x_given_us;  // rows (u,s), cols x
    int nu = 0;

    std::vector<double> q_y_given_uj;  // (u,j,y); zero rows where Q_U(u)=0
    std::vector<double> q_us;          // (u,s)
    Dist q_u;

    static PsiContextNc make(const StateChannel& ch, const Kernel& q_u_given_s,
                             const Kernel& q_x_given_us);
};

// Exact divergence of a joint type against the named reference law.
// Arity must match the set (see above); throws ArityMismatch otherwise.
double psi_divergence(const PsiContextSc& ctx, PsiSet which, const JointType& t);
double psi_divergence(const PsiContextNc& ctx, PsiSet which, const JointType& t);

inline bool psi_member(const PsiContextSc& ctx, PsiSet which, const JointType& t, double eta) {
    return psi_divergence(ctx, which, t) <= eta;
}
inline bool psi_member(const PsiContextNc& ctx, PsiSet which, const JointType& t, double eta) {
    return psi_divergence(ctx, which, t) <= eta;
}

}  // namespace avckit

#endif
