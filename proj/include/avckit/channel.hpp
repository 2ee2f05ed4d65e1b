#ifndef AVCKIT_CHANNEL_HPP
#define AVCKIT_CHANNEL_HPP

#include <cstdint>
#include <vector>

#include "avckit/distributions.hpp"

namespace avckit {

// Conditional probability table: rows conditioning alphabet, cols target alphabet.
struct Kernel {
    int rows = 0;
    int cols = 0;
    std::vector<double> p;  // rows*cols, row-major
    // Rows with no probability mass behind them (zero-mass conditionals) are
    // marked undefined; optimizers skip them.
    std::vector<uint8_t> defined;  // empty means all rows defined

    Kernel() = default;
    Kernel(int r, int c, double fill = 0.0)
        : rows(r), cols(c), p(static_cast<std::size_t>(r) * c, fill) {}

    double& at(int r, int c) { return p[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return p[static_cast<std::size_t>(r) * cols + c]; }
    bool row_defined(int r) const { return defined.empty() || defined[r]; }
    Dist row(int r) const {
        return Dist(p.begin() + static_cast<std::ptrdiff_t>(r) * cols,
                    p.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols);
    }
    void validate(double tol = 1e-12) const;
};

// Channel with random state and jammer: W(y|x,s,j), state prior Q_S, distortion d(s, s_hat).
struct StateChannel {
    int nx = 0, ns = 0, nj = 0, ny = 0, ns_hat = 0;
    std::vector<double> w;  // (x,s,j,y) row-major
    Dist q_s;
    std::vector<double> distortion;  // (s, s_hat) row-major

    double wp(int x, int s, int j, int y) const {
        return w[((static_cast<std::size_t>(x) * ns + s) * nj + j) * ny + y];
    }
    double& wp(int x, int s, int j, int y) {
        return w[((static_cast<std::size_t>(x) * ns + s) * nj + j) * ny + y];
    }
    double d(int s, int s_hat) const { return distortion[static_cast<std::size_t>(s) * ns_hat + s_hat]; }
};

// Stateless AVC family q(y | in, j).  When the input alphabet is a composite
// (u,x) pair, nu/nx record the factorization and row_defined flags the
// reachable pairs; for plain channels nu = 0.
struct AvChannel {
    int n_in = 0, nj = 0, ny = 0;
    std::vector<double> q;  // (in, j, y) row-major
    int nu = 0, nx = 0;
    std::vector<uint8_t> row_defined_flags;  // empty means all defined

    double qp(int in, int j, int y) const {
        return q[(static_cast<std::size_t>(in) * nj + j) * ny + y];
    }
    double& qp(int in, int j, int y) {
        return q[(static_cast<std::size_t>(in) * nj + j) * ny + y];
    }
    bool composite() const { return nu > 0; }
    int pair_index(int u, int x) const { return u * nx + x; }
    bool input_defined(int in) const {
        return row_defined_flags.empty() || row_defined_flags[in];
    }
    void validate(double tol = 1e-12) const;
};

// Deterministic estimator table (x,u,y) -> s_hat.  Noncausal estimators use
// domain (u,y); set nx = 1 and ignore the x argument.
struct Estimator {
    int nx = 1, nu = 1, ny = 1, ns_hat = 1;
    std::vector<int> table;  // (x,u,y) row-major

    Estimator() = default;
    Estimator(int x, int u, int y, int sh)
        : nx(x), nu(u), ny(y), ns_hat(sh), table(static_cast<std::size_t>(x) * u * y, 0) {}

    int at(int x, int u, int y) const {
        return table[(static_cast<std::size_t>(x) * nu + u) * ny + y];
    }
    int& at(int x, int u, int y) {
        return table[(static_cast<std::size_t>(x) * nu + u) * ny + y];
    }
};

// Validation: checks stochasticity of every w row (tolerance `tol`), the state
// prior, and nonnegative finite distortion, then renormalizes rows exactly.
StateChannel validate_channel(StateChannel raw, double tol = 1e-9);

// Q_{Y|XJ}(y|x,j) = sum_s Q_S(s) W(y|x,s,j).
AvChannel average_out_state(const StateChannel& ch);

enum class InduceMode { strictly_causal, noncausal };

struct InducedChannel {
    AvChannel avc;
    // strictly causal: Bayes posterior Q_{S|UX}, rows indexed (u,x); undefined
    // rows flagged.  Also the (u,x) input marginal.
    Kernel s_posterior;
    Dist input_marginal;
};

// Strictly causal: input Q_X and Q_{U|XS} (rows (x,s), cols u); output channel
// over composite input (u,x).  Noncausal: Q_{U|S} (rows s, cols u) and
// Q_{X|US} (rows (u,s), cols x); output channel over input u.
InducedChannel induce_u_channel_sc(const StateChannel& ch, const Dist& q_x, const Kernel& q_u_given_xs);
InducedChannel induce_u_channel_nc(const StateChannel& ch, const Kernel& q_u_given_s, const Kernel& q_x_given_us);

// Row-convex (kernel over J given input) or convex (plain distribution over J)
// mixture of an AVC; returns the resulting DMC as a Kernel (rows input, cols y).
Kernel apply_jammer_kernel(const AvChannel& avc, const Kernel& k);
Kernel apply_jammer_kernel(const AvChannel& avc, const Dist& q_j);

struct DistortionResult {
    double worst = 0.0;
    Dist argmax_qj;  // worst-case iid jammer law (always attained at a vertex)
};

// Worst-case expected distortion max_{Q_J} E[d(S, h(X,U,Y))] over iid jammer
// laws; the expectation is affine in Q_J so the vertex maximum is exact.
DistortionResult expected_distortion(const StateChannel& ch, const Dist& q_x,
                                     const Kernel& q_u_given_xs, const Estimator& h);
// Noncausal variant with h = h(u,y).
DistortionResult expected_distortion_nc(const StateChannel& ch, const Kernel& q_u_given_s,
                                        const Kernel& q_x_given_us, const Estimator& h);

}  // namespace avckit

#endif
