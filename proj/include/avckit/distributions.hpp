#ifndef AVCKIT_DISTRIBUTIONS_HPP
#define AVCKIT_DISTRIBUTIONS_HPP

#include <vector>

#include "avckit/errors.hpp"

namespace avckit {

// All information quantities are in bits (base-2 logs).

using Dist = std::vector<double>;

double entropy(const Dist& p);
// D(p||q); +inf when p puts mass where q vanishes.
double kl_divergence(const Dist& p, const Dist& q);

// Dense joint probability tensor over `sizes.size()` variables, row-major.
struct JointDistribution {
    std::vector<int> sizes;
    std::vector<double> p;

    JointDistribution() = default;
    JointDistribution(std::vector<int> szs, double fill = 0.0);

    std::size_t cells() const { return p.size(); }
    std::size_t flat_index(const std::vector<int>& coords) const;
    double& at(const std::vector<int>& coords) { return p[flat_index(coords)]; }
    double at(const std::vector<int>& coords) const { return p[flat_index(coords)]; }

    void validate(double tol = 1e-12) const;
};

// Marginal over the kept variable indices (in the given order).
JointDistribution marginal(const JointDistribution& j, const std::vector<int>& keep);

double entropy_of(const JointDistribution& j, const std::vector<int>& vars);

// I(A;B|C) in bits; `cond` may be empty.
double mutual_information(const JointDistribution& joint, const std::vector<int>& group_a,
                          const std::vector<int>& group_b, const std::vector<int>& cond = {});

// Convenience: I(X;Y) of a channel matrix rows[x][y] under input distribution q_in.
double mi_channel(const Dist& q_in, const std::vector<Dist>& rows);

}  // namespace avckit

#endif
