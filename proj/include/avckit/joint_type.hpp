#ifndef AVCKIT_JOINT_TYPE_HPP
#define AVCKIT_JOINT_TYPE_HPP

#include <cstdint>
#include <vector>

#include "avckit/distributions.hpp"

namespace avckit {

using Seq = std::vector<int>;

// Exact empirical distribution of a tuple of equal-length sequences.
// Counts are integers; counts/n is the joint type as a JointDistribution.
struct JointType {
    std::vector<int> sizes;       // per-variable alphabet sizes
    std::vector<int64_t> counts;  // dense tensor, row-major like JointDistribution
    int n = 0;

    std::size_t flat_index(const std::vector<int>& coords) const;
    int64_t at(const std::vector<int>& coords) const { return counts[flat_index(coords)]; }

    JointDistribution distribution() const;
};

JointType joint_type(const std::vector<Seq>& seqs, const std::vector<int>& sizes);

}  // namespace avckit

#endif
