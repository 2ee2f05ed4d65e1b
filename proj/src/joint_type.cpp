#include "avckit/joint_type.hpp"

namespace avckit {

std::size_t JointType::flat_index(const std::vector<int>& coords) const {
    if (coords.size() != sizes.size()) throw IndexError("JointType: arity mismatch");
    std::size_t idx = 0;
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        if (coords[k] < 0 || coords[k] >= sizes[k]) throw IndexError("JointType: coordinate out of range");
        idx = idx * static_cast<std::size_t>(sizes[k]) + static_cast<std::size_t>(coords[k]);
    }
    return idx;
}

JointDistribution JointType::distribution() const {
    JointDistribution d(sizes);
    for (std::size_t i = 0; i < counts.size(); ++i)
        d.p[i] = static_cast<double>(counts[i]) / static_cast<double>(n);
    return d;
}

JointType joint_type(const std::vector<Seq>& seqs, const std::vector<int>& sizes) {
    if (seqs.empty() || seqs.size() != sizes.size()) throw DimensionMismatch("joint_type: arity mismatch");
    const std::size_t n = seqs[0].size();
    std::size_t cells = 1;
    for (std::size_t k = 0; k < seqs.size(); ++k) {
        if (seqs[k].size() != n) throw LengthMismatch("joint_type: sequences of unequal length");
        if (sizes[k] <= 0) throw DimensionMismatch("joint_type: nonpositive alphabet size");
        cells *= static_cast<std::size_t>(sizes[k]);
    }
    JointType t;
    t.sizes = sizes;
    t.n = static_cast<int>(n);
    t.counts.assign(cells, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t idx = 0;
        for (std::size_t k = 0; k < seqs.size(); ++k) {
            int sym = seqs[k][i];
            if (sym < 0 || sym >= sizes[k]) throw SymbolOutOfRange("joint_type: symbol outside alphabet");
            idx = idx * static_cast<std::size_t>(sizes[k]) + static_cast<std::size_t>(sym);
        }
        ++t.counts[idx];
    }
    return t;
}

}  // namespace avckit
