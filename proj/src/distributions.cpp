#include "avckit/distributions.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace avckit {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }
}  // namespace

double entropy(const Dist& p) {
    double h = 0.0;
    for (double v : p) {
        if (v < 0.0) throw NegativeEntry("entropy: negative probability");
        h -= xlog2x(v);
    }
    return h;
}

double kl_divergence(const Dist& p, const Dist& q) {
    if (p.size() != q.size()) throw DimensionMismatch("kl_divergence: size mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0.0 || q[i] < 0.0) throw NegativeEntry("kl_divergence: negative probability");
        if (p[i] > 0.0) {
            if (q[i] <= 0.0) return kInf;
            d += p[i] * std::log2(p[i] / q[i]);
        }
    }
    return d < 0.0 ? 0.0 : d;
}

JointDistribution::JointDistribution(std::vector<int> szs, double fill) : sizes(std::move(szs)) {
    std::size_t n = 1;
    for (int s : sizes) {
        if (s <= 0) throw DimensionMismatch("JointDistribution: nonpositive size");
        n *= static_cast<std::size_t>(s);
    }
    p.assign(n, fill);
}

std::size_t JointDistribution::flat_index(const std::vector<int>& coords) const {
    if (coords.size() != sizes.size()) throw IndexError("JointDistribution: arity mismatch");
    std::size_t idx = 0;
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        if (coords[k] < 0 || coords[k] >= sizes[k]) throw IndexError("JointDistribution: coordinate out of range");
        idx = idx * static_cast<std::size_t>(sizes[k]) + static_cast<std::size_t>(coords[k]);
    }
    return idx;
}

void JointDistribution::validate(double tol) const {
    double total = 0.0;
    for (double v : p) {
        if (v < 0.0) throw NegativeEntry("JointDistribution: negative entry");
        total += v;
    }
    if (std::fabs(total - 1.0) > tol) throw NonStochasticRow("JointDistribution: mass != 1");
}

JointDistribution marginal(const JointDistribution& j, const std::vector<int>& keep) {
    std::vector<int> msizes;
    msizes.reserve(keep.size());
    for (int v : keep) {
        if (v < 0 || v >= static_cast<int>(j.sizes.size())) throw IndexError("marginal: bad variable index");
        msizes.push_back(j.sizes[v]);
    }
    JointDistribution out(msizes.empty() ? std::vector<int>{1} : msizes);
    std::vector<int> coords(j.sizes.size(), 0);
    for (std::size_t flat = 0; flat < j.p.size(); ++flat) {
        std::size_t rem = flat;
        for (std::size_t k = j.sizes.size(); k-- > 0;) {
            coords[k] = static_cast<int>(rem % static_cast<std::size_t>(j.sizes[k]));
            rem /= static_cast<std::size_t>(j.sizes[k]);
        }
        std::size_t midx = 0;
        for (std::size_t k = 0; k < keep.size(); ++k)
            midx = midx * static_cast<std::size_t>(j.sizes[keep[k]]) +
                   static_cast<std::size_t>(coords[keep[k]]);
        out.p[keep.empty() ? 0 : midx] += j.p[flat];
    }
    return out;
}

double entropy_of(const JointDistribution& j, const std::vector<int>& vars) {
    if (vars.empty()) return 0.0;
    return entropy(marginal(j, vars).p);
}

double mutual_information(const JointDistribution& joint, const std::vector<int>& group_a,
                          const std::vector<int>& group_b, const std::vector<int>& cond) {
    for (int a : group_a)
        for (int b : group_b)
            if (a == b) throw IndexError("mutual_information: groups overlap");
    std::vector<int> ac = group_a, bc = group_b, abc = group_a;
    ac.insert(ac.end(), cond.begin(), cond.end());
    bc.insert(bc.end(), cond.begin(), cond.end());
    abc.insert(abc.end(), group_b.begin(), group_b.end());
    abc.insert(abc.end(), cond.begin(), cond.end());
    double mi = entropy_of(joint, ac) + entropy_of(joint, bc) - entropy_of(joint, abc) -
                entropy_of(joint, cond);
    return mi < 0.0 ? 0.0 : mi;
}

double mi_channel(const Dist& q_in, const std::vector<Dist>& rows) {
    if (q_in.size() != rows.size()) throw DimensionMismatch("mi_channel: input size mismatch");
    if (rows.empty()) return 0.0;
    std::size_t ny = rows[0].size();
    Dist out(ny, 0.0);
    for (std::size_t x = 0; x < rows.size(); ++x) {
        if (rows[x].size() != ny) throw DimensionMismatch("mi_channel: ragged rows");
        for (std::size_t y = 0; y < ny; ++y) out[y] += q_in[x] * rows[x][y];
    }
    double mi = entropy(out);
    for (std::size_t x = 0; x < rows.size(); ++x)
        if (q_in[x] > 0.0) mi -= q_in[x] * entropy(rows[x]);
    return mi < 0.0 ? 0.0 : mi;
}

}  // namespace avckit
