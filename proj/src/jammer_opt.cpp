#include "avckit/jammer_opt.hpp"

#include <cmath>

#include "avckit/distributions.hpp"
#include "avckit/symmetrizability.hpp"

namespace avckit {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// I(input; output) for the AVC mixed by an iid jammer law.
double mi_iid(const AvChannel& avc, const Dist& q_in, const Dist& q_j) {
    Dist out(avc.ny, 0.0);
    double cond = 0.0;
    for (int in = 0; in < avc.n_in; ++in) {
        if (q_in[in] <= 0.0) continue;
        double hrow = 0.0;
        for (int y = 0; y < avc.ny; ++y) {
            double p = 0.0;
            for (int j = 0; j < avc.nj; ++j) p += q_j[j] * avc.qp(in, j, y);
            out[y] += q_in[in] * p;
            hrow -= xlog2x(p);
        }
        cond += q_in[in] * hrow;
    }
    double h_out = 0.0;
    for (double v : out) h_out -= xlog2x(v);
    double mi = h_out - cond;
    return mi < 0.0 ? 0.0 : mi;
}

double mi_kernel(const AvChannel& avc, const Dist& q_in, const Kernel& k) {
    Dist out(avc.ny, 0.0);
    double cond = 0.0;
    for (int in = 0; in < avc.n_in; ++in) {
        if (q_in[in] <= 0.0) continue;
        double hrow = 0.0;
        for (int y = 0; y < avc.ny; ++y) {
            double p = 0.0;
            for (int j = 0; j < avc.nj; ++j) p += k.at(in, j) * avc.qp(in, j, y);
            out[y] += q_in[in] * p;
            hrow -= xlog2x(p);
        }
        cond += q_in[in] * hrow;
    }
    double h_out = 0.0;
    for (double v : out) h_out -= xlog2x(v);
    double mi = h_out - cond;
    return mi < 0.0 ? 0.0 : mi;
}

// I(U;Y|X) on a composite (u,x) channel under iid Q_J: averages I(U;Y) of the
// per-x slices.
double cond_mi_iid(const AvChannel& avc, const Dist& pair_marginal, const Dist& q_j) {
    double total = 0.0;
    for (int x = 0; x < avc.nx; ++x) {
        double qx = 0.0;
        for (int u = 0; u < avc.nu; ++u) qx += pair_marginal[avc.pair_index(u, x)];
        if (qx <= 0.0) continue;
        Dist out(avc.ny, 0.0);
        double cond = 0.0;
        for (int u = 0; u < avc.nu; ++u) {
            int in = avc.pair_index(u, x);
            double w = pair_marginal[in] / qx;
            if (w <= 0.0 || !avc.input_defined(in)) continue;
            double hrow = 0.0;
            for (int y = 0; y < avc.ny; ++y) {
                double p = 0.0;
                for (int j = 0; j < avc.nj; ++j) p += q_j[j] * avc.qp(in, j, y);
                out[y] += w * p;
                hrow -= xlog2x(p);
            }
            cond += w * hrow;
        }
        double h_out = 0.0;
        for (double v : out) h_out -= xlog2x(v);
        double slice = h_out - cond;
        if (slice > 0.0) total += qx * slice;
    }
    return total;
}

}  // namespace

JammerMin worst_jammer_mi(const AvChannel& avc, const Dist& q_in, JammerFamily family,
                          const SearchConfig& cfg) {
    if (static_cast<int>(q_in.size()) != avc.n_in)
        throw DimensionMismatch("worst_jammer_mi: input distribution size");
    JammerMin res;
    res.family = family;
    if (family == JammerFamily::iid) {
        ScanResult s = optimize_simplex([&](const Dist& qj) { return mi_iid(avc, q_in, qj); },
                                        avc.nj, /*minimize=*/true, cfg);
        res.value = s.value;
        res.q_j = s.arg;
        res.bracket = s.bracket;
    } else {
        KernelScanResult s = optimize_kernel([&](const Kernel& k) { return mi_kernel(avc, q_in, k); },
                                             avc.n_in, avc.nj, /*minimize=*/true, cfg);
        res.value = s.value;
        res.kernel = s.arg;
        res.bracket = s.bracket;
    }
    return res;
}

JammerMin worst_jammer_conditional_mi(const AvChannel& composite, const Dist& pair_marginal,
                                      const SearchConfig& cfg) {
    if (!composite.composite())
        throw ShapeMismatch("worst_jammer_conditional_mi: needs a composite (u,x) AVC");
    JammerMin res;
    ScanResult s = optimize_simplex(
        [&](const Dist& qj) { return cond_mi_iid(composite, pair_marginal, qj); }, composite.nj,
        /*minimize=*/true, cfg);
    res.value = s.value;
    res.q_j = s.arg;
    res.bracket = s.bracket;
    return res;
}

MinimaxResult minimax_capacity(const AvChannel& avc, const SearchConfig& cfg) {
    MinimaxResult res;
    SymReport sym = sym_margin(avc, SymVariant::P2P_X, cfg.tolerance);
    if (sym.symmetrizable) {
        res.value = 0.0;
        res.feasible = false;
        res.infeasibility_reason = "symmetrizable-X";
        res.q_x.assign(avc.n_in, 1.0 / avc.n_in);
        res.worst_qj.assign(avc.nj, 1.0 / avc.nj);
        return res;
    }

    SearchConfig inner = cfg;
    inner.refinement_rounds = cfg.refinement_rounds + 1;
    ScanResult outer = optimize_simplex(
        [&](const Dist& qx) {
            return optimize_simplex([&](const Dist& qj) { return mi_iid(avc, qx, qj); }, avc.nj,
                                    true, inner)
                .value;
        },
        avc.n_in, /*minimize=*/false, cfg);
    res.value = outer.value;
    res.q_x = outer.arg;
    res.worst_qj =
        optimize_simplex([&](const Dist& qj) { return mi_iid(avc, res.q_x, qj); }, avc.nj, true, inner)
            .arg;

    // Opposite order for the duality bracket: min over Q_J of the mixed
    // channel's capacity (Blahut-Arimoto inner max).
    ScanResult mm = optimize_simplex(
        [&](const Dist& qj) {
            Kernel rows(avc.n_in, avc.ny);
            for (int in = 0; in < avc.n_in; ++in)
                for (int j = 0; j < avc.nj; ++j)
                    for (int y = 0; y < avc.ny; ++y) rows.at(in, y) += qj[j] * avc.qp(in, j, y);
            return blahut_arimoto(rows).capacity;
        },
        avc.nj, /*minimize=*/true, inner);
    res.duality_gap = mm.value - res.value;
    return res;
}

}  // namespace avckit
