#include "avckit/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "avckit/distributions.hpp"
#include "avckit/parallel.hpp"
#include "avckit/rng.hpp"

namespace avckit {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

JointDistribution joint_xsu(const StateChannel& ch, const Dist& q_x, const Kernel& q_u_given_xs) {
    JointDistribution j({ch.nx, ch.ns, q_u_given_xs.cols});
    for (int x = 0; x < ch.nx; ++x)
        for (int s = 0; s < ch.ns; ++s)
            for (int u = 0; u < q_u_given_xs.cols; ++u)
                j.at({x, s, u}) = q_x[x] * ch.q_s[s] * q_u_given_xs.at(x * ch.ns + s, u);
    return j;
}

// Restrict an AVC to the support of its input marginal; `map` gives original
// indices of the kept inputs.
AvChannel restrict_support(const AvChannel& avc, const Dist& marginal, std::vector<int>& map) {
    map.clear();
    for (int in = 0; in < avc.n_in; ++in)
        if (marginal[in] > 0.0) map.push_back(in);
    AvChannel out;
    out.n_in = static_cast<int>(map.size());
    out.nj = avc.nj;
    out.ny = avc.ny;
    out.q.resize(static_cast<std::size_t>(out.n_in) * avc.nj * avc.ny);
    for (int k = 0; k < out.n_in; ++k)
        for (int j = 0; j < avc.nj; ++j)
            for (int y = 0; y < avc.ny; ++y) out.qp(k, j, y) = avc.qp(map[k], j, y);
    return out;
}

// H(S|X,Y) under joint Q_X Q_S Q_J' W, as a function of the iid jammer law.
double h_s_given_xy(const StateChannel& ch, const Dist& q_x, const Dist& q_j) {
    double total = 0.0;
    for (int x = 0; x < ch.nx; ++x) {
        if (q_x[x] <= 0.0) continue;
        // P(s,y | x)
        double hsy = 0.0, hy = 0.0;
        std::vector<double> py(ch.ny, 0.0);
        for (int s = 0; s < ch.ns; ++s)
            for (int y = 0; y < ch.ny; ++y) {
                double p = 0.0;
                for (int j = 0; j < ch.nj; ++j) p += q_j[j] * ch.wp(x, s, j, y);
                p *= ch.q_s[s];
                py[y] += p;
                hsy -= xlog2x(p);
            }
        for (double v : py) hy -= xlog2x(v);
        total += q_x[x] * (hsy - hy);
    }
    return total < 0.0 ? 0.0 : total;
}

// max over Q_{X|S} of I(X,S;Y) for a fixed iid jammer law: Blahut-Arimoto
// with the S-marginal pinned to Q_S (per-s normalized update).
double max_conditional_input_mi(const StateChannel& ch, const Dist& q_j, Kernel* arg_out) {
    const int nx = ch.nx, ns = ch.ns, ny = ch.ny;
    std::vector<double> w(static_cast<std::size_t>(nx) * ns * ny);
    for (int x = 0; x < nx; ++x)
        for (int s = 0; s < ns; ++s)
            for (int y = 0; y < ny; ++y) {
                double p = 0.0;
                for (int j = 0; j < ch.nj; ++j) p += q_j[j] * ch.wp(x, s, j, y);
                w[(static_cast<std::size_t>(x) * ns + s) * ny + y] = p;
            }
    Kernel q(ns, nx, 1.0 / nx);  // Q_{X|S}
    Dist out(ny);
    double value = 0.0;
    for (int it = 0; it < 3000; ++it) {
        std::fill(out.begin(), out.end(), 0.0);
        for (int s = 0; s < ns; ++s)
            for (int x = 0; x < nx; ++x) {
                double m = ch.q_s[s] * q.at(s, x);
                for (int y = 0; y < ny; ++y) out[y] += m * w[(static_cast<std::size_t>(x) * ns + s) * ny + y];
            }
        double lo = 0.0, hi = 0.0;
        std::vector<double> d(static_cast<std::size_t>(ns) * nx);
        for (int s = 0; s < ns; ++s) {
            double hs = 0.0;
            for (int x = 0; x < nx; ++x) {
                double dx = 0.0;
                for (int y = 0; y < ny; ++y) {
                    double ww = w[(static_cast<std::size_t>(x) * ns + s) * ny + y];
                    if (ww > 0.0 && out[y] > 0.0) dx += ww * std::log2(ww / out[y]);
                }
                d[static_cast<std::size_t>(s) * nx + x] = dx;
                lo += ch.q_s[s] * q.at(s, x) * dx;
                hs = std::max(hs, dx);
            }
            hi += ch.q_s[s] * hs;
        }
        value = lo;
        if (hi - lo < 1e-12) break;
        for (int s = 0; s < ns; ++s) {
            double norm = 0.0;
            for (int x = 0; x < nx; ++x) {
                double nv = q.at(s, x) * std::exp2(d[static_cast<std::size_t>(s) * nx + x]);
                q.at(s, x) = nv;
                norm += nv;
            }
            for (int x = 0; x < nx; ++x) q.at(s, x) /= norm;
        }
    }
    if (arg_out) *arg_out = q;
    return value;
}

}  // namespace

double description_cost_sc(const StateChannel& ch, const Dist& q_x, const Kernel& q_u_given_xs) {
    JointDistribution j = joint_xsu(ch, q_x, q_u_given_xs);
    return mutual_information(j, {2}, {1}, {0});  // I(U;S|X)
}

double description_cost_nc(const StateChannel& ch, const Kernel& q_u_given_s) {
    JointDistribution j({ch.ns, q_u_given_s.cols});
    for (int s = 0; s < ch.ns; ++s)
        for (int u = 0; u < q_u_given_s.cols; ++u) j.at({s, u}) = ch.q_s[s] * q_u_given_s.at(s, u);
    return mutual_information(j, {0}, {1});
}

BoundResult theorem2_bound_at(const StateChannel& ch, const Dist& q_x, const Kernel& q_u_given_xs,
                              const Estimator& h, double distortion_budget, const SearchConfig& cfg) {
    BoundResult r;
    AvChannel avc_x = average_out_state(ch);
    JammerMin m1 = worst_jammer_mi(avc_x, q_x, JammerFamily::iid, cfg);
    InducedChannel ind = induce_u_channel_sc(ch, q_x, q_u_given_xs);
    JammerMin m2 = worst_jammer_conditional_mi(ind.avc, ind.input_marginal, cfg);
    double cost = description_cost_sc(ch, q_x, q_u_given_xs);

    r.term_message = m1.value;
    r.term_description = m2.value;
    r.term_cost = cost;
    r.value = m1.value + m2.value - cost;
    r.inner_argmin_qj = m1.q_j;
    r.outer_qx = q_x;
    r.outer_u_kernel = q_u_given_xs;
    r.estimator = h;
    r.distortion = expected_distortion(ch, q_x, q_u_given_xs, h).worst;

    if (sym_margin(avc_x, SymVariant::P2P_X, cfg.tolerance).symmetrizable) {
        r.feasible = false;
        r.infeasibility_reason = "symmetrizable-X";
    } else if (indicator_u_given_x(ch, q_x, q_u_given_xs, cfg.tolerance) != 1) {
        r.feasible = false;
        r.infeasibility_reason = "symmetrizable-U|X";
    } else if (r.distortion > distortion_budget + 1e-12) {
        r.feasible = false;
        r.infeasibility_reason = "distortion above budget";
    }
    return r;
}

BoundResult lossless_strictly_causal_bound(const StateChannel& ch, const SearchConfig& cfg) {
    BoundResult r;
    if (sym_margin(ch, SymVariant::S_given_X, cfg.tolerance).symmetrizable) {
        // Hypothesis fails; the expression value is still reported.
        r.feasible = false;
        r.infeasibility_reason = "symmetrizable-S|X";
    }
    AvChannel avc_x = average_out_state(ch);
    auto value_at = [&](const Dist& qx, Dist* qj_out, Dist* qjp_out) {
        JammerMin a = worst_jammer_mi(avc_x, qx, JammerFamily::iid, cfg);
        ScanResult b = optimize_simplex([&](const Dist& qj) { return h_s_given_xy(ch, qx, qj); },
                                        ch.nj, /*minimize=*/false, cfg);
        if (qj_out) *qj_out = a.q_j;
        if (qjp_out) *qjp_out = b.arg;
        double v = a.value - b.value;
        return v > 0.0 ? v : 0.0;
    };
    ScanResult outer =
        optimize_simplex([&](const Dist& qx) { return value_at(qx, nullptr, nullptr); }, ch.nx,
                         /*minimize=*/false, cfg);
    r.outer_qx = outer.arg;
    Dist qj, qjp;
    r.value = value_at(outer.arg, &qj, &qjp);
    r.inner_argmin_qj = qj;
    JammerMin a = worst_jammer_mi(avc_x, outer.arg, JammerFamily::iid, cfg);
    r.term_message = a.value;
    r.term_cost = a.value - r.value;  // H(S|X,Y) at the worst Q_J' (after clipping)
    return r;
}

LosslessFeasibility pure_lossless_feasibility(const StateChannel& ch, const SearchConfig& cfg) {
    LosslessFeasibility res;
    res.lhs = entropy(ch.q_s);
    res.sym_ok = !sym_margin(ch, SymVariant::XS, cfg.tolerance).symmetrizable;
    ScanResult outer = optimize_simplex(
        [&](const Dist& qj) { return max_conditional_input_mi(ch, qj, nullptr); }, ch.nj,
        /*minimize=*/true, cfg);
    res.worst_qj = outer.arg;
    res.rhs = max_conditional_input_mi(ch, outer.arg, &res.best_x_given_s);
    res.feasible = res.sym_ok && res.lhs <= res.rhs + cfg.tolerance;
    return res;
}

BoundResult corollary2_bound_at(const StateChannel& ch, const Kernel& q_u_given_s,
                                const Kernel& q_x_given_us, const Estimator& h,
                                double distortion_budget, const SearchConfig& cfg) {
    BoundResult r;
    InducedChannel ind = induce_u_channel_nc(ch, q_u_given_s, q_x_given_us);
    std::vector<int> map;
    AvChannel sub = restrict_support(ind.avc, ind.input_marginal, map);
    Dist q_u_sub(map.size());
    for (std::size_t k = 0; k < map.size(); ++k) q_u_sub[k] = ind.input_marginal[map[k]];

    JammerMin m1 = worst_jammer_mi(sub, q_u_sub, JammerFamily::iid, cfg);
    double cost = description_cost_nc(ch, q_u_given_s);
    r.term_message = m1.value;
    r.term_cost = cost;
    r.value = m1.value - cost;
    r.inner_argmin_qj = m1.q_j;
    r.outer_u_kernel = q_u_given_s;
    r.outer_x_kernel = q_x_given_us;
    r.estimator = h;
    r.distortion = expected_distortion_nc(ch, q_u_given_s, q_x_given_us, h).worst;

    if (sym_margin(sub, SymVariant::P2P_X, cfg.tolerance).symmetrizable) {
        r.feasible = false;
        r.infeasibility_reason = "symmetrizable-U";
    } else if (r.distortion > distortion_budget + 1e-12) {
        r.feasible = false;
        r.infeasibility_reason = "distortion above budget";
    }
    return r;
}

BoundResult theorem3_bound_at(const StateChannel& ch, const Kernel& q_u_given_s,
                              const Kernel& q_x_given_us, const Estimator& h,
                              double distortion_budget, const SearchConfig& cfg) {
    BoundResult r;
    InducedChannel ind = induce_u_channel_nc(ch, q_u_given_s, q_x_given_us);
    std::vector<int> map;
    AvChannel sub = restrict_support(ind.avc, ind.input_marginal, map);
    Dist q_u_sub(map.size());
    for (std::size_t k = 0; k < map.size(); ++k) q_u_sub[k] = ind.input_marginal[map[k]];

    JammerMin m1 = worst_jammer_mi(sub, q_u_sub, JammerFamily::per_input_kernel, cfg);
    ChannelGraph g = build_graph(sub, cfg.tolerance);
    CouplingResult coup = coupling_min_mi(q_u_sub, g, cfg);
    double cost = description_cost_nc(ch, q_u_given_s);

    r.term_message = m1.value;
    r.d_coupling = coup.value;
    r.term_cost = cost;
    r.value = std::min(m1.value, coup.value) - cost;
    r.inner_argmin_kernel = m1.kernel;
    r.outer_u_kernel = q_u_given_s;
    r.outer_x_kernel = q_x_given_us;
    r.estimator = h;
    r.distortion = expected_distortion_nc(ch, q_u_given_s, q_x_given_us, h).worst;

    if (!g.has_isolated_pair()) {
        r.feasible = false;
        r.infeasibility_reason = "graph complete (no isolated vertices)";
    } else if (r.distortion > distortion_budget + 1e-12) {
        r.feasible = false;
        r.infeasibility_reason = "distortion above budget";
    }
    return r;
}

BoundResult corollary4_bound_at(const StateChannel& ch, const Dist& q_x, const Kernel& q_u_given_xs,
                                const Estimator& h, double distortion_budget,
                                const SearchConfig& cfg) {
    BoundResult r;
    AvChannel avc_x = average_out_state(ch);
    std::vector<int> map;
    AvChannel sub = restrict_support(avc_x, q_x, map);
    Dist q_x_sub(map.size());
    for (std::size_t k = 0; k < map.size(); ++k) q_x_sub[k] = q_x[map[k]];

    JammerMin m1 = worst_jammer_mi(sub, q_x_sub, JammerFamily::per_input_kernel, cfg);
    ChannelGraph g = build_graph(sub, cfg.tolerance);
    CouplingResult coup = coupling_min_mi(q_x_sub, g, cfg);

    InducedChannel ind = induce_u_channel_sc(ch, q_x, q_u_given_xs);
    JammerMin m2 = worst_jammer_conditional_mi(ind.avc, ind.input_marginal, cfg);
    double cost = description_cost_sc(ch, q_x, q_u_given_xs);

    r.term_message = m1.value;
    r.d_coupling = coup.value;
    r.term_description = m2.value;
    r.term_cost = cost;
    r.value = std::min(m1.value, coup.value) + m2.value - cost;
    r.inner_argmin_kernel = m1.kernel;
    r.inner_argmin_qj = m2.q_j;
    r.outer_qx = q_x;
    r.outer_u_kernel = q_u_given_xs;
    r.estimator = h;
    r.distortion = expected_distortion(ch, q_x, q_u_given_xs, h).worst;

    if (!g.has_isolated_pair()) {
        r.feasible = false;
        r.infeasibility_reason = "graph complete (no isolated vertices)";
    } else if (indicator_u_given_x(ch, q_x, q_u_given_xs, cfg.tolerance) != 1) {
        r.feasible = false;
        r.infeasibility_reason = "symmetrizable-U|X";
    } else if (r.distortion > distortion_budget + 1e-12) {
        r.feasible = false;
        r.infeasibility_reason = "distortion above budget";
    }
    return r;
}

BoundResult binary_output_bound_nc(const StateChannel& ch, const Kernel& q_u_given_s,
                                   const Kernel& q_x_given_us, const SearchConfig& cfg) {
    if (ch.ny != 2) throw NotBinaryOutput("binary_output_bound: output alphabet must be binary");
    BoundResult r;
    InducedChannel ind = induce_u_channel_nc(ch, q_u_given_s, q_x_given_us);
    std::vector<int> map;
    AvChannel sub = restrict_support(ind.avc, ind.input_marginal, map);
    Dist q_u_sub(map.size());
    for (std::size_t k = 0; k < map.size(); ++k) q_u_sub[k] = ind.input_marginal[map[k]];
    JammerMin m1 = worst_jammer_mi(sub, q_u_sub, JammerFamily::per_input_kernel, cfg);
    double cost = description_cost_nc(ch, q_u_given_s);
    r.term_message = m1.value;
    r.term_cost = cost;
    r.value = m1.value - cost;
    r.inner_argmin_kernel = m1.kernel;
    r.outer_u_kernel = q_u_given_s;
    r.outer_x_kernel = q_x_given_us;
    return r;
}

BoundResult binary_output_bound_sc(const StateChannel& ch, const Dist& q_x, const SearchConfig& cfg) {
    if (ch.ny != 2) throw NotBinaryOutput("binary_output_bound: output alphabet must be binary");
    BoundResult r;
    AvChannel avc_x = average_out_state(ch);
    JammerMin m1 = worst_jammer_mi(avc_x, q_x, JammerFamily::per_input_kernel, cfg);
    ScanResult b = optimize_simplex([&](const Dist& qj) { return h_s_given_xy(ch, q_x, qj); }, ch.nj,
                                    /*minimize=*/false, cfg);
    r.term_message = m1.value;
    r.term_cost = b.value;
    r.value = std::max(0.0, m1.value - b.value);
    r.inner_argmin_kernel = m1.kernel;
    r.inner_argmin_qj = b.arg;
    r.outer_qx = q_x;
    return r;
}

RatePlan rate_plan_sc(const StateChannel& ch, const Dist& q_x, const Kernel& q_u_given_xs,
                      double tau, const SearchConfig& cfg) {
    if (!(tau > 0.0)) throw InsufficientHeadroom("rate_plan: tau must be positive");
    AvChannel avc_x = average_out_state(ch);
    InducedChannel ind = induce_u_channel_sc(ch, q_x, q_u_given_xs);
    RatePlan p;
    p.tau = tau;
    p.min_ixy = worst_jammer_mi(avc_x, q_x, JammerFamily::iid, cfg).value;
    p.min_iuyx = worst_jammer_conditional_mi(ind.avc, ind.input_marginal, cfg).value;
    p.i_us = description_cost_sc(ch, q_x, q_u_given_xs);

    p.r_s_tilde = p.i_us + 2.0 * tau;
    // Within-bin rate: bounded by min I(U;Y|X) - tau.  A zero within-bin rate
    // means bins of size one, where nothing remains to decode, so the bound is
    // vacuous there.
    p.r_s_prime = std::min(p.r_s_tilde, std::max(0.0, p.min_iuyx - tau));
    p.r_s = p.r_s_tilde - p.r_s_prime;
    p.r = p.min_ixy - tau - p.r_s;
    if (p.r <= 0.0)
        throw InsufficientHeadroom("rate_plan: no positive message rate fits min I(X;Y) - tau");
    return p;
}

RatePlan rate_plan_nc(const StateChannel& ch, const Kernel& q_u_given_s, const Kernel& q_x_given_us,
                      double tau, const SearchConfig& cfg) {
    if (!(tau > 0.0)) throw InsufficientHeadroom("rate_plan: tau must be positive");
    InducedChannel ind = induce_u_channel_nc(ch, q_u_given_s, q_x_given_us);
    std::vector<int> map;
    AvChannel sub = restrict_support(ind.avc, ind.input_marginal, map);
    Dist q_u_sub(map.size());
    for (std::size_t k = 0; k < map.size(); ++k) q_u_sub[k] = ind.input_marginal[map[k]];
    RatePlan p;
    p.tau = tau;
    p.min_ixy = worst_jammer_mi(sub, q_u_sub, JammerFamily::per_input_kernel, cfg).value;
    ChannelGraph g = build_graph(sub, cfg.tolerance);
    p.min_iuyx = coupling_min_mi(q_u_sub, g, cfg).value;  // D(Q_U)
    p.i_us = description_cost_nc(ch, q_u_given_s);

    p.r_s_tilde = std::min(p.min_ixy, p.min_iuyx) - tau;
    p.r_s_prime = p.i_us + 2.0 * tau;  // R' > I(U;S) + tau
    p.r = p.r_s_tilde - p.r_s_prime;
    p.r_s = p.r;  // bins are indexed by the message
    if (p.r_s_tilde <= 0.0 || p.r <= 0.0)
        throw InsufficientHeadroom("rate_plan: no positive message rate fits R-tilde - R'");
    return p;
}

namespace {

struct SearchPoint {
    Dist q_x;           // strictly causal
    Kernel u_kernel;    // Q_{U|XS} or Q_{U|S}
    Kernel x_kernel;    // Q_{X|US} (noncausal only)
};

bool is_noncausal(BoundObjective o) {
    return o == BoundObjective::corollary2 || o == BoundObjective::theorem3;
}

}  // namespace

Estimator bayes_estimator_sc(const StateChannel& ch, const Dist& q_x, const Kernel& q_u_given_xs,
                             const Dist& q_j) {
    (void)q_x;  // the posterior conditions on x, so the input law cancels
    const int nu = q_u_given_xs.cols;
    Estimator h(ch.nx, nu, ch.ny, ch.ns_hat);
    for (int x = 0; x < ch.nx; ++x)
        for (int u = 0; u < nu; ++u)
            for (int y = 0; y < ch.ny; ++y) {
                // posterior over s given (x,u,y)
                double best = std::numeric_limits<double>::infinity();
                int best_sh = 0;
                for (int sh = 0; sh < ch.ns_hat; ++sh) {
                    double risk = 0.0;
                    for (int s = 0; s < ch.ns; ++s) {
                        double post = ch.q_s[s] * q_u_given_xs.at(x * ch.ns + s, u);
                        double py = 0.0;
                        for (int j = 0; j < ch.nj; ++j) py += q_j[j] * ch.wp(x, s, j, y);
                        risk += post * py * ch.d(s, sh);
                    }
                    if (risk < best) {
                        best = risk;
                        best_sh = sh;
                    }
                }
                h.at(x, u, y) = best_sh;
            }
    return h;
}

Estimator bayes_estimator_nc(const StateChannel& ch, const Kernel& q_u_given_s,
                             const Kernel& q_x_given_us, const Dist& q_j) {
    const int nu = q_u_given_s.cols;
    Estimator h(1, nu, ch.ny, ch.ns_hat);
    for (int u = 0; u < nu; ++u)
        for (int y = 0; y < ch.ny; ++y) {
            double best = std::numeric_limits<double>::infinity();
            int best_sh = 0;
            for (int sh = 0; sh < ch.ns_hat; ++sh) {
                double risk = 0.0;
                for (int s = 0; s < ch.ns; ++s) {
                    double m = ch.q_s[s] * q_u_given_s.at(s, u);
                    if (m <= 0.0) continue;
                    for (int x = 0; x < ch.nx; ++x) {
                        double mx = m * q_x_given_us.at(u * ch.ns + s, x);
                        if (mx <= 0.0) continue;
                        double py = 0.0;
                        for (int j = 0; j < ch.nj; ++j) py += q_j[j] * ch.wp(x, s, j, y);
                        risk += mx * py * ch.d(s, sh);
                    }
                }
                if (risk < best) {
                    best = risk;
                    best_sh = sh;
                }
            }
            h.at(0, u, y) = best_sh;
        }
    return h;
}

BoundResult bound_search(BoundObjective objective, const StateChannel& ch, double distortion_budget,
                         const BoundSearchConfig& bcfg) {
    const int nu = bcfg.num_u > 0 ? bcfg.num_u : ch.ns + 1;
    SearchConfig light = bcfg.search;
    light.grid_resolution = std::min(light.grid_resolution, 16);
    light.refinement_rounds = 2;
    const bool noncausal = is_noncausal(objective);

    // Alternate the estimator with the worst-distortion jammer, then evaluate.
    auto evaluate = [&](const SearchPoint& pt, const SearchConfig& cfg) -> BoundResult {
        Estimator h;
        Dist qj(ch.nj, 1.0 / ch.nj);
        for (int round = 0; round < 10; ++round) {
            h = noncausal ? bayes_estimator_nc(ch, pt.u_kernel, pt.x_kernel, qj)
                          : bayes_estimator_sc(ch, pt.q_x, pt.u_kernel, qj);
            DistortionResult d = noncausal
                                     ? expected_distortion_nc(ch, pt.u_kernel, pt.x_kernel, h)
                                     : expected_distortion(ch, pt.q_x, pt.u_kernel, h);
            if (d.argmax_qj == qj) break;
            qj = d.argmax_qj;
        }
        switch (objective) {
            case BoundObjective::theorem2:
                return theorem2_bound_at(ch, pt.q_x, pt.u_kernel, h, distortion_budget, cfg);
            case BoundObjective::corollary4:
                return corollary4_bound_at(ch, pt.q_x, pt.u_kernel, h, distortion_budget, cfg);
            case BoundObjective::corollary2:
                return corollary2_bound_at(ch, pt.u_kernel, pt.x_kernel, h, distortion_budget, cfg);
            case BoundObjective::theorem3:
                return theorem3_bound_at(ch, pt.u_kernel, pt.x_kernel, h, distortion_budget, cfg);
        }
        throw Error("bound_search: unknown objective");
    };
    auto score = [&](const SearchPoint& pt) {
        BoundResult r = evaluate(pt, light);
        return r.feasible ? r.value : -std::numeric_limits<double>::infinity();
    };

    // Seeds: structured kernels plus seeded random interior points.
    std::vector<SearchPoint> seeds;
    {
        SearchPoint base;
        base.q_x.assign(ch.nx, 1.0 / ch.nx);
        if (noncausal) {
            Kernel us(ch.ns, nu, 0.0);  // U = S embedding
            for (int s = 0; s < ch.ns; ++s) us.at(s, std::min(s, nu - 1)) = 1.0;
            Kernel xu(nu * ch.ns, ch.nx, 1.0 / ch.nx);
            base.u_kernel = us;
            base.x_kernel = xu;
            seeds.push_back(base);
            Kernel uniform_us(ch.ns, nu, 1.0 / nu);
            SearchPoint alt = base;
            alt.u_kernel = uniform_us;
            seeds.push_back(alt);
        } else {
            Kernel us(ch.nx * ch.ns, nu, 0.0);  // U = S embedding
            for (int x = 0; x < ch.nx; ++x)
                for (int s = 0; s < ch.ns; ++s) us.at(x * ch.ns + s, std::min(s, nu - 1)) = 1.0;
            base.u_kernel = us;
            seeds.push_back(base);
            SearchPoint alt = base;
            alt.u_kernel = Kernel(ch.nx * ch.ns, nu, 1.0 / nu);
            seeds.push_back(alt);
            SearchPoint constant = base;  // U carries nothing
            constant.u_kernel = Kernel(ch.nx * ch.ns, nu, 0.0);
            for (int r = 0; r < ch.nx * ch.ns; ++r) constant.u_kernel.at(r, 0) = 1.0;
            seeds.push_back(constant);
        }
        Rng rng = Rng::stream(bcfg.search.rng_seed, 0xb0a7d);
        auto random_kernel = [&](int rows, int cols) {
            Kernel k(rows, cols);
            for (int r = 0; r < rows; ++r) {
                double sum = 0.0;
                for (int c = 0; c < cols; ++c) {
                    double e = -std::log(1.0 - rng.next_double());
                    k.at(r, c) = e;
                    sum += e;
                }
                for (int c = 0; c < cols; ++c) k.at(r, c) /= sum;
            }
            return k;
        };
        for (int i = 0; i < bcfg.search.multistart_count; ++i) {
            SearchPoint pt;
            pt.q_x.assign(ch.nx, 0.0);
            double sum = 0.0;
            for (int x = 0; x < ch.nx; ++x) {
                pt.q_x[x] = -std::log(1.0 - rng.next_double());
                sum += pt.q_x[x];
            }
            for (int x = 0; x < ch.nx; ++x) pt.q_x[x] /= sum;
            if (noncausal) {
                pt.u_kernel = random_kernel(ch.ns, nu);
                pt.x_kernel = random_kernel(nu * ch.ns, ch.nx);
            } else {
                pt.u_kernel = random_kernel(ch.nx * ch.ns, nu);
            }
            seeds.push_back(pt);
        }
    }

    std::vector<double> seed_vals(seeds.size());
    par_for(seeds.size(), [&](std::size_t i) { seed_vals[i] = score(seeds[i]); });
    std::size_t best = 0;
    for (std::size_t i = 1; i < seeds.size(); ++i)
        if (seed_vals[i] > seed_vals[best]) best = i;
    if (!std::isfinite(seed_vals[best])) {
        // Last resort: coarse random probing before declaring infeasibility.
        throw NoFeasiblePoint("bound_search: every probed point violates a feasibility constraint");
    }
    SearchPoint cur = seeds[best];
    double cur_val = seed_vals[best];

    // Coordinate pattern refinement over all simplex rows of the point.
    auto rows_of = [&](SearchPoint& pt) {
        std::vector<double*> rows;
        std::vector<int> lens;
        if (!noncausal) {
            rows.push_back(pt.q_x.data());
            lens.push_back(static_cast<int>(pt.q_x.size()));
        }
        for (int r = 0; r < pt.u_kernel.rows; ++r) {
            rows.push_back(pt.u_kernel.p.data() + static_cast<std::size_t>(r) * pt.u_kernel.cols);
            lens.push_back(pt.u_kernel.cols);
        }
        if (noncausal)
            for (int r = 0; r < pt.x_kernel.rows; ++r) {
                rows.push_back(pt.x_kernel.p.data() + static_cast<std::size_t>(r) * pt.x_kernel.cols);
                lens.push_back(pt.x_kernel.cols);
            }
        return std::pair{rows, lens};
    };

    double h = 0.25;
    for (int round = 0; round < 4; ++round, h /= 2.0) {
        bool improved = true;
        int guard = 0;
        while (improved && guard++ < 40) {
            improved = false;
            auto [rows, lens] = rows_of(cur);
            for (std::size_t rix = 0; rix < rows.size(); ++rix) {
                for (int i = 0; i < lens[rix]; ++i)
                    for (int j = 0; j < lens[rix]; ++j) {
                        if (i == j || rows[rix][j] < h - 1e-15) continue;
                        SearchPoint trial = cur;
                        auto [trows, tlens] = rows_of(trial);
                        trows[rix][i] += h;
                        trows[rix][j] -= h;
                        double v = score(trial);
                        if (v > cur_val + 1e-12) {
                            cur = trial;
                            cur_val = v;
                            improved = true;
                        }
                    }
            }
        }
    }

    return evaluate(cur, bcfg.search);
}

}  // namespace avckit
