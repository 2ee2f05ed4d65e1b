#include "avckit/channel.hpp"

#include <cmath>
#include <string>

namespace avckit {

namespace {

void check_row(const double* row, int len, double tol, const std::string& what, int index) {
    double sum = 0.0;
    for (int i = 0; i < len; ++i) {
        if (row[i] < -tol) throw NegativeEntry(what + ": negative entry in row " + std::to_string(index));
        sum += row[i];
    }
    if (std::fabs(sum - 1.0) > tol)
        throw NonStochasticRow(what + ": row " + std::to_string(index) + " sums to " + std::to_string(sum));
}

void renormalize_row(double* row, int len) {
    double sum = 0.0;
    for (int i = 0; i < len; ++i) {
        if (row[i] < 0.0) row[i] = 0.0;
        sum += row[i];
    }
    if (sum > 0.0)
        for (int i = 0; i < len; ++i) row[i] /= sum;
}

}  // namespace

void Kernel::validate(double tol) const {
    for (int r = 0; r < rows; ++r)
        if (row_defined(r)) check_row(p.data() + static_cast<std::size_t>(r) * cols, cols, tol, "Kernel", r);
}

void AvChannel::validate(double tol) const {
    for (int in = 0; in < n_in; ++in) {
        if (!input_defined(in)) continue;
        for (int j = 0; j < nj; ++j)
            check_row(q.data() + (static_cast<std::size_t>(in) * nj + j) * ny, ny, tol, "AvChannel", in * nj + j);
    }
}

StateChannel validate_channel(StateChannel raw, double tol) {
    if (raw.nx <= 0 || raw.ns <= 0 || raw.nj <= 0 || raw.ny <= 0 || raw.ns_hat <= 0)
        throw DimensionMismatch("validate_channel: nonpositive alphabet size");
    if (raw.w.size() != static_cast<std::size_t>(raw.nx) * raw.ns * raw.nj * raw.ny)
        throw DimensionMismatch("validate_channel: W tensor size mismatch");
    if (raw.q_s.size() != static_cast<std::size_t>(raw.ns))
        throw DimensionMismatch("validate_channel: Qs size mismatch");
    if (raw.distortion.size() != static_cast<std::size_t>(raw.ns) * raw.ns_hat)
        throw DimensionMismatch("validate_channel: distortion size mismatch");

    for (int x = 0; x < raw.nx; ++x)
        for (int s = 0; s < raw.ns; ++s)
            for (int j = 0; j < raw.nj; ++j)
                check_row(&raw.w[((static_cast<std::size_t>(x) * raw.ns + s) * raw.nj + j) * raw.ny],
                          raw.ny, tol, "W", (x * raw.ns + s) * raw.nj + j);
    check_row(raw.q_s.data(), raw.ns, tol, "Qs", 0);
    for (double v : raw.distortion)
        if (!(v >= 0.0) || !std::isfinite(v)) throw NegativeEntry("validate_channel: bad distortion entry");

    for (int x = 0; x < raw.nx; ++x)
        for (int s = 0; s < raw.ns; ++s)
            for (int j = 0; j < raw.nj; ++j)
                renormalize_row(&raw.w[((static_cast<std::size_t>(x) * raw.ns + s) * raw.nj + j) * raw.ny], raw.ny);
    renormalize_row(raw.q_s.data(), raw.ns);
    return raw;
}

AvChannel average_out_state(const StateChannel& ch) {
    AvChannel avc;
    avc.n_in = ch.nx;
    avc.nj = ch.nj;
    avc.ny = ch.ny;
    avc.q.assign(static_cast<std::size_t>(ch.nx) * ch.nj * ch.ny, 0.0);
    for (int x = 0; x < ch.nx; ++x)
        for (int j = 0; j < ch.nj; ++j)
            for (int y = 0; y < ch.ny; ++y) {
                double v = 0.0;
                for (int s = 0; s < ch.ns; ++s) v += ch.q_s[s] * ch.wp(x, s, j, y);
                avc.qp(x, j, y) = v;
            }
    return avc;
}

InducedChannel induce_u_channel_sc(const StateChannel& ch, const Dist& q_x, const Kernel& q_u_given_xs) {
    if (static_cast<int>(q_x.size()) != ch.nx) throw DimensionMismatch("induce_u_channel: Qx size");
    if (q_u_given_xs.rows != ch.nx * ch.ns) throw DimensionMismatch("induce_u_channel: Q_{U|XS} rows");
    const int nu = q_u_given_xs.cols;

    InducedChannel out;
    out.avc.n_in = nu * ch.nx;
    out.avc.nj = ch.nj;
    out.avc.ny = ch.ny;
    out.avc.nu = nu;
    out.avc.nx = ch.nx;
    out.avc.q.assign(static_cast<std::size_t>(out.avc.n_in) * ch.nj * ch.ny, 0.0);
    out.avc.row_defined_flags.assign(out.avc.n_in, 0);
    out.s_posterior = Kernel(nu * ch.nx, ch.ns);
    out.s_posterior.defined.assign(nu * ch.nx, 0);
    out.input_marginal.assign(out.avc.n_in, 0.0);

    for (int u = 0; u < nu; ++u)
        for (int x = 0; x < ch.nx; ++x) {
            const int in = out.avc.pair_index(u, x);
            double mass = 0.0;
            for (int s = 0; s < ch.ns; ++s)
                mass += q_x[x] * ch.q_s[s] * q_u_given_xs.at(x * ch.ns + s, u);
            out.input_marginal[in] = mass;
            if (mass <= 0.0) continue;  // zero-mass (u,x): conditional undefined
            out.avc.row_defined_flags[in] = 1;
            out.s_posterior.defined[in] = 1;
            for (int s = 0; s < ch.ns; ++s) {
                double post = q_x[x] * ch.q_s[s] * q_u_given_xs.at(x * ch.ns + s, u) / mass;
                out.s_posterior.at(in, s) = post;
                for (int j = 0; j < ch.nj; ++j)
                    for (int y = 0; y < ch.ny; ++y) out.avc.qp(in, j, y) += post * ch.wp(x, s, j, y);
            }
        }
    return out;
}

InducedChannel induce_u_channel_nc(const StateChannel& ch, const Kernel& q_u_given_s, const Kernel& q_x_given_us) {
    if (q_u_given_s.rows != ch.ns) throw DimensionMismatch("induce_u_channel: Q_{U|S} rows");
    const int nu = q_u_given_s.cols;
    if (q_x_given_us.rows != nu * ch.ns || q_x_given_us.cols != ch.nx)
        throw DimensionMismatch("induce_u_channel: Q_{X|US} shape");

    InducedChannel out;
    out.avc.n_in = nu;
    out.avc.nj = ch.nj;
    out.avc.ny = ch.ny;
    out.avc.q.assign(static_cast<std::size_t>(nu) * ch.nj * ch.ny, 0.0);
    out.avc.row_defined_flags.assign(nu, 0);
    out.input_marginal.assign(nu, 0.0);

    for (int u = 0; u < nu; ++u) {
        double q_u = 0.0;
        for (int s = 0; s < ch.ns; ++s) q_u += ch.q_s[s] * q_u_given_s.at(s, u);
        out.input_marginal[u] = q_u;
        if (q_u <= 0.0) continue;
        out.avc.row_defined_flags[u] = 1;
        for (int s = 0; s < ch.ns; ++s) {
            double s_given_u = ch.q_s[s] * q_u_given_s.at(s, u) / q_u;
            if (s_given_u <= 0.0) continue;
            for (int x = 0; x < ch.nx; ++x) {
                double wx = s_given_u * q_x_given_us.at(u * ch.ns + s, x);
                if (wx <= 0.0) continue;
                for (int j = 0; j < ch.nj; ++j)
                    for (int y = 0; y < ch.ny; ++y) out.avc.qp(u, j, y) += wx * ch.wp(x, s, j, y);
            }
        }
    }
    return out;
}

Kernel apply_jammer_kernel(const AvChannel& avc, const Kernel& k) {
    if (k.rows != avc.n_in || k.cols != avc.nj) throw DimensionMismatch("apply_jammer_kernel: kernel shape");
    Kernel dmc(avc.n_in, avc.ny);
    dmc.defined = avc.row_defined_flags;
    for (int in = 0; in < avc.n_in; ++in) {
        if (!avc.input_defined(in)) continue;
        for (int j = 0; j < avc.nj; ++j)
            for (int y = 0; y < avc.ny; ++y) dmc.at(in, y) += avc.qp(in, j, y) * k.at(in, j);
    }
    return dmc;
}

Kernel apply_jammer_kernel(const AvChannel& avc, const Dist& q_j) {
    if (static_cast<int>(q_j.size()) != avc.nj) throw DimensionMismatch("apply_jammer_kernel: Qj size");
    Kernel k(avc.n_in, avc.nj);
    for (int in = 0; in < avc.n_in; ++in)
        for (int j = 0; j < avc.nj; ++j) k.at(in, j) = q_j[j];
    return apply_jammer_kernel(avc, k);
}

namespace {

// Per-j expected distortion c_j; E[d] under iid Q_J is sum_j Q_J(j) c_j.
DistortionResult vertex_max(const std::vector<double>& per_j_cost) {
    DistortionResult r;
    int best = 0;
    for (std::size_t j = 0; j < per_j_cost.size(); ++j)
        if (per_j_cost[j] > per_j_cost[best]) best = static_cast<int>(j);
    r.worst = per_j_cost[best];
    r.argmax_qj.assign(per_j_cost.size(), 0.0);
    r.argmax_qj[best] = 1.0;
    return r;
}

}  // namespace

DistortionResult expected_distortion(const StateChannel& ch, const Dist& q_x,
                                     const Kernel& q_u_given_xs, const Estimator& h) {
    const int nu = q_u_given_xs.cols;
    if (h.nx != ch.nx || h.nu != nu || h.ny != ch.ny)
        throw DimensionMismatch("expected_distortion: estimator domain mismatch");
    std::vector<double> cost(ch.nj, 0.0);
    for (int x = 0; x < ch.nx; ++x)
        for (int s = 0; s < ch.ns; ++s)
            for (int u = 0; u < nu; ++u) {
                double m = q_x[x] * ch.q_s[s] * q_u_given_xs.at(x * ch.ns + s, u);
                if (m <= 0.0) continue;
                for (int j = 0; j < ch.nj; ++j)
                    for (int y = 0; y < ch.ny; ++y)
                        cost[j] += m * ch.wp(x, s, j, y) * ch.d(s, h.at(x, u, y));
            }
    return vertex_max(cost);
}

DistortionResult expected_distortion_nc(const StateChannel& ch, const Kernel& q_u_given_s,
                                        const Kernel& q_x_given_us, const Estimator& h) {
    const int nu = q_u_given_s.cols;
    if (h.nu != nu || h.ny != ch.ny) throw DimensionMismatch("expected_distortion: estimator domain mismatch");
    std::vector<double> cost(ch.nj, 0.0);
    for (int s = 0; s < ch.ns; ++s)
        for (int u = 0; u < nu; ++u) {
            double mu = ch.q_s[s] * q_u_given_s.at(s, u);
            if (mu <= 0.0) continue;
            for (int x = 0; x < ch.nx; ++x) {
                double m = mu * q_x_given_us.at(u * ch.ns + s, x);
                if (m <= 0.0) continue;
                for (int j = 0; j < ch.nj; ++j)
                    for (int y = 0; y < ch.ny; ++y)
                        cost[j] += m * ch.wp(x, s, j, y) * ch.d(s, h.at(0, u, y));
            }
        }
    return vertex_max(cost);
}

}  // namespace avckit
