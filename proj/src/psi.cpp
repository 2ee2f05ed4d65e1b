#include "avckit/psi.hpp"

#include <cmath>

namespace avckit {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double kl_term(double p, double ref) {
    if (p <= 0.0) return 0.0;
    if (ref <= 0.0) return kInf;
    return p * std::log2(p / ref);
}
}  // namespace

TypicalityParams TypicalityParams::defaults(int n, int cells, double tau) {
    TypicalityParams tp;
    tp.eta = 4.0 * cells * std::log2(n + 1.0) / n;
    tp.delta = tp.eta / 2.0;
    tp.tau = tau;
    return tp;
}

PsiContextSc PsiContextSc::make(const StateChannel& ch, const Dist& q_x, const Kernel& q_u_given_xs) {
    PsiContextSc ctx;
    ctx.ch = ch;
    ctx.q_x = q_x;
    ctx.q_u_given_xs = q_u_given_xs;
    ctx.nu = q_u_given_xs.cols;
    const int nx = ch.nx, ns = ch.ns, nj = ch.nj, ny = ch.ny, nu = ctx.nu;

    ctx.q_y_given_xj.assign(static_cast<std::size_t>(nx) * nj * ny, 0.0);
    for (int x = 0; x < nx; ++x)
        for (int j = 0; j < nj; ++j)
            for (int y = 0; y < ny; ++y) {
                double v = 0.0;
                for (int s = 0; s < ns; ++s) v += ch.q_s[s] * ch.wp(x, s, j, y);
                ctx.q_y_given_xj[(static_cast<std::size_t>(x) * nj + j) * ny + y] = v;
            }

    ctx.q_yu_given_xj.assign(static_cast<std::size_t>(nx) * nj * nu * ny, 0.0);
    for (int x = 0; x < nx; ++x)
        for (int j = 0; j < nj; ++j)
            for (int u = 0; u < nu; ++u)
                for (int y = 0; y < ny; ++y) {
                    double v = 0.0;
                    for (int s = 0; s < ns; ++s)
                        v += ch.q_s[s] * q_u_given_xs.at(x * ns + s, u) * ch.wp(x, s, j, y);
                    ctx.q_yu_given_xj[((static_cast<std::size_t>(x) * nj + j) * nu + u) * ny + y] = v;
                }

    ctx.q_xus.assign(static_cast<std::size_t>(nx) * nu * ns, 0.0);
    for (int x = 0; x < nx; ++x)
        for (int u = 0; u < nu; ++u)
            for (int s = 0; s < ns; ++s)
                ctx.q_xus[(static_cast<std::size_t>(x) * nu + u) * ns + s] =
                    q_x[x] * ch.q_s[s] * q_u_given_xs.at(x * ns + s, u);
    return ctx;
}

PsiContextNc PsiContextNc::make(const StateChannel& ch, const Kernel& q_u_given_s,
                                const Kernel& q_x_given_us) {
    PsiContextNc ctx;
    ctx.ch = ch;
    ctx.q_u_given_s = q_u_given_s;
    ctx.q_x_given_us = q_x_given_us;
    ctx.nu = q_u_given_s.cols;
    const int nu = ctx.nu, ns = ch.ns, nj = ch.nj, ny = ch.ny, nx = ch.nx;

    ctx.q_us.assign(static_cast<std::size_t>(nu) * ns, 0.0);
    ctx.q_u.assign(nu, 0.0);
    for (int u = 0; u < nu; ++u)
        for (int s = 0; s < ns; ++s) {
            double v = ch.q_s[s] * q_u_given_s.at(s, u);
            ctx.q_us[static_cast<std::size_t>(u) * ns + s] = v;
            ctx.q_u[u] += v;
        }

    ctx.q_y_given_uj.assign(static_cast<std::size_t>(nu) * nj * ny, 0.0);
    for (int u = 0; u < nu; ++u) {
        if (ctx.q_u[u] <= 0.0) continue;
        for (int s = 0; s < ns; ++s) {
            double s_given_u = ctx.q_us[static_cast<std::size_t>(u) * ns + s] / ctx.q_u[u];
            if (s_given_u <= 0.0) continue;
            for (int x = 0; x < nx; ++x) {
                double m = s_given_u * q_x_given_us.at(u * ns + s, x);
                if (m <= 0.0) continue;
                for (int j = 0; j < nj; ++j)
                    for (int y = 0; y < ny; ++y)
                        ctx.q_y_given_uj[(static_cast<std::size_t>(u) * nj + j) * ny + y] +=
                            m * ch.wp(x, s, j, y);
            }
        }
    }
    return ctx;
}

double psi_divergence(const PsiContextSc& ctx, PsiSet which, const JointType& t) {
    const int nx = ctx.ch.nx, ns = ctx.ch.ns, nj = ctx.ch.nj, ny = ctx.ch.ny, nu = ctx.nu;
    const double n = static_cast<double>(t.n);
    switch (which) {
        case PsiSet::psi1: {
            if (t.sizes != std::vector<int>{nx, ny, nj}) throw ArityMismatch("psi1 expects (x,y,j)");
            Dist pj(nj, 0.0);
            for (int x = 0; x < nx; ++x)
                for (int y = 0; y < ny; ++y)
                    for (int j = 0; j < nj; ++j) pj[j] += t.counts[(static_cast<std::size_t>(x) * ny + y) * nj + j] / n;
            double d = 0.0;
            for (int x = 0; x < nx; ++x)
                for (int y = 0; y < ny; ++y)
                    for (int j = 0; j < nj; ++j) {
                        double p = t.counts[(static_cast<std::size_t>(x) * ny + y) * nj + j] / n;
                        double ref = ctx.q_x[x] * pj[j] *
                                     ctx.q_y_given_xj[(static_cast<std::size_t>(x) * nj + j) * ny + y];
                        d += kl_term(p, ref);
                        if (d == kInf) return kInf;
                    }
            return d < 0.0 ? 0.0 : d;
        }
        case PsiSet::psi2: {
            if (t.sizes != std::vector<int>{nx, nu, ns}) throw ArityMismatch("psi2 expects (x,u,s)");
            double d = 0.0;
            for (std::size_t c = 0; c < t.counts.size(); ++c) {
                d += kl_term(t.counts[c] / n, ctx.q_xus[c]);
                if (d == kInf) return kInf;
            }
            return d < 0.0 ? 0.0 : d;
        }
        case PsiSet::psi3: {
            if (t.sizes != std::vector<int>{nx, nu, ny, nj}) throw ArityMismatch("psi3 expects (x,u,y,j)");
            Dist pj(nj, 0.0);
            for (std::size_t c = 0; c < t.counts.size(); ++c) pj[c % nj] += t.counts[c] / n;
            double d = 0.0;
            for (int x = 0; x < nx; ++x)
                for (int u = 0; u < nu; ++u)
                    for (int y = 0; y < ny; ++y)
                        for (int j = 0; j < nj; ++j) {
                            double p =
                                t.counts[((static_cast<std::size_t>(x) * nu + u) * ny + y) * nj + j] / n;
                            double ref =
                                ctx.q_x[x] * pj[j] *
                                ctx.q_yu_given_xj[((static_cast<std::size_t>(x) * nj + j) * nu + u) * ny + y];
                            d += kl_term(p, ref);
                            if (d == kInf) return kInf;
                        }
            return d < 0.0 ? 0.0 : d;
        }
        case PsiSet::psi4: {
            if (t.sizes != std::vector<int>{nx, nu, ns, nj}) throw ArityMismatch("psi4 expects (x,u,s,j)");
            Dist pj(nj, 0.0);
            for (std::size_t c = 0; c < t.counts.size(); ++c) pj[c % nj] += t.counts[c] / n;
            double d = 0.0;
            for (int x = 0; x < nx; ++x)
                for (int u = 0; u < nu; ++u)
                    for (int s = 0; s < ns; ++s)
                        for (int j = 0; j < nj; ++j) {
                            double p =
                                t.counts[((static_cast<std::size_t>(x) * nu + u) * ns + s) * nj + j] / n;
                            double ref = ctx.q_xus[(static_cast<std::size_t>(x) * nu + u) * ns + s] * pj[j];
                            d += kl_term(p, ref);
                            if (d == kInf) return kInf;
                        }
            return d < 0.0 ? 0.0 : d;
        }
    }
    throw ArityMismatch("psi_divergence: unknown set");
}

double psi_divergence(const PsiContextNc& ctx, PsiSet which, const JointType& t) {
    const int ns = ctx.ch.ns, nj = ctx.ch.nj, ny = ctx.ch.ny, nu = ctx.nu;
    const double n = static_cast<double>(t.n);
    switch (which) {
        case PsiSet::psi1: {
            if (t.sizes != std::vector<int>{nu, ny, nj}) throw ArityMismatch("psi1 expects (u,y,j)");
            // conditional divergence: sum p(u,y,j) log( p(y|u,j) / Q(y|u,j) )
            std::vector<double> puj(static_cast<std::size_t>(nu) * nj, 0.0);
            for (int u = 0; u < nu; ++u)
                for (int y = 0; y < ny; ++y)
                    for (int j = 0; j < nj; ++j)
                        puj[static_cast<std::size_t>(u) * nj + j] +=
                            t.counts[(static_cast<std::size_t>(u) * ny + y) * nj + j] / n;
            double d = 0.0;
            for (int u = 0; u < nu; ++u)
                for (int y = 0; y < ny; ++y)
                    for (int j = 0; j < nj; ++j) {
                        double p = t.counts[(static_cast<std::size_t>(u) * ny + y) * nj + j] / n;
                        if (p <= 0.0) continue;
                        double cond = p / puj[static_cast<std::size_t>(u) * nj + j];
                        double ref = ctx.q_y_given_uj[(static_cast<std::size_t>(u) * nj + j) * ny + y];
                        if (ref <= 0.0) return kInf;
                        d += p * std::log2(cond / ref);
                    }
            return d < 0.0 ? 0.0 : d;
        }
        case PsiSet::psi2: {
            if (t.sizes != std::vector<int>{nu, ns}) throw ArityMismatch("psi2 expects (u,s)");
            double d = 0.0;
            for (std::size_t c = 0; c < t.counts.size(); ++c) {
                d += kl_term(t.counts[c] / n, ctx.q_us[c]);
                if (d == kInf) return kInf;
            }
            return d < 0.0 ? 0.0 : d;
        }
        default:
            throw ArityMismatch("psi_divergence: noncausal context has psi1/psi2 only");
    }
}

}  // namespace avckit
