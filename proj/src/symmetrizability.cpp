#include "avckit/symmetrizability.hpp"

#include <cmath>
#include <limits>

#include "avckit/lp.hpp"

namespace avckit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// One defining equality, evaluated at a single output symbol:
//   sum_j ca[j] T(j|tb)  ==  sum_j cb[j] T(j|ta)
struct EqConstraint {
    int ta, tb;
    std::vector<double> ca, cb;
};

struct SymProblem {
    int t_rows = 0, nj = 0;
    std::vector<EqConstraint> cons;
};

std::vector<double> w_slice(const StateChannel& ch, int x, int s, int y) {
    std::vector<double> v(ch.nj);
    for (int j = 0; j < ch.nj; ++j) v[j] = ch.wp(x, s, j, y);
    return v;
}

std::vector<double> q_slice(const AvChannel& avc, int in, int y) {
    std::vector<double> v(avc.nj);
    for (int j = 0; j < avc.nj; ++j) v[j] = avc.qp(in, j, y);
    return v;
}

SymProblem build_problem(const StateChannel& ch, SymVariant variant) {
    SymProblem pr;
    pr.nj = ch.nj;
    switch (variant) {
        case SymVariant::XS: {
            pr.t_rows = ch.nx * ch.ns;
            for (int a = 0; a < pr.t_rows; ++a)
                for (int b = a + 1; b < pr.t_rows; ++b)
                    for (int y = 0; y < ch.ny; ++y)
                        pr.cons.push_back({a, b, w_slice(ch, a / ch.ns, a % ch.ns, y),
                                           w_slice(ch, b / ch.ns, b % ch.ns, y)});
            break;
        }
        case SymVariant::X: {
            pr.t_rows = ch.nx;
            for (int x = 0; x < ch.nx; ++x)
                for (int xp = x + 1; xp < ch.nx; ++xp)
                    for (int s = 0; s < ch.ns; ++s)
                        for (int y = 0; y < ch.ny; ++y)
                            pr.cons.push_back({x, xp, w_slice(ch, x, s, y), w_slice(ch, xp, s, y)});
            break;
        }
        case SymVariant::S: {
            pr.t_rows = ch.ns;
            for (int s = 0; s < ch.ns; ++s)
                for (int sp = s + 1; sp < ch.ns; ++sp)
                    for (int x = 0; x < ch.nx; ++x)
                        for (int y = 0; y < ch.ny; ++y)
                            pr.cons.push_back({s, sp, w_slice(ch, x, s, y), w_slice(ch, x, sp, y)});
            break;
        }
        case SymVariant::X_given_S: {
            pr.t_rows = ch.nx * ch.ns;
            for (int s = 0; s < ch.ns; ++s)
                for (int x = 0; x < ch.nx; ++x)
                    for (int xp = x + 1; xp < ch.nx; ++xp)
                        for (int y = 0; y < ch.ny; ++y)
                            pr.cons.push_back({x * ch.ns + s, xp * ch.ns + s, w_slice(ch, x, s, y),
                                               w_slice(ch, xp, s, y)});
            break;
        }
        case SymVariant::S_given_X: {
            pr.t_rows = ch.nx * ch.ns;
            for (int x = 0; x < ch.nx; ++x)
                for (int s = 0; s < ch.ns; ++s)
                    for (int sp = s + 1; sp < ch.ns; ++sp)
                        for (int y = 0; y < ch.ny; ++y)
                            pr.cons.push_back({x * ch.ns + s, x * ch.ns + sp, w_slice(ch, x, s, y),
                                               w_slice(ch, x, sp, y)});
            break;
        }
        default:
            throw ShapeMismatch("sym_margin: variant requires an AVC, got a StateChannel");
    }
    return pr;
}

SymProblem build_problem(const AvChannel& avc, SymVariant variant) {
    SymProblem pr;
    pr.nj = avc.nj;
    switch (variant) {
        case SymVariant::P2P_X: {
            pr.t_rows = avc.n_in;
            for (int a = 0; a < avc.n_in; ++a)
                for (int b = a + 1; b < avc.n_in; ++b)
                    for (int y = 0; y < avc.ny; ++y)
                        pr.cons.push_back({a, b, q_slice(avc, a, y), q_slice(avc, b, y)});
            break;
        }
        case SymVariant::U_given_X: {
            if (!avc.composite()) throw ShapeMismatch("sym_margin: U_given_X needs a composite (u,x) AVC");
            pr.t_rows = avc.n_in;
            for (int x = 0; x < avc.nx; ++x)
                for (int u = 0; u < avc.nu; ++u)
                    for (int up = u + 1; up < avc.nu; ++up) {
                        int a = avc.pair_index(u, x), b = avc.pair_index(up, x);
                        if (!avc.input_defined(a) && !avc.input_defined(b)) continue;
                        for (int y = 0; y < avc.ny; ++y)
                            pr.cons.push_back({a, b, q_slice(avc, a, y), q_slice(avc, b, y)});
                    }
            break;
        }
        default:
            throw ShapeMismatch("sym_margin: variant requires a StateChannel, got an AVC");
    }
    return pr;
}

double violation_of(const SymProblem& pr, const Kernel& t) {
    double worst = 0.0;
    for (const auto& c : pr.cons) {
        double v = 0.0;
        for (int j = 0; j < pr.nj; ++j) v += c.ca[j] * t.at(c.tb, j) - c.cb[j] * t.at(c.ta, j);
        worst = std::max(worst, std::fabs(v));
    }
    return worst;
}

SymReport solve_problem(const SymProblem& pr, SymVariant variant, double tol) {
    SymReport rep;
    rep.variant = variant;
    rep.tol = tol;
    rep.num_constraints = static_cast<int>(pr.cons.size());
    rep.certificate = Kernel(pr.t_rows, pr.nj, 1.0 / pr.nj);
    if (pr.cons.empty()) {
        // Nothing to symmetrize: no pair of contexts can be confused.
        rep.margin = kInf;
        rep.symmetrizable = false;
        return rep;
    }

    // Variables: T entries (row-major) then the bound t.  Minimize t.
    const int nt = pr.t_rows * pr.nj;
    LpBuilder lp(nt + 1);
    std::vector<double> obj(nt + 1, 0.0);
    obj[nt] = -1.0;
    lp.set_objective(obj);
    for (const auto& c : pr.cons) {
        std::vector<double> row(nt + 1, 0.0);
        for (int j = 0; j < pr.nj; ++j) {
            row[c.tb * pr.nj + j] += c.ca[j];
            row[c.ta * pr.nj + j] -= c.cb[j];
        }
        row[nt] = -1.0;
        lp.add_le(row, 0.0);
        for (int k = 0; k < nt; ++k) row[k] = -row[k];
        row[nt] = -1.0;
        lp.add_le(row, 0.0);
    }
    for (int r = 0; r < pr.t_rows; ++r) {
        std::vector<double> row(nt + 1, 0.0);
        for (int j = 0; j < pr.nj; ++j) row[r * pr.nj + j] = 1.0;
        lp.add_eq(row, 1.0);
    }

    LpResult sol = lp.solve();
    for (int r = 0; r < pr.t_rows; ++r) {
        double sum = 0.0;
        for (int j = 0; j < pr.nj; ++j) sum += std::max(0.0, sol.x[r * pr.nj + j]);
        for (int j = 0; j < pr.nj; ++j)
            rep.certificate.at(r, j) = sum > 0.0 ? std::max(0.0, sol.x[r * pr.nj + j]) / sum : 1.0 / pr.nj;
    }
    // Margin is re-derived from the certificate so the report is always
    // internally consistent.
    rep.margin = violation_of(pr, rep.certificate);
    rep.symmetrizable = rep.margin <= tol;
    return rep;
}

}  // namespace

std::string to_string(SymVariant v) {
    switch (v) {
        case SymVariant::XS: return "XS";
        case SymVariant::X: return "X";
        case SymVariant::S: return "S";
        case SymVariant::X_given_S: return "X|S";
        case SymVariant::S_given_X: return "S|X";
        case SymVariant::P2P_X: return "P2P-X";
        case SymVariant::U_given_X: return "U|X";
    }
    return "?";
}

SymReport sym_margin(const StateChannel& ch, SymVariant variant, double tol) {
    return solve_problem(build_problem(ch, variant), variant, tol);
}

SymReport sym_margin(const AvChannel& avc, SymVariant variant, double tol) {
    return solve_problem(build_problem(avc, variant), variant, tol);
}

double sym_violation(const StateChannel& ch, SymVariant variant, const Kernel& t) {
    return violation_of(build_problem(ch, variant), t);
}

double sym_violation(const AvChannel& avc, SymVariant variant, const Kernel& t) {
    return violation_of(build_problem(avc, variant), t);
}

int indicator_u_given_x(const StateChannel& ch, const Dist& q_x, const Kernel& q_u_given_xs,
                        double tol) {
    InducedChannel ind = induce_u_channel_sc(ch, q_x, q_u_given_xs);
    SymReport rep = sym_margin(ind.avc, SymVariant::U_given_X, tol);
    return rep.margin > tol ? 1 : 0;
}

}  // namespace avckit
