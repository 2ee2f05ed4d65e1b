#include "avckit/coding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace avckit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double kl_term(double p, double ref) {
    if (p <= 0.0) return 0.0;
    if (ref <= 0.0) return kInf;
    return p * std::log2(p / ref);
}

uint64_t binom(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > (1ull << 62)) return 1ull << 62;
    }
    return r;
}

uint64_t count_splits(const std::vector<int64_t>& counts, int parts, uint64_t cap) {
    uint64_t total = 1;
    for (int64_t c : counts) {
        total *= binom(static_cast<uint64_t>(c) + parts - 1, parts - 1);
        if (total > cap) return cap + 1;
    }
    return total;
}

// Enumerate all integer splits of each cell count into `parts` parts;
// `split` is laid out cell-major: split[cell*parts + part].
template <class F>
void for_each_split(const std::vector<int64_t>& counts, int parts, F&& visit) {
    const int ncells = static_cast<int>(counts.size());
    std::vector<int> split(static_cast<std::size_t>(ncells) * parts, 0);
    // recursive composition of each cell
    auto rec = [&](auto&& self, int cell) -> void {
        if (cell == ncells) {
            visit(split);
            return;
        }
        auto comp = [&](auto&& cself, int part, int left) -> void {
            if (part == parts - 1) {
                split[static_cast<std::size_t>(cell) * parts + part] = left;
                self(self, cell + 1);
                return;
            }
            for (int v = 0; v <= left; ++v) {
                split[static_cast<std::size_t>(cell) * parts + part] = v;
                cself(cself, part + 1, left - v);
            }
        };
        comp(comp, 0, static_cast<int>(counts[cell]));
    };
    rec(rec, 0);
}

// Minimal-divergence integer composition of `c` into `ns` parts against
// reference masses ref[s] (already scaled): returns the contribution and the
// argmin counts.
std::pair<double, std::vector<int>> best_composition(int c, int ns, const std::vector<double>& ref,
                                                     int n) {
    std::vector<int> cur(ns, 0), best_arg(ns, 0);
    double best = kInf;
    auto rec = [&](auto&& self, int s, int left) -> void {
        if (s == ns - 1) {
            cur[s] = left;
            double d = 0.0;
            for (int i = 0; i < ns; ++i) {
                d += kl_term(static_cast<double>(cur[i]) / n, ref[i]);
                if (d == kInf) break;
            }
            if (d < best) {
                best = d;
                best_arg = cur;
            }
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[s] = v;
            self(self, s + 1, left - v);
        }
    };
    if (c == 0) return {0.0, std::vector<int>(ns, 0)};
    rec(rec, 0, c);
    return {best, best_arg};
}

struct UWitness {
    bool found = false;
    double score = kInf;                 // psi3 + psi4 at the witness
    std::vector<int> j_split;            // (x,u,y) cells x nj
    std::vector<std::vector<int>> s_of;  // per (x,u,j) cell: s counts
};

}  // namespace

// ---------------------------------------------------------------------------
// encoding

EncodeResult encode_sc(const Codebook& cb, const PsiContextSc& ctx, int m_prev, int l_prev,
                       const Seq& s_prev, const TypicalityParams& params, Rng& rng) {
    EncodeResult res;
    const Seq& xw = cb.x_word(m_prev, l_prev);
    std::vector<int> candidates;
    double best_div = kInf;
    int best_idx = 0;
    for (int i = 0; i < cb.nu_count; ++i) {
        const Seq& u = cb.u_word(m_prev, l_prev, i);
        JointType t = joint_type({xw, u, s_prev}, {ctx.ch.nx, ctx.nu, ctx.ch.ns});
        double d = psi_divergence(ctx, PsiSet::psi2, t);
        if (d <= params.eta) candidates.push_back(i);
        if (d < best_div) {
            best_div = d;
            best_idx = i;
        }
    }
    if (candidates.empty()) {
        res.covering_failure = true;
        res.u_index = best_idx;  // transmit the closest description anyway
    } else {
        res.u_index = candidates[rng.next_below(static_cast<uint32_t>(candidates.size()))];
    }
    res.l_next = cb.u_bin[(static_cast<std::size_t>(m_prev) * cb.l_count + l_prev) * cb.nu_count +
                          res.u_index];
    return res;
}

EncodeResult encode_nc(const Codebook& cb, const PsiContextNc& ctx, int m, const Seq& s_seq,
                       const TypicalityParams& params, Rng& rng) {
    EncodeResult res;
    const auto& bin = cb.nc_bins[m];
    std::vector<int> candidates;
    double best_div = kInf;
    int best_idx = bin.empty() ? 0 : bin[0];
    for (int idx : bin) {
        JointType t = joint_type({cb.nc_words[idx], s_seq}, {ctx.nu, ctx.ch.ns});
        double d = psi_divergence(ctx, PsiSet::psi2, t);
        if (d <= params.eta) candidates.push_back(idx);
        if (d < best_div) {
            best_div = d;
            best_idx = idx;
        }
    }
    if (candidates.empty()) {
        res.covering_failure = true;
        res.u_index = best_idx;
    } else {
        res.u_index = candidates[rng.next_below(static_cast<uint32_t>(candidates.size()))];
    }
    if (!cb.good.empty() && !cb.good[res.u_index]) res.bad_codeword = true;

    const Seq& u = cb.nc_words[res.u_index];
    res.x_seq.resize(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        Dist row = ctx.q_x_given_us.row(u[i] * ctx.ch.ns + s_seq[i]);
        res.x_seq[i] = rng.sample(row);
    }
    return res;
}

// ---------------------------------------------------------------------------
// message decoding (strictly causal)

namespace {

// Existence of a j-refinement of the (x,y) joint type within psi1.
bool psi1_witness_exists(const PsiContextSc& ctx, const JointType& t, double eta,
                         const DecodeBudget& budget) {
    const int nx = ctx.ch.nx, ny = ctx.ch.ny, nj = ctx.ch.nj;
    const double n = static_cast<double>(t.n);
    if (count_splits(t.counts, nj, budget.max_tables) > budget.max_tables)
        throw ExplosionGuard("decode: psi1 witness enumeration over budget");
    bool found = false;
    for_each_split(t.counts, nj, [&](const std::vector<int>& split) {
        if (found) return;
        Dist pj(nj, 0.0);
        for (std::size_t c = 0; c < t.counts.size(); ++c)
            for (int j = 0; j < nj; ++j) pj[j] += split[c * nj + j] / n;
        double d = 0.0;
        for (int x = 0; x < nx && d < kInf; ++x)
            for (int y = 0; y < ny && d < kInf; ++y)
                for (int j = 0; j < nj; ++j) {
                    double p = split[(static_cast<std::size_t>(x) * ny + y) * nj + j] / n;
                    double ref = ctx.q_x[x] * pj[j] *
                                 ctx.q_y_given_xj[(static_cast<std::size_t>(x) * nj + j) * ny + y];
                    d += kl_term(p, ref);
                    if (d == kInf) break;
                }
        if (d <= eta) found = true;
    });
    return found;
}

// Competitor condition: a j-refinement of the (x, x', y) type whose (x,y,j)
// marginal is within psi1 and whose I(X,Y;X'|J) stays below eta.
bool competitor_explained(const PsiContextSc& ctx, const Seq& xa, const Seq& xb, const Seq& y,
                          double eta, const DecodeBudget& budget) {
    const int nx = ctx.ch.nx, ny = ctx.ch.ny, nj = ctx.ch.nj;
    JointType t = joint_type({xa, xb, y}, {nx, nx, ny});
    const double n = static_cast<double>(t.n);
    if (count_splits(t.counts, nj, budget.max_tables) > budget.max_tables)
        throw ExplosionGuard("decode: competitor enumeration over budget");
    bool found = false;
    JointDistribution joint({nx, nx, ny, nj});
    for_each_split(t.counts, nj, [&](const std::vector<int>& split) {
        if (found) return;
        Dist pj(nj, 0.0);
        for (std::size_t c = 0; c < t.counts.size(); ++c)
            for (int j = 0; j < nj; ++j) pj[j] += split[c * nj + j] / n;
        // psi1 on the (x_a, y, j) marginal
        double d = 0.0;
        for (int x = 0; x < nx && d < kInf; ++x)
            for (int yy = 0; yy < ny && d < kInf; ++yy)
                for (int j = 0; j < nj; ++j) {
                    double p = 0.0;
                    for (int xb_i = 0; xb_i < nx; ++xb_i)
                        p += split[((static_cast<std::size_t>(x) * nx + xb_i) * ny + yy) * nj + j];
                    p /= n;
                    double ref = ctx.q_x[x] * pj[j] *
                                 ctx.q_y_given_xj[(static_cast<std::size_t>(x) * nj + j) * ny + yy];
                    d += kl_term(p, ref);
                    if (d == kInf) break;
                }
        if (d > eta) return;
        for (std::size_t c = 0; c < joint.p.size(); ++c) joint.p[c] = split[c] / n;
        double mi = mutual_information(joint, {0, 2}, {1}, {3});
        if (mi <= eta) found = true;
    });
    return found;
}

}  // namespace

bool message_candidate_plausible(const Codebook& cb, const PsiContextSc& ctx, int m, int l,
                                 const Seq& y_seq, const TypicalityParams& params,
                                 const DecodeBudget& budget) {
    JointType t = joint_type({cb.x_word(m, l), y_seq}, {ctx.ch.nx, ctx.ch.ny});
    return psi1_witness_exists(ctx, t, params.eta, budget);
}

MessageDecode decode_message_sc(const Codebook& cb, const PsiContextSc& ctx, const Seq& y_seq,
                                const TypicalityParams& params, const DecodeBudget& budget) {
    MessageDecode out;
    std::map<std::vector<int64_t>, bool> cache;
    std::vector<std::pair<int, int>> plausible;
    for (int m = 0; m < cb.m_count; ++m)
        for (int l = 0; l < cb.l_count; ++l) {
            JointType t = joint_type({cb.x_word(m, l), y_seq}, {ctx.ch.nx, ctx.ch.ny});
            auto it = cache.find(t.counts);
            bool pass;
            if (it != cache.end()) {
                pass = it->second;
            } else {
                pass = psi1_witness_exists(ctx, t, params.eta, budget);
                cache.emplace(t.counts, pass);
            }
            if (pass) plausible.emplace_back(m, l);
        }
    out.plausible = static_cast<int>(plausible.size());
    if (plausible.empty()) return out;

    std::vector<std::pair<int, int>> winners;
    for (const auto& a : plausible) {
        bool ok = true;
        for (const auto& b : plausible) {
            if (a == b) continue;
            if (cb.x_word(a.first, a.second) == cb.x_word(b.first, b.second)) {
                ok = false;  // identical codewords can never be told apart
                break;
            }
            if (!competitor_explained(ctx, cb.x_word(a.first, a.second),
                                      cb.x_word(b.first, b.second), y_seq, params.eta, budget)) {
                ok = false;
                break;
            }
        }
        if (ok) winners.push_back(a);
    }
    if (winners.empty()) {
        out.status = DecodeStatus::no_candidate;
    } else if (winners.size() == 1) {
        out.status = DecodeStatus::ok;
        out.m = winners[0].first;
        out.l = winners[0].second;
    } else {
        out.status = DecodeStatus::ambiguous;
    }
    return out;
}

// ---------------------------------------------------------------------------
// within-bin description decoding (strictly causal)

namespace {

UWitness u_witness(const PsiContextSc& ctx, const Seq& xw, const Seq& u, const Seq& y, double eta,
                   const DecodeBudget& budget) {
    const int nx = ctx.ch.nx, ny = ctx.ch.ny, nj = ctx.ch.nj, ns = ctx.ch.ns, nu = ctx.nu;
    JointType t = joint_type({xw, u, y}, {nx, nu, ny});
    const double n = static_cast<double>(t.n);
    if (count_splits(t.counts, nj, budget.max_tables) > budget.max_tables)
        throw ExplosionGuard("decode: psi3/psi4 witness enumeration over budget");
    UWitness best;
    std::vector<double> ref_s(ns);
    for_each_split(t.counts, nj, [&](const std::vector<int>& split) {
        Dist pj(nj, 0.0);
        for (std::size_t c = 0; c < t.counts.size(); ++c)
            for (int j = 0; j < nj; ++j) pj[j] += split[c * nj + j] / n;
        // psi3 on (x,u,y,j)
        double d3 = 0.0;
        for (int x = 0; x < nx && d3 < kInf; ++x)
            for (int uu = 0; uu < nu && d3 < kInf; ++uu)
                for (int yy = 0; yy < ny && d3 < kInf; ++yy)
                    for (int j = 0; j < nj; ++j) {
                        double p =
                            split[((static_cast<std::size_t>(x) * nu + uu) * ny + yy) * nj + j] / n;
                        double ref =
                            ctx.q_x[x] * pj[j] *
                            ctx.q_yu_given_xj[((static_cast<std::size_t>(x) * nj + j) * nu + uu) * ny + yy];
                        d3 += kl_term(p, ref);
                        if (d3 == kInf) break;
                    }
        if (d3 > eta) return;
        // psi4: optimal s-refinement of the (x,u,j) marginal, cell by cell
        std::vector<std::vector<int>> s_of(static_cast<std::size_t>(nx) * nu * nj);
        double d4 = 0.0;
        for (int x = 0; x < nx && d4 <= eta; ++x)
            for (int uu = 0; uu < nu && d4 <= eta; ++uu)
                for (int j = 0; j < nj; ++j) {
                    int64_t c = 0;
                    for (int yy = 0; yy < ny; ++yy)
                        c += split[((static_cast<std::size_t>(x) * nu + uu) * ny + yy) * nj + j];
                    for (int s = 0; s < ns; ++s)
                        ref_s[s] = ctx.q_xus[(static_cast<std::size_t>(x) * nu + uu) * ns + s] * pj[j];
                    auto [dmin, arg] = best_composition(static_cast<int>(c), ns, ref_s, t.n);
                    d4 += dmin;
                    s_of[(static_cast<std::size_t>(x) * nu + uu) * nj + j] = std::move(arg);
                    if (d4 > eta) break;
                }
        if (d4 > eta) return;
        if (d3 + d4 < best.score) {
            best.found = true;
            best.score = d3 + d4;
            best.j_split = split;
            best.s_of = std::move(s_of);
        }
    });
    return best;
}

// I(Y,S;U'|J,U,X) for a candidate/competitor pair, on the joint assembled
// from the observed (x,u,u',y) type extended by the candidate's witness.
double pair_information_sc(const PsiContextSc& ctx, const Seq& xw, const Seq& ua, const Seq& ub,
                           const Seq& y, const UWitness& wit) {
    const int nx = ctx.ch.nx, ny = ctx.ch.ny, nj = ctx.ch.nj, ns = ctx.ch.ns, nu = ctx.nu;
    JointType t6 = joint_type({xw, ua, ub, y}, {nx, nu, nu, ny});
    const double n = static_cast<double>(t6.n);
    // witness conditionals
    JointType t5 = joint_type({xw, ua, y}, {nx, nu, ny});
    JointDistribution joint({nx, nu, nu, ny, ns, nj});
    for (int x = 0; x < nx; ++x)
        for (int a = 0; a < nu; ++a)
            for (int b = 0; b < nu; ++b)
                for (int yy = 0; yy < ny; ++yy) {
                    double p =
                        t6.counts[((static_cast<std::size_t>(x) * nu + a) * nu + b) * ny + yy] / n;
                    if (p <= 0.0) continue;
                    int64_t cell5 = t5.counts[(static_cast<std::size_t>(x) * nu + a) * ny + yy];
                    for (int j = 0; j < nj; ++j) {
                        double pj_cond =
                            cell5 > 0
                                ? wit.j_split[((static_cast<std::size_t>(x) * nu + a) * ny + yy) * nj + j] /
                                      static_cast<double>(cell5)
                                : 0.0;
                        if (pj_cond <= 0.0) continue;
                        const auto& s_counts = wit.s_of[(static_cast<std::size_t>(x) * nu + a) * nj + j];
                        int64_t cell_j = 0;
                        for (int s = 0; s < ns; ++s) cell_j += s_counts.empty() ? 0 : s_counts[s];
                        for (int s = 0; s < ns; ++s) {
                            double ps_cond =
                                cell_j > 0 && !s_counts.empty()
                                    ? s_counts[s] / static_cast<double>(cell_j)
                                    : (s == 0 ? 1.0 : 0.0);
                            if (ps_cond <= 0.0) continue;
                            joint.at({x, a, b, yy, s, j}) += p * pj_cond * ps_cond;
                        }
                    }
                }
    return mutual_information(joint, {3, 4}, {2}, {5, 1, 0});
}

}  // namespace

UDecode decode_u_sc(const Codebook& cb, const PsiContextSc& ctx, int m_prev, int l_prev, int l_hat,
                    const Seq& y_prev, const TypicalityParams& params, const DecodeBudget& budget) {
    UDecode out;
    const Seq& xw = cb.x_word(m_prev, l_prev);
    const auto& bin = cb.bins[static_cast<std::size_t>(m_prev) * cb.l_count + l_prev][l_hat];
    if (bin.empty()) return out;

    std::vector<int> plausible;  // positions within the bin
    std::vector<UWitness> wits(bin.size());
    for (std::size_t k = 0; k < bin.size(); ++k) {
        const Seq& u = cb.u_word(m_prev, l_prev, bin[k]);
        wits[k] = u_witness(ctx, xw, u, y_prev, params.eta, budget);
        if (wits[k].found) plausible.push_back(static_cast<int>(k));
    }
    out.plausible = static_cast<int>(plausible.size());
    if (plausible.empty()) return out;

    std::vector<int> winners;
    for (int ka : plausible) {
        bool ok = true;
        const Seq& ua = cb.u_word(m_prev, l_prev, bin[ka]);
        for (int kb : plausible) {
            if (ka == kb) continue;
            const Seq& ub = cb.u_word(m_prev, l_prev, bin[kb]);
            if (ua == ub) {
                ok = false;
                break;
            }
            if (pair_information_sc(ctx, xw, ua, ub, y_prev, wits[ka]) > params.eta) {
                ok = false;
                break;
            }
        }
        if (ok) winners.push_back(ka);
    }
    if (winners.empty()) {
        out.status = DecodeStatus::no_candidate;
    } else if (winners.size() == 1) {
        out.status = DecodeStatus::ok;
        out.k = winners[0];
        out.u_index = bin[winners[0]];
    } else {
        out.status = DecodeStatus::ambiguous;
    }
    return out;
}

// ---------------------------------------------------------------------------
// noncausal decoding

namespace {

struct NcWitness {
    bool found = false;
    double score = kInf;
    std::vector<int> j_split;            // (u,y) cells x nj
    std::vector<std::vector<int>> s_of;  // per u cell: s counts
};

NcWitness nc_witness(const PsiContextNc& ctx, const Seq& u, const Seq& y, double eta,
                     const DecodeBudget& budget) {
    const int ny = ctx.ch.ny, nj = ctx.ch.nj, ns = ctx.ch.ns, nu = ctx.nu;
    JointType t = joint_type({u, y}, {nu, ny});
    const double n = static_cast<double>(t.n);
    if (count_splits(t.counts, nj, budget.max_tables) > budget.max_tables)
        throw ExplosionGuard("decode: nc witness enumeration over budget");

    // psi2 minimization is independent of the jamming witness.
    NcWitness best;
    std::vector<std::vector<int>> s_of(nu);
    double d2 = 0.0;
    std::vector<double> ref_s(ns);
    for (int uu = 0; uu < nu; ++uu) {
        int64_t c = 0;
        for (int yy = 0; yy < ny; ++yy) c += t.counts[static_cast<std::size_t>(uu) * ny + yy];
        for (int s = 0; s < ns; ++s) ref_s[s] = ctx.q_us[static_cast<std::size_t>(uu) * ns + s];
        auto [dmin, arg] = best_composition(static_cast<int>(c), ns, ref_s, t.n);
        d2 += dmin;
        s_of[uu] = std::move(arg);
    }
    if (d2 > eta) return best;

    for_each_split(t.counts, nj, [&](const std::vector<int>& split) {
        Dist puj(static_cast<std::size_t>(nu) * nj, 0.0);
        for (int uu = 0; uu < nu; ++uu)
            for (int yy = 0; yy < ny; ++yy)
                for (int j = 0; j < nj; ++j)
                    puj[static_cast<std::size_t>(uu) * nj + j] +=
                        split[(static_cast<std::size_t>(uu) * ny + yy) * nj + j] / n;
        double d1 = 0.0;
        for (int uu = 0; uu < nu && d1 < kInf; ++uu)
            for (int yy = 0; yy < ny && d1 < kInf; ++yy)
                for (int j = 0; j < nj; ++j) {
                    double p = split[(static_cast<std::size_t>(uu) * ny + yy) * nj + j] / n;
                    if (p <= 0.0) continue;
                    double cond = p / puj[static_cast<std::size_t>(uu) * nj + j];
                    double ref = ctx.q_y_given_uj[(static_cast<std::size_t>(uu) * nj + j) * ny + yy];
                    if (ref <= 0.0) {
                        d1 = kInf;
                        break;
                    }
                    d1 += p * std::log2(cond / ref);
                }
        if (d1 < 0.0) d1 = 0.0;
        if (d1 > eta) return;
        if (d1 + d2 < best.score) {
            best.found = true;
            best.score = d1 + d2;
            best.j_split = split;
            best.s_of = s_of;
        }
    });
    return best;
}

double pair_information_nc(const PsiContextNc& ctx, const Seq& ua, const Seq& ub, const Seq& y,
                           const NcWitness& wit) {
    const int ny = ctx.ch.ny, nj = ctx.ch.nj, ns = ctx.ch.ns, nu = ctx.nu;
    JointType t3 = joint_type({ua, ub, y}, {nu, nu, ny});
    JointType t2 = joint_type({ua, y}, {nu, ny});
    const double n = static_cast<double>(t3.n);
    JointDistribution joint({nu, nu, ny, ns, nj});
    Seq utype(nu, 0);
    for (int i = 0; i < t2.n; ++i) ++utype[ua[i]];
    for (int a = 0; a < nu; ++a)
        for (int b = 0; b < nu; ++b)
            for (int yy = 0; yy < ny; ++yy) {
                double p = t3.counts[(static_cast<std::size_t>(a) * nu + b) * ny + yy] / n;
                if (p <= 0.0) continue;
                int64_t cell2 = t2.counts[static_cast<std::size_t>(a) * ny + yy];
                for (int j = 0; j < nj; ++j) {
                    double pj_cond =
                        cell2 > 0
                            ? wit.j_split[(static_cast<std::size_t>(a) * ny + yy) * nj + j] /
                                  static_cast<double>(cell2)
                            : 0.0;
                    if (pj_cond <= 0.0) continue;
                    int64_t cu = utype[a];
                    for (int s = 0; s < ns; ++s) {
                        double ps_cond = cu > 0 ? wit.s_of[a][s] / static_cast<double>(cu)
                                                : (s == 0 ? 1.0 : 0.0);
                        if (ps_cond <= 0.0) continue;
                        joint.at({a, b, yy, s, j}) += p * pj_cond * ps_cond;
                    }
                }
            }
    return mutual_information(joint, {2, 3}, {1}, {0, 4});
}

}  // namespace

bool nc_candidate_plausible(const Codebook& cb, const PsiContextNc& ctx, int index, const Seq& y_seq,
                            const TypicalityParams& params, const DecodeBudget& budget) {
    return nc_witness(ctx, cb.nc_words[index], y_seq, params.eta, budget).found;
}

MessageDecode decode_nc(const Codebook& cb, const PsiContextNc& ctx, const Seq& y_seq,
                        const TypicalityParams& params, const DecodeBudget& budget) {
    MessageDecode out;
    std::vector<int> plausible;
    std::vector<NcWitness> wits(cb.nc_count);
    std::map<std::vector<int64_t>, int> cache;  // type -> plausible witness index or -1
    for (int i = 0; i < cb.nc_count; ++i) {
        JointType t = joint_type({cb.nc_words[i], y_seq}, {ctx.nu, ctx.ch.ny});
        auto it = cache.find(t.counts);
        if (it != cache.end()) {
            if (it->second >= 0) {
                wits[i] = wits[it->second];
                plausible.push_back(i);
            }
            continue;
        }
        wits[i] = nc_witness(ctx, cb.nc_words[i], y_seq, params.eta, budget);
        cache.emplace(t.counts, wits[i].found ? i : -1);
        if (wits[i].found) plausible.push_back(i);
    }
    out.plausible = static_cast<int>(plausible.size());
    if (plausible.empty()) return out;

    std::vector<int> winners;
    for (int a : plausible) {
        bool ok = true;
        for (int b : plausible) {
            if (a == b) continue;
            if (cb.nc_words[a] == cb.nc_words[b]) {
                ok = false;
                break;
            }
            if (pair_information_nc(ctx, cb.nc_words[a], cb.nc_words[b], y_seq, wits[a]) > params.eta) {
                ok = false;
                break;
            }
        }
        if (ok) winners.push_back(a);
    }
    if (winners.empty()) {
        out.status = DecodeStatus::no_candidate;
    } else if (winners.size() == 1) {
        out.status = DecodeStatus::ok;
        out.m = cb.nc_bin[winners[0]];
        out.l = winners[0];
    } else {
        out.status = DecodeStatus::ambiguous;
    }
    return out;
}

Seq estimate_state(const Seq& x_seq, const Seq& u_seq, const Seq& y_seq, const Estimator& h) {
    if (x_seq.size() != u_seq.size() || u_seq.size() != y_seq.size())
        throw LengthMismatch("estimate_state: sequences of unequal length");
    Seq s_hat(y_seq.size());
    for (std::size_t i = 0; i < y_seq.size(); ++i)
        s_hat[i] = h.at(h.nx > 1 ? x_seq[i] : 0, u_seq[i], y_seq[i]);
    return s_hat;
}

}  // namespace avckit
