#include "avckit/codebook.hpp"

#include <algorithm>
#include <cmath>

#include "avckit/parallel.hpp"

namespace avckit {

std::vector<int> round_to_type(const Dist& p, int n) {
    const int k = static_cast<int>(p.size());
    std::vector<int> counts(k, 0);
    std::vector<std::pair<double, int>> rem(k);
    int assigned = 0;
    for (int i = 0; i < k; ++i) {
        double exact = p[i] * n;
        counts[i] = static_cast<int>(std::floor(exact));
        assigned += counts[i];
        rem[i] = {exact - counts[i], i};
    }
    std::sort(rem.begin(), rem.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    for (int r = 0; r < n - assigned; ++r) counts[rem[r].second] += 1;
    return counts;
}

namespace {

Seq canonical_from_counts(const std::vector<int>& counts) {
    Seq s;
    for (std::size_t sym = 0; sym < counts.size(); ++sym)
        s.insert(s.end(), counts[sym], static_cast<int>(sym));
    return s;
}

double l1_gap(const Dist& p, const std::vector<int>& counts, int n) {
    double g = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        g += std::fabs(p[i] - static_cast<double>(counts[i]) / n);
    return g;
}

}  // namespace

std::vector<Seq> sample_type_class(const Dist& type, int n, int count, uint64_t seed) {
    std::vector<int> counts(type.size());
    int total = 0;
    for (std::size_t i = 0; i < type.size(); ++i) {
        double exact = type[i] * n;
        counts[i] = static_cast<int>(std::llround(exact));
        if (std::fabs(exact - counts[i]) > 1e-9)
            throw NonIntegralType("sample_type_class: n*type not integral");
        total += counts[i];
    }
    if (total != n) throw NonIntegralType("sample_type_class: counts do not sum to n");
    Seq canon = canonical_from_counts(counts);
    Rng rng = Rng::stream(seed, 0x7c1a55);
    std::vector<Seq> out(count, canon);
    for (auto& s : out) rng.shuffle(s);
    return out;
}

std::vector<Seq> sample_conditional_type_class(const std::vector<std::vector<int>>& cond_counts,
                                               const Seq& x_seq, int count, uint64_t seed) {
    const int n = static_cast<int>(x_seq.size());
    const int nx = static_cast<int>(cond_counts.size());
    std::vector<std::vector<int>> positions(nx);
    for (int i = 0; i < n; ++i) {
        if (x_seq[i] < 0 || x_seq[i] >= nx) throw SymbolOutOfRange("conditional type: x symbol");
        positions[x_seq[i]].push_back(i);
    }
    std::vector<Seq> cells(nx);
    for (int a = 0; a < nx; ++a) {
        int cell_total = 0;
        for (int c : cond_counts[a]) cell_total += c;
        if (cell_total != static_cast<int>(positions[a].size()))
            throw NonIntegralCell("conditional type: cell counts do not match x composition");
        cells[a] = canonical_from_counts(cond_counts[a]);
    }
    Rng rng = Rng::stream(seed, 0xc0417);
    std::vector<Seq> out;
    out.reserve(count);
    for (int c = 0; c < count; ++c) {
        Seq u(n, 0);
        for (int a = 0; a < nx; ++a) {
            Seq cell = cells[a];
            rng.shuffle(cell);
            for (std::size_t k = 0; k < positions[a].size(); ++k) u[positions[a][k]] = cell[k];
        }
        out.push_back(std::move(u));
    }
    return out;
}

CodebookSizes plan_sizes(const RatePlan& plan, int n, PlanMode mode) {
    auto size_of = [&](double rate) {
        double v = std::exp2(rate * n);
        if (v > 1e9) throw SizeOverflow("plan_sizes: codebook size over 1e9");
        return std::max(1, static_cast<int>(std::llround(v)));
    };
    CodebookSizes s;
    if (mode == PlanMode::strictly_causal) {
        s.m_count = size_of(plan.r);
        s.l_count = size_of(plan.r_s);
        s.nu_count = size_of(plan.r_s_tilde);
    } else {
        s.nc_count = size_of(plan.r_s_tilde);
        s.msg_count = size_of(plan.r);
    }
    return s;
}

double empirical_mi(const Seq& a, const Seq& b, int na, int nb) {
    JointType t = joint_type({a, b}, {na, nb});
    return mutual_information(t.distribution(), {0}, {1});
}

Codebook build_codebook_sc(const StateChannel& ch, const Dist& q_x, const Kernel& q_u_given_xs,
                           const RatePlan& plan, int n, uint64_t seed, uint64_t symbol_budget) {
    CodebookSizes sz = plan_sizes(plan, n, PlanMode::strictly_causal);
    const int nu = q_u_given_xs.cols;
    uint64_t symbols = static_cast<uint64_t>(sz.m_count) * sz.l_count * (1 + sz.nu_count) * n;
    if (symbols > symbol_budget) throw SizeOverflow("build_codebook: over symbol budget");

    Codebook cb;
    cb.mode = CodeMode::strictly_causal;
    cb.n = n;
    cb.nx_alpha = ch.nx;
    cb.nu_alpha = nu;
    cb.m_count = sz.m_count;
    cb.l_count = sz.l_count;
    cb.nu_count = sz.nu_count;

    cb.x_type = round_to_type(q_x, n);
    cb.type_rounding_gap = l1_gap(q_x, cb.x_type, n);

    // Q_{U|X}(u|x) = sum_s Q_S(s) Q_{U|XS}(u|x,s), rounded per x-cell.
    cb.u_cond_type.resize(ch.nx);
    for (int x = 0; x < ch.nx; ++x) {
        Dist qu(nu, 0.0);
        for (int s = 0; s < ch.ns; ++s)
            for (int u = 0; u < nu; ++u) qu[u] += ch.q_s[s] * q_u_given_xs.at(x * ch.ns + s, u);
        cb.u_cond_type[x] = round_to_type(qu, cb.x_type[x]);
        if (cb.x_type[x] > 0)
            cb.type_rounding_gap += l1_gap(qu, cb.u_cond_type[x], cb.x_type[x]);
    }

    Seq canon = canonical_from_counts(cb.x_type);
    Rng rng = Rng::stream(seed, 0x5eedc0de, static_cast<uint64_t>(n));
    const int pairs = cb.m_count * cb.l_count;
    cb.x_words.resize(pairs);
    for (int p = 0; p < pairs; ++p) {
        cb.x_words[p] = canon;
        rng.shuffle(cb.x_words[p]);
    }

    cb.u_words.resize(static_cast<std::size_t>(pairs) * cb.nu_count);
    cb.u_bin.resize(cb.u_words.size());
    cb.bins.assign(pairs, std::vector<std::vector<int>>(cb.l_count));
    for (int p = 0; p < pairs; ++p) {
        const Seq& xw = cb.x_words[p];
        std::vector<std::vector<int>> positions(ch.nx);
        for (int i = 0; i < n; ++i) positions[xw[i]].push_back(i);
        for (int i = 0; i < cb.nu_count; ++i) {
            Seq u(n, 0);
            for (int a = 0; a < ch.nx; ++a) {
                Seq cell = canonical_from_counts(cb.u_cond_type[a]);
                rng.shuffle(cell);
                for (std::size_t k = 0; k < positions[a].size(); ++k) u[positions[a][k]] = cell[k];
            }
            std::size_t idx = static_cast<std::size_t>(p) * cb.nu_count + i;
            cb.u_words[idx] = std::move(u);
            int b = static_cast<int>(rng.next_below(static_cast<uint32_t>(cb.l_count)));
            cb.u_bin[idx] = b;
            cb.bins[p][b].push_back(i);
        }
    }
    // The strictly causal scheme has no goodness filter.
    cb.good.assign(cb.u_words.size(), 1);
    return cb;
}

Codebook build_codebook_nc(const StateChannel& ch, const Kernel& q_u_given_s, const RatePlan& plan,
                           int n, uint64_t seed, uint64_t symbol_budget) {
    CodebookSizes sz = plan_sizes(plan, n, PlanMode::noncausal);
    const int nu = q_u_given_s.cols;
    if (static_cast<uint64_t>(sz.nc_count) * n > symbol_budget)
        throw SizeOverflow("build_codebook: over symbol budget");

    Codebook cb;
    cb.mode = CodeMode::noncausal;
    cb.n = n;
    cb.nx_alpha = ch.nx;
    cb.nu_alpha = nu;
    cb.nc_count = sz.nc_count;
    cb.msg_count = sz.msg_count;
    cb.good_threshold = plan.r_s_tilde;

    Dist q_u(nu, 0.0);
    for (int s = 0; s < ch.ns; ++s)
        for (int u = 0; u < nu; ++u) q_u[u] += ch.q_s[s] * q_u_given_s.at(s, u);
    cb.u_type = round_to_type(q_u, n);
    cb.type_rounding_gap = l1_gap(q_u, cb.u_type, n);

    Seq canon = canonical_from_counts(cb.u_type);
    Rng rng = Rng::stream(seed, 0x5eedc0df, static_cast<uint64_t>(n));
    cb.nc_words.resize(cb.nc_count);
    cb.nc_bin.resize(cb.nc_count);
    cb.nc_bins.assign(cb.msg_count, {});
    for (int i = 0; i < cb.nc_count; ++i) {
        cb.nc_words[i] = canon;
        rng.shuffle(cb.nc_words[i]);
        int m = static_cast<int>(rng.next_below(static_cast<uint32_t>(cb.msg_count)));
        cb.nc_bin[i] = m;
        cb.nc_bins[m].push_back(i);
    }

    // good codeword: empirical MI with every other codeword stays below R-tilde
    cb.good.assign(cb.nc_count, 1);
    std::vector<uint8_t> bad(cb.nc_count, 0);
    par_for(static_cast<std::size_t>(cb.nc_count), [&](std::size_t i) {
        for (int j = 0; j < cb.nc_count; ++j) {
            if (static_cast<int>(i) == j) continue;
            if (empirical_mi(cb.nc_words[i], cb.nc_words[j], nu, nu) >= cb.good_threshold) {
                bad[i] = 1;
                break;
            }
        }
    });
    for (int i = 0; i < cb.nc_count; ++i) cb.good[i] = bad[i] ? 0 : 1;
    return cb;
}

AuditReport audit_codebook(const Codebook& cb, double delta, int nj, uint64_t seed) {
    AuditReport rep;
    if (cb.mode == CodeMode::noncausal) {
        rep.num_codewords = cb.nc_count;
        int good = 0;
        for (uint8_t g : cb.good) good += g;
        rep.good_fraction = cb.nc_count > 0 ? static_cast<double>(good) / cb.nc_count : 1.0;

        // Shell occupancy against the 2^{n(|R~-I|^+ + delta)} budget for a few
        // jamming sequences: constant ones plus random draws.
        std::vector<Seq> jseqs;
        for (int j = 0; j < nj; ++j) jseqs.emplace_back(cb.n, j);
        Rng rng = Rng::stream(seed, 0xa0d17);
        for (int r = 0; r < 4; ++r) {
            Seq js(cb.n);
            for (int i = 0; i < cb.n; ++i) js[i] = static_cast<int>(rng.next_below(nj));
            jseqs.push_back(std::move(js));
        }
        for (const Seq& js : jseqs) {
            // group codewords by joint type with j^n (the V-shells)
            std::vector<std::pair<std::vector<int64_t>, int>> shells;
            std::vector<double> shell_mi;
            for (int i = 0; i < cb.nc_count; ++i) {
                JointType t = joint_type({js, cb.nc_words[i]}, {nj, cb.nu_alpha});
                bool found = false;
                for (std::size_t sh = 0; sh < shells.size(); ++sh)
                    if (shells[sh].first == t.counts) {
                        shells[sh].second += 1;
                        found = true;
                        break;
                    }
                if (!found) {
                    shells.emplace_back(t.counts, 1);
                    shell_mi.push_back(mutual_information(t.distribution(), {0}, {1}));
                }
            }
            for (std::size_t sh = 0; sh < shells.size(); ++sh) {
                double rtilde = std::log2(static_cast<double>(cb.nc_count)) / cb.n;
                double budget = std::exp2(cb.n * (std::max(0.0, rtilde - shell_mi[sh]) + delta));
                rep.max_shell_ratio = std::max(rep.max_shell_ratio, shells[sh].second / budget);
            }
        }

        double mean = 0.0;
        for (const auto& b : cb.nc_bins) mean += static_cast<double>(b.size());
        mean /= cb.msg_count;
        rep.bin_mean = mean;
        rep.bin_min = 1e300;
        rep.bin_max = 0.0;
        double var = 0.0;
        for (const auto& b : cb.nc_bins) {
            double s = static_cast<double>(b.size());
            rep.bin_min = std::min(rep.bin_min, s);
            rep.bin_max = std::max(rep.bin_max, s);
            var += (s - mean) * (s - mean);
        }
        rep.bin_stddev = std::sqrt(var / cb.msg_count);
        return rep;
    }

    // strictly causal: all codewords good by construction; report bin spread.
    rep.num_codewords = static_cast<int>(cb.u_words.size());
    rep.good_fraction = 1.0;
    double mean = 0.0;
    int cnt = 0;
    rep.bin_min = 1e300;
    for (const auto& per_pair : cb.bins)
        for (const auto& b : per_pair) {
            double s = static_cast<double>(b.size());
            mean += s;
            cnt += 1;
            rep.bin_min = std::min(rep.bin_min, s);
            rep.bin_max = std::max(rep.bin_max, s);
        }
    mean = cnt > 0 ? mean / cnt : 0.0;
    rep.bin_mean = mean;
    double var = 0.0;
    for (const auto& per_pair : cb.bins)
        for (const auto& b : per_pair) var += (b.size() - mean) * (b.size() - mean);
    rep.bin_stddev = cnt > 0 ? std::sqrt(var / cnt) : 0.0;
    (void)delta;
    return rep;
}

}  // namespace avckit
