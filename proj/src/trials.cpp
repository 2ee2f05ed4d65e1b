#include "avckit/trials.hpp"

#include <cmath>
#include <sstream>

#include "avckit/parallel.hpp"

namespace avckit {

JammerStrategy JammerStrategy::constant(int j, std::string name) {
    JammerStrategy s;
    s.kind = Kind::constant;
    s.constant_j = j;
    s.name = name.empty() ? "constant-" + std::to_string(j) : std::move(name);
    return s;
}

JammerStrategy JammerStrategy::iid(Dist q, std::string name) {
    JammerStrategy s;
    s.kind = Kind::iid;
    s.q_j = std::move(q);
    s.name = name.empty() ? "iid" : std::move(name);
    return s;
}

JammerStrategy JammerStrategy::periodic(Seq pattern, std::string name) {
    JammerStrategy s;
    s.kind = Kind::periodic;
    s.pattern = std::move(pattern);
    s.name = name.empty() ? "periodic" : std::move(name);
    return s;
}

JammerStrategy JammerStrategy::symmetrizing(Kernel t, Target target, std::string name) {
    JammerStrategy s;
    s.kind = Kind::symmetrizing;
    s.t_kern = std::move(t);
    s.target = target;
    s.name = name.empty() ? "symmetrizing" : std::move(name);
    return s;
}

JammerStrategy JammerStrategy::message_aware(uint64_t budget, std::string name) {
    JammerStrategy s;
    s.kind = Kind::message_aware_exhaustive;
    s.enumeration_budget = budget;
    s.name = name.empty() ? "message-aware" : std::move(name);
    return s;
}

namespace {

struct TrialRecord {
    bool message_error = false;
    int message = 0;
    double distortion = 0.0;
    bool covering_failure = false;
    bool ambiguous = false;
    bool no_candidate = false;
    bool bad_codeword = false;
    bool guard = false;
};

Seq draw_states(const StateChannel& ch, int n, Rng& rng) {
    Seq s(n);
    for (int i = 0; i < n; ++i) s[i] = rng.sample(ch.q_s);
    return s;
}

Seq channel_pass(const StateChannel& ch, const Seq& x, const Seq& s, const Seq& j, Rng& rng) {
    Seq y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        Dist row(ch.ny);
        for (int yy = 0; yy < ch.ny; ++yy) row[yy] = ch.wp(x[i], s[i], j[i], yy);
        y[i] = rng.sample(row);
    }
    return y;
}

// Jamming sequence for the non-adaptive strategies.
Seq draw_jamming(const JammerStrategy& jam, const StateChannel& ch, const Codebook& cb, int n,
                 int m_cur, int l_cur, Rng& rng) {
    Seq j(n, 0);
    switch (jam.kind) {
        case JammerStrategy::Kind::constant:
            std::fill(j.begin(), j.end(), jam.constant_j);
            break;
        case JammerStrategy::Kind::iid:
            for (int i = 0; i < n; ++i) j[i] = rng.sample(jam.q_j);
            break;
        case JammerStrategy::Kind::periodic:
            for (int i = 0; i < n; ++i) j[i] = jam.pattern[i % jam.pattern.size()];
            break;
        case JammerStrategy::Kind::symmetrizing: {
            Seq z(n, 0);
            if (jam.target == JammerStrategy::Target::fake_s) {
                z = draw_states(ch, n, rng);
            } else if (jam.target == JammerStrategy::Target::fake_x) {
                if (cb.mode == CodeMode::strictly_causal) {
                    int pairs = cb.m_count * cb.l_count;
                    int pick = static_cast<int>(rng.next_below(static_cast<uint32_t>(pairs)));
                    if (pairs > 1 && pick == m_cur * cb.l_count + l_cur) pick = (pick + 1) % pairs;
                    z = cb.x_words[pick];
                } else {
                    z = cb.nc_words[rng.next_below(static_cast<uint32_t>(cb.nc_count))];
                }
            } else {  // fake_u
                if (cb.mode == CodeMode::strictly_causal) {
                    int base = (m_cur * cb.l_count + l_cur) * cb.nu_count;
                    z = cb.u_words[base + rng.next_below(static_cast<uint32_t>(cb.nu_count))];
                } else {
                    z = cb.nc_words[rng.next_below(static_cast<uint32_t>(cb.nc_count))];
                }
            }
            for (int i = 0; i < n; ++i) j[i] = rng.sample(jam.t_kern.row(z[i]));
            break;
        }
        case JammerStrategy::Kind::message_aware_exhaustive:
            break;  // handled by the caller
    }
    return j;
}

uint64_t ipow(uint64_t b, int e) {
    uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

std::vector<TrialStats> run_trials(const SimSetup& setup, const std::vector<JammerStrategy>& jammers,
                                   const std::vector<int>& n_list, int trials, uint64_t seed) {
    std::vector<TrialStats> all;
    const StateChannel& ch = setup.ch;

    for (int n : n_list) {
        // One sampled code per blocklength, shared by all jammers.
        Codebook cb = setup.mode == CodeMode::strictly_causal
                          ? build_codebook_sc(ch, setup.q_x, setup.q_u_given_xs, setup.plan, n,
                                              seed ^ 0xc0debull)
                          : build_codebook_nc(ch, setup.q_u_given_s, setup.plan, n, seed ^ 0xc0debull);
        PsiContextSc ctx_sc;
        PsiContextNc ctx_nc;
        if (setup.mode == CodeMode::strictly_causal)
            ctx_sc = PsiContextSc::make(ch, setup.q_x, setup.q_u_given_xs);
        else
            ctx_nc = PsiContextNc::make(ch, setup.q_u_given_s, setup.q_x_given_us);

        TypicalityParams params = setup.params;
        if (setup.auto_eta) {
            int cells = setup.mode == CodeMode::strictly_causal ? ch.nx * cb.nu_alpha * ch.ns
                                                                : cb.nu_alpha * ch.ns;
            params = TypicalityParams::defaults(n, cells, setup.params.tau);
        }

        for (std::size_t jx = 0; jx < jammers.size(); ++jx) {
            const JammerStrategy& jam = jammers[jx];
            std::vector<TrialRecord> recs(trials);

            par_for(static_cast<std::size_t>(trials), [&](std::size_t trial) {
                Rng rng = Rng::stream(seed, jx + 1, static_cast<uint64_t>(n), trial);
                TrialRecord rec;
                try {
                    if (setup.mode == CodeMode::strictly_causal) {
                        const int m = static_cast<int>(trial) % cb.m_count;
                        rec.message = m;
                        const int m1 = m, l1 = 0;
                        Seq s1 = draw_states(ch, n, rng);
                        EncodeResult enc = encode_sc(cb, ctx_sc, m1, l1, s1, params, rng);
                        rec.covering_failure = enc.covering_failure;
                        const int m2 = m, l2 = enc.l_next;
                        Seq s2 = draw_states(ch, n, rng);

                        auto transmit_block = [&](int bm, int bl, const Seq& bs) {
                            const Seq& xw = cb.x_word(bm, bl);
                            if (jam.kind == JammerStrategy::Kind::message_aware_exhaustive) {
                                uint64_t total = ipow(ch.nj, n);
                                if (total > jam.enumeration_budget) {
                                    rec.guard = true;
                                    Seq j(n, 0);
                                    return channel_pass(ch, xw, bs, j, rng);
                                }
                                Seq best_y;
                                bool best_err = false;
                                for (uint64_t jr = 0; jr < total; ++jr) {
                                    Seq j(n);
                                    uint64_t rem = jr;
                                    for (int i = n - 1; i >= 0; --i) {
                                        j[i] = static_cast<int>(rem % ch.nj);
                                        rem /= ch.nj;
                                    }
                                    Seq y = channel_pass(ch, xw, bs, j, rng);
                                    MessageDecode d = decode_message_sc(cb, ctx_sc, y, params,
                                                                        setup.budget);
                                    bool err = d.status != DecodeStatus::ok || d.m != bm || d.l != bl;
                                    if (best_y.empty() || (err && !best_err)) {
                                        best_y = y;
                                        best_err = err;
                                    }
                                    if (best_err) break;
                                }
                                return best_y;
                            }
                            Seq j = draw_jamming(jam, ch, cb, n, bm, bl, rng);
                            return channel_pass(ch, xw, bs, j, rng);
                        };

                        Seq y1 = transmit_block(m1, l1, s1);
                        Seq y2 = transmit_block(m2, l2, s2);

                        MessageDecode d1 = decode_message_sc(cb, ctx_sc, y1, params, setup.budget);
                        MessageDecode d2 = decode_message_sc(cb, ctx_sc, y2, params, setup.budget);
                        rec.ambiguous = d1.status == DecodeStatus::ambiguous ||
                                        d2.status == DecodeStatus::ambiguous;
                        rec.no_candidate = d1.status == DecodeStatus::no_candidate ||
                                           d2.status == DecodeStatus::no_candidate;
                        rec.message_error = d1.status != DecodeStatus::ok || d1.m != m1 ||
                                            d1.l != l1 || d2.status != DecodeStatus::ok ||
                                            d2.m != m2 || d2.l != l2;

                        const int dm1 = d1.status == DecodeStatus::ok ? d1.m : 0;
                        const int dl1 = d1.status == DecodeStatus::ok ? d1.l : 0;
                        const int dl2 = d2.status == DecodeStatus::ok ? d2.l : 0;
                        UDecode du = decode_u_sc(cb, ctx_sc, dm1, dl1, dl2, y1, params, setup.budget);
                        rec.ambiguous = rec.ambiguous || du.status == DecodeStatus::ambiguous;
                        int u_idx = du.status == DecodeStatus::ok ? du.u_index : 0;
                        if (du.status != DecodeStatus::ok) {
                            const auto& bin =
                                cb.bins[static_cast<std::size_t>(dm1) * cb.l_count + dl1][dl2];
                            if (!bin.empty()) u_idx = bin[0];
                        }
                        Seq s_hat = estimate_state(cb.x_word(dm1, dl1),
                                                   cb.u_word(dm1, dl1, u_idx), y1, setup.h);
                        double dist = 0.0;
                        for (int i = 0; i < n; ++i) dist += ch.d(s1[i], s_hat[i]);
                        rec.distortion = dist / n;
                    } else {
                        const int m = static_cast<int>(trial) % cb.msg_count;
                        rec.message = m;
                        Seq s = draw_states(ch, n, rng);
                        EncodeResult enc = encode_nc(cb, ctx_nc, m, s, params, rng);
                        rec.covering_failure = enc.covering_failure;
                        rec.bad_codeword = enc.bad_codeword;

                        Seq y;
                        if (jam.kind == JammerStrategy::Kind::message_aware_exhaustive) {
                            uint64_t total = ipow(ch.nj, n);
                            if (total > jam.enumeration_budget) {
                                rec.guard = true;
                                Seq j(n, 0);
                                y = channel_pass(ch, enc.x_seq, s, j, rng);
                            } else {
                                bool best_err = false;
                                for (uint64_t jr = 0; jr < total; ++jr) {
                                    Seq j(n);
                                    uint64_t rem = jr;
                                    for (int i = n - 1; i >= 0; --i) {
                                        j[i] = static_cast<int>(rem % ch.nj);
                                        rem /= ch.nj;
                                    }
                                    Seq cand = channel_pass(ch, enc.x_seq, s, j, rng);
                                    MessageDecode d = decode_nc(cb, ctx_nc, cand, params, setup.budget);
                                    bool err = d.status != DecodeStatus::ok || d.m != m;
                                    if (y.empty() || (err && !best_err)) {
                                        y = cand;
                                        best_err = err;
                                    }
                                    if (best_err) break;
                                }
                            }
                        } else {
                            Seq j = draw_jamming(jam, ch, cb, n, m, 0, rng);
                            y = channel_pass(ch, enc.x_seq, s, j, rng);
                        }

                        MessageDecode d = decode_nc(cb, ctx_nc, y, params, setup.budget);
                        rec.ambiguous = d.status == DecodeStatus::ambiguous;
                        rec.no_candidate = d.status == DecodeStatus::no_candidate;
                        rec.message_error = d.status != DecodeStatus::ok || d.m != m;
                        int u_idx = d.status == DecodeStatus::ok ? d.l : enc.u_index;
                        Seq s_hat = estimate_state(y, cb.nc_words[u_idx], y, setup.h);
                        double dist = 0.0;
                        for (int i = 0; i < n; ++i) dist += ch.d(s[i], s_hat[i]);
                        rec.distortion = dist / n;
                    }
                } catch (const ExplosionGuard&) {
                    rec.guard = true;
                    rec.message_error = true;
                }
                recs[trial] = rec;
            });

            TrialStats st;
            st.jammer = jam.name;
            st.n = n;
            st.trials = trials;
            int msg_count = setup.mode == CodeMode::strictly_causal ? cb.m_count : cb.msg_count;
            std::vector<int> per_msg_err(msg_count, 0), per_msg_tot(msg_count, 0);
            for (const TrialRecord& rec : recs) {
                st.avg_error += rec.message_error ? 1.0 : 0.0;
                st.empirical_distortion += rec.distortion;
                st.covering_failures += rec.covering_failure ? 1 : 0;
                st.decoder_ambiguities += rec.ambiguous ? 1 : 0;
                st.decoder_no_candidate += rec.no_candidate ? 1 : 0;
                st.bad_codeword_errors += rec.bad_codeword ? 1 : 0;
                st.guard_trips += rec.guard ? 1 : 0;
                per_msg_tot[rec.message] += 1;
                per_msg_err[rec.message] += rec.message_error ? 1 : 0;
            }
            st.avg_error /= trials;
            st.empirical_distortion /= trials;
            for (int m = 0; m < msg_count; ++m)
                if (per_msg_tot[m] > 0)
                    st.max_error_over_messages = std::max(
                        st.max_error_over_messages,
                        static_cast<double>(per_msg_err[m]) / per_msg_tot[m]);
            all.push_back(std::move(st));
        }
    }
    return all;
}

std::string trial_stats_csv(const std::vector<TrialStats>& stats) {
    std::ostringstream os;
    os << "jammer,n,trials,avg_error,max_error,distortion,covering_failures,ambiguities,"
          "bad_codeword_errors\n";
    for (const TrialStats& s : stats) {
        os << s.jammer << ',' << s.n << ',' << s.trials << ',' << s.avg_error << ','
           << s.max_error_over_messages << ',' << s.empirical_distortion << ','
           << s.covering_failures << ',' << s.decoder_ambiguities << ',' << s.bad_codeword_errors
           << '\n';
    }
    return os.str();
}

}  // namespace avckit
