#ifndef AVCKIT_TRIALS_HPP
#define AVCKIT_TRIALS_HPP

#include <string>

#include "avckit/coding.hpp"

namespace avckit {

struct JammerStrategy {
    enum class Kind { constant, iid, periodic, symmetrizing, message_aware_exhaustive } kind =
        Kind::constant;
    enum class Target { fake_x, fake_s, fake_u } target = Target::fake_s;

    std::string name;
    int constant_j = 0;
    Dist q_j;       // iid
    Seq pattern;    // periodic
    Kernel t_kern;  // symmetrizing kernel, rows = target alphabet
    uint64_t enumeration_budget = 1 << 20;

    static JammerStrategy constant(int j, std::string name = "");
    static JammerStrategy iid(Dist q, std::string name = "");
    static JammerStrategy periodic(Seq pattern, std::string name = "");
    static JammerStrategy symmetrizing(Kernel t, Target target, std::string name = "");
    static JammerStrategy message_aware(uint64_t budget = 1 << 20, std::string name = "");
};

struct TrialStats {
    std::string jammer;
    int n = 0;
    int trials = 0;
    double avg_error = 0.0;             // wrong or missing message decode
    double max_error_over_messages = 0.0;
    double empirical_distortion = 0.0;  // per-symbol average on the estimated block
    int covering_failures = 0;
    int decoder_ambiguities = 0;
    int decoder_no_candidate = 0;
    int bad_codeword_errors = 0;
    int guard_trips = 0;
};

struct SimSetup {
    StateChannel ch;
    CodeMode mode = CodeMode::strictly_causal;
    RatePlan plan;
    // strictly causal kernels
    Dist q_x;
    Kernel q_u_given_xs;
    // noncausal kernels
    Kernel q_u_given_s;
    Kernel q_x_given_us;
    Estimator h;
    TypicalityParams params;
    bool auto_eta = false;  // recompute eta per n from TypicalityParams::defaults
    DecodeBudget budget;
};

// Full pipeline per trial: draw states, encode, jam, transmit, decode,
// estimate.  Deterministic for a fixed seed regardless of parallelism: every
// trial derives its own stream from (seed, jammer, n, trial).
std::vector<TrialStats> run_trials(const SimSetup& setup, const std::vector<JammerStrategy>& jammers,
                                   const std::vector<int>& n_list, int trials, uint64_t seed);

std::string trial_stats_csv(const std::vector<TrialStats>& stats);

}  // namespace avckit

#endif
