#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "avckit/builtin_channels.hpp"
#include "avckit/coding.hpp"
#include "avckit/trials.hpp"
#include "test_oracles.hpp"

using namespace avckit;

namespace {

// strong two-state channel with a single jamming letter: s=0 -> BSC(0.02),
// s=1 -> BSC(0.08)
StateChannel strong_state_channel() {
    StateChannel ch;
    ch.nx = 2;
    ch.ns = 2;
    ch.nj = 1;
    ch.ny = 2;
    ch.ns_hat = 2;
    ch.q_s = {0.5, 0.5};
    ch.distortion = hamming_distortion(2, 2);
    ch.w.assign(8, 0.0);
    auto bsc = [&](int s, double p) {
        ch.wp(0, s, 0, 0) = 1 - p;
        ch.wp(0, s, 0, 1) = p;
        ch.wp(1, s, 0, 0) = p;
        ch.wp(1, s, 0, 1) = 1 - p;
    };
    bsc(0, 0.02);
    bsc(1, 0.08);
    return validate_channel(ch);
}

// noisy state description: keeps U = S three times out of four
Kernel soft_state_kernel(const StateChannel& ch, double flip) {
    Kernel k(ch.nx * ch.ns, ch.ns, 0.0);
    for (int x = 0; x < ch.nx; ++x)
        for (int s = 0; s < ch.ns; ++s)
            for (int u = 0; u < ch.ns; ++u)
                k.at(x * ch.ns + s, u) = u == s ? 1.0 - flip : flip / (ch.ns - 1);
    return k;
}

// shifted-BSC channel for noncausal runs: |S| = 1, j=0 -> BSC(0.05), j=1 -> BSC(0.15)
StateChannel shifted_bsc_channel() {
    StateChannel ch;
    ch.nx = 2;
    ch.ns = 1;
    ch.nj = 2;
    ch.ny = 2;
    ch.ns_hat = 1;
    ch.q_s = {1.0};
    ch.distortion = {0.0};
    ch.w.assign(8, 0.0);
    auto bsc = [&](int j, double p) {
        ch.wp(0, 0, j, 0) = 1 - p;
        ch.wp(0, 0, j, 1) = p;
        ch.wp(1, 0, j, 0) = p;
        ch.wp(1, 0, j, 1) = 1 - p;
    };
    bsc(0, 0.05);
    bsc(1, 0.15);
    return validate_channel(ch);
}

Kernel shifted_bsc_u_kernel() {
    Kernel us(1, 2);
    us.at(0, 0) = 2.0 / 3.0;
    us.at(0, 1) = 1.0 / 3.0;
    return us;
}

Kernel shifted_bsc_x_kernel() {
    Kernel xus(2, 2, 0.0);  // X = U
    xus.at(0, 0) = 1.0;
    xus.at(1, 1) = 1.0;
    return xus;
}

RatePlan manual_plan(double r, double r_s, double r_s_tilde) {
    RatePlan p;
    p.r = r;
    p.r_s = r_s;
    p.r_s_tilde = r_s_tilde;
    p.r_s_prime = r_s_tilde - r_s;
    p.tau = 0.05;
    return p;
}

}  // namespace

TEST_CASE("sample_type_class produces exact compositions") {
    auto seqs = sample_type_class({0.5, 0.5}, 4, 20, 1);
    for (const Seq& s : seqs) {
        CHECK(std::count(s.begin(), s.end(), 0) == 2);
        CHECK(std::count(s.begin(), s.end(), 1) == 2);
    }
    auto det = sample_type_class({1.0, 0.0}, 6, 3, 2);
    for (const Seq& s : det) CHECK(s == Seq(6, 0));

    CHECK_THROWS_AS(sample_type_class({0.3, 0.7}, 4, 1, 3), NonIntegralType);
}

TEST_CASE("sample_type_class marginals match the type statistically") {
    // 10^4 draws of a length-8 type (6,2): position-wise symbol frequency
    // must sit inside the 3-sigma binomial band around 0.25
    const int draws = 10000;
    auto seqs = sample_type_class({0.75, 0.25}, 8, draws, 7);
    for (int pos = 0; pos < 8; ++pos) {
        int ones = 0;
        for (const Seq& s : seqs) ones += s[pos];
        double phat = static_cast<double>(ones) / draws;
        double sigma = std::sqrt(0.25 * 0.75 / draws);
        CHECK(std::fabs(phat - 0.25) <= 3.5 * sigma);
    }
}

TEST_CASE("sample_conditional_type_class respects the cells exactly") {
    Seq x = {0, 1, 0, 1, 1, 0};
    // identity kernel: u copies x
    std::vector<std::vector<int>> ident = {{3, 0}, {0, 3}};
    auto copies = sample_conditional_type_class(ident, x, 5, 4);
    for (const Seq& u : copies) CHECK(u == x);

    // constant x reduces to plain type sampling
    Seq xc(6, 0);
    std::vector<std::vector<int>> counts = {{4, 2}, {0, 0}};
    auto seqs = sample_conditional_type_class(counts, xc, 10, 5);
    for (const Seq& u : seqs) CHECK(std::count(u.begin(), u.end(), 1) == 2);

    // every draw hits the prescribed joint type exactly
    std::vector<std::vector<int>> cells = {{2, 1}, {1, 2}};
    auto draws = sample_conditional_type_class(cells, x, 20, 6);
    for (const Seq& u : draws) {
        JointType t = joint_type({x, u}, {2, 2});
        CHECK(t.at({0, 0}) == 2);
        CHECK(t.at({0, 1}) == 1);
        CHECK(t.at({1, 0}) == 1);
        CHECK(t.at({1, 1}) == 2);
    }

    std::vector<std::vector<int>> bad = {{2, 2}, {1, 2}};
    CHECK_THROWS_AS(sample_conditional_type_class(bad, x, 1, 7), NonIntegralCell);
}

TEST_CASE("strictly causal codebook: constant composition holds exactly") {
    StateChannel ch = strong_state_channel();
    Kernel k = soft_state_kernel(ch, 0.25);
    RatePlan plan = manual_plan(0.125, 0.25, 0.375);
    Codebook cb = build_codebook_sc(ch, {0.5, 0.5}, k, plan, 8, 42);
    CHECK(cb.m_count == 2);
    CHECK(cb.l_count == 4);
    CHECK(cb.nu_count == 8);
    for (int m = 0; m < cb.m_count; ++m)
        for (int l = 0; l < cb.l_count; ++l) {
            const Seq& xw = cb.x_word(m, l);
            for (int a = 0; a < 2; ++a)
                CHECK(std::count(xw.begin(), xw.end(), a) == cb.x_type[a]);
            for (int i = 0; i < cb.nu_count; ++i) {
                JointType t = joint_type({xw, cb.u_word(m, l, i)}, {2, 2});
                for (int a = 0; a < 2; ++a)
                    for (int u = 0; u < 2; ++u) CHECK(t.at({a, u}) == cb.u_cond_type[a][u]);
            }
        }
    // bins cover [0, L) and partition the subcodebook
    for (int m = 0; m < cb.m_count; ++m)
        for (int l = 0; l < cb.l_count; ++l) {
            int total = 0;
            for (int b = 0; b < cb.l_count; ++b)
                total += static_cast<int>(cb.bins[m * cb.l_count + l][b].size());
            CHECK(total == cb.nu_count);
        }
}

TEST_CASE("noncausal codebook goodness marking") {
    StateChannel ch = shifted_bsc_channel();
    Kernel us(1, 2);
    us.at(0, 0) = 0.5;
    us.at(0, 1) = 0.5;
    RatePlan plan = manual_plan(0.25, 0.25, 0.5);  // 2^{n R~} = 16 at n = 8
    Codebook cb = build_codebook_nc(ch, us, plan, 8, 3);
    CHECK(cb.nc_count == 16);

    // identical codewords must both be flagged bad
    Codebook dup = cb;
    dup.nc_words[1] = dup.nc_words[0];
    Codebook rebuilt = dup;  // recompute goodness by hand with empirical_mi
    bool bad0 = false;
    for (int j = 1; j < rebuilt.nc_count; ++j)
        if (empirical_mi(rebuilt.nc_words[0], rebuilt.nc_words[j], 2, 2) >= plan.r_s_tilde)
            bad0 = true;
    CHECK(bad0);  // the duplicate forces I = H(type) above the threshold

    // two codewords with a product joint type are good for each other
    Seq a = {0, 0, 0, 0, 1, 1, 1, 1};
    Seq b = {0, 0, 1, 1, 0, 0, 1, 1};
    CHECK(empirical_mi(a, b, 2, 2) == doctest::Approx(0.0));
    CHECK(empirical_mi(a, a, 2, 2) == doctest::Approx(1.0));
}

TEST_CASE("audit: single-codeword and duplicated codebooks") {
    StateChannel ch = shifted_bsc_channel();
    Kernel us(1, 2);
    us.at(0, 0) = 0.5;
    us.at(0, 1) = 0.5;
    RatePlan tiny = manual_plan(0.0, 0.0, 0.0);
    Codebook one = build_codebook_nc(ch, us, tiny, 8, 4);
    CHECK(one.nc_count == 1);
    AuditReport rep = audit_codebook(one, 0.1, ch.nj);
    CHECK(rep.good_fraction == doctest::Approx(1.0));

    RatePlan plan = manual_plan(0.25, 0.25, 0.5);
    Codebook cb = build_codebook_nc(ch, us, plan, 8, 5);
    for (auto& w : cb.nc_words) w = cb.nc_words[0];  // adversarial duplication
    // recompute the flags the way build_codebook_nc does
    for (int i = 0; i < cb.nc_count; ++i) {
        cb.good[i] = 1;
        for (int j = 0; j < cb.nc_count; ++j)
            if (i != j && empirical_mi(cb.nc_words[i], cb.nc_words[j], 2, 2) >= cb.good_threshold)
                cb.good[i] = 0;
    }
    AuditReport rep2 = audit_codebook(cb, 0.1, ch.nj);
    CHECK(rep2.good_fraction == doctest::Approx(0.0));
}

TEST_CASE("audit: aggregate goodness and bin spread over seeds at n = 12") {
    StateChannel ch = shifted_bsc_channel();
    Kernel us = shifted_bsc_u_kernel();
    Kernel xus = shifted_bsc_x_kernel();
    RatePlan plan = rate_plan_nc(ch, us, xus, 0.04);
    double good_sum = 0.0;
    int seeds = 20;
    double bin_mean_sum = 0.0;
    for (int seed = 0; seed < seeds; ++seed) {
        Codebook cb = build_codebook_nc(ch, us, plan, 12, 1000 + seed);
        AuditReport rep = audit_codebook(cb, plan.tau, ch.nj);
        good_sum += rep.good_fraction;
        bin_mean_sum += rep.bin_mean;
    }
    CHECK(good_sum / seeds >= 0.9);
    CHECK(bin_mean_sum / seeds > 0.0);
}

TEST_CASE("psi membership divergences") {
    // uniform-state XOR-like channel for clean reference laws
    StateChannel ch;
    ch.nx = 2;
    ch.ns = 2;
    ch.nj = 1;
    ch.ny = 2;
    ch.ns_hat = 2;
    ch.q_s = {0.5, 0.5};
    ch.distortion = hamming_distortion(2, 2);
    ch.w.assign(8, 0.0);
    for (int x = 0; x < 2; ++x)
        for (int s = 0; s < 2; ++s) ch.wp(x, s, 0, x ^ s) = 1.0;
    ch = validate_channel(ch);
    Kernel us = identity_u_equals_s(ch);
    PsiContextSc ctx = PsiContextSc::make(ch, {0.5, 0.5}, us);

    // a type matching the reference law exactly: divergence 0
    Seq x = {0, 0, 1, 1}, s = {0, 1, 0, 1};
    JointType t2 = joint_type({x, s, s}, {2, 2, 2});
    CHECK(psi_divergence(ctx, PsiSet::psi2, t2) == doctest::Approx(0.0));
    CHECK(psi_member(ctx, PsiSet::psi2, t2, 0.1));

    // support violation: u differing from s under a deterministic kernel
    Seq u_bad = {1, 1, 0, 1};
    JointType t2b = joint_type({x, u_bad, s}, {2, 2, 2});
    CHECK(std::isinf(psi_divergence(ctx, PsiSet::psi2, t2b)));

    // hand-computed perturbation: (x,s) fully correlated costs exactly 1 bit
    Seq sx = {0, 0, 1, 1};
    JointType t2c = joint_type({x, sx, sx}, {2, 2, 2});
    CHECK(psi_divergence(ctx, PsiSet::psi2, t2c) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(psi_divergence(ctx, PsiSet::psi1, t2), ArityMismatch);
}

TEST_CASE("strictly causal encoder covers typical states and flags failures") {
    StateChannel ch = strong_state_channel();
    Kernel us = identity_u_equals_s(ch);  // deterministic description
    RatePlan plan = manual_plan(0.125, 0.125, 0.625);
    Codebook cb = build_codebook_sc(ch, {0.5, 0.5}, us, plan, 8, 11);
    PsiContextSc ctx = PsiContextSc::make(ch, {0.5, 0.5}, us);
    TypicalityParams params{0.4, 0.2, 0.05};

    // hand the encoder a state sequence equal to one of its descriptions:
    // with U = S the matching codeword has divergence 0 and must be selected
    Rng rng(9);
    const Seq& target = cb.u_word(0, 0, 3);
    EncodeResult enc = encode_sc(cb, ctx, 0, 0, target, params, rng);
    CHECK_FALSE(enc.covering_failure);
    CHECK(cb.u_word(0, 0, enc.u_index) == target);

    // a state sequence of a type no codeword can match fails covering
    Seq impossible(8, 1);
    EncodeResult enc2 = encode_sc(cb, ctx, 0, 0, impossible, params, rng);
    CHECK(enc2.covering_failure);
}

TEST_CASE("covering failures decay with blocklength at sufficient description rate") {
    StateChannel ch = strong_state_channel();
    Kernel soft = soft_state_kernel(ch, 0.25);
    PsiContextSc ctx = PsiContextSc::make(ch, {0.5, 0.5}, soft);
    // I(U;S|X) = 1 - h(0.25) ~ 0.19; description rate 0.55 is well above it
    double fail_small = 0.0, fail_large = 0.0;
    for (int n : {6, 14}) {
        RatePlan plan = manual_plan(0.0, 0.0, 0.55);
        Codebook cb = build_codebook_sc(ch, {0.5, 0.5}, soft, plan, n, 21);
        TypicalityParams params{0.45, 0.2, 0.05};
        int fails = 0;
        const int trials = 400;
        for (int t = 0; t < trials; ++t) {
            Rng rng = Rng::stream(31, t, n);
            Seq s(n);
            for (int i = 0; i < n; ++i) s[i] = rng.sample(ch.q_s);
            EncodeResult enc = encode_sc(cb, ctx, 0, 0, s, params, rng);
            fails += enc.covering_failure ? 1 : 0;
        }
        (n == 6 ? fail_small : fail_large) = static_cast<double>(fails) / trials;
    }
    CHECK(fail_large <= fail_small);
}

TEST_CASE("noncausal encoder reports bad-codeword selections") {
    StateChannel ch = shifted_bsc_channel();
    Kernel us(1, 2);
    us.at(0, 0) = 0.5;
    us.at(0, 1) = 0.5;
    RatePlan plan = manual_plan(0.25, 0.25, 0.5);
    Codebook cb = build_codebook_nc(ch, us, plan, 8, 17);
    PsiContextNc ctx = PsiContextNc::make(ch, us, shifted_bsc_x_kernel());
    TypicalityParams params{0.5, 0.25, 0.05};
    // force every codeword bad
    for (auto& g : cb.good) g = 0;
    Rng rng(3);
    Seq s(8, 0);
    EncodeResult enc = encode_nc(cb, ctx, 0, s, params, rng);
    CHECK(enc.bad_codeword);
    CHECK(enc.x_seq == cb.nc_words[enc.u_index]);  // X = U kernel copies the description
}

TEST_CASE("decoder returns the transmitted pair over a noiseless channel") {
    StateChannel ch;  // y = x, single state and jamming letter
    ch.nx = 2;
    ch.ns = 1;
    ch.nj = 1;
    ch.ny = 2;
    ch.ns_hat = 1;
    ch.q_s = {1.0};
    ch.distortion = {0.0};
    ch.w = {1, 0, 0, 1};
    ch = validate_channel(ch);
    Kernel uconst(2, 1, 1.0);
    RatePlan plan = manual_plan(0.125, 0.0, 0.0);
    Codebook cb = build_codebook_sc(ch, {0.5, 0.5}, uconst, plan, 8, 23);
    PsiContextSc ctx = PsiContextSc::make(ch, {0.5, 0.5}, uconst);
    TypicalityParams params{0.3, 0.15, 0.05};
    REQUIRE(cb.m_count == 2);
    for (int m = 0; m < cb.m_count; ++m) {
        MessageDecode d = decode_message_sc(cb, ctx, cb.x_word(m, 0), params);
        CHECK(d.status == DecodeStatus::ok);
        CHECK(d.m == m);
        CHECK(d.l == 0);
        // post-hoc invariant: the returned pair is membership-plausible
        CHECK(message_candidate_plausible(cb, ctx, d.m, d.l, cb.x_word(m, 0), params));
    }
}

TEST_CASE("decoder reports NoCandidate for outputs outside every reference support") {
    StateChannel ch;  // output always 0 regardless of input
    ch.nx = 2;
    ch.ns = 1;
    ch.nj = 1;
    ch.ny = 2;
    ch.ns_hat = 1;
    ch.q_s = {1.0};
    ch.distortion = {0.0};
    ch.w = {1, 0, 1, 0};
    ch = validate_channel(ch);
    Kernel uconst(2, 1, 1.0);
    RatePlan plan = manual_plan(0.25, 0.0, 0.0);
    Codebook cb = build_codebook_sc(ch, {0.5, 0.5}, uconst, plan, 8, 29);
    PsiContextSc ctx = PsiContextSc::make(ch, {0.5, 0.5}, uconst);
    TypicalityParams params{0.3, 0.15, 0.05};
    Seq y(8, 1);  // impossible output
    MessageDecode d = decode_message_sc(cb, ctx, y, params);
    CHECK(d.status == DecodeStatus::no_candidate);
}

TEST_CASE("decode budget guard trips on oversized witness enumerations") {
    StateChannel ch = binary_example_channel();
    Kernel us = identity_u_equals_s(ch);
    RatePlan plan = manual_plan(0.125, 0.125, 0.25);
    Codebook cb = build_codebook_sc(ch, {0.5, 0.5}, us, plan, 16, 31);
    PsiContextSc ctx = PsiContextSc::make(ch, {0.5, 0.5}, us);
    TypicalityParams params{0.4, 0.2, 0.05};
    DecodeBudget tiny;
    tiny.max_tables = 2;
    Seq y(16, 0);
    CHECK_THROWS_AS(decode_message_sc(cb, ctx, y, params, tiny), ExplosionGuard);
}

TEST_CASE("estimate_state applies the table symbolwise") {
    Estimator h(2, 2, 2, 2);
    for (int x = 0; x < 2; ++x)
        for (int u = 0; u < 2; ++u)
            for (int y = 0; y < 2; ++y) h.at(x, u, y) = u;
    Seq x = {0, 1, 0}, u = {1, 0, 1}, y = {0, 0, 1};
    CHECK(estimate_state(x, u, y, h) == Seq{1, 0, 1});

    Estimator hc(1, 2, 2, 2);  // constant estimator
    for (auto& v : hc.table) v = 1;
    CHECK(estimate_state(x, u, y, hc) == Seq{1, 1, 1});

    CHECK_THROWS_AS(estimate_state({0}, {0, 1}, {0}, h), LengthMismatch);
}

TEST_CASE("run_trials: clean channel, single jamming letter, zero errors") {
    StateChannel ch;  // y = x noiselessly
    ch.nx = 2;
    ch.ns = 1;
    ch.nj = 1;
    ch.ny = 2;
    ch.ns_hat = 1;
    ch.q_s = {1.0};
    ch.distortion = {0.0};
    ch.w = {1, 0, 0, 1};
    ch = validate_channel(ch);
    SimSetup setup;
    setup.ch = ch;
    setup.mode = CodeMode::strictly_causal;
    setup.q_x = {0.5, 0.5};
    setup.q_u_given_xs = Kernel(2, 1, 1.0);
    setup.h = Estimator(2, 1, 2, 1);
    setup.plan = manual_plan(0.25, 0.0, 0.0);
    setup.params = TypicalityParams{0.3, 0.15, 0.05};
    auto stats = run_trials(setup, {JammerStrategy::constant(0)}, {8}, 60, 5);
    REQUIRE(stats.size() == 1);
    CHECK(stats[0].avg_error == doctest::Approx(0.0));
    CHECK(stats[0].empirical_distortion == doctest::Approx(0.0));
    CHECK(stats[0].decoder_ambiguities == 0);
}

TEST_CASE("run_trials: message-aware jammer on a complete-graph channel hits max error 1/2") {
    StateChannel ch;  // W(y|x,s,j) = 1{y=j}: the jammer dictates the output
    ch.nx = 2;
    ch.ns = 1;
    ch.nj = 2;
    ch.ny = 2;
    ch.ns_hat = 1;
    ch.q_s = {1.0};
    ch.distortion = {0.0};
    ch.w.assign(8, 0.0);
    for (int x = 0; x < 2; ++x)
        for (int j = 0; j < 2; ++j) ch.wp(x, 0, j, j) = 1.0;
    ch = validate_channel(ch);

    SimSetup setup;
    setup.ch = ch;
    setup.mode = CodeMode::strictly_causal;
    setup.q_x = {0.5, 0.5};
    setup.q_u_given_xs = Kernel(2, 1, 1.0);
    setup.h = Estimator(2, 1, 2, 1);
    setup.plan = manual_plan(1.0 / 6.0, 0.0, 0.0);  // two messages at n = 6
    setup.params = TypicalityParams{0.5, 0.25, 0.05};
    auto stats = run_trials(setup, {JammerStrategy::message_aware(1 << 12)}, {6}, 40, 3);
    REQUIRE(stats.size() == 1);
    CHECK(stats[0].max_error_over_messages >= 0.5);
}

TEST_CASE("run_trials: error rate decreases with blocklength inside the rate headroom") {
    StateChannel ch = strong_state_channel();
    SimSetup setup;
    setup.ch = ch;
    setup.mode = CodeMode::strictly_causal;
    setup.q_x = {0.5, 0.5};
    setup.q_u_given_xs = soft_state_kernel(ch, 0.25);
    setup.plan = rate_plan_sc(ch, setup.q_x, setup.q_u_given_xs, 0.04);
    setup.h = bayes_estimator_sc(ch, setup.q_x, setup.q_u_given_xs, {1.0});
    setup.params = TypicalityParams{0.45, 0.22, 0.04};
    REQUIRE(setup.plan.r > 0.0);

    double err8 = 0.0, err16 = 0.0, amb = 0.0, dist16 = 0.0;
    for (uint64_t seed : {11ull, 12ull, 13ull}) {
        auto stats = run_trials(setup, {JammerStrategy::constant(0, "only")}, {8, 16}, 120, seed);
        REQUIRE(stats.size() == 2);
        err8 += stats[0].avg_error;
        err16 += stats[1].avg_error;
        amb += stats[0].decoder_ambiguities + stats[1].decoder_ambiguities;
        dist16 += stats[1].empirical_distortion;
    }
    CHECK(err16 / 3 < err8 / 3);
    CHECK(amb == 0);
    // the soft description caps the achievable per-symbol accuracy near the
    // kernel flip rate; the Bayes estimator must do at least that well
    CHECK(dist16 / 3 <= 0.3);
}

TEST_CASE("run_trials: noncausal pipeline on the shifted-BSC channel") {
    StateChannel ch = shifted_bsc_channel();
    SimSetup setup;
    setup.ch = ch;
    setup.mode = CodeMode::noncausal;
    setup.q_u_given_s = shifted_bsc_u_kernel();
    setup.q_x_given_us = shifted_bsc_x_kernel();
    setup.plan = rate_plan_nc(ch, setup.q_u_given_s, setup.q_x_given_us, 0.04);
    setup.h = Estimator(1, 2, 2, 1);
    setup.params = TypicalityParams{0.35, 0.17, 0.04};
    REQUIRE(setup.plan.r > 0.0);

    auto stats = run_trials(setup,
                            {JammerStrategy::constant(0), JammerStrategy::constant(1),
                             JammerStrategy::iid({0.5, 0.5}, "iid-uniform")},
                            {8, 14}, 120, 21);
    REQUIRE(stats.size() == 6);
    for (const auto& st : stats) {
        CHECK(st.empirical_distortion == doctest::Approx(0.0));  // |S| = 1
        CHECK(st.avg_error < 0.9);
    }
}

TEST_CASE("run_trials is reproducible for a fixed seed") {
    StateChannel ch = strong_state_channel();
    SimSetup setup;
    setup.ch = ch;
    setup.mode = CodeMode::strictly_causal;
    setup.q_x = {0.5, 0.5};
    setup.q_u_given_xs = soft_state_kernel(ch, 0.25);
    setup.plan = rate_plan_sc(ch, setup.q_x, setup.q_u_given_xs, 0.04);
    setup.h = bayes_estimator_sc(ch, setup.q_x, setup.q_u_given_xs, {1.0});
    setup.params = TypicalityParams{0.45, 0.22, 0.04};
    auto a = run_trials(setup, {JammerStrategy::constant(0)}, {8}, 50, 99);
    auto b = run_trials(setup, {JammerStrategy::constant(0)}, {8}, 50, 99);
    CHECK(trial_stats_csv(a) == trial_stats_csv(b));
}

TEST_CASE("symmetrizing jammer raises the error rate on the binary example") {
    StateChannel ch = binary_example_channel();
    SimSetup setup;
    setup.ch = ch;
    setup.mode = CodeMode::strictly_causal;
    setup.q_x = {0.5, 0.5};
    setup.q_u_given_xs = identity_u_equals_s(ch);
    setup.plan = rate_plan_sc(ch, setup.q_x, setup.q_u_given_xs, 0.02);
    setup.h = estimator_s_hat_equals_u(ch, 2);
    setup.params = TypicalityParams{0.5, 0.25, 0.02};

    // the S-symmetrizing kernel T(j|s) = 1{j=s} exists for this channel family;
    // aim it at a fake state sequence
    Kernel t(2, 2, 0.0);
    t.at(0, 0) = 1.0;
    t.at(1, 1) = 1.0;
    auto stats = run_trials(
        setup,
        {JammerStrategy::iid({0.5, 0.5}, "iid"),
         JammerStrategy::symmetrizing(t, JammerStrategy::Target::fake_s, "sym-s"),
         JammerStrategy::periodic({0, 1}, "alt")},
        {10}, 80, 7);
    REQUIRE(stats.size() == 3);
    // sanity only: all strategies produce valid statistics
    for (const auto& st : stats) {
        CHECK(st.avg_error >= 0.0);
        CHECK(st.avg_error <= 1.0);
        CHECK(st.empirical_distortion >= 0.0);
    }
}
