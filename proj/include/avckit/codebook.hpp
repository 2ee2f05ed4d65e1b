#ifndef AVCKIT_CODEBOOK_HPP
#define AVCKIT_CODEBOOK_HPP

#include "avckit/bounds.hpp"
#include "avckit/joint_type.hpp"
#include "avckit/psi.hpp"
#include "avckit/rng.hpp"

namespace avckit {

// Round a target distribution to the nearest denominator-n type
// (largest-remainder); returns integer counts summing to n.
std::vector<int> round_to_type(const Dist& p, int n);

// Uniform draws from the type class with the given symbol counts.
std::vector<Seq> sample_type_class(const Dist& type, int n, int count, uint64_t seed);

// Uniform draws from the conditional type class: cond_counts.at(a, u) symbols u
// among the positions where x_seq carries a.  Cell counts must match the
// per-symbol counts of x_seq.
std::vector<Seq> sample_conditional_type_class(const std::vector<std::vector<int>>& cond_counts,
                                               const Seq& x_seq, int count, uint64_t seed);

enum class CodeMode { strictly_causal, noncausal };

struct Codebook {
    CodeMode mode = CodeMode::strictly_causal;
    int n = 0;
    int nx_alpha = 0, nu_alpha = 0;

    // strictly causal: x_words indexed (m,l); per (m,l) a list of u words with
    // bin labels; bins[(m,l)][b] lists u indices (the within-bin order defines k).
    int m_count = 1, l_count = 1, nu_count = 1;
    std::vector<Seq> x_words;
    std::vector<Seq> u_words;  // ((m*l_count + l)*nu_count + i)
    std::vector<int> u_bin;
    std::vector<std::vector<std::vector<int>>> bins;  // [m*l_count+l][b] -> u indices

    // noncausal: flat codeword list with random message bins.
    int nc_count = 0, msg_count = 1;
    std::vector<Seq> nc_words;
    std::vector<int> nc_bin;
    std::vector<std::vector<int>> nc_bins;  // [m] -> codeword indices
    std::vector<uint8_t> good;              // per codeword
    double good_threshold = 0.0;            // R-tilde

    std::vector<int> x_type;                     // state- x type counts (sc)
    std::vector<std::vector<int>> u_cond_type;   // per x symbol: u counts (sc)
    std::vector<int> u_type;                     // nc: type counts of Q_U
    double type_rounding_gap = 0.0;              // L1 gap target law vs n-type

    const Seq& x_word(int m, int l) const { return x_words[static_cast<std::size_t>(m) * l_count + l]; }
    const Seq& u_word(int m, int l, int i) const {
        return u_words[(static_cast<std::size_t>(m) * l_count + l) * nu_count + i];
    }
};

struct CodebookSizes {
    int m_count = 1, l_count = 1, nu_count = 1;  // strictly causal
    int nc_count = 1, msg_count = 1;             // noncausal
};

// Desk-scale integerization of a rate plan: sizes = round(2^{nR}) clamped >= 1.
CodebookSizes plan_sizes(const RatePlan& plan, int n, PlanMode mode);

Codebook build_codebook_sc(const StateChannel& ch, const Dist& q_x, const Kernel& q_u_given_xs,
                           const RatePlan& plan, int n, uint64_t seed,
                           uint64_t symbol_budget = 1ull << 26);
Codebook build_codebook_nc(const StateChannel& ch, const Kernel& q_u_given_s, const RatePlan& plan,
                           int n, uint64_t seed, uint64_t symbol_budget = 1ull << 26);

struct AuditReport {
    double good_fraction = 1.0;
    int num_codewords = 0;
    // V-shell occupancy check (noncausal): worst ratio of shell occupancy to
    // the 2^{n(|R~ - I|^+ + delta)} budget over sampled jamming sequences.
    double max_shell_ratio = 0.0;
    // bin spread
    double bin_mean = 0.0, bin_min = 0.0, bin_max = 0.0, bin_stddev = 0.0;
};

AuditReport audit_codebook(const Codebook& cb, double delta, int nj, uint64_t seed = 7);

// Empirical mutual information between two equal-length sequences.
double empirical_mi(const Seq& a, const Seq& b, int na, int nb);

}  // namespace avckit

#endif
