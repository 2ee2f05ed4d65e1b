#ifndef AVCKIT_CODING_HPP
#define AVCKIT_CODING_HPP

#include "avckit/codebook.hpp"

namespace avckit {

// Existential witnesses over j^n (and s^n) are resolved by enumerating integer
// count tables refining the observed joint types; every decoder condition is
// permutation-invariant, so this is exact at the type level.  Pairwise
// competitor checks use their own refinements; the s-witness is tied to the
// j-witness through the shared (x,u,j) cells.

enum class DecodeStatus { ok, ambiguous, no_candidate, guard_tripped };

struct MessageDecode {
    DecodeStatus status = DecodeStatus::no_candidate;
    int m = -1, l = -1;
    int plausible = 0;  // candidates passing the membership condition
};

struct UDecode {
    DecodeStatus status = DecodeStatus::no_candidate;
    int k = -1;        // index within the bin
    int u_index = -1;  // index within the (m,l) subcodebook
    int plausible = 0;
};

struct EncodeResult {
    int u_index = -1;  // chosen codeword (subcodebook local index / flat nc index)
    int l_next = -1;   // bin label (strictly causal)
    bool covering_failure = false;
    bool bad_codeword = false;
    Seq x_seq;  // noncausal channel input
};

struct DecodeBudget {
    uint64_t max_tables = 2'000'000;  // per candidate enumeration budget
};

EncodeResult encode_sc(const Codebook& cb, const PsiContextSc& ctx, int m_prev, int l_prev,
                       const Seq& s_prev, const TypicalityParams& params, Rng& rng);

EncodeResult encode_nc(const Codebook& cb, const PsiContextNc& ctx, int m, const Seq& s_seq,
                       const TypicalityParams& params, Rng& rng);

// Conditions on the current block output: membership with an existential
// jamming witness plus the pairwise competitor-information threshold.
MessageDecode decode_message_sc(const Codebook& cb, const PsiContextSc& ctx, const Seq& y_seq,
                                const TypicalityParams& params, const DecodeBudget& budget = {});

// Conditions on the previous block: decode the within-bin index of the state
// description, given the decoded bin label l_hat and the previous block's
// codeword pair.
UDecode decode_u_sc(const Codebook& cb, const PsiContextSc& ctx, int m_prev, int l_prev, int l_hat,
                    const Seq& y_prev, const TypicalityParams& params, const DecodeBudget& budget = {});

MessageDecode decode_nc(const Codebook& cb, const PsiContextNc& ctx, const Seq& y_seq,
                        const TypicalityParams& params, const DecodeBudget& budget = {});

Seq estimate_state(const Seq& x_seq, const Seq& u_seq, const Seq& y_seq, const Estimator& h);

// Membership re-verification helpers (post-hoc invariant checks in tests).
bool message_candidate_plausible(const Codebook& cb, const PsiContextSc& ctx, int m, int l,
                                 const Seq& y_seq, const TypicalityParams& params,
                                 const DecodeBudget& budget = {});
bool nc_candidate_plausible(const Codebook& cb, const PsiContextNc& ctx, int index, const Seq& y_seq,
                            const TypicalityParams& params, const DecodeBudget& budget = {});

}  // namespace avckit

#endif
