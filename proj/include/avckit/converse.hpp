#ifndef AVCKIT_CONVERSE_HPP
#define AVCKIT_CONVERSE_HPP

#include <cstdint>
#include <vector>

#include "avckit/channel.hpp"
#include "avckit/joint_type.hpp"

namespace avckit {

// Exact max-message worst-jammer error of a small deterministic code by full
// enumeration of J^n and Y^n (state already averaged into the AVC).
// `decode` maps the rank of y^n (base-|Y| integer, first symbol most
// significant) to a message index; every y^n must decode to something.
struct ConverseResult {
    double max_error = 0.0;   // max over messages and j^n
    int worst_message = 0;
    Seq worst_jamming;
};

ConverseResult converse_probe(const AvChannel& avc, const std::vector<Seq>& codewords,
                              const std::vector<int>& decode, uint64_t budget = 100'000'000ull);

}  // namespace avckit

#endif
