#ifndef AVCKIT_CHANNEL_IO_HPP
#define AVCKIT_CHANNEL_IO_HPP

#include <string>

#include "avckit/channel.hpp"

namespace avckit {

// Channel specification file: UTF-8 JSON with fields
//   nx, ns, nj, ny, ns_hat : integers
//   W          : nested array [x][s][j][y]
//   Qs         : array of ns probabilities
//   distortion : nested array [s][s_hat]
// Rows are validated to 1e-9 at ingest and renormalized internally.
StateChannel load_channel_json(const std::string& path);
StateChannel parse_channel_json(const std::string& text);
std::string channel_to_json(const StateChannel& ch);

}  // namespace avckit

#endif
