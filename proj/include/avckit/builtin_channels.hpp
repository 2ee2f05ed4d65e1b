#ifndef AVCKIT_BUILTIN_CHANNELS_HPP
#define AVCKIT_BUILTIN_CHANNELS_HPP

#include "avckit/channel.hpp"

namespace avckit {

// Built-in channels backing the `reproduce` CLI command.

// "binary_example": binary channel with two jamming states whose averaged AVC
// interpolates between BSC(0.1) (iid uniform jamming) and BSC(0.2)
// (input-aware jamming); state prior (0.9, 0.1), Hamming distortion.
StateChannel binary_example_channel();

// "example1": additive channel Y = X + S + J with X in {0,1,2}, S,J binary,
// uniform state prior, Hamming distortion.
StateChannel example1_channel();

// Deterministic kernel U = X + S for example1 (rows (x,s), cols u, |U| = 4).
Kernel example1_u_equals_x_plus_s();

// Identity description U = S for a channel (rows (x,s), cols u = |S|).
Kernel identity_u_equals_s(const StateChannel& ch);

// Estimator h(x,u,y) = u (used with U = S).
Estimator estimator_s_hat_equals_u(const StateChannel& ch, int nu);

// Hamming distortion helper.
std::vector<double> hamming_distortion(int ns, int ns_hat);

}  // namespace avckit

#endif
