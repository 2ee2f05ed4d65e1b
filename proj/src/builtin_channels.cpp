#include "avckit/builtin_channels.hpp"

namespace avckit {

std::vector<double> hamming_distortion(int ns, int ns_hat) {
    std::vector<double> d(static_cast<std::size_t>(ns) * ns_hat, 1.0);
    for (int s = 0; s < ns && s < ns_hat; ++s) d[static_cast<std::size_t>(s) * ns_hat + s] = 0.0;
    return d;
}

StateChannel binary_example_channel() {
    StateChannel ch;
    ch.nx = ch.ns = ch.nj = ch.ny = ch.ns_hat = 2;
    ch.q_s = {0.9, 0.1};
    ch.distortion = hamming_distortion(2, 2);
    ch.w.assign(16, 0.0);
    auto set = [&](int s, int j, double r00, double r01, double r10, double r11) {
        ch.wp(0, s, j, 0) = r00;
        ch.wp(0, s, j, 1) = r01;
        ch.wp(1, s, j, 0) = r10;
        ch.wp(1, s, j, 1) = r11;
    };
    set(0, 0, 1.0, 0.0, 0.15, 0.85);
    set(1, 0, 1.0, 0.0, 0.65, 0.35);
    set(0, 1, 0.85, 0.15, 0.0, 1.0);
    set(1, 1, 0.35, 0.65, 0.0, 1.0);
    return validate_channel(ch);
}

StateChannel example1_channel() {
    StateChannel ch;
    ch.nx = 3;
    ch.ns = 2;
    ch.nj = 2;
    ch.ny = 5;
    ch.ns_hat = 2;
    ch.q_s = {0.5, 0.5};
    ch.distortion = hamming_distortion(2, 2);
    ch.w.assign(static_cast<std::size_t>(3) * 2 * 2 * 5, 0.0);
    for (int x = 0; x < 3; ++x)
        for (int s = 0; s < 2; ++s)
            for (int j = 0; j < 2; ++j) ch.wp(x, s, j, x + s + j) = 1.0;
    return validate_channel(ch);
}

Kernel example1_u_equals_x_plus_s() {
    Kernel k(3 * 2, 4);
    for (int x = 0; x < 3; ++x)
        for (int s = 0; s < 2; ++s) k.at(x * 2 + s, x + s) = 1.0;
    return k;
}

Kernel identity_u_equals_s(const StateChannel& ch) {
    Kernel k(ch.nx * ch.ns, ch.ns);
    for (int x = 0; x < ch.nx; ++x)
        for (int s = 0; s < ch.ns; ++s) k.at(x * ch.ns + s, s) = 1.0;
    return k;
}

Estimator estimator_s_hat_equals_u(const StateChannel& ch, int nu) {
    Estimator h(ch.nx, nu, ch.ny, ch.ns_hat);
    for (int x = 0; x < ch.nx; ++x)
        for (int u = 0; u < nu; ++u)
            for (int y = 0; y < ch.ny; ++y) h.at(x, u, y) = u < ch.ns_hat ? u : ch.ns_hat - 1;
    return h;
}

}  // namespace avckit
