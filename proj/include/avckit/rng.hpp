#ifndef AVCKIT_RNG_HPP
#define AVCKIT_RNG_HPP

#include <cstdint>
#include <vector>

namespace avckit {

// Small self-contained generator (splitmix64 core) so that simulation output
// is byte-identical across standard libraries and thread counts.
class Rng {
   public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    // Derive an independent stream from a tuple of labels, e.g. (seed, trial, jammer).
    static Rng stream(uint64_t seed, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
        Rng r(seed);
        r.state_ ^= mix(a + 0x1234567);
        r.state_ = mix(r.state_);
        r.state_ ^= mix(b + 0x89abcdef);
        r.state_ = mix(r.state_);
        r.state_ ^= mix(c + 0xfeedface);
        r.state_ = mix(r.state_);
        return r;
    }

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    // Uniform in [0, bound), bound > 0. Rejection-free Lemire reduction.
    uint32_t next_below(uint32_t bound) {
        uint64_t x = next_u64() >> 32;
        uint64_t m = x * bound;
        uint32_t lo = static_cast<uint32_t>(m);
        if (lo < bound) {
            uint32_t threshold = (0u - bound) % bound;
            while (lo < threshold) {
                x = next_u64() >> 32;
                m = x * bound;
                lo = static_cast<uint32_t>(m);
            }
        }
        return static_cast<uint32_t>(m >> 32);
    }

    double next_double() {  // [0,1)
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Sample an index from a probability vector.
    int sample(const std::vector<double>& p) {
        double u = next_double();
        double acc = 0.0;
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            acc += p[i];
            if (u < acc) return static_cast<int>(i);
        }
        return static_cast<int>(p.size()) - 1;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = next_below(static_cast<uint32_t>(i));
            std::swap(v[i - 1], v[j]);
        }
    }

   private:
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t state_;
};

}  // namespace avckit

#endif
