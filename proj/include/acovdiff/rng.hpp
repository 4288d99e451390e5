#pragma once

#include <cstdint>
#include <cmath>

namespace acovdiff::rng {

// SplitMix64 step; used to derive stream keys and to expand seeds into
// engine state. Reference: Steele, Lea & Flood (2014).
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Collapses (master seed, replication index, stream role) into one 64-bit
// key. Distinct tuples map to distinct-looking keys, so replications can be
// generated independently and in any order.
inline std::uint64_t derive_stream_key(std::uint64_t master_seed,
                                       std::uint64_t replication,
                                       std::uint64_t role) {
    std::uint64_t s = master_seed;
    s ^= splitmix64(s) + 0x9E3779B97F4A7C15ULL * (replication + 1);
    s ^= splitmix64(s) + 0xBF58476D1CE4E5B9ULL * (role + 1);
    splitmix64(s);
    return s;
}

// xoshiro256++ engine (Blackman & Vigna). Small, fast, and fully
// specified here so sequences are bit-identical across platforms; the
// standard library distributions are implementation-defined and would
// break reproducibility between compilers.
class Xoshiro256pp {
  public:
    explicit Xoshiro256pp(std::uint64_t key) {
        for (auto& word : state_) word = splitmix64(key);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

// Uniform / Gaussian / Student-t draws on top of the engine. Gaussian uses
// Box-Muller (no rejection step, so the uniform consumption pattern is
// fixed); t4 is Z / sqrt(V/4) with V ~ chi-squared(4) = -2 log(U1 U2).
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t key) : engine_(key) {}

    RandomStream(std::uint64_t master_seed, std::uint64_t replication, std::uint64_t role)
        : engine_(derive_stream_key(master_seed, replication, role)) {}

    // Uniform on the open interval (0,1); never returns 0, so log() is safe.
    double uniform_open() {
        return (static_cast<double>(engine_.next() >> 11) + 0.5) * 0x1.0p-53;
    }

    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        const double u1 = uniform_open();
        const double u2 = uniform_open();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * M_PI * u2;
        cached_ = radius * std::sin(angle);
        have_cached_ = true;
        return radius * std::cos(angle);
    }

    // Unstandardized Student t with 4 degrees of freedom (variance 2).
    double student_t4() {
        const double z = normal();
        const double u1 = uniform_open();
        const double u2 = uniform_open();
        const double chi2 = -2.0 * std::log(u1 * u2);
        return z / std::sqrt(chi2 / 4.0);
    }

  private:
    Xoshiro256pp engine_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace acovdiff::rng
