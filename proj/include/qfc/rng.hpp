#pragma once

#include <cmath>
#include <cstdint>

namespace qfc {

/// Counter-based splitmix64 stream.  A stream is fully determined by
/// (seed, stream_id), so trajectory i of a Monte-Carlo run always sees the
/// same numbers regardless of which thread executes it.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id) {
        // Decorrelate the stream id from the seed with one mixing round each.
        state_ = mix(seed + 0x9e3779b97f4a7c15ull * (stream_id + 1));
        state_ = mix(state_ ^ 0xbf58476d1ce4e5b9ull);
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    /// Uniform double in (0, 1).
    double next_uniform() {
        // 53 significant bits; offset by half an ulp to exclude 0.
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via the Marsaglia polar method.
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * next_uniform() - 1.0;
            v = 2.0 * next_uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace qfc
