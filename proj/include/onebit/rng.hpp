#pragma once

#include <cmath>
#include <cstdint>

namespace onebit {

// Counter-seeded deterministic random stream. Uniform draws come from a
// splitmix64 state walk; normals from the Box-Muller transform of those
// uniforms. Streams derived from (seed, stream) are independent, which is
// what lets dataset columns be generated in any order or in parallel.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : RandomStream(seed, 0) {}

    RandomStream(std::uint64_t seed, std::uint64_t stream) {
        state_ = mix(seed + 0x9e3779b97f4a7c15ull * (stream + 1));
        state_ = mix(state_ ^ 0xbf58476d1ce4e5b9ull);
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    /// Uniform double in the open interval (0, 1).
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform double in (lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; pairs are cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.141592653589793238462643383279502884 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace onebit
