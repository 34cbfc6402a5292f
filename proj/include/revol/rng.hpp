#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace revol {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Stream derivation for splittable use: stream `id` of a base seed is
// splitmix64 applied twice to (seed, id). Per-day simulation streams are
// derive_seed(config_seed, day_index), so day paths are reproducible
// independently of evaluation order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t id) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ (id * 0xD2B74407B1CE6E93ULL + 0x9E3779B97F4A7C15ULL);
    return splitmix64(s);
}

// mt19937_64 with uniform doubles in (0,1) and Box-Muller normals.
// The normal transform is spelled out (instead of std::normal_distribution)
// so draw sequences are identical across standard library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() {
        // 53 random bits, offset by half an ulp: strictly inside (0,1).
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double gauss() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    std::uint64_t bits() { return engine_(); }

  private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace revol
