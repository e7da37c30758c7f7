#pragma once

#include <cstdint>
#include <random>

namespace hdir {

// Seeded RNG wrapper. One instance per logical stream; all randomness in the
// library flows through an Rng handed in by the caller, so runs are
// reproducible given a seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double normal() { return normal_(engine_); }
    double uniform() { return unit_(engine_); }  // [0, 1)
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit_(engine_); }
    // inclusive range
    int uniform_int(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(engine_);
    }
    std::uint64_t next_u64() { return engine_(); }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

}  // namespace hdir
