#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace bonediff {

// Deterministic random stream. The engine is std::mt19937_64 but all scalar
// draws are derived with fixed arithmetic so a seed reproduces the same
// sequence on any standard library.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    // Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller, one spare cached.
    double normal();

    // Uniform integer in [0, n), rejection sampled (no modulo bias).
    int64_t uniform_int(int64_t n);

    void fill_normal(double* out, int64_t count);
    std::vector<double> normal_vector(int64_t count);

  private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace bonediff
