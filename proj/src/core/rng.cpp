#include "core/rng.hpp"

#include <cmath>
#include <numbers>

#include "core/common.hpp"

namespace bonediff {

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // u1 in (0, 1] so the log is finite.
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

int64_t Rng::uniform_int(int64_t n) {
    require_arg(n > 0, "uniform_int: n must be positive");
    const uint64_t un = static_cast<uint64_t>(n);
    const uint64_t bound = UINT64_MAX - UINT64_MAX % un;
    uint64_t x;
    do {
        x = next_u64();
    } while (x >= bound);
    return static_cast<int64_t>(x % un);
}

void Rng::fill_normal(double* out, int64_t count) {
    for (int64_t i = 0; i < count; ++i) out[i] = normal();
}

std::vector<double> Rng::normal_vector(int64_t count) {
    std::vector<double> v(static_cast<size_t>(count));
    fill_normal(v.data(), count);
    return v;
}

}  // namespace bonediff
