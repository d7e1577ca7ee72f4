#pragma once

#include <cstdint>
#include <random>

namespace conerc {

// mt19937_64 with a fixed bits-to-double map. std:: distributions are
// implementation-defined, so draws go through uniform() to keep reports
// byte-identical across platforms.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    // [0,1)
    double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
};

} // namespace conerc
