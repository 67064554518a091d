// Counter-based random generator: draw i of a stream is a pure function of
// (seed, i), so serial and partitioned parallel runs produce identical
// sequences and any position can be seeked in O(1).

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace qsym {

class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t start_index = 0)
        : key_(finalize(seed ^ 0x6A09E667F3BCC909ull)), index_(start_index) {}

    std::uint64_t index() const { return index_; }
    void seek(std::uint64_t index) { index_ = index; }

    std::uint64_t next_u64() { return finalize(key_ + (++index_) * 0x9E3779B97F4A7C15ull); }

    // uniform in [0, 1)
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [-scale, scale)
    double next_symmetric(double scale) { return scale * (2.0 * next_double() - 1.0); }

    // standard normal pair (Box-Muller)
    std::pair<double, double> next_gaussian_pair() {
        const double u = 1.0 - next_double(); // (0, 1]
        const double r = std::sqrt(-2.0 * std::log(u));
        const double t = 2.0 * std::numbers::pi * next_double();
        return {r * std::cos(t), r * std::sin(t)};
    }

private:
    // SplitMix64 finalizer
    static std::uint64_t finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t index_;
};

} // namespace qsym
