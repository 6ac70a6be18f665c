#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace sasldpc {

// SplitMix64 step, used to mix seeds and derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic seed for a derived stream, e.g. (seed, iteration, edge, block).
inline std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t s = 0x243f6a8885a308d3ULL;
    for (std::uint64_t p : parts) {
        s ^= splitmix64(p);
        (void)splitmix64(s);
    }
    return splitmix64(s);
}

// Random stream with hand-rolled transforms so that output is independent of
// the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t bits() { return eng_(); }

    // uniform on (0, 1), never returns 0 or 1
    double uniform() { return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1p-53; }

    double exponential() { return -std::log(uniform()); }

    double normal() {
        if (have_cache_) {
            have_cache_ = false;
            return cache_;
        }
        double r = std::sqrt(2.0 * exponential());
        double t = 6.283185307179586476925 * uniform();
        cache_ = r * std::sin(t);
        have_cache_ = true;
        return r * std::cos(t);
    }

private:
    std::mt19937_64 eng_;
    double cache_ = 0.0;
    bool have_cache_ = false;
};

}  // namespace sasldpc
