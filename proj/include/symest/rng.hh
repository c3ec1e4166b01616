// rng.hh -- seeded random source with platform-independent derived draws
//
// std::uniform_int_distribution is implementation-defined, so every bounded
// draw here is computed from raw engine output. Identical seeds give
// identical streams on every platform.
#ifndef SYMEST_RNG_HH_
#define SYMEST_RNG_HH_

#include <cstdint>
#include <random>
#include <vector>

namespace symest {

/// Mixes a base seed with a stream index into an independent-looking seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform draw in [0, n). n must be positive. Modulo bias is negligible
    /// at the alphabet/state-count sizes used here.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

    /// Uniform double in [0, 1) with 53 random bits.
    double real01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double real(double lo, double hi) { return lo + (hi - lo) * real01(); }

    bool chance(double p) { return real01() < p; }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[index(v.size())];
    }

    /// Fisher-Yates shuffle driven by below(), not std::shuffle.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace symest

#endif
