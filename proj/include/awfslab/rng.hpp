#pragma once
#include <cstdint>
#include <random>
#include <vector>

namespace awfslab {

// Seeded random source for corpus generation. mt19937_64 is fully specified by
// the standard; the bounded draw below avoids std::uniform_int_distribution,
// whose output is implementation-defined, so corpora are reproducible anywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    // uniform draw from [0, n) by rejection; n must be > 0
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    template <typename T>
    const T& pick(const std::vector<T>& xs) {
        return xs[static_cast<std::size_t>(below(xs.size()))];
    }

private:
    std::mt19937_64 engine_;
};

} // namespace awfslab
