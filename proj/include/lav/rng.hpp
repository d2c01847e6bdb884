#pragma once

// Deterministic splitmix64 generator. std:: distributions are not
// byte-stable across standard library versions, so the few draws we
// need are implemented here.

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace lav {

class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return u01() < p; }

    // Uniform integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi) {
        if (hi <= lo) return lo;
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next_u64() % span);
    }

    // Standard normal via Box-Muller; one value per call, no cached spare.
    double normal(double sigma) {
        double u1 = u01();
        double u2 = u01();
        if (u1 < 1e-300) u1 = 1e-300;
        return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    std::size_t pick_index(std::size_t n) {
        return n <= 1 ? 0 : static_cast<std::size_t>(next_u64() % n);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_u64() % i);
            std::swap(v[i - 1], v[j]);
        }
    }

    // Index drawn proportionally to non-negative weights; all-zero falls back to 0.
    std::size_t weighted_index(const std::vector<double>& weights) {
        double total = 0.0;
        for (double w : weights) total += w > 0.0 ? w : 0.0;
        if (total <= 0.0) return 0;
        double r = u01() * total;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            double w = weights[i] > 0.0 ? weights[i] : 0.0;
            if (r < w) return i;
            r -= w;
        }
        return weights.size() - 1;
    }

  private:
    std::uint64_t state_;
};

// Stable sub-stream seed for a (seed, tag) pair.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    Rng mix(seed ^ h);
    return mix.next_u64();
}

} // namespace lav
