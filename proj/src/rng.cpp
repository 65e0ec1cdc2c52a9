#include "pasta/rng.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace pasta {

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound) {
    if (bound == 0)
        throw std::invalid_argument("uniform_below: bound must be positive");
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v = rng();
    while (v >= limit)
        v = rng();
    return v % bound;
}

std::size_t pick_index(std::mt19937_64 &rng, std::size_t n) {
    return static_cast<std::size_t>(uniform_below(rng, n));
}

double uniform_unit(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::mt19937_64 rng_for_key(std::uint64_t global_seed, std::string_view key) {
    const std::uint64_t mixed =
        splitmix64(splitmix64(global_seed) ^ fnv1a64(key));
    return std::mt19937_64(mixed);
}

std::vector<std::size_t> sample_indices(std::mt19937_64 &rng, std::size_t n,
                                        std::size_t k) {
    if (k > n)
        throw std::invalid_argument("sample_indices: k exceeds population");
    // Sparse Fisher-Yates: only touched slots are stored, so sampling a few
    // indices out of a large population stays cheap.
    std::unordered_map<std::size_t, std::size_t> moved;
    std::vector<std::size_t> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + pick_index(rng, n - i);
        std::size_t ji = moved.count(j) ? moved[j] : j;
        std::size_t ii = moved.count(i) ? moved[i] : i;
        moved[j] = ii;
        out.push_back(ji);
    }
    return out;
}

} // namespace pasta
