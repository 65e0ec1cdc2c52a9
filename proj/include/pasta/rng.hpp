#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace pasta {

// All randomness flows through mt19937_64 (whose output sequence is pinned
// by the standard) plus the bounded-draw helpers below. Standard library
// distributions are implementation-defined and must not be used anywhere
// reproducibility matters.

std::uint64_t fnv1a64(std::string_view s);
std::uint64_t splitmix64(std::uint64_t x);

// Uniform in [0, bound) via rejection sampling; bound must be > 0.
std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound);

std::size_t pick_index(std::mt19937_64 &rng, std::size_t n);

// Uniform in [0, 1) with 53 bits of precision.
double uniform_unit(std::mt19937_64 &rng);

// Engine for one table's generation run, derived from the global seed and
// the table id so corpus bytes do not depend on scheduling order.
std::mt19937_64 rng_for_key(std::uint64_t global_seed, std::string_view key);

template <typename T>
void shuffle_in_place(std::mt19937_64 &rng, std::vector<T> &items) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const std::size_t j = pick_index(rng, i);
        std::swap(items[i - 1], items[j]);
    }
}

// k distinct indices drawn uniformly from [0, n), in draw order.
std::vector<std::size_t> sample_indices(std::mt19937_64 &rng, std::size_t n,
                                        std::size_t k);

} // namespace pasta
