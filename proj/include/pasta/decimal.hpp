#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pasta {

// Exact decimal value: mantissa / 10^scale. Bounded so that every
// aggregate computed over a 500-cell table fits in __int128 without
// rounding. Cells outside the bounds simply do not count as numeric.
struct Decimal {
    std::int64_t mantissa = 0;
    int scale = 0;

    static constexpr int kMaxScale = 6;
    static constexpr std::int64_t kMaxMantissa = 1000000000000000; // 10^15

    bool is_integer() const;
    friend bool operator==(const Decimal &, const Decimal &) = default;
};

// Parses a table cell as a decimal number. Strips surrounding whitespace,
// thousands separators (","), one leading currency symbol ($, €, £) and one
// trailing "%". Returns nullopt for anything that is not a plain decimal
// after stripping.
std::optional<Decimal> parse_decimal(std::string_view cell);

// Exact three-way comparison: negative, zero, positive.
int compare(const Decimal &a, const Decimal &b);

// Canonical rendering with trailing fraction zeros removed: "97", "3.61",
// "-0.05". parse_decimal(render_exact(d)) reproduces the value.
std::string render_exact(const Decimal &d);

} // namespace pasta
