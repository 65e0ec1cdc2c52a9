#include "pasta/decimal.hpp"

namespace pasta {

namespace {

std::int64_t pow10_i64(int n) {
    std::int64_t v = 1;
    for (int i = 0; i < n; ++i)
        v *= 10;
    return v;
}

bool strip_prefix(std::string_view &s, std::string_view prefix) {
    if (s.substr(0, prefix.size()) == prefix) {
        s.remove_prefix(prefix.size());
        return true;
    }
    return false;
}

} // namespace

bool Decimal::is_integer() const {
    return mantissa % pow10_i64(scale) == 0;
}

std::optional<Decimal> parse_decimal(std::string_view cell) {
    std::size_t b = 0, e = cell.size();
    while (b < e && (cell[b] == ' ' || cell[b] == '\t'))
        ++b;
    while (e > b && (cell[e - 1] == ' ' || cell[e - 1] == '\t'))
        --e;
    std::string_view s = cell.substr(b, e - b);

    strip_prefix(s, "$") || strip_prefix(s, "\xE2\x82\xAC") ||
        strip_prefix(s, "\xC2\xA3");
    if (!s.empty() && s.back() == '%')
        s.remove_suffix(1);

    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty())
        return std::nullopt;

    std::int64_t mantissa = 0;
    int scale = 0;
    bool seen_point = false;
    bool seen_digit = false;
    for (char c : s) {
        if (c == ',') {
            if (seen_point)
                return std::nullopt; // separators only left of the point
            continue;
        }
        if (c == '.') {
            if (seen_point)
                return std::nullopt;
            seen_point = true;
            continue;
        }
        if (c < '0' || c > '9')
            return std::nullopt;
        seen_digit = true;
        if (seen_point) {
            if (scale == Decimal::kMaxScale)
                return std::nullopt;
            ++scale;
        }
        mantissa = mantissa * 10 + (c - '0');
        if (mantissa > Decimal::kMaxMantissa)
            return std::nullopt;
    }
    if (!seen_digit)
        return std::nullopt;
    return Decimal{negative ? -mantissa : mantissa, scale};
}

int compare(const Decimal &a, const Decimal &b) {
    // Cross-multiplied onto a common scale; bounded mantissas keep this
    // comfortably inside __int128.
    const __int128 lhs = static_cast<__int128>(a.mantissa) * pow10_i64(b.scale);
    const __int128 rhs = static_cast<__int128>(b.mantissa) * pow10_i64(a.scale);
    if (lhs < rhs)
        return -1;
    return lhs > rhs ? 1 : 0;
}

std::string render_exact(const Decimal &d) {
    std::int64_t mant = d.mantissa;
    int scale = d.scale;
    while (scale > 0 && mant % 10 == 0) {
        mant /= 10;
        --scale;
    }
    const bool negative = mant < 0;
    std::uint64_t abs_mant =
        negative ? static_cast<std::uint64_t>(-(mant + 1)) + 1
                 : static_cast<std::uint64_t>(mant);
    std::string digits = std::to_string(abs_mant);
    if (static_cast<int>(digits.size()) <= scale)
        digits.insert(0, scale - digits.size() + 1, '0');

    std::string out;
    if (negative)
        out.push_back('-');
    out.append(digits, 0, digits.size() - scale);
    if (scale > 0) {
        out.push_back('.');
        out.append(digits, digits.size() - scale, scale);
    }
    return out;
}

} // namespace pasta
