#include "pasta/text.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_set>

namespace pasta {

namespace {

// Decodes one UTF-8 codepoint starting at i. On malformed input the single
// byte is returned as-is so no input is ever rejected here.
std::uint32_t next_codepoint(std::string_view s, std::size_t &i) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 0x80) {
        ++i;
        return c;
    }
    auto cont = [&](std::size_t k) {
        return i + k < s.size() &&
               (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
    };
    if ((c & 0xE0) == 0xC0 && cont(1)) {
        std::uint32_t cp = (c & 0x1Fu) << 6 |
                           (static_cast<unsigned char>(s[i + 1]) & 0x3Fu);
        i += 2;
        return cp;
    }
    if ((c & 0xF0) == 0xE0 && cont(1) && cont(2)) {
        std::uint32_t cp = (c & 0x0Fu) << 12 |
                           (static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 6 |
                           (static_cast<unsigned char>(s[i + 2]) & 0x3Fu);
        i += 3;
        return cp;
    }
    if ((c & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
        std::uint32_t cp = (c & 0x07u) << 18 |
                           (static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 12 |
                           (static_cast<unsigned char>(s[i + 2]) & 0x3Fu) << 6 |
                           (static_cast<unsigned char>(s[i + 3]) & 0x3Fu);
        i += 4;
        return cp;
    }
    ++i;
    return c;
}

void append_utf8(std::uint32_t cp, std::string &out) {
    if (cp <= 0x7F) {
        out.push_back(static_cast<char>(cp));
    } else if (cp <= 0x7FF) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp <= 0xFFFF) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

bool is_space_cp(std::uint32_t cp) {
    switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0xA0: case 0x1680: case 0x2028: case 0x2029: case 0x202F:
    case 0x205F: case 0x3000:
        return true;
    default:
        return cp >= 0x2000 && cp <= 0x200A;
    }
}

std::uint32_t lower_cp(std::uint32_t cp) {
    if (cp >= 'A' && cp <= 'Z')
        return cp + 32;
    // Latin-1 Supplement, multiplication sign excluded.
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7)
        return cp + 32;
    // Latin Extended-A comes in upper/lower pairs with a few exceptions.
    if (cp >= 0x100 && cp <= 0x137)
        return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp >= 0x139 && cp <= 0x148)
        return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp >= 0x14A && cp <= 0x177)
        return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp == 0x178)
        return 0xFF;
    if (cp >= 0x179 && cp <= 0x17E)
        return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp == 0x130)
        return 'i';
    return cp;
}

struct ComposeRule {
    char base;
    std::uint16_t mark;
    std::uint16_t composed;
};

// Composition of a lowercase ASCII base letter with one combining mark into
// the precomposed Latin-1 / Latin Extended-A codepoint. Covers the
// sequences that actually occur in web-table text.
constexpr std::array<ComposeRule, 58> kComposeRules = {{
    {'a', 0x300, 0xE0},  {'a', 0x301, 0xE1},  {'a', 0x302, 0xE2},
    {'a', 0x303, 0xE3},  {'a', 0x308, 0xE4},  {'a', 0x30A, 0xE5},
    {'a', 0x304, 0x101}, {'a', 0x306, 0x103}, {'a', 0x328, 0x105},
    {'c', 0x327, 0xE7},  {'c', 0x301, 0x107}, {'c', 0x302, 0x109},
    {'c', 0x307, 0x10B}, {'c', 0x30C, 0x10D}, {'d', 0x30C, 0x10F},
    {'e', 0x300, 0xE8},  {'e', 0x301, 0xE9},  {'e', 0x302, 0xEA},
    {'e', 0x308, 0xEB},  {'e', 0x304, 0x113}, {'e', 0x306, 0x115},
    {'e', 0x307, 0x117}, {'e', 0x328, 0x119}, {'e', 0x30C, 0x11B},
    {'g', 0x302, 0x11D}, {'g', 0x306, 0x11F}, {'g', 0x307, 0x121},
    {'g', 0x327, 0x123}, {'h', 0x302, 0x125}, {'i', 0x300, 0xEC},
    {'i', 0x301, 0xED},  {'i', 0x302, 0xEE},  {'i', 0x308, 0xEF},
    {'i', 0x303, 0x129}, {'i', 0x304, 0x12B}, {'i', 0x328, 0x12F},
    {'l', 0x301, 0x13A}, {'l', 0x327, 0x13C}, {'l', 0x30C, 0x13E},
    {'n', 0x303, 0xF1},  {'n', 0x301, 0x144}, {'n', 0x327, 0x146},
    {'n', 0x30C, 0x148}, {'o', 0x300, 0xF2},  {'o', 0x301, 0xF3},
    {'o', 0x302, 0xF4},  {'o', 0x303, 0xF5},  {'o', 0x308, 0xF6},
    {'o', 0x304, 0x14D}, {'r', 0x30C, 0x159}, {'s', 0x301, 0x15B},
    {'s', 0x327, 0x15F}, {'s', 0x30C, 0x161}, {'u', 0x300, 0xF9},
    {'u', 0x301, 0xFA},  {'u', 0x302, 0xFB},  {'u', 0x308, 0xFC},
    {'z', 0x30C, 0x17E},
}};

std::uint32_t compose(std::uint32_t base, std::uint32_t mark) {
    for (const auto &r : kComposeRules) {
        if (static_cast<std::uint32_t>(r.base) == base && r.mark == mark)
            return r.composed;
    }
    return 0;
}

const std::vector<std::string> kStopwords = {
    "the",   "a",      "an",     "and",   "or",    "but",  "if",    "when",
    "at",    "by",     "for",    "with",  "about", "into", "through",
    "during", "before", "after", "to",    "from",  "in",   "out",   "on",
    "off",   "over",   "under",  "again", "then",  "once", "here",  "there",
    "all",   "any",    "both",   "each",  "some",  "such", "no",    "nor",
    "not",   "only",   "so",     "too",   "very",  "of",   "as",    "is",
    "it",    "this",   "has",
};

} // namespace

std::string normalize_text(std::string_view raw) {
    std::vector<std::uint32_t> cps;
    cps.reserve(raw.size());
    std::size_t i = 0;
    while (i < raw.size()) {
        std::uint32_t cp = lower_cp(next_codepoint(raw, i));
        if (cp >= 0x300 && cp <= 0x36F && !cps.empty()) {
            if (std::uint32_t composed = compose(cps.back(), cp)) {
                cps.back() = composed;
                continue;
            }
        }
        cps.push_back(cp);
    }

    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    bool emitted = false;
    for (std::uint32_t cp : cps) {
        if (is_space_cp(cp)) {
            pending_space = emitted;
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        append_utf8(cp, out);
        emitted = true;
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view text) {
    const std::string norm = normalize_text(text);
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : norm) {
        const unsigned char c = static_cast<unsigned char>(ch);
        const bool is_word = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                             c >= 0x80;
        if (is_word) {
            cur.push_back(ch);
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty())
        tokens.push_back(std::move(cur));
    return tokens;
}

std::vector<std::string> content_token_set(std::string_view text) {
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    for (auto &tok : tokenize(text)) {
        if (is_stopword(tok) || seen.count(tok))
            continue;
        seen.insert(tok);
        out.push_back(std::move(tok));
    }
    return out;
}

std::size_t whitespace_token_count(std::string_view text) {
    std::size_t count = 0;
    bool in_token = false;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            in_token = false;
        } else if (!in_token) {
            ++count;
            in_token = true;
        }
    }
    return count;
}

const std::vector<std::string> &stopwords() { return kStopwords; }

bool is_stopword(std::string_view token) {
    return std::find(kStopwords.begin(), kStopwords.end(), token) !=
           kStopwords.end();
}

} // namespace pasta
