#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pasta {

// Canonical cell/statement normalization used everywhere downstream:
// compose common Latin letter + combining mark sequences, lowercase
// (ASCII, Latin-1, Latin Extended-A), map unicode spaces to ' ', collapse
// whitespace runs and trim. Bytes outside those ranges pass through.
std::string normalize_text(std::string_view raw);

// Lowercased tokens split on whitespace and ASCII punctuation. Input is
// normalized first, so "the palazzo's floors" -> {the, palazzo, s, floors}.
std::vector<std::string> tokenize(std::string_view text);

// tokenize() minus stopwords, deduplicated, order of first occurrence.
std::vector<std::string> content_token_set(std::string_view text);

// Plain whitespace split of an already-rendered string (answer lengths).
std::size_t whitespace_token_count(std::string_view text);

// Fixed 50-word English stopword list shipped with the repo.
const std::vector<std::string> &stopwords();
bool is_stopword(std::string_view token);

} // namespace pasta
