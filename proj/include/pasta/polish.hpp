#pragma once

#include "pasta/generate.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pasta {

// Context-sensitive word candidates: the anchor appears in templates and is
// always its own first candidate, so "no better choice" keeps the sentence
// unchanged.
struct CandidateSet {
    std::string anchor;
    std::vector<std::string> candidates;
};

struct CandidateCatalog {
    std::vector<CandidateSet> sets;

    const CandidateSet *find(std::string_view anchor) const;
};

CandidateCatalog parse_candidate_sets_json(std::string_view json_text,
                                           const std::string &origin);
CandidateCatalog load_candidate_sets(const std::filesystem::path &path);
const CandidateCatalog &default_candidate_sets();

enum class ScorerKind { Lexicon, Remote };

struct ScorerBinding {
    ScorerKind kind = ScorerKind::Lexicon;
    std::string endpoint; // required for Remote
    std::chrono::milliseconds timeout{2000};
};

struct RemoteScorerError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PolishCounters {
    std::uint64_t polished = 0;
    std::uint64_t kept_anchor = 0;
    std::uint64_t remote_fallbacks = 0; // remote failures served by lexicon
    std::uint64_t skipped = 0;          // anchor not uniquely present
};

// Deterministic fallback scorer: a pure function of the sentence tokens and
// the candidate set (keyword map from header-ish tokens such as "age" to
// preferred comparatives).
std::vector<double> score_candidates_lexicon(std::string_view sentence,
                                             const CandidateSet &set);

struct RemoteScoreItem {
    std::string masked_sentence;
    std::vector<std::string> candidates;
};

// POSTs {"items":[{"masked_sentence","candidates"}]} to the endpoint and
// expects {"scores":[[number,...]]} with one finite score per candidate.
// Throws RemoteScorerError on timeout, non-2xx or malformed replies.
std::vector<std::vector<double>>
score_candidates_remote(const std::vector<RemoteScoreItem> &items,
                        const ScorerBinding &binding);

// Replaces the single occurrence of anchor in the sentence with the
// argmax-scored candidate (ties resolved by candidate order). With a remote
// binding, scoring failures fall back to the lexicon and are counted.
// Throws std::invalid_argument unless the anchor occurs exactly once.
std::string polish(const std::string &sentence, const std::string &anchor,
                   const CandidateSet &set, const ScorerBinding &binding,
                   PolishCounters *counters = nullptr);

// Pipeline entry: polishes every instantiation that carries a sensitive
// word, updating sentences and spans in place. Remote scoring is batched
// (order-preserving, at most 64 sentences per request). When strict is set
// a remote failure throws instead of falling back.
void polish_instantiations(std::vector<Instantiation> &instantiations,
                           const CandidateCatalog &catalog,
                           const ScorerBinding &binding,
                           PolishCounters &counters, bool strict = false);

} // namespace pasta
