#pragma once

#include "pasta/generate.hpp"

#include <filesystem>
#include <optional>

namespace pasta {

inline constexpr const char *kMaskSentinel = "[MASK]";

// One training example: sentence S, its masked variant, the cloze answer
// (the text under the mask) with byte offsets into the sentence, and the
// linearized table.
struct ClozeExample {
    std::string id;
    OpType op_type = OpType::Filter;
    std::string table_id;
    std::string sentence;
    std::string masked_sentence;
    std::string answer;
    ByteSpan answer_span;
    std::string linearized_table;
};

// Masks the instantiation's target span (the [ANS] slot or the designated
// word, already retargeted by polishing). id / table_id / linearized_table
// are filled by the caller. Returns empty with a reason when the mask
// target cannot be located.
std::optional<ClozeExample> mask_answer(const Instantiation &inst,
                                        std::string *reject_reason = nullptr);

// "[Header] h1 | h2 [Row] c11 | c12 [Row] ..." with single spaces.
std::string linearize(const Table &table);

// JSONL writer; ordering is the caller's (table id, within-table index).
// Output bytes depend only on the examples. On I/O failure the partial
// file is removed and IoError is thrown.
std::uint64_t emit_corpus(const std::vector<ClozeExample> &examples,
                          const std::filesystem::path &path);

std::string to_jsonl_line(const ClozeExample &example);
std::optional<ClozeExample> parse_jsonl_line(const std::string &line);

struct TypeStats {
    std::uint64_t count = 0;
    double share = 0.0;
    double mean_answer_tokens = 0.0;
};

struct CorpusStats {
    std::map<OpType, TypeStats> per_type;
    std::uint64_t total = 0;
};

CorpusStats corpus_stats(const std::filesystem::path &path);
CorpusStats corpus_stats(const std::vector<ClozeExample> &examples);
std::string stats_to_json(const CorpusStats &stats);

} // namespace pasta
