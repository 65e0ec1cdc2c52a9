#include "pasta/cloze.hpp"

#include "pasta/ingest.hpp"
#include "pasta/text.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace pasta {

namespace {
using ordered_json = nlohmann::ordered_json;
}

std::optional<ClozeExample> mask_answer(const Instantiation &inst,
                                        std::string *reject_reason) {
    const ByteSpan span = inst.mask_span;
    if (span.end > inst.sentence.size() || span.begin >= span.end) {
        if (reject_reason)
            *reject_reason = "mask-span-out-of-range";
        return std::nullopt;
    }
    // The tracked span must still hold the mask word; polishing retargets
    // the span when it replaces the word, so a mismatch means the target
    // went missing.
    if (!inst.mask_answer_slot &&
        inst.sentence.compare(span.begin, span.size(), inst.mask_word) != 0) {
        if (reject_reason)
            *reject_reason = "mask-word-missing";
        return std::nullopt;
    }

    ClozeExample example;
    example.op_type = inst.op_type;
    example.sentence = inst.sentence;
    example.answer = inst.sentence.substr(span.begin, span.size());
    example.answer_span = span;
    example.masked_sentence = inst.sentence.substr(0, span.begin) +
                              kMaskSentinel + inst.sentence.substr(span.end);
    return example;
}

std::string linearize(const Table &table) {
    std::string out = "[Header]";
    for (std::size_t c = 0; c < table.headers.size(); ++c) {
        out += c == 0 ? " " : " | ";
        out += table.headers[c];
    }
    for (const auto &row : table.rows) {
        out += " [Row]";
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += c == 0 ? " " : " | ";
            out += row[c];
        }
    }
    return out;
}

std::string to_jsonl_line(const ClozeExample &example) {
    ordered_json record;
    record["id"] = example.id;
    record["op_type"] = to_string(example.op_type);
    record["table_id"] = example.table_id;
    record["sentence"] = example.sentence;
    record["masked_sentence"] = example.masked_sentence;
    record["answer"] = example.answer;
    record["answer_span"] = {example.answer_span.begin,
                             example.answer_span.end};
    record["linearized_table"] = example.linearized_table;
    return record.dump();
}

std::optional<ClozeExample> parse_jsonl_line(const std::string &line) {
    nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object())
        return std::nullopt;
    ClozeExample example;
    example.id = record.value("id", "");
    auto op = optype_from_string(record.value("op_type", ""));
    if (!op)
        return std::nullopt;
    example.op_type = *op;
    example.table_id = record.value("table_id", "");
    example.sentence = record.value("sentence", "");
    example.masked_sentence = record.value("masked_sentence", "");
    example.answer = record.value("answer", "");
    if (record.contains("answer_span") && record["answer_span"].is_array() &&
        record["answer_span"].size() == 2) {
        example.answer_span.begin = record["answer_span"][0].get<std::size_t>();
        example.answer_span.end = record["answer_span"][1].get<std::size_t>();
    }
    example.linearized_table = record.value("linearized_table", "");
    return example;
}

std::uint64_t emit_corpus(const std::vector<ClozeExample> &examples,
                          const std::filesystem::path &path) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open corpus for writing: " + path.string());
    std::uint64_t written = 0;
    for (const auto &example : examples) {
        out << to_jsonl_line(example) << '\n';
        if (!out) {
            out.close();
            std::error_code ec;
            std::filesystem::remove(path, ec);
            throw IoError("failed writing corpus: " + path.string());
        }
        ++written;
    }
    if (!out.flush()) {
        out.close();
        std::error_code ec;
        std::filesystem::remove(path, ec);
        throw IoError("failed writing corpus: " + path.string());
    }
    return written;
}

CorpusStats corpus_stats(const std::vector<ClozeExample> &examples) {
    CorpusStats stats;
    std::map<OpType, std::uint64_t> token_sums;
    for (const auto &example : examples) {
        ++stats.per_type[example.op_type].count;
        token_sums[example.op_type] +=
            whitespace_token_count(example.answer);
        ++stats.total;
    }
    for (auto &[op, ts] : stats.per_type) {
        ts.share = stats.total == 0
                       ? 0.0
                       : static_cast<double>(ts.count) /
                             static_cast<double>(stats.total);
        ts.mean_answer_tokens =
            ts.count == 0 ? 0.0
                          : static_cast<double>(token_sums[op]) /
                                static_cast<double>(ts.count);
    }
    return stats;
}

CorpusStats corpus_stats(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open corpus: " + path.string());
    std::vector<ClozeExample> examples;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        auto example = parse_jsonl_line(line);
        if (!example)
            throw IoError("bad corpus record at " + path.string() + ":" +
                          std::to_string(line_no));
        examples.push_back(std::move(*example));
    }
    return corpus_stats(examples);
}

std::string stats_to_json(const CorpusStats &stats) {
    ordered_json doc;
    doc["total"] = stats.total;
    ordered_json per_type = ordered_json::object();
    for (OpType op : kAllOpTypes) {
        auto it = stats.per_type.find(op);
        ordered_json entry;
        entry["count"] = it == stats.per_type.end() ? 0 : it->second.count;
        entry["share"] = it == stats.per_type.end() ? 0.0 : it->second.share;
        entry["mean_answer_tokens"] =
            it == stats.per_type.end() ? 0.0 : it->second.mean_answer_tokens;
        per_type[to_string(op)] = std::move(entry);
    }
    doc["per_type"] = std::move(per_type);
    return doc.dump(2);
}

} // namespace pasta
