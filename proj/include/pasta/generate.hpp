#pragma once

#include "pasta/table.hpp"
#include "pasta/templates.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>

namespace pasta {

struct ByteSpan {
    std::size_t begin = 0;
    std::size_t end = 0; // half-open

    std::size_t size() const { return end - begin; }
    friend bool operator==(const ByteSpan &, const ByteSpan &) = default;
};

// A fully bound template: sentence with the executed answer spliced in,
// plus the bound SQL whose re-execution reproduces the answer byte-exactly.
struct Instantiation {
    std::size_t template_index = 0;
    OpType op_type = OpType::Filter;
    std::map<std::string, std::string> bindings; // slot -> header / cell text
    std::string sentence;
    std::string answer;   // rendered [ANS]
    std::string sql_text; // bound canonical SQL
    ByteSpan answer_span; // [ANS] inside sentence

    bool mask_answer_slot = true;
    ByteSpan mask_span; // span to mask (answer span or the mask word)
    std::string mask_word;

    std::string sensitive_word; // polish anchor, empty when none
    ByteSpan sensitive_span;
};

struct GenStats {
    std::uint64_t slots = 0;
    std::uint64_t attempts = 0;
    std::uint64_t emitted = 0;
    std::uint64_t abandoned_slots = 0;
    std::map<std::string, std::uint64_t> discards;

    void merge(const GenStats &other);
};

std::map<OpType, double> default_type_weights();

struct GenerationConfig {
    std::uint64_t seed = 0;
    std::size_t max_per_table = 100;
    std::map<OpType, double> type_weights = default_type_weights();
};

// Per-table generation state: value slots draw without replacement from
// per-(template, slot, column) queues, and emitted bindings are deduplicated.
struct TableGenState {
    std::map<std::string, std::vector<std::string>> value_queues;
    std::set<std::string> emitted_signatures;
};

// Executes the bound SQL and renders the [ANS] value. Empty when evaluation
// fails or the result is not exactly one non-empty value.
std::optional<std::string> fill_answer(const std::string &bound_sql,
                                       const Table &table);

// One instantiation attempt of catalog.templates[tmpl_index] against the
// table. Returns empty (with the reason counted in stats) when no legal
// binding exists or a per-type validity rule rejects the draw.
std::optional<Instantiation>
instantiate(const TemplateCatalog &catalog, std::size_t tmpl_index,
            const Table &table, std::mt19937_64 &rng, TableGenState &state,
            GenStats *stats = nullptr);

// Up to min(config.max_per_table, 2n) verified instantiations with the
// op-type mix drawn from config.type_weights. Deterministic in
// (table, catalog, config): the RNG is derived from (seed, table.id), so
// results do not depend on scheduling.
std::vector<Instantiation> generate_for_table(const Table &table,
                                              const TemplateCatalog &catalog,
                                              const GenerationConfig &config,
                                              GenStats *stats = nullptr);

} // namespace pasta
