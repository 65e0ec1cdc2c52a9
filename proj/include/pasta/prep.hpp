#pragma once

#include "pasta/table.hpp"
#include "pasta/templates.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pasta {

struct Statement {
    std::string id;
    std::string text;
    nlohmann::json label; // passed through untouched; null when absent
    std::string table_id;
};

// Keeps the columns whose header or cells share at least one non-stopword
// token with the statement; keeps everything when nothing overlaps. Row
// count is never changed.
Table select_columns(const Statement &statement, const Table &table);

// Row relevance p_i = |row token set ∩ statement token set| after stopword
// removal. row_order lists row indices sorted by descending score, stable;
// row_scores is parallel to row_order (non-increasing).
struct RankedTable {
    Table base;
    std::vector<std::size_t> row_order;
    std::vector<std::uint64_t> row_scores;
};

RankedTable rank_rows(const Statement &statement, const Table &table);

struct PrepOptions {
    std::size_t budget = 500; // max cells after truncation
    bool column_selection = true;
    bool row_ranking = true;
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreparedRecord {
    std::string id;
    std::string text;
    nlohmann::json label;
    std::string linearized_table;
};

// select -> rank -> truncate to the first floor(budget / m) rows ->
// linearize. Throws BudgetError when not even one row fits.
PreparedRecord prepare_pair(const Statement &statement, const Table &table,
                            const PrepOptions &options);

struct TriggerCatalog {
    std::vector<OpType> priority; // highest first
    std::map<OpType, std::vector<std::string>> triggers;
};

TriggerCatalog parse_trigger_catalog_json(std::string_view json_text,
                                          const std::string &origin);
TriggerCatalog load_trigger_catalog(const std::filesystem::path &path);
const TriggerCatalog &default_trigger_catalog();

// Highest-priority op type whose trigger occurs as a whole token; empty
// when no trigger matches.
std::optional<OpType> classify_statement(const std::string &text,
                                         const TriggerCatalog &catalog);

struct ShortfallError : std::runtime_error {
    ShortfallError(std::string message,
                   std::map<OpType, std::uint64_t> have_counts)
        : std::runtime_error(std::move(message)),
          counts(std::move(have_counts)) {}
    std::map<OpType, std::uint64_t> counts;
};

// Exactly per_type statements for each of the six op types, sampled
// deterministically, pairwise disjoint (each statement classifies to one
// type). Throws ShortfallError listing per-type counts when some type has
// too few classified statements.
std::map<OpType, std::vector<Statement>>
split_by_trigger(const std::vector<Statement> &statements,
                 const TriggerCatalog &catalog, std::size_t per_type,
                 std::uint64_t seed);

} // namespace pasta
