#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pasta {

enum class ColumnKind { Numeric, Text };

const char *to_string(ColumnKind kind);

// Rectangular table: m headers, n rows of exactly m cells each, one kind
// per column once classify_columns has run. Header and cell text is stored
// in normalized form (see text.hpp).
struct Table {
    std::string id;
    std::string title; // empty when absent
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
    std::vector<ColumnKind> column_kinds;

    std::size_t column_count() const { return headers.size(); }
    std::size_t row_count() const { return rows.size(); }
    std::size_t cell_count() const { return headers.size() * rows.size(); }

    friend bool operator==(const Table &, const Table &) = default;
};

struct IngestReport {
    std::uint64_t total_seen = 0;
    std::uint64_t accepted = 0;
    std::map<std::string, std::uint64_t> rejected_by_reason;

    void reject(const std::string &reason) {
        ++total_seen;
        ++rejected_by_reason[reason];
    }
    void accept() {
        ++total_seen;
        ++accepted;
    }
};

// Assigns Numeric/Text kinds. A column is Numeric iff it has at least one
// non-empty cell and at least 90% of its non-empty cells parse as decimals.
Table classify_columns(Table table);

// Pre-training eligibility: headers present, at least one Numeric column,
// and at most max_cells cells.
bool filter_pretrain_eligible(const Table &table, std::size_t max_cells = 500);

// Uniform sample of k tables without replacement, deterministic for a given
// seed, returned sorted by table id. Throws std::invalid_argument when k
// exceeds the population.
std::vector<Table> sample_tables(const std::vector<Table> &tables,
                                 std::size_t k, std::uint64_t seed);

} // namespace pasta
