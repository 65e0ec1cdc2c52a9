#include "pasta/table.hpp"

#include "pasta/decimal.hpp"
#include "pasta/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace pasta {

const char *to_string(ColumnKind kind) {
    return kind == ColumnKind::Numeric ? "numeric" : "text";
}

Table classify_columns(Table table) {
    const std::size_t m = table.column_count();
    table.column_kinds.assign(m, ColumnKind::Text);
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t non_empty = 0;
        std::size_t parsed = 0;
        for (const auto &row : table.rows) {
            if (row[c].empty())
                continue;
            ++non_empty;
            if (parse_decimal(row[c]))
                ++parsed;
        }
        if (non_empty > 0 && parsed * 10 >= non_empty * 9)
            table.column_kinds[c] = ColumnKind::Numeric;
    }
    return table;
}

bool filter_pretrain_eligible(const Table &table, std::size_t max_cells) {
    if (table.headers.empty())
        return false;
    if (table.cell_count() > max_cells)
        return false;
    return std::find(table.column_kinds.begin(), table.column_kinds.end(),
                     ColumnKind::Numeric) != table.column_kinds.end();
}

std::vector<Table> sample_tables(const std::vector<Table> &tables,
                                 std::size_t k, std::uint64_t seed) {
    if (k > tables.size())
        throw std::invalid_argument(
            "sample_tables: k exceeds the number of tables");
    auto rng = rng_for_key(seed, "sample-tables");
    std::vector<Table> out;
    out.reserve(k);
    for (std::size_t idx : sample_indices(rng, tables.size(), k))
        out.push_back(tables[idx]);
    std::stable_sort(out.begin(), out.end(),
                     [](const Table &a, const Table &b) { return a.id < b.id; });
    return out;
}

} // namespace pasta
