#include "pasta/prep.hpp"

#include "pasta/cloze.hpp"
#include "pasta/rng.hpp"
#include "pasta/text.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace pasta {

namespace {

std::unordered_set<std::string> token_set(std::string_view text) {
    std::unordered_set<std::string> out;
    for (auto &tok : content_token_set(text))
        out.insert(std::move(tok));
    return out;
}

} // namespace

Table select_columns(const Statement &statement, const Table &table) {
    const auto statement_tokens = token_set(statement.text);
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < table.column_count(); ++c) {
        bool overlaps = false;
        for (const auto &tok : content_token_set(table.headers[c])) {
            if (statement_tokens.count(tok)) {
                overlaps = true;
                break;
            }
        }
        for (std::size_t r = 0; r < table.row_count() && !overlaps; ++r) {
            for (const auto &tok : content_token_set(table.rows[r][c])) {
                if (statement_tokens.count(tok)) {
                    overlaps = true;
                    break;
                }
            }
        }
        if (overlaps)
            keep.push_back(c);
    }
    if (keep.empty() || keep.size() == table.column_count())
        return table;

    Table out;
    out.id = table.id;
    out.title = table.title;
    for (std::size_t c : keep) {
        out.headers.push_back(table.headers[c]);
        if (c < table.column_kinds.size())
            out.column_kinds.push_back(table.column_kinds[c]);
    }
    out.rows.reserve(table.row_count());
    for (const auto &row : table.rows) {
        std::vector<std::string> cells;
        cells.reserve(keep.size());
        for (std::size_t c : keep)
            cells.push_back(row[c]);
        out.rows.push_back(std::move(cells));
    }
    return out;
}

RankedTable rank_rows(const Statement &statement, const Table &table) {
    const auto statement_tokens = token_set(statement.text);

    RankedTable ranked;
    ranked.base = table;
    std::vector<std::uint64_t> scores(table.row_count(), 0);
    for (std::size_t r = 0; r < table.row_count(); ++r) {
        std::unordered_set<std::string> row_tokens;
        for (const auto &cell : table.rows[r])
            for (auto &tok : content_token_set(cell))
                row_tokens.insert(std::move(tok));
        std::uint64_t p = 0;
        for (const auto &tok : row_tokens)
            if (statement_tokens.count(tok))
                ++p;
        scores[r] = p;
    }

    ranked.row_order.resize(table.row_count());
    for (std::size_t r = 0; r < table.row_count(); ++r)
        ranked.row_order[r] = r;
    std::stable_sort(ranked.row_order.begin(), ranked.row_order.end(),
                     [&](std::size_t a, std::size_t b) {
                         return scores[a] > scores[b];
                     });
    ranked.row_scores.reserve(table.row_count());
    for (std::size_t r : ranked.row_order)
        ranked.row_scores.push_back(scores[r]);
    return ranked;
}

PreparedRecord prepare_pair(const Statement &statement, const Table &table,
                            const PrepOptions &options) {
    Table selected =
        options.column_selection ? select_columns(statement, table) : table;

    std::vector<std::size_t> order;
    if (options.row_ranking) {
        order = rank_rows(statement, selected).row_order;
    } else {
        order.resize(selected.row_count());
        for (std::size_t r = 0; r < order.size(); ++r)
            order[r] = r;
    }

    const std::size_t m = selected.column_count();
    if (m == 0 || options.budget < m)
        throw BudgetError("budget too small: " +
                          std::to_string(options.budget) + " cells for " +
                          std::to_string(m) + " columns");
    const std::size_t keep_rows =
        std::min(order.size(), options.budget / m);

    Table truncated;
    truncated.id = selected.id;
    truncated.title = selected.title;
    truncated.headers = selected.headers;
    truncated.column_kinds = selected.column_kinds;
    for (std::size_t i = 0; i < keep_rows; ++i)
        truncated.rows.push_back(selected.rows[order[i]]);

    PreparedRecord record;
    record.id = statement.id;
    record.text = statement.text;
    record.label = statement.label;
    record.linearized_table = linearize(truncated);
    return record;
}

TriggerCatalog parse_trigger_catalog_json(std::string_view json_text,
                                          const std::string &origin) {
    nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("priority") ||
        !doc.contains("triggers"))
        throw std::runtime_error(origin +
                                 ": expected {\"priority\", \"triggers\"}");
    TriggerCatalog catalog;
    for (const auto &name : doc["priority"]) {
        auto op = optype_from_string(name.get<std::string>());
        if (!op)
            throw std::runtime_error(origin + ": unknown op type in priority");
        catalog.priority.push_back(*op);
    }
    for (const auto &[name, words] : doc["triggers"].items()) {
        auto op = optype_from_string(name);
        if (!op)
            throw std::runtime_error(origin + ": unknown op type '" + name +
                                     "'");
        for (const auto &w : words)
            catalog.triggers[*op].push_back(w.get<std::string>());
        if (catalog.triggers[*op].empty())
            throw std::runtime_error(origin + ": empty trigger list for '" +
                                     name + "'");
    }
    for (OpType op : kAllOpTypes) {
        if (!catalog.triggers.count(op))
            throw std::runtime_error(origin + ": missing trigger list for '" +
                                     std::string(to_string(op)) + "'");
        if (std::find(catalog.priority.begin(), catalog.priority.end(), op) ==
            catalog.priority.end())
            throw std::runtime_error(origin + ": '" +
                                     std::string(to_string(op)) +
                                     "' missing from priority order");
    }
    return catalog;
}

TriggerCatalog load_trigger_catalog(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open trigger catalog: " +
                                 path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_trigger_catalog_json(buffer.str(), path.string());
}

const TriggerCatalog &default_trigger_catalog() {
    static const TriggerCatalog catalog = parse_trigger_catalog_json(
        catalogs::default_triggers_json(), "builtin");
    return catalog;
}

std::optional<OpType> classify_statement(const std::string &text,
                                         const TriggerCatalog &catalog) {
    const std::vector<std::string> tokens = tokenize(text);
    for (OpType op : catalog.priority) {
        for (const auto &trigger : catalog.triggers.at(op)) {
            if (std::find(tokens.begin(), tokens.end(), trigger) !=
                tokens.end())
                return op;
        }
    }
    return std::nullopt;
}

std::map<OpType, std::vector<Statement>>
split_by_trigger(const std::vector<Statement> &statements,
                 const TriggerCatalog &catalog, std::size_t per_type,
                 std::uint64_t seed) {
    std::map<OpType, std::vector<std::size_t>> classified;
    for (std::size_t i = 0; i < statements.size(); ++i) {
        if (auto op = classify_statement(statements[i].text, catalog))
            classified[*op].push_back(i);
    }

    std::map<OpType, std::uint64_t> counts;
    std::string shortfalls;
    for (OpType op : kAllOpTypes) {
        const std::uint64_t have = classified[op].size();
        counts[op] = have;
        if (have < per_type) {
            if (!shortfalls.empty())
                shortfalls += ", ";
            shortfalls += std::string(to_string(op)) + " has " +
                          std::to_string(have) + " of " +
                          std::to_string(per_type);
        }
    }
    if (!shortfalls.empty())
        throw ShortfallError("not enough statements: " + shortfalls,
                             std::move(counts));

    std::map<OpType, std::vector<Statement>> out;
    for (OpType op : kAllOpTypes) {
        auto rng = rng_for_key(seed, std::string("split-") + to_string(op));
        const auto &pool = classified[op];
        std::vector<std::size_t> picked =
            sample_indices(rng, pool.size(), per_type);
        std::vector<std::size_t> chosen;
        chosen.reserve(picked.size());
        for (std::size_t p : picked)
            chosen.push_back(pool[p]);
        std::sort(chosen.begin(), chosen.end()); // original dataset order
        for (std::size_t index : chosen)
            out[op].push_back(statements[index]);
    }
    return out;
}

} // namespace pasta
