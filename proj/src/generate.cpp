#include "pasta/generate.hpp"

#include "pasta/decimal.hpp"
#include "pasta/query.hpp"
#include "pasta/rng.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pasta {

void GenStats::merge(const GenStats &other) {
    slots += other.slots;
    attempts += other.attempts;
    emitted += other.emitted;
    abandoned_slots += other.abandoned_slots;
    for (const auto &[reason, count] : other.discards)
        discards[reason] += count;
}

std::map<OpType, double> default_type_weights() {
    return {{OpType::Filter, 0.06},      {OpType::Superlative, 0.27},
            {OpType::Aggregation, 0.30}, {OpType::Comparative, 0.27},
            {OpType::Ordinal, 0.08},     {OpType::Unique, 0.02}};
}

namespace {

void count_discard(GenStats *stats, const char *reason) {
    if (stats)
        ++stats->discards[reason];
}

// Columns eligible for a column slot: matching kind, not yet bound, header
// non-empty and not shadowed by an earlier duplicate header (references
// resolve to the first match).
std::vector<std::size_t> eligible_columns(const Table &table,
                                          const SlotConstraint &sc,
                                          const std::set<std::size_t> &bound) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < table.column_count(); ++c) {
        if (bound.count(c) || table.headers[c].empty())
            continue;
        bool shadowed = false;
        for (std::size_t earlier = 0; earlier < c && !shadowed; ++earlier)
            shadowed = table.headers[earlier] == table.headers[c];
        if (shadowed)
            continue;
        if (sc.kind == SlotConstraint::Kind::NumericColumn &&
            table.column_kinds[c] != ColumnKind::Numeric)
            continue;
        if (sc.kind == SlotConstraint::Kind::TextColumn &&
            table.column_kinds[c] != ColumnKind::Text)
            continue;
        out.push_back(c);
    }
    return out;
}

std::size_t count_eq_matches(const Table &table, std::size_t col,
                             const std::string &value) {
    const bool numeric = table.column_kinds[col] == ColumnKind::Numeric;
    const auto literal = numeric ? parse_decimal(value) : std::nullopt;
    std::size_t count = 0;
    for (const auto &row : table.rows) {
        const std::string &cell = row[col];
        bool match = false;
        if (literal) {
            if (auto cv = parse_decimal(cell))
                match = compare(*cv, *literal) == 0;
            else
                match = cell == value;
        } else {
            match = cell == value;
        }
        if (match)
            ++count;
    }
    return count;
}

// Template-shape facts needed for value eligibility and validity rules,
// derived from the bound plan.
struct PlanShape {
    std::optional<CmpOp> predicate_op;
    bool predicate_is_subquery = false;
    std::string predicate_column;
    bool has_order = false;
    bool order_desc = false;
    std::optional<AggFn> agg;
    std::string ranked_column; // column whose order decides the answer
    int target_rank = 0;       // 1 = extremum, 2 = second
    bool rank_from_top = false;
};

PlanShape analyze_plan(const QueryPlan &plan) {
    PlanShape shape;
    shape.agg = plan.projection.agg;
    if (plan.predicate) {
        shape.predicate_op = plan.predicate->op;
        shape.predicate_is_subquery = plan.predicate->subquery != nullptr;
        shape.predicate_column = plan.predicate->column;
    }
    if (plan.order_by) {
        shape.has_order = true;
        shape.order_desc = plan.order_by->dir == SortDir::Desc;
        shape.ranked_column = plan.order_by->column;
        shape.rank_from_top = shape.order_desc;
        shape.target_rank = shape.predicate_is_subquery ? 2 : 1;
    } else if (plan.projection.agg == AggFn::Max ||
               plan.projection.agg == AggFn::Min) {
        shape.ranked_column = plan.projection.column;
        shape.rank_from_top = plan.projection.agg == AggFn::Max;
        shape.target_rank = shape.predicate_is_subquery ? 2 : 1;
    }
    return shape;
}

// Strict uniqueness at ranks 1..k of the column ordering: each of the top k
// distinct values must be attained by exactly one row. Requires every cell
// to parse; empty/unparseable cells make the draw invalid.
bool ranks_unique(const Table &table, std::size_t col, int k, bool from_top) {
    std::vector<Decimal> values;
    values.reserve(table.row_count());
    for (const auto &row : table.rows) {
        auto d = parse_decimal(row[col]);
        if (!d)
            return false;
        values.push_back(*d);
    }
    std::sort(values.begin(), values.end(),
              [&](const Decimal &a, const Decimal &b) {
                  const int cmp = compare(a, b);
                  return from_top ? cmp > 0 : cmp < 0;
              });
    int rank = 0;
    std::size_t i = 0;
    while (i < values.size() && rank < k) {
        std::size_t j = i;
        while (j < values.size() && compare(values[j], values[i]) == 0)
            ++j;
        ++rank;
        if (j - i != 1)
            return false;
        i = j;
    }
    return rank == k;
}

std::string queue_key(std::size_t tmpl_index, const std::string &slot,
                      std::size_t col) {
    std::ostringstream oss;
    oss << tmpl_index << '|' << slot << '|' << col;
    return oss.str();
}

// Distinct cells of the column that can produce a valid instantiation for
// this slot, in first-occurrence order.
std::vector<std::string> eligible_values(const Table &table, std::size_t col,
                                         const PlanShape &shape,
                                         OpType op_type,
                                         const std::string &nl) {
    std::vector<std::string> distinct;
    for (const auto &row : table.rows) {
        const std::string &cell = row[col];
        if (cell.empty())
            continue;
        if (std::find(distinct.begin(), distinct.end(), cell) ==
            distinct.end())
            distinct.push_back(cell);
    }

    if (!shape.predicate_op)
        return distinct;

    std::vector<std::string> out;
    if (*shape.predicate_op == CmpOp::Eq) {
        const bool need_two = op_type == OpType::Aggregation &&
                              nl.find(" among ") != std::string::npos;
        for (const auto &v : distinct) {
            const std::size_t matches = count_eq_matches(table, col, v);
            const bool ok = op_type == OpType::Filter ? matches == 1
                                                      : matches >= (need_two ? 2 : 1);
            if (ok)
                out.push_back(v);
        }
        return out;
    }

    // Comparative: keep values with exactly one row strictly beyond them,
    // so the [ANS] entity is uniquely determined.
    std::vector<Decimal> cells;
    cells.reserve(table.row_count());
    for (const auto &row : table.rows) {
        auto d = parse_decimal(row[col]);
        if (!d)
            return {}; // comparison would be an evaluation error
        cells.push_back(*d);
    }
    for (const auto &v : distinct) {
        auto value = parse_decimal(v);
        if (!value)
            continue;
        std::size_t beyond = 0;
        for (const Decimal &cell : cells) {
            const int cmp = compare(cell, *value);
            if ((*shape.predicate_op == CmpOp::Gt && cmp > 0) ||
                (*shape.predicate_op == CmpOp::Lt && cmp < 0))
                ++beyond;
        }
        if (beyond == 1)
            out.push_back(v);
    }
    return out;
}

struct RenderedNl {
    std::string sentence;
    ByteSpan answer_span;
    std::optional<ByteSpan> word_span;      // mask word, when word-masked
    std::optional<ByteSpan> sensitive_span; // polish anchor
};

// Finds `word` as a whole space-separated token inside `segment` (a literal
// chunk of the template), returning its offset.
std::optional<std::size_t> find_word(const std::string &segment,
                                     const std::string &word) {
    std::size_t pos = 0;
    while (pos < segment.size()) {
        while (pos < segment.size() && segment[pos] == ' ')
            ++pos;
        std::size_t end = pos;
        while (end < segment.size() && segment[end] != ' ')
            ++end;
        if (segment.compare(pos, end - pos, word) == 0)
            return pos;
        pos = end;
    }
    return std::nullopt;
}

RenderedNl render_nl(const TemplatePair &tmpl,
                     const std::map<std::string, std::string> &bindings,
                     const std::string &answer) {
    RenderedNl out;
    const std::string &nl = tmpl.nl;
    std::size_t last = 0;
    auto emit_literal = [&](const std::string &segment) {
        const std::size_t base = out.sentence.size();
        if (!tmpl.mask_answer_slot && !out.word_span) {
            if (auto at = find_word(segment, tmpl.mask_word))
                out.word_span = ByteSpan{base + *at,
                                         base + *at + tmpl.mask_word.size()};
        }
        if (!tmpl.sensitive_word.empty() && !out.sensitive_span) {
            if (auto at = find_word(segment, tmpl.sensitive_word))
                out.sensitive_span =
                    ByteSpan{base + *at,
                             base + *at + tmpl.sensitive_word.size()};
        }
        out.sentence += segment;
    };
    for (const auto &ref : find_placeholders(nl)) {
        emit_literal(nl.substr(last, ref.pos - last));
        if (ref.name == "ANS") {
            out.answer_span.begin = out.sentence.size();
            out.sentence += answer;
            out.answer_span.end = out.sentence.size();
        } else {
            out.sentence += bindings.at(ref.name);
        }
        last = ref.pos + ref.len;
    }
    emit_literal(nl.substr(last));
    return out;
}

std::string bound_sql(const TemplatePair &tmpl,
                      const std::map<std::string, std::string> &bindings) {
    std::string out;
    std::size_t last = 0;
    for (const auto &ref : find_placeholders(tmpl.sql)) {
        out += tmpl.sql.substr(last, ref.pos - last);
        const std::string &value = bindings.at(ref.name);
        if (ref.name.rfind("Value", 0) == 0)
            out += render_string_literal(value);
        else
            out += render_column_ref(value);
        last = ref.pos + ref.len;
    }
    out += tmpl.sql.substr(last);
    return out;
}

std::optional<std::string> answer_from_result(const QueryResult &result) {
    if (result.values.size() != 1 || result.values.front().empty())
        return std::nullopt;
    return result.values.front();
}

// Per-type validity beyond what evaluation enforces. Guarantees exactly one
// correct cloze answer per sentence.
bool passes_validity(OpType op, const PlanShape &shape, const Table &table,
                     const QueryResult &result) {
    switch (op) {
    case OpType::Filter:
        return result.kind == ResultKind::CellSet &&
               result.values.size() == 1;
    case OpType::Comparative:
        return result.kind == ResultKind::CellSet &&
               result.values.size() == 1;
    case OpType::Superlative:
    case OpType::Ordinal: {
        if (shape.ranked_column.empty() || shape.target_rank == 0)
            return false;
        std::size_t col = table.column_count();
        for (std::size_t c = 0; c < table.column_count(); ++c) {
            if (table.headers[c] == shape.ranked_column) {
                col = c;
                break;
            }
        }
        if (col == table.column_count())
            return false;
        return ranks_unique(table, col, shape.target_rank,
                            shape.rank_from_top);
    }
    case OpType::Aggregation:
        // "among" phrasings additionally need >= 2 rows; the caller checks
        // that against the nl text before evaluation.
        return result.kind == ResultKind::AggregateScalar;
    case OpType::Unique:
        return table.row_count() >= 2;
    }
    return false;
}

} // namespace

std::optional<std::string> fill_answer(const std::string &bound_sql,
                                       const Table &table) {
    try {
        const QueryPlan plan = parse_query(bound_sql);
        return answer_from_result(evaluate(plan, table));
    } catch (const QueryParseError &) {
        return std::nullopt;
    } catch (const EvalError &) {
        return std::nullopt;
    }
}

std::optional<Instantiation>
instantiate(const TemplateCatalog &catalog, std::size_t tmpl_index,
            const Table &table, std::mt19937_64 &rng, TableGenState &state,
            GenStats *stats) {
    const TemplatePair &tmpl = catalog.templates.at(tmpl_index);
    if (stats)
        ++stats->attempts;

    // Bind column slots. Leftmost-flagged slots take the lowest eligible
    // index (subject-column heuristic); the rest draw uniformly.
    std::map<std::string, std::string> bindings;
    std::map<std::string, std::size_t> column_of;
    std::set<std::size_t> bound;
    for (const std::string &slot : tmpl.column_slots) {
        const SlotConstraint &sc = tmpl.slot_constraints.at(slot);
        const std::vector<std::size_t> eligible =
            eligible_columns(table, sc, bound);
        if (eligible.empty()) {
            count_discard(stats, "no-column-binding");
            return std::nullopt;
        }
        const std::size_t col = sc.bind_leftmost
                                    ? eligible.front()
                                    : eligible[pick_index(rng, eligible.size())];
        bound.insert(col);
        column_of[slot] = col;
        bindings[slot] = table.headers[col];
    }

    // Shape analysis works on the column-bound plan (value slots still
    // placeholders, substituted as inert literals).
    std::map<std::string, std::string> probe = bindings;
    for (const std::string &slot : tmpl.value_slots)
        probe[slot] = "<" + slot + ">";
    PlanShape shape;
    try {
        shape = analyze_plan(parse_query(bound_sql(tmpl, probe)));
    } catch (const QueryParseError &) {
        count_discard(stats, "template-sql-error");
        return std::nullopt;
    }

    // Whole-column "among" aggregations need at least two rows to talk about.
    if (tmpl.op_type == OpType::Aggregation &&
        tmpl.nl.find(" among ") != std::string::npos && table.row_count() < 2) {
        count_discard(stats, "validity");
        return std::nullopt;
    }

    // Bind value slots from per-(template, slot, column) queues: uniform
    // over valid distinct cells, without replacement within one table.
    for (const std::string &slot : tmpl.value_slots) {
        const SlotConstraint &sc = tmpl.slot_constraints.at(slot);
        const std::size_t col = column_of.at(sc.from_slot);
        const std::string key = queue_key(tmpl_index, slot, col);
        auto it = state.value_queues.find(key);
        if (it == state.value_queues.end()) {
            std::vector<std::string> values =
                eligible_values(table, col, shape, tmpl.op_type, tmpl.nl);
            shuffle_in_place(rng, values);
            it = state.value_queues.emplace(key, std::move(values)).first;
        }
        if (it->second.empty()) {
            count_discard(stats, "no-value-binding");
            return std::nullopt;
        }
        bindings[slot] = it->second.back();
        it->second.pop_back();
    }

    // Dedup identical bindings of the same template within one table.
    std::string signature = std::to_string(tmpl_index);
    for (const auto &[slot, value] : bindings)
        signature += '\x1f' + slot + '\x1e' + value;
    if (!state.emitted_signatures.insert(signature).second) {
        count_discard(stats, "duplicate");
        return std::nullopt;
    }

    const std::string sql = bound_sql(tmpl, bindings);
    QueryPlan plan;
    QueryResult result;
    try {
        plan = parse_query(sql);
        result = evaluate(plan, table);
    } catch (const QueryParseError &) {
        count_discard(stats, "sql-parse-error");
        return std::nullopt;
    } catch (const EvalError &) {
        count_discard(stats, "eval-error");
        return std::nullopt;
    }

    if (!passes_validity(tmpl.op_type, shape, table, result)) {
        count_discard(stats, "validity");
        return std::nullopt;
    }
    const auto answer = answer_from_result(result);
    if (!answer) {
        count_discard(stats, "empty-answer");
        return std::nullopt;
    }

    const RenderedNl rendered = render_nl(tmpl, bindings, *answer);
    if (!tmpl.mask_answer_slot && !rendered.word_span) {
        count_discard(stats, "mask-word-missing");
        return std::nullopt;
    }

    // Entailment guarantee: re-execute the bound SQL and require the
    // recorded answer byte-for-byte.
    const auto replay = fill_answer(sql, table);
    if (!replay || *replay != *answer) {
        count_discard(stats, "verify-failed");
        return std::nullopt;
    }

    Instantiation inst;
    inst.template_index = tmpl_index;
    inst.op_type = tmpl.op_type;
    inst.bindings = std::move(bindings);
    inst.sentence = rendered.sentence;
    inst.answer = *answer;
    inst.sql_text = sql;
    inst.answer_span = rendered.answer_span;
    inst.mask_answer_slot = tmpl.mask_answer_slot;
    if (tmpl.mask_answer_slot) {
        inst.mask_span = rendered.answer_span;
        inst.mask_word = *answer;
    } else {
        inst.mask_span = *rendered.word_span;
        inst.mask_word = tmpl.mask_word;
    }
    inst.sensitive_word = tmpl.sensitive_word;
    if (rendered.sensitive_span)
        inst.sensitive_span = *rendered.sensitive_span;
    return inst;
}

std::vector<Instantiation> generate_for_table(const Table &table,
                                              const TemplateCatalog &catalog,
                                              const GenerationConfig &config,
                                              GenStats *stats) {
    constexpr int kAttemptsPerTemplate = 2;

    auto rng = rng_for_key(config.seed, table.id);
    const std::size_t target =
        std::min(config.max_per_table, 2 * table.row_count());

    // Per-type cumulative thresholds in the pinned op-type order.
    std::vector<std::pair<OpType, double>> cumulative;
    double total = 0;
    for (OpType op : kAllOpTypes) {
        auto it = config.type_weights.find(op);
        const double w = it == config.type_weights.end() ? 0.0 : it->second;
        if (w < 0 || !std::isfinite(w))
            throw std::invalid_argument("type weights must be finite and >= 0");
        total += w;
        cumulative.emplace_back(op, total);
    }
    if (total <= 0)
        throw std::invalid_argument("type weights must not all be zero");

    TableGenState state;
    std::vector<Instantiation> out;
    for (std::size_t slot = 0; slot < target; ++slot) {
        if (stats)
            ++stats->slots;
        const double draw = uniform_unit(rng) * total;
        OpType op = cumulative.back().first;
        for (const auto &[candidate, threshold] : cumulative) {
            if (draw < threshold) {
                op = candidate;
                break;
            }
        }

        std::vector<std::size_t> order = catalog.by_type.at(op);
        shuffle_in_place(rng, order);
        bool filled = false;
        for (int round = 0; round < kAttemptsPerTemplate && !filled; ++round) {
            for (std::size_t tmpl_index : order) {
                auto inst =
                    instantiate(catalog, tmpl_index, table, rng, state, stats);
                if (inst) {
                    out.push_back(std::move(*inst));
                    filled = true;
                    break;
                }
            }
        }
        if (filled) {
            if (stats)
                ++stats->emitted;
        } else if (stats) {
            ++stats->abandoned_slots;
        }
    }
    return out;
}

} // namespace pasta
