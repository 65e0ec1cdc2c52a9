#include "pasta/verify.hpp"

#include "pasta/rng.hpp"

#include <sstream>

namespace pasta {

namespace {

const char *const kWordPool[] = {
    "night", "moves",  "broken", "arrow", "team",  "alpha", "beta",
    "delta", "omega",  "north",  "south", "east",  "west",  "river",
    "stone", "italy",  "spain",  "japan", "chile", "total"};

const char *const kHeaderPool[] = {
    "score",        "team",     "viewers",       "points",   "rank",
    "year",         "nation",   "total score",   "name",     "wins",
    "viewers (m)",  "c1",       "no. of floors", "says \"hi\"", "age"};

std::string random_word(std::mt19937_64 &rng) {
    return kWordPool[pick_index(rng, std::size(kWordPool))];
}

std::string random_text_cell(std::mt19937_64 &rng) {
    std::string out = random_word(rng);
    const std::size_t extra = pick_index(rng, 3);
    for (std::size_t i = 0; i < extra; ++i)
        out += " " + random_word(rng);
    return out;
}

std::string random_number_cell(std::mt19937_64 &rng) {
    std::ostringstream oss;
    if (pick_index(rng, 5) == 0)
        oss << '-';
    oss << uniform_below(rng, 10000);
    switch (pick_index(rng, 4)) {
    case 0:
        break;
    case 1:
        oss << '.' << uniform_below(rng, 10);
        break;
    case 2:
        oss << '.' << uniform_below(rng, 100);
        break;
    default:
        oss << '.' << uniform_below(rng, 1000);
        break;
    }
    return oss.str();
}

} // namespace

Table random_table(std::mt19937_64 &rng, std::size_t max_rows,
                   std::size_t max_cols) {
    Table table;
    table.id = "rt" + std::to_string(rng() % 100000);
    const std::size_t m = 1 + pick_index(rng, max_cols);
    const std::size_t n = 1 + pick_index(rng, max_rows);

    std::vector<bool> numeric_intent(m);
    std::vector<bool> dirty(m);
    for (std::size_t c = 0; c < m; ++c) {
        // headers may repeat; resolution picks the first match
        table.headers.push_back(
            kHeaderPool[pick_index(rng, std::size(kHeaderPool))]);
        numeric_intent[c] = pick_index(rng, 2) == 0;
        dirty[c] = pick_index(rng, 5) == 0;
    }

    for (std::size_t r = 0; r < n; ++r) {
        std::vector<std::string> row;
        for (std::size_t c = 0; c < m; ++c) {
            std::string cell;
            if (numeric_intent[c]) {
                cell = random_number_cell(rng);
                if (dirty[c] && pick_index(rng, 6) == 0)
                    cell = pick_index(rng, 2) == 0 ? "" : random_word(rng);
            } else {
                cell = random_text_cell(rng);
                if (pick_index(rng, 8) == 0)
                    cell = "";
            }
            row.push_back(std::move(cell));
        }
        table.rows.push_back(std::move(row));
    }
    return classify_columns(std::move(table));
}

namespace {

std::string random_column_ref(std::mt19937_64 &rng, const Table &table) {
    if (pick_index(rng, 30) == 0)
        return "no such column";
    return table.headers[pick_index(rng, table.column_count())];
}

std::string random_literal(std::mt19937_64 &rng, const Table &table,
                           const std::string &column) {
    const std::size_t kind = pick_index(rng, 10);
    if (kind < 6) {
        // a cell drawn from the referenced column when it exists
        for (std::size_t c = 0; c < table.column_count(); ++c) {
            if (table.headers[c] == column)
                return table.rows[pick_index(rng, table.row_count())][c];
        }
    }
    if (kind < 8)
        return random_number_cell(rng);
    return random_text_cell(rng);
}

AggFn random_agg(std::mt19937_64 &rng) {
    switch (pick_index(rng, 5)) {
    case 0: return AggFn::Max;
    case 1: return AggFn::Min;
    case 2: return AggFn::Sum;
    case 3: return AggFn::Avg;
    default: return AggFn::CountDistinct;
    }
}

} // namespace

QueryPlan random_plan(std::mt19937_64 &rng, const Table &table) {
    QueryPlan plan;
    const std::size_t shape = pick_index(rng, 10);
    if (shape < 4) {
        plan.projection.agg = random_agg(rng);
        plan.projection.column = random_column_ref(rng, table);
    } else {
        plan.projection.column = random_column_ref(rng, table);
        plan.distinct = pick_index(rng, 5) == 0;
    }

    if (pick_index(rng, 10) < 7) {
        Predicate pred;
        pred.column = random_column_ref(rng, table);
        switch (pick_index(rng, 3)) {
        case 0: pred.op = CmpOp::Eq; break;
        case 1: pred.op = CmpOp::Lt; break;
        default: pred.op = CmpOp::Gt; break;
        }
        if (pick_index(rng, 10) < 3) {
            auto sub = std::make_shared<QueryPlan>();
            sub->projection.agg = random_agg(rng);
            sub->projection.column = random_column_ref(rng, table);
            if (pick_index(rng, 10) < 3) {
                Predicate inner;
                inner.column = random_column_ref(rng, table);
                inner.op = pick_index(rng, 2) == 0 ? CmpOp::Lt : CmpOp::Gt;
                inner.literal = random_literal(rng, table, inner.column);
                sub->predicate = std::move(inner);
            }
            pred.subquery = std::move(sub);
        } else {
            pred.literal = random_literal(rng, table, pred.column);
        }
        plan.predicate = std::move(pred);
    }

    if (!plan.projection.agg) {
        if (pick_index(rng, 2) == 0) {
            OrderBy ob;
            ob.column = random_column_ref(rng, table);
            ob.dir = pick_index(rng, 2) == 0 ? SortDir::Asc : SortDir::Desc;
            plan.order_by = ob;
        }
        if (pick_index(rng, 2) == 0)
            plan.limit = 1 + uniform_below(rng, table.row_count() + 1);
    }
    return plan;
}

namespace {

std::string describe_table(const Table &table) {
    std::ostringstream oss;
    oss << "table " << table.id << " (" << table.column_count() << "x"
        << table.row_count() << ")\n";
    for (std::size_t c = 0; c < table.column_count(); ++c)
        oss << (c ? " | " : "  ") << table.headers[c] << " ["
            << to_string(table.column_kinds[c]) << "]";
    oss << '\n';
    for (const auto &row : table.rows) {
        oss << " ";
        for (std::size_t c = 0; c < row.size(); ++c)
            oss << (c ? " | '" : " '") << row[c] << "'";
        oss << '\n';
    }
    return oss.str();
}

std::string describe_result(const char *label, bool threw,
                            const QueryResult &result,
                            const std::string &error) {
    std::ostringstream oss;
    oss << label << ": ";
    if (threw) {
        oss << "error (" << error << ")";
        return oss.str();
    }
    oss << (result.kind == ResultKind::AggregateScalar ? "scalar"
                                                       : "cell-set")
        << " {";
    for (std::size_t i = 0; i < result.values.size(); ++i)
        oss << (i ? ", '" : "'") << result.values[i] << "'";
    oss << "}";
    return oss.str();
}

} // namespace

OracleReport run_oracle_verification(std::uint64_t trials, std::uint64_t seed,
                                     const Evaluator &candidate) {
    OracleReport report;
    auto rng = rng_for_key(seed, "verify-oracle");
    for (std::uint64_t t = 0; t < trials; ++t) {
        ++report.trials;
        const Table table = random_table(rng);
        const QueryPlan plan = random_plan(rng, table);
        const std::string text = render_query(plan);

        bool round_trip = false;
        try {
            round_trip = parse_query(text) == plan;
        } catch (const QueryParseError &) {
        }
        if (!round_trip && report.round_trip_ok) {
            report.round_trip_ok = false;
            report.first_mismatch =
                "round trip failed for: " + text + "\n" +
                describe_table(table);
        }

        QueryResult got, want;
        bool got_threw = false, want_threw = false;
        std::string got_error, want_error;
        try {
            got = candidate(plan, table);
        } catch (const EvalError &e) {
            got_threw = true;
            got_error = e.what();
        }
        try {
            want = oracle_evaluate(plan, table);
        } catch (const EvalError &e) {
            want_threw = true;
            want_error = e.what();
        }

        const bool agree = got_threw == want_threw &&
                           (got_threw || (got.kind == want.kind &&
                                          got.values == want.values));
        if (agree) {
            ++report.agreements;
            if (got_threw)
                ++report.errors_agreed;
        } else if (report.first_mismatch.empty()) {
            std::ostringstream oss;
            oss << "trial " << t << ": " << text << '\n'
                << describe_table(table)
                << describe_result("evaluate", got_threw, got, got_error)
                << '\n'
                << describe_result("oracle", want_threw, want, want_error);
            report.first_mismatch = oss.str();
        }
    }
    return report;
}

} // namespace pasta
