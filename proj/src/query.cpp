#include "pasta/query.hpp"

#include "pasta/decimal.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace pasta {

bool operator==(const Predicate &a, const Predicate &b) {
    if (a.column != b.column || a.op != b.op)
        return false;
    if (static_cast<bool>(a.subquery) != static_cast<bool>(b.subquery))
        return false;
    if (a.subquery)
        return *a.subquery == *b.subquery;
    return a.literal == b.literal;
}

bool operator==(const QueryPlan &a, const QueryPlan &b) {
    return a.projection == b.projection && a.predicate == b.predicate &&
           a.order_by == b.order_by && a.limit == b.limit &&
           a.distinct == b.distinct;
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

namespace {

enum class TokKind { Word, QuotedIdent, StringLit, Number, Symbol, End };

struct Token {
    TokKind kind = TokKind::End;
    std::string text;  // unescaped content for idents/strings
    std::string upper; // upper-cased Word text for keyword matching
    std::size_t pos = 0;
};

struct Lexer {
    std::string_view src;
    std::size_t i = 0;

    [[noreturn]] void fail(const std::string &msg, std::size_t pos) const {
        throw QueryParseError(msg, pos);
    }

    Token next() {
        while (i < src.size() &&
               std::isspace(static_cast<unsigned char>(src[i])))
            ++i;
        Token tok;
        tok.pos = i;
        if (i >= src.size())
            return tok;
        const char c = src[i];
        if (c == '(' || c == ')' || c == '=' || c == '<' || c == '>' ||
            c == '*') {
            tok.kind = TokKind::Symbol;
            tok.text = std::string(1, c);
            ++i;
            return tok;
        }
        if (c == '"') {
            ++i;
            tok.kind = TokKind::QuotedIdent;
            while (true) {
                if (i >= src.size())
                    fail("unterminated quoted identifier", tok.pos);
                if (src[i] == '"') {
                    if (i + 1 < src.size() && src[i + 1] == '"') {
                        tok.text.push_back('"');
                        i += 2;
                        continue;
                    }
                    ++i;
                    break;
                }
                tok.text.push_back(src[i++]);
            }
            if (tok.text.empty())
                fail("empty quoted identifier", tok.pos);
            return tok;
        }
        if (c == '\'') {
            ++i;
            tok.kind = TokKind::StringLit;
            while (true) {
                if (i >= src.size())
                    fail("unterminated string literal", tok.pos);
                if (src[i] == '\'') {
                    if (i + 1 < src.size() && src[i + 1] == '\'') {
                        tok.text.push_back('\'');
                        i += 2;
                        continue;
                    }
                    ++i;
                    break;
                }
                tok.text.push_back(src[i++]);
            }
            return tok;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            tok.kind = TokKind::Number;
            while (i < src.size() &&
                   (std::isdigit(static_cast<unsigned char>(src[i])) ||
                    src[i] == '.'))
                tok.text.push_back(src[i++]);
            return tok;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            tok.kind = TokKind::Word;
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) ||
                    src[i] == '_'))
                tok.text.push_back(src[i++]);
            tok.upper = tok.text;
            std::transform(tok.upper.begin(), tok.upper.end(),
                           tok.upper.begin(), [](unsigned char ch) {
                               return static_cast<char>(std::toupper(ch));
                           });
            return tok;
        }
        // '[' outside quotes means a template placeholder was never bound
        if (c == '[')
            fail("unresolved placeholder", i);
        fail("unexpected character '" + std::string(1, c) + "'", i);
    }
};

const char *const kKeywords[] = {"SELECT", "FROM",  "WHERE", "ORDER",
                                 "BY",     "ASC",   "DESC",  "LIMIT",
                                 "MAX",    "MIN",   "SUM",   "AVG",
                                 "COUNT",  "DISTINCT", "T"};

bool is_keyword(const std::string &upper) {
    for (const char *k : kKeywords)
        if (upper == k)
            return true;
    return false;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct Parser {
    Lexer lex;
    Token cur;

    explicit Parser(std::string_view text) : lex{text} { cur = lex.next(); }

    [[noreturn]] void fail(const std::string &msg) const {
        throw QueryParseError(msg, cur.pos);
    }

    void advance() { cur = lex.next(); }

    bool at_keyword(const char *kw) const {
        return cur.kind == TokKind::Word && cur.upper == kw;
    }

    void expect_keyword(const char *kw) {
        if (!at_keyword(kw))
            fail(std::string("expected ") + kw);
        advance();
    }

    void expect_symbol(char sym) {
        if (cur.kind != TokKind::Symbol || cur.text[0] != sym)
            fail(std::string("expected '") + sym + "'");
        advance();
    }

    std::string parse_column() {
        if (cur.kind == TokKind::QuotedIdent) {
            std::string name = cur.text;
            advance();
            return name;
        }
        if (cur.kind == TokKind::Word && !is_keyword(cur.upper)) {
            std::string name = cur.text;
            advance();
            return name;
        }
        fail("expected column name");
    }

    std::optional<AggFn> parse_agg_keyword() {
        if (at_keyword("MAX"))
            return AggFn::Max;
        if (at_keyword("MIN"))
            return AggFn::Min;
        if (at_keyword("SUM"))
            return AggFn::Sum;
        if (at_keyword("AVG"))
            return AggFn::Avg;
        return std::nullopt;
    }

    void parse_projection(QueryPlan &plan) {
        if (auto agg = parse_agg_keyword()) {
            advance();
            expect_symbol('(');
            plan.projection.agg = *agg;
            plan.projection.column = parse_column();
            expect_symbol(')');
            return;
        }
        if (at_keyword("COUNT")) {
            advance();
            expect_symbol('(');
            expect_keyword("DISTINCT");
            plan.projection.agg = AggFn::CountDistinct;
            plan.projection.column = parse_column();
            expect_symbol(')');
            return;
        }
        if (at_keyword("DISTINCT")) {
            advance();
            plan.distinct = true;
        }
        plan.projection.column = parse_column();
    }

    Predicate parse_where(int depth) {
        Predicate pred;
        pred.column = parse_column();
        if (cur.kind != TokKind::Symbol ||
            (cur.text[0] != '=' && cur.text[0] != '<' && cur.text[0] != '>'))
            fail("expected comparison operator");
        pred.op = cur.text[0] == '=' ? CmpOp::Eq
                  : cur.text[0] == '<' ? CmpOp::Lt
                                       : CmpOp::Gt;
        advance();
        if (cur.kind == TokKind::Symbol && cur.text[0] == '(') {
            if (depth >= 1)
                fail("subqueries cannot nest");
            const std::size_t open_pos = cur.pos;
            advance();
            auto sub = std::make_shared<QueryPlan>(parse_query_body(depth + 1));
            if (!sub->projection.agg)
                throw QueryParseError("subquery must be an aggregate",
                                      open_pos);
            pred.subquery = std::move(sub);
            expect_symbol(')');
            return pred;
        }
        if (cur.kind == TokKind::StringLit || cur.kind == TokKind::Number) {
            pred.literal = cur.text;
            advance();
            return pred;
        }
        fail("expected literal or subquery");
    }

    QueryPlan parse_query_body(int depth) {
        QueryPlan plan;
        expect_keyword("SELECT");
        if (cur.kind == TokKind::Symbol && cur.text[0] == '*')
            fail("'*' is not part of the query subset");
        parse_projection(plan);
        expect_keyword("FROM");
        if (!at_keyword("T"))
            fail("expected table name T");
        advance();
        if (at_keyword("WHERE")) {
            advance();
            plan.predicate = parse_where(depth);
        }
        if (at_keyword("ORDER")) {
            const std::size_t order_pos = cur.pos;
            advance();
            expect_keyword("BY");
            OrderBy ob;
            ob.column = parse_column();
            if (at_keyword("ASC")) {
                ob.dir = SortDir::Asc;
                advance();
            } else if (at_keyword("DESC")) {
                ob.dir = SortDir::Desc;
                advance();
            } else {
                fail("expected ASC or DESC");
            }
            if (plan.projection.agg)
                throw QueryParseError(
                    "aggregate projection cannot combine with ORDER BY",
                    order_pos);
            plan.order_by = ob;
        }
        if (at_keyword("LIMIT")) {
            const std::size_t limit_pos = cur.pos;
            advance();
            if (cur.kind != TokKind::Number)
                fail("expected LIMIT count");
            std::uint64_t value = 0;
            for (char c : cur.text) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    fail("expected integer LIMIT count");
                value = value * 10 + static_cast<std::uint64_t>(c - '0');
            }
            if (value == 0)
                throw QueryParseError("LIMIT must be positive", limit_pos);
            if (plan.projection.agg)
                throw QueryParseError(
                    "aggregate projection cannot combine with LIMIT",
                    limit_pos);
            plan.limit = value;
            advance();
        }
        return plan;
    }
};

} // namespace

QueryPlan parse_query(std::string_view text) {
    Parser parser(text);
    QueryPlan plan = parser.parse_query_body(0);
    if (parser.cur.kind != TokKind::End)
        throw QueryParseError("trailing input after query", parser.cur.pos);
    return plan;
}

// ---------------------------------------------------------------------------
// Canonical rendering
// ---------------------------------------------------------------------------

std::string render_column_ref(std::string_view name) {
    bool bare = !name.empty();
    for (std::size_t k = 0; k < name.size() && bare; ++k) {
        const char c = name[k];
        const bool ok = (c >= 'a' && c <= 'z') || c == '_' ||
                        (k > 0 && c >= '0' && c <= '9');
        bare = ok;
    }
    if (bare) {
        std::string upper(name);
        std::transform(upper.begin(), upper.end(), upper.begin(),
                       [](unsigned char c) {
                           return static_cast<char>(std::toupper(c));
                       });
        bare = !is_keyword(upper);
    }
    if (bare)
        return std::string(name);
    std::string out = "\"";
    for (char c : name) {
        out.push_back(c);
        if (c == '"')
            out.push_back('"');
    }
    out.push_back('"');
    return out;
}

std::string render_string_literal(std::string_view value) {
    std::string out = "'";
    for (char c : value) {
        out.push_back(c);
        if (c == '\'')
            out.push_back('\'');
    }
    out.push_back('\'');
    return out;
}

namespace {

const char *agg_name(AggFn fn) {
    switch (fn) {
    case AggFn::Max: return "MAX";
    case AggFn::Min: return "MIN";
    case AggFn::Sum: return "SUM";
    case AggFn::Avg: return "AVG";
    case AggFn::CountDistinct: return "COUNT";
    }
    return "";
}

} // namespace

std::string render_query(const QueryPlan &plan) {
    std::string out = "SELECT ";
    if (plan.projection.agg) {
        if (*plan.projection.agg == AggFn::CountDistinct)
            out += "COUNT(DISTINCT " +
                   render_column_ref(plan.projection.column) + ")";
        else
            out += std::string(agg_name(*plan.projection.agg)) + "(" +
                   render_column_ref(plan.projection.column) + ")";
    } else {
        if (plan.distinct)
            out += "DISTINCT ";
        out += render_column_ref(plan.projection.column);
    }
    out += " FROM T";
    if (plan.predicate) {
        const Predicate &p = *plan.predicate;
        out += " WHERE " + render_column_ref(p.column);
        out += p.op == CmpOp::Eq ? " = " : p.op == CmpOp::Lt ? " < " : " > ";
        if (p.subquery)
            out += "( " + render_query(*p.subquery) + " )";
        else
            out += render_string_literal(p.literal);
    }
    if (plan.order_by) {
        out += " ORDER BY " + render_column_ref(plan.order_by->column);
        out += plan.order_by->dir == SortDir::Asc ? " ASC" : " DESC";
    }
    if (plan.limit)
        out += " LIMIT " + std::to_string(*plan.limit);
    return out;
}

// ---------------------------------------------------------------------------
// Evaluator
// ---------------------------------------------------------------------------

namespace {

using int128 = __int128;

std::int64_t pow10_i64(int n) {
    std::int64_t v = 1;
    for (int i = 0; i < n; ++i)
        v *= 10;
    return v;
}

std::string int128_to_string(int128 v) {
    if (v == 0)
        return "0";
    const bool negative = v < 0;
    unsigned __int128 u =
        negative ? static_cast<unsigned __int128>(-(v + 1)) + 1
                 : static_cast<unsigned __int128>(v);
    std::string digits;
    while (u > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (negative)
        digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

// Exact rational scalar: num / den with den > 0. Used for aggregate values
// so subquery comparisons never see rounding.
struct ExactScalar {
    int128 num = 0;
    int128 den = 1;
};

std::size_t resolve_column(const Table &table, const std::string &name) {
    for (std::size_t c = 0; c < table.headers.size(); ++c)
        if (table.headers[c] == name)
            return c;
    throw EvalError("no such column: " + name);
}

Decimal parse_numeric_cell(const std::string &cell) {
    if (cell.empty())
        throw EvalError("empty cell in numeric operation");
    auto d = parse_decimal(cell);
    if (!d)
        throw EvalError("non-numeric cell in numeric operation: " + cell);
    return *d;
}

// cell (as decimal) vs exact scalar, cross-multiplied.
int compare_cell_scalar(const Decimal &cell, const ExactScalar &rhs) {
    const int128 lhs = static_cast<int128>(cell.mantissa) * rhs.den;
    const int128 r = rhs.num * pow10_i64(cell.scale);
    if (lhs < r)
        return -1;
    return lhs > r ? 1 : 0;
}

std::string render_integer_or_one_decimal(int128 num, int128 den) {
    if (num % den == 0)
        return int128_to_string(num / den);
    const bool negative = num < 0;
    const int128 abs_num = negative ? -num : num;
    const int128 scaled = abs_num * 10;
    int128 q = scaled / den;
    const int128 r = scaled % den;
    if (2 * r >= den)
        ++q;
    std::string out = negative ? "-" : "";
    out += int128_to_string(q / 10);
    out += '.';
    out += int128_to_string(q % 10);
    return out;
}

struct AggState {
    const Table &table;
    std::size_t col;
    std::vector<std::size_t> rows; // matched row indices
};

ExactScalar exact_aggregate(AggFn fn, const AggState &st) {
    if (fn == AggFn::CountDistinct) {
        std::vector<std::string> keys;
        const bool numeric =
            st.table.column_kinds[st.col] == ColumnKind::Numeric;
        for (std::size_t r : st.rows) {
            const std::string &cell = st.table.rows[r][st.col];
            if (cell.empty())
                continue;
            std::string key;
            if (numeric) {
                if (auto d = parse_decimal(cell))
                    key = "n:" + render_exact(*d);
                else
                    key = "t:" + cell;
            } else {
                key = "t:" + cell;
            }
            if (std::find(keys.begin(), keys.end(), key) == keys.end())
                keys.push_back(std::move(key));
        }
        return {static_cast<int128>(keys.size()), 1};
    }

    if (st.table.column_kinds[st.col] != ColumnKind::Numeric)
        throw EvalError("aggregate over non-numeric column: " +
                        st.table.headers[st.col]);
    if (st.rows.empty())
        throw EvalError("aggregate over zero rows");

    std::vector<Decimal> values;
    values.reserve(st.rows.size());
    int max_scale = 0;
    for (std::size_t r : st.rows) {
        values.push_back(parse_numeric_cell(st.table.rows[r][st.col]));
        max_scale = std::max(max_scale, values.back().scale);
    }

    if (fn == AggFn::Max || fn == AggFn::Min) {
        const Decimal *best = &values.front();
        for (const Decimal &v : values) {
            const int cmp = compare(v, *best);
            if ((fn == AggFn::Max && cmp > 0) ||
                (fn == AggFn::Min && cmp < 0))
                best = &v;
        }
        const int128 scaled =
            static_cast<int128>(best->mantissa) *
            pow10_i64(max_scale - best->scale);
        return {scaled, pow10_i64(max_scale)};
    }

    int128 sum = 0;
    for (const Decimal &v : values)
        sum += static_cast<int128>(v.mantissa) *
               pow10_i64(max_scale - v.scale);
    if (fn == AggFn::Sum)
        return {sum, pow10_i64(max_scale)};
    return {sum, static_cast<int128>(pow10_i64(max_scale)) *
                     static_cast<int128>(values.size())};
}

std::string render_aggregate(AggFn fn, const AggState &st) {
    if (fn == AggFn::Max || fn == AggFn::Min) {
        // The extremum is an actual cell value; render it exactly rather
        // than rounding, so superlative sentences stay true to the table.
        const Decimal *best = nullptr;
        if (st.table.column_kinds[st.col] != ColumnKind::Numeric)
            throw EvalError("aggregate over non-numeric column: " +
                            st.table.headers[st.col]);
        if (st.rows.empty())
            throw EvalError("aggregate over zero rows");
        std::vector<Decimal> values;
        values.reserve(st.rows.size());
        for (std::size_t r : st.rows)
            values.push_back(parse_numeric_cell(st.table.rows[r][st.col]));
        for (const Decimal &v : values) {
            if (!best || (fn == AggFn::Max && compare(v, *best) > 0) ||
                (fn == AggFn::Min && compare(v, *best) < 0))
                best = &v;
        }
        return render_exact(*best);
    }
    const ExactScalar v = exact_aggregate(fn, st);
    if (fn == AggFn::CountDistinct)
        return int128_to_string(v.num);
    return render_integer_or_one_decimal(v.num, v.den);
}

std::vector<std::size_t> filter_rows(const QueryPlan &plan,
                                     const Table &table) {
    std::vector<std::size_t> matched;
    if (!plan.predicate) {
        matched.resize(table.row_count());
        std::iota(matched.begin(), matched.end(), 0);
        return matched;
    }

    const Predicate &pred = *plan.predicate;
    const std::size_t col = resolve_column(table, pred.column);
    const bool numeric_col = table.column_kinds[col] == ColumnKind::Numeric;

    if (pred.subquery) {
        // Subquery operands are always numeric comparisons on the exact
        // (unrounded) scalar.
        const std::size_t sub_col =
            resolve_column(table, pred.subquery->projection.column);
        std::vector<std::size_t> sub_rows = filter_rows(*pred.subquery, table);
        const ExactScalar rhs = exact_aggregate(
            *pred.subquery->projection.agg, {table, sub_col, sub_rows});
        if (!numeric_col)
            throw EvalError("numeric comparison on text column: " +
                            pred.column);
        for (std::size_t r = 0; r < table.row_count(); ++r) {
            const Decimal cell = parse_numeric_cell(table.rows[r][col]);
            const int cmp = compare_cell_scalar(cell, rhs);
            const bool keep = pred.op == CmpOp::Eq   ? cmp == 0
                              : pred.op == CmpOp::Lt ? cmp < 0
                                                     : cmp > 0;
            if (keep)
                matched.push_back(r);
        }
        return matched;
    }

    if (pred.op == CmpOp::Eq) {
        const auto literal_value = parse_decimal(pred.literal);
        for (std::size_t r = 0; r < table.row_count(); ++r) {
            const std::string &cell = table.rows[r][col];
            bool keep = false;
            if (numeric_col && literal_value) {
                if (auto cv = parse_decimal(cell))
                    keep = compare(*cv, *literal_value) == 0;
                else
                    keep = cell == pred.literal;
            } else {
                keep = cell == pred.literal;
            }
            if (keep)
                matched.push_back(r);
        }
        return matched;
    }

    if (!numeric_col)
        throw EvalError("numeric comparison on text column: " + pred.column);
    const auto literal_value = parse_decimal(pred.literal);
    if (!literal_value)
        throw EvalError("non-numeric literal in numeric comparison: " +
                        pred.literal);
    for (std::size_t r = 0; r < table.row_count(); ++r) {
        const Decimal cell = parse_numeric_cell(table.rows[r][col]);
        const int cmp = compare(cell, *literal_value);
        if ((pred.op == CmpOp::Lt && cmp < 0) ||
            (pred.op == CmpOp::Gt && cmp > 0))
            matched.push_back(r);
    }
    return matched;
}

} // namespace

QueryResult evaluate(const QueryPlan &plan, const Table &table) {
    const std::size_t proj_col = resolve_column(table, plan.projection.column);
    std::vector<std::size_t> rows = filter_rows(plan, table);

    if (plan.projection.agg) {
        QueryResult result;
        result.kind = ResultKind::AggregateScalar;
        result.values.push_back(
            render_aggregate(*plan.projection.agg, {table, proj_col, rows}));
        return result;
    }

    if (plan.order_by) {
        const std::size_t sort_col =
            resolve_column(table, plan.order_by->column);
        const bool numeric =
            table.column_kinds[sort_col] == ColumnKind::Numeric;
        std::vector<Decimal> keys;
        if (numeric) {
            keys.resize(table.row_count());
            for (std::size_t r : rows)
                keys[r] = parse_numeric_cell(table.rows[r][sort_col]);
        }
        const bool asc = plan.order_by->dir == SortDir::Asc;
        std::stable_sort(rows.begin(), rows.end(),
                         [&](std::size_t a, std::size_t b) {
                             int cmp;
                             if (numeric) {
                                 cmp = compare(keys[a], keys[b]);
                             } else {
                                 const auto &ca = table.rows[a][sort_col];
                                 const auto &cb = table.rows[b][sort_col];
                                 cmp = ca < cb ? -1 : ca > cb ? 1 : 0;
                             }
                             return asc ? cmp < 0 : cmp > 0;
                         });
    }

    if (plan.limit && rows.size() > *plan.limit)
        rows.resize(*plan.limit);

    QueryResult result;
    result.kind = ResultKind::CellSet;
    const bool numeric_col =
        table.column_kinds[proj_col] == ColumnKind::Numeric;
    std::vector<std::string> seen_keys;
    for (std::size_t r : rows) {
        const std::string &cell = table.rows[r][proj_col];
        if (plan.distinct) {
            std::string key;
            if (numeric_col) {
                if (auto d = parse_decimal(cell))
                    key = "n:" + render_exact(*d);
                else
                    key = "t:" + cell;
            } else {
                key = "t:" + cell;
            }
            if (std::find(seen_keys.begin(), seen_keys.end(), key) !=
                seen_keys.end())
                continue;
            seen_keys.push_back(std::move(key));
        }
        result.values.push_back(cell);
    }
    return result;
}

} // namespace pasta
