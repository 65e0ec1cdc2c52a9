// Brute-force reference interpreter for the query subset. Written
// independently of src/query.cpp on purpose: arbitrary-precision rational
// arithmetic (boost cpp_int), its own cell parsing and its own rendering,
// following docs/query_grammar.md to the letter. verify.cpp cross-checks
// the two on randomized inputs.

#include "pasta/query.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>

namespace pasta {

namespace {

using BigInt = boost::multiprecision::cpp_int;

const BigInt kMantissaLimit("1000000000000000"); // 10^15

struct Rational {
    BigInt num;
    BigInt den; // > 0

    static Rational make(BigInt n, BigInt d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        BigInt g = boost::multiprecision::gcd(n < 0 ? BigInt(-n) : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        return {std::move(n), std::move(d)};
    }

    int cmp(const Rational &other) const {
        const BigInt lhs = num * other.den;
        const BigInt rhs = other.num * den;
        if (lhs < rhs)
            return -1;
        return lhs > rhs ? 1 : 0;
    }
};

// Independent reimplementation of the cell-number grammar.
bool parse_cell_number(const std::string &cell, Rational &out) {
    std::size_t begin = 0, end = cell.size();
    while (begin < end && (cell[begin] == ' ' || cell[begin] == '\t'))
        ++begin;
    while (end > begin && (cell[end - 1] == ' ' || cell[end - 1] == '\t'))
        --end;
    std::string s = cell.substr(begin, end - begin);

    for (const std::string currency : {"$", "\xE2\x82\xAC", "\xC2\xA3"}) {
        if (s.rfind(currency, 0) == 0) {
            s.erase(0, currency.size());
            break;
        }
    }
    if (!s.empty() && s.back() == '%')
        s.pop_back();

    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }

    BigInt mantissa = 0;
    int frac_digits = 0;
    bool after_point = false;
    bool any_digit = false;
    for (char c : s) {
        if (c == ',') {
            if (after_point)
                return false;
            continue;
        }
        if (c == '.') {
            if (after_point)
                return false;
            after_point = true;
            continue;
        }
        if (c < '0' || c > '9')
            return false;
        any_digit = true;
        if (after_point && ++frac_digits > 6)
            return false;
        mantissa = mantissa * 10 + (c - '0');
        if (mantissa > kMantissaLimit)
            return false;
    }
    if (!any_digit)
        return false;

    BigInt den = 1;
    for (int i = 0; i < frac_digits; ++i)
        den *= 10;
    out = Rational::make(negative ? BigInt(-mantissa) : mantissa, den);
    return true;
}

Rational numeric_cell_or_throw(const std::string &cell) {
    if (cell.empty())
        throw EvalError("oracle: empty cell in numeric operation");
    Rational r;
    if (!parse_cell_number(cell, r))
        throw EvalError("oracle: non-numeric cell: " + cell);
    return r;
}

std::size_t find_column(const Table &table, const std::string &name) {
    for (std::size_t c = 0; c < table.headers.size(); ++c)
        if (table.headers[c] == name)
            return c;
    throw EvalError("oracle: no such column: " + name);
}

// Canonical finite-decimal rendering of a reduced rational whose
// denominator divides a power of ten.
std::string render_finite(const Rational &value) {
    BigInt den = value.den;
    int scale = 0;
    while (den % 2 == 0) {
        den /= 2;
        ++scale;
    }
    int fives = 0;
    while (den % 5 == 0) {
        den /= 5;
        ++fives;
    }
    scale = std::max(scale, fives);
    BigInt pow = 1;
    for (int i = 0; i < scale; ++i)
        pow *= 10;
    BigInt digits = value.num * pow / value.den;
    const bool negative = digits < 0;
    if (negative)
        digits = -digits;
    std::string text = digits.str();
    while (scale > 0 && !text.empty() && text.back() == '0') {
        text.pop_back();
        --scale;
    }
    if (static_cast<int>(text.size()) <= scale)
        text.insert(0, scale - text.size() + 1, '0');
    std::string out = negative ? "-" : "";
    out.append(text, 0, text.size() - scale);
    if (scale > 0) {
        out.push_back('.');
        out.append(text, text.size() - scale, std::string::npos);
    }
    return out;
}

std::string render_rounded(const Rational &value) {
    if (value.num % value.den == 0)
        return BigInt(value.num / value.den).str();
    BigInt abs_num = value.num < 0 ? BigInt(-value.num) : value.num;
    BigInt q = abs_num * 10 / value.den;
    BigInt r = abs_num * 10 % value.den;
    if (2 * r >= value.den)
        ++q;
    std::string out = value.num < 0 ? "-" : "";
    out += BigInt(q / 10).str();
    out += '.';
    out += BigInt(q % 10).str();
    return out;
}

struct OracleEval {
    const Table &table;

    std::vector<std::size_t> matching_rows(const QueryPlan &plan) const {
        std::vector<std::size_t> rows;
        for (std::size_t r = 0; r < table.row_count(); ++r)
            rows.push_back(r);
        if (!plan.predicate)
            return rows;

        const Predicate &pred = *plan.predicate;
        const std::size_t col = find_column(table, pred.column);
        const bool numeric = table.column_kinds[col] == ColumnKind::Numeric;

        if (pred.subquery) {
            const Rational rhs = aggregate_value(*pred.subquery);
            if (!numeric)
                throw EvalError("oracle: numeric comparison on text column");
            std::vector<std::size_t> kept;
            for (std::size_t r : rows) {
                const Rational cell =
                    numeric_cell_or_throw(table.rows[r][col]);
                const int cmp = cell.cmp(rhs);
                if ((pred.op == CmpOp::Eq && cmp == 0) ||
                    (pred.op == CmpOp::Lt && cmp < 0) ||
                    (pred.op == CmpOp::Gt && cmp > 0))
                    kept.push_back(r);
            }
            return kept;
        }

        if (pred.op == CmpOp::Eq) {
            Rational literal;
            const bool literal_numeric =
                parse_cell_number(pred.literal, literal);
            std::vector<std::size_t> kept;
            for (std::size_t r : rows) {
                const std::string &cell = table.rows[r][col];
                bool match;
                Rational cv;
                if (numeric && literal_numeric &&
                    parse_cell_number(cell, cv))
                    match = cv.cmp(literal) == 0;
                else
                    match = cell == pred.literal;
                if (match)
                    kept.push_back(r);
            }
            return kept;
        }

        if (!numeric)
            throw EvalError("oracle: numeric comparison on text column");
        Rational literal;
        if (!parse_cell_number(pred.literal, literal))
            throw EvalError("oracle: non-numeric literal");
        std::vector<std::size_t> kept;
        for (std::size_t r : rows) {
            const Rational cell = numeric_cell_or_throw(table.rows[r][col]);
            const int cmp = cell.cmp(literal);
            if ((pred.op == CmpOp::Lt && cmp < 0) ||
                (pred.op == CmpOp::Gt && cmp > 0))
                kept.push_back(r);
        }
        return kept;
    }

    Rational aggregate_value(const QueryPlan &plan) const {
        const std::size_t col = find_column(table, plan.projection.column);
        const std::vector<std::size_t> rows = matching_rows(plan);
        const AggFn fn = *plan.projection.agg;

        if (fn == AggFn::CountDistinct)
            return {BigInt(count_distinct(col, rows)), BigInt(1)};

        if (table.column_kinds[col] != ColumnKind::Numeric)
            throw EvalError("oracle: aggregate over non-numeric column");
        if (rows.empty())
            throw EvalError("oracle: aggregate over zero rows");

        std::vector<Rational> values;
        for (std::size_t r : rows)
            values.push_back(numeric_cell_or_throw(table.rows[r][col]));

        if (fn == AggFn::Max || fn == AggFn::Min) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < values.size(); ++i) {
                const int cmp = values[i].cmp(values[best]);
                if ((fn == AggFn::Max && cmp > 0) ||
                    (fn == AggFn::Min && cmp < 0))
                    best = i;
            }
            return values[best];
        }

        Rational sum{BigInt(0), BigInt(1)};
        for (const Rational &v : values)
            sum = Rational::make(sum.num * v.den + v.num * sum.den,
                                 sum.den * v.den);
        if (fn == AggFn::Sum)
            return sum;
        return Rational::make(sum.num, sum.den * BigInt(values.size()));
    }

    std::size_t count_distinct(std::size_t col,
                               const std::vector<std::size_t> &rows) const {
        const bool numeric = table.column_kinds[col] == ColumnKind::Numeric;
        std::vector<std::string> keys;
        for (std::size_t r : rows) {
            const std::string &cell = table.rows[r][col];
            if (cell.empty())
                continue;
            std::string key;
            Rational value;
            if (numeric && parse_cell_number(cell, value))
                key = "num " + render_finite(value);
            else
                key = "txt " + cell;
            if (std::find(keys.begin(), keys.end(), key) == keys.end())
                keys.push_back(std::move(key));
        }
        return keys.size();
    }

    QueryResult run(const QueryPlan &plan) const {
        const std::size_t col = find_column(table, plan.projection.column);

        if (plan.projection.agg) {
            QueryResult result;
            result.kind = ResultKind::AggregateScalar;
            const AggFn fn = *plan.projection.agg;
            const Rational value = aggregate_value(plan);
            if (fn == AggFn::CountDistinct)
                result.values.push_back(value.num.str());
            else if (fn == AggFn::Max || fn == AggFn::Min)
                result.values.push_back(render_finite(value));
            else
                result.values.push_back(render_rounded(value));
            return result;
        }

        std::vector<std::size_t> rows = matching_rows(plan);

        if (plan.order_by) {
            const std::size_t sort_col =
                find_column(table, plan.order_by->column);
            const bool numeric =
                table.column_kinds[sort_col] == ColumnKind::Numeric;
            std::vector<std::pair<std::size_t, Rational>> keyed;
            for (std::size_t r : rows) {
                Rational key{BigInt(0), BigInt(1)};
                if (numeric)
                    key = numeric_cell_or_throw(table.rows[r][sort_col]);
                keyed.emplace_back(r, std::move(key));
            }
            const bool asc = plan.order_by->dir == SortDir::Asc;
            std::stable_sort(
                keyed.begin(), keyed.end(), [&](const auto &a, const auto &b) {
                    int cmp;
                    if (numeric) {
                        cmp = a.second.cmp(b.second);
                    } else {
                        const auto &ca = table.rows[a.first][sort_col];
                        const auto &cb = table.rows[b.first][sort_col];
                        cmp = ca.compare(cb);
                        cmp = cmp < 0 ? -1 : cmp > 0 ? 1 : 0;
                    }
                    return asc ? cmp < 0 : cmp > 0;
                });
            rows.clear();
            for (const auto &entry : keyed)
                rows.push_back(entry.first);
        }

        if (plan.limit && rows.size() > *plan.limit)
            rows.resize(static_cast<std::size_t>(*plan.limit));

        QueryResult result;
        result.kind = ResultKind::CellSet;
        const bool numeric = table.column_kinds[col] == ColumnKind::Numeric;
        std::vector<std::string> seen;
        for (std::size_t r : rows) {
            const std::string &cell = table.rows[r][col];
            if (plan.distinct) {
                std::string key;
                Rational value;
                if (numeric && parse_cell_number(cell, value))
                    key = "num " + render_finite(value);
                else
                    key = "txt " + cell;
                if (std::find(seen.begin(), seen.end(), key) != seen.end())
                    continue;
                seen.push_back(std::move(key));
            }
            result.values.push_back(cell);
        }
        return result;
    }
};

} // namespace

QueryResult oracle_evaluate(const QueryPlan &plan, const Table &table) {
    return OracleEval{table}.run(plan);
}

} // namespace pasta
