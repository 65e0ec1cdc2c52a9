#pragma once

#include "pasta/table.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pasta {

enum class AggFn { Max, Min, Sum, Avg, CountDistinct };
enum class CmpOp { Eq, Lt, Gt };
enum class SortDir { Asc, Desc };

struct QueryPlan;

struct Projection {
    std::optional<AggFn> agg; // nullopt = plain column projection
    std::string column;

    friend bool operator==(const Projection &, const Projection &) = default;
};

struct Predicate {
    std::string column;
    CmpOp op = CmpOp::Eq;
    std::string literal;                      // used when !subquery
    std::shared_ptr<const QueryPlan> subquery; // scalar subquery operand

    friend bool operator==(const Predicate &a, const Predicate &b);
};

struct OrderBy {
    std::string column;
    SortDir dir = SortDir::Asc;

    friend bool operator==(const OrderBy &, const OrderBy &) = default;
};

// Parsed query over the implicit table T. See docs/query_grammar.md for
// the grammar and the exact evaluation semantics.
struct QueryPlan {
    Projection projection;
    std::optional<Predicate> predicate;
    std::optional<OrderBy> order_by;
    std::optional<std::uint64_t> limit;
    bool distinct = false; // SELECT DISTINCT col

    friend bool operator==(const QueryPlan &, const QueryPlan &);
};

enum class ResultKind { CellSet, AggregateScalar };

struct QueryResult {
    ResultKind kind = ResultKind::CellSet;
    std::vector<std::string> values;

    friend bool operator==(const QueryResult &, const QueryResult &) = default;
};

struct QueryParseError : std::runtime_error {
    QueryParseError(const std::string &message, std::size_t pos)
        : std::runtime_error(message + " (at byte " + std::to_string(pos) +
                             ")"),
          position(pos) {}
    std::size_t position = 0;
};

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

QueryPlan parse_query(std::string_view text);

std::string render_query(const QueryPlan &plan);

// Renders a column reference / string literal the way render_query does;
// template instantiation uses these to splice bindings into SQL text.
std::string render_column_ref(std::string_view name);
std::string render_string_literal(std::string_view value);

// Production evaluator (exact decimal arithmetic). Throws EvalError.
QueryResult evaluate(const QueryPlan &plan, const Table &table);

// Independent brute-force oracle; see src/oracle.cpp. Must agree with
// evaluate() on every legal input. Throws EvalError.
QueryResult oracle_evaluate(const QueryPlan &plan, const Table &table);

} // namespace pasta
