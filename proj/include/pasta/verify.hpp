#pragma once

#include "pasta/query.hpp"
#include "pasta/table.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>

namespace pasta {

// Random rectangular table (up to max_rows x max_cols) with mixed column
// kinds, duplicate values, empty cells and occasional junk in numeric
// columns; kinds come from classify_columns.
Table random_table(std::mt19937_64 &rng, std::size_t max_rows = 8,
                   std::size_t max_cols = 8);

// Random plan following the template-grammar shapes (aggregates, =/</>
// predicates with cell or constant literals, scalar subqueries, ORDER BY /
// LIMIT). Columns occasionally reference a missing name so both evaluators
// must agree on the error path.
QueryPlan random_plan(std::mt19937_64 &rng, const Table &table);

struct OracleReport {
    std::uint64_t trials = 0;
    std::uint64_t agreements = 0;
    std::uint64_t errors_agreed = 0; // both sides raised an error
    bool round_trip_ok = true;
    std::string first_mismatch; // human-readable counterexample

    bool ok() const { return agreements == trials && round_trip_ok; }
};

using Evaluator = std::function<QueryResult(const QueryPlan &, const Table &)>;

// Runs `trials` randomized (table, plan) pairs through both evaluators and
// compares results exactly (value lists and kinds, or both raising an
// error). Also checks parse(render(plan)) == plan per trial. The evaluator
// is injectable so tests can prove a broken implementation is caught.
OracleReport run_oracle_verification(std::uint64_t trials, std::uint64_t seed,
                                     const Evaluator &candidate = evaluate);

} // namespace pasta
