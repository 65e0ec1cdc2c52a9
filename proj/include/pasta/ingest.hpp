#pragma once

#include "pasta/table.hpp"

#include <filesystem>
#include <functional>
#include <stdexcept>

namespace pasta {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class IngestFormat { WikitablesJson, CsvDir };

struct IngestResult {
    std::vector<Table> tables;
    IngestReport report;
};

// Streams normalized tables out of a dump. Every emitted table is
// rectangular with at least one header and one row and carries classified
// column kinds; malformed records are counted per reason and never emitted.
// Throws IoError when the source itself cannot be read.
void ingest_tables(const std::filesystem::path &source, IngestFormat format,
                   const std::function<void(Table &&)> &sink,
                   IngestReport &report);

IngestResult ingest_tables(const std::filesystem::path &source,
                           IngestFormat format);

} // namespace pasta
