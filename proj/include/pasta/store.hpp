#pragma once

#include "pasta/table.hpp"

#include <filesystem>
#include <map>

namespace pasta {

// Normalized table store: one JSON record per line with keys
// {"tableId","title","headers","rows","columnKinds"}. Produced by the
// ingest command and consumed by synth/prep.

void save_table_store(const std::vector<Table> &tables,
                      const std::filesystem::path &path);

std::vector<Table> load_table_store(const std::filesystem::path &path);

std::map<std::string, Table>
load_table_store_by_id(const std::filesystem::path &path);

// Resolves a store argument that may name the JSONL file itself or a
// directory containing tables.jsonl.
std::filesystem::path resolve_store_path(const std::filesystem::path &arg);

} // namespace pasta
