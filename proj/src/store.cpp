#include "pasta/store.hpp"

#include "pasta/ingest.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace pasta {

namespace {
using ordered_json = nlohmann::ordered_json;
}

void save_table_store(const std::vector<Table> &tables,
                      const std::filesystem::path &path) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open store for writing: " + path.string());
    for (const auto &t : tables) {
        ordered_json record;
        record["tableId"] = t.id;
        record["title"] = t.title;
        record["headers"] = t.headers;
        record["rows"] = t.rows;
        std::vector<std::string> kinds;
        kinds.reserve(t.column_kinds.size());
        for (ColumnKind k : t.column_kinds)
            kinds.emplace_back(to_string(k));
        record["columnKinds"] = kinds;
        out << record.dump() << '\n';
    }
    if (!out.flush())
        throw IoError("failed writing store: " + path.string());
}

std::vector<Table> load_table_store(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open store: " + path.string());
    std::vector<Table> tables;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
        if (record.is_discarded() || !record.is_object())
            throw IoError("bad store record at " + path.string() + ":" +
                          std::to_string(line_no));
        Table t;
        t.id = record.value("tableId", "");
        t.title = record.value("title", "");
        t.headers = record.value("headers", std::vector<std::string>{});
        t.rows = record.value("rows", std::vector<std::vector<std::string>>{});
        if (record.contains("columnKinds")) {
            for (const auto &k : record["columnKinds"])
                t.column_kinds.push_back(k.get<std::string>() == "numeric"
                                             ? ColumnKind::Numeric
                                             : ColumnKind::Text);
        }
        if (t.column_kinds.size() != t.headers.size())
            t = classify_columns(std::move(t));
        tables.push_back(std::move(t));
    }
    return tables;
}

std::map<std::string, Table>
load_table_store_by_id(const std::filesystem::path &path) {
    std::map<std::string, Table> by_id;
    for (auto &t : load_table_store(path)) {
        std::string id = t.id;
        by_id.emplace(std::move(id), std::move(t));
    }
    return by_id;
}

std::filesystem::path resolve_store_path(const std::filesystem::path &arg) {
    std::error_code ec;
    if (std::filesystem::is_directory(arg, ec))
        return arg / "tables.jsonl";
    return arg;
}

} // namespace pasta
