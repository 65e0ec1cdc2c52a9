#include "pasta/ingest.hpp"

#include "pasta/text.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace pasta {

namespace {

using nlohmann::json;

// Normalizes and validates one raw record. Returns the rejection reason, or
// empty string on success.
std::string build_table(std::string id, std::string title,
                        std::vector<std::string> headers,
                        std::vector<std::vector<std::string>> rows,
                        Table &out) {
    if (headers.empty())
        return "no-header";
    if (rows.empty())
        return "no-rows";
    for (const auto &row : rows) {
        if (row.size() != headers.size())
            return "ragged-row";
    }
    out.id = std::move(id);
    out.title = normalize_text(title);
    out.headers.clear();
    for (auto &h : headers)
        out.headers.push_back(normalize_text(h));
    out.rows.clear();
    for (auto &row : rows) {
        std::vector<std::string> cells;
        cells.reserve(row.size());
        for (auto &cell : row)
            cells.push_back(normalize_text(cell));
        out.rows.push_back(std::move(cells));
    }
    return "";
}

void ingest_wikitables_json(const std::filesystem::path &source,
                            const std::function<void(Table &&)> &sink,
                            IngestReport &report) {
    std::ifstream in(source);
    if (!in)
        throw IoError("cannot open input: " + source.string());
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() ||
            line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        json record = json::parse(line, nullptr, false);
        if (record.is_discarded() || !record.is_object()) {
            report.reject("bad-json");
            continue;
        }
        if (!record.contains("tableId") || !record["tableId"].is_string() ||
            !record.contains("headers") || !record["headers"].is_array() ||
            !record.contains("rows") || !record["rows"].is_array()) {
            report.reject("bad-record");
            continue;
        }
        std::vector<std::string> headers;
        bool ok = true;
        for (const auto &h : record["headers"]) {
            if (!h.is_string()) {
                ok = false;
                break;
            }
            headers.push_back(h.get<std::string>());
        }
        std::vector<std::vector<std::string>> rows;
        for (const auto &r : ok ? record["rows"] : json::array()) {
            if (!r.is_array()) {
                ok = false;
                break;
            }
            std::vector<std::string> cells;
            for (const auto &c : r) {
                if (!c.is_string()) {
                    ok = false;
                    break;
                }
                cells.push_back(c.get<std::string>());
            }
            if (!ok)
                break;
            rows.push_back(std::move(cells));
        }
        if (!ok) {
            report.reject("bad-record");
            continue;
        }
        std::string title;
        if (record.contains("title") && record["title"].is_string())
            title = record["title"].get<std::string>();

        Table table;
        const std::string reason =
            build_table(record["tableId"].get<std::string>(), std::move(title),
                        std::move(headers), std::move(rows), table);
        if (!reason.empty()) {
            report.reject(reason);
            continue;
        }
        report.accept();
        sink(classify_columns(std::move(table)));
    }
}

// RFC-4180 style parsing: quoted fields may contain commas, newlines and
// doubled quotes.
bool parse_csv(std::istream &in, std::vector<std::vector<std::string>> &rows) {
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    std::vector<std::string> field_row;
    std::string field;
    bool in_quotes = false;
    bool row_started = false;
    std::size_t i = 0;
    auto end_field = [&]() {
        field_row.push_back(std::move(field));
        field.clear();
    };
    auto end_row = [&]() {
        end_field();
        rows.push_back(std::move(field_row));
        field_row.clear();
        row_started = false;
    };
    while (i < content.size()) {
        char c = content[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < content.size() && content[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"') {
            in_quotes = true;
            row_started = true;
        } else if (c == ',') {
            end_field();
            row_started = true;
        } else if (c == '\n') {
            if (row_started || !field.empty() || !field_row.empty())
                end_row();
        } else if (c == '\r') {
            // swallowed; \r\n handled by the \n branch
        } else {
            field.push_back(c);
            row_started = true;
        }
        ++i;
    }
    if (row_started || !field.empty() || !field_row.empty())
        end_row();
    return !in_quotes;
}

void ingest_csv_dir(const std::filesystem::path &source,
                    const std::function<void(Table &&)> &sink,
                    IngestReport &report) {
    std::error_code ec;
    if (!std::filesystem::is_directory(source, ec))
        throw IoError("not a directory: " + source.string());
    std::vector<std::filesystem::path> files;
    for (const auto &entry : std::filesystem::directory_iterator(source)) {
        if (entry.is_regular_file() && entry.path().extension() == ".csv")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto &file : files) {
        std::ifstream in(file, std::ios::binary);
        if (!in) {
            report.reject("unreadable-file");
            continue;
        }
        std::vector<std::vector<std::string>> raw;
        if (!parse_csv(in, raw)) {
            report.reject("bad-csv");
            continue;
        }
        if (raw.empty()) {
            report.reject("no-header");
            continue;
        }
        std::vector<std::string> headers = raw.front();
        raw.erase(raw.begin());
        Table table;
        const std::string reason =
            build_table(file.stem().string(), "", std::move(headers),
                        std::move(raw), table);
        if (!reason.empty()) {
            report.reject(reason);
            continue;
        }
        report.accept();
        sink(classify_columns(std::move(table)));
    }
}

} // namespace

void ingest_tables(const std::filesystem::path &source, IngestFormat format,
                   const std::function<void(Table &&)> &sink,
                   IngestReport &report) {
    if (format == IngestFormat::WikitablesJson)
        ingest_wikitables_json(source, sink, report);
    else
        ingest_csv_dir(source, sink, report);
}

IngestResult ingest_tables(const std::filesystem::path &source,
                           IngestFormat format) {
    IngestResult result;
    ingest_tables(
        source, format,
        [&](Table &&t) { result.tables.push_back(std::move(t)); },
        result.report);
    return result;
}

} // namespace pasta
