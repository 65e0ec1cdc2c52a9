#include "pasta/table.hpp"

#include "pasta/ingest.hpp"
#include "pasta/store.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace pasta;

namespace {

Table make_table(std::vector<std::string> headers,
                 std::vector<std::vector<std::string>> rows) {
    Table t;
    t.id = "t1";
    t.headers = std::move(headers);
    t.rows = std::move(rows);
    return classify_columns(std::move(t));
}

} // namespace

TEST_CASE("column classification") {
    Table t = make_table({"title", "viewers", "mixed", "empty"},
                         {{"night moves", "3.61", "12", ""},
                          {"broken", "2.14", "junk", ""}});
    CHECK(t.column_kinds[0] == ColumnKind::Text);
    CHECK(t.column_kinds[1] == ColumnKind::Numeric);
    CHECK(t.column_kinds[2] == ColumnKind::Text); // 1 of 2 parses: below 90%
    CHECK(t.column_kinds[3] == ColumnKind::Text); // all-empty column

    Table sep = make_table({"n"}, {{"1,234"}, {"56"}});
    CHECK(sep.column_kinds[0] == ColumnKind::Numeric);
}

TEST_CASE("90 percent rule") {
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < 9; ++i)
        rows.push_back({std::to_string(i)});
    rows.push_back({"junk"});
    CHECK(make_table({"c"}, rows).column_kinds[0] == ColumnKind::Numeric);

    rows.push_back({"junk"}); // 9 of 11 is below 90%
    CHECK(make_table({"c"}, rows).column_kinds[0] == ColumnKind::Text);
}

TEST_CASE("classification is idempotent") {
    Table t = make_table({"a", "b"}, {{"x", "1"}, {"y", "2"}});
    CHECK(classify_columns(t) == t);
}

TEST_CASE("pretrain eligibility") {
    Table ok = make_table({"a", "b", "c", "d", "e"},
                          {{"x", "1", "x", "x", "x"},
                           {"y", "2", "y", "y", "y"}});
    for (int i = 0; i < 8; ++i)
        ok.rows.push_back(ok.rows[0]); // 5x10 = 50 cells
    CHECK(filter_pretrain_eligible(ok));

    SUBCASE("cell budget") {
        Table big;
        big.id = "big";
        for (int c = 0; c < 10; ++c)
            big.headers.push_back("c" + std::to_string(c));
        for (int r = 0; r < 51; ++r) {
            std::vector<std::string> row;
            for (int c = 0; c < 10; ++c)
                row.push_back("1");
            big.rows.push_back(row);
        }
        big = classify_columns(std::move(big));
        CHECK(big.cell_count() == 510);
        CHECK_FALSE(filter_pretrain_eligible(big));
        CHECK(filter_pretrain_eligible(big, 512));
    }

    SUBCASE("needs a numeric column") {
        Table text_only =
            make_table({"a", "b"}, {{"x", "y"}, {"z", "w"}});
        CHECK_FALSE(filter_pretrain_eligible(text_only));
    }

    SUBCASE("depends only on headers, kinds and cell count") {
        Table mutated = ok;
        mutated.id = "other-id";
        mutated.title = "a different title";
        CHECK(filter_pretrain_eligible(mutated) ==
              filter_pretrain_eligible(ok));
        // cell text may change arbitrarily as long as kinds stay fixed
        mutated.rows[0][0] = "something else entirely";
        CHECK(filter_pretrain_eligible(mutated) ==
              filter_pretrain_eligible(ok));
    }
}

TEST_CASE("sampling is deterministic and sorted by id") {
    std::vector<Table> tables;
    for (int i = 0; i < 100; ++i) {
        Table t = make_table({"a"}, {{"1"}});
        t.id = "t" + std::to_string(1000 + i);
        tables.push_back(std::move(t));
    }

    auto a = sample_tables(tables, 10, 7);
    auto b = sample_tables(tables, 10, 7);
    CHECK(a == b);
    CHECK(a.size() == 10);
    for (std::size_t i = 1; i < a.size(); ++i)
        CHECK(a[i - 1].id < a[i].id);

    auto c = sample_tables(tables, 10, 8);
    CHECK(a != c); // different seed, overwhelmingly different sample

    auto all = sample_tables(tables, tables.size(), 3);
    CHECK(all.size() == tables.size());
    for (std::size_t i = 1; i < all.size(); ++i)
        CHECK(all[i - 1].id < all[i].id);

    CHECK_THROWS_AS(sample_tables(tables, tables.size() + 1, 1),
                    std::invalid_argument);
}

TEST_CASE("wikitables ingestion") {
    namespace fs = std::filesystem;
    const fs::path dir =
        fs::temp_directory_path() / "pasta_test_ingest";
    fs::create_directories(dir);
    const fs::path dump = dir / "dump.jsonl";
    {
        std::ofstream out(dump);
        out << R"({"tableId":"t1","title":"Movies","headers":["Title","Viewers"],"rows":[["Night Moves","3.61"],["Broken","2.14"]]})"
            << "\n";
        out << R"({"tableId":"t2","headers":["A","B"],"rows":[["x","1","extra"]]})"
            << "\n";
        out << R"({"tableId":"t3","headers":[],"rows":[["x"]]})" << "\n";
        out << "not json at all\n";
        out << R"({"tableId":"t4","headers":["A"],"rows":[]})" << "\n";
    }

    auto result = ingest_tables(dump, IngestFormat::WikitablesJson);
    CHECK(result.report.total_seen == 5);
    CHECK(result.report.accepted == 1);
    CHECK(result.report.rejected_by_reason.at("ragged-row") == 1);
    CHECK(result.report.rejected_by_reason.at("no-header") == 1);
    CHECK(result.report.rejected_by_reason.at("bad-json") == 1);
    CHECK(result.report.rejected_by_reason.at("no-rows") == 1);

    std::uint64_t rejected = 0;
    for (const auto &[reason, count] : result.report.rejected_by_reason)
        rejected += count;
    CHECK(result.report.accepted + rejected == result.report.total_seen);

    REQUIRE(result.tables.size() == 1);
    const Table &t = result.tables[0];
    CHECK(t.id == "t1");
    CHECK(t.title == "movies");
    CHECK(t.headers == std::vector<std::string>{"title", "viewers"});
    CHECK(t.rows[0][0] == "night moves"); // normalized
    CHECK(t.column_kinds[1] == ColumnKind::Numeric);

    SUBCASE("ingestion is idempotent") {
        auto again = ingest_tables(dump, IngestFormat::WikitablesJson);
        CHECK(again.tables == result.tables);
    }

    fs::remove_all(dir);
}

TEST_CASE("csv directory ingestion") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "pasta_test_csv";
    fs::create_directories(dir);
    {
        std::ofstream out(dir / "games.csv");
        out << "Team,Score\n\"van der, berg\",97\nBees,68\n";
    }
    {
        std::ofstream out(dir / "bad.csv");
        out << "A,B\n1\n";
    }

    auto result = ingest_tables(dir, IngestFormat::CsvDir);
    CHECK(result.report.accepted == 1);
    CHECK(result.report.rejected_by_reason.at("ragged-row") == 1);
    REQUIRE(result.tables.size() == 1);
    CHECK(result.tables[0].id == "games");
    CHECK(result.tables[0].rows[0][0] == "van der, berg");
    CHECK(result.tables[0].column_kinds[1] == ColumnKind::Numeric);

    fs::remove_all(dir);
}

TEST_CASE("table store round trip") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "pasta_test_store";
    fs::create_directories(dir);

    std::vector<Table> tables;
    for (int i = 0; i < 4; ++i) {
        Table t = make_table({"name", "points"},
                             {{"alpha " + std::to_string(i), "3.5"},
                              {"beta", std::to_string(i)}});
        t.id = "s" + std::to_string(i);
        t.title = "round trip";
        tables.push_back(std::move(t));
    }
    save_table_store(tables, dir / "tables.jsonl");
    CHECK(load_table_store(dir / "tables.jsonl") == tables);

    // a directory argument resolves to tables.jsonl inside it
    CHECK(resolve_store_path(dir) == dir / "tables.jsonl");
    CHECK(load_table_store(resolve_store_path(dir)) == tables);

    const auto by_id = load_table_store_by_id(dir / "tables.jsonl");
    CHECK(by_id.size() == 4);
    CHECK(by_id.at("s2") == tables[2]);

    fs::remove_all(dir);
}
