// Acceptance suite: one pass/fail line per criterion, non-zero exit when
// anything fails. Exercises the library directly and drives the CLI binary
// (PASTA_BIN) for the end-to-end determinism and ablation checks.

#include "pasta/cloze.hpp"
#include "pasta/generate.hpp"
#include "pasta/polish.hpp"
#include "pasta/prep.hpp"
#include "pasta/query.hpp"
#include "pasta/rng.hpp"
#include "pasta/store.hpp"
#include "pasta/text.hpp"
#include "pasta/verify.hpp"

#include <httplib.h>
#include <nlohmann/json.hpp>

#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

using namespace pasta;

namespace {

int failures = 0;

void report(int criterion, const std::string &name, bool ok,
            const std::string &detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion
              << " (" << name << "): " << detail << std::endl;
    if (!ok)
        ++failures;
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_cli(const std::string &args, const std::filesystem::path &log) {
    const std::string cmd = std::string("'") + PASTA_BIN + "' " + args +
                            " >'" + log.string() + "' 2>&1";
    return std::system(cmd.c_str());
}

void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)> &fn) {
    const std::size_t jobs =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                              count == 0 ? 1 : count);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < jobs; ++w)
        workers.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count;
                 i = next.fetch_add(1))
                fn(i);
        });
    for (auto &worker : workers)
        worker.join();
}

// ---------------------------------------------------------------------------
// Fixture corpus: WikiTables-shaped synthetic tables. Text columns carry
// realistic token-count distributions (short entity names, two-word
// categories, five-word notes); numeric columns hold distinct values.
// ---------------------------------------------------------------------------

const char *const kFirst[] = {"bob",  "ann",  "joe",   "kim",  "lee",
                              "max",  "sue",  "ted",   "amy",  "ian",
                              "mia",  "ben",  "eva",   "sam",  "liv",
                              "gus",  "ada",  "rex",   "una",  "vic",
                              "wes",  "zoe",  "art",   "fay"};
const char *const kMiddle[] = {"van",  "de",   "la",   "st",  "mac",
                               "el",   "du",   "von",  "der", "al",
                               "bin",  "ter",  "vel",  "ros", "kar",
                               "lom"};
const char *const kLast[] = {"mosley",  "parker",  "young",   "stone",
                             "field",   "brooks",  "hale",    "winters",
                             "calder",  "norris",  "vance",   "ortiz",
                             "reyes",   "lang",    "barton",  "quinn",
                             "sharpe",  "wilde",   "foster",  "marsh",
                             "novak",   "tate",    "ibarra",  "kemp",
                             "duarte",  "slater",  "pike",    "hollis",
                             "grove",   "last"};
const char *const kGroups[] = {"group alpha", "group beta", "group gamma",
                               "group delta", "group omega"};
const char *const kNoteWords[] = {
    "river",  "north",  "summer", "league", "finals", "season", "bronze",
    "silver", "spring", "harbor", "valley", "summit", "indoor", "night",
    "autumn", "coast",  "meadow", "ridge",  "garden", "plaza"};

Table fixture_table(std::mt19937_64 &rng, std::size_t index) {
    Table t;
    {
        std::ostringstream oss;
        oss << "ft" << std::setw(5) << std::setfill('0') << index;
        t.id = oss.str();
    }
    t.headers = {"name", "group", "notes", "points", "score", "viewers",
                 "total"};
    const std::size_t n = 25 + pick_index(rng, 6); // 25..30 rows

    std::set<std::string> used_names;
    std::set<std::string> used_notes;
    std::vector<int> ints(999);
    for (int i = 0; i < 999; ++i)
        ints[i] = i + 1;
    shuffle_in_place(rng, ints);
    std::vector<int> cents(9999);
    for (int i = 0; i < 9999; ++i)
        cents[i] = i + 1;
    shuffle_in_place(rng, cents);

    for (std::size_t r = 0; r < n; ++r) {
        // 40% two-token names, 60% three-token: mean 2.6 tokens
        std::string name;
        do {
            name = std::string(kFirst[pick_index(rng, std::size(kFirst))]);
            if (pick_index(rng, 10) < 6)
                name += std::string(" ") +
                        kMiddle[pick_index(rng, std::size(kMiddle))];
            name += std::string(" ") +
                    kLast[pick_index(rng, std::size(kLast))];
        } while (!used_names.insert(name).second);

        std::string notes;
        do {
            notes.clear();
            for (int w = 0; w < 5; ++w) {
                if (w)
                    notes += ' ';
                notes += kNoteWords[pick_index(rng, std::size(kNoteWords))];
            }
        } while (!used_notes.insert(notes).second);

        const std::string group = kGroups[pick_index(rng, std::size(kGroups))];

        const int points = ints[r];
        const int score_c = cents[r];
        const int viewers_c = cents[100 + r];
        const int total = ints[200 + r];
        std::ostringstream score, viewers;
        score << score_c / 100 << '.' << std::setw(2) << std::setfill('0')
              << score_c % 100;
        viewers << viewers_c / 100 << '.' << std::setw(2) << std::setfill('0')
                << viewers_c % 100;

        t.rows.push_back({name, group, notes, std::to_string(points),
                          score.str(), viewers.str(), std::to_string(total)});
    }
    return classify_columns(std::move(t));
}

std::vector<Table> fixture_tables(std::size_t count, std::uint64_t seed) {
    std::vector<Table> tables(count);
    parallel_for(count, [&](std::size_t i) {
        auto rng = rng_for_key(seed, "fixture-" + std::to_string(i));
        tables[i] = fixture_table(rng, i);
    });
    return tables;
}

// ---------------------------------------------------------------------------
// Criterion 1: evaluate vs oracle on 10k randomized instances, under 60 s.
// ---------------------------------------------------------------------------

void criterion_oracle() {
    const auto t0 = std::chrono::steady_clock::now();
    const OracleReport rep = run_oracle_verification(10000, 3);
    const double seconds =
        std::chrono::duration_cast<std::chrono::duration<double>>(
            std::chrono::steady_clock::now() - t0)
            .count();
    std::ostringstream detail;
    detail << rep.agreements << "/" << rep.trials << " agreements, "
           << rep.errors_agreed << " agreed errors, round-trip "
           << (rep.round_trip_ok ? "ok" : "BROKEN") << ", " << seconds
           << " s";
    if (!rep.ok())
        detail << "\n" << rep.first_mismatch;
    report(1, "oracle equivalence", rep.ok() && seconds < 60.0,
           detail.str());
}

// ---------------------------------------------------------------------------
// Criteria 2 + 3: entailment re-execution over a >= 50k corpus and corpus
// shape versus the reference statistics.
// ---------------------------------------------------------------------------

void criteria_corpus(const std::vector<Table> &tables) {
    GenerationConfig config;
    config.seed = 20;

    std::vector<std::vector<Instantiation>> insts(tables.size());
    parallel_for(tables.size(), [&](std::size_t i) {
        insts[i] = generate_for_table(tables[i], default_catalog(), config);
        PolishCounters counters;
        ScorerBinding lexicon;
        polish_instantiations(insts[i], default_candidate_sets(), lexicon,
                              counters);
    });

    std::uint64_t total = 0;
    std::atomic<std::uint64_t> mismatches{0};
    for (const auto &chunk : insts)
        total += chunk.size();

    parallel_for(tables.size(), [&](std::size_t i) {
        for (const auto &inst : insts[i]) {
            try {
                const QueryResult result =
                    evaluate(parse_query(inst.sql_text), tables[i]);
                const bool ok = result.values.size() == 1 &&
                                result.values.front() == inst.answer;
                if (!ok)
                    ++mismatches;
            } catch (const std::exception &) {
                ++mismatches;
            }
        }
    });

    std::ostringstream d2;
    d2 << total << " examples, " << mismatches.load()
       << " re-execution mismatches";
    report(2, "entailment guarantee",
           total >= 50000 && mismatches.load() == 0, d2.str());

    // corpus shape
    std::vector<ClozeExample> examples;
    examples.reserve(total);
    for (std::size_t i = 0; i < tables.size(); ++i) {
        std::size_t index = 0;
        for (const auto &inst : insts[i]) {
            auto example = mask_answer(inst);
            if (!example)
                continue;
            example->id = tables[i].id + "-" + std::to_string(index++);
            example->table_id = tables[i].id;
            examples.push_back(std::move(*example));
        }
    }
    const CorpusStats stats = corpus_stats(examples);

    const std::map<OpType, double> want_share = {
        {OpType::Filter, 0.06},      {OpType::Superlative, 0.27},
        {OpType::Aggregation, 0.30}, {OpType::Comparative, 0.27},
        {OpType::Ordinal, 0.08},     {OpType::Unique, 0.02}};
    const std::map<OpType, double> want_len = {
        {OpType::Filter, 3.2},      {OpType::Superlative, 2.6},
        {OpType::Aggregation, 1.3}, {OpType::Comparative, 1.0},
        {OpType::Ordinal, 2.3},     {OpType::Unique, 1.0}};

    bool ok = tables.size() >= 1000;
    std::ostringstream d3;
    d3.setf(std::ios::fixed);
    d3.precision(3);
    d3 << tables.size() << " tables;";
    for (OpType op : kAllOpTypes) {
        const TypeStats ts = stats.per_type.count(op) ? stats.per_type.at(op)
                                                      : TypeStats{};
        const double share_err =
            std::abs(ts.share - want_share.at(op)) * 100.0;
        bool len_ok;
        if (op == OpType::Comparative || op == OpType::Unique)
            len_ok = ts.mean_answer_tokens == 1.0;
        else
            len_ok = std::abs(ts.mean_answer_tokens - want_len.at(op)) <= 0.5;
        const bool share_ok = share_err <= 2.0;
        ok = ok && share_ok && len_ok;
        d3 << ' ' << to_string(op) << " share=" << ts.share * 100 << "%"
           << (share_ok ? "" : "(OFF)") << " len=" << ts.mean_answer_tokens
           << (len_ok ? "" : "(OFF)");
    }
    report(3, "corpus shape", ok, d3.str());
}

// ---------------------------------------------------------------------------
// Criterion 4: 20 golden linearization fixtures, byte-exact.
// ---------------------------------------------------------------------------

struct Golden {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
    const char *expected;
};

void criterion_linearize() {
    // expected strings written by hand from the linearization format:
    // "[Header] h1 | ... | hm [Row] c11 | ... | c1m [Row] ..."
    const Golden cases[] = {
        {{"a", "b"}, {{"1", "2"}}, "[Header] a | b [Row] 1 | 2"},
        {{"a", "b"},
         {{"1", "2"}, {"3", "4"}},
         "[Header] a | b [Row] 1 | 2 [Row] 3 | 4"},
        {{"team", "score"},
         {{"night owls", "97"}},
         "[Header] team | score [Row] night owls | 97"},
        {{"only"}, {{"x"}, {"y"}}, "[Header] only [Row] x [Row] y"},
        {{"movie", "viewers"},
         {{"night moves", "3.61"}, {"broken", "2.14"}},
         "[Header] movie | viewers [Row] night moves | 3.61 [Row] broken | "
         "2.14"},
        {{"a", "b", "c"},
         {{"1", "", "3"}},
         "[Header] a | b | c [Row] 1 |  | 3"},
        {{"name"}, {{""}}, "[Header] name [Row] "},
        {{"x", "y"},
         {{"", ""}, {"", ""}},
         "[Header] x | y [Row]  |  [Row]  | "},
        {{"hotel", "floors", "year"},
         {{"the palazzo", "53", "2007"},
          {"las vegas hilton", "30", "1969"}},
         "[Header] hotel | floors | year [Row] the palazzo | 53 | 2007 "
         "[Row] las vegas hilton | 30 | 1969"},
        {{"caf\xC3\xA9", "price"},
         {{"le petit caf\xC3\xA9", "\x34.50"}},
         "[Header] caf\xC3\xA9 | price [Row] le petit caf\xC3\xA9 | 4.50"},
        {{"rank", "nation", "gold"},
         {{"1", "italy", "5"}, {"2", "spain", "3"}, {"3", "japan", "1"}},
         "[Header] rank | nation | gold [Row] 1 | italy | 5 [Row] 2 | spain "
         "| 3 [Row] 3 | japan | 1"},
        {{"date", "result"},
         {{"march 20 , 2010", "2 - 4"}},
         "[Header] date | result [Row] march 20 , 2010 | 2 - 4"},
        {{"p|pe"}, {{"a|b"}}, "[Header] p|pe [Row] a|b"},
        {{"w"}, {{"-1.5"}, {"0"}, {"99"}},
         "[Header] w [Row] -1.5 [Row] 0 [Row] 99"},
        {{"name", "group"},
         {{"amy van stone", "group alpha"}},
         "[Header] name | group [Row] amy van stone | group alpha"},
        {{"a b", "c d"},
         {{"e f", "g h"}},
         "[Header] a b | c d [Row] e f | g h"},
        {{"song", "weeks"},
         {{"it's amazing", "10"}},
         "[Header] song | weeks [Row] it's amazing | 10"},
        {{"k"}, {{"0.07"}}, "[Header] k [Row] 0.07"},
        {{"col1", "col2", "col3", "col4"},
         {{"a", "b", "c", "d"}},
         "[Header] col1 | col2 | col3 | col4 [Row] a | b | c | d"},
        {{"team", "points", "notes"},
         {{"alpha", "12", "north summer league"},
          {"beta", "7", "river harbor finals"}},
         "[Header] team | points | notes [Row] alpha | 12 | north summer "
         "league [Row] beta | 7 | river harbor finals"},
    };

    std::size_t passed = 0;
    std::string first_bad;
    for (const auto &c : cases) {
        Table t;
        t.headers = c.headers;
        t.rows = c.rows;
        const std::string got = linearize(t);
        if (got == c.expected) {
            ++passed;
        } else if (first_bad.empty()) {
            first_bad = "\n  want: " + std::string(c.expected) +
                        "\n   got: " + got;
        }
    }
    std::ostringstream detail;
    detail << passed << "/" << std::size(cases) << " fixtures byte-exact"
           << first_bad;
    report(4, "linearization goldens", passed == std::size(cases),
           detail.str());
}

// ---------------------------------------------------------------------------
// Criterion 5: two CLI synth runs with identical flags produce identical
// bytes.
// ---------------------------------------------------------------------------

void criterion_determinism(const std::filesystem::path &dir,
                           const std::vector<Table> &tables) {
    const std::filesystem::path store = dir / "det_store.jsonl";
    std::vector<Table> subset(tables.begin(),
                              tables.begin() +
                                  std::min<std::size_t>(tables.size(), 150));
    save_table_store(subset, store);

    const std::string flags = "synth --tables '" + store.string() +
                              "' --k 150 --seed 11 --scorer lexicon --jobs 4";
    const std::filesystem::path out1 = dir / "det1.jsonl";
    const std::filesystem::path out2 = dir / "det2.jsonl";
    const int rc1 =
        run_cli(flags + " --out '" + out1.string() + "'", dir / "det1.log");
    const int rc2 =
        run_cli(flags + " --out '" + out2.string() + "'", dir / "det2.log");

    const std::string b1 = read_file(out1);
    const std::string b2 = read_file(out2);
    const bool ok = rc1 == 0 && rc2 == 0 && !b1.empty() && b1 == b2;
    std::ostringstream detail;
    detail << "exit codes " << rc1 << "/" << rc2 << ", " << b1.size()
           << " bytes, fnv1a " << std::hex << fnv1a64(b1) << " vs "
           << fnv1a64(b2);
    report(5, "synth determinism", ok, detail.str());
}

// ---------------------------------------------------------------------------
// Criterion 6: select-then-rank properties on 1000 randomized pairs plus
// CLI ablation flags changing output on a fixture.
// ---------------------------------------------------------------------------

std::set<std::string> naive_tokens(const std::string &text) {
    // independent tokenizer: lowercase ASCII words/digits only
    std::set<std::string> out;
    std::string cur;
    for (char ch : text) {
        const unsigned char c = static_cast<unsigned char>(ch);
        char lower = static_cast<char>(std::tolower(c));
        if ((lower >= 'a' && lower <= 'z') || (lower >= '0' && lower <= '9')) {
            cur.push_back(lower);
        } else if (!cur.empty()) {
            out.insert(cur);
            cur.clear();
        }
    }
    if (!cur.empty())
        out.insert(cur);
    for (const auto &word : stopwords())
        out.erase(word);
    return out;
}

void criterion_select_then_rank(const std::filesystem::path &dir) {
    auto rng = rng_for_key(6, "select-then-rank");
    std::size_t checked = 0;
    std::string problem;

    for (int trial = 0; trial < 1000 && problem.empty(); ++trial) {
        Table table = random_table(rng, 10, 5);
        // random ASCII-only statement built from cells, headers and noise
        std::string statement_text;
        const std::size_t words = 3 + pick_index(rng, 8);
        for (std::size_t w = 0; w < words; ++w) {
            if (w)
                statement_text += ' ';
            const std::size_t kind = pick_index(rng, 3);
            if (kind == 0)
                statement_text +=
                    table.headers[pick_index(rng, table.column_count())];
            else if (kind == 1)
                statement_text += table.rows[pick_index(rng, table.row_count())]
                                            [pick_index(rng,
                                                        table.column_count())];
            else
                statement_text += "the quick brown fox";
        }
        Statement statement;
        statement.id = "s" + std::to_string(trial);
        statement.text = statement_text;

        const Table selected = select_columns(statement, table);
        if (selected.row_count() != table.row_count()) {
            problem = "select_columns changed the row count";
            break;
        }

        const RankedTable ranked = rank_rows(statement, selected);
        const std::size_t n = selected.row_count();
        if (ranked.row_order.size() != n || ranked.row_scores.size() != n) {
            problem = "rank output size mismatch";
            break;
        }
        // permutation & multiset preservation
        std::vector<bool> seen(n, false);
        for (std::size_t r : ranked.row_order) {
            if (r >= n || seen[r]) {
                problem = "row_order is not a permutation";
                break;
            }
            seen[r] = true;
        }
        const auto statement_tokens = naive_tokens(statement.text);
        for (std::size_t k = 0; k < n && problem.empty(); ++k) {
            // non-increasing scores
            if (k + 1 < n && ranked.row_scores[k] < ranked.row_scores[k + 1])
                problem = "row_scores increased";
            // stability: equal scores keep original relative order
            if (k + 1 < n && ranked.row_scores[k] == ranked.row_scores[k + 1] &&
                ranked.row_order[k] > ranked.row_order[k + 1])
                problem = "tie broke input order";
            // independent recomputation of p_i
            std::string row_text;
            for (const auto &cell : selected.rows[ranked.row_order[k]])
                row_text += cell + " ";
            const auto row_tokens = naive_tokens(row_text);
            std::size_t p = 0;
            for (const auto &tok : row_tokens)
                if (statement_tokens.count(tok))
                    ++p;
            if (problem.empty() && p != ranked.row_scores[k])
                problem = "p_i mismatch: got " +
                          std::to_string(ranked.row_scores[k]) + " want " +
                          std::to_string(p) + " for statement '" +
                          statement.text + "'";
        }
        ++checked;
    }

    // ablation flags must alter output on a fixture
    Table hotels;
    hotels.id = "hotels";
    hotels.headers = {"hotel", "floors", "year"};
    hotels.rows = {{"the palazzo", "53", "2007"},
                   {"las vegas hilton", "30", "1969"},
                   {"wynn tower", "45", "2005"}};
    hotels = classify_columns(std::move(hotels));
    const std::filesystem::path store = dir / "prep_store.jsonl";
    save_table_store({hotels}, store);
    const std::filesystem::path data = dir / "prep_data.jsonl";
    {
        std::ofstream out(data);
        out << R"({"id":"s1","statement":"the palazzo has more floors than las vegas hilton","label":"1","table_id":"hotels"})"
            << "\n";
    }
    const std::string base_flags = "prep --data '" + data.string() +
                                   "' --tables '" + store.string() +
                                   "' --budget 500";
    const std::filesystem::path base = dir / "prep_base.jsonl";
    const std::filesystem::path nocol = dir / "prep_nocol.jsonl";
    const std::filesystem::path norow = dir / "prep_norow.jsonl";
    const int rc1 = run_cli(base_flags + " --out '" + base.string() + "'",
                            dir / "prep1.log");
    const int rc2 = run_cli(base_flags + " --no-col --out '" +
                                nocol.string() + "'",
                            dir / "prep2.log");
    const int rc3 = run_cli(base_flags + " --no-row --out '" +
                                norow.string() + "'",
                            dir / "prep3.log");
    const std::string base_bytes = read_file(base);
    const bool ablation_ok = rc1 == 0 && rc2 == 0 && rc3 == 0 &&
                             !base_bytes.empty() &&
                             base_bytes != read_file(nocol) &&
                             base_bytes != read_file(norow);

    std::ostringstream detail;
    detail << checked << "/1000 randomized pairs clean";
    if (!problem.empty())
        detail << "; " << problem;
    detail << "; ablation flags " << (ablation_ok ? "alter" : "DO NOT alter")
           << " output";
    report(6, "select-then-rank", problem.empty() && ablation_ok,
           detail.str());
}

// ---------------------------------------------------------------------------
// Criterion 7: trigger split via the CLI: six disjoint files of exactly
// --per-type statements; the three reference examples classify correctly.
// ---------------------------------------------------------------------------

void criterion_split(const std::filesystem::path &dir) {
    const std::filesystem::path data = dir / "split_data.jsonl";
    {
        std::ofstream out(data);
        std::size_t id = 0;
        auto add = [&](const std::string &text) {
            nlohmann::ordered_json rec;
            rec["id"] = "st" + std::to_string(id++);
            rec["statement"] = text;
            rec["label"] = id % 2 ? "1" : "0";
            rec["table_id"] = "t" + std::to_string(id % 37);
            out << rec.dump() << "\n";
        };
        // 240 statements per type, disjoint trigger vocabulary by priority
        for (int i = 0; i < 240; ++i) {
            add("the second largest crowd came in round " +
                std::to_string(i)); // ordinal (second beats largest)
            add("there were " + std::to_string(i) +
                " different flags on display"); // unique ("were" loses)
            add("the total points scored reached " +
                std::to_string(i)); // aggregation
            add("the highest tower stands at " + std::to_string(i) +
                " floors"); // superlative
            add("alpha finished higher than beta in race " +
                std::to_string(i)); // comparative
            add("the final score was 2 - " + std::to_string(i)); // filter
        }
        // the three reference examples ride along
        add("the average amount of points among all teams is 29");
        add("there are 5 different nations in the tournament");
        add("the second largest number of runs was 8529");
    }

    const std::filesystem::path out_dir = dir / "splits";
    const int rc = run_cli("split --data '" + data.string() +
                               "' --per-type 200 --seed 1 --out-dir '" +
                               out_dir.string() + "'",
                           dir / "split.log");

    bool ok = rc == 0;
    std::set<std::string> all_ids;
    std::size_t total = 0;
    std::string detail_sizes;
    for (OpType op : kAllOpTypes) {
        std::ifstream in(out_dir / (std::string(to_string(op)) + ".jsonl"));
        std::size_t count = 0;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            auto rec = nlohmann::json::parse(line, nullptr, false);
            if (rec.is_discarded() ||
                !all_ids.insert(rec.value("id", "")).second)
                ok = false; // malformed or overlapping
            ++count;
        }
        ok = ok && count == 200;
        total += count;
        detail_sizes += std::string(" ") + to_string(op) + "=" +
                        std::to_string(count);
    }

    const bool examples_ok =
        classify_statement(
            "the average amount of points among all teams is 29",
            default_trigger_catalog()) == OpType::Aggregation &&
        classify_statement("there are 5 different nations in the tournament",
                           default_trigger_catalog()) == OpType::Unique &&
        classify_statement("the second largest number of runs was 8529",
                           default_trigger_catalog()) == OpType::Ordinal;

    std::ostringstream detail;
    detail << "exit " << rc << ";" << detail_sizes << "; " << all_ids.size()
           << "/" << total << " distinct ids; reference examples "
           << (examples_ok ? "classify correctly" : "MISCLASSIFY");
    report(7, "trigger split", ok && examples_ok && all_ids.size() == total,
           detail.str());
}

// ---------------------------------------------------------------------------
// Criterion 8: polisher contract (lexicon age example, mocked remote argmax,
// fallback on timeout).
// ---------------------------------------------------------------------------

void criterion_polisher() {
    const CandidateSet *higher = default_candidate_sets().find("higher");
    bool lexicon_ok = false;
    if (higher) {
        ScorerBinding lexicon;
        lexicon_ok = polish("mia has higher age than leo .", "higher",
                            *higher, lexicon) ==
                     "mia has older age than leo .";
    }

    // mocked remote with fixed scores: candidate index 1 ("more") wins
    bool remote_ok = false;
    {
        httplib::Server server;
        server.Post("/score", [](const httplib::Request &req,
                                 httplib::Response &res) {
            auto body = nlohmann::json::parse(req.body);
            nlohmann::json scores = nlohmann::json::array();
            for (const auto &item : body["items"]) {
                std::vector<double> row(item["candidates"].size(), 0.0);
                if (row.size() > 1)
                    row[1] = 3.5;
                scores.push_back(row);
            }
            res.set_content(nlohmann::json{{"scores", scores}}.dump(),
                            "application/json");
        });
        const int port = server.bind_to_any_port("127.0.0.1");
        std::thread thread([&] { server.listen_after_bind(); });
        server.wait_until_ready();

        ScorerBinding remote;
        remote.kind = ScorerKind::Remote;
        remote.endpoint =
            "http://127.0.0.1:" + std::to_string(port) + "/score";
        remote.timeout = std::chrono::milliseconds(2000);
        PolishCounters counters;
        if (higher)
            remote_ok = polish("mia has higher score than leo .", "higher",
                               *higher, remote, &counters) ==
                            "mia has more score than leo ." &&
                        counters.remote_fallbacks == 0;
        server.stop();
        thread.join();
    }

    // timeout falls back to the lexicon
    bool fallback_ok = false;
    {
        httplib::Server server;
        server.Post("/score", [](const httplib::Request &,
                                 httplib::Response &res) {
            std::this_thread::sleep_for(std::chrono::milliseconds(1200));
            res.set_content(R"({"scores":[[0,0,0,0,9]]})", "application/json");
        });
        const int port = server.bind_to_any_port("127.0.0.1");
        std::thread thread([&] { server.listen_after_bind(); });
        server.wait_until_ready();

        ScorerBinding slow;
        slow.kind = ScorerKind::Remote;
        slow.endpoint = "http://127.0.0.1:" + std::to_string(port) + "/score";
        slow.timeout = std::chrono::milliseconds(150);
        PolishCounters counters;
        if (higher)
            fallback_ok = polish("mia has higher age than leo .", "higher",
                                 *higher, slow, &counters) ==
                              "mia has older age than leo ." &&
                          counters.remote_fallbacks == 1;
        server.stop();
        thread.join();
    }

    std::ostringstream detail;
    detail << "lexicon age example " << (lexicon_ok ? "selects 'older'" : "BROKEN")
           << "; remote argmax " << (remote_ok ? "ok" : "BROKEN")
           << "; timeout fallback " << (fallback_ok ? "ok" : "BROKEN");
    report(8, "polisher contract", lexicon_ok && remote_ok && fallback_ok,
           detail.str());
}

} // namespace

int main() {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "pasta_acceptance";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);

    criterion_oracle();

    const std::vector<Table> tables = fixture_tables(1200, 99);
    criteria_corpus(tables);
    criterion_linearize();
    criterion_determinism(dir, tables);
    criterion_select_then_rank(dir);
    criterion_split(dir);
    criterion_polisher();

    std::filesystem::remove_all(dir);
    if (failures != 0) {
        std::cout << failures << " criteria FAILED" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
