#include "pasta/cloze.hpp"
#include "pasta/generate.hpp"
#include "pasta/ingest.hpp"
#include "pasta/polish.hpp"
#include "pasta/prep.hpp"
#include "pasta/store.hpp"
#include "pasta/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Configuration file support: flags > config file > built-in defaults.
// The file is a flat JSON object keyed by long option names.
struct Config {
    json doc = json::object();

    void load(const std::string &path) {
        std::ifstream in(path);
        if (!in)
            throw UsageError("cannot open config file: " + path);
        doc = json::parse(in, nullptr, false);
        if (doc.is_discarded() || !doc.is_object())
            throw UsageError("config file must hold a JSON object: " + path);
    }

    template <typename T> void apply(const char *key, T &value) const {
        if (doc.contains(key)) {
            try {
                value = doc[key].get<T>();
            } catch (const json::exception &) {
                throw UsageError(std::string("config key '") + key +
                                 "' has the wrong type");
            }
        }
    }
};

std::uint64_t parallel_jobs(std::size_t requested) {
    if (requested > 0)
        return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs fn(i) for i in [0, count) on `jobs` workers. Exceptions surface on
// the caller thread.
void parallel_for(std::size_t count, std::size_t jobs,
                  const std::function<void(std::size_t)> &fn) {
    if (count == 0)
        return;
    jobs = std::min<std::size_t>(std::max<std::size_t>(jobs, 1), count);
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    next.store(count);
                    return;
                }
            }
        });
    }
    for (auto &worker : workers)
        worker.join();
    if (error)
        std::rethrow_exception(error);
}

std::string report_to_json(const pasta::IngestReport &report) {
    ordered_json doc;
    doc["total_seen"] = report.total_seen;
    doc["accepted"] = report.accepted;
    doc["rejected_by_reason"] = report.rejected_by_reason;
    return doc.dump(2);
}

void write_text_file(const std::filesystem::path &path,
                     const std::string &content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw pasta::IoError("cannot write: " + path.string());
    out << content;
    if (!out.flush())
        throw pasta::IoError("failed writing: " + path.string());
}

// ---------------------------------------------------------------------------
// ingest
// ---------------------------------------------------------------------------

struct IngestArgs {
    std::string format = "wikitables-json";
    std::string input;
    std::string output;
    std::size_t max_cells = 500;
    std::string report_path;
    bool no_filter = false;
};

int cmd_ingest(const IngestArgs &args) {
    pasta::IngestFormat format;
    if (args.format == "wikitables-json")
        format = pasta::IngestFormat::WikitablesJson;
    else if (args.format == "csv-dir")
        format = pasta::IngestFormat::CsvDir;
    else
        throw UsageError("unknown --format: " + args.format);

    if (!std::filesystem::exists(args.input))
        throw UsageError("input path does not exist: " + args.input);

    std::vector<pasta::Table> kept;
    pasta::IngestReport report;
    pasta::ingest_tables(
        args.input, format,
        [&](pasta::Table &&table) {
            if (args.no_filter ||
                pasta::filter_pretrain_eligible(table, args.max_cells)) {
                kept.push_back(std::move(table));
            } else {
                // counted as rejected, keeping the report invariant
                --report.accepted;
                ++report.rejected_by_reason["not-pretrain-eligible"];
            }
        },
        report);

    std::filesystem::path out = args.output;
    if (out.extension() != ".jsonl")
        out /= "tables.jsonl";
    pasta::save_table_store(kept, out);

    const std::string text = report_to_json(report);
    if (args.report_path.empty())
        std::cerr << text << '\n';
    else
        write_text_file(args.report_path, text);
    std::cerr << "stored " << kept.size() << " tables at " << out.string()
              << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------------------
// synth
// ---------------------------------------------------------------------------

struct SynthArgs {
    std::string tables;
    std::size_t k = 0; // 0 = all eligible
    std::uint64_t seed = 0;
    std::string output;
    std::size_t max_per_table = 100;
    std::size_t max_cells = 500;
    std::string weights;
    std::string scorer = "lexicon";
    std::string scorer_url;
    std::uint64_t timeout_ms = 2000;
    bool strict = false;
    std::size_t jobs = 0;
    std::string stats_path;
    std::string templates_path;
    std::string candidates_path;
};

std::map<pasta::OpType, double> parse_weights(const std::string &spec) {
    auto weights = pasta::default_type_weights();
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw UsageError("bad --weights entry: " + item);
        const auto op = pasta::optype_from_string(item.substr(0, eq));
        if (!op)
            throw UsageError("unknown op type in --weights: " + item);
        try {
            weights[*op] = std::stod(item.substr(eq + 1));
        } catch (const std::exception &) {
            throw UsageError("bad weight value: " + item);
        }
        if (weights[*op] < 0 || !std::isfinite(weights[*op]))
            throw UsageError("weights must be finite and non-negative");
    }
    return weights;
}

int cmd_synth(const SynthArgs &args) {
    const auto t0 = std::chrono::steady_clock::now();

    const pasta::TemplateCatalog catalog =
        args.templates_path.empty()
            ? pasta::default_catalog()
            : pasta::load_templates(args.templates_path);
    const pasta::CandidateCatalog candidates =
        args.candidates_path.empty()
            ? pasta::default_candidate_sets()
            : pasta::load_candidate_sets(args.candidates_path);

    pasta::ScorerBinding scorer;
    if (args.scorer == "lexicon") {
        scorer.kind = pasta::ScorerKind::Lexicon;
    } else if (args.scorer == "remote") {
        scorer.kind = pasta::ScorerKind::Remote;
        scorer.endpoint = args.scorer_url;
        if (scorer.endpoint.empty()) {
            const char *env = std::getenv("PASTA_SCORER_URL");
            if (env)
                scorer.endpoint = env;
        }
        if (scorer.endpoint.empty())
            throw UsageError(
                "--scorer remote needs --scorer-url or PASTA_SCORER_URL");
        scorer.timeout = std::chrono::milliseconds(args.timeout_ms);
    } else {
        throw UsageError("unknown --scorer: " + args.scorer);
    }

    if (args.max_per_table == 0)
        throw UsageError("--max-per-table must be at least 1");
    pasta::GenerationConfig config;
    config.seed = args.seed;
    config.max_per_table = args.max_per_table;
    config.type_weights = parse_weights(args.weights);

    std::vector<pasta::Table> tables =
        pasta::load_table_store(pasta::resolve_store_path(args.tables));
    std::vector<pasta::Table> eligible;
    for (auto &table : tables)
        if (pasta::filter_pretrain_eligible(table, args.max_cells))
            eligible.push_back(std::move(table));
    std::cerr << "eligible tables: " << eligible.size() << " of "
              << tables.size() << '\n';

    const std::size_t k = args.k == 0 ? eligible.size() : args.k;
    if (k > eligible.size())
        throw UsageError("--k exceeds the eligible table count (" +
                         std::to_string(eligible.size()) + ")");
    const std::vector<pasta::Table> sample =
        pasta::sample_tables(eligible, k, args.seed);

    std::vector<std::vector<pasta::ClozeExample>> per_table(sample.size());
    std::vector<pasta::GenStats> stats(sample.size());
    std::vector<pasta::PolishCounters> polish_counts(sample.size());
    std::mutex discard_mutex;
    std::map<std::string, std::uint64_t> mask_discards;

    parallel_for(sample.size(), parallel_jobs(args.jobs), [&](std::size_t i) {
        const pasta::Table &table = sample[i];
        auto instantiations =
            pasta::generate_for_table(table, catalog, config, &stats[i]);
        pasta::polish_instantiations(instantiations, candidates, scorer,
                                     polish_counts[i], args.strict);
        const std::string linearized = pasta::linearize(table);
        std::size_t index = 0;
        for (const auto &inst : instantiations) {
            std::string reason;
            auto example = pasta::mask_answer(inst, &reason);
            if (!example) {
                std::lock_guard<std::mutex> lock(discard_mutex);
                ++mask_discards[reason];
                continue;
            }
            example->id = table.id + "-" + std::to_string(index++);
            example->table_id = table.id;
            example->linearized_table = linearized;
            per_table[i].push_back(std::move(*example));
        }
    });

    // streamed in (table id, within-table index) order; sample_tables
    // already sorted the sample by id
    const std::filesystem::path out_path(args.output);
    if (out_path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(out_path.parent_path(), ec);
    }
    std::uint64_t written = 0;
    {
        std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw pasta::IoError("cannot open corpus for writing: " +
                                 args.output);
        for (const auto &chunk : per_table) {
            for (const auto &example : chunk) {
                out << pasta::to_jsonl_line(example) << '\n';
                ++written;
            }
        }
        if (!out.flush()) {
            out.close();
            std::error_code ec;
            std::filesystem::remove(out_path, ec);
            throw pasta::IoError("failed writing corpus: " + args.output);
        }
    }

    pasta::GenStats total_stats;
    for (const auto &s : stats)
        total_stats.merge(s);
    pasta::PolishCounters polish_total;
    for (const auto &c : polish_counts) {
        polish_total.polished += c.polished;
        polish_total.kept_anchor += c.kept_anchor;
        polish_total.remote_fallbacks += c.remote_fallbacks;
        polish_total.skipped += c.skipped;
    }

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    std::cerr << "wrote " << written << " examples to " << args.output
              << " in " << elapsed.count() << " ms\n";
    std::cerr << "generation: slots=" << total_stats.slots
              << " emitted=" << total_stats.emitted
              << " abandoned=" << total_stats.abandoned_slots
              << " attempts=" << total_stats.attempts << '\n';
    for (const auto &[reason, count] : total_stats.discards)
        std::cerr << "  discard " << reason << ": " << count << '\n';
    for (const auto &[reason, count] : mask_discards)
        std::cerr << "  mask discard " << reason << ": " << count << '\n';
    std::cerr << "polish: replaced=" << polish_total.polished
              << " kept=" << polish_total.kept_anchor
              << " skipped=" << polish_total.skipped
              << " remote_fallbacks=" << polish_total.remote_fallbacks
              << '\n';
    if (polish_total.remote_fallbacks > 0)
        std::cerr << "warning: remote scorer fell back to the lexicon for "
                  << polish_total.remote_fallbacks << " sentences\n";

    // stats are recomputed from the file just written
    const pasta::CorpusStats cs = pasta::corpus_stats(
        std::filesystem::path(args.output));
    const std::string stats_text = pasta::stats_to_json(cs);
    if (args.stats_path.empty())
        std::cerr << stats_text << '\n';
    else
        write_text_file(args.stats_path, stats_text);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// prep
// ---------------------------------------------------------------------------

struct PrepArgs {
    std::string data;
    std::string tables;
    std::size_t budget = 500;
    std::string output;
    bool no_col = false;
    bool no_row = false;
    std::size_t jobs = 0;
};

struct StatementRecord {
    pasta::Statement statement;
    std::string raw_line;
};

std::vector<StatementRecord> read_statements(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open statements file: " + path);
    std::vector<StatementRecord> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        json record = json::parse(line, nullptr, false);
        if (record.is_discarded() || !record.is_object())
            throw UsageError("bad statement record at " + path + ":" +
                             std::to_string(line_no));
        StatementRecord rec;
        rec.statement.id = record.value("id", "");
        rec.statement.text = record.value("statement", "");
        rec.statement.label =
            record.contains("label") ? record["label"] : json();
        rec.statement.table_id = record.value("table_id", "");
        if (rec.statement.id.empty() || rec.statement.text.empty())
            throw UsageError("statement record needs id and statement at " +
                             path + ":" + std::to_string(line_no));
        rec.raw_line = line;
        out.push_back(std::move(rec));
    }
    return out;
}

int cmd_prep(const PrepArgs &args) {
    const auto by_id =
        pasta::load_table_store_by_id(pasta::resolve_store_path(args.tables));
    std::vector<StatementRecord> records = read_statements(args.data);
    std::stable_sort(records.begin(), records.end(),
                     [](const StatementRecord &a, const StatementRecord &b) {
                         return a.statement.id < b.statement.id;
                     });

    pasta::PrepOptions options;
    options.budget = args.budget;
    options.column_selection = !args.no_col;
    options.row_ranking = !args.no_row;

    std::vector<std::optional<pasta::PreparedRecord>> prepared(records.size());
    std::atomic<std::uint64_t> missing_tables{0};
    std::atomic<std::uint64_t> budget_failures{0};

    parallel_for(records.size(), parallel_jobs(args.jobs),
                 [&](std::size_t i) {
                     const pasta::Statement &s = records[i].statement;
                     auto it = by_id.find(s.table_id);
                     if (it == by_id.end()) {
                         ++missing_tables;
                         return;
                     }
                     try {
                         prepared[i] = pasta::prepare_pair(s, it->second,
                                                           options);
                     } catch (const pasta::BudgetError &) {
                         ++budget_failures;
                     }
                 });

    std::ofstream out(args.output, std::ios::binary | std::ios::trunc);
    if (!out)
        throw pasta::IoError("cannot open output: " + args.output);
    std::uint64_t written = 0;
    for (const auto &record : prepared) {
        if (!record)
            continue;
        ordered_json doc;
        doc["id"] = record->id;
        doc["statement"] = record->text;
        doc["label"] = record->label;
        doc["linearized_table"] = record->linearized_table;
        out << doc.dump() << '\n';
        ++written;
    }
    if (!out.flush())
        throw pasta::IoError("failed writing: " + args.output);

    std::cerr << "prepared " << written << " of " << records.size()
              << " records (missing tables: " << missing_tables.load()
              << ", budget failures: " << budget_failures.load() << ")\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// split
// ---------------------------------------------------------------------------

struct SplitArgs {
    std::string data;
    std::size_t per_type = 200;
    std::uint64_t seed = 1;
    std::string out_dir = ".";
    std::string triggers_path;
};

int cmd_split(const SplitArgs &args) {
    const pasta::TriggerCatalog catalog =
        args.triggers_path.empty()
            ? pasta::default_trigger_catalog()
            : pasta::load_trigger_catalog(args.triggers_path);

    std::vector<StatementRecord> records = read_statements(args.data);
    std::vector<pasta::Statement> statements;
    statements.reserve(records.size());
    std::map<std::string, const std::string *> raw_by_id;
    for (const auto &rec : records) {
        statements.push_back(rec.statement);
        raw_by_id[rec.statement.id] = &rec.raw_line;
    }

    std::map<pasta::OpType, std::vector<pasta::Statement>> split;
    try {
        split = pasta::split_by_trigger(statements, catalog, args.per_type,
                                        args.seed);
    } catch (const pasta::ShortfallError &e) {
        std::cerr << "error: " << e.what() << '\n';
        for (const auto &[op, count] : e.counts)
            std::cerr << "  " << pasta::to_string(op) << ": " << count
                      << " classified\n";
        return kExitUsage;
    }

    std::filesystem::create_directories(args.out_dir);
    for (pasta::OpType op : pasta::kAllOpTypes) {
        const std::filesystem::path path =
            std::filesystem::path(args.out_dir) /
            (std::string(pasta::to_string(op)) + ".jsonl");
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw pasta::IoError("cannot open output: " + path.string());
        for (const auto &s : split.at(op))
            out << *raw_by_id.at(s.id) << '\n';
        if (!out.flush())
            throw pasta::IoError("failed writing: " + path.string());
        std::cerr << path.string() << ": " << split.at(op).size()
                  << " statements\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify-oracle
// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::uint64_t trials = 10000;
    std::uint64_t seed = 3;
};

int cmd_verify_oracle(const VerifyArgs &args) {
    if (args.trials == 0) {
        std::cerr << "warning: 0 trials requested; vacuous pass\n";
        std::cout << "verify-oracle: 0/0 agreements\n";
        return kExitOk;
    }
    const auto t0 = std::chrono::steady_clock::now();
    const pasta::OracleReport report =
        pasta::run_oracle_verification(args.trials, args.seed);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);

    std::cout << "verify-oracle: " << report.agreements << "/"
              << report.trials << " agreements ("
              << report.errors_agreed << " agreed error cases, "
              << elapsed.count() << " ms)\n";
    if (!report.ok()) {
        std::cout << "first counterexample:\n"
                  << report.first_mismatch << '\n';
        return kExitVerifyFailure;
    }
    return kExitOk;
}

std::string config_path_from_argv(int argc, char **argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config")
            return argv[i + 1];
    return "";
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Operation-aware sentence-table cloze corpus toolkit"};
    app.require_subcommand(1);

    Config cfg;
    try {
        const std::string cfg_path = config_path_from_argv(argc, argv);
        if (!cfg_path.empty())
            cfg.load(cfg_path);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    // --config is pre-scanned above; registering it everywhere keeps the
    // parser happy wherever it appears.
    std::string config_path;
    app.add_option("--config", config_path,
                   "JSON config file (flags take precedence)");

    IngestArgs ingest;
    cfg.apply("format", ingest.format);
    cfg.apply("max-cells", ingest.max_cells);
    auto *ingest_cmd =
        app.add_subcommand("ingest", "Normalize a table dump into a store");
    ingest_cmd->add_option("--config", config_path,
                   "JSON config file (flags take precedence)");
    ingest_cmd->add_option("--format", ingest.format,
                           "wikitables-json or csv-dir");
    ingest_cmd->add_option("--in", ingest.input, "dump path")->required();
    ingest_cmd->add_option("--out", ingest.output, "store file or directory")
        ->required();
    ingest_cmd->add_option("--max-cells", ingest.max_cells,
                           "eligibility cell budget");
    ingest_cmd->add_option("--report", ingest.report_path,
                           "write the ingest report here instead of stderr");
    ingest_cmd->add_flag("--no-eligibility-filter", ingest.no_filter,
                         "store all well-formed tables (for fine-tune data)");

    SynthArgs synth;
    cfg.apply("seed", synth.seed);
    cfg.apply("k", synth.k);
    cfg.apply("max-per-table", synth.max_per_table);
    cfg.apply("max-cells", synth.max_cells);
    cfg.apply("weights", synth.weights);
    cfg.apply("scorer", synth.scorer);
    cfg.apply("scorer-url", synth.scorer_url);
    cfg.apply("timeout-ms", synth.timeout_ms);
    cfg.apply("jobs", synth.jobs);
    auto *synth_cmd =
        app.add_subcommand("synth", "Synthesize the cloze corpus");
    synth_cmd->add_option("--config", config_path,
                   "JSON config file (flags take precedence)");
    synth_cmd->add_option("--tables", synth.tables, "table store")->required();
    synth_cmd->add_option("--k", synth.k, "tables to sample (0 = all)");
    synth_cmd->add_option("--seed", synth.seed, "global seed");
    synth_cmd->add_option("--out", synth.output, "corpus JSONL path")
        ->required();
    synth_cmd->add_option("--max-per-table", synth.max_per_table,
                          "sentence cap per table");
    synth_cmd->add_option("--max-cells", synth.max_cells,
                          "eligibility cell budget");
    synth_cmd->add_option("--weights", synth.weights,
                          "op-type weights, e.g. aggregation=0.30,unique=0.02");
    synth_cmd->add_option("--scorer", synth.scorer, "lexicon or remote");
    synth_cmd->add_option("--scorer-url", synth.scorer_url,
                          "remote scorer endpoint (or PASTA_SCORER_URL)");
    synth_cmd->add_option("--timeout-ms", synth.timeout_ms,
                          "remote scorer timeout");
    synth_cmd->add_flag("--strict", synth.strict,
                        "abort instead of lexicon fallback on scorer failure");
    synth_cmd->add_option("--jobs", synth.jobs, "worker threads (0 = auto)");
    synth_cmd->add_option("--stats", synth.stats_path,
                          "write corpus stats JSON here instead of stderr");
    synth_cmd->add_option("--templates", synth.templates_path,
                          "template catalog (default: built-in 50 pairs)");
    synth_cmd->add_option("--candidates", synth.candidates_path,
                          "candidate set catalog (default: built-in)");

    PrepArgs prep;
    cfg.apply("budget", prep.budget);
    cfg.apply("jobs", prep.jobs);
    auto *prep_cmd = app.add_subcommand(
        "prep", "Select-then-rank preprocessing of statement-table pairs");
    prep_cmd->add_option("--config", config_path,
                   "JSON config file (flags take precedence)");
    prep_cmd->add_option("--data", prep.data, "statements JSONL")->required();
    prep_cmd->add_option("--tables", prep.tables, "table store")->required();
    prep_cmd->add_option("--budget", prep.budget, "cell budget");
    prep_cmd->add_option("--out", prep.output, "output JSONL")->required();
    prep_cmd->add_flag("--no-col", prep.no_col, "disable column selection");
    prep_cmd->add_flag("--no-row", prep.no_row, "disable row ranking");
    prep_cmd->add_option("--jobs", prep.jobs, "worker threads (0 = auto)");

    SplitArgs split;
    cfg.apply("per-type", split.per_type);
    cfg.apply("seed", split.seed);
    auto *split_cmd = app.add_subcommand(
        "split", "Split statements into per-operation evaluation sets");
    split_cmd->add_option("--config", config_path,
                   "JSON config file (flags take precedence)");
    split_cmd->add_option("--data", split.data, "statements JSONL")
        ->required();
    split_cmd->add_option("--per-type", split.per_type, "set size per type");
    split_cmd->add_option("--seed", split.seed, "sampling seed");
    split_cmd->add_option("--out-dir", split.out_dir, "output directory")
        ->required();
    split_cmd->add_option("--triggers", split.triggers_path,
                          "trigger catalog (default: built-in)");

    VerifyArgs verify;
    cfg.apply("trials", verify.trials);
    cfg.apply("seed", verify.seed);
    auto *verify_cmd = app.add_subcommand(
        "verify-oracle", "Cross-check the evaluator against the oracle");
    verify_cmd->add_option("--config", config_path,
                   "JSON config file (flags take precedence)");
    verify_cmd->add_option("--trials", verify.trials, "randomized trials");
    verify_cmd->add_option("--seed", verify.seed, "generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*ingest_cmd)
            return cmd_ingest(ingest);
        if (*synth_cmd)
            return cmd_synth(synth);
        if (*prep_cmd)
            return cmd_prep(prep);
        if (*split_cmd)
            return cmd_split(split);
        if (*verify_cmd)
            return cmd_verify_oracle(verify);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const pasta::RemoteScorerError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFailure;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
