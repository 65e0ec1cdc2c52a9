#include "pasta/cloze.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace pasta;

namespace {

Table tiny_table() {
    Table t;
    t.id = "tiny";
    t.headers = {"a", "b"};
    t.rows = {{"1", "2"}};
    return classify_columns(std::move(t));
}

Instantiation answer_inst() {
    Instantiation inst;
    inst.op_type = OpType::Filter;
    inst.sentence = "x 's capacity is 114 .";
    inst.answer = "114";
    inst.answer_span = {17, 20};
    inst.mask_answer_slot = true;
    inst.mask_span = inst.answer_span;
    inst.mask_word = inst.answer;
    return inst;
}

} // namespace

TEST_CASE("linearization format") {
    CHECK(linearize(tiny_table()) == "[Header] a | b [Row] 1 | 2");

    Table two = tiny_table();
    two.rows.push_back({"3", "4"});
    CHECK(linearize(two) == "[Header] a | b [Row] 1 | 2 [Row] 3 | 4");

    Table one_col;
    one_col.headers = {"only"};
    one_col.rows = {{"x"}, {""}};
    CHECK(linearize(one_col) == "[Header] only [Row] x [Row] ");
}

TEST_CASE("linearization token structure") {
    // marker/cell/separator counts: (n+1) markers, m(n+1) cells,
    // (m-1)(n+1) separators
    Table t;
    t.headers = {"a", "b", "c"};
    t.rows = {{"1", "2", "3"}, {"4", "5", "6"}};
    const std::string s = linearize(t);

    std::size_t markers = 0, separators = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.compare(i, 8, "[Header]") == 0 || s.compare(i, 5, "[Row]") == 0)
            ++markers;
        if (s.compare(i, 3, " | ") == 0)
            ++separators;
    }
    const std::size_t m = t.column_count(), n = t.row_count();
    CHECK(markers == n + 1);
    CHECK(separators == (m - 1) * (n + 1));

    // a parser of the format recovers the cell grid
    REQUIRE(s.rfind("[Header] ", 0) == 0);
    std::vector<std::vector<std::string>> groups;
    std::size_t pos = 9;
    while (true) {
        const std::size_t next = s.find(" [Row] ", pos);
        const std::string chunk = s.substr(
            pos, next == std::string::npos ? std::string::npos : next - pos);
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true) {
            const std::size_t bar = chunk.find(" | ", start);
            cells.push_back(chunk.substr(start, bar == std::string::npos
                                                    ? std::string::npos
                                                    : bar - start));
            if (bar == std::string::npos)
                break;
            start = bar + 3;
        }
        groups.push_back(std::move(cells));
        if (next == std::string::npos)
            break;
        pos = next + 7;
    }
    REQUIRE(groups.size() == n + 1);
    for (const auto &group : groups)
        CHECK(group.size() == m);
    CHECK(groups[0] == t.headers);
    CHECK(groups[1] == t.rows[0]);
}

TEST_CASE("mask_answer on the answer slot") {
    const auto example = mask_answer(answer_inst());
    REQUIRE(example);
    CHECK(example->answer == "114");
    CHECK(example->masked_sentence == "x 's capacity is [MASK] .");
    CHECK(example->sentence.substr(example->answer_span.begin,
                                   example->answer_span.size()) ==
          example->answer);
}

TEST_CASE("mask_answer on a designated word") {
    Instantiation inst;
    inst.op_type = OpType::Comparative;
    inst.sentence = "alpha 's score is higher than 68 .";
    inst.answer = "alpha";
    inst.answer_span = {0, 5};
    inst.mask_answer_slot = false;
    inst.mask_word = "higher";
    inst.mask_span = {18, 24};

    const auto example = mask_answer(inst);
    REQUIRE(example);
    CHECK(example->answer == "higher");
    CHECK(example->masked_sentence == "alpha 's score is [MASK] than 68 .");
}

TEST_CASE("mask word gone missing is rejected with a reason") {
    Instantiation inst;
    inst.sentence = "nothing to see";
    inst.mask_answer_slot = false;
    inst.mask_word = "higher";
    inst.mask_span = {0, 7};
    std::string reason;
    CHECK_FALSE(mask_answer(inst, &reason));
    CHECK(reason == "mask-word-missing");

    inst.mask_span = {0, 99};
    CHECK_FALSE(mask_answer(inst, &reason));
    CHECK(reason == "mask-span-out-of-range");
}

TEST_CASE("answer at the end of the sentence") {
    Instantiation inst;
    inst.op_type = OpType::Filter;
    inst.sentence = "the capacity is 114";
    inst.answer = "114";
    inst.answer_span = {16, 19};
    inst.mask_answer_slot = true;
    inst.mask_span = inst.answer_span;
    inst.mask_word = inst.answer;

    const auto example = mask_answer(inst);
    REQUIRE(example);
    CHECK(example->answer_span.end == example->sentence.size());
    CHECK(example->masked_sentence == "the capacity is [MASK]");
}

TEST_CASE("unmasking reproduces the sentence byte-exactly") {
    auto example = mask_answer(answer_inst());
    REQUIRE(example);
    std::string rebuilt = example->masked_sentence;
    const std::size_t at = rebuilt.find(kMaskSentinel);
    REQUIRE(at != std::string::npos);
    rebuilt.replace(at, std::string(kMaskSentinel).size(), example->answer);
    CHECK(rebuilt == example->sentence);
}

TEST_CASE("corpus emission round trip and determinism") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "pasta_test_corpus";
    fs::create_directories(dir);
    const fs::path path = dir / "corpus.jsonl";

    std::vector<ClozeExample> examples;
    for (int i = 0; i < 3; ++i) {
        auto example = mask_answer(answer_inst());
        REQUIRE(example);
        example->id = "tiny-" + std::to_string(i);
        example->table_id = "tiny";
        example->op_type = i == 0 ? OpType::Unique : OpType::Filter;
        if (i == 0)
            example->answer = "5";
        example->linearized_table = linearize(tiny_table());
        examples.push_back(std::move(*example));
    }

    CHECK(emit_corpus(examples, path) == 3);
    std::ifstream in(path, std::ios::binary);
    std::string first((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
    CHECK(emit_corpus(examples, path) == 3);
    std::ifstream in2(path, std::ios::binary);
    std::string second((std::istreambuf_iterator<char>(in2)),
                       std::istreambuf_iterator<char>());
    CHECK(first == second);

    // schema keys in order
    CHECK(first.rfind("{\"id\":\"tiny-0\",\"op_type\":\"unique\","
                      "\"table_id\":\"tiny\",\"sentence\":",
                      0) == 0);

    SUBCASE("stats from the file") {
        const CorpusStats stats = corpus_stats(path);
        CHECK(stats.total == 3);
        CHECK(stats.per_type.at(OpType::Unique).count == 1);
        CHECK(stats.per_type.at(OpType::Unique).mean_answer_tokens ==
              doctest::Approx(1.0));
        CHECK(stats.per_type.at(OpType::Filter).count == 2);
        double share_sum = 0;
        for (const auto &[op, ts] : stats.per_type)
            share_sum += ts.share;
        CHECK(share_sum == doctest::Approx(1.0).epsilon(1e-9));
    }

    SUBCASE("empty corpus") {
        CHECK(emit_corpus({}, path) == 0);
        CHECK(fs::file_size(path) == 0);
        CHECK(corpus_stats(path).total == 0);
    }

    fs::remove_all(dir);
}
