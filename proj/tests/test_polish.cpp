#include "pasta/polish.hpp"

#include <doctest.h>
#include <httplib.h>
#include <nlohmann/json.hpp>

#include <thread>

using namespace pasta;

namespace {

struct MockScorer {
    httplib::Server server;
    std::thread thread;
    int port = 0;

    explicit MockScorer(httplib::Server::Handler handler) {
        server.Post("/score", std::move(handler));
        port = server.bind_to_any_port("127.0.0.1");
        thread = std::thread([this] { server.listen_after_bind(); });
        server.wait_until_ready();
    }

    ~MockScorer() {
        server.stop();
        thread.join();
    }

    ScorerBinding binding(std::chrono::milliseconds timeout =
                              std::chrono::milliseconds(2000)) const {
        ScorerBinding b;
        b.kind = ScorerKind::Remote;
        b.endpoint = "http://127.0.0.1:" + std::to_string(port) + "/score";
        b.timeout = timeout;
        return b;
    }
};

} // namespace

TEST_CASE("default candidate sets are the shipped four") {
    const CandidateCatalog &catalog = default_candidate_sets();
    CHECK(catalog.sets.size() == 4);
    const CandidateSet *lowest = catalog.find("lowest");
    REQUIRE(lowest);
    CHECK(lowest->candidates ==
          std::vector<std::string>{"lowest", "least", "smallest", "youngest",
                                   "shortest"});
    for (const auto &set : catalog.sets) {
        CHECK_FALSE(set.candidates.empty());
        CHECK(std::count(set.candidates.begin(), set.candidates.end(),
                         set.anchor) == 1);
    }
}

TEST_CASE("lexicon picks 'older' for age sentences") {
    const CandidateSet *set = default_candidate_sets().find("higher");
    REQUIRE(set);
    ScorerBinding lexicon;
    const std::string polished = polish(
        "alice has higher age than 30 .", "higher", *set, lexicon);
    CHECK(polished == "alice has older age than 30 .");
}

TEST_CASE("lexicon keeps the anchor without a keyword") {
    const CandidateSet *set = default_candidate_sets().find("higher");
    REQUIRE(set);
    ScorerBinding lexicon;
    PolishCounters counters;
    const std::string polished = polish(
        "alpha has higher score than 68 .", "higher", *set, lexicon,
        &counters);
    CHECK(polished == "alpha has higher score than 68 .");
    CHECK(counters.kept_anchor == 1);
    CHECK(counters.polished == 0);
}

TEST_CASE("lexicon scoring is a pure function of tokens and set") {
    const CandidateSet *set = default_candidate_sets().find("highest");
    REQUIRE(set);
    const auto a = score_candidates_lexicon("the highest age is 4 .", *set);
    const auto b = score_candidates_lexicon("the highest age is 4 .", *set);
    CHECK(a == b);
    REQUIRE(a.size() == set->candidates.size());
    // "oldest" outranks everything else for an age sentence
    const std::size_t oldest =
        std::find(set->candidates.begin(), set->candidates.end(), "oldest") -
        set->candidates.begin();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (i != oldest)
            CHECK(a[oldest] > a[i]);
}

TEST_CASE("polish requires exactly one anchor occurrence") {
    const CandidateSet *set = default_candidate_sets().find("higher");
    REQUIRE(set);
    ScorerBinding lexicon;
    CHECK_THROWS_AS(polish("no anchor here .", "higher", *set, lexicon),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        polish("higher and higher .", "higher", *set, lexicon),
        std::invalid_argument);
}

TEST_CASE("remote scorer argmax and response validation") {
    MockScorer mock([](const httplib::Request &req, httplib::Response &res) {
        // score the last candidate highest, everything else zero
        nlohmann::json body = nlohmann::json::parse(req.body);
        nlohmann::json scores = nlohmann::json::array();
        for (const auto &item : body["items"]) {
            std::vector<double> row(item["candidates"].size(), 0.0);
            row.back() = 5.0;
            scores.push_back(row);
        }
        res.set_content(nlohmann::json{{"scores", scores}}.dump(),
                        "application/json");
    });

    const CandidateSet *set = default_candidate_sets().find("higher");
    REQUIRE(set);
    PolishCounters counters;
    const std::string polished = polish("bob has higher score than 7 .",
                                        "higher", *set, mock.binding(),
                                        &counters);
    CHECK(polished == "bob has older score than 7 ."); // last candidate
    CHECK(counters.polished == 1);
    CHECK(counters.remote_fallbacks == 0);

    SUBCASE("scores come back in candidate order") {
        const auto scores = score_candidates_remote(
            {{"x [MASK] y", {"a", "b", "c"}}}, mock.binding());
        CHECK(scores == std::vector<std::vector<double>>{{0.0, 0.0, 5.0}});
    }

    SUBCASE("empty candidate list is an error") {
        CHECK_THROWS_AS(
            score_candidates_remote({{"x [MASK] y", {}}}, mock.binding()),
            RemoteScorerError);
    }
}

TEST_CASE("malformed remote responses are rejected") {
    SUBCASE("NaN score") {
        MockScorer mock([](const httplib::Request &,
                           httplib::Response &res) {
            res.set_content(R"({"scores": [[1.0, null]]})",
                            "application/json");
        });
        CHECK_THROWS_AS(score_candidates_remote({{"s", {"a", "b"}}},
                                                mock.binding()),
                        RemoteScorerError);
    }
    SUBCASE("shape mismatch") {
        MockScorer mock([](const httplib::Request &,
                           httplib::Response &res) {
            res.set_content(R"({"scores": [[1.0]]})", "application/json");
        });
        CHECK_THROWS_AS(score_candidates_remote({{"s", {"a", "b"}}},
                                                mock.binding()),
                        RemoteScorerError);
    }
    SUBCASE("http error status") {
        MockScorer mock([](const httplib::Request &,
                           httplib::Response &res) { res.status = 500; });
        CHECK_THROWS_AS(score_candidates_remote({{"s", {"a", "b"}}},
                                                mock.binding()),
                        RemoteScorerError);
    }
}

TEST_CASE("remote failure falls back to the lexicon") {
    const CandidateSet *set = default_candidate_sets().find("higher");
    REQUIRE(set);

    SUBCASE("unreachable endpoint") {
        ScorerBinding dead;
        dead.kind = ScorerKind::Remote;
        dead.endpoint = "http://127.0.0.1:9/score"; // discard port, refused
        dead.timeout = std::chrono::milliseconds(300);
        PolishCounters counters;
        const std::string polished = polish("eve has higher age than 4 .",
                                            "higher", *set, dead, &counters);
        CHECK(polished == "eve has older age than 4 ."); // lexicon result
        CHECK(counters.remote_fallbacks == 1);
    }

    SUBCASE("timeout") {
        MockScorer slow([](const httplib::Request &, httplib::Response &res) {
            std::this_thread::sleep_for(std::chrono::milliseconds(900));
            res.set_content(R"({"scores": [[9.0, 0, 0, 0, 0]]})",
                            "application/json");
        });
        PolishCounters counters;
        const std::string polished =
            polish("eve has higher age than 4 .", "higher", *set,
                   slow.binding(std::chrono::milliseconds(150)), &counters);
        CHECK(polished == "eve has older age than 4 .");
        CHECK(counters.remote_fallbacks == 1);
    }
}

TEST_CASE("polish_instantiations retargets word masks and spans") {
    Instantiation inst;
    inst.op_type = OpType::Comparative;
    inst.sentence = "eve has higher age than 4 .";
    inst.answer = "eve";
    inst.answer_span = {0, 3};
    inst.mask_answer_slot = false;
    inst.mask_word = "higher";
    inst.mask_span = {8, 14};
    inst.sensitive_word = "higher";
    inst.sensitive_span = {8, 14};

    std::vector<Instantiation> batch{inst};
    PolishCounters counters;
    ScorerBinding lexicon;
    polish_instantiations(batch, default_candidate_sets(), lexicon, counters);

    CHECK(batch[0].sentence == "eve has older age than 4 .");
    CHECK(batch[0].mask_word == "older");
    CHECK(batch[0].sentence.substr(batch[0].mask_span.begin,
                                   batch[0].mask_span.size()) == "older");
    CHECK(batch[0].answer_span == ByteSpan{0, 3}); // left of the edit
    CHECK(counters.polished == 1);

    SUBCASE("answer span to the right shifts") {
        Instantiation right = inst;
        right.sentence = "the higher score is 97 .";
        right.answer = "97";
        right.answer_span = {20, 22};
        right.mask_answer_slot = true;
        right.mask_span = right.answer_span;
        right.mask_word = "97";
        right.sensitive_span = {4, 10};

        std::vector<Instantiation> b2{right};
        PolishCounters c2;
        polish_instantiations(b2, default_candidate_sets(), lexicon, c2);
        // no keyword: anchor kept, nothing moves
        CHECK(b2[0].sentence == "the higher score is 97 .");
        CHECK(b2[0].answer_span == ByteSpan{20, 22});
    }
}

TEST_CASE("instantiations with colliding anchor text are skipped") {
    Instantiation inst;
    inst.op_type = OpType::Comparative;
    inst.sentence = "higher ground has higher age than 4 .";
    inst.mask_answer_slot = false;
    inst.mask_word = "higher";
    inst.mask_span = {18, 24};
    inst.sensitive_word = "higher";
    inst.sensitive_span = {18, 24};

    std::vector<Instantiation> batch{inst};
    PolishCounters counters;
    ScorerBinding lexicon;
    polish_instantiations(batch, default_candidate_sets(), lexicon, counters);
    CHECK(batch[0].sentence == inst.sentence); // untouched
    CHECK(counters.skipped == 1);
}

TEST_CASE("polishing changes exactly one span") {
    const CandidateCatalog &catalog = default_candidate_sets();
    ScorerBinding lexicon;
    const std::string before = "kim has higher age than max winters .";
    for (const auto &set : catalog.sets) {
        if (set.anchor != "higher")
            continue;
        const std::string after = polish(before, "higher", set, lexicon);
        // everything outside the anchor span is byte-identical
        const std::size_t at = before.find("higher");
        CHECK(after.substr(0, at) == before.substr(0, at));
        const std::string chosen =
            after.substr(at, after.size() - (before.size() - 6));
        CHECK(std::find(set.candidates.begin(), set.candidates.end(),
                        chosen) != set.candidates.end());
        CHECK(after.substr(at + chosen.size()) ==
              before.substr(at + 6));
    }
}
