#include "pasta/polish.hpp"

#include "pasta/text.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include <httplib.h>

namespace pasta {

namespace {

using nlohmann::json;

// Header-word hints for the deterministic fallback scorer. The first
// preferred word present in the candidate set wins.
const std::vector<std::pair<std::string, std::vector<std::string>>>
    kLexiconHints = {
        {"age", {"older", "oldest", "younger", "youngest"}},
        {"height", {"taller", "tallest"}},
        {"weight", {"heavier", "heaviest"}},
        {"length", {"longer", "longest"}},
        {"duration", {"longer", "longest"}},
};

std::size_t count_occurrences(const std::string &text,
                              const std::string &needle) {
    if (needle.empty())
        return 0;
    std::size_t count = 0;
    std::size_t pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

std::size_t argmax_with_order_ties(const std::vector<double> &scores) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < scores.size(); ++i)
        if (scores[i] > scores[best])
            best = i;
    return best;
}

struct ParsedUrl {
    std::string base; // scheme://host[:port]
    std::string path; // starts with '/'
};

ParsedUrl split_url(const std::string &endpoint) {
    const std::size_t scheme = endpoint.find("://");
    const std::size_t path_start =
        endpoint.find('/', scheme == std::string::npos ? 0 : scheme + 3);
    if (path_start == std::string::npos)
        return {endpoint, "/"};
    return {endpoint.substr(0, path_start), endpoint.substr(path_start)};
}

} // namespace

const CandidateSet *CandidateCatalog::find(std::string_view anchor) const {
    for (const auto &set : sets)
        if (set.anchor == anchor)
            return &set;
    return nullptr;
}

CandidateCatalog parse_candidate_sets_json(std::string_view json_text,
                                           const std::string &origin) {
    json doc = json::parse(json_text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("sets") ||
        !doc["sets"].is_array())
        throw std::runtime_error(origin + ": expected {\"sets\": [...]}");
    CandidateCatalog catalog;
    for (const auto &record : doc["sets"]) {
        CandidateSet set;
        set.anchor = record.value("anchor", "");
        for (const auto &c : record.value("candidates", json::array()))
            set.candidates.push_back(c.get<std::string>());
        if (set.candidates.empty())
            throw std::runtime_error(origin + ": candidate set '" +
                                     set.anchor + "' is empty");
        if (std::find(set.candidates.begin(), set.candidates.end(),
                      set.anchor) == set.candidates.end())
            throw std::runtime_error(origin + ": anchor '" + set.anchor +
                                     "' missing from its own candidates");
        catalog.sets.push_back(std::move(set));
    }
    return catalog;
}

CandidateCatalog load_candidate_sets(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open candidate sets: " +
                                 path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_candidate_sets_json(buffer.str(), path.string());
}

const CandidateCatalog &default_candidate_sets() {
    static const CandidateCatalog catalog = parse_candidate_sets_json(
        catalogs::default_candidate_sets_json(), "builtin");
    return catalog;
}

std::vector<double> score_candidates_lexicon(std::string_view sentence,
                                             const CandidateSet &set) {
    std::vector<std::string> tokens = tokenize(sentence);
    std::vector<double> scores(set.candidates.size(), 0.0);
    for (std::size_t i = 0; i < set.candidates.size(); ++i)
        if (set.candidates[i] == set.anchor)
            scores[i] = 0.5;
    for (const auto &[keyword, preferred] : kLexiconHints) {
        if (std::find(tokens.begin(), tokens.end(), keyword) == tokens.end())
            continue;
        for (const auto &word : preferred) {
            auto it = std::find(set.candidates.begin(), set.candidates.end(),
                                word);
            if (it != set.candidates.end()) {
                scores[static_cast<std::size_t>(
                    it - set.candidates.begin())] = 1.0;
                break;
            }
        }
    }
    return scores;
}

std::vector<std::vector<double>>
score_candidates_remote(const std::vector<RemoteScoreItem> &items,
                        const ScorerBinding &binding) {
    if (binding.kind != ScorerKind::Remote || binding.endpoint.empty())
        throw RemoteScorerError("remote scorer not configured");
    for (const auto &item : items)
        if (item.candidates.empty())
            throw RemoteScorerError("empty candidate list");

    json request;
    request["items"] = json::array();
    for (const auto &item : items) {
        json entry;
        entry["masked_sentence"] = item.masked_sentence;
        entry["candidates"] = item.candidates;
        request["items"].push_back(std::move(entry));
    }

    const ParsedUrl url = split_url(binding.endpoint);
    httplib::Client client(url.base);
    const auto seconds =
        std::chrono::duration_cast<std::chrono::seconds>(binding.timeout);
    const auto usec_rem = std::chrono::duration_cast<std::chrono::microseconds>(
        binding.timeout - seconds);
    client.set_connection_timeout(static_cast<time_t>(seconds.count()),
                                  static_cast<time_t>(usec_rem.count()));
    client.set_read_timeout(static_cast<time_t>(seconds.count()),
                            static_cast<time_t>(usec_rem.count()));
    client.set_write_timeout(static_cast<time_t>(seconds.count()),
                             static_cast<time_t>(usec_rem.count()));

    auto response = client.Post(url.path, request.dump(), "application/json");
    if (!response)
        throw RemoteScorerError("remote scorer unreachable or timed out: " +
                                binding.endpoint);
    if (response->status < 200 || response->status >= 300)
        throw RemoteScorerError("remote scorer returned status " +
                                std::to_string(response->status));

    json reply = json::parse(response->body, nullptr, false);
    if (reply.is_discarded() || !reply.is_object() ||
        !reply.contains("scores") || !reply["scores"].is_array() ||
        reply["scores"].size() != items.size())
        throw RemoteScorerError("malformed remote scorer response");

    std::vector<std::vector<double>> out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const json &row = reply["scores"][i];
        if (!row.is_array() || row.size() != items[i].candidates.size())
            throw RemoteScorerError("remote scorer score shape mismatch");
        std::vector<double> scores;
        for (const auto &v : row) {
            if (!v.is_number())
                throw RemoteScorerError("non-numeric score");
            const double d = v.get<double>();
            if (!std::isfinite(d))
                throw RemoteScorerError("non-finite score");
            scores.push_back(d);
        }
        out.push_back(std::move(scores));
    }
    return out;
}

std::string polish(const std::string &sentence, const std::string &anchor,
                   const CandidateSet &set, const ScorerBinding &binding,
                   PolishCounters *counters) {
    if (count_occurrences(sentence, anchor) != 1)
        throw std::invalid_argument(
            "polish: anchor must occur exactly once in the sentence");

    std::vector<double> scores;
    if (binding.kind == ScorerKind::Remote) {
        std::string masked = sentence;
        masked.replace(masked.find(anchor), anchor.size(), "[MASK]");
        try {
            scores = score_candidates_remote(
                         {{std::move(masked), set.candidates}}, binding)
                         .front();
        } catch (const RemoteScorerError &) {
            if (counters)
                ++counters->remote_fallbacks;
            scores = score_candidates_lexicon(sentence, set);
        }
    } else {
        scores = score_candidates_lexicon(sentence, set);
    }

    const std::size_t chosen = argmax_with_order_ties(scores);
    const std::string &word = set.candidates[chosen];
    if (counters) {
        if (word == anchor)
            ++counters->kept_anchor;
        else
            ++counters->polished;
    }
    std::string out = sentence;
    out.replace(out.find(anchor), anchor.size(), word);
    return out;
}

namespace {

// Applies the chosen candidate at the tracked anchor span, shifting the
// answer/mask spans that sit to the right of it.
void apply_choice(Instantiation &inst, const std::string &word) {
    const ByteSpan at = inst.sensitive_span;
    const std::string &anchor = inst.sensitive_word;
    inst.sentence.replace(at.begin, at.size(), word);
    const std::ptrdiff_t delta = static_cast<std::ptrdiff_t>(word.size()) -
                                 static_cast<std::ptrdiff_t>(anchor.size());
    auto shift = [&](ByteSpan &span) {
        if (span.begin >= at.end) {
            span.begin += delta;
            span.end += delta;
        }
    };
    shift(inst.answer_span);
    if (inst.mask_span == at) {
        inst.mask_span = {at.begin, at.begin + word.size()};
        inst.mask_word = word;
    } else {
        shift(inst.mask_span);
    }
    inst.sensitive_span = {at.begin, at.begin + word.size()};
    inst.sensitive_word = word;
}

} // namespace

void polish_instantiations(std::vector<Instantiation> &instantiations,
                           const CandidateCatalog &catalog,
                           const ScorerBinding &binding,
                           PolishCounters &counters, bool strict) {
    constexpr std::size_t kBatchSize = 64;

    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < instantiations.size(); ++i) {
        Instantiation &inst = instantiations[i];
        if (inst.sensitive_word.empty())
            continue;
        const CandidateSet *set = catalog.find(inst.sensitive_word);
        if (!set) {
            ++counters.skipped;
            continue;
        }
        // The tracked span must still hold the anchor and be its only
        // occurrence; bound cells could collide with the anchor word.
        if (inst.sentence.compare(inst.sensitive_span.begin,
                                  inst.sensitive_span.size(),
                                  inst.sensitive_word) != 0 ||
            count_occurrences(inst.sentence, inst.sensitive_word) != 1) {
            ++counters.skipped;
            continue;
        }
        pending.push_back(i);
    }

    auto choose_and_apply = [&](std::size_t index,
                                const std::vector<double> &scores) {
        Instantiation &inst = instantiations[index];
        const CandidateSet *set = catalog.find(inst.sensitive_word);
        const std::string &word =
            set->candidates[argmax_with_order_ties(scores)];
        if (word == inst.sensitive_word)
            ++counters.kept_anchor;
        else
            ++counters.polished;
        apply_choice(inst, word);
    };

    if (binding.kind == ScorerKind::Lexicon) {
        for (std::size_t index : pending) {
            const Instantiation &inst = instantiations[index];
            const CandidateSet *set = catalog.find(inst.sensitive_word);
            choose_and_apply(
                index, score_candidates_lexicon(inst.sentence, *set));
        }
        return;
    }

    for (std::size_t start = 0; start < pending.size(); start += kBatchSize) {
        const std::size_t end =
            std::min(pending.size(), start + kBatchSize);
        std::vector<RemoteScoreItem> items;
        for (std::size_t k = start; k < end; ++k) {
            const Instantiation &inst = instantiations[pending[k]];
            const CandidateSet *set = catalog.find(inst.sensitive_word);
            std::string masked = inst.sentence;
            masked.replace(inst.sensitive_span.begin,
                           inst.sensitive_span.size(), "[MASK]");
            items.push_back({std::move(masked), set->candidates});
        }
        try {
            const auto scores = score_candidates_remote(items, binding);
            for (std::size_t k = start; k < end; ++k)
                choose_and_apply(pending[k], scores[k - start]);
        } catch (const RemoteScorerError &) {
            if (strict)
                throw;
            counters.remote_fallbacks += end - start;
            for (std::size_t k = start; k < end; ++k) {
                const Instantiation &inst = instantiations[pending[k]];
                const CandidateSet *set = catalog.find(inst.sensitive_word);
                choose_and_apply(pending[k], score_candidates_lexicon(
                                                 inst.sentence, *set));
            }
        }
    }
}

} // namespace pasta
