#include "pasta/templates.hpp"

#include "pasta/query.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace pasta {

const char *to_string(OpType op) {
    switch (op) {
    case OpType::Filter: return "filter";
    case OpType::Superlative: return "superlative";
    case OpType::Aggregation: return "aggregation";
    case OpType::Comparative: return "comparative";
    case OpType::Ordinal: return "ordinal";
    case OpType::Unique: return "unique";
    }
    return "";
}

std::optional<OpType> optype_from_string(std::string_view name) {
    for (OpType op : kAllOpTypes)
        if (name == to_string(op))
            return op;
    return std::nullopt;
}

std::vector<PlaceholderRef> find_placeholders(std::string_view text) {
    std::vector<PlaceholderRef> refs;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '[') {
            ++i;
            continue;
        }
        const std::size_t close = text.find(']', i);
        if (close == std::string_view::npos)
            break;
        refs.push_back({std::string(text.substr(i + 1, close - i - 1)), i,
                        close - i + 1});
        i = close + 1;
    }
    return refs;
}

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &origin, std::size_t index,
                       const std::string &msg) {
    std::ostringstream oss;
    oss << origin << ": template #" << index << ": " << msg;
    throw CatalogError(oss.str());
}

bool is_column_slot(const std::string &name) {
    return name.rfind("Column", 0) == 0;
}

bool is_value_slot(const std::string &name) {
    return name.rfind("Value", 0) == 0;
}

// Literal text of the template with placeholders removed, used for
// whole-token word checks.
std::string literal_text(const std::string &tmpl) {
    std::string out;
    std::size_t last = 0;
    for (const auto &ref : find_placeholders(tmpl)) {
        out += tmpl.substr(last, ref.pos - last);
        out += ' ';
        last = ref.pos + ref.len;
    }
    out += tmpl.substr(last);
    return out;
}

std::size_t count_word(const std::string &text, const std::string &word) {
    std::size_t count = 0;
    std::istringstream iss(text);
    std::string tok;
    while (iss >> tok)
        if (tok == word)
            ++count;
    return count;
}

SlotConstraint parse_constraint(const json &value, const std::string &slot,
                                const std::string &origin, std::size_t index) {
    SlotConstraint sc;
    if (!value.is_object())
        fail(origin, index, "slot_constraints entry for " + slot +
                                " must be an object");
    if (is_value_slot(slot)) {
        sc.kind = SlotConstraint::Kind::Value;
        if (!value.contains("from") || !value["from"].is_string())
            fail(origin, index, "value slot " + slot + " needs a 'from' column");
        sc.from_slot = value["from"].get<std::string>();
        return sc;
    }
    const std::string kind = value.value("kind", "any");
    if (kind == "numeric")
        sc.kind = SlotConstraint::Kind::NumericColumn;
    else if (kind == "text")
        sc.kind = SlotConstraint::Kind::TextColumn;
    else if (kind == "any")
        sc.kind = SlotConstraint::Kind::AnyColumn;
    else
        fail(origin, index, "unknown column kind '" + kind + "' for " + slot);
    sc.bind_leftmost = value.value("bind", "uniform") == "leftmost";
    return sc;
}

// The template sql with every placeholder replaced by a sentinel, so it can
// be parsed and inspected structurally.
std::string sentinel_sql(const TemplatePair &t) {
    std::string out;
    std::size_t last = 0;
    for (const auto &ref : find_placeholders(t.sql)) {
        out += t.sql.substr(last, ref.pos - last);
        if (is_value_slot(ref.name))
            out += "'<" + ref.name + ">'";
        else
            out += "\"<" + ref.name + ">\"";
        last = ref.pos + ref.len;
    }
    out += t.sql.substr(last);
    return out;
}

std::string sentinel_to_slot(const std::string &sentinel) {
    if (sentinel.size() >= 2 && sentinel.front() == '<' &&
        sentinel.back() == '>')
        return sentinel.substr(1, sentinel.size() - 2);
    return "";
}

// Column slots that must be numeric for the template plan to evaluate:
// aggregate arguments (COUNT DISTINCT excepted), </> comparison columns,
// subquery comparison columns and ORDER BY columns.
void collect_numeric_slots(const QueryPlan &plan,
                           std::vector<std::string> &out) {
    if (plan.projection.agg && *plan.projection.agg != AggFn::CountDistinct)
        out.push_back(sentinel_to_slot(plan.projection.column));
    if (plan.predicate) {
        if (plan.predicate->op != CmpOp::Eq || plan.predicate->subquery)
            out.push_back(sentinel_to_slot(plan.predicate->column));
        if (plan.predicate->subquery)
            collect_numeric_slots(*plan.predicate->subquery, out);
    }
    if (plan.order_by)
        out.push_back(sentinel_to_slot(plan.order_by->column));
}

void validate_template(TemplatePair &t, const std::string &origin,
                       std::size_t index) {
    // [ANS] exactly once in nl, never in sql.
    std::vector<std::string> nl_slots;
    std::size_t ans_count = 0;
    for (const auto &ref : find_placeholders(t.nl)) {
        if (ref.name == "ANS")
            ++ans_count;
        else
            nl_slots.push_back(ref.name);
    }
    if (ans_count != 1)
        fail(origin, index, "nl must contain [ANS] exactly once");

    std::vector<std::string> sql_slots;
    for (const auto &ref : find_placeholders(t.sql)) {
        if (ref.name == "ANS")
            fail(origin, index, "sql must not contain [ANS]");
        sql_slots.push_back(ref.name);
    }

    auto sorted_unique = [](std::vector<std::string> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };
    nl_slots = sorted_unique(std::move(nl_slots));
    sql_slots = sorted_unique(std::move(sql_slots));

    for (const auto &slot : nl_slots)
        if (!std::binary_search(sql_slots.begin(), sql_slots.end(), slot))
            fail(origin, index, "nl slot [" + slot + "] missing from sql");

    // Every slot must be named (and only named slots may appear).
    for (const auto &slot : sql_slots) {
        if (!is_column_slot(slot) && !is_value_slot(slot))
            fail(origin, index, "unknown placeholder [" + slot + "]");
        if (!t.slot_constraints.count(slot))
            fail(origin, index, "no slot constraint for [" + slot + "]");
    }
    for (const auto &[slot, sc] : t.slot_constraints) {
        if (!std::binary_search(sql_slots.begin(), sql_slots.end(), slot))
            fail(origin, index, "constraint for unused slot [" + slot + "]");
        if (sc.kind == SlotConstraint::Kind::Value) {
            auto it = t.slot_constraints.find(sc.from_slot);
            if (it == t.slot_constraints.end() ||
                it->second.kind == SlotConstraint::Kind::Value)
                fail(origin, index, "value slot [" + slot +
                                        "] draws from unknown column slot");
        }
    }

    // Parse the sql template to find the projected slot and the slots that
    // must be numeric.
    QueryPlan plan;
    try {
        plan = parse_query(sentinel_sql(t));
    } catch (const QueryParseError &e) {
        fail(origin, index, std::string("sql template does not parse: ") +
                                e.what());
    }
    if (!plan.projection.agg) {
        const std::string slot = sentinel_to_slot(plan.projection.column);
        if (is_column_slot(slot))
            t.projection_slot = slot;
    }

    // Each sql-only slot must be determined by the instantiation: either a
    // from-target of a value slot or the projected (answer) column.
    for (const auto &slot : sql_slots) {
        if (std::binary_search(nl_slots.begin(), nl_slots.end(), slot))
            continue;
        bool determined = slot == t.projection_slot;
        for (const auto &[name, sc] : t.slot_constraints)
            determined = determined || (sc.kind == SlotConstraint::Kind::Value &&
                                        sc.from_slot == slot);
        if (!determined)
            fail(origin, index,
                 "sql slot [" + slot + "] is not determined by nl");
    }

    std::vector<std::string> numeric_slots;
    collect_numeric_slots(plan, numeric_slots);
    for (const auto &slot : numeric_slots) {
        if (!is_column_slot(slot))
            continue;
        auto it = t.slot_constraints.find(slot);
        if (it == t.slot_constraints.end() ||
            it->second.kind != SlotConstraint::Kind::NumericColumn)
            fail(origin, index,
                 "slot [" + slot +
                     "] is used numerically and must be constrained numeric");
    }

    const std::string literals = literal_text(t.nl);
    if (!t.mask_answer_slot && count_word(literals, t.mask_word) != 1)
        fail(origin, index,
             "mask word '" + t.mask_word + "' must occur exactly once in nl");
    if (!t.sensitive_word.empty() &&
        count_word(literals, t.sensitive_word) != 1)
        fail(origin, index, "sensitive word '" + t.sensitive_word +
                                "' must occur exactly once in nl");

    for (const auto &slot : sql_slots) {
        if (is_column_slot(slot))
            t.column_slots.push_back(slot);
        else
            t.value_slots.push_back(slot);
    }
}

} // namespace

TemplateCatalog parse_templates_json(std::string_view json_text,
                                     const std::string &origin) {
    json doc = json::parse(json_text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("templates") ||
        !doc["templates"].is_array())
        throw CatalogError(origin + ": expected {\"templates\": [...]}");

    TemplateCatalog catalog;
    std::size_t index = 0;
    for (const auto &record : doc["templates"]) {
        if (!record.is_object())
            fail(origin, index, "template record must be an object");
        TemplatePair t;
        const std::string type_name = record.value("op_type", "");
        auto op = optype_from_string(type_name);
        if (!op)
            fail(origin, index, "unknown op_type '" + type_name + "'");
        t.op_type = *op;
        t.nl = record.value("nl", "");
        t.sql = record.value("sql", "");
        if (t.nl.empty() || t.sql.empty())
            fail(origin, index, "nl and sql are required");
        const std::string mask = record.value("mask_target", "[ANS]");
        if (mask == "[ANS]") {
            t.mask_answer_slot = true;
        } else {
            t.mask_answer_slot = false;
            t.mask_word = mask;
        }
        t.sensitive_word = record.value("sensitive_word", "");
        t.note = record.value("note", "");
        if (record.contains("slot_constraints")) {
            for (const auto &[slot, value] :
                 record["slot_constraints"].items())
                t.slot_constraints[slot] =
                    parse_constraint(value, slot, origin, index);
        }
        validate_template(t, origin, index);
        catalog.by_type[t.op_type].push_back(catalog.templates.size());
        catalog.templates.push_back(std::move(t));
        ++index;
    }

    if (catalog.templates.empty())
        throw CatalogError(origin + ": no templates");
    for (OpType op : kAllOpTypes) {
        if (!catalog.by_type.count(op))
            throw CatalogError(origin + ": missing op_type '" +
                               to_string(op) + "'");
    }
    return catalog;
}

TemplateCatalog load_templates(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw CatalogError("cannot open template catalog: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_templates_json(buffer.str(), path.string());
}

const TemplateCatalog &default_catalog() {
    static const TemplateCatalog catalog =
        parse_templates_json(catalogs::default_templates_json(), "builtin");
    return catalog;
}

} // namespace pasta
