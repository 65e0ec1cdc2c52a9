#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pasta {

enum class OpType { Filter, Superlative, Aggregation, Comparative, Ordinal,
                    Unique };

inline constexpr OpType kAllOpTypes[] = {
    OpType::Filter,     OpType::Superlative, OpType::Aggregation,
    OpType::Comparative, OpType::Ordinal,    OpType::Unique};

const char *to_string(OpType op);
std::optional<OpType> optype_from_string(std::string_view name);

struct SlotConstraint {
    enum class Kind { AnyColumn, NumericColumn, TextColumn, Value };
    Kind kind = Kind::AnyColumn;
    std::string from_slot; // Value slots: column slot the cell is drawn from
    // Subject-column heuristic: bind the lowest-index eligible column
    // instead of drawing uniformly. Used for entity/key slots.
    bool bind_leftmost = false;
};

// One NL/SQL template pair. nl carries [ANS] exactly once plus [ColumnN] /
// [ValueN] placeholders; sql carries the matching placeholders and executes
// to the value that fills [ANS].
struct TemplatePair {
    OpType op_type = OpType::Filter;
    std::string nl;
    std::string sql;
    bool mask_answer_slot = true;
    std::string mask_word;      // set when !mask_answer_slot
    std::string sensitive_word; // empty when the template needs no polishing
    std::map<std::string, SlotConstraint> slot_constraints;
    std::string note;

    // Derived during catalog validation.
    std::vector<std::string> column_slots; // sorted slot names
    std::vector<std::string> value_slots;  // sorted slot names
    std::string projection_slot; // column slot projected by the sql, if any
};

struct TemplateCatalog {
    std::vector<TemplatePair> templates;
    std::map<OpType, std::vector<std::size_t>> by_type;
};

struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Positions of [Name] placeholders in a template string.
struct PlaceholderRef {
    std::string name;
    std::size_t pos = 0;
    std::size_t len = 0;
};
std::vector<PlaceholderRef> find_placeholders(std::string_view text);

TemplateCatalog parse_templates_json(std::string_view json_text,
                                     const std::string &origin);
TemplateCatalog load_templates(const std::filesystem::path &path);

// The shipped 50-pair catalog (also available as data/templates.json).
const TemplateCatalog &default_catalog();

namespace catalogs {
const char *default_templates_json();
const char *default_candidate_sets_json();
const char *default_triggers_json();
} // namespace catalogs

} // namespace pasta
