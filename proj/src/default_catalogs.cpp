#include "pasta/templates.hpp"

// Embedded copies of the shipped catalog files under data/. A unit test
// asserts the files and these strings stay byte-identical.

namespace pasta::catalogs {

const char *default_templates_json() {
    static const char *const text = R"rawjson(
{
  "templates": [
    {
      "op_type": "filter",
      "nl": "[Value1] 's [Column1] is [ANS] .",
      "sql": "SELECT [Column1] FROM T WHERE [Column2] = [Value1]",
      "mask_target": "[ANS]",
      "slot_constraints": {
        "Column1": {"kind": "text"},
        "Column2": {"kind": "text", "bind": "leftmost"},
        "Value1": {"from": "Column2"}
      }
    },
    {
      "op_type": "filter",
      "nl": "the [Column1] of [Value1] is [ANS] .",
      "sql": "SELECT [Column1] FROM T WHERE [Column2] = [Value1]",
      "mask_target": "[ANS]",
      "slot_constraints": {
        "Column1": {"kind": "text"},
        "Column2": {"kind": "text", "bind": "leftmost"},
        "Value1": {"from": "Column2"}
      }
    },
    {
      "op_type": "filter",
      "nl": "the [Column1] for [Value1] is [ANS] .",
      "sql": "SELECT [Column1] FROM T WHERE [Column2] = [Value1]",
      "mask_target": "[ANS]",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "text"},
        "Column2": {"kind": "text", "bind": "leftmost"},
        "Value1": {"from": "Column2"}
      }
    },
    {
      "op_type": "filter",
      "nl": "[Value1] has a [Column1] of [ANS] .",
      "sql": "SELECT [Column1] FROM T WHERE [Column2] = [Value1]",
      "mask_target": "[ANS]",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "text"},
        "Column2": {"kind": "text", "bind": "leftmost"},
        "Value1": {"from": "Column2"}
      }
    },
    {
      "op_type": "filter",
      "nl": "when [Column2] is [Value1] , the [Column1] is [ANS] .",
      "sql": "SELECT [Column1] FROM T WHERE [Column2] = [Value1]",
      "mask_target": "[ANS]",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "text"},
        "Column2": {"kind": "text", "bind": "leftmost"},
        "Value1": {"from": "Column2"}
      }
    },
    {
      "op_type": "filter",
      "nl": "for [Value1] , the [Column1] is [ANS] .",
      "sql": "SELECT [Column1] FROM T WHERE [Column2] = [Value1]",
      "mask_target": "[ANS]",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "text"},
        "Column2": {"kind": "text", "bind": "leftmost"},
        "Value1": {"from": "Column2"}
      }
    },
    {
      "op_type": "filter",
      "nl": "[Value1] recorded a [Column1] of [ANS] .",
      "sql": "SELECT [Column1] FROM T WHERE [Column2] = [Value1]",
      "mask_target": "[ANS]",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "any"},
        "Column2": {"kind": "text", "bind": "leftmost"},
        "Value1": {"from": "Column2"}
      }
    },
    {
      "op_type": "filter",
      "nl": "the [Column1] listed for [Value1] is [ANS] .",
      "sql": "SELECT [Column1] FROM T WHERE [Column2] = [Value1]",
      "mask_target": "[ANS]",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "any"},
        "Column2": {"kind": "text", "bind": "leftmost"},
        "Value1": {"from": "Column2"}
      }
    },
    {
      "op_type": "superlative",
      "nl": "the highest [Column1] is [ANS] .",
      "sql": "SELECT MAX([Column1]) FROM T",
      "mask_target": "[ANS]",
      "sensitive_word": "highest",
      "slot_constraints": {
        "Column1": {"kind": "numeric"}
      }
    },
    {
      "op_type": "superlative",
      "nl": "the lowest [Column1] is [ANS] .",
      "sql": "SELECT MIN([Column1]) FROM T",
      "mask_target": "[ANS]",
      "sensitive_word": "lowest",
      "slot_constraints": {
        "Column1": {"kind": "numeric"}
      }
    },
    {
      "op_type": "superlative",
      "nl": "[ANS] has the highest [Column2] of all [Column1] .",
      "sql": "SELECT [Column1] FROM T ORDER BY [Column2] DESC LIMIT 1",
      "mask_target": "[ANS]",
      "sensitive_word": "highest",
      "slot_constraints": {
        "Column1": {"kind": "text", "bind": "leftmost"},
        "Column2": {"kind": "numeric"}
      }
    },
    {
      "op_type": "superlative",
      "nl": "[ANS] has the lowest [Column2] of all [Column1] .",
      "sql": "SELECT [Column1] FROM T ORDER BY [Column2] ASC LIMIT 1",
      "mask_target": "[ANS]",
      "sensitive_word": "lowest",
      "slot_constraints": {
        "Column1": {"kind": "text", "bind": "leftmost"},
        "Column2": {"kind": "numeric"}
      }
    },
    {
      "op_type": "superlative",
      "nl": "[ANS] has the highest [Column2] .",
      "sql": "SELECT [Column1] FROM T ORDER BY [Column2] DESC LIMIT 1",
      "mask_target": "[ANS]",
      "sensitive_word": "highest",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "text", "bind": "leftmost"},
        "Column2": {"kind": "numeric"}
      }
    },
    {
      "op_type": "superlative",
      "nl": "[ANS] has the lowest [Column2] .",
      "sql": "SELECT [Column1] FROM T ORDER BY [Column2] ASC LIMIT 1",
      "mask_target": "[ANS]",
      "sensitive_word": "lowest",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "text", "bind": "leftmost"},
        "Column2": {"kind": "numeric"}
      }
    },
    {
      "op_type": "superlative",
      "nl": "the [Column1] with the highest [Column2] is [ANS] .",
      "sql": "SELECT [Column1] FROM T ORDER BY [Column2] DESC LIMIT 1",
      "mask_target": "[ANS]",
      "sensitive_word": "highest",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "text", "bind": "leftmost"},
        "Column2": {"kind": "numeric"}
      }
    },
    {
      "op_type": "superlative",
      "nl": "the [Column1] with the lowest [Column2] is [ANS] .",
      "sql": "SELECT [Column1] FROM T ORDER BY [Column2] ASC LIMIT 1",
      "mask_target": "[ANS]",
      "sensitive_word": "lowest",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "text", "bind": "leftmost"},
        "Column2": {"kind": "numeric"}
      }
    },
    {
      "op_type": "superlative",
      "nl": "[ANS] is the [Column1] with the highest [Column2] .",
      "sql": "SELECT [Column1] FROM T ORDER BY [Column2] DESC LIMIT 1",
      "mask_target": "[ANS]",
      "sensitive_word": "highest",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "text", "bind": "leftmost"},
        "Column2": {"kind": "numeric"}
      }
    },
    {
      "op_type": "superlative",
      "nl": "[ANS] is the [Column1] with the lowest [Column2] .",
      "sql": "SELECT [Column1] FROM T ORDER BY [Column2] ASC LIMIT 1",
      "mask_target": "[ANS]",
      "sensitive_word": "lowest",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "text", "bind": "leftmost"},
        "Column2": {"kind": "numeric"}
      }
    },
    {
      "op_type": "superlative",
      "nl": "the highest [Column2] belongs to [ANS] .",
      "sql": "SELECT [Column1] FROM T ORDER BY [Column2] DESC LIMIT 1",
      "mask_target": "[ANS]",
      "sensitive_word": "highest",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "text", "bind": "leftmost"},
        "Column2": {"kind": "numeric"}
      }
    },
    {
      "op_type": "aggregation",
      "nl": "the sum of [Column1] when [Column2] is [Value1] is [ANS] .",
      "sql": "SELECT SUM([Column1]) FROM T WHERE [Column2] = [Value1]",
      "mask_target": "[ANS]",
      "slot_constraints": {
        "Column1": {"kind": "numeric"},
        "Column2": {"kind": "text"},
        "Value1": {"from": "Column2"}
      }
    },
    {
      "op_type": "aggregation",
      "nl": "the average of [Column1] when [Column2] is [Value1] is [ANS] .",
      "sql": "SELECT AVG([Column1]) FROM T WHERE [Column2] = [Value1]",
      "mask_target": "[ANS]",
      "slot_constraints": {
        "Column1": {"kind": "numeric"},
        "Column2": {"kind": "text"},
        "Value1": {"from": "Column2"}
      }
    },
    {
      "op_type": "aggregation",
      "nl": "the total amount of [Column1] when [Column2] is [Value1] is [ANS] .",
      "sql": "SELECT SUM([Column1]) FROM T WHERE [Column2] = [Value1]",
      "mask_target": "[ANS]",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "numeric"},
        "Column2": {"kind": "text"},
        "Value1": {"from": "Column2"}
      }
    },
    {
      "op_type": "aggregation",
      "nl": "the total [Column1] when [Column2] is [Value1] is [ANS] .",
      "sql": "SELECT SUM([Column1]) FROM T WHERE [Column2] = [Value1]",
      "mask_target": "[ANS]",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "numeric"},
        "Column2": {"kind": "text"},
        "Value1": {"from": "Column2"}
      }
    },
    {
      "op_type": "aggregation",
      "nl": "the mean [Column1] when [Column2] is [Value1] is [ANS] .",
      "sql": "SELECT AVG([Column1]) FROM T WHERE [Column2] = [Value1]",
      "mask_target": "[ANS]",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "numeric"},
        "Column2": {"kind": "text"},
        "Value1": {"from": "Column2"}
      }
    },
    {
      "op_type": "aggregation",
      "nl": "the sum of all [Column1] is [ANS] .",
      "sql": "SELECT SUM([Column1]) FROM T",
      "mask_target": "[ANS]",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "numeric"}
      }
    },
    {
      "op_type": "aggregation",
      "nl": "the average of all [Column1] is [ANS] .",
      "sql": "SELECT AVG([Column1]) FROM T",
      "mask_target": "[ANS]",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "numeric"}
      }
    },
    {
      "op_type": "aggregation",
      "nl": "the total of all [Column1] is [ANS] .",
      "sql": "SELECT SUM([Column1]) FROM T",
      "mask_target": "[ANS]",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "numeric"}
      }
    },
    {
      "op_type": "aggregation",
      "nl": "the average [Column1] among all entries is [ANS] .",
      "sql": "SELECT AVG([Column1]) FROM T",
      "mask_target": "[ANS]",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "numeric"}
      }
    },
    {
      "op_type": "aggregation",
      "nl": "the sum of [Column1] among all entries is [ANS] .",
      "sql": "SELECT SUM([Column1]) FROM T",
      "mask_target": "[ANS]",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "numeric"}
      }
    },
    {
      "op_type": "aggregation",
      "nl": "the combined [Column1] of all entries is [ANS] .",
      "sql": "SELECT SUM([Column1]) FROM T",
      "mask_target": "[ANS]",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "numeric"}
      }
    },
    {
      "op_type": "aggregation",
      "nl": "the overall average [Column1] is [ANS] .",
      "sql": "SELECT AVG([Column1]) FROM T",
      "mask_target": "[ANS]",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "numeric"}
      }
    },
    {
      "op_type": "comparative",
      "nl": "[Column1] [ANS] 's [Column2] is higher than [Value1] .",
      "sql": "SELECT [Column1] FROM T WHERE [Column2] > [Value1]",
      "mask_target": "higher",
      "sensitive_word": "higher",
      "slot_constraints": {
        "Column1": {"kind": "text", "bind": "leftmost"},
        "Column2": {"kind": "numeric"},
        "Value1": {"from": "Column2"}
      }
    },
    {
      "op_type": "comparative",
      "nl": "[ANS] has higher [Column2] than [Value1] .",
      "sql": "SELECT [Column1] FROM T WHERE [Column2] > [Value1]",
      "mask_target": "higher",
      "sensitive_word": "higher",
      "slot_constraints": {
        "Column1": {"kind": "text", "bind": "leftmost"},
        "Column2": {"kind": "numeric"},
        "Value1": {"from": "Column2"}
      }
    },
    {
      "op_type": "comparative",
      "nl": "[ANS] 's [Column2] is higher than [Value1] .",
      "sql": "SELECT [Column1] FROM T WHERE [Column2] > [Value1]",
      "mask_target": "higher",
      "sensitive_word": "higher",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "text", "bind": "leftmost"},
        "Column2": {"kind": "numeric"},
        "Value1": {"from": "Column2"}
      }
    },
    {
      "op_type": "comparative",
      "nl": "the [Column2] of [ANS] is higher than [Value1] .",
      "sql": "SELECT [Column1] FROM T WHERE [Column2] > [Value1]",
      "mask_target": "higher",
      "sensitive_word": "higher",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "text", "bind": "leftmost"},
        "Column2": {"kind": "numeric"},
        "Value1": {"from": "Column2"}
      }
    },
    {
      "op_type": "comparative",
      "nl": "[ANS] has less [Column2] than [Value1] .",
      "sql": "SELECT [Column1] FROM T WHERE [Column2] < [Value1]",
      "mask_target": "less",
      "sensitive_word": "less",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "text", "bind": "leftmost"},
        "Column2": {"kind": "numeric"},
        "Value1": {"from": "Column2"}
      }
    },
    {
      "op_type": "comparative",
      "nl": "[ANS] 's [Column2] is less than [Value1] .",
      "sql": "SELECT [Column1] FROM T WHERE [Column2] < [Value1]",
      "mask_target": "less",
      "sensitive_word": "less",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "text", "bind": "leftmost"},
        "Column2": {"kind": "numeric"},
        "Value1": {"from": "Column2"}
      }
    },
    {
      "op_type": "comparative",
      "nl": "the [Column2] of [ANS] is less than [Value1] .",
      "sql": "SELECT [Column1] FROM T WHERE [Column2] < [Value1]",
      "mask_target": "less",
      "sensitive_word": "less",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "text", "bind": "leftmost"},
        "Column2": {"kind": "numeric"},
        "Value1": {"from": "Column2"}
      }
    },
    {
      "op_type": "comparative",
      "nl": "[Column1] [ANS] 's [Column2] is less than [Value1] .",
      "sql": "SELECT [Column1] FROM T WHERE [Column2] < [Value1]",
      "mask_target": "less",
      "sensitive_word": "less",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "text", "bind": "leftmost"},
        "Column2": {"kind": "numeric"},
        "Value1": {"from": "Column2"}
      }
    },
    {
      "op_type": "ordinal",
      "nl": "[ANS] has the second highest [Column2] .",
      "sql": "SELECT [Column1] FROM T WHERE [Column2] < ( SELECT MAX([Column2]) FROM T ) ORDER BY [Column2] DESC LIMIT 1",
      "mask_target": "[ANS]",
      "sensitive_word": "highest",
      "slot_constraints": {
        "Column1": {"kind": "text", "bind": "leftmost"},
        "Column2": {"kind": "numeric"}
      }
    },
    {
      "op_type": "ordinal",
      "nl": "[ANS] has the second lowest [Column2] .",
      "sql": "SELECT [Column1] FROM T WHERE [Column2] > ( SELECT MIN([Column2]) FROM T ) ORDER BY [Column2] ASC LIMIT 1",
      "mask_target": "[ANS]",
      "sensitive_word": "lowest",
      "slot_constraints": {
        "Column1": {"kind": "text", "bind": "leftmost"},
        "Column2": {"kind": "numeric"}
      }
    },
    {
      "op_type": "ordinal",
      "nl": "[ANS] has the second highest [Column2] of all [Column1] .",
      "sql": "SELECT [Column1] FROM T WHERE [Column2] < ( SELECT MAX([Column2]) FROM T ) ORDER BY [Column2] DESC LIMIT 1",
      "mask_target": "[ANS]",
      "sensitive_word": "highest",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "text", "bind": "leftmost"},
        "Column2": {"kind": "numeric"}
      }
    },
    {
      "op_type": "ordinal",
      "nl": "[ANS] has the second lowest [Column2] of all [Column1] .",
      "sql": "SELECT [Column1] FROM T WHERE [Column2] > ( SELECT MIN([Column2]) FROM T ) ORDER BY [Column2] ASC LIMIT 1",
      "mask_target": "[ANS]",
      "sensitive_word": "lowest",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "text", "bind": "leftmost"},
        "Column2": {"kind": "numeric"}
      }
    },
    {
      "op_type": "ordinal",
      "nl": "the [Column1] with the second highest [Column2] is [ANS] .",
      "sql": "SELECT [Column1] FROM T WHERE [Column2] < ( SELECT MAX([Column2]) FROM T ) ORDER BY [Column2] DESC LIMIT 1",
      "mask_target": "[ANS]",
      "sensitive_word": "highest",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "text", "bind": "leftmost"},
        "Column2": {"kind": "numeric"}
      }
    },
    {
      "op_type": "ordinal",
      "nl": "the [Column1] with the second lowest [Column2] is [ANS] .",
      "sql": "SELECT [Column1] FROM T WHERE [Column2] > ( SELECT MIN([Column2]) FROM T ) ORDER BY [Column2] ASC LIMIT 1",
      "mask_target": "[ANS]",
      "sensitive_word": "lowest",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "text", "bind": "leftmost"},
        "Column2": {"kind": "numeric"}
      }
    },
    {
      "op_type": "ordinal",
      "nl": "the second highest [Column1] is [ANS] .",
      "sql": "SELECT MAX([Column1]) FROM T WHERE [Column1] < ( SELECT MAX([Column1]) FROM T )",
      "mask_target": "[ANS]",
      "sensitive_word": "highest",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "numeric"}
      }
    },
    {
      "op_type": "ordinal",
      "nl": "the second lowest [Column1] is [ANS] .",
      "sql": "SELECT MIN([Column1]) FROM T WHERE [Column1] > ( SELECT MIN([Column1]) FROM T )",
      "mask_target": "[ANS]",
      "sensitive_word": "lowest",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "numeric"}
      }
    },
    {
      "op_type": "unique",
      "nl": "there are [ANS] different [Column1] on the list .",
      "sql": "SELECT COUNT(DISTINCT [Column1]) FROM T",
      "mask_target": "[ANS]",
      "slot_constraints": {
        "Column1": {"kind": "text"}
      }
    },
    {
      "op_type": "unique",
      "nl": "the total number of different [Column1] is [ANS] .",
      "sql": "SELECT COUNT(DISTINCT [Column1]) FROM T",
      "mask_target": "[ANS]",
      "slot_constraints": {
        "Column1": {"kind": "text"}
      }
    },
    {
      "op_type": "unique",
      "nl": "the table contains [ANS] different [Column1] .",
      "sql": "SELECT COUNT(DISTINCT [Column1]) FROM T",
      "mask_target": "[ANS]",
      "note": "extended variant",
      "slot_constraints": {
        "Column1": {"kind": "text"}
      }
    }
  ]
}
)rawjson" + 1;
    return text;
}

const char *default_candidate_sets_json() {
    static const char *const text = R"rawjson(
{
  "sets": [
    {
      "anchor": "highest",
      "candidates": ["highest", "most", "biggest", "largest", "oldest", "greatest", "heaviest", "longest", "tallest"]
    },
    {
      "anchor": "lowest",
      "candidates": ["lowest", "least", "smallest", "youngest", "shortest"]
    },
    {
      "anchor": "higher",
      "candidates": ["higher", "more", "bigger", "larger", "older"]
    },
    {
      "anchor": "less",
      "candidates": ["less", "smaller", "lower", "younger"]
    }
  ]
}
)rawjson" + 1;
    return text;
}

const char *default_triggers_json() {
    static const char *const text = R"rawjson(
{
  "priority": ["ordinal", "unique", "aggregation", "superlative", "comparative", "filter"],
  "triggers": {
    "filter": ["is", "was", "are", "were"],
    "superlative": ["lowest", "least", "smallest", "youngest", "shortest", "first", "best", "newest", "latest", "highest"],
    "aggregation": ["average", "count", "sum", "total"],
    "comparative": ["than", "higher", "more", "bigger", "larger", "older", "less", "smaller", "lower", "younger", "same", "equal"],
    "ordinal": ["second", "third", "fourth"],
    "unique": ["different"]
  },
  "notes": {
    "superlative": "base list plus 'highest'"
  }
}
)rawjson" + 1;
    return text;
}

} // namespace pasta::catalogs
