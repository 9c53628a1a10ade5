#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "chowcalc/rational.hpp"

// Catalog files: sorted lists of labelled computations, serialized as
// canonical JSON so that re-running a generator or re-serializing a parsed
// file reproduces the same bytes.
//
// Field encoding:
//   int64     -> JSON number
//   bool      -> JSON bool
//   Rational  -> JSON string "p/q" (or "p")
//   label     -> JSON string that is not a rational literal

namespace chowcalc {

inline constexpr int catalog_schema_version = 1;

enum class EntryKind { bound, resolution, monad, stratum };

std::string_view to_string(EntryKind kind);
EntryKind entry_kind_from_string(std::string_view text);

using Field = std::variant<std::int64_t, Rational, bool, std::string>;
using FieldMap = std::map<std::string, Field>;

/// int64 when it fits, otherwise an integral Rational.
Field integer_field(const Integer &value);

struct CatalogEntry {
    EntryKind kind = EntryKind::bound;
    FieldMap inputs;
    FieldMap outputs;
    int schema_version = catalog_schema_version;

    friend bool operator==(const CatalogEntry &, const CatalogEntry &) = default;
};

/// Sort key: kind, then inputs.
bool entry_less(const CatalogEntry &a, const CatalogEntry &b);

nlohmann::json to_json(const Field &field);
Field field_from_json(const nlohmann::json &j);
nlohmann::json to_json(const CatalogEntry &entry);
CatalogEntry entry_from_json(const nlohmann::json &j);

/// Compact single-line form.
std::string serialize(const CatalogEntry &entry);
CatalogEntry parse_entry(std::string_view text);

struct Catalog {
    std::string name;
    std::vector<CatalogEntry> entries;
    int schema_version = catalog_schema_version;

    friend bool operator==(const Catalog &, const Catalog &) = default;
};

/// Pretty-printed with a trailing newline; entries are written in stored order.
std::string serialize(const Catalog &catalog);
Catalog parse_catalog(std::string_view text);

struct IntRange {
    std::int64_t lo;
    std::int64_t hi;
};

/// Parses "a..b" or a single integer "a". Throws invalid_argument.
IntRange parse_range(std::string_view text);

/// Strata labels on P^3: every admissible (c2, s) with its c3, crossed with
/// every partition type of length l in the l range.
Catalog strata_catalog(IntRange c2, IntRange l);

/// Resolution shapes and presentation dimensions for every admissible (c2, s).
Catalog resolution_catalog(IntRange c2);

/// Worst-case bounds and the admissible c3 interval on a (rank, c1, c2) grid.
Catalog bound_catalog(IntRange rank, IntRange c1, IntRange c2);

/// Monad shapes for every normalized (r, d) and charge with d + c >= 0.
Catalog monad_catalog(IntRange rank, IntRange charge);

/// Sorts entries with entry_less.
void sort_entries(Catalog &catalog);

struct CatalogDiff {
    std::vector<CatalogEntry> removed; ///< only in the first catalog
    std::vector<CatalogEntry> added;   ///< only in the second
    std::vector<std::pair<CatalogEntry, CatalogEntry>> changed;

    bool empty() const { return removed.empty() && added.empty() && changed.empty(); }
};

/// Entries are matched by (kind, inputs).
CatalogDiff diff(const Catalog &a, const Catalog &b);

nlohmann::json to_json(const CatalogDiff &d);

} // namespace chowcalc
