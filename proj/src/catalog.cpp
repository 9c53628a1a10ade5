#include "chowcalc/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <tuple>

#include "chowcalc/bounds.hpp"
#include "chowcalc/error.hpp"
#include "chowcalc/monads.hpp"
#include "chowcalc/resolutions.hpp"

using json = nlohmann::json;

namespace chowcalc {

namespace {

constexpr std::int64_t max_grid_points = 1'000'000;

std::int64_t range_size(IntRange r) { return r.hi - r.lo + 1; }

void require_valid(IntRange r, const char *name, std::int64_t min_lo = std::numeric_limits<std::int64_t>::min())
{
    if (r.lo > r.hi)
        throw Error(ErrorCode::invalid_argument, std::string("empty range for ") + name);
    if (r.lo < min_lo)
        throw Error(ErrorCode::invalid_argument,
                    std::string(name) + " range must start at " + std::to_string(min_lo) + " or above");
    if (range_size(r) > max_grid_points)
        throw Error(ErrorCode::invalid_argument, std::string(name) + " range is too large");
}

Field rational_field(const Rational &x) { return x; }

Field bool_field(bool x) { return x; }

Field label(std::string text) { return text; }

} // namespace

std::string_view to_string(EntryKind kind)
{
    switch (kind) {
    case EntryKind::bound: return "bound";
    case EntryKind::resolution: return "resolution";
    case EntryKind::monad: return "monad";
    case EntryKind::stratum: return "stratum";
    }
    return "bound";
}

EntryKind entry_kind_from_string(std::string_view text)
{
    for (auto kind : {EntryKind::bound, EntryKind::resolution, EntryKind::monad, EntryKind::stratum})
        if (to_string(kind) == text)
            return kind;
    throw Error(ErrorCode::invalid_argument, "unknown entry kind '" + std::string(text) + "'");
}

Field integer_field(const Integer &value)
{
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
        return value.convert_to<std::int64_t>();
    return Rational(value);
}

bool entry_less(const CatalogEntry &a, const CatalogEntry &b)
{
    return std::tie(a.kind, a.inputs) < std::tie(b.kind, b.inputs);
}

json to_json(const Field &field)
{
    return std::visit(
        [](const auto &v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Rational>) {
                return v.to_string();
            } else if constexpr (std::is_same_v<T, std::string>) {
                if (Rational::parse(v))
                    throw Error(ErrorCode::invalid_argument, "label '" + v + "' would read back as a rational");
                return v;
            } else {
                return v;
            }
        },
        field);
}

Field field_from_json(const json &j)
{
    if (j.is_boolean())
        return j.get<bool>();
    if (j.is_number_integer())
        return j.get<std::int64_t>();
    if (j.is_string()) {
        const auto &text = j.get_ref<const std::string &>();
        if (auto r = Rational::parse(text)) {
            if (r->to_string() != text)
                throw Error(ErrorCode::invalid_argument, "rational '" + text + "' is not in lowest terms");
            return *r;
        }
        return text;
    }
    throw Error(ErrorCode::invalid_argument, "unsupported catalog field " + j.dump());
}

namespace {

json to_json(const FieldMap &map)
{
    json out = json::object();
    for (const auto &[key, value] : map)
        out[key] = to_json(value);
    return out;
}

FieldMap field_map_from_json(const json &j)
{
    if (!j.is_object())
        throw Error(ErrorCode::invalid_argument, "expected an object, got " + j.dump());
    FieldMap out;
    for (const auto &[key, value] : j.items())
        out.emplace(key, field_from_json(value));
    return out;
}

} // namespace

json to_json(const CatalogEntry &entry)
{
    return {
        {"inputs", to_json(entry.inputs)},
        {"kind", to_string(entry.kind)},
        {"outputs", to_json(entry.outputs)},
        {"schema_version", entry.schema_version},
    };
}

CatalogEntry entry_from_json(const json &j)
{
    try {
        CatalogEntry entry;
        entry.kind = entry_kind_from_string(j.at("kind").get<std::string>());
        entry.inputs = field_map_from_json(j.at("inputs"));
        entry.outputs = field_map_from_json(j.at("outputs"));
        entry.schema_version = j.at("schema_version").get<int>();
        return entry;
    } catch (const json::exception &e) {
        throw Error(ErrorCode::invalid_argument, std::string("malformed catalog entry: ") + e.what());
    }
}

std::string serialize(const CatalogEntry &entry) { return to_json(entry).dump(); }

CatalogEntry parse_entry(std::string_view text)
{
    try {
        return entry_from_json(json::parse(text));
    } catch (const json::exception &e) {
        throw Error(ErrorCode::invalid_argument, std::string("malformed JSON: ") + e.what());
    }
}

std::string serialize(const Catalog &catalog)
{
    json entries = json::array();
    for (const auto &e : catalog.entries)
        entries.push_back(to_json(e));
    json doc = {
        {"catalog", catalog.name},
        {"entries", std::move(entries)},
        {"schema_version", catalog.schema_version},
    };
    return doc.dump(2) + "\n";
}

Catalog parse_catalog(std::string_view text)
{
    try {
        const json doc = json::parse(text);
        Catalog catalog;
        catalog.name = doc.at("catalog").get<std::string>();
        catalog.schema_version = doc.at("schema_version").get<int>();
        if (catalog.schema_version != catalog_schema_version)
            throw Error(ErrorCode::invalid_argument,
                        "unsupported catalog schema_version " + std::to_string(catalog.schema_version));
        for (const auto &e : doc.at("entries"))
            catalog.entries.push_back(entry_from_json(e));
        return catalog;
    } catch (const json::exception &e) {
        throw Error(ErrorCode::invalid_argument, std::string("malformed catalog: ") + e.what());
    }
}

IntRange parse_range(std::string_view text)
{
    auto parse_int = [&](std::string_view s) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
            throw Error(ErrorCode::invalid_argument, "malformed range '" + std::string(text) + "'");
        return v;
    };
    IntRange r{};
    if (auto dots = text.find(".."); dots != std::string_view::npos) {
        r = {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
    } else {
        const auto v = parse_int(text);
        r = {v, v};
    }
    if (r.lo > r.hi)
        throw Error(ErrorCode::invalid_argument, "range '" + std::string(text) + "' is empty");
    return r;
}

void sort_entries(Catalog &catalog) { std::stable_sort(catalog.entries.begin(), catalog.entries.end(), entry_less); }

Catalog strata_catalog(IntRange c2_range, IntRange l_range)
{
    require_valid(c2_range, "c2");
    require_valid(l_range, "l", 0);

    std::vector<std::pair<std::int64_t, std::vector<PartitionType>>> types;
    for (auto l = l_range.lo; l <= l_range.hi; ++l)
        types.emplace_back(l, partition_types(l));

    Catalog catalog{"strata", {}};
    for (auto c2 = std::max<std::int64_t>(c2_range.lo, 5); c2 <= c2_range.hi; ++c2) {
        for (auto s : admissible_s(c2)) {
            const auto c3 = c3_of(c2, s);
            const auto ch = chern_to_character({2, -1, c2, c3}, 3);
            const auto presentation = presentation_report(c2, s);
            for (const auto &[l, list] : types) {
                for (const auto &lambda : list) {
                    CatalogEntry e;
                    e.kind = EntryKind::stratum;
                    e.inputs = {{"c2", c2}, {"s", s}, {"l", l}, {"partition_type", label(lambda.to_string())}};
                    e.outputs = {
                        {"c3", c3},
                        {"ch2", rational_field(ch[2])},
                        {"ch3", rational_field(ch[3])},
                        {"dim_pv", integer_field(presentation.dim_pv)},
                        {"dim_g", integer_field(presentation.dim_g)},
                        {"points", static_cast<std::int64_t>(lambda.parts().size())},
                    };
                    catalog.entries.push_back(std::move(e));
                }
            }
        }
    }
    sort_entries(catalog);
    return catalog;
}

Catalog resolution_catalog(IntRange c2_range)
{
    require_valid(c2_range, "c2");
    Catalog catalog{"resolutions", {}};
    for (auto c2 = std::max<std::int64_t>(c2_range.lo, 5); c2 <= c2_range.hi; ++c2) {
        for (auto s : admissible_s(c2)) {
            const auto shapes = resolution_shapes(c2, s);
            const auto presentation = presentation_report(c2, s);
            CatalogEntry e;
            e.kind = EntryKind::resolution;
            e.inputs = {{"c2", c2}, {"s", s}};
            e.outputs = {
                {"c3", c3_of(c2, s)},
                {"r_minus_1", label(shapes.left.to_string())},
                {"r_0", label(shapes.right.to_string())},
                {"chern_consistent", bool_field(verify_resolution_chern(c2, s))},
                {"dim_hom", integer_field(presentation.dim_hom)},
                {"dim_pv", integer_field(presentation.dim_pv)},
                {"dim_g", integer_field(presentation.dim_g)},
            };
            catalog.entries.push_back(std::move(e));
        }
    }
    sort_entries(catalog);
    return catalog;
}

Catalog bound_catalog(IntRange rank, IntRange c1_range, IntRange c2_range)
{
    require_valid(rank, "rank", 1);
    require_valid(c1_range, "c1");
    require_valid(c2_range, "c2");
    if (range_size(rank) * range_size(c1_range) * range_size(c2_range) > max_grid_points)
        throw Error(ErrorCode::invalid_argument, "bound grid is too large");

    Catalog catalog{"bounds", {}};
    for (auto r = rank.lo; r <= rank.hi; ++r) {
        for (auto c1 = c1_range.lo; c1 <= c1_range.hi; ++c1) {
            for (auto c2 = c2_range.lo; c2 <= c2_range.hi; ++c2) {
                const Rational ch2 = chern_to_character({r, c1, c2, 0}, 3)[2];
                const auto report = worst_case_bounds(r, c1, ch2);
                const auto interval = enumerate_admissible_c3(r, c1, c2);
                CatalogEntry e;
                e.kind = EntryKind::bound;
                e.inputs = {{"rank", r}, {"c1", c1}, {"c2", c2}};
                e.outputs = {
                    {"ch2", rational_field(ch2)},
                    {"splitting_radius", rational_field(report.splitting_radius)},
                    {"q", rational_field(report.q)},
                    {"euler_bound", rational_field(report.euler_bound)},
                    {"ch3_bound", rational_field(report.ch3_bound)},
                    {"c3_min", integer_field(interval.min)},
                    {"c3_max", integer_field(interval.max)},
                };
                catalog.entries.push_back(std::move(e));
            }
        }
    }
    sort_entries(catalog);
    return catalog;
}

Catalog monad_catalog(IntRange rank, IntRange charge_range)
{
    require_valid(rank, "rank", 1);
    require_valid(charge_range, "charge", 0);
    Catalog catalog{"monads", {}};
    for (auto r = rank.lo; r <= rank.hi; ++r) {
        for (auto d = -r + 1; d <= 0; ++d) {
            for (auto c = charge_range.lo; c <= charge_range.hi; ++c) {
                if (d + c < 0)
                    continue;
                // ch_2 = -c - d/2 is the character with charge c.
                const Rational ch2 = -Rational(c) - Rational::from_integers(d, 2);
                const auto shape = monad_shape(r, d, ch2);
                CatalogEntry e;
                e.kind = EntryKind::monad;
                e.inputs = {{"rank", r}, {"d", d}, {"charge", c}};
                e.outputs = {
                    {"ch2", rational_field(ch2)},
                    {"v", shape.v()},
                    {"w", shape.w()},
                    {"u", shape.u()},
                    {"instanton", bool_field(d == 0)},
                };
                if (c + d == 0)
                    e.outputs.emplace("kernel_hom_dim", integer_field(kernel_presentation(r, c).hom_dim));
                catalog.entries.push_back(std::move(e));
            }
        }
    }
    sort_entries(catalog);
    return catalog;
}

CatalogDiff diff(const Catalog &a, const Catalog &b)
{
    using Key = std::pair<EntryKind, FieldMap>;
    std::map<Key, const CatalogEntry *> left, right;
    for (const auto &e : a.entries)
        left.emplace(Key{e.kind, e.inputs}, &e);
    for (const auto &e : b.entries)
        right.emplace(Key{e.kind, e.inputs}, &e);

    CatalogDiff out;
    for (const auto &[key, entry] : left) {
        auto it = right.find(key);
        if (it == right.end())
            out.removed.push_back(*entry);
        else if (!(*entry == *it->second))
            out.changed.emplace_back(*entry, *it->second);
    }
    for (const auto &[key, entry] : right)
        if (!left.contains(key))
            out.added.push_back(*entry);
    return out;
}

json to_json(const CatalogDiff &d)
{
    json removed = json::array(), added = json::array(), changed = json::array();
    for (const auto &e : d.removed)
        removed.push_back(to_json(e));
    for (const auto &e : d.added)
        added.push_back(to_json(e));
    for (const auto &[before, after] : d.changed)
        changed.push_back({{"before", to_json(before)}, {"after", to_json(after)}});
    return {{"identical", d.empty()}, {"removed", removed}, {"added", added}, {"changed", changed}};
}

} // namespace chowcalc
