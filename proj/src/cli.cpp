#include "chowcalc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chowcalc/bounds.hpp"
#include "chowcalc/catalog.hpp"
#include "chowcalc/chow.hpp"
#include "chowcalc/error.hpp"
#include "chowcalc/monads.hpp"
#include "chowcalc/resolutions.hpp"
#include "chowcalc/splitting.hpp"

using json = nlohmann::json;

namespace chowcalc::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// What a subcommand produced: the JSON document, and the rows used for CSV.
struct Output {
    json doc;
    json rows; // array of flat objects; defaults to [doc]
};

json integer_json(const Integer &x)
{
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return x.convert_to<std::int64_t>();
    return x.str();
}

json rational_list(std::span<const Rational> xs)
{
    json out = json::array();
    for (const auto &x : xs)
        out.push_back(x.to_string());
    return out;
}

Rational parse_rational(const std::string &text, const char *flag)
{
    auto r = Rational::parse(text);
    if (!r)
        throw UsageError(std::string("--") + flag + ": '" + text + "' is not a rational number");
    return *r;
}

std::vector<std::string> split_commas(const std::string &text)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ','))
        out.push_back(item);
    return out;
}

ChernCharacter parse_character(const std::string &text)
{
    std::vector<Rational> comps;
    for (const auto &item : split_commas(text))
        comps.push_back(parse_rational(item, "character"));
    const auto n = static_cast<int>(comps.size()) - 1;
    return {n, std::move(comps)};
}

SplittingType parse_splitting(const std::string &text)
{
    std::vector<std::int64_t> entries;
    for (const auto &item : split_commas(text)) {
        auto r = Rational::parse(item);
        if (!r || !r->to_int64())
            throw UsageError("--splitting: '" + item + "' is not an integer");
        entries.push_back(*r->to_int64());
    }
    return SplittingType(std::move(entries));
}

IntRange parse_range_flag(const std::string &text, const char *flag)
{
    try {
        return parse_range(text);
    } catch (const Error &e) {
        throw UsageError(std::string("--") + flag + ": " + e.what());
    }
}

std::map<std::string, std::string> read_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::io, "cannot read config file '" + path + "'");
    std::map<std::string, std::string> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto trim = [](std::string s) {
            const auto first = s.find_first_not_of(" \t\r");
            const auto last = s.find_last_not_of(" \t\r");
            return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
        };
        line = trim(line);
        if (line.empty() || line[0] == '#')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::io, "cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorCode::io, "cannot write '" + path + "'");
    out << content;
    if (!out.flush())
        throw Error(ErrorCode::io, "failed writing '" + path + "'");
}

std::string csv_cell(const json &value)
{
    std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    if (text.find_first_of(",\"\r\n") == std::string::npos)
        return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

void write_csv(const json &rows, std::ostream &out)
{
    std::vector<std::string> header;
    for (const auto &row : rows)
        for (const auto &[key, _] : row.items())
            if (std::find(header.begin(), header.end(), key) == header.end())
                header.push_back(key);
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << csv_cell(header[i]);
    out << "\r\n";
    for (const auto &row : rows) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i)
                out << ",";
            if (row.contains(header[i]))
                out << csv_cell(row.at(header[i]));
        }
        out << "\r\n";
    }
}

json catalog_rows(const Catalog &catalog)
{
    json rows = json::array();
    for (const auto &e : catalog.entries) {
        json row = {{"kind", to_string(e.kind)}};
        for (const auto &[k, v] : e.inputs)
            row[k] = to_json(v);
        for (const auto &[k, v] : e.outputs)
            row[k] = to_json(v);
        rows.push_back(std::move(row));
    }
    return rows;
}

json report_json(const BoundReport &r)
{
    json doc = {
        {"rank", r.rank},
        {"c1", r.c1},
        {"ch2", r.ch2.to_string()},
        {"splitting_radius", r.splitting_radius.to_string()},
        {"q", r.q.to_string()},
        {"q_int", integer_json(r.q_int)},
        {"h_bounds", rational_list(r.h_bounds)},
        {"euler_bound", r.euler_bound.to_string()},
        {"ch3_bound", r.ch3_bound.to_string()},
        {"literal_mode", r.literal_mode},
        {"schema_version", catalog_schema_version},
    };
    if (r.splitting)
        doc["splitting_type"] = std::vector<std::int64_t>(r.splitting->entries().begin(), r.splitting->entries().end());
    return doc;
}

json monad_json(const MonadShape &m)
{
    return {
        {"v", m.v()},
        {"w", m.w()},
        {"u", m.u()},
        {"left", m.left().to_string()},
        {"middle", m.middle().to_string()},
        {"right", m.right().to_string()},
    };
}

json stratum_json(const StratumDims &d)
{
    json doc = {
        {"length", d.length},
        {"hom_dim", integer_json(d.hom_dim)},
        {"aut_left", integer_json(d.aut_left)},
        {"aut_middle", integer_json(d.aut_middle)},
    };
    doc["projective_dim"] = d.projective_dim ? integer_json(*d.projective_dim) : json(nullptr);
    doc["aut_lambda"] = d.aut_lambda ? integer_json(*d.aut_lambda) : json("unknown");
    return doc;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact Chern-class calculator for sheaves on P^2 and P^3", "chowcalc"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    // The chosen subcommand fills this in; it runs after parsing succeeds.
    std::function<Output()> action;

    // todd
    int todd_dim = 0;
    auto *todd_cmd = app.add_subcommand("todd", "Todd class of P^n");
    todd_cmd->add_option("--dim", todd_dim, "Ambient dimension (2 or 3)")->required();
    todd_cmd->callback([&] {
        action = [&] {
            const auto t = todd(todd_dim);
            return Output{{{"components", rational_list(t.components)}}, {}};
        };
    });

    // chern
    int chern_dim = 3;
    std::int64_t chern_rank = 0, chern_c1 = 0, chern_c2 = 0, chern_c3 = 0;
    std::string chern_character;
    auto *chern_cmd = app.add_subcommand("chern", "Convert between Chern classes and Chern characters");
    chern_cmd->add_option("--dim", chern_dim, "Ambient dimension (2 or 3)");
    auto *rank_opt = chern_cmd->add_option("--rank", chern_rank, "Rank");
    chern_cmd->add_option("--c1", chern_c1, "First Chern class");
    chern_cmd->add_option("--c2", chern_c2, "Second Chern class");
    chern_cmd->add_option("--c3", chern_c3, "Third Chern class (P^3 only)");
    auto *character_opt =
        chern_cmd->add_option("--character", chern_character, "Chern character 'ch0,ch1,...' to convert back");
    rank_opt->excludes(character_opt);
    chern_cmd->callback([&] {
        action = [&] {
            if (!chern_character.empty()) {
                const auto ch = parse_character(chern_character);
                const auto classes = character_to_chern(ch);
                json doc = {{"rank", integer_json(classes.rank)},
                            {"c1", integer_json(classes.c1)},
                            {"c2", integer_json(classes.c2)}};
                if (ch.ambient_dim() == 3)
                    doc["c3"] = integer_json(classes.c3);
                return Output{doc, {}};
            }
            const auto ch = chern_to_character({chern_rank, chern_c1, chern_c2, chern_c3}, chern_dim);
            return Output{{{"ambient_dim", chern_dim}, {"character", rational_list(ch.components())}}, {}};
        };
    });

    // euler
    std::string euler_character;
    auto *euler_cmd = app.add_subcommand("euler", "Euler characteristic by Riemann-Roch");
    euler_cmd->add_option("--character", euler_character, "Chern character 'ch0,ch1,...'")->required();
    euler_cmd->callback([&] {
        action = [&] {
            const auto ch = parse_character(euler_character);
            return Output{{{"ambient_dim", ch.ambient_dim()},
                           {"euler_characteristic", euler_characteristic(ch).to_string()}},
                          {}};
        };
    });

    // restrict
    std::string restrict_character;
    auto *restrict_cmd = app.add_subcommand("restrict", "Restrict a P^3 character to a plane");
    restrict_cmd->add_option("--character", restrict_character, "Chern character 'ch0,ch1,ch2,ch3'")->required();
    restrict_cmd->callback([&] {
        action = [&] {
            const auto ch = parse_character(restrict_character);
            const auto restricted = restrict_to_hyperplane(ch);
            const auto pushed = pushforward_from_hyperplane(ch);
            return Output{{{"restricted", rational_list(restricted.components())},
                           {"pushforward", rational_list(pushed.components())},
                           {"euler_restricted", euler_characteristic(restricted).to_string()},
                           {"euler_pushforward", euler_characteristic(pushed).to_string()}},
                          {}};
        };
    });

    // bound
    std::int64_t bound_rank = 0, bound_c1 = 0;
    std::string bound_ch2, bound_ch3 = "0", bound_splitting;
    bool bound_literal = false;
    auto *bound_cmd = app.add_subcommand("bound", "Cohomology, Euler and ch3 bounds on P^3");
    bound_cmd->add_option("--rank", bound_rank, "Rank")->required();
    bound_cmd->add_option("--c1", bound_c1, "First Chern class")->required();
    bound_cmd->add_option("--ch2", bound_ch2, "ch_2 as p/q")->required();
    bound_cmd->add_option("--ch3", bound_ch3, "ch_3 (only carried along with --splitting)");
    bound_cmd->add_option("--splitting", bound_splitting, "Splitting type 'b1,...,br' for a per-type report");
    bound_cmd->add_flag("--literal", bound_literal, "Do not clamp negative factors at zero");
    bound_cmd->callback([&] {
        action = [&] {
            const auto ch2 = parse_rational(bound_ch2, "ch2");
            const auto mode = bound_literal ? BoundMode::literal : BoundMode::clamped;
            if (bound_splitting.empty())
                return Output{report_json(worst_case_bounds(bound_rank, bound_c1, ch2, mode)), {}};
            const ChernCharacter ch(3, {Rational(bound_rank), Rational(bound_c1), ch2, parse_rational(bound_ch3, "ch3")});
            return Output{report_json(p3_bounds(parse_splitting(bound_splitting), ch, mode)), {}};
        };
    });

    // enumerate-c3
    std::int64_t ec3_rank = 0, ec3_c1 = 0, ec3_c2 = 0;
    auto *ec3_cmd = app.add_subcommand("enumerate-c3", "Integer c3 allowed by the ch3 bound");
    ec3_cmd->add_option("--rank", ec3_rank, "Rank")->required();
    ec3_cmd->add_option("--c1", ec3_c1, "First Chern class")->required();
    ec3_cmd->add_option("--c2", ec3_c2, "Second Chern class")->required();
    ec3_cmd->callback([&] {
        action = [&] {
            const auto interval = enumerate_admissible_c3(ec3_rank, ec3_c1, ec3_c2);
            const Rational ch2 = chern_to_character({ec3_rank, ec3_c1, ec3_c2, 0}, 3)[2];
            return Output{{{"c3_min", integer_json(interval.min)},
                           {"c3_max", integer_json(interval.max)},
                           {"count", integer_json(interval.max - interval.min + 1)},
                           {"ch3_bound", ch3_bound(ec3_rank, ec3_c1, ch2).to_string()}},
                          {}};
        };
    });

    // splitting-types
    std::int64_t st_rank = 0, st_c1 = 0;
    bool st_no_gap = false;
    auto *st_cmd = app.add_subcommand("splitting-types", "Enumerate admissible splitting types");
    st_cmd->add_option("--rank", st_rank, "Rank")->required();
    st_cmd->add_option("--c1", st_c1, "First Chern class")->required();
    st_cmd->add_flag("--no-gap", st_no_gap, "Skip the gap <= 2 filter");
    st_cmd->callback([&] {
        action = [&] {
            const auto types = enumerate_splitting_types(st_rank, st_c1, !st_no_gap);
            json list = json::array(), rows = json::array();
            for (const auto &t : types) {
                std::vector<std::int64_t> entries(t.entries().begin(), t.entries().end());
                list.push_back(entries);
                rows.push_back({{"splitting_type", t.to_string()}});
            }
            return Output{{{"splitting_types", list}, {"count", types.size()}}, rows};
        };
    });

    // resolution
    std::int64_t res_c2 = 0, res_s = 0;
    bool res_verify = false;
    auto *res_cmd = app.add_subcommand("resolution", "Two-term resolution for rank 2, c1 = -1 on P^3");
    res_cmd->add_option("--c2", res_c2, "Second Chern class (> 4)")->required();
    res_cmd->add_option("--s", res_s, "Resolution parameter s")->required();
    res_cmd->add_flag("--verify", res_verify, "Check ch(R^0) - ch(R^-1) against the Chern classes");
    res_cmd->callback([&] {
        action = [&] {
            const auto params = resolution_params(res_c2, res_s);
            const auto shapes = resolution_shapes(res_c2, res_s);
            const auto presentation = presentation_report(res_c2, res_s);
            const auto ch = chern_to_character({2, -1, params.c2, params.c3}, 3);
            json doc = {
                {"c2", params.c2},
                {"s", params.s},
                {"c3", params.c3},
                {"character", rational_list(ch.components())},
                {"r_minus_1", shapes.left.to_string()},
                {"r_0", shapes.right.to_string()},
                {"dim_hom", integer_json(presentation.dim_hom)},
                {"dim_pv", integer_json(presentation.dim_pv)},
                {"dim_g", integer_json(presentation.dim_g)},
            };
            if (res_verify)
                doc["chern_consistent"] = verify_resolution_chern(res_c2, res_s);
            return Output{doc, {}};
        };
    });

    // monad
    std::int64_t monad_rank = 0, monad_d = 0;
    std::string monad_ch2;
    bool monad_dual = false;
    auto *monad_cmd = app.add_subcommand("monad", "Linear monad shape on P^2");
    monad_cmd->add_option("--rank", monad_rank, "Rank")->required();
    monad_cmd->add_option("--d", monad_d, "Degree c1")->required();
    monad_cmd->add_option("--ch2", monad_ch2, "ch_2 as p/q")->required();
    monad_cmd->add_flag("--dual", monad_dual, "Also print the dual monad shape");
    monad_cmd->callback([&] {
        action = [&] {
            const auto ch2 = parse_rational(monad_ch2, "ch2");
            const auto shape = monad_shape(monad_rank, monad_d, ch2);
            json doc = monad_json(shape);
            doc["charge"] = charge(monad_rank, monad_d, ch2).to_string();
            doc["normalized"] = true;
            if (monad_dual)
                doc["dual"] = monad_json(dual_complex_shape(shape));
            if (shape.u() + monad_d == 0) {
                const auto kp = kernel_presentation(monad_rank, shape.u());
                doc["kernel_presentation"] = {
                    {"surjection", kp.surjection_source.to_string() + " -> " + kp.surjection_target.to_string()},
                    {"dual_resolution", kp.resolution_left.to_string() + " -> " + kp.resolution_right.to_string()},
                    {"hom_dim", integer_json(kp.hom_dim)},
                };
            }
            return Output{doc, {}};
        };
    });

    // partitions
    std::int64_t part_length = 0;
    std::optional<std::int64_t> part_rank, part_charge;
    auto *part_cmd = app.add_subcommand("partitions", "Partition types of zero-dimensional sheaves");
    part_cmd->add_option("--length", part_length, "Total length l")->required();
    auto *pr = part_cmd->add_option("--rank", part_rank, "Rank r, to report stratum dimensions");
    auto *pc = part_cmd->add_option("--charge", part_charge, "Charge c, to report stratum dimensions");
    pr->needs(pc);
    pc->needs(pr);
    part_cmd->callback([&] {
        action = [&] {
            const auto types = partition_types(part_length);
            json list = json::array(), rows = json::array();
            for (const auto &t : types) {
                json item = {{"partition_type", t.to_string()}, {"points", t.parts().size()}};
                if (part_rank)
                    item["stratum"] = stratum_json(stratum_dims(*part_rank, *part_charge, t));
                list.push_back(item);
                json row = {{"partition_type", t.to_string()}, {"points", t.parts().size()}};
                if (part_rank)
                    for (const auto &[k, v] : item["stratum"].items())
                        row[k] = v;
                rows.push_back(std::move(row));
            }
            return Output{{{"length", part_length}, {"count", types.size()}, {"types", list}}, rows};
        };
    });

    // catalog
    auto *catalog_cmd = app.add_subcommand("catalog", "Generate or compare catalog files");
    catalog_cmd->require_subcommand(1);
    std::string cat_c2, cat_l, cat_rank, cat_c1, cat_charge, cat_output, cat_config;
    auto add_grid_flags = [&](CLI::App *cmd, std::initializer_list<const char *> flags) {
        for (const auto *flag : flags) {
            std::string *target = nullptr;
            const std::string name = flag;
            if (name == "c2") target = &cat_c2;
            else if (name == "l") target = &cat_l;
            else if (name == "rank") target = &cat_rank;
            else if (name == "c1") target = &cat_c1;
            else target = &cat_charge;
            cmd->add_option("--" + name, *target, "Range a..b for " + name);
        }
        cmd->add_option("--output", cat_output, "Write the catalog to this path instead of stdout");
        cmd->add_option("--config", cat_config, "key=value file presetting ranges; flags win");
    };
    auto grid = [&](std::string &value, const char *key, const std::map<std::string, std::string> &config,
                    const char *fallback) {
        if (value.empty()) {
            auto it = config.find(key);
            if (it != config.end())
                value = it->second;
            else if (fallback)
                value = fallback;
            else
                throw UsageError(std::string("--") + key + " is required");
        }
        return parse_range_flag(value, key);
    };
    auto emit_catalog = [&](const std::function<Catalog(const std::map<std::string, std::string> &)> &make) {
        action = [&, make] {
            std::map<std::string, std::string> config;
            if (!cat_config.empty())
                config = read_config(cat_config);
            if (cat_output.empty() && config.contains("output"))
                cat_output = config.at("output");
            Catalog catalog = make(config);
            const std::string text = serialize(catalog);
            if (!cat_output.empty()) {
                write_file(cat_output, text);
                return Output{{{"catalog", catalog.name}, {"entries", catalog.entries.size()}, {"path", cat_output}},
                              {}};
            }
            json doc = json::parse(text);
            return Output{doc, catalog_rows(catalog)};
        };
    };

    auto *strata_cmd = catalog_cmd->add_subcommand("strata", "Stratum labels (c2, s, c3, partition type)");
    add_grid_flags(strata_cmd, {"c2", "l"});
    strata_cmd->callback([&] {
        emit_catalog([&](const auto &config) {
            return strata_catalog(grid(cat_c2, "c2", config, nullptr), grid(cat_l, "l", config, "0..0"));
        });
    });
    auto *resolutions_cmd = catalog_cmd->add_subcommand("resolutions", "Resolution shapes over a c2 range");
    add_grid_flags(resolutions_cmd, {"c2"});
    resolutions_cmd->callback([&] {
        emit_catalog([&](const auto &config) { return resolution_catalog(grid(cat_c2, "c2", config, nullptr)); });
    });
    auto *bounds_cmd = catalog_cmd->add_subcommand("bounds", "Worst-case bounds over a (rank, c1, c2) grid");
    add_grid_flags(bounds_cmd, {"rank", "c1", "c2"});
    bounds_cmd->callback([&] {
        emit_catalog([&](const auto &config) {
            return bound_catalog(grid(cat_rank, "rank", config, nullptr), grid(cat_c1, "c1", config, nullptr),
                                 grid(cat_c2, "c2", config, nullptr));
        });
    });
    auto *monads_cmd = catalog_cmd->add_subcommand("monads", "Monad shapes over rank and charge ranges");
    add_grid_flags(monads_cmd, {"rank", "charge"});
    monads_cmd->callback([&] {
        emit_catalog([&](const auto &config) {
            return monad_catalog(grid(cat_rank, "rank", config, nullptr), grid(cat_charge, "charge", config, nullptr));
        });
    });

    std::vector<std::string> diff_files;
    auto diff_action = [&] {
        action = [&] {
            const auto a = parse_catalog(read_file(diff_files.at(0)));
            const auto b = parse_catalog(read_file(diff_files.at(1)));
            const auto d = diff(a, b);
            json rows = json::array();
            auto add_rows = [&](const char *status, const std::vector<CatalogEntry> &entries) {
                for (const auto &e : entries)
                    rows.push_back({{"status", status}, {"entry", serialize(e)}});
            };
            add_rows("removed", d.removed);
            add_rows("added", d.added);
            for (const auto &[before, after] : d.changed)
                rows.push_back({{"status", "changed"}, {"entry", serialize(after)}});
            return Output{to_json(d), rows};
        };
    };
    auto *catalog_diff_cmd = catalog_cmd->add_subcommand("diff", "Compare two catalog files");
    catalog_diff_cmd->add_option("files", diff_files, "Two catalog files")->required()->expected(2);
    catalog_diff_cmd->callback(diff_action);
    auto *diff_cmd = app.add_subcommand("diff", "Compare two catalog files");
    diff_cmd->add_option("files", diff_files, "Two catalog files")->required()->expected(2);
    diff_cmd->callback(diff_action);

    auto report_error = [&](std::string_view code, const std::string &message, int exit_code) {
        json doc = {{"error", {{"code", code}, {"message", message}}}};
        out << doc.dump() << "\n";
        err << "chowcalc: " << message << "\n";
        return exit_code;
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        const bool help = e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success);
        if (help) {
            app.exit(e, out, err);
            return exit_ok;
        }
        return report_error("usage", e.what(), exit_usage);
    }

    try {
        if (!action)
            return report_error("usage", "no subcommand given", exit_usage);
        Output result = action();
        if (format == "csv") {
            json rows = result.rows.is_array() ? result.rows : json::array({result.doc});
            write_csv(rows, out);
        } else {
            out << result.doc.dump(2) << "\n";
        }
        return exit_ok;
    } catch (const UsageError &e) {
        return report_error("usage", e.what(), exit_usage);
    } catch (const Error &e) {
        return report_error(to_string(e.code()), e.what(), exit_domain_error);
    }
}

} // namespace chowcalc::cli
