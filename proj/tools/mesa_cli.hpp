#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mesa/mesa.hpp"

namespace mesa::cli {

enum class Format { Json, Csv, Plain };

struct CliConfig {
    Format format = Format::Json;
    int ceiling = 10;
    bool allow_large = false;
    unsigned workers = 1;
    std::vector<std::string> engines;
    std::string inject_fault;
};

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitDisagree = 2;

// MESA_BRUTE_FORCE_CEILING overrides the default generation ceiling.
inline int default_ceiling() {
    if (const char* env = std::getenv("MESA_BRUTE_FORCE_CEILING")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
        }
    }
    return GenerationLimits{}.ceiling;
}

inline std::string join(const std::vector<int>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

inline std::string braces(const std::vector<int>& v) { return "{" + join(v, ",") + "}"; }

inline ReportOptions report_options(const CliConfig& cfg, bool brute_by_default) {
    ReportOptions opts;
    if (!cfg.engines.empty()) {
        opts.brute_force = opts.subset = opts.recurrence = opts.closed_form = false;
        for (const auto& name : cfg.engines) {
            const auto e = parse_engine(name);
            if (!e) throw ParseError("unknown engine '" + name + "'");
            switch (*e) {
            case Engine::BruteForce: opts.brute_force = true; break;
            case Engine::Subset: opts.subset = true; break;
            case Engine::Recurrence: opts.recurrence = true; break;
            case Engine::ClosedForm: opts.closed_form = true; break;
            }
        }
    } else {
        opts.brute_force = brute_by_default;
    }
    if (!cfg.inject_fault.empty()) {
        opts.inject_fault = parse_engine(cfg.inject_fault);
        if (!opts.inject_fault) throw ParseError("unknown engine '" + cfg.inject_fault + "'");
    }
    opts.brute.limits = {cfg.ceiling, cfg.allow_large};
    opts.brute.workers = cfg.workers;
    return opts;
}

// ---------------------------------------------------------------------------

inline int cmd_check(const CliConfig& cfg, const std::string& set_text, int order,
                     std::ostream& out) {
    const MesaSet m = MesaSet::from_values(parse_set(set_text), order);
    const bool ok = is_admissible(m);

    // First x in M with 3|M_x| > 2x - 1.
    std::optional<std::pair<int, std::size_t>> violation;
    for (std::size_t i = 0; i < m.size() && !ok; ++i) {
        const int x = m.elements()[i];
        if (3 * static_cast<long long>(i + 1) > 2LL * x - 1) {
            violation = {x, i + 1};
            break;
        }
    }
    std::optional<StirlingPermutation> witness;
    if (ok) witness = canonical_witness(m);

    switch (cfg.format) {
    case Format::Json: {
        nlohmann::json j{{"set", m.elements()}, {"order", m.order()}, {"admissible", ok}};
        j["witness"] = witness ? nlohmann::json(witness->to_string()) : nlohmann::json(nullptr);
        if (violation) j["violation"] = {{"x", violation->first}, {"size", violation->second}};
        out << j.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        out << "set,order,admissible,witness\n"
            << '"' << join(m.elements(), ",") << "\"," << m.order() << ','
            << (ok ? "true" : "false") << ',' << (witness ? witness->to_string() : "") << '\n';
        break;
    case Format::Plain:
        if (ok) {
            out << m.to_string() << " is admissible\n"
                << "canonical witness in Q_" << m.order() << ": " << witness->to_string() << '\n';
        } else {
            out << m.to_string() << " is not admissible: |M_" << violation->first
                << "| = " << violation->second << " > (2*" << violation->first << "-1)/3\n";
        }
        break;
    }
    return kExitOk;
}

inline int cmd_mesa(const CliConfig& cfg, const std::string& word_text, std::ostream& out) {
    const StirlingPermutation w = validate_stirling(parse_word(word_text));
    const MesaSet mesas = mesa_set(w);
    const auto minima = local_minima(w);
    switch (cfg.format) {
    case Format::Json:
        out << nlohmann::json{{"word", w.to_string()},
                              {"order", w.order()},
                              {"mesas", mesas.elements()},
                              {"local_minima", minima}}
                   .dump(2)
            << '\n';
        break;
    case Format::Csv:
        out << "word,order,mesas,local_minima\n"
            << '"' << w.to_string() << "\"," << w.order() << ",\"" << join(mesas.elements(), ",")
            << "\",\"" << join(minima, ",") << "\"\n";
        break;
    case Format::Plain:
        out << "Mesa(" << w.to_string() << ") = " << mesas.to_string() << '\n'
            << "local minima: " << braces(minima) << '\n';
        break;
    }
    return kExitOk;
}

inline int emit_reports(const CliConfig& cfg, const std::vector<CountReport>& reports,
                        bool as_table, std::ostream& out) {
    bool all_agree = true;
    for (const auto& r : reports) all_agree = all_agree && r.agree;

    switch (cfg.format) {
    case Format::Json: {
        if (!as_table) {
            out << to_json(reports.front()).dump(2) << '\n';
            break;
        }
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : reports) rows.push_back(to_json(r));
        out << nlohmann::json{{"rows", rows}, {"agree", all_agree}}.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        out << csv_header() << '\n';
        for (const auto& r : reports) out << to_csv_row(r) << '\n';
        break;
    case Format::Plain:
        if (!as_table) {
            out << to_plain(reports.front());
            break;
        }
        out << "n";
        for (const auto& r : reports) out << '\t' << r.order;
        out << "\n|AMS_n|";
        for (const auto& r : reports) {
            const auto v = r.value();
            out << '\t' << (v ? v->str() : std::string("?"));
        }
        out << '\n';
        if (!all_agree) {
            out << "disagreement at n =";
            for (const auto& r : reports)
                if (!r.agree) out << ' ' << r.order;
            out << '\n';
        }
        break;
    }
    return all_agree ? kExitOk : kExitDisagree;
}

inline int cmd_count(const CliConfig& cfg, int n, std::ostream& out, std::ostream& err) {
    const CountReport r = full_report(n, report_options(cfg, true));
    const int code = emit_reports(cfg, {r}, false, out);
    if (code == kExitDisagree) err << "error: counting engines disagree for n = " << n << '\n';
    return code;
}

inline int cmd_table(const CliConfig& cfg, int n_max, std::ostream& out, std::ostream& err) {
    if (n_max < 1) throw Error("table size must be positive");
    auto opts = report_options(cfg, false);
    opts.maximal = false;
    std::vector<CountReport> reports;
    for (int n = 1; n <= n_max; ++n) reports.push_back(full_report(n, opts));
    const int code = emit_reports(cfg, reports, true, out);
    if (code == kExitDisagree) err << "error: counting engines disagree\n";
    return code;
}

inline int cmd_list(const CliConfig& cfg, int n, std::ostream& out) {
    const auto sets = enumerate_ams(n);
    switch (cfg.format) {
    case Format::Json: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& m : sets) arr.push_back(m.elements());
        out << nlohmann::json{{"order", n}, {"count", sets.size()}, {"sets", arr}}.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        out << "size,set\n";
        for (const auto& m : sets) out << m.size() << ",\"" << join(m.elements(), ",") << "\"\n";
        break;
    case Format::Plain:
        out << "AMS_" << n << " (" << sets.size() << " sets)\n";
        for (const auto& m : sets) out << m.to_string() << '\n';
        break;
    }
    return kExitOk;
}

inline int cmd_maximal(const CliConfig& cfg, int k, std::ostream& out) {
    if (k < 1) throw Error("k must be positive");
    const auto sets = enumerate_maximal(k);
    const Count catalan =
        rational_catalan(2 * static_cast<std::uint64_t>(k) - 1, static_cast<std::uint64_t>(k));
    switch (cfg.format) {
    case Format::Json: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& m : sets) {
            const auto p = delta(m);
            arr.push_back({{"set", m.elements()},
                           {"path", p.to_string()},
                           {"area", area(p)},
                           {"inversions", inversions(m)}});
        }
        out << nlohmann::json{{"k", k},
                              {"order", 3 * k - 1},
                              {"count", sets.size()},
                              {"rational_catalan", count_to_json(catalan)},
                              {"sets", arr}}
                   .dump(2)
            << '\n';
        break;
    }
    case Format::Csv:
        out << "set,path,area,inversions\n";
        for (const auto& m : sets) {
            const auto p = delta(m);
            out << '"' << join(m.elements(), ",") << "\"," << p.to_string() << ',' << area(p)
                << ',' << inversions(m) << '\n';
        }
        break;
    case Format::Plain:
        out << "maximal sets in AMS_" << 3 * k - 1 << ": " << sets.size() << " (C_{" << 2 * k - 1
            << ',' << k << "} = " << catalan.str() << ")\n";
        for (const auto& m : sets) out << m.to_string() << "\t" << delta(m).to_string() << '\n';
        break;
    }
    return kExitOk;
}

inline int cmd_dyck(const CliConfig& cfg, const std::string& path_text, std::ostream& out) {
    const LatticePath p = LatticePath::parse(path_text);
    const bool valid = is_rational_dyck(p);
    const long long k = p.width();
    std::optional<MesaSet> mesas;
    if (valid && p.height() == 2 * k - 1) mesas = delta_inverse(p);

    switch (cfg.format) {
    case Format::Json: {
        nlohmann::json j{{"path", p.to_string()},
                         {"width", p.width()},
                         {"height", p.height()},
                         {"rational_dyck", valid}};
        j["area"] = valid ? nlohmann::json(area(p)) : nlohmann::json(nullptr);
        j["mesa_set"] = mesas ? to_json(*mesas) : nlohmann::json(nullptr);
        out << j.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        out << "path,width,height,rational_dyck,area,mesa_set\n"
            << p.to_string() << ',' << p.width() << ',' << p.height() << ','
            << (valid ? "true" : "false") << ',' << (valid ? std::to_string(area(p)) : "")
            << ",\"" << (mesas ? join(mesas->elements(), ",") : "") << "\"\n";
        break;
    case Format::Plain:
        out << p.to_string() << " to (" << p.width() << ',' << p.height() << "): "
            << (valid ? "rational Dyck path" : "not a rational Dyck path") << '\n';
        if (valid) out << "area: " << area(p) << '\n';
        if (mesas) out << "mesa set: " << mesas->to_string() << " in order " << mesas->order() << '\n';
        break;
    }
    return kExitOk;
}

inline void write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open '" + path + "' for writing");
    f << body;
    if (!f) throw Error("failed writing '" + path + "'");
}

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mesa sets of Stirling permutations", "mesa"};
    app.require_subcommand(1);

    CliConfig cfg;
    cfg.ceiling = default_ceiling();
    const std::map<std::string, Format> formats{
        {"json", Format::Json}, {"csv", Format::Csv}, {"plain", Format::Plain}};

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format,-f", cfg.format, "Output format: json (default), csv, plain")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };
    auto brute_flags = [&](CLI::App* sub) {
        sub->add_option("--ceiling", cfg.ceiling,
                        "Largest order brute force may exhaust (env MESA_BRUTE_FORCE_CEILING)");
        sub->add_flag("--allow-large", cfg.allow_large,
                      "Permit brute force above the ceiling");
        sub->add_option("--workers,-j", cfg.workers, "Worker threads for brute force")
            ->check(CLI::Range(1u, 1024u));
        sub->add_option("--engines", cfg.engines,
                        "Comma-separated engines: brute,subset,recurrence,closed")
            ->delimiter(',');
        // Test hook for disagreement handling.
        sub->add_option("--inject-fault", cfg.inject_fault)->group("");
    };

    std::string set_text, word_text, path_text, out_path;
    int order = 0, n = 0, k = 0;

    auto* check = app.add_subcommand("check", "Decide admissibility of a set, with its canonical witness");
    check->add_option("set", set_text, "Comma-separated elements, e.g. 3,4,5")->required();
    check->add_option("--order", order, "Order n of the witness (default: max element)");
    common(check);

    auto* mesa_cmd = app.add_subcommand("mesa", "Mesa set and local minima of a Stirling permutation");
    mesa_cmd->add_option("word", word_text, "Digit string, or comma-separated values")->required();
    common(mesa_cmd);

    auto* count = app.add_subcommand("count", "Count admissible mesa sets with every engine");
    count->add_option("n", n, "Order")->required()->check(CLI::PositiveNumber);
    common(count);
    brute_flags(count);

    auto* list = app.add_subcommand("list", "List the admissible mesa sets of order n");
    list->add_option("n", n, "Order")->required()->check(CLI::Range(1, 40));
    common(list);

    auto* maximal = app.add_subcommand("maximal", "Maximal mesa sets of order 3k-1 and their Dyck paths");
    maximal->add_option("k", k, "k")->required()->check(CLI::Range(1, 12));
    common(maximal);

    auto* dyck = app.add_subcommand("dyck", "Check a lattice path, its area and its mesa set");
    dyck->add_option("path", path_text, "String over N/E")->required();
    common(dyck);

    auto* table = app.add_subcommand("table", "|AMS_n| for n = 1..n_max");
    table->add_option("n_max", n, "Largest order")->required()->check(CLI::Range(1, 200));
    common(table);
    brute_flags(table);

    Styling style;
    auto* render_cmd = app.add_subcommand("render", "Write an SVG figure");
    render_cmd->require_subcommand(1);
    auto* render_perm = render_cmd->add_subcommand("perm", "Graph of a Stirling permutation");
    render_perm->add_option("word", word_text)->required();
    auto* render_dyck_cmd = render_cmd->add_subcommand("dyck", "Rational Dyck path on its grid");
    render_dyck_cmd->add_option("path", path_text)->required();
    bool no_slope = false;
    for (auto* sub : {render_perm, render_dyck_cmd}) {
        sub->add_option("-o,--output", out_path, "Output SVG file")->required();
        sub->add_option("--cell", style.cell, "Cell size in px")->check(CLI::Range(2, 512));
    }
    render_dyck_cmd->add_flag("--no-slope", no_slope, "Omit the dashed slope line");

    std::vector<const char*> argv{"mesa"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitInvalid;
    }

    try {
        if (*check) return cmd_check(cfg, set_text, order, out);
        if (*mesa_cmd) return cmd_mesa(cfg, word_text, out);
        if (*count) return cmd_count(cfg, n, out, err);
        if (*list) return cmd_list(cfg, n, out);
        if (*maximal) return cmd_maximal(cfg, k, out);
        if (*dyck) return cmd_dyck(cfg, path_text, out);
        if (*table) return cmd_table(cfg, n, out, err);
        if (*render_perm) {
            const auto w = validate_stirling(parse_word(word_text));
            write_file(out_path, render_permutation(w, style));
            return kExitOk;
        }
        if (*render_dyck_cmd) {
            style.slope_line = !no_slope;
            const RationalDyckPath p(LatticePath::parse(path_text));
            write_file(out_path, render_dyck(p, style));
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}

} // namespace mesa::cli
