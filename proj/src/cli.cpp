#include "pedestal/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "pedestal/error.hpp"
#include "pedestal/identities.hpp"
#include "pedestal/json_io.hpp"
#include "pedestal/pedestal.hpp"

namespace ped::cli {

int thread_budget() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0)
        n = 1;
    if (const char* cap = std::getenv("PEDESTAL_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(cap, &end, 10);
        if (end != cap && *end == '\0' && v >= 1)
            n = std::min<long>(n, v);
    }
    return n;
}

namespace {

enum class Format { Json, Text };

struct RunConfig {
    std::string shape;
    std::string poset_path;
    std::int64_t max_volume = -1; // -1: default 2n
    int max_entry = -1;           // -1: default n
    std::string format = "json";
    std::string p_choice = "canonical";
    std::string q_choice;
    std::string input;
    bool count = false;
    bool all_p = false;
};

struct Target {
    Poset poset;
    std::optional<Partition> shape;
};

std::string slurp(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// Literal JSON, "@path" for a file, or "-" for stdin.
Json load_json_arg(const std::string& arg, std::istream& in) {
    if (arg == "-")
        return parse_json(slurp(in));
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream f(arg.substr(1));
        if (!f)
            throw Error(ErrorKind::Parse, "cannot open '" + arg.substr(1) + "'");
        return parse_json(slurp(f));
    }
    return parse_json(arg);
}

Target load_target(const RunConfig& cfg) {
    if (cfg.shape.empty() == cfg.poset_path.empty())
        throw Error(ErrorKind::Parse, "give exactly one of --shape or --poset");
    if (!cfg.shape.empty()) {
        Partition shape = parse_shape(cfg.shape);
        return Target{young_poset(shape), shape};
    }
    std::ifstream f(cfg.poset_path);
    if (!f)
        throw Error(ErrorKind::Parse, "cannot open '" + cfg.poset_path + "'");
    return Target{poset_from_json(parse_json(slurp(f))), std::nullopt};
}

const Partition& require_shape(const Target& t, const char* command) {
    if (!t.shape)
        throw Error(ErrorKind::Parse, std::string(command) + " needs --shape");
    return *t.shape;
}

LinearExtension choose_extension(const Target& t, const std::string& choice, std::istream& in) {
    if (choice.empty() || choice == "canonical")
        return canonical_extension(t.poset);
    return extension_from_json(t.poset, load_json_arg(choice, in));
}

std::int64_t volume_bound(const RunConfig& cfg, const Target& t) {
    if (cfg.max_volume >= 0)
        return cfg.max_volume;
    return 2 * static_cast<std::int64_t>(t.poset.size());
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

std::string tableau_text(const Json& rows_or_labels) {
    // Row arrays print one row per line; label lists on one line.
    std::string s;
    if (rows_or_labels.is_array() && !rows_or_labels.empty() && rows_or_labels.front().is_array()) {
        for (const auto& r : rows_or_labels) {
            for (std::size_t k = 0; k < r.size(); ++k)
                s += (k ? " " : "") + r[k].dump();
            s += '\n';
        }
    } else {
        s = rows_or_labels.dump() + '\n';
    }
    return s;
}

int cmd_syt(const RunConfig& cfg, Format fmt, std::ostream& out) {
    const Target t = load_target(cfg);
    if (cfg.count) {
        std::int64_t n = 0;
        if (t.shape)
            n = syt_count(*t.shape);
        else
            for_each_linear_extension(t.poset, [&](std::span<const int>) { ++n; });
        out << n << '\n';
        return Ok;
    }
    Json all = Json::array();
    if (t.shape)
        for_each_syt(*t.shape, [&](const StandardTableau& q) { all.push_back(to_json(q)); });
    else
        for (const auto& e : linear_extensions(t.poset))
            all.push_back(to_json(e));
    if (fmt == Format::Json) {
        emit(out, all);
    } else {
        for (std::size_t k = 0; k < all.size(); ++k)
            out << (k ? "\n" : "") << tableau_text(all[k]);
    }
    return Ok;
}

int cmd_pedestal(const RunConfig& cfg, Format fmt, std::istream& in, std::ostream& out) {
    const Target t = load_target(cfg);
    const LinearExtension p = choose_extension(t, cfg.p_choice, in);
    std::vector<LinearExtension> qs;
    if (cfg.q_choice.empty())
        qs = linear_extensions(t.poset);
    else
        qs.push_back(extension_from_json(t.poset, load_json_arg(cfg.q_choice, in)));

    Json all = Json::array();
    for (const auto& q : qs)
        all.push_back(to_json(pedestal(p, q)));
    const Json result = cfg.q_choice.empty() ? all : all.front();
    if (fmt == Format::Json) {
        emit(out, result);
        return Ok;
    }
    for (std::size_t k = 0; k < all.size(); ++k) {
        out << (k ? "\n" : "") << "Q:\n" << tableau_text(all[k]["Q"]);
        out << "pedestal:\n" << tableau_text(all[k]["values"]);
    }
    return Ok;
}

int cmd_poly(const RunConfig& cfg, Format fmt, std::istream& in, std::ostream& out) {
    const Target t = load_target(cfg);
    const Series h = pedestal_polynomial(choose_extension(t, cfg.p_choice, in), thread_budget());
    if (fmt == Format::Json)
        emit(out, to_json(h));
    else
        out << to_text(h) << '\n';
    return Ok;
}

int cmd_pi(const RunConfig& cfg, Format fmt, std::ostream& out) {
    const Target t = load_target(cfg);
    const UniPoly pi = pi_poly(t.poset);
    if (fmt == Format::Json)
        emit(out, to_json(pi));
    else
        out << to_text(pi) << '\n';
    return Ok;
}

int cmd_series(const std::string& kind, const RunConfig& cfg, Format fmt, std::ostream& out) {
    const Target t = load_target(cfg);
    Series s(0);
    if (kind == "bar") {
        s = bar_schur(t.poset, volume_bound(cfg, t));
    } else if (kind == "row") {
        s = bar_s_row(t.poset.size(), volume_bound(cfg, t));
    } else {
        const Partition& shape = require_shape(t, "series schur");
        s = schur(shape, cfg.max_entry >= 0 ? cfg.max_entry : shape.size());
    }
    if (fmt == Format::Json)
        emit(out, to_json(s));
    else
        out << to_text(s) << '\n';
    return Ok;
}

int verdict(bool holds, const Json& report, Format fmt, std::ostream& out) {
    if (fmt == Format::Json)
        emit(out, report);
    else
        out << (holds ? "PASS" : "FAIL") << ' ' << report.dump() << '\n';
    return holds ? Ok : Falsified;
}

int cmd_verify(const std::string& what, const RunConfig& cfg, Format fmt, std::istream& in, std::ostream& out) {
    const Target t = load_target(cfg);
    if (what == "theorem") {
        const auto r = verify_independence(t.poset, thread_budget());
        return verdict(r.independent, to_json(r), fmt, out);
    }
    if (what == "id01") {
        const std::int64_t v = volume_bound(cfg, t);
        const auto r = cfg.all_p ? verify_identity_01_all(t.poset, v, thread_budget())
                                 : verify_identity_01(t.poset, choose_extension(t, cfg.p_choice, in), v);
        return verdict(r.holds, to_json(r), fmt, out);
    }
    if (what == "id04") {
        const auto r = verify_identity_04(require_shape(t, "verify id04"));
        return verdict(r.holds, to_json(r), fmt, out);
    }
    if (what == "majcomaj") {
        const auto r = verify_maj_comaj(require_shape(t, "verify majcomaj"));
        return verdict(r.holds, to_json(r), fmt, out);
    }
    // family: passes when no candidate lies in the family.
    const auto r = family_membership_check(require_shape(t, "verify family"));
    bool none_member = true;
    for (const auto& c : r.candidates)
        none_member = none_member && !c.member();
    return verdict(none_member, to_json(r), fmt, out);
}

int cmd_bijection(const std::string& dir, const RunConfig& cfg, Format fmt, std::istream& in, std::ostream& out) {
    const Target t = load_target(cfg);
    const LinearExtension p = choose_extension(t, cfg.p_choice, in);
    if (cfg.input.empty())
        throw Error(ErrorKind::Parse, "bijection needs --input");
    const Json input = load_json_arg(cfg.input, in);
    if (dir == "fwd") {
        const auto image = b_st(p, rpp_from_json(t.poset, input));
        const Json j{{"pedestal", to_json(image.pedestal)}, {"partition", to_json(image.partition)}};
        if (fmt == Format::Json)
            emit(out, j);
        else
            out << "pedestal:\n" << tableau_text(j["pedestal"]["values"]) << "partition: " << j["partition"].dump() << '\n';
        return Ok;
    }
    if (!input.is_object() || !input.contains("Q") || !input.contains("partition"))
        throw Error(ErrorKind::Parse, "inverse bijection input must be {\"Q\":...,\"partition\":[...]}");
    const LinearExtension q = extension_from_json(t.poset, input.at("Q"));
    const auto rpp = b_st_inverse(p, q, partition_from_json(input.at("partition")));
    if (fmt == Format::Json)
        emit(out, to_json(rpp));
    else
        out << tableau_text(to_json(rpp));
    return Ok;
}

void add_target_options(CLI::App* sub, RunConfig& cfg) {
    auto* shape = sub->add_option("--shape", cfg.shape, "Partition as comma-separated parts, e.g. 3,2");
    auto* poset = sub->add_option("--poset", cfg.poset_path, "Poset JSON file");
    shape->excludes(poset);
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
}

void add_p_option(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--P", cfg.p_choice,
                    "Reference extension: 'canonical', a tableau/label-list JSON literal, @file or -");
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pedestal polynomials of Young diagrams and finite posets"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* syt = app.add_subcommand("syt", "List standard tableaux / linear extensions");
    add_target_options(syt, cfg);
    syt->add_flag("--count", cfg.count, "Print only the count");

    auto* ped_cmd = app.add_subcommand("pedestal", "P-pedestal of Q (all Q when --Q is omitted)");
    add_target_options(ped_cmd, cfg);
    add_p_option(ped_cmd, cfg);
    ped_cmd->add_option("--Q", cfg.q_choice, "Tableau/label-list JSON literal, @file or -");

    auto* poly = app.add_subcommand("poly", "Pedestal polynomial");
    add_target_options(poly, cfg);
    add_p_option(poly, cfg);

    auto* pi = app.add_subcommand("pi", "Generating polynomial of pedestal volumes");
    add_target_options(pi, cfg);

    std::string series_kind;
    auto* series = app.add_subcommand("series", "Truncated series: bar (RPPs), row (one-row), schur");
    series->add_option("kind", series_kind)->required()->check(CLI::IsMember({"bar", "row", "schur"}));
    add_target_options(series, cfg);
    series->add_option("-V,--max-volume", cfg.max_volume, "Volume bound (default 2n)")->check(CLI::NonNegativeNumber);
    series->add_option("-m,--max-entry", cfg.max_entry, "Largest entry for schur (default n)")->check(CLI::NonNegativeNumber);

    std::string verify_what;
    auto* verify = app.add_subcommand("verify", "Run a verifier; exit 1 when it is falsified");
    verify->add_option("check", verify_what)
        ->required()
        ->check(CLI::IsMember({"theorem", "id01", "id04", "majcomaj", "family"}));
    add_target_options(verify, cfg);
    add_p_option(verify, cfg);
    verify->add_option("-V,--max-volume", cfg.max_volume, "Volume bound for id01 (default 2n)")->check(CLI::NonNegativeNumber);
    verify->add_flag("--all-P", cfg.all_p, "id01: check every reference extension");

    std::string bij_dir;
    auto* bij = app.add_subcommand("bijection", "Apply the RPP <-> (pedestal, partition) bijection");
    bij->add_option("direction", bij_dir)->required()->check(CLI::IsMember({"fwd", "inv"}));
    add_target_options(bij, cfg);
    add_p_option(bij, cfg);
    bij->add_option("--input", cfg.input, "JSON literal, @file or -")->required();

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? Ok : BadInput;
    }

    const Format fmt = cfg.format == "text" ? Format::Text : Format::Json;
    try {
        if (*syt)
            return cmd_syt(cfg, fmt, out);
        if (*ped_cmd)
            return cmd_pedestal(cfg, fmt, in, out);
        if (*poly)
            return cmd_poly(cfg, fmt, in, out);
        if (*pi)
            return cmd_pi(cfg, fmt, out);
        if (*series)
            return cmd_series(series_kind, cfg, fmt, out);
        if (*verify)
            return cmd_verify(verify_what, cfg, fmt, in, out);
        return cmd_bijection(bij_dir, cfg, fmt, in, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return BadInput;
    }
}

} // namespace ped::cli
