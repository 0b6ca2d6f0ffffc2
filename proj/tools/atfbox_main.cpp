#include <fstream>
#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "atfbox/boxrep.hpp"
#include "atfbox/cubebound.hpp"
#include "atfbox/errors.hpp"
#include "atfbox/graph.hpp"
#include "atfbox/invariants.hpp"
#include "atfbox/model.hpp"
#include "atfbox/triangulate.hpp"

using nlohmann::json;

namespace {

// exit codes: 0 ok, 1 verification failure, 2 input error, 3 precondition
// (e.g. not AT-free), 4 internal verify failure, 5 cap refusal
constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kInputError = 2;
constexpr int kPrecondition = 3;
constexpr int kInternal = 4;
constexpr int kCapRefusal = 5;

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw atfbox::parse_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_all(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw atfbox::parse_error("cannot open output file: " + path);
    out << text;
}

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

atfbox::Graph load_graph(const std::string& path, const std::string& format) {
    std::string fmt = format;
    if (fmt.empty())
        fmt = (path.size() > 3 && path.substr(path.size() - 3) == ".g6") ? "graph6" : "edgelist";
    std::string text = read_all(path);
    if (fmt == "graph6") return atfbox::graph6_decode(strip(text));
    if (fmt == "edgelist") return atfbox::parse_edge_list(text);
    throw atfbox::parse_error("unknown input format: " + fmt);
}

std::string family_params_help() {
    return "cycle N | path N | complete_multipartite N1 N2 ... | matching_complement N | "
           "star K | permutation N | random_interval N | girth5_atfree N";
}

json triple_json(const std::optional<std::array<int, 3>>& at) {
    if (!at) return nullptr;
    return json::array({(*at)[0], (*at)[1], (*at)[2]});
}

int run_analyze(const atfbox::Graph& g, bool as_json) {
    json out;
    out["n"] = g.n();
    out["m"] = g.m();
    auto gi = atfbox::girth(g);
    out["girth"] = gi ? json(*gi) : json("acyclic");
    out["components"] = atfbox::connected_components(g).size();
    auto at = atfbox::find_asteroidal_triple(g);
    out["at_free"] = !at.has_value();
    out["asteroidal_triple"] = triple_json(at);
    if (!at && atfbox::is_connected(g) && g.n() >= 2) {
        auto dp = atfbox::diametral_dominating_pair(g);
        out["dominating_pair"] = {dp.x, dp.y};
        out["dominating_path"] = dp.path;
    } else {
        out["dominating_pair"] = nullptr;
    }
    auto claw = atfbox::claw_number(g);
    out["psi"] = claw.psi;
    if (claw.witness) {
        out["claw_witness"] = {{"center", claw.witness->center}, {"leaves", claw.witness->leaves}};
    }
    auto col = atfbox::color(g, atfbox::ColorMode::heuristic);
    out["coloring_k"] = col.k;
    auto ch = atfbox::is_chordal(g);
    out["chordal"] = ch.chordal;
    if (!ch.chordal) out["chordless_cycle"] = ch.hole;
    out["interval"] = ch.chordal && !at.has_value();
    out["unit_interval"] = ch.chordal && !at.has_value() && claw.psi <= 2;
    out["graph6"] = atfbox::graph6_encode(g);

    if (as_json) {
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    std::cout << "n: " << g.n() << "\nm: " << g.m() << "\n";
    std::cout << "girth: " << (gi ? std::to_string(*gi) : std::string("acyclic")) << "\n";
    std::cout << "components: " << out["components"].get<std::size_t>() << "\n";
    std::cout << "at_free: " << (at ? "false" : "true") << "\n";
    if (at)
        std::cout << "asteroidal_triple: {" << (*at)[0] << "," << (*at)[1] << "," << (*at)[2]
                  << "}\n";
    if (out.contains("dominating_path")) {
        std::cout << "dominating_pair: (" << out["dominating_pair"][0].get<int>() << ","
                  << out["dominating_pair"][1].get<int>() << ")\n";
    }
    std::cout << "psi: " << claw.psi;
    if (claw.witness) {
        std::cout << "  (center " << claw.witness->center << ", leaves";
        for (int l : claw.witness->leaves) std::cout << " " << l;
        std::cout << ")";
    }
    std::cout << "\ncoloring_k: " << col.k << " (heuristic)\n";
    std::cout << "chordal: " << (ch.chordal ? "true" : "false") << "\n";
    std::cout << "interval: " << (out["interval"].get<bool>() ? "true" : "false") << "\n";
    std::cout << "unit_interval: " << (out["unit_interval"].get<bool>() ? "true" : "false") << "\n";
    return kOk;
}

int run_boxrep(const atfbox::Graph& g, const std::string& method, const std::string& out_path,
               bool as_json) {
    std::optional<atfbox::BoxMethod> force;
    if (method == "girth5")
        force = atfbox::BoxMethod::girth5;
    else if (method == "coloring")
        force = atfbox::BoxMethod::coloring;
    else if (method != "auto")
        throw atfbox::parse_error("unknown method: " + method);

    auto res = atfbox::box_upper(g, force);
    json rep = atfbox::representation_to_json(g, res.rep);
    if (!out_path.empty()) {
        write_all(out_path, rep.dump(2) + "\n");
        if (as_json) {
            std::cout << json{{"dimensions", res.k},
                              {"method", atfbox::box_method_name(res.method)},
                              {"verified", true},
                              {"file", out_path}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "dimensions: " << res.k << " (" << atfbox::box_method_name(res.method)
                      << ")\nverified\n";
        }
    } else {
        std::cout << rep.dump(2) << "\n";
        std::cerr << "dimensions: " << res.k << " (" << atfbox::box_method_name(res.method)
                  << "), verified\n";
    }
    return kOk;
}

int run_verify(const atfbox::Graph& g, const std::string& rep_path) {
    json j;
    try {
        j = json::parse(read_all(rep_path));
    } catch (const json::exception& e) {
        throw atfbox::parse_error(std::string("representation: ") + e.what());
    }
    auto loaded = atfbox::representation_from_json(j);
    if (loaded.rep.n != g.n())
        throw atfbox::parse_error("representation n=" + std::to_string(loaded.rep.n) +
                                  " does not match graph n=" + std::to_string(g.n()));
    auto res = atfbox::verify(g, loaded.rep);
    if (res.ok()) {
        std::cout << "Ok\n";
        return kOk;
    }
    for (const auto& v : res.violations) std::cout << v.str() << "\n";
    std::cout << res.violations.size() << " violation(s)\n";
    return kVerifyFail;
}

int run_exact(const atfbox::Graph& g, const std::string& param, int kmax,
              const std::string& out_path, bool as_json) {
    atfbox::ExactResult res;
    if (param == "box")
        res = atfbox::exact_boxicity(g, kmax);
    else if (param == "cub")
        res = atfbox::exact_cubicity(g, kmax);
    else if (param == "chord")
        res = atfbox::exact_chordality(g, kmax);
    else
        throw atfbox::parse_error("unknown param: " + param + " (expected box|cub|chord)");

    json out;
    out["param"] = param;
    out["value"] = res.value ? json(*res.value) : json(nullptr);
    out["note"] = res.note;
    if (res.value && !res.factors.empty()) {
        if (param == "chord") {
            json factors = json::array();
            for (const auto& f : res.factors) factors.push_back(atfbox::graph6_encode(f));
            out["witness_factors_graph6"] = factors;
        } else {
            atfbox::BoxRepresentation rep;
            rep.n = g.n();
            rep.method = "exact:" + param;
            for (const auto& f : res.factors) rep.dims.push_back(atfbox::interval_model(f));
            auto check = atfbox::verify(g, rep);
            if (!check.ok())
                throw atfbox::internal_error("exact: witness models fail verification");
            out["witness"] = atfbox::representation_to_json(g, rep);
        }
    }
    if (!out_path.empty()) write_all(out_path, out.dump(2) + "\n");
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else if (res.value) {
        std::cout << param << " = " << *res.value << "\n";
    } else {
        std::cout << param << " exceeds kmax = " << kmax << "\n";
    }
    return kOk;
}

int run_bounds(const atfbox::Graph& g, bool with_exact) {
    auto rep = atfbox::cub_upper(g, with_exact);
    json out;
    out["graph6"] = rep.graph6;
    out["psi"] = rep.psi;
    out["box_upper"] = {{"k", rep.box_upper_k}, {"method", atfbox::box_method_name(rep.box_method)}};
    json formulas = json::array();
    for (const auto& f : rep.applicable) formulas.push_back({{"tag", f.tag}, {"value", f.value}});
    out["applicable"] = formulas;
    out["cub_upper"] = {{"value", rep.cub_upper}, {"tag", rep.cub_tag}};
    if (with_exact) {
        out["budget_note"] = rep.budget_note;
        auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
        out["exact"] = {{"box", opt(rep.exact_box)},
                        {"cub", opt(rep.exact_cub)},
                        {"chord", opt(rep.exact_chord)}};
    }
    std::cout << out.dump(2) << "\n";
    return kOk;
}

int run_triangulate(const atfbox::Graph& g, const std::string& out_path, bool as_json) {
    auto col = atfbox::color(g, atfbox::ColorMode::heuristic);
    auto h0 = atfbox::split_supergraph(g, col, 0);
    auto fs = atfbox::minimize_triangulation(g, h0);
    bool minimal = atfbox::is_minimal_triangulation(g, fs.result);
    bool interval = atfbox::is_interval(fs.result);
    bool unit = interval && atfbox::claw_number(fs.result).psi <= 2;
    if (!out_path.empty()) write_all(out_path, atfbox::write_edge_list(fs.result));
    if (as_json) {
        json fill = json::array();
        for (auto [u, v] : fs.fill) fill.push_back({u, v});
        std::cout << json{{"fill", fill},
                          {"fill_size", fs.fill.size()},
                          {"minimal", minimal},
                          {"interval", interval},
                          {"unit_interval", unit},
                          {"graph6_h", atfbox::graph6_encode(fs.result)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "fill_size: " << fs.fill.size() << "\nfill:";
        for (auto [u, v] : fs.fill) std::cout << " (" << u << "," << v << ")";
        std::cout << "\nminimal: " << (minimal ? "true" : "false")
                  << "\ninterval: " << (interval ? "true" : "false")
                  << "\nunit_interval: " << (unit ? "true" : "false") << "\n";
    }
    if (!minimal) return kInternal;
    return kOk;
}

int run_gen(const std::string& family, const std::vector<int>& params, std::uint64_t seed,
            const std::string& format, const std::string& out_path) {
    auto fam = atfbox::family_from_name(family);
    if (!fam)
        throw atfbox::parse_error("unknown family: " + family + "\nexpected: " +
                                  family_params_help());
    atfbox::GraphFamilySpec spec{*fam, params, seed};
    atfbox::Graph g = atfbox::generate(spec);
    std::string text = format == "graph6" ? atfbox::graph6_encode(g) + "\n" : atfbox::write_edge_list(g);
    write_all(out_path, text);
    std::cerr << "generated " << family;
    for (int p : params) std::cerr << " " << p;
    std::cerr << " seed=" << seed << " (n=" << g.n() << ", m=" << g.m() << ")\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"box representations and cubicity bounds for AT-free graphs"};
    app.require_subcommand(1);

    std::string input = "-", format, out_path, method = "auto", param, family;
    std::vector<int> params;
    std::uint64_t seed = 0;
    int kmax = 3;
    bool as_json = false, with_exact = false, verbose = false;
    app.add_flag("-v,--verbose", verbose, "timing notes on stderr");

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "input graph file, or - for stdin")->capture_default_str();
        cmd->add_option("--format", format, "edgelist|graph6 (default: by extension)");
    };

    auto* analyze = app.add_subcommand("analyze", "structural report for a graph");
    add_input(analyze);
    analyze->add_flag("--json", as_json, "machine readable output");

    auto* boxrep = app.add_subcommand("boxrep", "construct a certified box representation");
    add_input(boxrep);
    boxrep->add_option("--method", method, "auto|girth5|coloring")->capture_default_str();
    boxrep->add_option("-o,--out", out_path, "write representation JSON here");
    boxrep->add_flag("--json", as_json, "machine readable summary");

    auto* verify = app.add_subcommand("verify", "check a representation file against a graph");
    add_input(verify);
    std::string rep_path;
    verify->add_option("representation", rep_path, "representation JSON file")->required();

    auto* exact = app.add_subcommand("exact", "exact parameter by brute-force oracle");
    add_input(exact);
    exact->add_option("--param", param, "box|cub|chord")->required();
    exact->add_option("--kmax", kmax, "search cap (<= 3)")->capture_default_str();
    exact->add_option("-o,--out", out_path, "write witness JSON here");
    exact->add_flag("--json", as_json, "machine readable output");

    auto* bounds = app.add_subcommand("bounds", "cubicity bound report (JSON)");
    add_input(bounds);
    bounds->add_flag("--exact", with_exact, "also run exact oracles when caps allow");

    auto* triangulate = app.add_subcommand("triangulate", "minimal triangulation with certificate");
    add_input(triangulate);
    triangulate->add_option("-o,--out", out_path, "write H' as edge list");
    triangulate->add_flag("--json", as_json, "machine readable output");

    auto* gen = app.add_subcommand("gen", "generate a corpus graph");
    gen->add_option("family", family, family_params_help())->required();
    gen->add_option("params", params, "family parameters");
    gen->add_option("--seed", seed, "rng seed")->capture_default_str();
    gen->add_option("--format", format, "edgelist|graph6")->capture_default_str();
    gen->add_option("-o,--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    auto started = std::chrono::steady_clock::now();
    auto note_elapsed = [&] {
        if (!verbose) return;
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
        std::cerr << "elapsed: " << ms << " ms\n";
    };
    try {
        int rc;
        if (gen->parsed()) {
            if (format.empty()) format = "edgelist";
            rc = run_gen(family, params, seed, format, out_path);
        } else {
            atfbox::Graph g = load_graph(input, format);
            if (analyze->parsed()) rc = run_analyze(g, as_json);
            else if (boxrep->parsed()) rc = run_boxrep(g, method, out_path, as_json);
            else if (verify->parsed()) rc = run_verify(g, rep_path);
            else if (exact->parsed()) rc = run_exact(g, param, kmax, out_path, as_json);
            else if (bounds->parsed()) rc = run_bounds(g, with_exact);
            else if (triangulate->parsed()) rc = run_triangulate(g, out_path, as_json);
            else rc = kInputError;
        }
        note_elapsed();
        return rc;
    } catch (const atfbox::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const atfbox::cap_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kCapRefusal;
    } catch (const atfbox::precondition_error& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kPrecondition;
    } catch (const atfbox::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
