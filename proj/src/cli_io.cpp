#include "crystaldeg/cli_io.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

namespace crystaldeg {

namespace {

using nlohmann::json;

const char* kind_name(GraphDocument::Kind k) {
    return k == GraphDocument::Kind::colored_digraph ? "colored_digraph"
                                                     : "signed_colored_graph";
}

void sort_edges(GraphDocument& doc) {
    for (auto& e : doc.edges)
        std::sort(e.colors.begin(), e.colors.end());
    std::sort(doc.edges.begin(), doc.edges.end());
}

}  // namespace

GraphDocument to_document(const ColoredDigraph& g) {
    GraphDocument doc;
    doc.kind = GraphDocument::Kind::colored_digraph;
    doc.degree = g.degree;
    doc.num_vertices = g.num_vertices;
    if (!g.tableaux.empty()) {
        doc.has_rows = true;
        for (const Tableau& t : g.tableaux)
            doc.rows.push_back(t.rows());
    }
    std::map<std::pair<int, int>, std::vector<int>> grouped;
    for (const ColoredEdge& e : g.edges)
        grouped[{e.source, e.target}].push_back(e.color);
    for (auto& [pair, colors] : grouped)
        doc.edges.push_back({pair.first, pair.second, colors});
    sort_edges(doc);
    return doc;
}

GraphDocument to_document(const CrystalGraph& g) {
    return to_document(crystal_to_digraph(g));
}

GraphDocument to_document(const SignedColoredGraph& g) {
    GraphDocument doc;
    doc.kind = GraphDocument::Kind::signed_colored_graph;
    doc.degree = g.degree;
    doc.num_vertices = g.num_vertices();
    doc.has_signatures = true;
    for (const Signature& s : g.signatures)
        doc.signatures.push_back(signature_to_string(s));
    if (!g.tableaux.empty()) {
        doc.has_rows = true;
        for (const Tableau& t : g.tableaux)
            doc.rows.push_back(t.rows());
    }
    for (const auto& [pair, colors] : g.edge_list())
        doc.edges.push_back({pair.first, pair.second, colors});
    sort_edges(doc);
    return doc;
}

std::string serialize(const GraphDocument& doc) {
    json j;
    j["kind"] = kind_name(doc.kind);
    j["degree"] = doc.degree;
    json vertices = json::array();
    for (int v = 0; v < doc.num_vertices; ++v) {
        json vertex;
        vertex["id"] = v;
        if (doc.has_rows)
            vertex["rows"] = doc.rows[v];
        if (doc.has_signatures)
            vertex["signature"] = doc.signatures[v];
        vertices.push_back(vertex);
    }
    j["vertices"] = vertices;
    json edges = json::array();
    for (const auto& e : doc.edges) {
        json edge;
        edge["colors"] = e.colors;
        if (doc.kind == GraphDocument::Kind::colored_digraph) {
            edge["source"] = e.a;
            edge["target"] = e.b;
        } else {
            edge["pair"] = std::vector<int>{e.a, e.b};
        }
        edges.push_back(edge);
    }
    j["edges"] = edges;
    return j.dump(2) + "\n";
}

namespace {

int require_int(const json& j, const std::string& pointer, long long lo, long long hi) {
    if (!j.is_number_integer())
        throw SchemaError(pointer, "expected an integer");
    const long long v = j.get<long long>();
    if (v < lo || v > hi)
        throw SchemaError(pointer, "value " + std::to_string(v) + " out of range [" +
                                       std::to_string(lo) + "," + std::to_string(hi) + "]");
    return static_cast<int>(v);
}

void reject_unknown_keys(const json& j, const std::string& pointer,
                         std::initializer_list<const char*> allowed) {
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const char* key : allowed)
            ok = ok || item.key() == key;
        if (!ok)
            throw SchemaError(pointer + "/" + item.key(), "unknown key");
    }
}

}  // namespace

GraphDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("/", std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw SchemaError("/", "expected an object");
    reject_unknown_keys(j, "", {"kind", "degree", "vertices", "edges"});

    GraphDocument doc;
    if (!j.contains("kind") || !j["kind"].is_string())
        throw SchemaError("/kind", "expected a string");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "colored_digraph")
        doc.kind = GraphDocument::Kind::colored_digraph;
    else if (kind == "signed_colored_graph")
        doc.kind = GraphDocument::Kind::signed_colored_graph;
    else
        throw SchemaError("/kind",
                          "expected \"colored_digraph\" or \"signed_colored_graph\"");
    const bool signed_kind = doc.kind == GraphDocument::Kind::signed_colored_graph;

    if (!j.contains("degree"))
        throw SchemaError("/degree", "missing");
    doc.degree = require_int(j["degree"], "/degree", 1, 1000000);

    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw SchemaError("/vertices", "expected an array");
    const json& vertices = j["vertices"];
    doc.num_vertices = static_cast<int>(vertices.size());
    for (int v = 0; v < doc.num_vertices; ++v) {
        const std::string vp = "/vertices/" + std::to_string(v);
        const json& vertex = vertices[v];
        if (!vertex.is_object())
            throw SchemaError(vp, "expected an object");
        reject_unknown_keys(vertex, vp, {"id", "rows", "signature"});
        if (!vertex.contains("id") || require_int(vertex["id"], vp + "/id", 0, doc.num_vertices) != v)
            throw SchemaError(vp + "/id", "ids must be dense and ascending from 0");
        const bool has_rows = vertex.contains("rows");
        if (v == 0)
            doc.has_rows = has_rows;
        else if (has_rows != doc.has_rows)
            throw SchemaError(vp + "/rows",
                              doc.has_rows ? "missing on this vertex" : "unexpected on this vertex");
        if (has_rows) {
            const json& rows = vertex["rows"];
            if (!rows.is_array())
                throw SchemaError(vp + "/rows", "expected an array of rows");
            std::vector<Row> parsed;
            for (size_t r = 0; r < rows.size(); ++r) {
                if (!rows[r].is_array())
                    throw SchemaError(vp + "/rows/" + std::to_string(r),
                                      "expected an array of entries");
                Row row;
                for (size_t c = 0; c < rows[r].size(); ++c)
                    row.push_back(require_int(rows[r][c],
                                              vp + "/rows/" + std::to_string(r) + "/" +
                                                  std::to_string(c),
                                              1, 1000000));
                parsed.push_back(std::move(row));
            }
            try {
                Tableau::from_rows(parsed);
            } catch (const Error& e) {
                throw SchemaError(vp + "/rows", e.what());
            }
            doc.rows.push_back(std::move(parsed));
        }
        const bool has_sig = vertex.contains("signature");
        if (signed_kind && !has_sig)
            throw SchemaError(vp + "/signature", "required for signed graphs");
        if (!signed_kind && has_sig)
            throw SchemaError(vp + "/signature", "not allowed for colored digraphs");
        if (has_sig) {
            if (!vertex["signature"].is_string())
                throw SchemaError(vp + "/signature", "expected a string over '+'/'-'");
            const std::string sig = vertex["signature"].get<std::string>();
            if (static_cast<int>(sig.size()) != doc.degree - 1)
                throw SchemaError(vp + "/signature",
                                  "length must equal degree-1 = " + std::to_string(doc.degree - 1));
            for (char c : sig)
                if (c != '+' && c != '-')
                    throw SchemaError(vp + "/signature", "characters must be '+' or '-'");
            doc.signatures.push_back(sig);
            doc.has_signatures = true;
        }
    }

    if (!j.contains("edges") || !j["edges"].is_array())
        throw SchemaError("/edges", "expected an array");
    const json& edges = j["edges"];
    const int color_lo = signed_kind ? 2 : 1;
    std::set<std::tuple<int, int, int>> seen;
    std::vector<std::vector<int>> pairing(
        signed_kind ? std::max(doc.degree - 1, 0) : 0,
        std::vector<int>(doc.num_vertices, -1));
    std::map<std::pair<int, int>, std::vector<int>> grouped;
    for (size_t e = 0; e < edges.size(); ++e) {
        const std::string ep = "/edges/" + std::to_string(e);
        const json& edge = edges[e];
        if (!edge.is_object())
            throw SchemaError(ep, "expected an object");
        int a, b;
        if (signed_kind) {
            reject_unknown_keys(edge, ep, {"pair", "colors"});
            if (!edge.contains("pair") || !edge["pair"].is_array() || edge["pair"].size() != 2)
                throw SchemaError(ep + "/pair", "expected a pair of vertex ids");
            a = require_int(edge["pair"][0], ep + "/pair/0", 0, doc.num_vertices - 1);
            b = require_int(edge["pair"][1], ep + "/pair/1", 0, doc.num_vertices - 1);
            if (a == b)
                throw SchemaError(ep + "/pair", "a vertex cannot pair with itself");
            if (a > b)
                std::swap(a, b);
        } else {
            reject_unknown_keys(edge, ep, {"source", "target", "colors"});
            if (!edge.contains("source"))
                throw SchemaError(ep + "/source", "missing");
            if (!edge.contains("target"))
                throw SchemaError(ep + "/target", "missing");
            a = require_int(edge["source"], ep + "/source", 0, doc.num_vertices - 1);
            b = require_int(edge["target"], ep + "/target", 0, doc.num_vertices - 1);
        }
        if (!edge.contains("colors") || !edge["colors"].is_array() || edge["colors"].empty())
            throw SchemaError(ep + "/colors", "expected a non-empty array of colors");
        for (size_t ci = 0; ci < edge["colors"].size(); ++ci) {
            const std::string cp = ep + "/colors/" + std::to_string(ci);
            const int color = require_int(edge["colors"][ci], cp, color_lo, doc.degree - 1);
            if (!seen.insert({a, b, color}).second)
                throw SchemaError(cp, "duplicate edge");
            if (signed_kind) {
                int& pa = pairing[color - 2][a];
                int& pb = pairing[color - 2][b];
                if ((pa != -1 && pa != b) || (pb != -1 && pb != a))
                    throw SchemaError(cp, "vertex already paired in this color");
                pa = b;
                pb = a;
            }
            grouped[{a, b}].push_back(color);
        }
    }
    for (auto& [pair, colors] : grouped)
        doc.edges.push_back({pair.first, pair.second, colors});
    sort_edges(doc);
    return doc;
}

ColoredDigraph to_digraph(const GraphDocument& doc) {
    if (doc.kind != GraphDocument::Kind::colored_digraph)
        throw UsageError("document is not a colored digraph");
    ColoredDigraph g;
    g.degree = doc.degree;
    g.num_vertices = doc.num_vertices;
    if (doc.has_rows)
        for (const auto& rows : doc.rows)
            g.tableaux.push_back(Tableau::from_rows(rows));
    for (const auto& e : doc.edges)
        for (int c : e.colors)
            g.edges.push_back({e.a, e.b, c});
    return g;
}

SignedColoredGraph to_signed(const GraphDocument& doc) {
    if (doc.kind != GraphDocument::Kind::signed_colored_graph)
        throw UsageError("document is not a signed colored graph");
    SignedColoredGraph g;
    g.degree = doc.degree;
    for (const std::string& s : doc.signatures)
        g.signatures.push_back(signature_from_string(s));
    if (doc.has_rows)
        for (const auto& rows : doc.rows)
            g.tableaux.push_back(Tableau::from_rows(rows));
    g.partner.assign(std::max(g.degree - 2, 0),
                     std::vector<int>(doc.num_vertices, -1));
    for (const auto& e : doc.edges)
        for (int c : e.colors)
            g.add_edge(e.a, e.b, c);
    return g;
}

namespace {

const char* edge_style(int color) {
    switch ((color - 1) % 3) {
        case 0: return "dashed";
        case 1: return "solid";
        default: return "bold";
    }
}

std::string dot_label(const GraphDocument& doc, int v) {
    if (doc.has_rows) {
        std::string label;
        const auto& rows = doc.rows[v];
        for (size_t r = rows.size(); r-- > 0;) {
            for (size_t c = 0; c < rows[r].size(); ++c) {
                if (c > 0)
                    label += ' ';
                label += std::to_string(rows[r][c]);
            }
            if (r > 0)
                label += "\\n";
        }
        if (rows.empty())
            label = "()";
        return label;
    }
    if (doc.has_signatures)
        return doc.signatures[v];
    return "v" + std::to_string(v);
}

}  // namespace

std::string export_dot(const GraphDocument& doc) {
    const bool directed = doc.kind == GraphDocument::Kind::colored_digraph;
    std::string out = directed ? "digraph G {\n" : "graph G {\n";
    out += "  node [shape=box];\n";
    for (int v = 0; v < doc.num_vertices; ++v)
        out += "  v" + std::to_string(v) + " [label=\"" + dot_label(doc, v) + "\"];\n";
    for (const auto& e : doc.edges)
        for (int c : e.colors)
            out += "  v" + std::to_string(e.a) + (directed ? " -> v" : " -- v") +
                   std::to_string(e.b) + " [label=\"" + std::to_string(c) +
                   "\", style=" + edge_style(c) + "];\n";
    out += "}\n";
    return out;
}

namespace {

bool all_passed(const std::vector<AxiomReport>& reports) {
    for (const AxiomReport& r : reports)
        if (!r.passed)
            return false;
    return true;
}

std::string sweep_row(int n, const Partition& lambda) {
    const CrystalGraph crystal = build_crystal(lambda, n);
    const bool regular_ok = all_passed(check_regular(crystal_to_digraph(crystal)));
    const SignedColoredGraph standard = build_deg(lambda);
    const bool deg_ok = all_passed(check_deg(standard));
    const SignedColoredGraph induced = build_g_of_x(crystal);
    const bool induced_ok = all_passed(check_deg(induced));
    const bool main_ok = induced.tableaux == standard.tableaux &&
                         induced.signatures == standard.signatures &&
                         induced.partner == standard.partner;
    auto verdict = [](bool ok) { return ok ? "pass" : "FAIL"; };
    std::ostringstream row;
    row << "n=" << n << " lambda=" << lambda.to_string() << " vertices="
        << crystal.num_vertices() << " syt=" << standard.num_vertices()
        << " regular=" << verdict(regular_ok) << " deg=" << verdict(deg_ok)
        << " induced=" << verdict(induced_ok) << " main=" << verdict(main_ok) << "\n";
    return row.str();
}

}  // namespace

SweepOutcome run_sweep(int max_n, int threads) {
    if (max_n < 1)
        throw UsageError("sweep bound must be positive");
    std::vector<std::pair<int, Partition>> jobs;
    for (int n = 1; n <= max_n; ++n)
        for (const Partition& lambda : partitions_of(n))
            jobs.emplace_back(n, lambda);
    std::vector<std::string> rows(jobs.size());
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
    if (workers == 1) {
        for (size_t k = 0; k < jobs.size(); ++k)
            rows[k] = sweep_row(jobs[k].first, jobs[k].second);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (size_t k = next++; k < jobs.size(); k = next++)
                    rows[k] = sweep_row(jobs[k].first, jobs[k].second);
            });
        for (std::thread& t : pool)
            t.join();
    }
    SweepOutcome outcome;
    int failures = 0;
    for (const std::string& row : rows) {
        outcome.table += row;
        if (row.find("FAIL") != std::string::npos)
            ++failures;
    }
    outcome.table += "sweep: " + std::to_string(jobs.size() - failures) + "/" +
                     std::to_string(jobs.size()) + " shapes passed\n";
    outcome.all_passed = failures == 0;
    return outcome;
}

namespace {

Partition parse_shape(const std::string& text) {
    if (text.empty())
        throw UsageError("shape must be a comma-separated list of parts");
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("shape parts must be positive integers");
        parts.push_back(std::stoi(item));
    }
    return Partition(parts);
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open output file: " + path);
    file << text;
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << file.rdbuf();
    return ss.str();
}

bool print_reports(const std::vector<AxiomReport>& reports,
                   const std::function<std::string(int)>& label, std::ostream& out) {
    bool all = true;
    for (const AxiomReport& r : reports) {
        out << r.axiom << ": " << (r.passed ? "pass" : "fail");
        if (!r.passed)
            out << " (" << r.witnesses.size() << " witnesses)";
        out << "\n";
        size_t shown = 0;
        for (const Witness& w : r.witnesses) {
            if (shown == 20) {
                out << "  ... " << r.witnesses.size() << " witnesses total\n";
                break;
            }
            out << "  vertex " << w.vertex << " " << label(w.vertex) << " i=" << w.i
                << " j=" << w.j << ": observed " << w.observed << ", required "
                << w.required << "\n";
            ++shown;
        }
        all = all && r.passed;
    }
    return all;
}

int resolve_threads(int flag_value) {
    if (flag_value > 0)
        return flag_value;
    if (const char* env = std::getenv("CRYSTAL_DEG_THREADS"))
        return std::max(1, std::atoi(env));
    return 1;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"type-A crystal graphs, dual equivalence graphs, and their axiom checkers"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string shape_text, mode_text = "standard";
    int threads = 0;

    CLI::App* cmd_crystal = app.add_subcommand("crystal", "build a crystal graph");
    cmd_crystal->add_option("--shape", shape_text, "shape as comma-separated parts")->required();
    cmd_crystal->add_option("--n", cfg.n, "alphabet bound")->required();
    cmd_crystal->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "dot"}));
    cmd_crystal->add_option("--output", cfg.output_path, "output path (default stdout)");

    CLI::App* cmd_deg = app.add_subcommand("deg", "build a standard dual equivalence graph");
    cmd_deg->add_option("--shape", shape_text)->required();
    cmd_deg->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "dot"}));
    cmd_deg->add_option("--output", cfg.output_path);

    CLI::App* cmd_zero = app.add_subcommand("zero-weight", "list zero-weight vertices");
    cmd_zero->add_option("--shape", shape_text)->required();
    cmd_zero->add_option("--n", cfg.n)->required();
    cmd_zero->add_flag("--general", cfg.general, "list all centered vertices, however wide");

    CLI::App* cmd_verify = app.add_subcommand("verify", "run an axiom suite");
    cmd_verify->require_subcommand(1);
    CLI::App* cmd_verify_regular = cmd_verify->add_subcommand("regular", "P1..P6");
    cmd_verify_regular->add_option("--shape", shape_text);
    cmd_verify_regular->add_option("--n", cfg.n);
    cmd_verify_regular->add_option("--input", cfg.input_path, "colored digraph JSON file");
    CLI::App* cmd_verify_deg = cmd_verify->add_subcommand("deg", "ax1..ax5");
    cmd_verify_deg->add_option("--shape", shape_text);
    cmd_verify_deg->add_option("--input", cfg.input_path, "signed colored graph JSON file");

    CLI::App* cmd_correspond = app.add_subcommand(
        "correspond", "identify the zero-weight graph of a crystal");
    cmd_correspond->add_option("--shape", shape_text)->required();
    cmd_correspond->add_option("--n", cfg.n)->required();
    cmd_correspond->add_option("--mode", mode_text)->check(CLI::IsMember({"standard", "parity"}));

    CLI::App* cmd_sweep = app.add_subcommand("sweep", "verify everything up to a bound");
    cmd_sweep->add_option("--max-n", cfg.max_n, "largest degree to sweep");
    cmd_sweep->add_option("--threads", threads, "parallelism hint; does not change output");

    CLI::App* cmd_character = app.add_subcommand("character", "weight multiplicities");
    cmd_character->add_option("--shape", shape_text)->required();
    cmd_character->add_option("--n", cfg.n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    for (const CLI::App* sub : app.get_subcommands())
        cfg.command = sub->get_name();
    cfg.mode = mode_text == "parity" ? SignatureMode::parity : SignatureMode::standard;
    cfg.threads = resolve_threads(threads);

    try {
        if (!shape_text.empty())
            cfg.shape = parse_shape(shape_text);
        if (app.got_subcommand(cmd_crystal)) {
            const CrystalGraph g = build_crystal(*cfg.shape, cfg.n);
            const GraphDocument doc = to_document(g);
            write_text(cfg.format == "dot" ? export_dot(doc) : serialize(doc),
                       cfg.output_path, out);
            return 0;
        }
        if (app.got_subcommand(cmd_deg)) {
            const SignedColoredGraph g = build_deg(*cfg.shape);
            const GraphDocument doc = to_document(g);
            write_text(cfg.format == "dot" ? export_dot(doc) : serialize(doc),
                       cfg.output_path, out);
            return 0;
        }
        if (app.got_subcommand(cmd_zero)) {
            const CrystalGraph g = build_crystal(*cfg.shape, cfg.n);
            ZeroWeightOptions opts;
            opts.strictness = cfg.general ? Strictness::allow_general : Strictness::require_01;
            const ZeroWeightSet zw = zero_weight(g, opts);
            for (int v : zw.vertices) {
                out << g.vertices[v].to_string();
                if (cfg.general) {
                    out << " eps=";
                    for (int c = 1; c <= g.degree - 1; ++c)
                        out << (c > 1 ? "," : "") << string_stats(g, v, c).epsilon;
                }
                out << "\n";
            }
            if (zw.has_wide_strings)
                out << "warning: strings longer than one step each way are present\n";
            return 0;
        }
        if (cmd_verify->parsed() && cmd_verify->got_subcommand(cmd_verify_regular)) {
            const bool from_file = !cfg.input_path.empty();
            if (from_file == cfg.shape.has_value())
                throw UsageError("provide exactly one of --shape/--n or --input");
            ColoredDigraph d;
            if (from_file) {
                d = to_digraph(parse_document(read_file(cfg.input_path)));
            } else {
                if (cfg.n < 1)
                    throw UsageError("--n is required with --shape");
                d = crystal_to_digraph(build_crystal(*cfg.shape, cfg.n));
            }
            const auto reports = check_regular(d);
            const bool ok = print_reports(
                reports, [&](int v) { return d.label(v); }, out);
            return ok ? 0 : 1;
        }
        if (cmd_verify->parsed() && cmd_verify->got_subcommand(cmd_verify_deg)) {
            const bool from_file = !cfg.input_path.empty();
            if (from_file == cfg.shape.has_value())
                throw UsageError("provide exactly one of --shape or --input");
            SignedColoredGraph g;
            if (from_file)
                g = to_signed(parse_document(read_file(cfg.input_path)));
            else
                g = build_deg(*cfg.shape);
            const auto reports = check_deg(g);
            const bool ok = print_reports(
                reports, [&](int v) { return g.label(v); }, out);
            return ok ? 0 : 1;
        }
        if (app.got_subcommand(cmd_correspond)) {
            const CrystalGraph crystal = build_crystal(*cfg.shape, cfg.n);
            const auto regular = check_regular(crystal_to_digraph(crystal));
            bool ok = print_reports(
                regular, [&](int v) { return crystal.vertices[v].to_string(); }, out);
            ZeroWeightOptions opts;
            opts.signature_mode = cfg.mode;
            const SignedColoredGraph induced = build_g_of_x(crystal, opts);
            const auto degrep = check_deg(induced);
            ok = print_reports(
                     degrep, [&](int v) { return induced.label(v); }, out) &&
                 ok;
            const auto identified = identify(induced);
            out << "identified: " << (identified ? identified->to_string() : "none") << "\n";
            ok = ok && identified.has_value();
            if (cfg.shape->size() == cfg.n && identified) {
                const SignedColoredGraph standard = build_deg(*cfg.shape);
                const bool main_ok = induced.tableaux == standard.tableaux &&
                                     induced.signatures == standard.signatures &&
                                     induced.partner == standard.partner;
                out << "main: " << (main_ok ? "pass" : "fail") << "\n";
                ok = ok && main_ok;
            }
            return ok ? 0 : 1;
        }
        if (app.got_subcommand(cmd_sweep)) {
            const SweepOutcome outcome = run_sweep(cfg.max_n, cfg.threads);
            out << outcome.table;
            return outcome.all_passed ? 0 : 1;
        }
        if (app.got_subcommand(cmd_character)) {
            const CrystalGraph g = build_crystal(*cfg.shape, cfg.n);
            for (const auto& [weight, mult] : character(g)) {
                for (size_t i = 0; i < weight.size(); ++i)
                    out << (i > 0 ? "," : "") << weight[i];
                out << ": " << mult << "\n";
            }
            return 0;
        }
    } catch (const SchemaError& e) {
        err << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace crystaldeg
