// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "crystaldeg/cli_io.hpp"
#include "oracles.hpp"

using namespace crystaldeg;

namespace {

std::string fixture_path(const std::string& name) {
    return std::string(CRYSTALDEG_FIXTURE_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open fixture: " + path);
    std::ostringstream ss;
    ss << file.rdbuf();
    return ss.str();
}

bool all_passed(const std::vector<AxiomReport>& reports) {
    for (const AxiomReport& r : reports)
        if (!r.passed)
            return false;
    return true;
}

using EdgeKey = std::tuple<Tableau, Tableau, int>;

std::set<EdgeKey> edge_keys(const ColoredDigraph& g) {
    std::set<EdgeKey> keys;
    for (const ColoredEdge& e : g.edges)
        keys.insert({g.tableaux[e.source], g.tableaux[e.target], e.color});
    return keys;
}

// Every (lambda, n) pair covered by the regularity sweep.
std::vector<std::pair<Partition, int>> sweep_pairs(int max_size, int max_n) {
    std::vector<std::pair<Partition, int>> pairs;
    for (int n = 2; n <= max_n; ++n)
        for (int m = 1; m <= max_size; ++m)
            for (const Partition& lambda : partitions_of(m))
                if (lambda.length() <= n)
                    pairs.emplace_back(lambda, n);
    return pairs;
}

bool criterion1_figure1(std::string& detail) {
    const CrystalGraph g = build_crystal(Partition{{2, 2}}, 4);
    if (g.num_vertices() != 20) {
        detail = "expected 20 vertices, got " + std::to_string(g.num_vertices());
        return false;
    }
    const ColoredDigraph d = crystal_to_digraph(g);
    for (int c = 1; c <= 3; ++c) {
        const long count = std::count_if(d.edges.begin(), d.edges.end(),
                                         [c](const ColoredEdge& e) { return e.color == c; });
        if (count != 10) {
            detail = "color " + std::to_string(c) + " has " + std::to_string(count) +
                     " edges, expected 10";
            return false;
        }
    }
    const GraphDocument doc = parse_document(read_file(fixture_path("x22_figure1.json")));
    const ColoredDigraph fixture = to_digraph(doc);
    if (edge_keys(d) != edge_keys(fixture)) {
        detail = "edge list differs from the transcribed figure";
        return false;
    }
    return true;
}

bool criterion2_regularity(std::string& detail) {
    for (const auto& [lambda, n] : sweep_pairs(6, 6)) {
        const CrystalGraph g = build_crystal(lambda, n);
        if (!all_passed(check_regular(crystal_to_digraph(g)))) {
            detail = "P-axioms fail for lambda=" + lambda.to_string() +
                     " n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool criterion3_deg_sweep(std::string& detail) {
    for (int m = 1; m <= 8; ++m) {
        std::vector<SignedColoredGraph> graphs;
        const auto shapes = partitions_of(m);
        for (const Partition& lambda : shapes) {
            SignedColoredGraph g = build_deg(lambda);
            if (!all_passed(check_deg(g))) {
                detail = "ax1..ax5 fail for lambda=" + lambda.to_string();
                return false;
            }
            if (g.num_vertices() != oracles::hook_length_count(lambda)) {
                detail = "vertex count differs from the hook-length value for lambda=" +
                         lambda.to_string();
                return false;
            }
            if (!is_connected(g)) {
                detail = "graph disconnected for lambda=" + lambda.to_string();
                return false;
            }
            const IsoResult self = iso(g, g);
            bool identity = self.found;
            for (int v = 0; identity && v < g.num_vertices(); ++v)
                identity = self.mapping[v] == v;
            if (!identity || count_isomorphisms(g, g, 2) != 1) {
                detail = "nontrivial automorphism for lambda=" + lambda.to_string();
                return false;
            }
            graphs.push_back(std::move(g));
        }
        for (size_t a = 0; a < graphs.size(); ++a)
            for (size_t b = a + 1; b < graphs.size(); ++b)
                if (iso(graphs[a], graphs[b]).found) {
                    detail = "isomorphic pair " + shapes[a].to_string() + " / " +
                             shapes[b].to_string();
                    return false;
                }
    }
    return true;
}

bool criterion4_main(std::string& detail) {
    for (int n = 2; n <= 7; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            const VerifyResult r = verify_main(lambda, n);
            if (!r.ok) {
                detail = "lambda=" + lambda.to_string() + " n=" + std::to_string(n) +
                         ": " + r.report;
                return false;
            }
        }
    return true;
}

bool criterion5_addcol(std::string& detail) {
    for (int n = 2; n <= 4; ++n)
        for (const Partition& mu : partitions_of(n)) {
            if (mu.length() > n)
                continue;
            for (int c = 1; c <= 2; ++c) {
                ZeroWeightOptions standard;
                if (!verify_addcol(mu, c, n, standard).ok) {
                    detail = "standard mode: mu=" + mu.to_string() + " c=" + std::to_string(c);
                    return false;
                }
                ZeroWeightOptions parity;
                parity.signature_mode = SignatureMode::parity;
                if (!verify_addcol(mu, c, n, parity).ok) {
                    detail = "parity mode: mu=" + mu.to_string() + " c=" + std::to_string(c);
                    return false;
                }
            }
        }
    return true;
}

bool criterion6_character(std::string& detail) {
    for (const auto& [lambda, n] : sweep_pairs(6, 6)) {
        const CrystalGraph g = build_crystal(lambda, n);
        const auto chi = character(g);
        for (int i = 0; i + 1 < n; ++i) {
            std::map<WeightVector, long long> swapped;
            for (const auto& [w, mult] : chi) {
                WeightVector v = w;
                std::swap(v[i], v[i + 1]);
                swapped[v] = mult;
            }
            if (swapped != chi) {
                detail = "character not symmetric for lambda=" + lambda.to_string() +
                         " n=" + std::to_string(n) + " at coordinate " + std::to_string(i + 1);
                return false;
            }
        }
        if (lambda.size() == n) {
            const WeightVector ones(n, 1);
            const auto it = chi.find(ones);
            const long long mult = it == chi.end() ? 0 : it->second;
            if (mult != static_cast<long long>(enumerate_syt(lambda).size())) {
                detail = "all-ones multiplicity wrong for lambda=" + lambda.to_string();
                return false;
            }
        }
    }
    return true;
}

bool criterion7_operators(std::string& detail) {
    for (const auto& [lambda, n] : sweep_pairs(6, 6)) {
        const CrystalGraph g = build_crystal(lambda, n);
        for (int v = 0; v < g.num_vertices(); ++v)
            for (int c = 1; c <= n - 1; ++c) {
                const auto down = f_op(g.vertices[v], c, n);
                if (down) {
                    const auto back = e_op(*down, c, n);
                    if (!back || *back != g.vertices[v]) {
                        detail = "e(f(t)) != t at " + g.vertices[v].to_string();
                        return false;
                    }
                }
                const auto up = e_op(g.vertices[v], c, n);
                if (up) {
                    const auto back = f_op(*up, c, n);
                    if (!back || *back != g.vertices[v]) {
                        detail = "f(e(t)) != t at " + g.vertices[v].to_string();
                        return false;
                    }
                }
                if (lambda.size() <= 5) {
                    const auto expected = oracles::inverse_search_f(g.vertices[v], c, n);
                    if (down != expected) {
                        detail = "f_op disagrees with the inverse-search oracle at " +
                                 g.vertices[v].to_string() + " color " + std::to_string(c);
                        return false;
                    }
                }
            }
        // monochromatic components are simple paths: walk every string from its
        // head; a vertex never reached lies on a cycle
        for (int c = 1; c <= n - 1; ++c) {
            std::vector<bool> reached(g.num_vertices(), false);
            for (int v = 0; v < g.num_vertices(); ++v) {
                if (g.raise_of(v, c) != -1)
                    continue;
                for (int u = v; u != -1; u = g.lower_of(u, c)) {
                    if (reached[u]) {
                        detail = "string revisits a vertex";
                        return false;
                    }
                    reached[u] = true;
                }
            }
            for (int v = 0; v < g.num_vertices(); ++v)
                if (!reached[v]) {
                    detail = "monochromatic cycle in color " + std::to_string(c);
                    return false;
                }
        }
    }
    return true;
}

bool criterion8_negative_controls(std::string& detail) {
    // (a) a deleted crystal edge breaks P3 and P4 at the frozen witness
    const CrystalGraph x22 = build_crystal(Partition{{2, 2}}, 4);
    ColoredDigraph mutant = crystal_to_digraph(x22);
    const int from = x22.index_of(Tableau::from_rows({{1, 1}, {2, 3}}));
    const int to = x22.index_of(Tableau::from_rows({{1, 2}, {2, 3}}));
    if (!mutant.remove_edge(from, to, 1)) {
        detail = "fixture edge not found";
        return false;
    }
    const int witness_vertex = x22.index_of(Tableau::from_rows({{1, 2}, {3, 3}}));
    for (const auto& check : {check_p3, check_p4}) {
        const AxiomReport report = check(mutant);
        if (report.passed) {
            detail = report.axiom + " still passes after the deletion";
            return false;
        }
        bool found = false;
        for (const Witness& w : report.witnesses)
            if (w.vertex == witness_vertex && w.i == 2 && w.j == 1)
                found = true;
        if (!found) {
            detail = report.axiom + " lacks the witness ([[1,2],[3,3]], i=2, j=1)";
            return false;
        }
    }
    // (b) removing any single color from any edge of G_(3,2) breaks ax1 at
    // both endpoints
    const SignedColoredGraph g32 = build_deg(Partition{{3, 2}});
    for (const auto& [pair, colors] : g32.edge_list())
        for (int c : colors) {
            SignedColoredGraph cut = g32;
            cut.remove_color(pair.first, pair.second, c);
            const AxiomReport report = check_ax1(cut);
            bool at_first = false, at_second = false;
            for (const Witness& w : report.witnesses) {
                at_first = at_first || (w.vertex == pair.first && w.i == c);
                at_second = at_second || (w.vertex == pair.second && w.i == c);
            }
            if (report.passed || !at_first || !at_second) {
                detail = "ax1 fails to flag both endpoints of edge (" +
                         std::to_string(pair.first) + "," + std::to_string(pair.second) +
                         ") color " + std::to_string(c);
                return false;
            }
        }
    return true;
}

bool criterion9_determinism(std::string& detail) {
    const SweepOutcome serial = run_sweep(5, 1);
    const SweepOutcome serial_again = run_sweep(5, 1);
    const SweepOutcome threaded = run_sweep(5, 4);
    if (!serial.all_passed) {
        detail = "sweep reports failures";
        return false;
    }
    if (serial.table != serial_again.table) {
        detail = "consecutive runs differ";
        return false;
    }
    if (serial.table != threaded.table) {
        detail = "threaded run differs from the serial run";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget_seconds;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "figure-1 reproduction", 1.0, criterion1_figure1},
        {2, "regularity sweep", 60.0, criterion2_regularity},
        {3, "dual equivalence sweep", 120.0, criterion3_deg_sweep},
        {4, "main correspondence", 600.0, criterion4_main},
        {5, "column addition", 600.0, criterion5_addcol},
        {6, "character properties", 600.0, criterion6_character},
        {7, "operator algebra", 600.0, criterion7_operators},
        {8, "negative controls", 600.0, criterion8_negative_controls},
        {9, "sweep determinism", 600.0, criterion9_determinism},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && seconds > c.budget_seconds) {
            ok = false;
            detail = "over time budget";
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "criterion " << c.id << " (" << c.name << "): " << (ok ? "PASS" : "FAIL")
             << " (" << seconds << "s)";
        if (!ok && !detail.empty())
            line << " - " << detail;
        std::cout << line.str() << "\n";
        if (!ok)
            ++failures;
    }
    std::cout << "acceptance: " << (criteria.size() - failures) << "/" << criteria.size()
              << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
