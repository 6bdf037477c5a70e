#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "crystaldeg/deg_axioms.hpp"
#include "crystaldeg/schurweyl.hpp"
#include "crystaldeg/stembridge_axioms.hpp"

namespace crystaldeg {

// Canonical on-disk form of either graph family. Vertex ids are dense 0..V-1;
// edges are grouped per endpoint pair with sorted color lists.
struct GraphDocument {
    enum class Kind { colored_digraph, signed_colored_graph };

    struct Edge {
        int a = 0;  // source for digraphs, smaller endpoint for signed graphs
        int b = 0;
        std::vector<int> colors;
        auto operator<=>(const Edge&) const = default;
    };

    Kind kind = Kind::colored_digraph;
    int degree = 1;
    int num_vertices = 0;
    bool has_rows = false;
    bool has_signatures = false;
    std::vector<std::vector<Row>> rows;       // per vertex when has_rows
    std::vector<std::string> signatures;      // per vertex when has_signatures
    std::vector<Edge> edges;

    bool operator==(const GraphDocument&) const = default;
};

GraphDocument to_document(const ColoredDigraph& g);
GraphDocument to_document(const CrystalGraph& g);
GraphDocument to_document(const SignedColoredGraph& g);

// Canonical JSON: objects with alphabetically ordered keys, two-space indent,
// newline-terminated. parse_document(serialize(d)) == d.
std::string serialize(const GraphDocument& doc);
GraphDocument parse_document(const std::string& text);  // throws SchemaError

ColoredDigraph to_digraph(const GraphDocument& doc);
SignedColoredGraph to_signed(const GraphDocument& doc);

// DOT text, one edge statement per color; styles cycle dashed/solid/bold.
std::string export_dot(const GraphDocument& doc);

struct RunConfig {
    std::string command;
    std::optional<Partition> shape;
    int n = 0;
    bool general = false;
    SignatureMode mode = SignatureMode::standard;
    std::string format = "json";
    std::string output_path;
    std::string input_path;
    int max_n = 5;
    int threads = 1;
};

struct SweepOutcome {
    bool all_passed = false;
    std::string table;
};

// Builds every crystal and standard graph through degree max_n, runs both
// axiom suites and the correspondence check. The thread count must not change
// the output bytes.
SweepOutcome run_sweep(int max_n, int threads);

// Exit codes: 0 all checks passed / output written, 1 a check failed,
// 2 usage or schema error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace crystaldeg
