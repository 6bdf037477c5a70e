#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crystaldeg/tableaux.hpp"

namespace crystaldeg {

// Entries are +1 or -1; length m-1 for tableaux of size m.
using Signature = std::vector<int>;

std::string signature_to_string(const Signature& s);  // "+-++"
Signature signature_from_string(const std::string& s);

// Vertex-signed, edge-colored graph with colors 2..degree-1. Each color is a
// partial perfect matching, stored as a symmetric partner map.
struct SignedColoredGraph {
    int degree = 1;  // signatures have length degree-1
    std::vector<Signature> signatures;
    std::vector<Tableau> tableaux;          // empty, or one per vertex
    std::vector<std::vector<int>> partner;  // partner[c-2][v], -1 when unmatched

    int num_vertices() const { return static_cast<int>(signatures.size()); }
    int d(int color, int v) const { return partner[color - 2][v]; }
    void add_edge(int v, int w, int color);
    bool remove_color(int v, int w, int color);
    // canonical: pairs with v < w sorted, colors sorted
    std::vector<std::pair<std::pair<int, int>, std::vector<int>>> edge_list() const;
    std::string label(int v) const;
};

// Signature entry i is +1 iff i appears to the left of i+1 in the reading word.
Signature signature_of(const Tableau& t);

// Elementary move on the three values i-1, i, i+1 of a permutation word: when
// the value i is not positionally between the other two, the outer two values
// swap; otherwise the word is fixed. An involution.
Word ede(const Word& w, int i);

// Applies ede to the reading word and rebuilds the tableau; a fixed point
// means no i-edge.
std::optional<Tableau> d_op(const Tableau& t, int i);

// The standard dual equivalence graph on SYT(shape).
SignedColoredGraph build_deg(const Partition& shape);

SignedColoredGraph negate_signatures(const SignedColoredGraph& g);

bool is_connected(const SignedColoredGraph& g);

}  // namespace crystaldeg
