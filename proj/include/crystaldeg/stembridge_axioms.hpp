#pragma once

#include <string>
#include <vector>

#include "crystaldeg/crystal.hpp"

namespace crystaldeg {

struct ColoredEdge {
    int source = 0;
    int target = 0;
    int color = 1;
    auto operator<=>(const ColoredEdge&) const = default;
};

// Arbitrary directed colored graph. Unlike CrystalGraph this can represent
// inputs that violate any of the axioms, including multiple edges of one
// color at a vertex.
struct ColoredDigraph {
    int degree = 1;  // colors run 1..degree-1
    int num_vertices = 0;
    std::vector<ColoredEdge> edges;
    std::vector<Tableau> tableaux;  // empty, or one label per vertex

    void add_edge(int source, int target, int color);
    bool remove_edge(int source, int target, int color);
    std::string label(int v) const;
};

ColoredDigraph crystal_to_digraph(const CrystalGraph& g);

struct Witness {
    int vertex = -1;
    int i = 0;
    int j = 0;  // 0 when a single color is involved
    std::string observed;
    std::string required;
    auto operator<=>(const Witness&) const = default;
};

struct AxiomReport {
    std::string axiom;
    bool passed = true;
    std::vector<Witness> witnesses;  // sorted by (vertex, i, j)
};

// P1: every monochromatic subgraph is acyclic.
AxiomReport check_p1(const ColoredDigraph& g);
// P2: per vertex and color, at most one incoming and one outgoing edge.
AxiomReport check_p2(const ColoredDigraph& g);
// P3/P4 compare string statistics across a raising step; P5/P6 verify the
// commuting square and octagon relations. All four require P1 and P2 and
// throw PrerequisiteError otherwise.
AxiomReport check_p3(const ColoredDigraph& g);
AxiomReport check_p4(const ColoredDigraph& g);
AxiomReport check_p5(const ColoredDigraph& g);
AxiomReport check_p6(const ColoredDigraph& g);

// Runs P1..P6 in dependency order; P3..P6 are skipped when P1 or P2 fails.
std::vector<AxiomReport> check_regular(const ColoredDigraph& g);

}  // namespace crystaldeg
