#pragma once

#include "crystaldeg/dualequiv.hpp"
#include "crystaldeg/stembridge_axioms.hpp"

namespace crystaldeg {

// The three component shapes admitted by axiom 4, on abstract colors c, c+1,
// c+2 with c = i-2. Edges are (vertex, vertex, color offsets).
struct TemplateGraph {
    std::string name;
    int vertex_count;
    std::vector<std::tuple<int, int, std::vector<int>>> edges;
};

const std::vector<TemplateGraph>& ax4_templates();

// ax1: an i-edge exists at v iff signature entries i-1 and i differ, and the
// partner is unique.
AxiomReport check_ax1(const SignedColoredGraph& g);
// ax2: across an i-edge, entries i-1 and i flip while entries below i-2 and
// above i+1 are preserved.
AxiomReport check_ax2(const SignedColoredGraph& g);
// ax3: conditional flips at the boundary entries i-2 and i+1.
AxiomReport check_ax3(const SignedColoredGraph& g);
// ax4: three-color components match the admitted shapes, and within each
// component of colors 2..i any two vertices are joined by a path that uses at
// most one color-i edge. Degree-4 graphs use the replacement shapes on the
// two-color restrictions instead.
AxiomReport check_ax4(const SignedColoredGraph& g);
// ax5: colors at distance >= 3 commute where both are defined.
AxiomReport check_ax5(const SignedColoredGraph& g);

std::vector<AxiomReport> check_deg(const SignedColoredGraph& g);

}  // namespace crystaldeg
