#pragma once

#include <map>
#include <optional>
#include <vector>

#include "crystaldeg/tableaux.hpp"

namespace crystaldeg {

// Position of a vertex on its monochromatic string: epsilon lowering steps
// remain ahead, -delta raising steps remain behind.
struct StringStats {
    int epsilon = 0;
    int delta = 0;
    auto operator<=>(const StringStats&) const = default;
};

// The crystal graph on SSYT(shape, entries <= degree). Edge maps are stored
// densely per color: lower[c-1][v] is the color-c lowering image of vertex v,
// or -1 when undefined; raise is the inverse map.
struct CrystalGraph {
    int degree = 1;
    Partition shape;
    std::vector<Tableau> vertices;  // lexicographic order
    std::vector<std::vector<int>> lower;
    std::vector<std::vector<int>> raise;

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int lower_of(int v, int color) const { return lower[color - 1][v]; }
    int raise_of(int v, int color) const { return raise[color - 1][v]; }
    int index_of(const Tableau& t) const;  // -1 when absent

    std::map<Tableau, int> index;
};

// Signed count of letters in the suffix w_r..w_end for edge color `color`:
// occurrences of color+1 minus occurrences of color. r is 1-based and may be
// length+1 (empty suffix, value 0).
int suffix_stat(const Word& w, int color, int r, int n);

// Mirror statistic on the prefix w_1..w_r: occurrences of color minus
// occurrences of color+1.
int prefix_stat(const Word& w, int color, int r, int n);

// Raising operator: turns the distinguished color+1 into a color, locating it
// as the rightmost position where the suffix statistic attains its positive
// maximum. Color-i operators act on the letters {i, i+1}.
std::optional<Tableau> e_op(const Tableau& t, int color, int n);

// Lowering operator, the inverse of e_op: turns the color at the leftmost
// positive maximum of the prefix statistic into a color+1.
std::optional<Tableau> f_op(const Tableau& t, int color, int n);

CrystalGraph build_crystal(const Partition& shape, int n);

StringStats string_stats(const CrystalGraph& g, int vertex, int color);

// Weight multiplicities: content vector -> number of vertices carrying it.
std::map<WeightVector, long long> character(const CrystalGraph& g);

// Vertices with every raising operator undefined.
std::vector<int> highest_weights(const CrystalGraph& g);

bool is_connected(const CrystalGraph& g);

}  // namespace crystaldeg
