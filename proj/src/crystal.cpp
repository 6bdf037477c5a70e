#include "crystaldeg/crystal.hpp"

#include <algorithm>

namespace crystaldeg {

int CrystalGraph::index_of(const Tableau& t) const {
    auto it = index.find(t);
    return it == index.end() ? -1 : it->second;
}

namespace {

void check_color(int color, int n) {
    if (color < 1 || color > n - 1)
        throw UsageError("edge color out of range 1..n-1");
}

void check_operand(const Tableau& t, int color, int n) {
    check_color(color, n);
    if (t.max_entry() > n)
        throw UsageError("tableau entry exceeds the alphabet bound");
}

}  // namespace

int suffix_stat(const Word& w, int color, int r, int n) {
    check_color(color, n);
    const int len = static_cast<int>(w.size());
    if (r < 1 || r > len + 1)
        throw UsageError("suffix position out of range");
    int acc = 0;
    for (int p = r; p <= len; ++p) {
        if (w[p - 1] == color + 1)
            ++acc;
        else if (w[p - 1] == color)
            --acc;
    }
    return acc;
}

int prefix_stat(const Word& w, int color, int r, int n) {
    check_color(color, n);
    const int len = static_cast<int>(w.size());
    if (r < 0 || r > len)
        throw UsageError("prefix position out of range");
    int acc = 0;
    for (int p = 1; p <= r; ++p) {
        if (w[p - 1] == color)
            ++acc;
        else if (w[p - 1] == color + 1)
            --acc;
    }
    return acc;
}

std::optional<Tableau> e_op(const Tableau& t, int color, int n) {
    check_operand(t, color, n);
    Word w = reading_word(t);
    const int len = static_cast<int>(w.size());
    // Scan suffixes right to left; best starts at 0 for the empty suffix, and
    // a strict improvement keeps the rightmost maximum.
    int best = 0, pos = -1, acc = 0;
    for (int r = len; r >= 1; --r) {
        if (w[r - 1] == color + 1)
            ++acc;
        else if (w[r - 1] == color)
            --acc;
        if (acc > best) {
            best = acc;
            pos = r;
        }
    }
    if (best <= 0)
        return std::nullopt;
    if (w[pos - 1] != color + 1)
        throw InvariantError("raising position does not carry the expected letter");
    w[pos - 1] = color;
    try {
        return tableau_from_word(t.shape(), w);
    } catch (const TableauError& e) {
        throw InvariantError(std::string("raising broke semi-standardness: ") + e.what());
    }
}

std::optional<Tableau> f_op(const Tableau& t, int color, int n) {
    check_operand(t, color, n);
    Word w = reading_word(t);
    const int len = static_cast<int>(w.size());
    int best = 0, pos = -1, acc = 0;
    for (int r = 1; r <= len; ++r) {
        if (w[r - 1] == color)
            ++acc;
        else if (w[r - 1] == color + 1)
            --acc;
        if (acc > best) {  // strict improvement keeps the leftmost maximum
            best = acc;
            pos = r;
        }
    }
    if (best <= 0)
        return std::nullopt;
    if (w[pos - 1] != color)
        throw InvariantError("lowering position does not carry the expected letter");
    w[pos - 1] = color + 1;
    try {
        return tableau_from_word(t.shape(), w);
    } catch (const TableauError& e) {
        throw InvariantError(std::string("lowering broke semi-standardness: ") + e.what());
    }
}

CrystalGraph build_crystal(const Partition& shape, int n) {
    if (n < 1)
        throw UsageError("alphabet bound must be positive");
    CrystalGraph g;
    g.degree = n;
    g.shape = shape;
    g.vertices = enumerate_ssyt(shape, n);
    const int nv = g.num_vertices();
    for (int v = 0; v < nv; ++v)
        g.index.emplace(g.vertices[v], v);
    g.lower.assign(n - 1, std::vector<int>(nv, -1));
    g.raise.assign(n - 1, std::vector<int>(nv, -1));
    for (int v = 0; v < nv; ++v) {
        for (int c = 1; c <= n - 1; ++c) {
            auto img = f_op(g.vertices[v], c, n);
            if (!img)
                continue;
            const int w = g.index_of(*img);
            if (w < 0)
                throw InvariantError("lowering image escaped the vertex set");
            if (g.raise[c - 1][w] != -1)
                throw InvariantError("two vertices lower to the same image");
            g.lower[c - 1][v] = w;
            g.raise[c - 1][w] = v;
        }
    }
    return g;
}

StringStats string_stats(const CrystalGraph& g, int vertex, int color) {
    if (vertex < 0 || vertex >= g.num_vertices())
        throw UsageError("vertex out of range");
    if (color < 1 || color > g.degree - 1)
        throw UsageError("edge color out of range 1..n-1");
    StringStats s;
    for (int v = g.lower_of(vertex, color); v != -1; v = g.lower_of(v, color))
        ++s.epsilon;
    for (int v = g.raise_of(vertex, color); v != -1; v = g.raise_of(v, color))
        --s.delta;
    return s;
}

std::map<WeightVector, long long> character(const CrystalGraph& g) {
    std::map<WeightVector, long long> out;
    for (const Tableau& t : g.vertices)
        ++out[content(t, g.degree)];
    return out;
}

std::vector<int> highest_weights(const CrystalGraph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        bool top = true;
        for (int c = 1; c <= g.degree - 1 && top; ++c)
            top = g.raise_of(v, c) == -1;
        if (top)
            out.push_back(v);
    }
    return out;
}

bool is_connected(const CrystalGraph& g) {
    const int nv = g.num_vertices();
    if (nv <= 1)
        return true;
    std::vector<bool> seen(nv, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int c = 1; c <= g.degree - 1; ++c) {
            for (int u : {g.lower_of(v, c), g.raise_of(v, c)}) {
                if (u != -1 && !seen[u]) {
                    seen[u] = true;
                    ++reached;
                    stack.push_back(u);
                }
            }
        }
    }
    return reached == nv;
}

}  // namespace crystaldeg
