#include "crystaldeg/dualequiv.hpp"

#include <algorithm>
#include <map>

namespace crystaldeg {

std::string signature_to_string(const Signature& s) {
    std::string out;
    out.reserve(s.size());
    for (int e : s)
        out += e > 0 ? '+' : '-';
    return out;
}

Signature signature_from_string(const std::string& s) {
    Signature out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '+')
            out.push_back(1);
        else if (c == '-')
            out.push_back(-1);
        else
            throw UsageError("signature characters must be '+' or '-'");
    }
    return out;
}

void SignedColoredGraph::add_edge(int v, int w, int color) {
    if (color < 2 || color > degree - 1)
        throw UsageError("edge color out of range 2..m-1");
    if (v < 0 || v >= num_vertices() || w < 0 || w >= num_vertices())
        throw UsageError("edge endpoint out of range");
    if (v == w)
        throw UsageError("a vertex cannot pair with itself");
    int& pv = partner[color - 2][v];
    int& pw = partner[color - 2][w];
    if ((pv != -1 && pv != w) || (pw != -1 && pw != v))
        throw UsageError("vertex already paired in this color");
    pv = w;
    pw = v;
}

bool SignedColoredGraph::remove_color(int v, int w, int color) {
    if (color < 2 || color > degree - 1)
        return false;
    if (partner[color - 2][v] != w || partner[color - 2][w] != v)
        return false;
    partner[color - 2][v] = -1;
    partner[color - 2][w] = -1;
    return true;
}

std::vector<std::pair<std::pair<int, int>, std::vector<int>>>
SignedColoredGraph::edge_list() const {
    std::map<std::pair<int, int>, std::vector<int>> acc;
    for (int c = 2; c <= degree - 1; ++c)
        for (int v = 0; v < num_vertices(); ++v) {
            const int w = partner[c - 2][v];
            if (w > v)
                acc[{v, w}].push_back(c);
        }
    return {acc.begin(), acc.end()};
}

std::string SignedColoredGraph::label(int v) const {
    if (!tableaux.empty())
        return tableaux[v].to_string();
    return "v" + std::to_string(v) + ":" + signature_to_string(signatures[v]);
}

Signature signature_of(const Tableau& t) {
    if (!t.is_standard())
        throw UsageError("signature is defined for standard tableaux only");
    const int m = t.size();
    const Word w = reading_word(t);
    std::vector<int> position(m + 1, 0);
    for (int p = 0; p < m; ++p)
        position[w[p]] = p;
    Signature s;
    s.reserve(m > 0 ? m - 1 : 0);
    for (int i = 1; i <= m - 1; ++i)
        s.push_back(position[i] < position[i + 1] ? 1 : -1);
    return s;
}

Word ede(const Word& w, int i) {
    int p[3] = {-1, -1, -1};
    for (int v = i - 1; v <= i + 1; ++v) {
        for (size_t q = 0; q < w.size(); ++q)
            if (w[q] == v) {
                if (p[v - i + 1] != -1)
                    throw UsageError("word has a repeated letter");
                p[v - i + 1] = static_cast<int>(q);
            }
        if (p[v - i + 1] == -1)
            throw UsageError("word is missing one of the three values");
    }
    int sorted[3] = {p[0], p[1], p[2]};
    std::sort(sorted, sorted + 3);
    if (w[sorted[1]] == i)
        return w;
    Word out = w;
    std::swap(out[sorted[0]], out[sorted[2]]);
    return out;
}

std::optional<Tableau> d_op(const Tableau& t, int i) {
    if (!t.is_standard())
        throw UsageError("dual equivalence moves act on standard tableaux");
    const int m = t.size();
    if (i < 2 || i > m - 1)
        throw UsageError("move index out of range 2..m-1");
    const Word w = reading_word(t);
    const Word moved = ede(w, i);
    if (moved == w)
        return std::nullopt;
    try {
        return tableau_from_word(t.shape(), moved);
    } catch (const TableauError& e) {
        throw InvariantError(std::string("elementary move broke the filling: ") + e.what());
    }
}

SignedColoredGraph build_deg(const Partition& shape) {
    SignedColoredGraph g;
    g.degree = std::max(shape.size(), 1);
    g.tableaux = enumerate_syt(shape);
    g.signatures.reserve(g.tableaux.size());
    for (const Tableau& t : g.tableaux)
        g.signatures.push_back(signature_of(t));
    const int nv = g.num_vertices();
    g.partner.assign(std::max(g.degree - 2, 0), std::vector<int>(nv, -1));
    std::map<Tableau, int> index;
    for (int v = 0; v < nv; ++v)
        index.emplace(g.tableaux[v], v);
    for (int v = 0; v < nv; ++v)
        for (int i = 2; i <= g.degree - 1; ++i) {
            auto moved = d_op(g.tableaux[v], i);
            if (!moved)
                continue;
            auto it = index.find(*moved);
            if (it == index.end())
                throw InvariantError("elementary move left the vertex set");
            const int w = it->second;
            int& pv = g.partner[i - 2][v];
            if (pv != -1 && pv != w)
                throw InvariantError("elementary move is not an involution");
            pv = w;
        }
    // the partner map must already be symmetric; re-check
    for (int i = 2; i <= g.degree - 1; ++i)
        for (int v = 0; v < nv; ++v) {
            const int w = g.partner[i - 2][v];
            if (w != -1 && g.partner[i - 2][w] != v)
                throw InvariantError("elementary move is not an involution");
        }
    return g;
}

SignedColoredGraph negate_signatures(const SignedColoredGraph& g) {
    SignedColoredGraph out = g;
    for (Signature& s : out.signatures)
        for (int& e : s)
            e = -e;
    return out;
}

bool is_connected(const SignedColoredGraph& g) {
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
        for (int c = 2; c <= g.degree - 1; ++c) {
            const int u = g.d(c, v);
            if (u != -1 && !seen[u]) {
                seen[u] = true;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == nv;
}

}  // namespace crystaldeg
