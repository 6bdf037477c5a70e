#include "crystaldeg/stembridge_axioms.hpp"

#include <algorithm>
#include <cstdlib>

namespace crystaldeg {

void ColoredDigraph::add_edge(int source, int target, int color) {
    if (source < 0 || source >= num_vertices || target < 0 || target >= num_vertices)
        throw UsageError("edge endpoint out of range");
    if (color < 1 || color > degree - 1)
        throw UsageError("edge color out of range 1..n-1");
    edges.push_back({source, target, color});
}

bool ColoredDigraph::remove_edge(int source, int target, int color) {
    const ColoredEdge e{source, target, color};
    auto it = std::find(edges.begin(), edges.end(), e);
    if (it == edges.end())
        return false;
    edges.erase(it);
    return true;
}

std::string ColoredDigraph::label(int v) const {
    if (!tableaux.empty())
        return tableaux[v].to_string();
    return "v" + std::to_string(v);
}

ColoredDigraph crystal_to_digraph(const CrystalGraph& g) {
    ColoredDigraph d;
    d.degree = g.degree;
    d.num_vertices = g.num_vertices();
    d.tableaux = g.vertices;
    for (int v = 0; v < d.num_vertices; ++v)
        for (int c = 1; c <= g.degree - 1; ++c)
            if (g.lower_of(v, c) != -1)
                d.edges.push_back({v, g.lower_of(v, c), c});
    return d;
}

namespace {

std::vector<std::vector<std::vector<int>>> out_adjacency(const ColoredDigraph& g) {
    std::vector<std::vector<std::vector<int>>> out(
        g.degree, std::vector<std::vector<int>>(g.num_vertices));
    for (const ColoredEdge& e : g.edges)
        out[e.color - 1][e.source].push_back(e.target);
    for (auto& per_color : out)
        for (auto& targets : per_color)
            std::sort(targets.begin(), targets.end());
    return out;
}

void finish(AxiomReport& r) {
    std::sort(r.witnesses.begin(), r.witnesses.end());
    r.passed = r.witnesses.empty();
}

AxiomReport p1_impl(const ColoredDigraph& g) {
    AxiomReport report{"P1", true, {}};
    const auto out = out_adjacency(g);
    for (int c = 1; c <= g.degree - 1; ++c) {
        std::vector<int> state(g.num_vertices, 0);  // 0 white, 1 gray, 2 black
        int cycle_vertex = -1;
        for (int s = 0; s < g.num_vertices && cycle_vertex == -1; ++s) {
            if (state[s] != 0)
                continue;
            std::vector<std::pair<int, size_t>> stack{{s, 0}};
            state[s] = 1;
            while (!stack.empty() && cycle_vertex == -1) {
                auto& [v, next] = stack.back();
                if (next < out[c - 1][v].size()) {
                    const int u = out[c - 1][v][next++];
                    if (state[u] == 1) {
                        cycle_vertex = u;
                    } else if (state[u] == 0) {
                        state[u] = 1;
                        stack.emplace_back(u, 0);
                    }
                } else {
                    state[v] = 2;
                    stack.pop_back();
                }
            }
        }
        if (cycle_vertex != -1)
            report.witnesses.push_back(
                {cycle_vertex, c, 0, "monochromatic cycle", "acyclic"});
    }
    finish(report);
    return report;
}

AxiomReport p2_impl(const ColoredDigraph& g) {
    AxiomReport report{"P2", true, {}};
    std::vector<std::vector<int>> outdeg(g.degree, std::vector<int>(g.num_vertices, 0));
    std::vector<std::vector<int>> indeg(g.degree, std::vector<int>(g.num_vertices, 0));
    for (const ColoredEdge& e : g.edges) {
        ++outdeg[e.color - 1][e.source];
        ++indeg[e.color - 1][e.target];
    }
    for (int v = 0; v < g.num_vertices; ++v)
        for (int c = 1; c <= g.degree - 1; ++c) {
            if (outdeg[c - 1][v] > 1)
                report.witnesses.push_back(
                    {v, c, 0, "out-degree " + std::to_string(outdeg[c - 1][v]),
                     "at most 1"});
            if (indeg[c - 1][v] > 1)
                report.witnesses.push_back(
                    {v, c, 0, "in-degree " + std::to_string(indeg[c - 1][v]),
                     "at most 1"});
        }
    finish(report);
    return report;
}

// String statistics are only well-defined once P1 and P2 hold.
struct Tables {
    std::vector<std::vector<int>> succ, pred, eps, del;

    int grad_eps(int x, int i, int j) const {  // Grad_i eps(x,j), needs succ[i][x]
        return eps[j - 1][x] - eps[j - 1][succ[i - 1][x]];
    }
    int diff_del(int x, int i, int j) const {  // Delta_i del(x,j), needs pred[i][x]
        return del[j - 1][pred[i - 1][x]] - del[j - 1][x];
    }
    int diff_eps(int x, int i, int j) const {
        return eps[j - 1][pred[i - 1][x]] - eps[j - 1][x];
    }
};

void fill_steps(const std::vector<int>& next, std::vector<int>& steps) {
    const int n = static_cast<int>(next.size());
    steps.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (steps[v] != -1)
            continue;
        std::vector<int> chain;
        int u = v;
        while (u != -1 && steps[u] == -1) {
            chain.push_back(u);
            u = next[u];
        }
        int s = (u == -1) ? -1 : steps[u];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it)
            steps[*it] = ++s;
    }
}

Tables build_tables(const ColoredDigraph& g) {
    Tables t;
    t.succ.assign(g.degree, std::vector<int>(g.num_vertices, -1));
    t.pred.assign(g.degree, std::vector<int>(g.num_vertices, -1));
    for (const ColoredEdge& e : g.edges) {
        t.succ[e.color - 1][e.source] = e.target;
        t.pred[e.color - 1][e.target] = e.source;
    }
    t.eps.resize(g.degree);
    t.del.resize(g.degree);
    for (int c = 0; c < g.degree - 1; ++c) {
        fill_steps(t.succ[c], t.eps[c]);
        fill_steps(t.pred[c], t.del[c]);
        for (int& d : t.del[c])
            d = -d;
    }
    return t;
}

void require_p1_p2(const ColoredDigraph& g) {
    if (!p1_impl(g).passed)
        throw PrerequisiteError("P1", "prerequisite failed: P1 does not hold");
    if (!p2_impl(g).passed)
        throw PrerequisiteError("P2", "prerequisite failed: P2 does not hold");
}

std::string diff_text(int dd, int de) {
    return "Ddelta=" + std::to_string(dd) + " Deps=" + std::to_string(de);
}

AxiomReport p3_impl(const ColoredDigraph& g, const Tables& t) {
    AxiomReport report{"P3", true, {}};
    for (int x = 0; x < g.num_vertices; ++x)
        for (int i = 1; i <= g.degree - 1; ++i) {
            if (t.pred[i - 1][x] == -1)
                continue;
            for (int j = 1; j <= g.degree - 1; ++j) {
                const int dd = t.diff_del(x, i, j);
                const int de = t.diff_eps(x, i, j);
                const int want = (j == i) ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
                if (dd + de != want)
                    report.witnesses.push_back({x, i, j, diff_text(dd, de),
                                                "Ddelta+Deps=" + std::to_string(want)});
            }
        }
    finish(report);
    return report;
}

AxiomReport p4_impl(const ColoredDigraph& g, const Tables& t) {
    AxiomReport report{"P4", true, {}};
    for (int x = 0; x < g.num_vertices; ++x)
        for (int i = 1; i <= g.degree - 1; ++i) {
            if (t.pred[i - 1][x] == -1)
                continue;
            for (int j = 1; j <= g.degree - 1; ++j) {
                if (j == i)
                    continue;
                const int dd = t.diff_del(x, i, j);
                const int de = t.diff_eps(x, i, j);
                if (dd > 0 || de > 0)
                    report.witnesses.push_back(
                        {x, i, j, diff_text(dd, de), "Ddelta<=0 Deps<=0"});
            }
        }
    finish(report);
    return report;
}

AxiomReport p5_impl(const ColoredDigraph& g, const Tables& t) {
    AxiomReport report{"P5", true, {}};
    for (int x = 0; x < g.num_vertices; ++x)
        for (int i = 1; i <= g.degree - 1; ++i)
            for (int j = 1; j <= g.degree - 1; ++j) {
                if (j == i)
                    continue;
                const int yi = t.pred[i - 1][x];
                const int yj = t.pred[j - 1][x];
                if (yi != -1 && yj != -1 && t.diff_del(x, i, j) == 0) {
                    const int a = t.pred[j - 1][yi];
                    const int b = t.pred[i - 1][yj];
                    if (a == -1 || b == -1)
                        report.witnesses.push_back({x, i, j, "raising square incomplete",
                                                    "E_iE_j x and E_jE_i x defined"});
                    else if (a != b)
                        report.witnesses.push_back(
                            {x, i, j, "raising square disagrees", "E_iE_j x = E_jE_i x"});
                    else if (t.grad_eps(a, j, i) != 0)
                        report.witnesses.push_back(
                            {x, i, j, "Grad_j eps(y,i)=" + std::to_string(t.grad_eps(a, j, i)),
                             "Grad_j eps(y,i)=0"});
                }
                const int zi = t.succ[i - 1][x];
                const int zj = t.succ[j - 1][x];
                if (zi != -1 && zj != -1 && t.grad_eps(x, i, j) == 0) {
                    const int a = t.succ[j - 1][zi];
                    const int b = t.succ[i - 1][zj];
                    if (a == -1 || b == -1)
                        report.witnesses.push_back({x, i, j, "lowering square incomplete",
                                                    "F_iF_j x and F_jF_i x defined"});
                    else if (a != b)
                        report.witnesses.push_back(
                            {x, i, j, "lowering square disagrees", "F_iF_j x = F_jF_i x"});
                    else if (t.diff_del(a, j, i) != 0)
                        report.witnesses.push_back(
                            {x, i, j, "Delta_j del(y,i)=" + std::to_string(t.diff_del(a, j, i)),
                             "Delta_j del(y,i)=0"});
                }
            }
    finish(report);
    return report;
}

int walk(const Tables& t, int x, std::initializer_list<int> colors, bool raising) {
    int v = x;
    for (int c : colors) {
        if (v == -1)
            return -1;
        v = raising ? t.pred[c - 1][v] : t.succ[c - 1][v];
    }
    return v;
}

AxiomReport p6_impl(const ColoredDigraph& g, const Tables& t) {
    AxiomReport report{"P6", true, {}};
    for (int x = 0; x < g.num_vertices; ++x)
        for (int i = 1; i <= g.degree - 1; ++i)
            for (int j = i + 1; j <= g.degree - 1; ++j) {
                const int yi = t.pred[i - 1][x];
                const int yj = t.pred[j - 1][x];
                if (yi != -1 && yj != -1 && t.diff_del(x, i, j) == -1 &&
                    t.diff_del(x, j, i) == -1) {
                    const int a = walk(t, x, {i, j, j, i}, true);
                    const int b = walk(t, x, {j, i, i, j}, true);
                    if (a == -1 || b == -1)
                        report.witnesses.push_back({x, i, j, "raising octagon incomplete",
                                                    "E_iE_j^2E_i x and E_jE_i^2E_j x defined"});
                    else if (a != b)
                        report.witnesses.push_back({x, i, j, "raising octagon disagrees",
                                                    "E_iE_j^2E_i x = E_jE_i^2E_j x"});
                    else if (t.grad_eps(a, i, j) != -1 || t.grad_eps(a, j, i) != -1)
                        report.witnesses.push_back(
                            {x, i, j,
                             "Grad_i eps(y,j)=" + std::to_string(t.grad_eps(a, i, j)) +
                                 " Grad_j eps(y,i)=" + std::to_string(t.grad_eps(a, j, i)),
                             "both=-1"});
                }
                const int zi = t.succ[i - 1][x];
                const int zj = t.succ[j - 1][x];
                if (zi != -1 && zj != -1 && t.grad_eps(x, i, j) == -1 &&
                    t.grad_eps(x, j, i) == -1) {
                    const int a = walk(t, x, {i, j, j, i}, false);
                    const int b = walk(t, x, {j, i, i, j}, false);
                    if (a == -1 || b == -1)
                        report.witnesses.push_back({x, i, j, "lowering octagon incomplete",
                                                    "F_iF_j^2F_i x and F_jF_i^2F_j x defined"});
                    else if (a != b)
                        report.witnesses.push_back({x, i, j, "lowering octagon disagrees",
                                                    "F_iF_j^2F_i x = F_jF_i^2F_j x"});
                    else if (t.diff_del(a, i, j) != -1 || t.diff_del(a, j, i) != -1)
                        report.witnesses.push_back(
                            {x, i, j,
                             "Delta_i del(y,j)=" + std::to_string(t.diff_del(a, i, j)) +
                                 " Delta_j del(y,i)=" + std::to_string(t.diff_del(a, j, i)),
                             "both=-1"});
                }
            }
    finish(report);
    return report;
}

}  // namespace

AxiomReport check_p1(const ColoredDigraph& g) { return p1_impl(g); }

AxiomReport check_p2(const ColoredDigraph& g) { return p2_impl(g); }

AxiomReport check_p3(const ColoredDigraph& g) {
    require_p1_p2(g);
    return p3_impl(g, build_tables(g));
}

AxiomReport check_p4(const ColoredDigraph& g) {
    require_p1_p2(g);
    return p4_impl(g, build_tables(g));
}

AxiomReport check_p5(const ColoredDigraph& g) {
    require_p1_p2(g);
    return p5_impl(g, build_tables(g));
}

AxiomReport check_p6(const ColoredDigraph& g) {
    require_p1_p2(g);
    return p6_impl(g, build_tables(g));
}

std::vector<AxiomReport> check_regular(const ColoredDigraph& g) {
    std::vector<AxiomReport> reports;
    reports.push_back(p1_impl(g));
    reports.push_back(p2_impl(g));
    if (!reports[0].passed || !reports[1].passed)
        return reports;
    const Tables t = build_tables(g);
    reports.push_back(p3_impl(g, t));
    reports.push_back(p4_impl(g, t));
    reports.push_back(p5_impl(g, t));
    reports.push_back(p6_impl(g, t));
    return reports;
}

}  // namespace crystaldeg
