#include "crystaldeg/schurweyl.hpp"

#include <algorithm>
#include <map>

#include "crystaldeg/stembridge_axioms.hpp"

namespace crystaldeg {

namespace {

struct StringProfile {
    std::vector<int> eps;    // per color 1..degree-1
    std::vector<int> back;   // raising steps per color
    bool centered = true;    // eps == back in every color
    int max_eps = 0;
};

StringProfile profile_of(const CrystalGraph& g, int x) {
    StringProfile p;
    p.eps.resize(g.degree - 1);
    p.back.resize(g.degree - 1);
    for (int c = 1; c <= g.degree - 1; ++c) {
        const StringStats s = string_stats(g, x, c);
        p.eps[c - 1] = s.epsilon;
        p.back[c - 1] = -s.delta;
        if (s.epsilon != -s.delta)
            p.centered = false;
        p.max_eps = std::max(p.max_eps, s.epsilon);
    }
    return p;
}

bool is_strict_zero_weight(const CrystalGraph& g, int x) {
    const StringProfile p = profile_of(g, x);
    return p.centered && p.max_eps <= 1;
}

int parity_ratio(const CrystalGraph& g) {
    if (g.degree < 1 || g.shape.size() % g.degree != 0)
        throw UsageError("parity mode needs the degree to divide the cell count");
    return g.shape.size() / g.degree;
}

}  // namespace

ZeroWeightSet zero_weight(const CrystalGraph& g, const ZeroWeightOptions& opts) {
    ZeroWeightSet out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        const StringProfile p = profile_of(g, v);
        if (!p.centered)
            continue;
        if (p.max_eps >= 2) {
            out.has_wide_strings = true;
            if (opts.strictness == Strictness::require_01)
                continue;
        }
        out.vertices.push_back(v);
    }
    return out;
}

Signature induced_sigma(const CrystalGraph& g, int x, const ZeroWeightOptions& opts) {
    if (x < 0 || x >= g.num_vertices())
        throw UsageError("vertex out of range");
    if (!is_strict_zero_weight(g, x))
        throw UsageError("vertex is not in the strict zero-weight set");
    const int k = opts.signature_mode == SignatureMode::parity ? parity_ratio(g) : 1;
    Signature s;
    s.reserve(g.degree - 1);
    for (int c = 1; c <= g.degree - 1; ++c) {
        const int eps = string_stats(g, x, c).epsilon;
        s.push_back((eps + k) % 2 == 0 ? 1 : -1);
    }
    return s;
}

std::optional<int> induced_d(const CrystalGraph& g, int x, int i,
                             const ZeroWeightOptions&) {
    if (x < 0 || x >= g.num_vertices())
        throw UsageError("vertex out of range");
    if (i < 2 || i > g.degree - 1)
        throw UsageError("edge color out of range 2..n-1");
    if (!is_strict_zero_weight(g, x))
        throw UsageError("vertex is not in the strict zero-weight set");
    const int eps_i = string_stats(g, x, i).epsilon;
    const int eps_prev = string_stats(g, x, i - 1).epsilon;
    if (eps_i == eps_prev)
        return std::nullopt;
    // raise first in the color whose lowering step remains
    std::vector<std::pair<bool, int>> steps;
    if (eps_i == 1)
        steps = {{true, i}, {true, i - 1}, {false, i}, {false, i - 1}};
    else
        steps = {{true, i - 1}, {true, i}, {false, i - 1}, {false, i}};
    int v = x;
    for (const auto& [raising, c] : steps) {
        v = raising ? g.raise_of(v, c) : g.lower_of(v, c);
        if (v == -1)
            throw InvariantError(
                "induced edge walk hit an undefined operator; the graph cannot be regular");
    }
    return v;
}

SignedColoredGraph build_g_of_x(const CrystalGraph& g, const ZeroWeightOptions& opts) {
    for (const AxiomReport& r : check_regular(crystal_to_digraph(g)))
        if (!r.passed)
            throw PrerequisiteError(r.axiom,
                                    "prerequisite failed: " + r.axiom + " does not hold");
    const ZeroWeightSet zw = zero_weight(g, opts);
    if (opts.strictness == Strictness::require_01 && zw.has_wide_strings)
        throw UsageError(
            "the zero-weight space has strings longer than one step each way; no edge "
            "construction is defined there, rerun with the general extractor to list it");

    SignedColoredGraph out;
    out.degree = g.degree;
    std::map<int, int> local;  // crystal vertex -> local index
    std::vector<int> members;
    for (int v : zw.vertices) {
        if (!is_strict_zero_weight(g, v))
            continue;  // allow_general may list wide vertices; edges only join centered ones
        local.emplace(v, static_cast<int>(members.size()));
        members.push_back(v);
    }
    for (int v : members) {
        out.tableaux.push_back(g.vertices[v]);
        out.signatures.push_back(induced_sigma(g, v, opts));
    }
    out.partner.assign(std::max(out.degree - 2, 0),
                       std::vector<int>(members.size(), -1));
    for (size_t k = 0; k < members.size(); ++k)
        for (int i = 2; i <= out.degree - 1; ++i) {
            const auto img = induced_d(g, members[k], i);
            if (!img)
                continue;
            auto it = local.find(*img);
            if (it == local.end())
                throw InvariantError("induced edge left the zero-weight space");
            if (it->second == static_cast<int>(k))
                throw InvariantError("induced edge fixed its endpoint");
            int& pk = out.partner[i - 2][k];
            if (pk != -1 && pk != it->second)
                throw InvariantError("induced edge is not single-valued");
            pk = it->second;
        }
    for (int i = 2; i <= out.degree - 1; ++i)
        for (int v = 0; v < out.num_vertices(); ++v) {
            const int w = out.partner[i - 2][v];
            if (w != -1 && out.partner[i - 2][w] != v)
                throw InvariantError("induced edge is not an involution");
        }
    return out;
}

namespace {

// Propagates a root assignment across a component: matched partners force
// each other, so one root image determines the whole component.
bool extend_component(const SignedColoredGraph& g1, const SignedColoredGraph& g2,
                      const std::vector<int>& comp, int root, int image,
                      std::vector<int>& mapping, std::vector<bool>& used) {
    if (g1.signatures[root] != g2.signatures[image])
        return false;
    std::vector<std::pair<int, int>> assigned;
    auto assign = [&](int v, int w) {
        mapping[v] = w;
        used[w] = true;
        assigned.emplace_back(v, w);
    };
    auto rollback = [&]() {
        for (const auto& [v, w] : assigned) {
            mapping[v] = -1;
            used[w] = false;
        }
    };
    if (used[image]) {
        return false;
    }
    assign(root, image);
    std::vector<int> queue{root};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        const int v = queue[qi];
        for (int c = 2; c <= g1.degree - 1; ++c) {
            const int u = g1.d(c, v);
            const int fu = g2.d(c, mapping[v]);
            if ((u == -1) != (fu == -1)) {
                rollback();
                return false;
            }
            if (u == -1)
                continue;
            if (mapping[u] == -1) {
                if (used[fu] || g1.signatures[u] != g2.signatures[fu]) {
                    rollback();
                    return false;
                }
                assign(u, fu);
                queue.push_back(u);
            } else if (mapping[u] != fu) {
                rollback();
                return false;
            }
        }
    }
    (void)comp;
    return true;
}

std::vector<std::vector<int>> signed_components(const SignedColoredGraph& g) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(g.num_vertices(), false);
    for (int s = 0; s < g.num_vertices(); ++s) {
        if (seen[s])
            continue;
        std::vector<int> comp{s};
        seen[s] = true;
        for (size_t qi = 0; qi < comp.size(); ++qi)
            for (int c = 2; c <= g.degree - 1; ++c) {
                const int u = g.d(c, comp[qi]);
                if (u != -1 && !seen[u]) {
                    seen[u] = true;
                    comp.push_back(u);
                }
            }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

// Backtracks over components; `emit` returns false to stop the enumeration.
template <typename Emit>
bool enumerate_isos(const SignedColoredGraph& g1, const SignedColoredGraph& g2,
                    const std::vector<std::vector<int>>& comps, size_t next,
                    std::vector<int>& mapping, std::vector<bool>& used, Emit&& emit) {
    if (next == comps.size())
        return emit(mapping);
    const std::vector<int>& comp = comps[next];
    const int root = comp.front();
    for (int image = 0; image < g2.num_vertices(); ++image) {
        if (!extend_component(g1, g2, comp, root, image, mapping, used))
            continue;
        if (!enumerate_isos(g1, g2, comps, next + 1, mapping, used, emit))
            return false;
        for (int v : comp) {
            used[mapping[v]] = false;
            mapping[v] = -1;
        }
    }
    return true;
}

}  // namespace

IsoResult iso(const SignedColoredGraph& g1, const SignedColoredGraph& g2) {
    IsoResult result;
    if (g1.degree != g2.degree || g1.num_vertices() != g2.num_vertices())
        return result;
    // signature multiset pruning
    std::map<Signature, int> counts;
    for (const Signature& s : g1.signatures)
        ++counts[s];
    for (const Signature& s : g2.signatures)
        --counts[s];
    for (const auto& [s, k] : counts)
        if (k != 0)
            return result;
    const auto comps = signed_components(g1);
    std::vector<int> mapping(g1.num_vertices(), -1);
    std::vector<bool> used(g2.num_vertices(), false);
    enumerate_isos(g1, g2, comps, 0, mapping, used, [&](const std::vector<int>& m) {
        result.found = true;
        result.mapping = m;
        return false;  // stop at the first
    });
    return result;
}

int count_isomorphisms(const SignedColoredGraph& g1, const SignedColoredGraph& g2,
                       int cap) {
    if (g1.degree != g2.degree || g1.num_vertices() != g2.num_vertices())
        return 0;
    const auto comps = signed_components(g1);
    std::vector<int> mapping(g1.num_vertices(), -1);
    std::vector<bool> used(g2.num_vertices(), false);
    int count = 0;
    enumerate_isos(g1, g2, comps, 0, mapping, used, [&](const std::vector<int>&) {
        ++count;
        return count < cap;
    });
    return count;
}

std::optional<Partition> identify(const SignedColoredGraph& g) {
    if (!is_connected(g))
        return std::nullopt;
    const int m = g.degree;
    std::optional<Partition> found;
    for (const Partition& lambda : partitions_of(m)) {
        if (!iso(build_deg(lambda), g).found)
            continue;
        if (found)
            return std::nullopt;  // not unique
        found = lambda;
    }
    return found;
}

VerifyResult verify_main(const Partition& lambda, int n) {
    if (lambda.size() != n)
        throw UsageError("the shape must have exactly n cells");
    VerifyResult result;
    const CrystalGraph crystal = build_crystal(lambda, n);
    const SignedColoredGraph induced = build_g_of_x(crystal);
    const SignedColoredGraph standard = build_deg(lambda);
    result.ok = true;
    std::string& rep = result.report;
    if (induced.tableaux != standard.tableaux) {
        result.ok = false;
        rep += "vertex sets differ: induced " + std::to_string(induced.num_vertices()) +
               ", standard " + std::to_string(standard.num_vertices()) + "\n";
    } else {
        for (int v = 0; v < induced.num_vertices(); ++v)
            if (induced.signatures[v] != standard.signatures[v]) {
                result.ok = false;
                rep += "signature differs at " + induced.tableaux[v].to_string() +
                       ": induced " + signature_to_string(induced.signatures[v]) +
                       ", standard " + signature_to_string(standard.signatures[v]) + "\n";
            }
        if (induced.partner != standard.partner) {
            result.ok = false;
            rep += "edge sets differ\n";
        }
    }
    if (result.ok)
        rep += "induced graph equals the standard graph on " +
               std::to_string(standard.num_vertices()) + " tableaux\n";
    return result;
}

VerifyResult verify_addcol(const Partition& mu, int columns, int n,
                           const ZeroWeightOptions& opts) {
    if (columns < 0)
        throw UsageError("column count must be non-negative");
    if (mu.length() > n)
        throw UsageError("the base shape must have at most n rows");
    if (mu.size() != n)
        throw UsageError("the base shape must have exactly n cells");
    std::vector<int> parts;
    for (int r = 0; r < n; ++r) {
        const int p = (r < mu.length() ? mu.part(r) : 0) + columns;
        if (p > 0)
            parts.push_back(p);
    }
    const Partition lambda{parts};
    VerifyResult result;
    const CrystalGraph crystal = build_crystal(lambda, n);
    const SignedColoredGraph induced = build_g_of_x(crystal, opts);
    const auto identified = identify(induced);
    Partition expected = mu;
    if (opts.signature_mode == SignatureMode::parity && (1 + columns) % 2 == 0)
        expected = mu.conjugate();
    result.ok = identified.has_value() && *identified == expected;
    result.report = "lambda=" + lambda.to_string() + " identified=" +
                    (identified ? identified->to_string() : std::string("none")) +
                    " expected=" + expected.to_string() + "\n";
    return result;
}

}  // namespace crystaldeg
