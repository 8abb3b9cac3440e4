#pragma once

// Reachability under tilting moves, and exhaustive enumeration of small
// Brauer complexes up to isomorphism.

#include "brauer/invariants.hpp"
#include "brauer/tilting.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

namespace brauer {

// ---------------------------------------------------------------------------
// Enumeration

/// Relabels `c` into its canonical labeling.
inline RibbonComplex canonical_relabel(const RibbonComplex& c) {
    const auto form = canonical_form(c);
    const int n = c.dart_count();
    std::vector<Dart> alpha(n), sigma(n);
    for (Dart d = 0; d < n; ++d) {
        alpha[form.relabel[d]] = form.relabel[c.alpha(d)];
        sigma[form.relabel[d]] = form.relabel[c.sigma(d)];
    }
    return RibbonComplex(std::move(alpha), std::move(sigma));
}

/// Number of automorphisms of a connected complex: the starting darts that
/// reproduce the minimal encoding.
inline int automorphism_count(const BrauerComplex& b) {
    const auto& c = b.complex();
    const auto best = canonical_form(b);
    std::vector<Dart> label;
    int count = 0;
    for (Dart start = 0; start < c.dart_count(); ++start) {
        const auto order = detail::bfs_order(c, start, label);
        std::vector<std::int32_t> code{c.dart_count()};
        for (Dart d : order) {
            code.push_back(label[c.alpha(d)]);
            code.push_back(label[c.sigma(d)]);
            code.push_back(b.dart_mult(d));
        }
        if (code == best.code) ++count;
    }
    return count;
}

namespace detail {

inline std::vector<RibbonComplex> grow(const std::vector<RibbonComplex>& smaller) {
    std::map<std::string, RibbonComplex> found;
    auto keep = [&](std::vector<Dart> alpha, std::vector<Dart> sigma) {
        RibbonComplex c(std::move(alpha), std::move(sigma));
        auto canon = canonical_relabel(c);
        found.emplace(canonical_form(canon).key(), std::move(canon));
    };
    for (const auto& c : smaller) {
        const int n = c.dart_count();
        std::vector<Dart> alpha = c.alpha_map();
        alpha.push_back(n + 1);
        alpha.push_back(n);
        for (Dart d1 = 0; d1 < n; ++d1) {
            // pendant edge: dart n in the corner after d1, n+1 alone
            std::vector<Dart> sigma = c.sigma_map();
            sigma.push_back(sigma[d1]);
            sigma[d1] = n;
            sigma.push_back(n + 1);
            keep(alpha, sigma);
            // edge between two corners
            for (Dart d2 = 0; d2 <= n; ++d2) {
                std::vector<Dart> s2 = sigma;
                s2[n + 1] = s2[d2];
                s2[d2] = n + 1;
                keep(alpha, s2);
            }
        }
    }
    std::vector<RibbonComplex> out;
    for (auto& [key, c] : found) out.push_back(std::move(c));
    return out;
}

} // namespace detail

/// All connected ribbon complexes with exactly `edges` edges, one per
/// isomorphism class, canonically labeled, in a deterministic order.
inline std::vector<RibbonComplex> enumerate_ribbon_complexes(int edges) {
    if (edges < 1) return {};
    std::vector<RibbonComplex> level{RibbonComplex({1, 0}, {0, 1}), RibbonComplex({1, 0}, {1, 0})};
    for (int e = 2; e <= edges; ++e) level = detail::grow(level);
    return level;
}

/// Every multiplicity assignment with values in 1..max_mult, one per
/// isomorphism class of the resulting Brauer complex.
inline std::vector<BrauerComplex> with_all_multiplicities(const RibbonComplex& c, int max_mult) {
    std::map<std::string, BrauerComplex> found;
    std::vector<int> mults(c.vertex_count(), 1);
    while (true) {
        auto b = BrauerComplex::with_vertex_mults(c, mults);
        found.emplace(canonical_form(b).key(), std::move(b));
        std::size_t i = 0;
        while (i < mults.size() && mults[i] == max_mult) mults[i++] = 1;
        if (i == mults.size()) break;
        ++mults[i];
    }
    std::vector<BrauerComplex> out;
    for (auto& [key, b] : found) out.push_back(std::move(b));
    return out;
}

/// All connected Brauer complexes with 1..max_edges edges and vertex
/// multiplicities in 1..max_mult.  `keep`, when given, filters the
/// underlying ribbon complexes.
inline std::vector<BrauerComplex> enumerate_complexes(int max_edges, int max_mult,
                                                      const std::function<bool(const RibbonComplex&)>& keep = {}) {
    std::vector<BrauerComplex> out;
    if (max_edges < 1) return out;
    std::vector<RibbonComplex> level{RibbonComplex({1, 0}, {0, 1}), RibbonComplex({1, 0}, {1, 0})};
    for (int e = 1; e <= max_edges; ++e) {
        if (e > 1) level = detail::grow(level);
        for (const auto& c : level) {
            if (keep && !keep(c)) continue;
            for (auto& b : with_all_multiplicities(c, max_mult)) out.push_back(std::move(b));
        }
    }
    return out;
}

/// Genus-0 complexes only.  Planar complexes stay planar when an edge is
/// removed, so growing only planar ones loses nothing.
inline std::vector<BrauerComplex> enumerate_planar(int max_edges, int max_mult) {
    std::vector<BrauerComplex> out;
    if (max_edges < 1) return out;
    std::vector<RibbonComplex> level{RibbonComplex({1, 0}, {0, 1}), RibbonComplex({1, 0}, {1, 0})};
    for (int e = 1; e <= max_edges; ++e) {
        if (e > 1) {
            level = detail::grow(level);
            std::erase_if(level, [](const RibbonComplex& c) { return genus(c) != 0; });
        }
        for (const auto& c : level)
            for (auto& b : with_all_multiplicities(c, max_mult)) out.push_back(std::move(b));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Orbit exploration

struct Transition {
    int from = 0;
    int to = 0;
    Dart edge = 0;
    MoveType type = MoveType::general;
};

struct OrbitReport {
    std::string seed_key;
    /// Reached complexes, seed first, one per isomorphism class; member i
    /// is obtained from the seed by the moves along the BFS tree.
    std::vector<BrauerComplex> members;
    std::vector<std::string> keys;
    std::vector<Transition> transitions;
    std::vector<int> parent;    // BFS tree, -1 for the seed
    std::vector<Dart> via_edge; // edge moved to reach the member
    std::map<MoveType, int> moves_by_type;
    int self_moves = 0; // moves returning an isomorphic complex
    bool frontier_exhausted = false;
    /// Every member reaches the seed again; only meaningful when the
    /// frontier is exhausted.
    bool symmetric = false;

    int index_of(const std::string& key) const {
        auto it = std::find(keys.begin(), keys.end(), key);
        return it == keys.end() ? -1 : static_cast<int>(it - keys.begin());
    }
};

inline OrbitReport explore(const BrauerComplex& seed, std::size_t max_size = 100000) {
    if (seed.complex().edge_count() < 2)
        throw Error(ErrorCode::single_edge_complex, "tilting needs at least two edges");
    OrbitReport report;
    std::unordered_map<std::string, int> index;
    auto add = [&](BrauerComplex b, std::string key, int parent, Dart edge) {
        index.emplace(key, static_cast<int>(report.members.size()));
        report.members.push_back(std::move(b));
        report.keys.push_back(std::move(key));
        report.parent.push_back(parent);
        report.via_edge.push_back(edge);
    };
    report.seed_key = canonical_form(seed).key();
    add(seed, report.seed_key, -1, -1);
    std::size_t head = 0;
    bool truncated = false;
    for (; head < report.members.size(); ++head) {
        const auto current = report.members[head];
        for (Dart e : current.complex().edge_ids()) {
            Move move;
            auto next = apply_move(current, e, &move);
            auto key = canonical_form(next).key();
            ++report.moves_by_type[move.type];
            auto it = index.find(key);
            int target;
            if (it != index.end()) {
                target = it->second;
            } else if (report.members.size() < max_size) {
                target = static_cast<int>(report.members.size());
                add(std::move(next), std::move(key), static_cast<int>(head), e);
            } else {
                truncated = true;
                continue;
            }
            if (target == static_cast<int>(head)) ++report.self_moves;
            report.transitions.push_back({static_cast<int>(head), target, e, move.type});
        }
        if (truncated) break;
    }
    report.frontier_exhausted = !truncated;
    if (report.frontier_exhausted) {
        std::vector<std::vector<int>> reverse(report.members.size());
        for (const auto& t : report.transitions) reverse[t.to].push_back(t.from);
        std::vector<char> seen(report.members.size(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v : reverse[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        report.symmetric = std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
    }
    return report;
}

/// Edges moved, in order, to get from the seed to member `i`.
inline std::vector<Dart> path_to(const OrbitReport& report, int i) {
    std::vector<Dart> edges;
    for (; report.parent[i] >= 0; i = report.parent[i]) edges.push_back(report.via_edge[i]);
    std::reverse(edges.begin(), edges.end());
    return edges;
}

// ---------------------------------------------------------------------------
// Census

/// Strongly connected components (iterative Tarjan); returns the component
/// id of every node.
inline std::vector<int> strongly_connected_components(const std::vector<std::vector<int>>& graph) {
    const int n = static_cast<int>(graph.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<char> on_stack(n, 0);
    int counter = 0, components = 0;
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        std::vector<std::pair<int, std::size_t>> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& [u, next] = call.back();
            if (next < graph[u].size()) {
                const int v = graph[u][next++];
                if (index[v] < 0) {
                    index[v] = low[v] = counter++;
                    stack.push_back(v);
                    on_stack[v] = 1;
                    call.emplace_back(v, 0);
                } else if (on_stack[v]) {
                    low[u] = std::min(low[u], index[v]);
                }
                continue;
            }
            if (low[u] == index[u]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = components;
                } while (w != u);
                ++components;
            }
            const int done = u;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
        }
    }
    return comp;
}

struct CensusGroup {
    InvariantSignature signature;
    int classes = 0;
    int orbits = 0;            // components of the symmetric move relation
    int strong_components = 0; // components of the directed move relation
    bool separated = false;    // exactly one orbit in the group
};

struct Census {
    int max_edges = 0;
    int max_mult = 0;
    std::vector<BrauerComplex> complexes;
    std::vector<InvariantSignature> signatures;
    std::vector<int> orbit_of;    // symmetric-closure component per complex
    std::vector<int> strong_of;   // strongly connected component per complex
    std::vector<CensusGroup> groups;
    bool moves_preserve_signature = true;
};

inline Census census_of(std::vector<BrauerComplex> complexes) {
    Census census;
    const int n = static_cast<int>(complexes.size());
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < n; ++i) index.emplace(canonical_form(complexes[i]).key(), i);
    std::vector<std::vector<int>> graph(n);
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    census.signatures.reserve(n);
    for (const auto& b : complexes) census.signatures.push_back(signature(b));
    for (int i = 0; i < n; ++i) {
        const auto& b = complexes[i];
        if (b.complex().edge_count() < 2) continue;
        for (Dart e : b.complex().edge_ids()) {
            const auto next = apply_move(b, e);
            auto it = index.find(canonical_form(next).key());
            if (it == index.end()) throw Error(ErrorCode::search_exhausted, "move left the enumerated set");
            graph[i].push_back(it->second);
            uf[find(i)] = find(it->second);
            if (census.signatures[it->second] != census.signatures[i]) census.moves_preserve_signature = false;
        }
    }
    census.strong_of = strongly_connected_components(graph);
    std::map<int, int> dense;
    for (int i = 0; i < n; ++i) census.orbit_of.push_back(dense.emplace(find(i), static_cast<int>(dense.size())).first->second);

    std::map<InvariantSignature, std::vector<int>> by_signature;
    for (int i = 0; i < n; ++i) by_signature[census.signatures[i]].push_back(i);
    for (const auto& [sig, members] : by_signature) {
        CensusGroup g;
        g.signature = sig;
        g.classes = static_cast<int>(members.size());
        std::vector<int> orbits, strong;
        for (int i : members) {
            orbits.push_back(census.orbit_of[i]);
            strong.push_back(census.strong_of[i]);
        }
        std::sort(orbits.begin(), orbits.end());
        std::sort(strong.begin(), strong.end());
        g.orbits = static_cast<int>(std::unique(orbits.begin(), orbits.end()) - orbits.begin());
        g.strong_components = static_cast<int>(std::unique(strong.begin(), strong.end()) - strong.begin());
        g.separated = g.orbits == 1;
        census.groups.push_back(std::move(g));
    }
    census.complexes = std::move(complexes);
    return census;
}

inline Census census(int max_edges, int max_mult) {
    auto c = census_of(enumerate_complexes(max_edges, max_mult));
    c.max_edges = max_edges;
    c.max_mult = max_mult;
    return c;
}

} // namespace brauer
