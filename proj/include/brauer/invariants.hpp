#pragma once

// Derived-equivalence invariants of a Brauer complex.

#include "brauer/algebra.hpp"
#include "brauer/ribbon.hpp"

#include <string>
#include <vector>

namespace brauer {

struct InvariantSignature {
    int n = 0; // edges of the complex = simple modules
    std::vector<int> perimeters;
    std::vector<int> mults;
    int genus = 0;
    bool bipartite = false;
    int center_dim = 0;

    bool operator==(const InvariantSignature&) const = default;
    auto operator<=>(const InvariantSignature&) const = default;
};

/// Two-colourability of the 1-skeleton.  A loop edge rules it out.
inline bool is_bipartite(const RibbonComplex& c) {
    std::vector<int> color(c.vertex_count(), -1);
    std::vector<std::vector<int>> adj(c.vertex_count());
    for (Dart e : c.edge_ids()) {
        const int u = c.vertex_of(e), v = c.vertex_of(c.alpha(e));
        if (u == v) return false;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (int s = 0; s < c.vertex_count(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v : adj[u]) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline InvariantSignature signature(const BrauerComplex& b) {
    const auto& c = b.complex();
    InvariantSignature s;
    s.n = c.edge_count();
    s.perimeters = perimeters(c);
    s.mults = b.mult_multiset();
    s.genus = genus(c);
    s.bipartite = is_bipartite(c);
    s.center_dim = center_formula(derive_quiver(b)).dim;
    return s;
}

/// Names of the fields on which the signatures differ; empty when the
/// invariants cannot tell the complexes apart.
inline std::vector<std::string> compare(const InvariantSignature& a, const InvariantSignature& b) {
    std::vector<std::string> out;
    if (a.n != b.n) out.emplace_back("n");
    if (a.perimeters != b.perimeters) out.emplace_back("perimeters");
    if (a.mults != b.mults) out.emplace_back("mults");
    if (a.genus != b.genus) out.emplace_back("genus");
    if (a.bipartite != b.bipartite) out.emplace_back("bipartite");
    if (a.center_dim != b.center_dim) out.emplace_back("center_dim");
    return out;
}

} // namespace brauer
