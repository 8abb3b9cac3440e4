#pragma once

// Extended quiver of a Brauer complex.
//
// Quiver vertices are the edges of the complex (dense index by ascending
// edge id).  There is one arrow per dart d, running from edge(d) to
// edge(sigma(d)); it is the angle at the vertex of d between d and
// sigma(d).  A-cycles are the sigma-orbits.  G-cycles are the orbits of
// d -> alpha(sigma(d)), which is the unique composable continuation off the
// A-cycle; the G-cycle of arrow d is the face containing sigma(d).

#include "brauer/ribbon.hpp"

#include <map>
#include <string>
#include <vector>

namespace brauer {

struct Arrow {
    int source = 0;
    int target = 0;
    int a_cycle = 0;
    int a_position = 0;
    int g_cycle = 0;
    int g_position = 0;
    bool formal = false;
    std::string name;
};

struct ExtendedQuiver {
    int vertex_count = 0;
    /// Edge id in the source complex for every quiver vertex, when known.
    std::vector<Dart> vertex_edge;
    /// Arrow i corresponds to dart i of the source complex.
    std::vector<Arrow> arrows;
    /// Arrow ids in cyclic order.
    std::vector<std::vector<int>> a_cycles;
    std::vector<std::vector<int>> g_cycles;
    std::vector<int> a_cycle_mult;

    int arrow_count() const { return static_cast<int>(arrows.size()); }

    /// Fills the position/cycle fields of every arrow from the cycle lists.
    void index_cycles() {
        for (std::size_t c = 0; c < a_cycles.size(); ++c)
            for (std::size_t p = 0; p < a_cycles[c].size(); ++p) {
                arrows[a_cycles[c][p]].a_cycle = static_cast<int>(c);
                arrows[a_cycles[c][p]].a_position = static_cast<int>(p);
            }
        for (std::size_t c = 0; c < g_cycles.size(); ++c)
            for (std::size_t p = 0; p < g_cycles[c].size(); ++p) {
                arrows[g_cycles[c][p]].g_cycle = static_cast<int>(c);
                arrows[g_cycles[c][p]].g_position = static_cast<int>(p);
            }
        for (auto& arrow : arrows)
            arrow.formal = a_cycles[arrow.a_cycle].size() == 1 && a_cycle_mult[arrow.a_cycle] == 1;
    }
};

/// Dense quiver-vertex index of every edge id (ascending edge ids).
inline std::map<Dart, int> edge_indices(const RibbonComplex& c) {
    std::map<Dart, int> out;
    for (Dart e : c.edge_ids()) out.emplace(e, static_cast<int>(out.size()));
    return out;
}

inline ExtendedQuiver derive_quiver(const BrauerComplex& b) {
    const auto& c = b.complex();
    const int n = c.dart_count();
    const auto index = edge_indices(c);
    ExtendedQuiver q;
    q.vertex_count = c.edge_count();
    for (const auto& [edge, i] : index) q.vertex_edge.push_back(edge);
    q.arrows.resize(n);
    for (Dart d = 0; d < n; ++d) {
        q.arrows[d].source = index.at(c.edge_of(d));
        q.arrows[d].target = index.at(c.edge_of(c.sigma(d)));
        q.arrows[d].name = std::to_string(d);
    }
    q.a_cycles = c.vertex_rotations();
    for (const auto& cycle : q.a_cycles) q.a_cycle_mult.push_back(b.dart_mult(cycle.front()));
    std::vector<Dart> g_next(n);
    for (Dart d = 0; d < n; ++d) g_next[d] = c.alpha(c.sigma(d));
    q.g_cycles = detail::orbits(g_next);
    q.index_cycles();
    return q;
}

/// Arrow-loops at quiver vertex `v` (arrows with source == target == v).
inline std::vector<int> loops_at(const ExtendedQuiver& q, int v) {
    std::vector<int> out;
    for (int a = 0; a < q.arrow_count(); ++a)
        if (q.arrows[a].source == v && q.arrows[a].target == v) out.push_back(a);
    return out;
}

enum class LoopKind { none, leaf_loop, face_bounding_loop };

inline std::string_view to_string(LoopKind kind) {
    switch (kind) {
    case LoopKind::none: return "none";
    case LoopKind::leaf_loop: return "leaf-loop";
    case LoopKind::face_bounding_loop: return "face-bounding-loop";
    }
    return "none";
}

/// Classifies the arrow-loops at the quiver vertex of edge id `edge`.
inline LoopKind loop_classification(const ExtendedQuiver& q, Dart edge) {
    int v = -1;
    for (int i = 0; i < q.vertex_count; ++i)
        if (q.vertex_edge[i] == edge) v = i;
    if (v < 0) throw Error(ErrorCode::unknown_edge, "no edge with id " + std::to_string(edge));
    for (int a : loops_at(q, v)) {
        if (q.a_cycles[q.arrows[a].a_cycle].size() == 1) return LoopKind::leaf_loop;
        if (q.g_cycles[q.arrows[a].g_cycle].size() == 1) return LoopKind::face_bounding_loop;
    }
    return LoopKind::none;
}

/// Rebuilds the Brauer complex from the two arrow partitions.  Darts are the
/// arrows; sigma is the A-cycle successor and alpha(sigma(d)) is the G-cycle
/// successor of d.
inline BrauerComplex quiver_to_complex(const ExtendedQuiver& q) {
    const int n = q.arrow_count();
    auto fail = [](const std::string& why) { throw Error(ErrorCode::inconsistent_partition, why); };
    std::vector<Dart> sigma(n, -1), g_next(n, -1);
    std::vector<int> mult(n, 0);
    for (std::size_t c = 0; c < q.a_cycles.size(); ++c) {
        const auto& cyc = q.a_cycles[c];
        for (std::size_t p = 0; p < cyc.size(); ++p) {
            if (cyc[p] < 0 || cyc[p] >= n || sigma[cyc[p]] != -1) fail("A-cycles do not partition the arrows");
            sigma[cyc[p]] = cyc[(p + 1) % cyc.size()];
            mult[cyc[p]] = c < q.a_cycle_mult.size() ? q.a_cycle_mult[c] : 1;
        }
    }
    for (const auto& cyc : q.g_cycles)
        for (std::size_t p = 0; p < cyc.size(); ++p) {
            if (cyc[p] < 0 || cyc[p] >= n || g_next[cyc[p]] != -1) fail("G-cycles do not partition the arrows");
            g_next[cyc[p]] = cyc[(p + 1) % cyc.size()];
        }
    for (Dart d = 0; d < n; ++d)
        if (sigma[d] < 0 || g_next[d] < 0) fail("arrow " + std::to_string(d) + " missing from a partition");
    for (Dart d = 0; d < n; ++d) {
        if (q.arrows[d].target != q.arrows[sigma[d]].source)
            fail("A-cycle is not composable at arrow " + q.arrows[d].name);
        if (q.arrows[d].target != q.arrows[g_next[d]].source)
            fail("G-cycle is not composable at arrow " + q.arrows[d].name);
    }
    std::vector<Dart> alpha(n, -1);
    for (Dart d = 0; d < n; ++d) alpha[sigma[d]] = g_next[d];
    for (Dart d = 0; d < n; ++d) {
        if (alpha[d] == d || alpha[alpha[d]] != d)
            fail("partitions do not pair the arrows leaving quiver vertex " +
                 std::to_string(q.arrows[d].source));
        if (q.arrows[d].source != q.arrows[alpha[d]].source)
            fail("paired arrows leave different quiver vertices");
    }
    std::vector<int> per_vertex(q.vertex_count, 0);
    for (Dart d = 0; d < n; ++d) ++per_vertex[q.arrows[d].source];
    for (int v = 0; v < q.vertex_count; ++v)
        if (per_vertex[v] != 2) fail("quiver vertex " + std::to_string(v) + " does not lie on exactly two A-cycle arrows");
    return BrauerComplex(RibbonComplex(std::move(alpha), std::move(sigma)), std::move(mult));
}

} // namespace brauer
