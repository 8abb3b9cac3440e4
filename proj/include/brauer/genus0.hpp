#pragma once

// Genus-0 machinery: replayable move logs, bounded move searches, reduction
// to a hub vertex, double perimeters and dual trees of loop graphs.

#include "brauer/tilting.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace brauer {

// ---------------------------------------------------------------------------
// Move logs

/// 64-bit FNV-1a of the canonical encoding, as 16 hex digits.
inline std::string canonical_hash(const BrauerComplex& b) {
    const auto code = canonical_form(b).code;
    std::uint64_t h = 1469598103934665603ull;
    for (std::int32_t v : code) {
        auto u = static_cast<std::uint32_t>(v);
        for (int i = 0; i < 4; ++i) {
            h ^= (u >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct LoggedMove {
    Dart edge = 0;
    MoveType type = MoveType::general;
    std::string hash_after;
};

struct MoveLog {
    std::vector<LoggedMove> moves;

    bool empty() const { return moves.empty(); }
    std::size_t size() const { return moves.size(); }

    /// Applies the move to `b` and records it.
    BrauerComplex apply(const BrauerComplex& b, Dart edge) {
        Move m;
        auto next = apply_move(b, edge, &m);
        moves.push_back({edge, m.type, canonical_hash(next)});
        return next;
    }

    void append(const MoveLog& other) { moves.insert(moves.end(), other.moves.begin(), other.moves.end()); }
};

/// Replays `log` from `source`, checking every move type and intermediate
/// hash; throws search_exhausted on the first disagreement.
inline BrauerComplex replay(const BrauerComplex& source, const MoveLog& log) {
    BrauerComplex b = source;
    for (std::size_t i = 0; i < log.moves.size(); ++i) {
        const auto& step = log.moves[i];
        Move m;
        b = apply_move(b, step.edge, &m);
        if (m.type != step.type || canonical_hash(b) != step.hash_after)
            throw Error(ErrorCode::search_exhausted, "move log diverges at step " + std::to_string(i));
    }
    return b;
}

/// The same moves expressed on a relabeled copy of the source, where
/// `perm` maps source darts to the copy's darts.
inline MoveLog relabel_log(const MoveLog& log, const RibbonComplex& source, std::span<const Dart> perm) {
    MoveLog out = log;
    for (auto& m : out.moves) m.edge = std::min(perm[m.edge], perm[source.alpha(m.edge)]);
    return out;
}

// ---------------------------------------------------------------------------
// Bounded search

inline int search_depth() {
    if (const char* env = std::getenv("BRAUER_SEARCH_DEPTH")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return 12;
}

/// Darts that change vertex when `edge` is moved.
inline std::vector<Dart> moved_darts(const BrauerComplex& b, Dart edge) {
    const auto& c = b.complex();
    const Dart x = edge, y = c.alpha(edge);
    if (classify_edge(b, edge) == MoveType::leaf_shift) return {c.sigma(x) == x ? y : x};
    return {x, y};
}

/// A dart of the vertex of `anchor` that stays put when `edge` moves, so the
/// vertex can be followed through the move.
inline Dart follow_vertex(const BrauerComplex& b, Dart anchor, Dart edge) {
    const auto moved = moved_darts(b, edge);
    const auto& c = b.complex();
    Dart d = anchor;
    do {
        if (std::find(moved.begin(), moved.end(), d) == moved.end()) return d;
        d = c.sigma(d);
    } while (d != anchor);
    throw Error(ErrorCode::search_exhausted, "vertex vanished during a move");
}

/// Canonical key with the vertex of `hub` marked.
inline std::string marked_key(const BrauerComplex& b, Dart hub) {
    const auto& c = b.complex();
    std::vector<std::int32_t> colors(c.dart_count());
    const int hv = c.vertex_of(hub);
    for (Dart d = 0; d < c.dart_count(); ++d) colors[d] = 2 * b.dart_mult(d) + (c.vertex_of(d) == hv ? 1 : 0);
    return detail::canonical_with_colors(c, colors).key();
}

struct SearchResult {
    BrauerComplex complex;
    Dart hub = 0;
    MoveLog log;
};

using HubPredicate = std::function<bool(const BrauerComplex&, Dart hub)>;

/// Breadth-first search over move sequences of length <= depth for a
/// complex satisfying `goal`.  States are identified up to isomorphism
/// fixing the hub vertex.  Returns the shortest sequence found.
inline std::optional<SearchResult> bounded_search(const BrauerComplex& start, Dart hub, const HubPredicate& goal,
                                                  int depth, std::size_t max_states = 500000) {
    if (goal(start, hub)) return SearchResult{start, hub, {}};
    struct Node {
        BrauerComplex b;
        Dart hub;
        int parent;
        Dart edge;
        int depth;
    };
    std::vector<Node> nodes{{start, hub, -1, -1, 0}};
    std::unordered_map<std::string, int> seen{{marked_key(start, hub), 0}};
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        if (nodes[head].depth >= depth) break;
        const auto b = nodes[head].b;
        const Dart h = nodes[head].hub;
        for (Dart e : b.complex().edge_ids()) {
            const Dart nh = follow_vertex(b, h, e);
            auto next = apply_move(b, e);
            auto key = marked_key(next, nh);
            if (!seen.emplace(std::move(key), static_cast<int>(nodes.size())).second) continue;
            nodes.push_back({std::move(next), nh, static_cast<int>(head), e, nodes[head].depth + 1});
            if (goal(nodes.back().b, nh)) {
                std::vector<int> chain;
                for (int i = static_cast<int>(nodes.size()) - 1; i > 0; i = nodes[i].parent) chain.push_back(i);
                SearchResult result{start, hub, {}};
                for (auto it = chain.rbegin(); it != chain.rend(); ++it) result.complex = result.log.apply(result.complex, nodes[*it].edge);
                result.hub = nh;
                return result;
            }
            if (nodes.size() >= max_states) return std::nullopt;
        }
    }
    return std::nullopt;
}

inline SearchResult require_search(const BrauerComplex& start, Dart hub, const HubPredicate& goal,
                                   const std::string& what) {
    auto found = bounded_search(start, hub, goal, search_depth());
    if (!found)
        throw Error(ErrorCode::search_exhausted,
                    what + ": no move sequence within depth " + std::to_string(search_depth()));
    return std::move(*found);
}

// ---------------------------------------------------------------------------
// Reduction

inline void require_genus0(const BrauerComplex& b) {
    if (genus(b.complex()) != 0)
        throw Error(ErrorCode::nonzero_genus, "complex has genus " + std::to_string(genus(b.complex())));
}

inline int degree_at(const BrauerComplex& b, Dart hub) {
    return b.complex().vertex_degree(b.complex().vertex_of(hub));
}

inline bool all_edges_at(const BrauerComplex& b, Dart hub) {
    const auto& c = b.complex();
    const int hv = c.vertex_of(hub);
    for (Dart e : c.edge_ids())
        if (c.vertex_of(e) != hv && c.vertex_of(c.alpha(e)) != hv) return false;
    return true;
}

inline bool is_leaf_edge(const RibbonComplex& c, Dart e) {
    return c.sigma(e) == e || c.sigma(c.alpha(e)) == c.alpha(e);
}

inline bool is_loop_edge(const RibbonComplex& c, Dart e) { return c.vertex_of(e) == c.vertex_of(c.alpha(e)); }

inline int count_loops(const RibbonComplex& c) {
    int n = 0;
    for (Dart e : c.edge_ids()) n += is_loop_edge(c, e);
    return n;
}

/// Edges that are neither loops nor leaves.  Once every edge is at the
/// hub these are the multiedges.
inline int count_multiedge_edges(const RibbonComplex& c) {
    int n = 0;
    for (Dart e : c.edge_ids())
        if (!is_loop_edge(c, e) && !is_leaf_edge(c, e)) ++n;
    return n;
}

inline int count_dangling(const RibbonComplex& c) {
    int n = 0;
    for (int v = 0; v < c.vertex_count(); ++v) n += c.vertex_degree(v) == 1;
    return n;
}

struct ReducedForm {
    BrauerComplex complex;
    Dart hub = 0; // a dart at the hub vertex
    int type = 1; // 1: no loops, 2: every non-leaf edge is a loop
    MoveLog log;
};

/// Vertex of maximal degree, ties by smallest representative dart.
inline Dart default_hub(const RibbonComplex& c) {
    int best = 0;
    for (int v = 1; v < c.vertex_count(); ++v)
        if (c.vertex_degree(v) > c.vertex_degree(best)) best = v;
    return c.vertex_rep(best);
}

/// Drives `b` to a reduced form around the vertex of `hub` by moves that
/// never decrease the hub degree.
inline ReducedForm reduce(const BrauerComplex& b, Dart hub) {
    require_genus0(b);
    const auto& c0 = b.complex();
    if (c0.edge_count() < 2) throw Error(ErrorCode::single_edge_complex, "reduction needs at least two edges");
    if (hub < 0 || hub >= c0.dart_count()) throw Error(ErrorCode::unknown_edge, "hub dart out of range");
    ReducedForm r{b, hub, 1, {}};
    // Gather every edge at the hub: an end that follows a hub edge in its
    // rotation slides onto the hub.
    while (!all_edges_at(r.complex, r.hub)) {
        const auto& c = r.complex.complex();
        const int hv = c.vertex_of(r.hub);
        Dart pick = -1;
        for (Dart d = 0; d < c.dart_count() && pick < 0; ++d) {
            if (c.vertex_of(d) == hv || c.vertex_of(c.alpha(d)) == hv) continue;
            const Dart before = c.sigma_inv(d);
            if (before != d && c.vertex_of(c.alpha(before)) == hv && c.edge_of(before) != c.edge_of(d)) pick = d;
        }
        if (pick < 0) throw Error(ErrorCode::search_exhausted, "no edge can be pulled onto the hub");
        const int before_deg = degree_at(r.complex, r.hub);
        const Dart e = c.edge_of(pick);
        const Dart nh = follow_vertex(r.complex, r.hub, e);
        r.complex = r.log.apply(r.complex, e);
        r.hub = nh;
        if (degree_at(r.complex, r.hub) <= before_deg)
            throw Error(ErrorCode::search_exhausted, "hub degree did not grow");
    }
    // Loops and multiedges cannot coexist at maximal hub degree.
    while (count_loops(r.complex.complex()) > 0 && count_multiedge_edges(r.complex.complex()) > 0) {
        const int deg = degree_at(r.complex, r.hub);
        auto found = require_search(
            r.complex, r.hub,
            [deg](const BrauerComplex& x, Dart h) { return all_edges_at(x, h) && degree_at(x, h) > deg; },
            "turning a multiedge into a loop");
        r.complex = found.complex;
        r.hub = found.hub;
        r.log.append(found.log);
    }
    r.type = count_loops(r.complex.complex()) > 0 ? 2 : 1;
    return r;
}

inline ReducedForm reduce(const BrauerComplex& b) { return reduce(b, default_hub(b.complex())); }

// ---------------------------------------------------------------------------
// Double perimeters

/// (perimeter, external perimeter) per face, ascending.  The external
/// perimeter counts boundary darts whose edge also bounds another face.
using DoublePerimeters = std::vector<std::pair<int, int>>;

inline DoublePerimeters double_perimeters(const RibbonComplex& c) {
    const auto fs = faces(c);
    const auto fi = face_index(c);
    DoublePerimeters out;
    for (std::size_t f = 0; f < fs.size(); ++f) {
        int external = 0;
        for (Dart d : fs[f].darts) external += fi[c.alpha(d)] != static_cast<int>(f);
        out.emplace_back(fs[f].perimeter(), external);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_reduced_type2(const BrauerComplex& b, Dart hub) {
    const auto& c = b.complex();
    if (!all_edges_at(b, hub)) return false;
    int loops = 0;
    for (Dart e : c.edge_ids()) {
        if (is_loop_edge(c, e)) {
            ++loops;
        } else if (!is_leaf_edge(c, e)) {
            return false;
        }
    }
    return loops > 0;
}

/// Checks parity, range and sum constraints of a double-perimeter target
/// against the perimeters of `b`.
inline void check_double_target(const BrauerComplex& b, const DoublePerimeters& target) {
    const auto& c = b.complex();
    std::vector<int> want;
    int sum = 0;
    for (const auto& [P, p] : target) {
        want.push_back(P);
        sum += p;
        if (p < 1 || p > P || (P - p) % 2 != 0)
            throw Error(ErrorCode::infeasible_target,
                        "pair (" + std::to_string(P) + "," + std::to_string(p) + ") violates 1 <= p <= P, p = P mod 2");
    }
    std::sort(want.begin(), want.end());
    if (want != perimeters(c)) throw Error(ErrorCode::infeasible_target, "perimeter multisets differ");
    const int g = static_cast<int>(target.size());
    if (sum != 2 * g - 2)
        throw Error(ErrorCode::infeasible_target, "external perimeters must sum to " + std::to_string(2 * g - 2));
}

/// Steps of the +-2 balancing algorithm from the current external
/// perimeters to the target, faces paired by perimeter.
inline std::vector<DoublePerimeters> balancing_steps(DoublePerimeters current, const DoublePerimeters& target) {
    std::sort(current.begin(), current.end());
    std::vector<DoublePerimeters> steps;
    auto q = current;
    auto p = target;
    std::sort(p.begin(), p.end());
    while (q != p) {
        std::size_t k = 0;
        while (q[k] == p[k]) ++k;
        std::size_t j = k + 1;
        if (q[k].second < p[k].second) {
            while (q[j].second <= p[j].second) ++j;
            q[k].second += 2;
            q[j].second -= 2;
        } else {
            while (q[j].second >= p[j].second) ++j;
            q[k].second -= 2;
            q[j].second += 2;
        }
        steps.push_back(q);
        std::sort(steps.back().begin(), steps.back().end());
    }
    return steps;
}

/// Moves `b`, a reduced graph of type 2 around `hub`, to one whose double
/// perimeters equal `target`.  Each +-2 step is a bounded search.
inline std::pair<BrauerComplex, MoveLog> equalize_double_perimeters(const BrauerComplex& b, Dart hub,
                                                                     const DoublePerimeters& target) {
    require_genus0(b);
    if (!is_reduced_type2(b, hub)) throw Error(ErrorCode::wrong_type, "expected a reduced graph of type 2");
    check_double_target(b, target);
    auto sorted_target = target;
    std::sort(sorted_target.begin(), sorted_target.end());
    BrauerComplex cur = b;
    Dart h = hub;
    MoveLog log;
    // faces of equal perimeter are paired in ascending order of external perimeter
    for (const auto& step : balancing_steps(double_perimeters(cur.complex()), sorted_target)) {
        auto found = require_search(
            cur, h,
            [&step](const BrauerComplex& x, Dart hh) {
                return is_reduced_type2(x, hh) && double_perimeters(x.complex()) == step;
            },
            "double-perimeter step");
        cur = found.complex;
        h = found.hub;
        log.append(found.log);
    }
    return {cur, log};
}

// ---------------------------------------------------------------------------
// Dual trees of loop graphs

/// Plane tree dual to a graph whose edges are all loops at one vertex.
/// Nodes are faces; tree edge k is the loop with edge id `loop[k]`;
/// rotation[v] lists incident tree edges in the boundary order of face v.
struct DualTree {
    int nodes = 0;
    std::vector<std::pair<int, int>> ends; // per tree edge: (face of loop dart, face of partner)
    std::vector<Dart> loop;
    std::vector<std::vector<int>> rotation;
    int hub_mult = 1;

    std::vector<int> degrees() const {
        std::vector<int> out;
        for (const auto& r : rotation) out.push_back(static_cast<int>(r.size()));
        return out;
    }
};

inline DualTree dual_tree(const BrauerComplex& b) {
    const auto& c = b.complex();
    if (c.vertex_count() != 1) {
        for (Dart e : c.edge_ids())
            if (is_leaf_edge(c, e)) throw Error(ErrorCode::has_leaves, "dual trees need a graph without leaves");
        throw Error(ErrorCode::wrong_type, "dual trees need all edges to be loops at one vertex");
    }
    require_genus0(b);
    const auto fs = faces(c);
    const auto fi = face_index(c);
    DualTree t;
    t.nodes = static_cast<int>(fs.size());
    t.rotation.resize(fs.size());
    t.hub_mult = b.dart_mult(0);
    std::map<Dart, int> edge_index;
    for (Dart e : c.edge_ids()) {
        edge_index[e] = static_cast<int>(t.loop.size());
        t.loop.push_back(e);
        t.ends.emplace_back(fi[e], fi[c.alpha(e)]);
    }
    for (std::size_t f = 0; f < fs.size(); ++f)
        for (Dart d : fs[f].darts) t.rotation[f].push_back(edge_index[c.edge_of(d)]);
    return t;
}

/// Rebuilds the loop graph: tree edge k becomes darts 2k (in face
/// ends[k].first) and 2k+1; each face rotation is the phi-cycle.
inline BrauerComplex from_dual_tree(const DualTree& t) {
    const int n = 2 * static_cast<int>(t.ends.size());
    if (n == 0) throw Error(ErrorCode::wrong_type, "tree without edges");
    std::vector<Dart> alpha(n), phi(n, -1);
    for (int k = 0; k < n / 2; ++k) {
        alpha[2 * k] = 2 * k + 1;
        alpha[2 * k + 1] = 2 * k;
    }
    for (int v = 0; v < t.nodes; ++v) {
        const auto& rot = t.rotation[v];
        std::vector<Dart> darts;
        for (int k : rot) {
            if (t.ends[k].first == v && t.ends[k].second == v)
                throw Error(ErrorCode::inconsistent_partition, "tree edge is a loop");
            darts.push_back(t.ends[k].first == v ? 2 * k : 2 * k + 1);
        }
        for (std::size_t i = 0; i < darts.size(); ++i) phi[darts[i]] = darts[(i + 1) % darts.size()];
    }
    std::vector<Dart> sigma(n);
    for (Dart d = 0; d < n; ++d) sigma[d] = phi[alpha[d]];
    RibbonComplex c(std::move(alpha), std::move(sigma));
    if (c.vertex_count() != 1) throw Error(ErrorCode::inconsistent_partition, "rotations do not describe a plane tree");
    return BrauerComplex::uniform(std::move(c), t.hub_mult);
}

/// Flip-over (type-2 move) or flip (type-3 move) of the loop `tree_edge`,
/// read on the dual tree.
inline DualTree tree_move(const DualTree& t, int tree_edge) {
    const auto b = from_dual_tree(t);
    return dual_tree(apply_move(b, 2 * tree_edge));
}

} // namespace brauer
