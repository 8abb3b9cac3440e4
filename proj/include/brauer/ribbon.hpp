#pragma once

// Half-edge (dart) model of Brauer complexes.
//
// A complex on 2E darts is a pair of permutations: `alpha`, the fixed-point
// free involution pairing the two halves of each edge, and `sigma`, the
// counter-clockwise rotation of darts around each vertex.  Faces are the
// orbits of phi = sigma o alpha, i.e. phi(d) = sigma(alpha(d)).

#include "brauer/error.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace brauer {

using Dart = int;

namespace detail {

inline bool is_permutation_of_range(std::span<const Dart> p) {
    std::vector<char> seen(p.size(), 0);
    for (Dart d : p) {
        if (d < 0 || static_cast<std::size_t>(d) >= p.size() || seen[d]) return false;
        seen[d] = 1;
    }
    return true;
}

/// Orbits of a permutation, each starting at its smallest element, ordered
/// by that element.
inline std::vector<std::vector<Dart>> orbits(std::span<const Dart> perm) {
    std::vector<std::vector<Dart>> out;
    std::vector<char> seen(perm.size(), 0);
    for (Dart start = 0; start < static_cast<Dart>(perm.size()); ++start) {
        if (seen[start]) continue;
        std::vector<Dart> cycle;
        for (Dart d = start; !seen[d]; d = perm[d]) {
            seen[d] = 1;
            cycle.push_back(d);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

} // namespace detail

struct Face {
    std::vector<Dart> darts; // phi-orbit, starting at its smallest dart
    int perimeter() const { return static_cast<int>(darts.size()); }
};

class RibbonComplex {
public:
    RibbonComplex() = default;

    /// Both arguments must be permutations of 0..N-1 with equal N; the
    /// remaining invariants are reported by validate().
    RibbonComplex(std::vector<Dart> alpha, std::vector<Dart> sigma,
                  std::map<Dart, std::string> edge_labels = {})
        : alpha_(std::move(alpha)), sigma_(std::move(sigma)), edge_labels_(std::move(edge_labels)) {
        if (alpha_.size() != sigma_.size())
            throw Error(ErrorCode::not_a_permutation, "alpha and sigma act on different dart sets");
        if (!detail::is_permutation_of_range(alpha_))
            throw Error(ErrorCode::not_a_permutation, "alpha is not a permutation of the darts");
        if (!detail::is_permutation_of_range(sigma_))
            throw Error(ErrorCode::not_a_permutation, "sigma is not a permutation of the darts");
        const int n = dart_count();
        sigma_inv_.assign(n, 0);
        for (Dart d = 0; d < n; ++d) sigma_inv_[sigma_[d]] = d;
        vertex_of_.assign(n, 0);
        const auto cycles = detail::orbits(sigma_);
        for (std::size_t v = 0; v < cycles.size(); ++v) {
            vertex_rep_.push_back(cycles[v].front());
            for (Dart d : cycles[v]) vertex_of_[d] = static_cast<int>(v);
        }
        vertex_degree_.resize(cycles.size());
        for (std::size_t v = 0; v < cycles.size(); ++v)
            vertex_degree_[v] = static_cast<int>(cycles[v].size());
    }

    int dart_count() const { return static_cast<int>(alpha_.size()); }
    int edge_count() const { return dart_count() / 2; }
    int vertex_count() const { return static_cast<int>(vertex_rep_.size()); }

    Dart alpha(Dart d) const { return alpha_[d]; }
    Dart sigma(Dart d) const { return sigma_[d]; }
    Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
    Dart phi(Dart d) const { return sigma_[alpha_[d]]; }

    const std::vector<Dart>& alpha_map() const { return alpha_; }
    const std::vector<Dart>& sigma_map() const { return sigma_; }

    /// Dense vertex index of the sigma-orbit containing `d`.
    int vertex_of(Dart d) const { return vertex_of_[d]; }
    /// Smallest dart of the vertex with dense index `v`.
    Dart vertex_rep(int v) const { return vertex_rep_[v]; }
    int vertex_degree(int v) const { return vertex_degree_[v]; }

    /// Edges are identified by the smaller dart of their alpha-orbit.
    Dart edge_of(Dart d) const { return std::min(d, alpha_[d]); }
    bool is_edge_id(Dart e) const { return e >= 0 && e < dart_count() && alpha_[e] > e; }

    std::vector<Dart> edge_ids() const {
        std::vector<Dart> out;
        for (Dart d = 0; d < dart_count(); ++d)
            if (alpha_[d] > d) out.push_back(d);
        return out;
    }

    std::vector<std::vector<Dart>> vertex_rotations() const { return detail::orbits(sigma_); }

    const std::map<Dart, std::string>& edge_labels() const { return edge_labels_; }

    bool operator==(const RibbonComplex& other) const {
        return alpha_ == other.alpha_ && sigma_ == other.sigma_ && edge_labels_ == other.edge_labels_;
    }

private:
    std::vector<Dart> alpha_;
    std::vector<Dart> sigma_;
    std::map<Dart, std::string> edge_labels_;
    std::vector<Dart> sigma_inv_;
    std::vector<int> vertex_of_;
    std::vector<Dart> vertex_rep_;
    std::vector<int> vertex_degree_;
};

inline bool is_connected(const RibbonComplex& c) {
    const int n = c.dart_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<Dart> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const Dart d = stack.back();
        stack.pop_back();
        for (Dart next : {c.alpha(d), c.sigma(d)}) {
            if (!seen[next]) {
                seen[next] = 1;
                ++reached;
                stack.push_back(next);
            }
        }
    }
    return reached == n;
}

/// Reports every violated structural invariant; empty means valid.
inline std::vector<Issue> validate(const RibbonComplex& c) {
    std::vector<Issue> issues;
    const int n = c.dart_count();
    if (n == 0) issues.push_back({ErrorCode::odd_dart_count, "complex has no darts"});
    if (n % 2 != 0)
        issues.push_back({ErrorCode::odd_dart_count, "dart count " + std::to_string(n) + " is odd"});
    for (Dart d = 0; d < n; ++d) {
        if (c.alpha(d) == d)
            issues.push_back({ErrorCode::fixed_point_in_alpha, "alpha fixes dart " + std::to_string(d)});
        else if (c.alpha(c.alpha(d)) != d)
            issues.push_back({ErrorCode::not_an_involution, "alpha(alpha(" + std::to_string(d) + ")) != " +
                                                                std::to_string(d)});
    }
    if (n > 0 && !is_connected(c))
        issues.push_back({ErrorCode::disconnected, "alpha and sigma do not act transitively on darts"});
    for (const auto& [edge, label] : c.edge_labels()) {
        if (!c.is_edge_id(edge))
            issues.push_back({ErrorCode::unknown_edge, "label '" + label + "' attached to non-edge dart " +
                                                           std::to_string(edge)});
    }
    return issues;
}

inline std::vector<Face> faces(const RibbonComplex& c) {
    std::vector<Dart> phi(c.dart_count());
    for (Dart d = 0; d < c.dart_count(); ++d) phi[d] = c.phi(d);
    std::vector<Face> out;
    for (auto& cycle : detail::orbits(phi)) out.push_back(Face{std::move(cycle)});
    return out;
}

/// face index of every dart, in the order returned by faces()
inline std::vector<int> face_index(const RibbonComplex& c) {
    std::vector<int> out(c.dart_count(), -1);
    const auto fs = faces(c);
    for (std::size_t f = 0; f < fs.size(); ++f)
        for (Dart d : fs[f].darts) out[d] = static_cast<int>(f);
    return out;
}

/// V - E + F.  Equals k + g - n in terms of A-cycles, G-cycles and quiver
/// vertices of the associated extended quiver.
inline int euler_defect(const RibbonComplex& c) {
    return c.vertex_count() - c.edge_count() + static_cast<int>(faces(c).size());
}

/// Topological genus (2 - (V - E + F)) / 2.
inline int genus(const RibbonComplex& c) { return (2 - euler_defect(c)) / 2; }

/// A ribbon complex with a positive multiplicity on every vertex.
/// Multiplicities are stored per dart and are constant on vertices, so a
/// dart that moves to another vertex simply adopts that vertex's value.
class BrauerComplex {
public:
    BrauerComplex() = default;

    BrauerComplex(RibbonComplex complex, std::vector<int> dart_mult)
        : complex_(std::move(complex)), mult_(std::move(dart_mult)) {
        auto issues = validate(complex_);
        if (static_cast<int>(mult_.size()) != complex_.dart_count()) {
            issues.push_back({ErrorCode::bad_multiplicity, "multiplicity vector has wrong size"});
        } else {
            for (Dart d = 0; d < complex_.dart_count(); ++d) {
                if (mult_[d] < 1)
                    issues.push_back({ErrorCode::bad_multiplicity,
                                      "vertex of dart " + std::to_string(d) + " has multiplicity < 1"});
                if (mult_[d] != mult_[complex_.sigma(d)])
                    issues.push_back({ErrorCode::bad_multiplicity,
                                      "multiplicity not constant around vertex of dart " + std::to_string(d)});
            }
        }
        if (!issues.empty()) throw Error(std::move(issues));
    }

    /// Every vertex gets multiplicity `m`.
    static BrauerComplex uniform(RibbonComplex complex, int m = 1) {
        std::vector<int> mult(complex.dart_count(), m);
        return BrauerComplex(std::move(complex), std::move(mult));
    }

    /// `by_vertex[v]` is the multiplicity of the vertex with dense index v.
    static BrauerComplex with_vertex_mults(RibbonComplex complex, std::span<const int> by_vertex) {
        if (static_cast<int>(by_vertex.size()) != complex.vertex_count())
            throw Error(ErrorCode::bad_multiplicity, "need one multiplicity per vertex");
        std::vector<int> mult(complex.dart_count());
        for (Dart d = 0; d < complex.dart_count(); ++d) mult[d] = by_vertex[complex.vertex_of(d)];
        return BrauerComplex(std::move(complex), std::move(mult));
    }

    const RibbonComplex& complex() const { return complex_; }
    int dart_mult(Dart d) const { return mult_[d]; }
    const std::vector<int>& dart_mults() const { return mult_; }
    int vertex_mult(int v) const { return mult_[complex_.vertex_rep(v)]; }

    /// Ascending multiset of vertex multiplicities.
    std::vector<int> mult_multiset() const {
        std::vector<int> out;
        for (int v = 0; v < complex_.vertex_count(); ++v) out.push_back(vertex_mult(v));
        std::sort(out.begin(), out.end());
        return out;
    }

    bool operator==(const BrauerComplex& other) const {
        return complex_ == other.complex_ && mult_ == other.mult_;
    }

private:
    RibbonComplex complex_;
    std::vector<int> mult_;
};

/// Ascending multiset of face perimeters.
inline std::vector<int> perimeters(const RibbonComplex& c) {
    std::vector<int> out;
    for (const auto& f : faces(c)) out.push_back(f.perimeter());
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Canonical labeling

struct CanonicalForm {
    /// relabel[d] is the canonical label of dart d.
    std::vector<Dart> relabel;
    /// Canonical integer encoding; equal iff isomorphic.
    std::vector<std::int32_t> code;

    /// Byte string of `code`, usable as a map key.
    std::string key() const {
        return std::string(reinterpret_cast<const char*>(code.data()), code.size() * sizeof(std::int32_t));
    }
    bool operator==(const CanonicalForm& other) const { return code == other.code; }
};

namespace detail {

/// Breadth-first labeling from `start`, visiting alpha then sigma
/// neighbours.  Requires a connected complex.
inline std::vector<Dart> bfs_order(const RibbonComplex& c, Dart start, std::vector<Dart>& label) {
    const int n = c.dart_count();
    label.assign(n, -1);
    std::vector<Dart> order;
    order.reserve(n);
    label[start] = 0;
    order.push_back(start);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const Dart d = order[head];
        for (Dart next : {c.alpha(d), c.sigma(d)}) {
            if (label[next] < 0) {
                label[next] = static_cast<Dart>(order.size());
                order.push_back(next);
            }
        }
    }
    return order;
}

/// Canonical form with an arbitrary per-dart colour (constant under the
/// isomorphisms being quotiented out).  Colours take part in the encoding.
inline CanonicalForm canonical_with_colors(const RibbonComplex& c, std::span<const std::int32_t> colors,
                                           const std::vector<std::int32_t>& extra_per_edge = {}) {
    const int n = c.dart_count();
    // Restrict starting darts to those with the smallest local invariant.
    std::vector<int> face_len(n, 0);
    for (const auto& f : faces(c))
        for (Dart d : f.darts) face_len[d] = f.perimeter();
    auto local = [&](Dart d) {
        return std::tuple(colors[d], c.vertex_degree(c.vertex_of(d)), face_len[d],
                          extra_per_edge.empty() ? 0 : extra_per_edge[c.edge_of(d)]);
    };
    auto best_local = local(0);
    for (Dart d = 1; d < n; ++d) best_local = std::min(best_local, local(d));

    CanonicalForm best;
    std::vector<Dart> label;
    std::vector<std::int32_t> code;
    for (Dart start = 0; start < n; ++start) {
        if (local(start) != best_local) continue;
        const auto order = bfs_order(c, start, label);
        code.clear();
        code.push_back(n);
        for (Dart d : order) {
            code.push_back(label[c.alpha(d)]);
            code.push_back(label[c.sigma(d)]);
            code.push_back(colors[d]);
            if (!extra_per_edge.empty()) code.push_back(extra_per_edge[c.edge_of(d)]);
        }
        if (best.code.empty() || code < best.code) {
            best.code = code;
            best.relabel = label;
        }
    }
    return best;
}

} // namespace detail

/// Canonical form of an unlabeled ribbon complex (orientation preserving).
inline CanonicalForm canonical_form(const RibbonComplex& c) {
    std::vector<std::int32_t> colors(c.dart_count(), 0);
    return detail::canonical_with_colors(c, colors);
}

/// Canonical form of a Brauer complex.  Edge labels are ignored unless
/// `with_edge_labels` is set.
inline CanonicalForm canonical_form(const BrauerComplex& b, bool with_edge_labels = false) {
    const auto& c = b.complex();
    std::vector<std::int32_t> colors(b.dart_mults().begin(), b.dart_mults().end());
    if (!with_edge_labels) return detail::canonical_with_colors(c, colors);
    // Rank the distinct label strings so they encode as integers.
    std::map<std::string, std::int32_t> rank;
    for (const auto& [edge, label] : c.edge_labels()) rank.emplace(label, 0);
    std::int32_t next = 1;
    for (auto& [label, r] : rank) r = next++;
    std::vector<std::int32_t> per_edge(c.dart_count(), 0);
    for (const auto& [edge, label] : c.edge_labels()) per_edge[edge] = rank[label];
    return detail::canonical_with_colors(c, colors, per_edge);
}

inline bool isomorphic(const BrauerComplex& a, const BrauerComplex& b) {
    return a.complex().dart_count() == b.complex().dart_count() && canonical_form(a) == canonical_form(b);
}

/// Applies a dart relabeling `perm` (old dart -> new dart).
inline BrauerComplex relabel(const BrauerComplex& b, std::span<const Dart> perm) {
    const auto& c = b.complex();
    const int n = c.dart_count();
    std::vector<Dart> alpha(n), sigma(n);
    std::vector<int> mult(n);
    for (Dart d = 0; d < n; ++d) {
        alpha[perm[d]] = perm[c.alpha(d)];
        sigma[perm[d]] = perm[c.sigma(d)];
        mult[perm[d]] = b.dart_mult(d);
    }
    std::map<Dart, std::string> labels;
    for (const auto& [edge, label] : c.edge_labels()) {
        const Dart e = std::min(perm[edge], perm[c.alpha(edge)]);
        labels.emplace(e, label);
    }
    return BrauerComplex(RibbonComplex(std::move(alpha), std::move(sigma), std::move(labels)), std::move(mult));
}

/// Closed surface obtained from one polygon whose sides, read
/// counter-clockwise, carry the letters of `word`; equal letters are glued
/// with opposite orientations.  Each letter must occur exactly twice.
inline RibbonComplex from_polygon_word(const std::string& word) {
    const int n = static_cast<int>(word.size());
    std::vector<Dart> alpha(n, -1);
    std::map<char, std::vector<Dart>> sides;
    for (Dart d = 0; d < n; ++d) sides[word[d]].push_back(d);
    std::map<Dart, std::string> labels;
    for (const auto& [letter, ds] : sides) {
        if (ds.size() != 2)
            throw Error(ErrorCode::parse_error, std::string("letter '") + letter + "' must occur twice");
        alpha[ds[0]] = ds[1];
        alpha[ds[1]] = ds[0];
        labels.emplace(ds[0], std::string(1, letter));
    }
    // The single face is phi = (0 1 ... n-1), and sigma = phi o alpha.
    std::vector<Dart> sigma(n);
    for (Dart d = 0; d < n; ++d) sigma[d] = (alpha[d] + 1) % n;
    return RibbonComplex(std::move(alpha), std::move(sigma), std::move(labels));
}

} // namespace brauer
