#pragma once

// Elementary tilting transformations C -> C(a) and the tilting complexes T_a.
//
// A move only splices the rotation sigma; alpha and hence edge ids are
// untouched, and the vertex set is preserved because a vertex never loses
// all of its darts.  Darts that change vertex adopt the multiplicity there.
//
// Every end of a that is not a leaf end slides along the edge preceding it
// in its rotation: the end dart e is re-inserted right before
// alpha(sigma^-1(e)), both computed on the original complex.  For a loop
// bounding a face (sigma(x) = y) the two darts move together.  This is the
// reading under which End(T_a) has the Cartan matrix of C(a).

#include "brauer/algebra.hpp"
#include "brauer/quiver.hpp"
#include "brauer/ribbon.hpp"

#include <string>
#include <vector>

namespace brauer {

enum class MoveType { leaf_shift = 1, loop_shift = 2, general = 3 };

inline std::string_view to_string(MoveType t) {
    switch (t) {
    case MoveType::leaf_shift: return "type1";
    case MoveType::loop_shift: return "type2";
    case MoveType::general: return "type3";
    }
    return "type3";
}

struct Move {
    Dart edge = 0;
    MoveType type = MoveType::general;
    std::vector<Dart> sigma_before;
    std::vector<Dart> sigma_after;
};

namespace detail {

inline void require_edge(const RibbonComplex& c, Dart edge) {
    if (!c.is_edge_id(edge)) throw Error(ErrorCode::unknown_edge, "no edge with id " + std::to_string(edge));
    if (c.edge_count() < 2) throw Error(ErrorCode::single_edge_complex, "tilting needs at least two edges");
}

/// Rotation as a doubly linked cyclic list.
struct Rotation {
    std::vector<Dart> next, prev;

    explicit Rotation(const RibbonComplex& c) : next(c.sigma_map()), prev(c.dart_count()) {
        for (Dart d = 0; d < c.dart_count(); ++d) prev[next[d]] = d;
    }
    void remove(Dart d) {
        next[prev[d]] = next[d];
        prev[next[d]] = prev[d];
        next[d] = prev[d] = d;
    }
    void insert_after(Dart w, Dart d) {
        const Dart after = next[w];
        next[w] = d;
        prev[d] = w;
        next[d] = after;
        prev[after] = d;
    }
    void insert_before(Dart u, Dart d) { insert_after(prev[u], d); }
};

} // namespace detail

/// Leaf edges come first, then loops bounding a face, then everything else.
inline MoveType classify_edge(const BrauerComplex& b, Dart edge) {
    const auto& c = b.complex();
    detail::require_edge(c, edge);
    const Dart x = edge, y = c.alpha(edge);
    if (c.sigma(x) == x || c.sigma(y) == y) return MoveType::leaf_shift;
    if (c.sigma(x) == y || c.sigma(y) == x) return MoveType::loop_shift;
    return MoveType::general;
}

inline BrauerComplex apply_move(const BrauerComplex& b, Dart edge, Move* record = nullptr) {
    const auto& c = b.complex();
    const MoveType type = classify_edge(b, edge);
    Dart x = edge, y = c.alpha(edge);
    detail::Rotation rot(c);
    switch (type) {
    case MoveType::leaf_shift: {
        if (c.sigma(y) == y) std::swap(x, y);
        const Dart w = c.alpha(c.sigma_inv(y));
        rot.remove(y);
        rot.insert_before(w, y);
        break;
    }
    case MoveType::loop_shift: {
        if (c.sigma(x) != y) std::swap(x, y);
        const Dart w = c.alpha(c.sigma_inv(x));
        rot.remove(x);
        rot.remove(y);
        rot.insert_before(w, x);
        rot.insert_after(x, y);
        break;
    }
    case MoveType::general: {
        const Dart u1 = c.alpha(c.sigma_inv(x));
        const Dart u2 = c.alpha(c.sigma_inv(y));
        rot.remove(x);
        rot.remove(y);
        rot.insert_before(u1, x);
        rot.insert_before(u2, y);
        break;
    }
    }
    RibbonComplex moved(c.alpha_map(), rot.next, c.edge_labels());
    std::vector<int> mult(c.dart_count());
    for (Dart d = 0; d < c.dart_count(); ++d) {
        // a dart sharing a vertex with a non-moved dart takes its value
        Dart probe = d;
        while (probe == x || probe == y) {
            probe = moved.sigma(probe);
            if (probe == d) break;
        }
        mult[d] = b.dart_mult(probe);
    }
    if (record) *record = Move{edge, type, c.sigma_map(), moved.sigma_map()};
    return BrauerComplex(std::move(moved), std::move(mult));
}

// ---------------------------------------------------------------------------
// Tilting complexes

struct TiltingComplexSpec {
    Dart edge = 0;
    int vertex = 0; // quiver vertex of `edge`
    MoveType type = MoveType::general;
    /// summands[j] is T_{a j}; stalk complexes for j != vertex.
    std::vector<TwoTermComplex> summands;
};

inline TiltingComplexSpec build_tilting_complex(const BrauerComplex& b, const AlgebraTable& table, Dart edge) {
    const auto& c = b.complex();
    TiltingComplexSpec spec;
    spec.edge = edge;
    spec.type = classify_edge(b, edge);
    const auto index = edge_indices(c);
    spec.vertex = index.at(edge);
    for (int j = 0; j < table.vertex_count(); ++j) spec.summands.push_back(TwoTermComplex::stalk(j));
    auto vertex_of_arrow = [&](Dart d) { return index.at(c.edge_of(d)); };
    auto arrow = [&](Dart d, int len) { return basis_vector(table.path(d, len)); };

    Dart x = edge, y = c.alpha(edge);
    TwoTermComplex t;
    t.upper = {spec.vertex};
    t.lower_degree = 0;
    switch (spec.type) {
    case MoveType::leaf_shift: {
        if (c.sigma(y) == y) std::swap(x, y);
        const Dart beta = c.sigma_inv(y); // arrow into the leaf edge at its inner end
        t.lower = {vertex_of_arrow(beta)};
        t.differential = {{arrow(beta, 1)}};
        break;
    }
    case MoveType::loop_shift: {
        if (c.sigma(x) != y) std::swap(x, y);
        const Dart beta = c.sigma_inv(x);
        const int j = vertex_of_arrow(beta);
        t.lower = {j, j};
        t.differential = {{arrow(beta, 1)}, {arrow(beta, 2)}};
        break;
    }
    case MoveType::general: {
        const Dart b1 = c.sigma_inv(x), b2 = c.sigma_inv(y);
        t.lower = {vertex_of_arrow(b1), vertex_of_arrow(b2)};
        t.differential = {{arrow(b1, 1)}, {arrow(b2, 1)}};
        break;
    }
    }
    spec.summands[spec.vertex] = std::move(t);
    return spec;
}

inline TiltingComplexSpec build_tilting_complex(const BrauerComplex& b, Dart edge) {
    return build_tilting_complex(b, AlgebraTable(b), edge);
}

/// Hom(T_aa, T_aj[s]) = Hom(T_aj, T_aa[s]) = 0 for every j and s != 0.
/// The stalks sit in degree 0 and T_aa in degrees 0 and 1, so |s| <= 2.
struct HomVanishing {
    bool ok = true;
    std::vector<std::string> failures;
};

inline HomVanishing check_hom_vanishing(const AlgebraTable& table, const TiltingComplexSpec& spec) {
    HomVanishing out;
    const auto& taa = spec.summands[spec.vertex];
    for (int j = 0; j < static_cast<int>(spec.summands.size()); ++j)
        for (int s : {-2, -1, 1, 2}) {
            const int there = hom_complexes(table, taa, spec.summands[j], s);
            const int back = hom_complexes(table, spec.summands[j], taa, s);
            if (there != 0 || back != 0) {
                out.ok = false;
                out.failures.push_back("j=" + std::to_string(j) + " shift=" + std::to_string(s) + ": " +
                                       std::to_string(there) + "," + std::to_string(back));
            }
        }
    return out;
}

struct EndomorphismReport {
    bool ok = false;
    int end_dim = 0;
    int algebra_dim = 0;
    /// Cartan matrices: dim Hom(T_aj, T_ak) and dim e_j A' e_k for C(a).
    std::vector<std::vector<int>> end_cartan;
    std::vector<std::vector<int>> moved_cartan;
};

/// Compares End(T_a) with the algebra of C(a): the total dimension and
/// every Cartan entry, quiver vertices matched by edge id.
inline EndomorphismReport endomorphism_check(const BrauerComplex& b, Dart edge) {
    const auto& c = b.complex();
    detail::require_edge(c, edge);
    int max_mult = 0;
    for (int v = 0; v < c.vertex_count(); ++v) max_mult = std::max(max_mult, b.vertex_mult(v));
    if (c.edge_count() > 6 || max_mult > 2)
        throw Error(ErrorCode::size_limit_exceeded, "endomorphism check is limited to 6 edges and multiplicity 2");
    const AlgebraTable table(b);
    const auto spec = build_tilting_complex(b, table, edge);
    const AlgebraTable moved(apply_move(b, edge));
    const int n = table.vertex_count();
    EndomorphismReport report;
    report.end_cartan.assign(n, std::vector<int>(n, 0));
    report.moved_cartan.assign(n, std::vector<int>(n, 0));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            report.end_cartan[j][k] = hom_complexes(table, spec.summands[j], spec.summands[k], 0);
            report.moved_cartan[j][k] = static_cast<int>(moved.between(j, k).size());
            report.end_dim += report.end_cartan[j][k];
        }
    report.algebra_dim = moved.dim();
    report.ok = report.end_dim == report.algebra_dim && report.end_cartan == report.moved_cartan;
    return report;
}

} // namespace brauer
