#pragma once

// The symmetric special biserial algebra of a Brauer complex, realised as an
// exact multiplication table over the rationals.
//
// Basis: one idempotent per quiver vertex, the proper paths (d, len) that
// start with arrow d and follow its A-cycle for 1 <= len < m*l steps, and one
// socle element per quiver vertex.  Paths compose left to right.  A path of
// length exactly m*l is the socle element of its endpoint; anything longer,
// or any concatenation leaving the A-cycle, is zero.

#include "brauer/linalg.hpp"
#include "brauer/quiver.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

namespace brauer {

struct BasisElement {
    enum class Kind { idempotent, path, socle };
    Kind kind = Kind::idempotent;
    int source = 0;
    int target = 0;
    int start = -1; // first arrow, paths only
    int length = 0; // number of arrows; 0 for idempotents
};

class AlgebraTable {
public:
    explicit AlgebraTable(ExtendedQuiver quiver) : quiver_(std::move(quiver)) {
        const int n = quiver_.vertex_count;
        for (int r = 0; r < n; ++r) basis_.push_back({BasisElement::Kind::idempotent, r, r, -1, 0});
        path_base_.assign(quiver_.arrow_count(), -1);
        for (int a = 0; a < quiver_.arrow_count(); ++a) {
            path_base_[a] = static_cast<int>(basis_.size());
            const int full = full_length(a);
            for (int len = 1; len < full; ++len)
                basis_.push_back({BasisElement::Kind::path, quiver_.arrows[a].source,
                                  quiver_.arrows[step(a, len - 1)].target, a, len});
        }
        for (int r = 0; r < n; ++r) {
            socle_index_.push_back(static_cast<int>(basis_.size()));
            basis_.push_back({BasisElement::Kind::socle, r, r, -1, 0});
        }
        between_.assign(static_cast<std::size_t>(n) * n, {});
        for (int i = 0; i < dim(); ++i)
            between_[static_cast<std::size_t>(basis_[i].source) * n + basis_[i].target].push_back(i);
    }

    explicit AlgebraTable(const BrauerComplex& b) : AlgebraTable(derive_quiver(b)) {}

    int dim() const { return static_cast<int>(basis_.size()); }
    int vertex_count() const { return quiver_.vertex_count; }
    const ExtendedQuiver& quiver() const { return quiver_; }
    const BasisElement& element(int i) const { return basis_[i]; }
    const std::vector<BasisElement>& basis() const { return basis_; }

    int idempotent(int r) const { return r; }
    int socle(int r) const { return socle_index_[r]; }

    /// Length of a full turn m*l around the A-cycle of arrow `a`.
    int full_length(int a) const {
        const int c = quiver_.arrows[a].a_cycle;
        return quiver_.a_cycle_mult[c] * static_cast<int>(quiver_.a_cycles[c].size());
    }

    /// Arrow reached after `k` steps along the A-cycle from arrow `a`.
    int step(int a, int k) const {
        const auto& arrow = quiver_.arrows[a];
        const auto& cycle = quiver_.a_cycles[arrow.a_cycle];
        return cycle[(arrow.a_position + k) % cycle.size()];
    }

    /// Basis index of the path (a, len), the socle for len == m*l, or -1.
    int path(int a, int len) const {
        const int full = full_length(a);
        if (len <= 0 || len > full) return -1;
        if (len == full) return socle_index_[quiver_.arrows[a].source];
        return path_base_[a] + len - 1;
    }

    /// Basis elements lying in e_i * A * e_j, i.e. paths from i to j.
    const std::vector<int>& between(int i, int j) const {
        return between_[static_cast<std::size_t>(i) * quiver_.vertex_count + j];
    }

    /// Product of two basis elements: a basis index or -1 for zero.
    int product(int i, int j) const {
        const auto& x = basis_[i];
        const auto& y = basis_[j];
        if (x.kind == BasisElement::Kind::idempotent) return y.source == x.source ? j : -1;
        if (y.kind == BasisElement::Kind::idempotent) return x.target == y.source ? i : -1;
        if (x.kind == BasisElement::Kind::socle || y.kind == BasisElement::Kind::socle) return -1;
        if (step(x.start, x.length) != y.start) return -1;
        const int len = x.length + y.length;
        const int full = full_length(x.start);
        if (len < full) return path_base_[x.start] + len - 1;
        if (len == full) return socle_index_[x.source];
        return -1;
    }

    SparseVector multiply(const SparseVector& x, const SparseVector& y) const {
        SparseVector out;
        for (const auto& [i, a] : x)
            for (const auto& [j, b] : y) {
                const int p = product(i, j);
                if (p >= 0) add_entry(out, p, a * b);
            }
        return out;
    }

    SparseVector unit() const {
        SparseVector one;
        for (int r = 0; r < vertex_count(); ++r) one.emplace(r, 1);
        return one;
    }

    /// Arrows that exist as algebra elements (non-formal), as basis indices.
    std::vector<int> arrow_elements() const {
        std::vector<int> out;
        for (int a = 0; a < quiver_.arrow_count(); ++a) {
            const int p = path(a, 1);
            if (p >= 0 && basis_[p].kind == BasisElement::Kind::path) out.push_back(p);
        }
        return out;
    }

private:
    ExtendedQuiver quiver_;
    std::vector<BasisElement> basis_;
    std::vector<int> path_base_;
    std::vector<int> socle_index_;
    std::vector<std::vector<int>> between_;
};

/// Expected dimension: 2n + sum over arrows of (m*l - 1).
inline int expected_dimension(const ExtendedQuiver& q) {
    int dim = 2 * q.vertex_count;
    for (const auto& arrow : q.arrows) {
        const int c = arrow.a_cycle;
        dim += q.a_cycle_mult[c] * static_cast<int>(q.a_cycles[c].size()) - 1;
    }
    return dim;
}

inline SparseVector basis_vector(int i) {
    SparseVector v;
    v.emplace(i, 1);
    return v;
}

// ---------------------------------------------------------------------------
// Center

/// Basis of the center, found by solving z*g = g*z for every idempotent and
/// arrow g.  Independent of the closed form below.
inline std::vector<SparseVector> center_oracle(const AlgebraTable& table) {
    std::vector<int> generators;
    for (int r = 0; r < table.vertex_count(); ++r) generators.push_back(table.idempotent(r));
    for (int a : table.arrow_elements()) generators.push_back(a);
    EchelonBasis equations;
    for (int g : generators) {
        std::map<int, SparseVector> rows;
        for (int j = 0; j < table.dim(); ++j) {
            const int left = table.product(j, g);
            const int right = table.product(g, j);
            if (left == right) continue;
            if (left >= 0) add_entry(rows[left], j, 1);
            if (right >= 0) add_entry(rows[right], j, -1);
        }
        for (auto& [coord, row] : rows)
            if (!row.empty()) equations.insert(std::move(row));
    }
    return equations.nullspace(table.dim());
}

struct CenterBasis {
    /// (A-cycle, power t) for the sums of rotations m_{i,t}, 1 <= t < f(c_i).
    std::vector<std::pair<int, int>> m_part;
    /// Non-formal arrow-loops that are not whole A-cycles.
    std::vector<int> q_part;
    /// Quiver vertices; one socle element each.
    std::vector<int> s_part;
    int dim = 0;
    /// Ascending multiset of A-cycle multiplicities, the nilpotency indices
    /// of the generators of Z / Soc Z.
    std::vector<int> nilpotency;
};

inline CenterBasis center_formula(const ExtendedQuiver& q) {
    CenterBasis z;
    for (std::size_t c = 0; c < q.a_cycles.size(); ++c)
        for (int t = 1; t < q.a_cycle_mult[c]; ++t) z.m_part.emplace_back(static_cast<int>(c), t);
    for (int a = 0; a < q.arrow_count(); ++a) {
        const auto& arrow = q.arrows[a];
        if (arrow.source == arrow.target && q.a_cycles[arrow.a_cycle].size() > 1) z.q_part.push_back(a);
    }
    for (int r = 0; r < q.vertex_count; ++r) z.s_part.push_back(r);
    z.dim = 1 + static_cast<int>(z.m_part.size() + z.q_part.size() + z.s_part.size());
    z.nilpotency = q.a_cycle_mult;
    std::sort(z.nilpotency.begin(), z.nilpotency.end());
    return z;
}

/// m_{i,t}: the sum of all rotations of the t-th power of A-cycle i.
inline SparseVector rotation_sum(const AlgebraTable& table, int cycle, int t) {
    const auto& arrows = table.quiver().a_cycles[cycle];
    const int len = t * static_cast<int>(arrows.size());
    SparseVector v;
    for (int a : arrows) {
        const int p = table.path(a, len);
        if (p >= 0) add_entry(v, p, 1);
    }
    return v;
}

/// q_alpha: the path of length m*l - 1 starting right after loop `a`.
inline SparseVector loop_complement(const AlgebraTable& table, int a) {
    const int next = table.step(a, 1);
    return basis_vector(table.path(next, table.full_length(a) - 1));
}

/// The symbolic basis as algebra vectors: 1, m_{i,t}, q_alpha, s_r.
inline std::vector<SparseVector> center_vectors(const AlgebraTable& table, const CenterBasis& z) {
    std::vector<SparseVector> out{table.unit()};
    for (const auto& [c, t] : z.m_part) out.push_back(rotation_sum(table, c, t));
    for (int a : z.q_part) out.push_back(loop_complement(table, a));
    for (int r : z.s_part) out.push_back(basis_vector(table.socle(r)));
    return out;
}

inline bool is_central(const AlgebraTable& table, const SparseVector& z) {
    for (int j = 0; j < table.dim(); ++j) {
        const auto b = basis_vector(j);
        if (table.multiply(z, b) != table.multiply(b, z)) return false;
    }
    return true;
}

namespace detail {

/// Independent subset spanning the same space.
inline std::vector<SparseVector> independent(const std::vector<SparseVector>& vs) {
    EchelonBasis basis;
    std::vector<SparseVector> out;
    for (const auto& v : vs)
        if (basis.insert(v)) out.push_back(v);
    return out;
}

} // namespace detail

/// Multiset of nilpotency indices of Z / Soc Z, read off from the Loewy
/// series of an arbitrary basis `center` of the center.  Generators with
/// index 1 are invisible in the quotient; they are padded up to the number
/// of A-cycles.
inline std::vector<int> nilpotency_from_center(const AlgebraTable& table, const std::vector<SparseVector>& center) {
    const int n = table.vertex_count();
    // Radical: remove the scalar part.  For a connected algebra the
    // idempotent part of a central element is a multiple of 1.
    std::vector<SparseVector> rad;
    const auto one = table.unit();
    for (auto z : center) {
        Rational lambda = 0;
        if (auto it = z.find(0); it != z.end()) lambda = it->second;
        axpy(z, -lambda, one);
        for (int r = 0; r < n; ++r)
            if (z.count(r)) throw Error(ErrorCode::inconsistent_partition, "central element with non-scalar idempotent part");
        if (!z.empty()) rad.push_back(std::move(z));
    }
    rad = detail::independent(rad);

    // Soc Z: elements of Z annihilating rad Z.
    EchelonBasis ann_equations;
    for (const auto& r : rad) {
        std::map<int, SparseVector> rows;
        for (std::size_t i = 0; i < center.size(); ++i)
            for (const auto& [coord, value] : table.multiply(center[i], r)) add_entry(rows[coord], static_cast<int>(i), value);
        for (auto& [coord, row] : rows)
            if (!row.empty()) ann_equations.insert(std::move(row));
    }
    std::vector<SparseVector> socle;
    for (const auto& c : ann_equations.nullspace(static_cast<int>(center.size()))) {
        SparseVector v;
        for (const auto& [i, coef] : c) axpy(v, coef, center[i]);
        socle.push_back(std::move(v));
    }
    const auto socle_dim = rank_of(socle);

    // dim J^t of the quotient, t = 1, 2, ...
    std::vector<int> above; // above[t-1] = #{i : f_i > t}
    std::vector<SparseVector> power = rad;
    auto quotient_dim = [&](const std::vector<SparseVector>& span) {
        auto all = span;
        all.insert(all.end(), socle.begin(), socle.end());
        return static_cast<int>(rank_of(all) - socle_dim);
    };
    int prev = quotient_dim(power);
    while (prev > 0) {
        std::vector<SparseVector> next;
        for (const auto& x : power)
            for (const auto& r : rad) {
                auto p = table.multiply(x, r);
                if (!p.empty()) next.push_back(std::move(p));
            }
        power = detail::independent(next);
        const int cur = quotient_dim(power);
        above.push_back(prev - cur);
        prev = cur;
    }
    std::vector<int> out;
    for (std::size_t t = 0; t < above.size(); ++t) {
        const int here = above[t] - (t + 1 < above.size() ? above[t + 1] : 0);
        for (int k = 0; k < here; ++k) out.push_back(static_cast<int>(t) + 2);
    }
    const int cycles = static_cast<int>(table.quiver().a_cycles.size());
    while (static_cast<int>(out.size()) < cycles) out.push_back(1);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Two-term complexes of projectives and their morphisms up to homotopy.
//
// P_i = A e_i (left modules).  Hom(P_i, P_j) = e_i A e_j, acting by right
// multiplication, so composing "f then g" is the product f*g.

struct TwoTermComplex {
    std::vector<int> lower; // projective indices in degree lower_degree
    std::vector<int> upper; // projective indices in degree lower_degree + 1
    /// differential[i][j]: P_{lower[i]} -> P_{upper[j]}, an element of
    /// e_{lower[i]} A e_{upper[j]}.
    std::vector<std::vector<SparseVector>> differential;
    int lower_degree = -1;

    /// P_vertex concentrated in degree 0.
    static TwoTermComplex stalk(int vertex) { return {{}, {vertex}, {}, -1}; }

    const std::vector<int>& term(int degree) const {
        static const std::vector<int> empty;
        if (degree == lower_degree) return lower;
        if (degree == lower_degree + 1) return upper;
        return empty;
    }
};

namespace detail {

struct MapSpace {
    // (degree, source summand, target summand) -> offset and basis elements
    std::map<std::tuple<int, int, int>, std::pair<int, std::vector<int>>> blocks;
    int size = 0;

    int index_of(int degree, int a, int b, int element) const {
        auto it = blocks.find({degree, a, b});
        if (it == blocks.end()) return -1;
        const auto& elems = it->second.second;
        auto pos = std::lower_bound(elems.begin(), elems.end(), element);
        if (pos == elems.end() || *pos != element) return -1;
        return it->second.first + static_cast<int>(pos - elems.begin());
    }
};

/// Graded maps X^k -> Y^{k + offset} for all k.
inline MapSpace map_space(const AlgebraTable& table, const TwoTermComplex& x, const TwoTermComplex& y, int offset) {
    MapSpace space;
    for (int k : {x.lower_degree, x.lower_degree + 1}) {
        const auto& src = x.term(k);
        const auto& dst = y.term(k + offset);
        for (std::size_t a = 0; a < src.size(); ++a)
            for (std::size_t b = 0; b < dst.size(); ++b) {
                auto elems = table.between(src[a], dst[b]);
                std::sort(elems.begin(), elems.end());
                const int count = static_cast<int>(elems.size());
                space.blocks[{k, static_cast<int>(a), static_cast<int>(b)}] = {space.size, std::move(elems)};
                space.size += count;
            }
    }
    return space;
}

inline const SparseVector* diff_entry(const TwoTermComplex& c, int degree, int a, int b) {
    if (degree != c.lower_degree || c.differential.empty()) return nullptr;
    return &c.differential[a][b];
}

} // namespace detail

/// dim Hom_K(X, Y[shift]) in the homotopy category, Y[s]^k = Y^{k+s}.
/// Shifts that leave no overlapping degrees give zero.
inline int hom_complexes(const AlgebraTable& table, const TwoTermComplex& x, const TwoTermComplex& y, int shift) {
    const Rational sign = (shift % 2 == 0) ? 1 : -1; // differential of Y[shift]
    const auto chain = detail::map_space(table, x, y, shift);
    if (chain.size == 0) return 0;

    // Chain condition at degree k: dX^k f^{k+1} - f^k dY[s]^k = 0.
    EchelonBasis conditions;
    for (int k : {x.lower_degree - 1, x.lower_degree, x.lower_degree + 1}) {
        const auto& xk = x.term(k);
        const auto& xk1 = x.term(k + 1);
        const auto& yk = y.term(k + shift);
        const auto& yk1 = y.term(k + shift + 1);
        for (std::size_t a = 0; a < xk.size(); ++a)
            for (std::size_t c = 0; c < yk1.size(); ++c) {
                std::map<int, SparseVector> rows;
                for (std::size_t a1 = 0; a1 < xk1.size(); ++a1) {
                    const auto* d = detail::diff_entry(x, k, a, a1);
                    if (!d) continue;
                    auto it = chain.blocks.find({k + 1, static_cast<int>(a1), static_cast<int>(c)});
                    if (it == chain.blocks.end()) continue;
                    const auto& [offset, elems] = it->second;
                    for (std::size_t t = 0; t < elems.size(); ++t)
                        for (const auto& [u, coef] : *d) {
                            const int p = table.product(u, elems[t]);
                            if (p >= 0) add_entry(rows[p], offset + static_cast<int>(t), coef);
                        }
                }
                for (std::size_t b = 0; b < yk.size(); ++b) {
                    const auto* d = detail::diff_entry(y, k + shift, b, c);
                    if (!d) continue;
                    auto it = chain.blocks.find({k, static_cast<int>(a), static_cast<int>(b)});
                    if (it == chain.blocks.end()) continue;
                    const auto& [offset, elems] = it->second;
                    for (std::size_t t = 0; t < elems.size(); ++t)
                        for (const auto& [u, coef] : *d) {
                            const int p = table.product(elems[t], u);
                            if (p >= 0) add_entry(rows[p], offset + static_cast<int>(t), -sign * coef);
                        }
                }
                for (auto& [coord, row] : rows)
                    if (!row.empty()) conditions.insert(std::move(row));
            }
    }
    const int cycles = chain.size - static_cast<int>(conditions.rank());

    // Null-homotopic maps: f^k = dX^{k-1}... written as dX h + h dY[s].
    EchelonBasis boundaries;
    const auto homotopies = detail::map_space(table, x, y, shift - 1);
    for (const auto& [key, block] : homotopies.blocks) {
        const auto [k, a, b] = key; // h^k : X^k[a] -> Y^{k+shift-1}[b]
        const auto& [offset, elems] = block;
        for (int h : elems) {
            SparseVector image;
            // dX^{k-1}[a2][a] * h lands in f^{k-1}[a2][b]
            const auto& xkm1 = x.term(k - 1);
            for (std::size_t a2 = 0; a2 < xkm1.size(); ++a2) {
                const auto* d = detail::diff_entry(x, k - 1, static_cast<int>(a2), a);
                if (!d) continue;
                for (const auto& [u, coef] : *d) {
                    const int p = table.product(u, h);
                    if (p < 0) continue;
                    const int var = chain.index_of(k - 1, static_cast<int>(a2), b, p);
                    if (var >= 0) add_entry(image, var, coef);
                }
            }
            // h * dY[s]^{k+shift-1}[b][c] lands in f^k[a][c]
            const auto& yk = y.term(k + shift);
            for (std::size_t c = 0; c < yk.size(); ++c) {
                const auto* d = detail::diff_entry(y, k + shift - 1, b, static_cast<int>(c));
                if (!d) continue;
                for (const auto& [u, coef] : *d) {
                    const int p = table.product(h, u);
                    if (p < 0) continue;
                    const int var = chain.index_of(k, a, static_cast<int>(c), p);
                    if (var >= 0) add_entry(image, var, sign * coef);
                }
            }
            if (!image.empty()) boundaries.insert(std::move(image));
        }
    }
    return cycles - static_cast<int>(boundaries.rank());
}

} // namespace brauer
