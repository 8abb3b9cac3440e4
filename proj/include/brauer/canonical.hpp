#pragma once

// Canonical genus-0 representatives and the equivalence decision.
//
// Every genus-0 class is determined by its perimeters and multiplicities.
// canonicalize() drives a complex to the representative in stages: reduce,
// make the shape canonical, then swap multiplicities vertex by vertex.
// Each stage is a short bounded search, so the full log is replayable.

#include "brauer/genus0.hpp"

#include <map>

namespace brauer {

namespace detail {

/// Ribbon complex under construction: darts are appended in pairs.
struct Builder {
    std::vector<Dart> alpha, sigma;
    std::vector<int> mult;

    Dart add_edge() {
        const Dart x = static_cast<Dart>(alpha.size());
        alpha.push_back(x + 1);
        alpha.push_back(x);
        sigma.push_back(x);
        sigma.push_back(x + 1);
        mult.push_back(1);
        mult.push_back(1);
        return x;
    }
    /// Puts the lone dart d right after w in w's rotation.
    void insert_after(Dart w, Dart d) {
        sigma[d] = sigma[w];
        sigma[w] = d;
    }
    BrauerComplex finish() const {
        RibbonComplex c(alpha, sigma);
        std::vector<int> m(c.dart_count());
        // a vertex carries the value set on any of its darts (all equal)
        for (Dart d = 0; d < c.dart_count(); ++d) m[d] = mult[d];
        return BrauerComplex(std::move(c), std::move(m));
    }
    void set_vertex_mult(Dart d, int value) {
        Dart e = d;
        do {
            mult[e] = value;
            e = sigma[e];
        } while (e != d);
    }
};

/// Star at the hub: `leaves` in rotation order, each a multiplicity.
inline BrauerComplex star(int hub_mult, const std::vector<int>& leaves) {
    Builder bl;
    Dart first = -1, last = -1;
    for (int m : leaves) {
        const Dart x = bl.add_edge();
        bl.mult[x + 1] = m;
        if (first < 0) {
            first = x;
        } else {
            bl.insert_after(last, x);
        }
        last = x;
    }
    bl.set_vertex_mult(first, hub_mult);
    return bl.finish();
}

/// Hub A joined to B by one edge per face; face i holds the leaves
/// faces[i] at A, listed in rotation order.
inline BrauerComplex necklace(int hub_mult, int b_mult, const std::vector<std::vector<int>>& faces) {
    const int g = static_cast<int>(faces.size());
    if (g < 2) throw Error(ErrorCode::infeasible_target, "a necklace needs two faces");
    Builder bl;
    std::vector<Dart> a(g);
    for (int i = 0; i < g; ++i) a[i] = bl.add_edge();
    // A side: a_0, leaves of face 0, a_1, ...; B side in descending order.
    std::vector<Dart> at_a, at_b;
    std::vector<std::pair<Dart, int>> leaf_darts;
    for (int i = 0; i < g; ++i) {
        at_a.push_back(a[i]);
        for (int m : faces[i]) {
            const Dart x = bl.add_edge();
            at_a.push_back(x);
            leaf_darts.emplace_back(x + 1, m);
        }
    }
    for (int i = g - 1; i >= 0; --i) at_b.push_back(a[i] + 1);
    for (const auto* cyc : {&at_a, &at_b})
        for (std::size_t i = 0; i < cyc->size(); ++i) bl.sigma[(*cyc)[i]] = (*cyc)[(i + 1) % cyc->size()];
    for (const auto& [d, m] : leaf_darts) bl.mult[d] = m;
    bl.set_vertex_mult(a[0], hub_mult);
    bl.set_vertex_mult(a[0] + 1, b_mult);
    return bl.finish();
}

/// External perimeters for loop graphs: minimal parity values, with the
/// remaining +2 steps given to the largest faces first.
inline std::vector<int> canonical_external(const std::vector<int>& sorted_perimeters) {
    const int g = static_cast<int>(sorted_perimeters.size());
    std::vector<int> p(g);
    int sum = 0;
    for (int i = 0; i < g; ++i) sum += p[i] = sorted_perimeters[i] % 2 ? 1 : 2;
    int excess = 2 * g - 2 - sum;
    if (excess < 0 || excess % 2)
        throw Error(ErrorCode::infeasible_target, "no external perimeters fit these perimeters");
    excess /= 2;
    for (int i = g - 1; i >= 0 && excess > 0; --i) {
        const int add = std::min(excess, (sorted_perimeters[i] - p[i]) / 2);
        p[i] += 2 * add;
        excess -= add;
    }
    if (excess > 0) throw Error(ErrorCode::infeasible_target, "no external perimeters fit these perimeters");
    return p;
}

/// Caterpillar with the given degrees: the nodes of degree >= 2 form a
/// path in index order, the degree-1 nodes hang off it in index order.
inline DualTree caterpillar(const std::vector<int>& degree, int hub_mult) {
    const int g = static_cast<int>(degree.size());
    DualTree t;
    t.nodes = g;
    t.rotation.resize(g);
    t.hub_mult = hub_mult;
    auto connect = [&](int u, int v) {
        const int k = static_cast<int>(t.ends.size());
        t.ends.emplace_back(u, v);
        t.loop.push_back(2 * k);
        t.rotation[u].push_back(k);
        t.rotation[v].push_back(k);
    };
    std::vector<int> spine, hanging;
    for (int v = 0; v < g; ++v) (degree[v] >= 2 ? spine : hanging).push_back(v);
    if (spine.empty()) {
        if (g != 2) throw Error(ErrorCode::infeasible_target, "degrees do not form a tree");
        connect(0, 1);
        return t;
    }
    std::size_t next_leaf = 0;
    for (std::size_t j = 0; j < spine.size(); ++j) {
        const int v = spine[j];
        const int spine_nbrs = (j > 0) + (j + 1 < spine.size());
        for (int k = 0; k < degree[v] - spine_nbrs; ++k) {
            if (next_leaf >= hanging.size()) throw Error(ErrorCode::infeasible_target, "degrees do not form a tree");
            connect(v, hanging[next_leaf++]);
        }
        if (j + 1 < spine.size()) connect(v, spine[j + 1]);
    }
    if (next_leaf != hanging.size()) throw Error(ErrorCode::infeasible_target, "degrees do not form a tree");
    return t;
}

/// Adds a leaf of multiplicity m inside the face containing dart d, at the
/// hub corner following d.
inline void add_leaf_in_face(Builder& bl, Dart d, int m) {
    const Dart x = bl.add_edge();
    bl.mult[x + 1] = m;
    bl.mult[x] = bl.mult[bl.alpha[d]];
    bl.insert_after(bl.alpha[d], x);
}

} // namespace detail

/// The representative of the genus-0 class with these perimeters and
/// multiplicity multiset (one value per vertex).
inline BrauerComplex canonical_representative(std::vector<int> perims, std::vector<int> mults) {
    std::sort(perims.begin(), perims.end());
    std::sort(mults.begin(), mults.end());
    const int g = static_cast<int>(perims.size());
    int total = 0;
    for (int p : perims) {
        if (p < 1) throw Error(ErrorCode::infeasible_target, "perimeters must be positive");
        total += p;
    }
    for (int m : mults)
        if (m < 1) throw Error(ErrorCode::bad_multiplicity, "multiplicities must be positive");
    if (total % 2) throw Error(ErrorCode::infeasible_target, "perimeters must sum to an even number");
    const int e = total / 2;
    if (static_cast<int>(mults.size()) != e - g + 2)
        throw Error(ErrorCode::infeasible_target, "a planar complex with these faces has " +
                                                      std::to_string(e - g + 2) + " vertices");
    const bool type1 = std::all_of(perims.begin(), perims.end(), [](int p) { return p % 2 == 0; });
    const int hub_mult = mults.back();
    std::vector<int> rest(mults.begin(), mults.end() - 1);
    if (type1) {
        if (g == 1) return detail::star(hub_mult, rest);
        const int b_mult = rest.back();
        rest.pop_back();
        std::vector<std::vector<int>> faces(g);
        std::size_t next = 0;
        for (int i = 0; i < g; ++i)
            for (int k = 0; k < (perims[i] - 2) / 2; ++k) faces[i].push_back(rest[next++]);
        return detail::necklace(hub_mult, b_mult, faces);
    }
    const auto external = detail::canonical_external(perims);
    const auto tree = detail::caterpillar(external, hub_mult);
    const auto loops = from_dual_tree(tree);
    detail::Builder bl{loops.complex().alpha_map(), loops.complex().sigma_map(), loops.dart_mults()};
    // darts of the loop graph lying in each face, from the tree
    std::size_t next = 0;
    for (int v = 0; v < g; ++v) {
        const int k = tree.rotation[v].front();
        const Dart d = tree.ends[k].first == v ? 2 * k : 2 * k + 1;
        for (int i = 0; i < (perims[v] - external[v]) / 2; ++i) {
            // later leaves go after earlier ones in the rotation
            Dart corner = d;
            for (int j = 0; j < i; ++j) corner = bl.alpha[bl.sigma[bl.alpha[corner]]];
            detail::add_leaf_in_face(bl, corner, rest[next++]);
        }
    }
    return bl.finish();
}

// ---------------------------------------------------------------------------
// Driving a complex to its representative

namespace detail {

struct Stage {
    BrauerComplex complex;
    Dart hub;
    MoveLog log;

    void run(const HubPredicate& goal, const std::string& what) {
        auto found = require_search(complex, hub, goal, what);
        complex = std::move(found.complex);
        hub = found.hub;
        log.append(found.log);
    }
};

inline std::string shape_key(const BrauerComplex& b) { return canonical_form(b.complex()).key(); }
inline std::string labeled_key(const BrauerComplex& b) { return canonical_form(b).key(); }

/// Face perimeters around a reduced type-1 graph, read from the edge
/// a_0 = the smallest non-leaf dart at the hub.
inline std::vector<int> necklace_sequence(const BrauerComplex& b, Dart hub) {
    const auto& c = b.complex();
    const auto fi = face_index(c);
    const auto fs = faces(c);
    Dart start = hub;
    while (is_leaf_edge(c, start)) {
        start = c.sigma(start);
        if (start == hub) return {fs[0].perimeter()};
    }
    std::vector<int> seq;
    Dart d = start;
    do {
        if (!is_leaf_edge(c, d)) {
            // the face entered after this edge contains sigma(d) as seen from alpha
            seq.push_back(fs[fi[c.alpha(d)]].perimeter());
        }
        d = c.sigma(d);
    } while (d != start);
    return seq;
}

inline void type1_shape(Stage& s) {
    const auto& hub_ok = [](const BrauerComplex& x, Dart h) {
        return all_edges_at(x, h) && count_loops(x.complex()) == 0;
    };
    while (s.complex.complex().vertex_count() - count_dangling(s.complex.complex()) > 2) {
        const int dangling = count_dangling(s.complex.complex());
        s.run([&](const BrauerComplex& x, Dart h) { return hub_ok(x, h) && count_dangling(x.complex()) > dangling; },
              "adding a leaf");
    }
    // the shape only sees the cyclic order, so track the sequence here
    auto seq = necklace_sequence(s.complex, s.hub);
    for (std::size_t pass = 0; pass < seq.size(); ++pass)
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            if (seq[i] <= seq[i + 1]) continue;
            std::swap(seq[i], seq[i + 1]);
            std::vector<std::vector<int>> faces;
            for (int p : seq) faces.emplace_back((p - 2) / 2, 1);
            const auto target = shape_key(necklace(1, 1, faces));
            s.run([&](const BrauerComplex& x, Dart h) { return hub_ok(x, h) && shape_key(x) == target; },
                  "exchanging adjacent faces");
        }
}

inline void type2_shape(Stage& s, const BrauerComplex& target) {
    std::vector<int> perims = perimeters(s.complex.complex());
    const auto external = canonical_external(perims);
    DoublePerimeters want;
    for (std::size_t i = 0; i < perims.size(); ++i) want.emplace_back(perims[i], external[i]);
    if (double_perimeters(s.complex.complex()) != [&] {
            auto w = want;
            std::sort(w.begin(), w.end());
            return w;
        }()) {
        auto [b, log] = equalize_double_perimeters(s.complex, s.hub, want);
        // equalize keeps the hub; recover it as the vertex of maximal degree
        s.complex = b;
        s.hub = default_hub(b.complex());
        s.log.append(log);
    }
    const auto key = shape_key(target);
    s.run([&](const BrauerComplex& x, Dart) { return shape_key(x) == key; }, "arranging the dual tree");
}

/// Isomorphism a -> b of labeled complexes as a dart map.
inline std::vector<Dart> isomorphism(const CanonicalForm& fa, const CanonicalForm& fb) {
    std::vector<Dart> inv(fb.relabel.size());
    for (std::size_t d = 0; d < fb.relabel.size(); ++d) inv[fb.relabel[d]] = static_cast<Dart>(d);
    std::vector<Dart> out(fa.relabel.size());
    for (std::size_t d = 0; d < fa.relabel.size(); ++d) out[d] = inv[fa.relabel[d]];
    return out;
}

inline BrauerComplex with_vertex_mults_swapped(const BrauerComplex& b, int u, int v) {
    const auto& c = b.complex();
    std::vector<int> m(b.dart_mults().begin(), b.dart_mults().end());
    for (Dart d = 0; d < c.dart_count(); ++d) {
        if (c.vertex_of(d) == u) m[d] = b.vertex_mult(v);
        if (c.vertex_of(d) == v) m[d] = b.vertex_mult(u);
    }
    return BrauerComplex(c, std::move(m));
}

/// Transposes multiplicities until the complex is isomorphic to `target`,
/// which must already have the same shape.
inline void fix_labels(Stage& s, const BrauerComplex& target) {
    const auto& tc = target.complex();
    // to_target[d]: dart of target matching dart d of the current complex
    auto to_target = isomorphism(canonical_form(s.complex.complex()), canonical_form(tc));
    const auto target_key = labeled_key(target);
    for (int guard = 0; labeled_key(s.complex) != target_key; ++guard) {
        if (guard > 4 * tc.dart_count())
            throw Error(ErrorCode::search_exhausted, "multiplicities did not settle");
        const auto& c = s.complex.complex();
        auto want = [&](int v) { return target.vertex_mult(tc.vertex_of(to_target[c.vertex_rep(v)])); };
        int u = -1, v = -1;
        for (int a = 0; a < c.vertex_count() && u < 0; ++a) {
            if (s.complex.vertex_mult(a) == want(a)) continue;
            for (int b2 = 0; b2 < c.vertex_count(); ++b2) {
                if (b2 == a || s.complex.vertex_mult(b2) != want(a) || s.complex.vertex_mult(b2) == want(b2)) continue;
                if (u < 0 || want(b2) == s.complex.vertex_mult(a)) {
                    u = a;
                    v = b2;
                }
            }
        }
        if (u < 0) throw Error(ErrorCode::search_exhausted, "no multiplicity transposition available");
        const auto swapped = with_vertex_mults_swapped(s.complex, u, v);
        const auto key = labeled_key(swapped);
        s.run([&](const BrauerComplex& x, Dart) { return labeled_key(x) == key; }, "exchanging multiplicities");
        const auto phi = isomorphism(canonical_form(s.complex), canonical_form(swapped));
        std::vector<Dart> next(phi.size());
        for (std::size_t d = 0; d < phi.size(); ++d) next[d] = to_target[phi[d]];
        to_target = std::move(next);
    }
}

} // namespace detail

struct Canonicalization {
    BrauerComplex representative;
    MoveLog log;
};

/// Drives a genus-0 complex to canonical_representative() of its class.
inline Canonicalization canonicalize(const BrauerComplex& b) {
    require_genus0(b);
    const auto target = canonical_representative(perimeters(b.complex()), b.mult_multiset());
    if (b.complex().edge_count() < 2) {
        if (!isomorphic(b, target)) throw Error(ErrorCode::search_exhausted, "single edge complexes do not move");
        return {b, {}};
    }
    const auto r = reduce(b);
    detail::Stage s{r.complex, r.hub, r.log};
    if (r.type == 1) {
        detail::type1_shape(s);
    } else {
        detail::type2_shape(s, target);
    }
    detail::fix_labels(s, target);
    return {s.complex, s.log};
}

/// Memoizes canonicalization by isomorphism class; cached logs are carried
/// over to isomorphic inputs through the dart isomorphism.
class Canonicalizer {
public:
    Canonicalization run(const BrauerComplex& b) {
        const auto form = canonical_form(b);
        auto it = cache_.find(form.key());
        if (it == cache_.end()) {
            auto result = canonicalize(b);
            it = cache_.emplace(form.key(), Entry{b, form, std::move(result)}).first;
        }
        const auto& entry = it->second;
        const auto perm = detail::isomorphism(entry.form, form);
        Canonicalization out = entry.result;
        out.log = relabel_log(entry.result.log, entry.source.complex(), perm);
        out.representative = out.log.empty() ? b : relabel_tail(b, out.log);
        return out;
    }
    std::size_t size() const { return cache_.size(); }

private:
    struct Entry {
        BrauerComplex source;
        CanonicalForm form;
        Canonicalization result;
    };
    static BrauerComplex relabel_tail(const BrauerComplex& b, const MoveLog& log) {
        BrauerComplex x = b;
        for (const auto& m : log.moves) x = apply_move(x, m.edge);
        return x;
    }
    std::map<std::string, Entry> cache_;
};

struct EquivalenceWitness {
    MoveLog first, second;
    std::string common_hash;
};

struct EquivalenceVerdict {
    bool equivalent = false;
    /// Distinguishing invariants when not equivalent.
    std::vector<std::string> differing;
    std::optional<EquivalenceWitness> witness;
};

/// Decision from perimeters and multiplicities alone.
inline EquivalenceVerdict decide_by_invariants(const BrauerComplex& b1, const BrauerComplex& b2) {
    require_genus0(b1);
    require_genus0(b2);
    EquivalenceVerdict v;
    if (b1.complex().edge_count() != b2.complex().edge_count()) v.differing.emplace_back("n");
    if (perimeters(b1.complex()) != perimeters(b2.complex())) v.differing.emplace_back("perimeters");
    if (b1.mult_multiset() != b2.mult_multiset()) v.differing.emplace_back("mults");
    v.equivalent = v.differing.empty();
    return v;
}

inline EquivalenceVerdict decide_equivalent(const BrauerComplex& b1, const BrauerComplex& b2, bool want_witness,
                                            Canonicalizer* cache = nullptr) {
    auto v = decide_by_invariants(b1, b2);
    if (!v.equivalent || !want_witness) return v;
    Canonicalizer local;
    Canonicalizer& cz = cache ? *cache : local;
    const auto c1 = cz.run(b1);
    const auto c2 = cz.run(b2);
    const auto h1 = canonical_hash(c1.representative), h2 = canonical_hash(c2.representative);
    if (h1 != h2) throw Error(ErrorCode::search_exhausted, "canonical representatives disagree");
    v.witness = EquivalenceWitness{c1.log, c2.log, h1};
    return v;
}

} // namespace brauer
