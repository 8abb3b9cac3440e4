// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.  Every check is exact.

#include "support.hpp"

#include <chrono>
#include <iostream>

using namespace brauer;
using brauer::support::fixture;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string join(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

std::string describe(const BrauerComplex& b) {
    Json j = to_json(b);
    return j.dump();
}

const std::vector<BrauerComplex>& small_complexes() {
    static const auto all = enumerate_complexes(4, 3);
    return all;
}

// 1. center formula against the commutation oracle
Outcome center_agreement() {
    const auto t0 = Clock::now();
    int bad = 0;
    std::string first;
    for (const auto& b : small_complexes()) {
        const AlgebraTable table(b);
        const auto oracle = center_oracle(table);
        const auto z = center_formula(table.quiver());
        const auto vectors = center_vectors(table, z);
        EchelonBasis span;
        for (const auto& v : oracle) span.insert(v);
        bool ok = z.dim == static_cast<int>(oracle.size()) &&
                  static_cast<int>(detail::independent(vectors).size()) == z.dim;
        for (const auto& v : vectors) ok = ok && is_central(table, v) && span.contains(v);
        if (!ok && bad++ == 0) first = describe(b);
    }
    const double t = seconds_since(t0);
    Outcome o;
    o.pass = bad == 0 && t < 120;
    o.detail = std::to_string(small_complexes().size()) + " complexes, " + std::to_string(bad) + " mismatches, " +
               std::to_string(t) + " s";
    if (bad) o.detail += "; first " + first;
    return o;
}

// 2. nilpotency indices of Z / Soc Z against the vertex multiplicities
Outcome multiplicity_recovery() {
    int bad = 0;
    std::string examples;
    for (const auto& b : small_complexes()) {
        const AlgebraTable table(b);
        const auto found = nilpotency_from_center(table, center_oracle(table));
        if (found != b.mult_multiset()) {
            if (bad++ < 3)
                examples += "; " + describe(b) + " gives " + join(found) + " not " + join(b.mult_multiset());
        }
    }
    Outcome o;
    o.pass = bad == 0;
    o.detail = std::to_string(small_complexes().size()) + " complexes, " + std::to_string(bad) + " mismatches" + examples;
    return o;
}

// 3. signatures survive random moves
Outcome move_invariance() {
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<int> edges(2, 8);
    int bad = 0, done = 0;
    std::string first;
    while (done < 500) {
        const auto b = support::random_complex(rng, edges(rng), 3);
        const auto ids = b.complex().edge_ids();
        const Dart e = ids[std::uniform_int_distribution<std::size_t>(0, ids.size() - 1)(rng)];
        const auto diff = compare(signature(b), signature(apply_move(b, e)));
        if (!diff.empty() && bad++ == 0) first = describe(b) + " edge " + std::to_string(e);
        ++done;
    }
    Outcome o;
    o.pass = bad == 0;
    o.detail = std::to_string(done) + " pairs, " + std::to_string(bad) + " failures";
    if (bad) o.detail += "; first " + first;
    return o;
}

// 4. the two algebras with a single face of perimeter 6
Outcome bipartite_example() {
    const auto s1 = signature(fixture("e2_lambda1"));
    const auto s2 = signature(fixture("e3_lambda2"));
    const auto diff = compare(s1, s2);
    Outcome o;
    auto shared = [](const InvariantSignature& s) {
        return s.n == 3 && s.perimeters == std::vector<int>{6} && s.mults == std::vector<int>{1, 1} && s.genus == 1;
    };
    o.pass = shared(s1) && shared(s2) && s1.bipartite && !s2.bipartite && diff == std::vector<std::string>{"bipartite"};
    o.detail = "compare reports {";
    for (std::size_t i = 0; i < diff.size(); ++i) o.detail += (i ? "," : "") + diff[i];
    o.detail += "}";
    return o;
}

// 5. Hom vanishing and End(T) for every edge of three fixtures
Outcome tilting_checks() {
    int edges = 0, bad = 0;
    std::string first;
    for (const char* name : {"e2_lambda1", "e5_star", "e6_extended"}) {
        const auto b = fixture(name);
        const AlgebraTable table(b);
        for (Dart e : b.complex().edge_ids()) {
            ++edges;
            const auto spec = build_tilting_complex(b, table, e);
            const auto hom = check_hom_vanishing(table, spec);
            const auto end = endomorphism_check(b, e);
            if ((!hom.ok || !end.ok) && bad++ == 0) first = std::string(name) + " edge " + std::to_string(e);
        }
    }
    Outcome o;
    o.pass = bad == 0;
    o.detail = std::to_string(edges) + " edges, " + std::to_string(bad) + " failures";
    if (bad) o.detail += "; first " + first;
    return o;
}

// 6. genus-0 decision against orbit reachability, with replayed witnesses
Outcome genus0_theorem() {
    const auto t0 = Clock::now();
    const auto all = enumerate_planar(5, 2);
    const auto cen = census_of(all);
    const int n = static_cast<int>(cen.complexes.size());
    long long pairs = 0, disagreements = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const bool verdict = decide_equivalent(cen.complexes[i], cen.complexes[j], false).equivalent;
            const bool reachable = cen.orbit_of[i] == cen.orbit_of[j];
            const bool strongly = cen.strong_of[i] == cen.strong_of[j];
            if (verdict != reachable || verdict != strongly) ++disagreements;
            ++pairs;
        }
    // witnesses: every complex against the first member of its group
    Canonicalizer cache;
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> first_of;
    int witnesses = 0, bad_witness = 0;
    std::size_t longest = 0;
    std::string first;
    for (int i = 0; i < n; ++i) {
        const auto& b = cen.complexes[i];
        const auto key = std::pair(perimeters(b.complex()), b.mult_multiset());
        const int anchor = first_of.emplace(key, i).first->second;
        const auto& a = cen.complexes[anchor];
        try {
            const auto v = decide_equivalent(b, a, true, &cache);
            const auto r1 = replay(b, v.witness->first);
            const auto r2 = replay(a, v.witness->second);
            if (canonical_hash(r1) != v.witness->common_hash || canonical_hash(r2) != v.witness->common_hash ||
                !isomorphic(r1, r2))
                throw Error(ErrorCode::search_exhausted, "replay ends elsewhere");
            longest = std::max({longest, v.witness->first.size(), v.witness->second.size()});
        } catch (const Error& e) {
            if (bad_witness++ == 0) first = describe(b) + ": " + e.what();
        }
        ++witnesses;
    }
    const double t = seconds_since(t0);
    Outcome o;
    o.pass = disagreements == 0 && bad_witness == 0 && t < 600;
    o.detail = std::to_string(n) + " complexes, " + std::to_string(pairs) + " pairs, " +
               std::to_string(disagreements) + " disagreements, " + std::to_string(witnesses) + " witnesses (" +
               std::to_string(bad_witness) + " failed, longest " + std::to_string(longest) + " moves), " +
               std::to_string(t) + " s";
    if (bad_witness) o.detail += "; first " + first;
    return o;
}

// 7. the decagon pair
Outcome decagons() {
    const auto c1 = fixture("e4_decagon_c1");
    const auto c2 = fixture("e4_decagon_c2");
    const auto orbit = explore(c1);
    const auto s1 = signature(c1), s2 = signature(c2);
    const bool c2_outside = orbit.index_of(canonical_form(c2).key()) < 0;
    Outcome o;
    o.pass = orbit.frontier_exhausted && orbit.members.size() == 1 && c2_outside && s1 == s2 && s1.genus == 2 &&
             s1.perimeters == std::vector<int>{10} && s1.n == 5 && s1.bipartite;
    o.detail = "orbit of C1 has " + std::to_string(orbit.members.size()) + " class(es), C2 " +
               (c2_outside ? "outside" : "inside") + ", signatures " + (s1 == s2 ? "equal" : "differ");
    return o;
}

// 8. planar complexes: bipartite iff all perimeters are even
Outcome sphere_bipartite() {
    int count = 0, bad = 0;
    for (const auto& b : enumerate_planar(6, 1)) {
        ++count;
        const auto p = perimeters(b.complex());
        const bool even = std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 0; });
        bad += even != is_bipartite(b.complex());
    }
    Outcome o;
    o.pass = bad == 0;
    o.detail = std::to_string(count) + " complexes, " + std::to_string(bad) + " counterexamples";
    return o;
}

bool same(const BrauerComplex& a, const BrauerComplex& b) {
    return a.complex().alpha_map() == b.complex().alpha_map() && a.complex().sigma_map() == b.complex().sigma_map() &&
           a.dart_mults() == b.dart_mults() && a.complex().edge_labels() == b.complex().edge_labels();
}

// 9. quiver and document round trips
Outcome round_trips() {
    std::vector<BrauerComplex> cases;
    for (const char* name : {"e1_segment", "e2_lambda1", "e3_lambda2", "e4_decagon_c1", "e4_decagon_c2", "e5_star",
                             "e6_loop", "e6_extended", "path3", "star_a", "star_b", "e2_graph"})
        cases.push_back(fixture(name));
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> edges(1, 8);
    for (int i = 0; i < 200; ++i) cases.push_back(support::random_complex(rng, edges(rng), 4));
    int bad = 0;
    for (const auto& b : cases) {
        const auto q = derive_quiver(b);
        const auto back = quiver_to_complex(quiver_from_json(to_json(q)));
        const bool quiver_ok = back.complex().alpha_map() == b.complex().alpha_map() &&
                               back.complex().sigma_map() == b.complex().sigma_map() && back.dart_mults() == b.dart_mults();
        const auto doc = dump(to_json(b));
        const auto parsed = complex_from_json(Json::parse(doc));
        const bool doc_ok = same(parsed, b) && dump(to_json(parsed)) == doc;
        bad += !(quiver_ok && doc_ok);
    }
    // fixture files are stored in serialized form
    int files = 0;
    for (const char* name : {"e1_segment", "e2_lambda1", "e3_lambda2", "e4_decagon_c1", "e4_decagon_c2", "e5_star",
                             "e6_loop", "e6_extended", "path3", "star_a", "star_b"}) {
        std::ifstream in(support::fixture_path(std::string(name) + ".json"));
        const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        bad += dump(to_json(fixture(name))) != text;
        ++files;
    }
    // hand-written quivers of the two algebras
    const auto e1 = quiver_to_complex(quiver_from_json(read_json_file(support::fixture_path("q1.json"))));
    const auto e2 = quiver_to_complex(quiver_from_json(read_json_file(support::fixture_path("q2.json"))));
    bad += !isomorphic(e1, fixture("e2_lambda1"));
    bad += !isomorphic(e2, fixture("e3_lambda2"));
    Outcome o;
    o.pass = bad == 0;
    o.detail = std::to_string(cases.size()) + " complexes, " + std::to_string(files) + " fixture files, 2 quivers, " +
               std::to_string(bad) + " failures";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
        {"center agreement", center_agreement},
        {"multiplicity recovery", multiplicity_recovery},
        {"invariance under moves", move_invariance},
        {"bipartite example", bipartite_example},
        {"tilting complex checks", tilting_checks},
        {"genus-0 decision", genus0_theorem},
        {"decagon pair", decagons},
        {"sphere bipartiteness", sphere_bipartite},
        {"round trips", round_trips},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        std::cout << "criterion " << i + 1 << " (" << criteria[i].first << "): " << (o.pass ? "PASS" : "FAIL") << " ["
                  << o.detail << "]" << std::endl;
    }
    return all ? 0 : 1;
}
