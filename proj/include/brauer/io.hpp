#pragma once

// JSON documents, census tables and DOT export.
//
// ComplexDocument:
//   {"darts": N, "alpha": [[d, e], ...], "sigma": [[cycle], ...],
//    "mult": {"<vertex dart>": m, ...}, "edge_labels": {"<edge>": "x"}}
// GraphDocument:
//   {"edges": [id, ...], "vertices": [{"id": v, "mult": m,
//    "rotation": [[edge id, end], ...]}, ...]}
// where end is 0 or 1 and names one endpoint of the edge.

#include "brauer/canonical.hpp"
#include "brauer/invariants.hpp"
#include "brauer/orbit.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace brauer {

using Json = nlohmann::json;

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

inline int as_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) parse_fail(what + " must be an integer");
    return j.get<int>();
}

inline Dart dart_key(const std::string& key, int n, const std::string& what) {
    std::size_t used = 0;
    int d = -1;
    try {
        d = std::stoi(key, &used);
    } catch (const std::exception&) {
        parse_fail(what + " key '" + key + "' is not a dart");
    }
    if (used != key.size() || d < 0 || d >= n) parse_fail(what + " key '" + key + "' is not a dart");
    return d;
}

inline void throw_issues(const std::vector<Issue>& issues) {
    if (!issues.empty()) throw Error(issues);
}

} // namespace detail

// ---------------------------------------------------------------------------
// Complex documents

inline Json to_json(const BrauerComplex& b) {
    const auto& c = b.complex();
    Json doc;
    doc["darts"] = c.dart_count();
    Json alpha = Json::array();
    for (Dart e : c.edge_ids()) alpha.push_back({e, c.alpha(e)});
    doc["alpha"] = alpha;
    Json sigma = Json::array(), mult = Json::object();
    for (const auto& cyc : c.vertex_rotations()) {
        sigma.push_back(cyc);
        mult[std::to_string(cyc.front())] = b.dart_mult(cyc.front());
    }
    doc["sigma"] = sigma;
    doc["mult"] = mult;
    if (!c.edge_labels().empty()) {
        Json labels = Json::object();
        for (const auto& [e, label] : c.edge_labels()) labels[std::to_string(e)] = label;
        doc["edge_labels"] = labels;
    }
    return doc;
}

inline BrauerComplex complex_from_graph_document(const Json& doc);

inline BrauerComplex complex_from_json(const Json& doc) {
    using detail::parse_fail;
    if (!doc.is_object()) parse_fail("document must be a JSON object");
    if (doc.contains("vertices")) return complex_from_graph_document(doc);
    for (const char* key : {"darts", "alpha", "sigma", "mult"})
        if (!doc.contains(key)) parse_fail(std::string("missing field '") + key + "'");
    const int n = detail::as_int(doc["darts"], "darts");
    if (n < 0) parse_fail("darts must be non-negative");
    if (n % 2) throw Error(ErrorCode::odd_dart_count, "dart count " + std::to_string(n) + " is odd");
    if (n == 0) parse_fail("a complex needs at least one edge");
    std::vector<Dart> alpha(n, -1), sigma(n, -1);
    std::vector<Issue> issues;
    auto in_range = [&](const Json& j, const std::string& what) {
        const int d = detail::as_int(j, what);
        if (d < 0 || d >= n) parse_fail(what + " " + std::to_string(d) + " out of range");
        return d;
    };
    if (!doc["alpha"].is_array()) parse_fail("alpha must be a list of pairs");
    for (const auto& pair : doc["alpha"]) {
        if (!pair.is_array() || pair.size() != 2) parse_fail("alpha entries must be pairs");
        const Dart x = in_range(pair[0], "alpha dart"), y = in_range(pair[1], "alpha dart");
        if (x == y) {
            issues.push_back({ErrorCode::fixed_point_in_alpha, "dart " + std::to_string(x) + " paired with itself"});
            continue;
        }
        if (alpha[x] != -1 || alpha[y] != -1) {
            issues.push_back({ErrorCode::not_an_involution, "dart in two alpha pairs"});
            continue;
        }
        alpha[x] = y;
        alpha[y] = x;
    }
    for (Dart d = 0; d < n; ++d)
        if (alpha[d] == -1 && issues.empty())
            issues.push_back({ErrorCode::not_an_involution, "dart " + std::to_string(d) + " has no alpha partner"});
    if (!doc["sigma"].is_array()) parse_fail("sigma must be a list of cycles");
    for (const auto& cyc : doc["sigma"]) {
        if (!cyc.is_array() || cyc.empty()) parse_fail("sigma cycles must be non-empty lists");
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const Dart d = in_range(cyc[i], "sigma dart");
            if (sigma[d] != -1) {
                issues.push_back({ErrorCode::not_a_permutation, "dart " + std::to_string(d) + " in two sigma cycles"});
                continue;
            }
            sigma[d] = in_range(cyc[(i + 1) % cyc.size()], "sigma dart");
        }
    }
    for (Dart d = 0; d < n; ++d)
        if (sigma[d] == -1)
            issues.push_back({ErrorCode::not_a_permutation, "dart " + std::to_string(d) + " missing from sigma"});
    detail::throw_issues(issues);

    std::map<Dart, std::string> labels;
    if (doc.contains("edge_labels")) {
        if (!doc["edge_labels"].is_object()) parse_fail("edge_labels must be an object");
        for (const auto& [key, value] : doc["edge_labels"].items()) {
            const Dart d = detail::dart_key(key, n, "edge_labels");
            if (!value.is_string()) parse_fail("edge labels must be strings");
            labels[std::min(d, alpha[d])] = value.get<std::string>();
        }
    }
    RibbonComplex c(std::move(alpha), std::move(sigma), std::move(labels));
    detail::throw_issues(validate(c));

    if (!doc["mult"].is_object()) parse_fail("mult must be an object keyed by dart");
    std::vector<int> vmult(c.vertex_count(), 0);
    for (const auto& [key, value] : doc["mult"].items()) {
        const Dart d = detail::dart_key(key, n, "mult");
        const int m = detail::as_int(value, "multiplicity");
        const int v = c.vertex_of(d);
        if (m < 1) issues.push_back({ErrorCode::bad_multiplicity, "multiplicity at dart " + key + " is below 1"});
        else if (vmult[v] != 0 && vmult[v] != m)
            issues.push_back({ErrorCode::bad_multiplicity, "conflicting multiplicities at the vertex of dart " + key});
        else vmult[v] = m;
    }
    for (int v = 0; v < c.vertex_count(); ++v)
        if (vmult[v] == 0 && issues.empty())
            issues.push_back({ErrorCode::bad_multiplicity,
                              "no multiplicity for the vertex of dart " + std::to_string(c.vertex_rep(v))});
    detail::throw_issues(issues);
    return BrauerComplex::with_vertex_mults(std::move(c), vmult);
}

/// Compiles a GraphDocument: edge k of the list becomes darts 2k, 2k+1,
/// its ends 0 and 1.  Edge ids become edge labels.
inline BrauerComplex complex_from_graph_document(const Json& doc) {
    using detail::parse_fail;
    if (!doc.contains("edges") || !doc["edges"].is_array()) parse_fail("graph document needs an 'edges' list");
    if (!doc["vertices"].is_array()) parse_fail("'vertices' must be a list");
    std::map<std::string, int> edge_index;
    std::map<Dart, std::string> labels;
    for (const auto& id : doc["edges"]) {
        const std::string name = id.is_string() ? id.get<std::string>() : id.dump();
        if (!edge_index.emplace(name, static_cast<int>(edge_index.size())).second)
            parse_fail("edge '" + name + "' listed twice");
        labels[2 * (static_cast<int>(edge_index.size()) - 1)] = name;
    }
    const int n = 2 * static_cast<int>(edge_index.size());
    if (n == 0) parse_fail("a complex needs at least one edge");
    std::vector<Dart> alpha(n), sigma(n, -1), mult(n, 0);
    for (Dart d = 0; d < n; ++d) alpha[d] = d ^ 1;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_object() || !v.contains("rotation") || !v["rotation"].is_array() || v["rotation"].empty())
            parse_fail("every vertex needs a non-empty 'rotation'");
        const int m = v.contains("mult") ? detail::as_int(v["mult"], "mult") : 1;
        if (m < 1) throw Error(ErrorCode::bad_multiplicity, "vertex multiplicity below 1");
        std::vector<Dart> cyc;
        for (const auto& ref : v["rotation"]) {
            if (!ref.is_array() || ref.size() != 2) parse_fail("rotation entries are [edge id, end] pairs");
            const std::string name = ref[0].is_string() ? ref[0].get<std::string>() : ref[0].dump();
            auto it = edge_index.find(name);
            if (it == edge_index.end()) parse_fail("rotation names unknown edge '" + name + "'");
            const int end = detail::as_int(ref[1], "edge end");
            if (end != 0 && end != 1) parse_fail("edge end must be 0 or 1");
            cyc.push_back(2 * it->second + end);
        }
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (sigma[cyc[i]] != -1)
                throw Error(ErrorCode::inconsistent_partition, "edge endpoint used twice in rotations");
            sigma[cyc[i]] = cyc[(i + 1) % cyc.size()];
            mult[cyc[i]] = m;
        }
    }
    for (Dart d = 0; d < n; ++d)
        if (sigma[d] == -1)
            throw Error(ErrorCode::inconsistent_partition,
                        "edge '" + labels[d & ~1] + "' end " + std::to_string(d & 1) + " is in no rotation");
    RibbonComplex c(std::move(alpha), std::move(sigma), std::move(labels));
    detail::throw_issues(validate(c));
    return BrauerComplex(std::move(c), std::vector<int>(mult.begin(), mult.end()));
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::parse_error, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::parse_error, path + ": " + e.what());
    }
}

inline BrauerComplex load_complex(const std::string& path) { return complex_from_json(read_json_file(path)); }

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Other documents

inline Json to_json(const InvariantSignature& s) {
    return {{"n", s.n},           {"perimeters", s.perimeters}, {"mults", s.mults},
            {"genus", s.genus},   {"bipartite", s.bipartite},   {"center_dim", s.center_dim}};
}

inline Json to_json(const ExtendedQuiver& q) {
    Json arrows = Json::array();
    for (const auto& a : q.arrows)
        arrows.push_back({{"name", a.name}, {"source", a.source}, {"target", a.target}, {"formal", a.formal}});
    return {{"vertices", q.vertex_count}, {"vertex_edge", q.vertex_edge}, {"arrows", arrows},
            {"a_cycles", q.a_cycles},      {"g_cycles", q.g_cycles},       {"a_cycle_mult", q.a_cycle_mult}};
}

inline ExtendedQuiver quiver_from_json(const Json& j) {
    using detail::parse_fail;
    for (const char* key : {"vertices", "arrows", "a_cycles", "g_cycles", "a_cycle_mult"})
        if (!j.contains(key)) parse_fail(std::string("quiver document lacks '") + key + "'");
    ExtendedQuiver q;
    try {
        q.vertex_count = j["vertices"].get<int>();
        if (j.contains("vertex_edge")) q.vertex_edge = j["vertex_edge"].get<std::vector<Dart>>();
        for (const auto& a : j["arrows"]) {
            Arrow arrow;
            arrow.name = a.value("name", std::string{});
            arrow.source = a.at("source").get<int>();
            arrow.target = a.at("target").get<int>();
            q.arrows.push_back(arrow);
        }
        q.a_cycles = j["a_cycles"].get<std::vector<std::vector<int>>>();
        q.g_cycles = j["g_cycles"].get<std::vector<std::vector<int>>>();
        q.a_cycle_mult = j["a_cycle_mult"].get<std::vector<int>>();
    } catch (const Json::exception& e) {
        parse_fail(std::string("malformed quiver document: ") + e.what());
    }
    const int n = q.arrow_count();
    for (const auto* cycles : {&q.a_cycles, &q.g_cycles})
        for (const auto& cyc : *cycles)
            for (int a : cyc)
                if (a < 0 || a >= n) throw Error(ErrorCode::inconsistent_partition, "cycle names a missing arrow");
    if (q.a_cycle_mult.size() != q.a_cycles.size())
        throw Error(ErrorCode::inconsistent_partition, "one multiplicity per A-cycle");
    std::vector<int> seen(n, 0);
    for (const auto& cyc : q.a_cycles)
        for (int a : cyc) ++seen[a];
    if (std::any_of(seen.begin(), seen.end(), [](int k) { return k != 1; }))
        throw Error(ErrorCode::inconsistent_partition, "A-cycles do not partition the arrows");
    q.index_cycles();
    return q;
}

inline Json to_json(const CenterBasis& z) {
    Json m = Json::array();
    for (const auto& [cycle, power] : z.m_part) m.push_back({{"a_cycle", cycle}, {"power", power}});
    return {{"dim", z.dim}, {"m_part", m}, {"q_part", z.q_part}, {"s_part", z.s_part}, {"nilpotency", z.nilpotency}};
}

inline Json to_json(const MoveLog& log) {
    Json moves = Json::array();
    for (const auto& m : log.moves)
        moves.push_back({{"edge", m.edge}, {"type", std::string(to_string(m.type))}, {"hash", m.hash_after}});
    return moves;
}

inline MoveLog move_log_from_json(const Json& j) {
    MoveLog log;
    if (!j.is_array()) detail::parse_fail("a move log is a list");
    for (const auto& m : j) {
        LoggedMove step;
        try {
            step.edge = m.at("edge").get<Dart>();
            const auto type = m.at("type").get<std::string>();
            if (type == "type1") step.type = MoveType::leaf_shift;
            else if (type == "type2") step.type = MoveType::loop_shift;
            else if (type == "type3") step.type = MoveType::general;
            else detail::parse_fail("unknown move type '" + type + "'");
            step.hash_after = m.at("hash").get<std::string>();
        } catch (const Json::exception& e) {
            detail::parse_fail(std::string("malformed move: ") + e.what());
        }
        log.moves.push_back(step);
    }
    return log;
}

inline Json to_json(const EquivalenceVerdict& v) {
    Json out = {{"equivalent", v.equivalent}};
    if (!v.equivalent) out["differing"] = v.differing;
    if (v.witness) {
        out["witness"] = {{"first", to_json(v.witness->first)},
                          {"second", to_json(v.witness->second)},
                          {"common_hash", v.witness->common_hash}};
    }
    return out;
}

inline Json to_json(const OrbitReport& r) {
    Json members = Json::array();
    for (std::size_t i = 0; i < r.members.size(); ++i) {
        Json m = {{"index", i}, {"parent", r.parent[i]}, {"hash", canonical_hash(r.members[i])}};
        if (r.parent[i] >= 0) m["via_edge"] = r.via_edge[i];
        members.push_back(m);
    }
    Json by_type = Json::object();
    for (const auto& [type, count] : r.moves_by_type) by_type[std::string(to_string(type))] = count;
    return {{"size", r.members.size()},
            {"frontier_exhausted", r.frontier_exhausted},
            {"symmetric", r.symmetric},
            {"transitions", r.transitions.size()},
            {"self_moves", r.self_moves},
            {"moves_by_type", by_type},
            {"members", members}};
}

inline Json to_json(const Census& c) {
    Json groups = Json::array();
    for (const auto& g : c.groups)
        groups.push_back({{"signature", to_json(g.signature)},
                          {"classes", g.classes},
                          {"orbits", g.orbits},
                          {"strong_components", g.strong_components},
                          {"separated", g.separated}});
    return {{"max_edges", c.max_edges},
            {"max_mult", c.max_mult},
            {"complexes", c.complexes.size()},
            {"moves_preserve_signature", c.moves_preserve_signature},
            {"groups", groups}};
}

inline std::string census_csv(const Census& c) {
    auto join = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
        return s;
    };
    std::ostringstream out;
    out << "n,perimeters,mults,genus,bipartite,center_dim,classes,orbits,strong_components,separated\n";
    for (const auto& g : c.groups) {
        const auto& s = g.signature;
        out << s.n << ',' << join(s.perimeters) << ',' << join(s.mults) << ',' << s.genus << ','
            << (s.bipartite ? 1 : 0) << ',' << s.center_dim << ',' << g.classes << ',' << g.orbits << ','
            << g.strong_components << ',' << (g.separated ? 1 : 0) << '\n';
    }
    return out.str();
}

/// 1-skeleton as an undirected multigraph; vertices named by their
/// representative dart and labeled with the multiplicity.
inline std::string to_dot(const BrauerComplex& b) {
    const auto& c = b.complex();
    std::ostringstream out;
    out << "graph brauer {\n";
    for (int v = 0; v < c.vertex_count(); ++v)
        out << "  v" << c.vertex_rep(v) << " [label=\"" << b.vertex_mult(v) << "\"];\n";
    for (Dart e : c.edge_ids()) {
        out << "  v" << c.vertex_rep(c.vertex_of(e)) << " -- v" << c.vertex_rep(c.vertex_of(c.alpha(e)));
        auto it = c.edge_labels().find(e);
        out << " [label=\"" << (it != c.edge_labels().end() ? it->second : std::to_string(e)) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace brauer
