#include "support.hpp"

#include <gtest/gtest.h>

using namespace brauer;
using brauer::support::fixture;

namespace {

ErrorCode parse_code(const std::string& text) {
    try {
        complex_from_json(Json::parse(text));
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "parsed: " << text;
    return ErrorCode::parse_error;
}

} // namespace

TEST(ComplexDocument, FixturesAreByteStable) {
    for (const char* name : {"e1_segment", "e2_lambda1", "e3_lambda2", "e4_decagon_c1", "e5_star", "star_a"}) {
        std::ifstream in(support::fixture_path(std::string(name) + ".json"));
        const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        EXPECT_EQ(dump(to_json(fixture(name))), text) << name;
    }
}

TEST(ComplexDocument, EdgeLabelsSurvive) {
    const auto b = fixture("e4_decagon_c1");
    ASSERT_EQ(b.complex().edge_labels().size(), 5u);
    const auto back = complex_from_json(to_json(b));
    EXPECT_EQ(back.complex().edge_labels(), b.complex().edge_labels());
}

TEST(ComplexDocument, RandomRoundTrips) {
    std::mt19937 rng(23);
    for (int i = 0; i < 100; ++i) {
        const auto b = support::random_complex(rng, 1 + i % 8, 4);
        const auto back = complex_from_json(Json::parse(dump(to_json(b))));
        EXPECT_EQ(back.complex().alpha_map(), b.complex().alpha_map());
        EXPECT_EQ(back.complex().sigma_map(), b.complex().sigma_map());
        EXPECT_EQ(back.dart_mults(), b.dart_mults());
    }
}

TEST(ComplexDocument, Diagnostics) {
    EXPECT_EQ(parse_code(R"({"darts":2,"alpha":[[0,0]],"sigma":[[0,1]],"mult":{"0":1}})"),
              ErrorCode::fixed_point_in_alpha);
    EXPECT_EQ(parse_code(R"({"darts":4,"alpha":[[0,1],[2,3]],"sigma":[[0,1],[2,3]],"mult":{"0":1,"2":1}})"),
              ErrorCode::disconnected);
    EXPECT_EQ(parse_code(R"({"darts":2,"alpha":[[0,1]],"sigma":[[0],[1]],"mult":{"0":1}})"),
              ErrorCode::bad_multiplicity);
    EXPECT_EQ(parse_code(R"({"darts":2,"alpha":[[0,1]],"sigma":[[0],[1]],"mult":{"0":0,"1":1}})"),
              ErrorCode::bad_multiplicity);
    EXPECT_EQ(parse_code(R"({"darts":2,"alpha":[[0,1]],"sigma":[[0,1],[1]],"mult":{"0":1}})"),
              ErrorCode::not_a_permutation);
    EXPECT_EQ(parse_code(R"({"darts":2,"alpha":[[0,5]],"sigma":[[0,1]],"mult":{"0":1}})"), ErrorCode::parse_error);
    EXPECT_EQ(parse_code(R"({"darts":2})"), ErrorCode::parse_error);
    EXPECT_EQ(parse_code(R"([1,2])"), ErrorCode::parse_error);
}

TEST(ComplexDocument, MultiplicityByAnyDartOfVertex) {
    const auto b = complex_from_json(
        Json::parse(R"({"darts":4,"alpha":[[0,1],[2,3]],"sigma":[[0,2],[1],[3]],"mult":{"2":3,"1":1,"3":2}})"));
    EXPECT_EQ(b.mult_multiset(), (std::vector<int>{1, 2, 3}));
}

TEST(GraphDocument, CompilesToLambdaOne) {
    const auto g = fixture("e2_graph");
    EXPECT_TRUE(isomorphic(g, fixture("e2_lambda1")));
    EXPECT_EQ(g.complex().edge_labels().at(0), "a");
}

TEST(GraphDocument, EndpointUsedTwice) {
    const auto text = R"({"edges":["a"],"vertices":[{"id":"u","rotation":[["a",0],["a",0]]}]})";
    EXPECT_EQ(parse_code(text), ErrorCode::inconsistent_partition);
}

TEST(GraphDocument, MissingEndpoint) {
    const auto text = R"({"edges":["a"],"vertices":[{"id":"u","rotation":[["a",0]]}]})";
    EXPECT_EQ(parse_code(text), ErrorCode::inconsistent_partition);
}

TEST(QuiverDocument, RoundTrip) {
    const auto q = derive_quiver(fixture("e3_lambda2"));
    const auto back = quiver_from_json(to_json(q));
    EXPECT_EQ(to_json(back), to_json(q));
}

TEST(MoveLogDocument, RoundTrip) {
    const auto r = canonicalize(fixture("star_b"));
    const auto back = move_log_from_json(to_json(r.log));
    ASSERT_EQ(back.size(), r.log.size());
    EXPECT_TRUE(isomorphic(replay(fixture("star_b"), back), r.representative));
}

TEST(Census, CsvHeaderAndRows) {
    const auto c = census(2, 1);
    const auto csv = census_csv(c);
    EXPECT_EQ(csv.rfind("n,perimeters,mults,genus,bipartite,center_dim,classes,orbits", 0), 0u);
    EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), c.groups.size() + 1);
}

TEST(Dot, MentionsEveryEdge) {
    const auto dot = to_dot(fixture("e5_star"));
    EXPECT_EQ(std::count(dot.begin(), dot.end(), '-'), 6);
    EXPECT_NE(dot.find("graph brauer"), std::string::npos);
}
