#include "support.hpp"

#include <gtest/gtest.h>

using namespace brauer;
using brauer::support::fixture;

TEST(Signature, LambdaOne) {
    const auto s = signature(fixture("e2_lambda1"));
    EXPECT_EQ(s.n, 3);
    EXPECT_EQ(s.perimeters, std::vector<int>{6});
    EXPECT_EQ(s.mults, (std::vector<int>{1, 1}));
    EXPECT_EQ(s.genus, 1);
    EXPECT_TRUE(s.bipartite);
}

TEST(Signature, LambdaTwoIsNotBipartite) {
    const auto s = signature(fixture("e3_lambda2"));
    EXPECT_EQ(s.genus, 1);
    EXPECT_FALSE(s.bipartite);
}

TEST(Signature, Segment) {
    const auto s = signature(fixture("e1_segment"));
    EXPECT_EQ(s.n, 1);
    EXPECT_EQ(s.perimeters, std::vector<int>{2});
    EXPECT_EQ(s.mults, (std::vector<int>{1, 1}));
    EXPECT_EQ(s.genus, 0);
    EXPECT_TRUE(s.bipartite);
}

TEST(Compare, LambdaPairDiffersOnlyInBipartiteness) {
    EXPECT_EQ(compare(signature(fixture("e2_lambda1")), signature(fixture("e3_lambda2"))),
              std::vector<std::string>{"bipartite"});
}

TEST(Compare, DecagonsIndistinguishable) {
    EXPECT_TRUE(compare(signature(fixture("e4_decagon_c1")), signature(fixture("e4_decagon_c2"))).empty());
}

TEST(Bipartite, LoopRulesItOut) {
    EXPECT_FALSE(is_bipartite(fixture("e6_loop").complex()));
    EXPECT_TRUE(is_bipartite(fixture("path3").complex()));
}
