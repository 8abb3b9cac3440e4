#include "support.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace brauer;
using brauer::support::fixture;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error";
    return ErrorCode::parse_error;
}

} // namespace

TEST(Reduce, StarIsReduced) {
    const auto r = reduce(fixture("e5_star"), 0);
    EXPECT_EQ(r.type, 1);
    EXPECT_TRUE(r.log.empty());
}

TEST(Reduce, PathFromAnEnd) {
    // hub at the end dart 0; the far edge is a leaf and shifts once
    const auto r = reduce(fixture("path3"), 0);
    EXPECT_EQ(r.log.size(), 1u);
    EXPECT_EQ(r.log.moves[0].type, MoveType::leaf_shift);
    EXPECT_EQ(degree_at(r.complex, r.hub), 2);
    EXPECT_TRUE(all_edges_at(r.complex, r.hub));
}

TEST(Reduce, Errors) {
    EXPECT_EQ(code_of([] { reduce(fixture("e2_lambda1")); }), ErrorCode::nonzero_genus);
    EXPECT_EQ(code_of([] { reduce(fixture("e1_segment")); }), ErrorCode::single_edge_complex);
}

TEST(Reduce, EveryPlanarComplexReduces) {
    for (const auto& b : enumerate_planar(5, 1)) {
        if (b.complex().edge_count() < 2) continue;
        const auto r = reduce(b);
        ASSERT_TRUE(all_edges_at(r.complex, r.hub));
        if (r.type == 1) {
            ASSERT_EQ(count_loops(r.complex.complex()), 0);
        } else {
            ASSERT_TRUE(is_reduced_type2(r.complex, r.hub));
        }
        ASSERT_TRUE(isomorphic(replay(b, r.log), r.complex));
    }
}

TEST(DoublePerimeters, InfeasibleTargets) {
    // three loops nested in a row: faces 1, 2, 2, 1
    const auto b = from_dual_tree(detail::caterpillar({1, 2, 2, 1}, 1));
    const Dart hub = 0;
    EXPECT_EQ(code_of([&] { equalize_double_perimeters(b, hub, {{1, 1}, {1, 1}, {2, 2}, {2, 0}}); }),
              ErrorCode::infeasible_target);
    EXPECT_EQ(code_of([&] { equalize_double_perimeters(b, hub, {{1, 1}, {1, 1}, {2, 1}, {2, 3}}); }),
              ErrorCode::infeasible_target);
    EXPECT_EQ(code_of([&] { equalize_double_perimeters(fixture("e5_star"), 0, {{6, 0}}); }), ErrorCode::wrong_type);
}

TEST(DoublePerimeters, BalancingSteps) {
    const DoublePerimeters from{{3, 1}, {5, 5}, {5, 1}, {1, 1}};
    const DoublePerimeters to{{1, 1}, {3, 3}, {5, 3}, {5, 1}};
    const auto steps = balancing_steps(from, to);
    ASSERT_FALSE(steps.empty());
    auto last = steps.back();
    auto want = to;
    std::sort(want.begin(), want.end());
    EXPECT_EQ(last, want);
}

TEST(DoublePerimeters, Equalize) {
    // loops with leaves: find one whose external perimeters are not canonical
    int tried = 0;
    for (const auto& b : enumerate_planar(5, 1)) {
        if (b.complex().edge_count() < 3) continue;
        const auto r = reduce(b);
        if (r.type != 2) continue;
        const auto perims = perimeters(r.complex.complex());
        const auto ext = detail::canonical_external(perims);
        DoublePerimeters target;
        for (std::size_t i = 0; i < perims.size(); ++i) target.emplace_back(perims[i], ext[i]);
        const auto [moved, log] = equalize_double_perimeters(r.complex, r.hub, target);
        EXPECT_EQ(double_perimeters(moved.complex()), target);
        EXPECT_TRUE(isomorphic(replay(r.complex, log), moved));
        ++tried;
    }
    EXPECT_GT(tried, 0);
}

TEST(DualTree, RoseOfTwoLoops) {
    // two nested loops at one vertex: three faces, a path
    const auto b = BrauerComplex::uniform(RibbonComplex({1, 0, 3, 2}, {1, 2, 3, 0}), 1);
    ASSERT_EQ(genus(b.complex()), 0);
    const auto t = dual_tree(b);
    EXPECT_EQ(t.nodes, 3);
    auto deg = t.degrees();
    std::sort(deg.begin(), deg.end());
    EXPECT_EQ(deg, (std::vector<int>{1, 1, 2}));
}

TEST(DualTree, SingleLoop) {
    const auto t = dual_tree(fixture("e6_loop"));
    EXPECT_EQ(t.nodes, 2);
    EXPECT_EQ(t.ends.size(), 1u);
}

TEST(DualTree, Errors) {
    EXPECT_EQ(code_of([] { dual_tree(fixture("e6_extended")); }), ErrorCode::has_leaves);
    EXPECT_EQ(code_of([] { dual_tree(fixture("e2_lambda1")); }), ErrorCode::wrong_type);
}

TEST(DualTree, RoundTripAndMoves) {
    int loops_only = 0;
    for (const auto& b : enumerate_planar(5, 1)) {
        const auto& c = b.complex();
        if (c.vertex_count() != 1) continue;
        ++loops_only;
        const auto t = dual_tree(b);
        EXPECT_EQ(t.nodes, c.edge_count() + 1);
        EXPECT_TRUE(isomorphic(from_dual_tree(t), b));
        // tree moves are the complex moves read on the tree
        if (c.edge_count() < 2) continue;
        for (int k = 0; k < static_cast<int>(t.ends.size()); ++k) {
            const auto moved = tree_move(t, k);
            EXPECT_TRUE(isomorphic(from_dual_tree(moved), apply_move(from_dual_tree(t), 2 * k)));
        }
    }
    EXPECT_GT(loops_only, 3);
}

TEST(Canonical, RepresentativeHasRequestedInvariants) {
    for (const auto& b : enumerate_planar(5, 2)) {
        const auto rep = canonical_representative(perimeters(b.complex()), b.mult_multiset());
        ASSERT_EQ(perimeters(rep.complex()), perimeters(b.complex()));
        ASSERT_EQ(rep.mult_multiset(), b.mult_multiset());
        ASSERT_EQ(genus(rep.complex()), 0);
    }
}

TEST(Canonical, InfeasibleInvariants) {
    EXPECT_EQ(code_of([] { canonical_representative({3, 3}, {1, 1}); }), ErrorCode::infeasible_target);
}

TEST(Canonicalize, LogsReplay) {
    Canonicalizer cz;
    for (const auto& b : enumerate_planar(4, 2)) {
        const auto r = cz.run(b);
        const auto end = replay(b, r.log);
        ASSERT_TRUE(isomorphic(end, canonical_representative(perimeters(b.complex()), b.mult_multiset())));
    }
}

TEST(Replay, DetectsTampering) {
    const auto b = fixture("star_a");
    MoveLog log = canonicalize(b).log;
    ASSERT_FALSE(log.empty());
    log.moves.back().hash_after = "0000000000000000";
    EXPECT_EQ(code_of([&] { replay(b, log); }), ErrorCode::search_exhausted);
}

TEST(Decide, Stars) {
    const auto v = decide_equivalent(fixture("star_a"), fixture("star_b"), true);
    ASSERT_TRUE(v.equivalent);
    ASSERT_TRUE(v.witness);
    EXPECT_EQ(canonical_hash(replay(fixture("star_a"), v.witness->first)), v.witness->common_hash);
    EXPECT_EQ(canonical_hash(replay(fixture("star_b"), v.witness->second)), v.witness->common_hash);
}

TEST(Decide, SegmentsAreTrivial) {
    const auto v = decide_equivalent(fixture("e1_segment"), fixture("e1_segment"), true);
    EXPECT_TRUE(v.equivalent);
    EXPECT_TRUE(v.witness->first.empty());
    EXPECT_TRUE(v.witness->second.empty());
}

TEST(Decide, DistinguishingFields) {
    const auto v = decide_equivalent(fixture("e5_star"), fixture("star_a"), false);
    EXPECT_FALSE(v.equivalent);
    EXPECT_EQ(v.differing, std::vector<std::string>{"mults"});
    EXPECT_EQ(code_of([] { decide_equivalent(fixture("e2_lambda1"), fixture("e5_star"), false); }),
              ErrorCode::nonzero_genus);
}

TEST(SearchDepth, EnvironmentOverride) {
    ::unsetenv("BRAUER_SEARCH_DEPTH");
    EXPECT_EQ(search_depth(), 12);
    ::setenv("BRAUER_SEARCH_DEPTH", "3", 1);
    EXPECT_EQ(search_depth(), 3);
    ::setenv("BRAUER_SEARCH_DEPTH", "junk", 1);
    EXPECT_EQ(search_depth(), 12);
    ::setenv("BRAUER_SEARCH_DEPTH", "0", 1);
    EXPECT_EQ(search_depth(), 12);
    ::unsetenv("BRAUER_SEARCH_DEPTH");
}

TEST(SearchDepth, TinyBudgetExhausts) {
    // a goal that no move reaches
    const auto b = fixture("path3");
    EXPECT_FALSE(bounded_search(b, 0, [](const BrauerComplex&, Dart) { return false; }, 3).has_value());
    ::setenv("BRAUER_SEARCH_DEPTH", "1", 1);
    EXPECT_EQ(code_of([&] { require_search(b, 0, [](const BrauerComplex&, Dart) { return false; }, "nothing"); }),
              ErrorCode::search_exhausted);
    ::unsetenv("BRAUER_SEARCH_DEPTH");
}
