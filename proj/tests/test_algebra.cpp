#include "support.hpp"

#include <gtest/gtest.h>

using namespace brauer;
using brauer::support::fixture;

TEST(Algebra, Dimensions) {
    EXPECT_EQ(AlgebraTable(fixture("e1_segment")).dim(), 2);
    EXPECT_EQ(AlgebraTable(fixture("e2_lambda1")).dim(), 18);
    EXPECT_EQ(AlgebraTable(fixture("e6_loop")).dim(), 4);
    EXPECT_EQ(AlgebraTable(fixture("e5_star")).dim(), 12);
}

TEST(Algebra, DimensionMatchesFormula) {
    std::mt19937 rng(5);
    for (int i = 0; i < 40; ++i) {
        const auto b = support::random_complex(rng, 1 + i % 5, 3);
        const AlgebraTable t(b);
        EXPECT_EQ(t.dim(), expected_dimension(t.quiver()));
    }
}

TEST(Algebra, AssociativeOnLambdaOne) {
    const AlgebraTable t(fixture("e2_lambda1"));
    for (int a = 0; a < t.dim(); ++a)
        for (int b = 0; b < t.dim(); ++b)
            for (int c = 0; c < t.dim(); ++c) {
                const auto ab = t.multiply(basis_vector(a), basis_vector(b));
                const auto bc = t.multiply(basis_vector(b), basis_vector(c));
                ASSERT_EQ(t.multiply(ab, basis_vector(c)), t.multiply(basis_vector(a), bc));
            }
}

TEST(Algebra, UnitIsNeutral) {
    const AlgebraTable t(fixture("e3_lambda2"));
    for (int a = 0; a < t.dim(); ++a) {
        EXPECT_EQ(t.multiply(t.unit(), basis_vector(a)), basis_vector(a));
        EXPECT_EQ(t.multiply(basis_vector(a), t.unit()), basis_vector(a));
    }
}

TEST(Center, SmallExamples) {
    for (const auto& [name, dim] : std::vector<std::pair<const char*, int>>{
             {"e1_segment", 2}, {"e6_loop", 4}, {"e2_lambda1", 4}, {"e3_lambda2", 4}}) {
        const AlgebraTable t(fixture(name));
        EXPECT_EQ(static_cast<int>(center_oracle(t).size()), dim) << name;
        EXPECT_EQ(center_formula(t.quiver()).dim, dim) << name;
    }
}

TEST(Center, FormulaVectorsAreCentral) {
    const auto b = BrauerComplex(RibbonComplex({1, 0, 3, 2}, {2, 1, 0, 3}), {3, 1, 3, 1});
    const AlgebraTable t(b);
    const auto z = center_formula(t.quiver());
    EXPECT_EQ(z.dim, 5);
    for (const auto& v : center_vectors(t, z)) EXPECT_TRUE(is_central(t, v));
    EXPECT_EQ(static_cast<int>(detail::independent(center_vectors(t, z)).size()), z.dim);
}

TEST(Nilpotency, RecoversMultiplicities) {
    const auto b = BrauerComplex(RibbonComplex({1, 0, 3, 2}, {2, 1, 0, 3}), {3, 1, 3, 1});
    const AlgebraTable t(b);
    EXPECT_EQ(nilpotency_from_center(t, center_oracle(t)), (std::vector<int>{1, 1, 3}));
    const AlgebraTable t2(fixture("e2_lambda1"));
    EXPECT_EQ(nilpotency_from_center(t2, center_oracle(t2)), (std::vector<int>{1, 1}));
}

TEST(Nilpotency, LoneLoopOfMultiplicityOne) {
    // both loops survive in Z / Soc Z, so the quotient is not K
    const AlgebraTable t(fixture("e6_loop"));
    EXPECT_EQ(nilpotency_from_center(t, center_oracle(t)), (std::vector<int>{2, 2}));
}

TEST(Hom, ProjectivesMatchPathCounts) {
    const AlgebraTable t(fixture("e2_lambda1"));
    for (int i = 0; i < t.vertex_count(); ++i)
        for (int j = 0; j < t.vertex_count(); ++j)
            EXPECT_EQ(hom_complexes(t, TwoTermComplex::stalk(i), TwoTermComplex::stalk(j), 0),
                      static_cast<int>(t.between(i, j).size()));
}

TEST(Hom, StalksHaveNoShiftedMaps) {
    const AlgebraTable t(fixture("e2_lambda1"));
    for (int s : {-1, 1}) EXPECT_EQ(hom_complexes(t, TwoTermComplex::stalk(0), TwoTermComplex::stalk(1), s), 0);
}
