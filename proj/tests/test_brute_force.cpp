#include <gtest/gtest.h>

#include "jumploci/brute_force.hpp"
#include "jumploci/models.hpp"

using namespace jumploci;

namespace {

/// Pairs (x, y) in sl2(F_p)^2 with [x, y] = 0: the zero element commutes with
/// everything, and each nonzero x has a one-dimensional centralizer.
std::size_t commuting_pairs(std::size_t p) {
    const std::size_t q = p * p * p;
    return q + (q - 1) * p;
}

}  // namespace

TEST(BruteForce, TorusCensusMatchesClosedForm) {
    const Field f = Field::modular(3);
    const auto r = brute_force_flat(build_torus_model(2, 2, f), build_sl(2, f));
    EXPECT_EQ(r.scanned, 729u);
    EXPECT_EQ(r.solutions.size(), commuting_pairs(3));
}

TEST(BruteForce, SolutionsAreFlatAndLexicographic) {
    const Field f = Field::modular(3);
    const Cdga A = build_surface_model(1, f);
    const LieAlgebra g = build_sol2(f);
    const auto r = brute_force_flat(A, g);
    ASSERT_FALSE(r.solutions.empty());
    EXPECT_TRUE(r.solutions.front().is_zero());
    for (const auto& w : r.solutions) EXPECT_TRUE(is_flat(A, g, w));
}

TEST(BruteForce, JobsDoNotChangeTheResult) {
    const Field f = Field::modular(3);
    const Cdga A = build_surface_model(1, f);
    const LieAlgebra g = build_sl(2, f);
    const auto one = brute_force_flat(A, g, 1);
    const auto four = brute_force_flat(A, g, 4);
    ASSERT_EQ(one.solutions.size(), four.solutions.size());
    for (std::size_t i = 0; i < one.solutions.size(); ++i) EXPECT_EQ(one.solutions[i].coeffs, four.solutions[i].coeffs);
}

TEST(BruteForce, RejectsRationalAndHugeSearches) {
    EXPECT_THROW(brute_force_flat(build_torus_model(2, 2), build_sl(2)), InputError);
    const Field f = Field::modular(5);
    EXPECT_THROW(brute_force_flat(build_surface_model(2, f), build_sl(3, f)), PreconditionError);
    EXPECT_THROW(brute_force_flat(build_torus_model(2, 2, f), build_sl(2, Field::modular(3))), InputError);
}
