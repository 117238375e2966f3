#include <gtest/gtest.h>

#include <random>

#include "jumploci/flat.hpp"

using namespace jumploci;

TEST(LieAlgebras, BuildersSatisfyAxioms) {
    for (int n = 2; n <= 4; ++n) {
        const LieAlgebra g = build_sl(n);
        EXPECT_EQ(g.dim(), static_cast<std::size_t>(n * n - 1));
        EXPECT_TRUE(check_lie_axioms(g).empty());
    }
    EXPECT_TRUE(check_lie_axioms(build_sol2()).empty());
    EXPECT_TRUE(check_lie_axioms(build_abelian(3)).empty());
    EXPECT_TRUE(check_lie_axioms(build_sl(3, Field::modular(5))).empty());
}

TEST(LieAlgebras, Sl2Brackets) {
    const LieAlgebra g = build_sl(2);
    const auto E = g.basis_vector(g.index_of("E")), F = g.basis_vector(g.index_of("F")), H = g.basis_vector(g.index_of("H"));
    EXPECT_EQ(g.bracket(E, F), H);
    EXPECT_EQ(g.bracket(H, E), scaled(E, Scalar(g.field, 2)));
    EXPECT_EQ(g.bracket(H, F), scaled(F, Scalar(g.field, -2)));
}

TEST(LieAlgebras, Sol2Brackets) {
    const LieAlgebra g = build_sol2();
    EXPECT_EQ(g.bracket(g.basis_vector(0), g.basis_vector(1)), scaled(g.basis_vector(1), Scalar(g.field, 2)));
}

TEST(LieAlgebras, RootVectorsBracketLikeMatrixUnits) {
    for (int n = 2; n <= 4; ++n) {
        const LieAlgebra g = build_sl(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k) {
                    if (i == j || j == k || i == k) continue;
                    // [E_ij, E_jk] = E_ik
                    EXPECT_EQ(g.bracket(g.basis_vector(g.root_vector(i, j)), g.basis_vector(g.root_vector(j, k))),
                              g.basis_vector(g.root_vector(i, k)));
                }
    }
}

TEST(Reps, BuildersAreCompatibleWithBrackets) {
    for (const LieAlgebra& g : {build_sl(2), build_sl(3), build_sl(4), build_sol2(), build_abelian(2)}) {
        for (const LieRep& r : {rep_defining(g), rep_adjoint(g), rep_trivial(g, 3), rep_direct_sum(rep_trivial(g, 1), rep_adjoint(g))}) {
            EXPECT_TRUE(bracket_failures(r).empty()) << g.name;
        }
    }
}

TEST(Reps, AbelianOneDefiningIsIdentity) {
    const LieRep r = rep_defining(build_abelian(1));
    ASSERT_EQ(r.matrices.size(), 1u);
    EXPECT_EQ(r.matrices[0], Matrix::from_ints({{1}}));
}

TEST(Reps, BadMatricesAreRejected) {
    const LieAlgebra g = build_sl(2);
    auto mats = rep_defining(g).matrices;
    std::swap(mats[0], mats[1]);
    mats[2] = Matrix::identity(2, g.field);
    EXPECT_THROW(make_rep(g, mats), InputError);
    EXPECT_THROW(make_rep(g, {Matrix::identity(2, g.field)}), InputError);
}

TEST(Reps, DeterminantShadow) {
    // det theta(c x) = c^m det theta(x) for the defining rep of sl_n.
    std::mt19937_64 rng(5);
    for (int n = 2; n <= 3; ++n) {
        const LieAlgebra g = build_sl(n);
        const LieRep r = rep_defining(g);
        for (int t = 0; t < 20; ++t) {
            Vector x = g.zero();
            for (auto& s : x) s = random_scalar(g.field, rng);
            const Scalar c = random_scalar(g.field, rng);
            EXPECT_EQ(det_theta(r, scaled(x, c)), c.pow(static_cast<unsigned>(n)) * det_theta(r, x));
        }
    }
}

TEST(Reps, NilpotentElementsHaveZeroDeterminant) {
    const LieAlgebra g = build_sl(3);
    const LieRep r = rep_defining(g);
    Vector x = g.zero();
    x[g.root_vector(1, 2)] = Scalar(g.field, 3);
    x[g.root_vector(2, 3)] = Scalar(g.field, -1);
    x[g.root_vector(1, 3)] = Scalar(g.field, 2);
    EXPECT_TRUE(det_theta(r, x).is_zero());
    // The adjoint determinant vanishes identically: ad x kills x.
    std::mt19937_64 rng(6);
    const LieRep ad = rep_adjoint(build_sl(2));
    for (int t = 0; t < 20; ++t) {
        Vector y = ad.lie.zero();
        for (auto& s : y) s = random_scalar(ad.lie.field, rng);
        EXPECT_TRUE(det_theta(ad, y).is_zero());
    }
}

TEST(Reps, FixedVectors) {
    const LieAlgebra g = build_sl(2);
    EXPECT_FALSE(fixed_vector(rep_adjoint(g)));
    EXPECT_FALSE(fixed_vector(rep_defining(g)));
    const auto v = fixed_vector(rep_direct_sum(rep_trivial(g, 1), rep_adjoint(g)));
    ASSERT_TRUE(v);
    EXPECT_FALSE(is_zero(*v));
}
