#include <gtest/gtest.h>

#include <random>

#include "jumploci/holonomy.hpp"

using namespace jumploci;

TEST(Holonomy, CompactCurvePresentation) {
    const auto P = holonomy_presentation(build_compact_curve(2));
    EXPECT_EQ(P.generators.size(), 4u);
    ASSERT_EQ(P.relations.size(), 1u);
    EXPECT_EQ(P.relations[0].quad(0, 1), Scalar::one(Field::rational()));
    EXPECT_EQ(P.relations[0].quad(2, 3), Scalar::one(Field::rational()));
    EXPECT_TRUE(P.relations[0].quad(0, 2).is_zero());
}

TEST(Holonomy, SurfaceModelLinearTerm) {
    const Cdga A = build_surface_model(1);
    const auto P = holonomy_presentation(A);
    const auto& rel = P.relations[A.index_of(2, "w")];
    EXPECT_EQ(rel.lin[A.index_of(1, "t")], Scalar::one(A.field));
}

TEST(Holonomy, RelationCheckAgreesWithFlatness) {
    std::mt19937_64 rng(31);
    for (const Cdga& A : {build_surface_model(2), build_torus_model(3, 3), build_pencil(4)}) {
        const auto P = holonomy_presentation(A);
        for (const LieAlgebra& g : {build_sl(2), build_sol2()})
            for (int i = 0; i < 20; ++i) {
                const FlatConnection w = i % 2 ? random_connection(A, g, rng) : sample_flat(A, g, rng);
                EXPECT_EQ(relation_check(P, g, w), is_flat(A, g, w));
                EXPECT_EQ(relation_check(to_lie_presentation(P, A.field), g, w), is_flat(A, g, w));
            }
    }
}

TEST(LiePolynomials, ExpansionDetectsAntisymmetryAndJacobi) {
    const Field q = Field::rational();
    const auto x = LiePolynomial::generator(0, q), y = LiePolynomial::generator(1, q), z = LiePolynomial::generator(2, q);
    LiePolynomial sum_xy;
    sum_xy.add(Scalar::one(q), bracket(x, y)).add(Scalar::one(q), bracket(y, x));
    EXPECT_TRUE(expand(sum_xy, q).empty());
    LiePolynomial jacobi;
    jacobi.add(Scalar::one(q), bracket(x, bracket(y, z)))
        .add(Scalar::one(q), bracket(y, bracket(z, x)))
        .add(Scalar::one(q), bracket(z, bracket(x, y)));
    EXPECT_TRUE(expand(jacobi, q).empty());
    LiePolynomial twice;
    twice.add(Scalar(q, -2), bracket(y, x));
    EXPECT_TRUE(proportional(twice, bracket(x, y), q));
    EXPECT_FALSE(proportional(bracket(x, z), bracket(x, y), q));
}

TEST(SurfacePresentations, EliminationGivesBracketsWithR) {
    for (int genus : {1, 2, 3}) {
        const auto S = surface_presentations(genus);
        EXPECT_EQ(S.surface.relations.size(), static_cast<std::size_t>(2 * genus));
        EXPECT_EQ(S.curve.relations.size(), 1u);
    }
}

TEST(Counterexample, RhoOfRIsE13) {
    for (int genus : {1, 2}) {
        const auto cx = build_counterexample_rho(3, genus);
        const LieAlgebra g = build_sl(3);
        EXPECT_EQ(cx.rho_r, g.basis_vector(g.root_vector(1, 3)));
        const auto S = surface_presentations(genus);
        EXPECT_FALSE(relation_check(S.curve, g, cx.assignment));
        EXPECT_TRUE(relation_check(S.surface, g, cx.assignment));
    }
    EXPECT_THROW(build_counterexample_rho(2, 1), InputError);
}

TEST(SlN, RootVanishingOnSurfaceRelations) {
    // a1 -> E12, b1 -> E23 satisfies [x, r] = 0 for every x in sl_n, n <= 4.
    for (int n = 3; n <= 4; ++n) {
        const auto cx = build_counterexample_rho(n, 1);
        const LieAlgebra g = build_sl(n);
        EXPECT_TRUE(relation_check(surface_presentations(1).surface, g, cx.assignment));
        EXPECT_FALSE(is_zero(cx.rho_r));
    }
}
