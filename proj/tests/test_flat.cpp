#include <gtest/gtest.h>

#include <random>

#include "jumploci/flat.hpp"
#include "jumploci/models.hpp"

using namespace jumploci;

namespace {

/// d(omega) + 1/2 sum over all ordered pairs (k, l) of a_k a_l (x) [x_k, x_l].
Matrix residual_oracle(const Cdga& A, const LieAlgebra& g, const FlatConnection& w) {
    Matrix res(A.dim(2), g.dim(), A.field);
    const Scalar half = Scalar::one(A.field) / Scalar(A.field, 2);
    for (std::size_t k = 0; k < A.dim(1); ++k) {
        const Vector dk = A.d(1, A.basis_vector(1, k));
        for (std::size_t c = 0; c < A.dim(2); ++c)
            for (std::size_t z = 0; z < g.dim(); ++z) res(c, z) += dk[c] * w.coeffs(k, z);
        for (std::size_t l = 0; l < A.dim(1); ++l) {
            const Vector prod = A.product_of_basis(1, k, 1, l);
            const Vector br = g.bracket(w.row(k), w.row(l));
            for (std::size_t c = 0; c < A.dim(2); ++c)
                for (std::size_t z = 0; z < g.dim(); ++z) res(c, z) += half * prod[c] * br[z];
        }
    }
    return res;
}

}  // namespace

TEST(Residual, MatchesDoubleSumOracle) {
    std::mt19937_64 rng(21);
    const std::vector<Cdga> models = {build_surface_model(1), build_surface_model(2), build_compact_curve(2), build_torus_model(3, 3),
                                      build_pencil(4), tensor_product(build_compact_curve(1), build_compact_curve(1))};
    for (const auto& A : models)
        for (const LieAlgebra& g : {build_sl(2), build_sl(3), build_sol2()})
            for (int t = 0; t < 5; ++t) {
                const FlatConnection w = random_connection(A, g, rng);
                EXPECT_EQ(mc_residual(A, g, w), residual_oracle(A, g, w)) << A.name << " " << g.name;
            }
}

TEST(Residual, NonFlatExampleHasNamedCoordinate) {
    const Cdga A = build_surface_model(1);
    const LieAlgebra g = build_sl(2);
    FlatConnection w = FlatConnection::zero(A, g);
    w.coeffs(0, g.index_of("E")) = Scalar::one(A.field);
    w.coeffs(1, g.index_of("F")) = Scalar::one(A.field);
    const Matrix res = mc_residual(A, g, w);
    EXPECT_FALSE(is_flat(A, g, w));
    EXPECT_EQ(res(A.index_of(2, "w"), g.index_of("H")), Scalar::one(A.field));
}

TEST(Residual, ShapeMismatchThrows) {
    const Cdga A = build_surface_model(1);
    EXPECT_THROW(mc_residual(A, build_sl(2), FlatConnection{Matrix(2, 3, A.field)}), InputError);
    EXPECT_THROW(mc_residual(A, build_sl(2, Field::modular(3)), FlatConnection::zero(A, build_sl(2))), InputError);
}

TEST(F1, RankOneClosedIsMemberOthersAreNot) {
    const Cdga A = build_surface_model(1);
    const LieAlgebra g = build_sl(2);
    Vector eta = A.zero(1);
    eta[0] = Scalar(A.field, 2);
    eta[1] = Scalar(A.field, -1);
    const Vector x = g.basis_vector(g.index_of("H"));
    const auto r = f1_membership(A, g, rank_one(eta, x, A.field));
    EXPECT_TRUE(r.member);
    ASSERT_TRUE(r.witness);

    const auto t_only = f1_membership(A, g, rank_one(A.basis_vector(1, A.index_of(1, "t")), x, A.field));
    EXPECT_FALSE(t_only.member);
    EXPECT_EQ(t_only.reason, "rank one but eta is not closed");

    FlatConnection two = FlatConnection::zero(A, g);
    two.coeffs(0, 0) = Scalar::one(A.field);
    two.coeffs(1, 1) = Scalar::one(A.field);
    EXPECT_FALSE(f1_membership(A, g, two).member);
    EXPECT_TRUE(f1_membership(A, g, FlatConnection::zero(A, g)).member);
}

TEST(F1, ContainedInFlatLocusExhaustivelyOverF3) {
    const Field f = Field::modular(3);
    const Cdga A = build_surface_model(1, f);
    const LieAlgebra g = build_sl(2, f);
    FlatConnection w = FlatConnection::zero(A, g);
    std::vector<long> x(9, 0);
    std::size_t members = 0;
    for (;;) {
        for (std::size_t v = 0; v < 9; ++v) w.coeffs(v / 3, v % 3) = Scalar(f, x[v]);
        if (f1_membership(A, g, w).member) {
            ++members;
            EXPECT_TRUE(is_flat(A, g, w));
        }
        std::size_t i = 9;
        while (i > 0 && ++x[i - 1] == 3) x[--i] = 0;
        if (i == 0) break;
    }
    // 0 plus nonzero eta in span(a1, b1) (8) times nonzero x (26), up to scalars (2).
    EXPECT_EQ(members, 1u + 8u * 26u / 2u);
}

TEST(Pi, NeedsVanishingDeterminant) {
    const Cdga A = build_compact_curve(1);
    const LieAlgebra g = build_sl(2);
    const LieRep theta = rep_defining(g);
    const Vector eta = A.basis_vector(1, 0);
    EXPECT_TRUE(pi_membership(A, theta, rank_one(eta, g.basis_vector(g.index_of("E")), A.field)));
    EXPECT_FALSE(pi_membership(A, theta, rank_one(eta, g.basis_vector(g.index_of("H")), A.field)));
    EXPECT_TRUE(pi_membership(A, theta, FlatConnection::zero(A, g)));
}

TEST(Pullback, IsNatural) {
    std::mt19937_64 rng(22);
    const auto phi = surface_inclusion(2);
    const auto t = tensor_with_inclusions(build_compact_curve(2), build_compact_curve(1));
    for (const CdgaMorphism& m : {phi, t.left, t.right}) {
        for (const LieAlgebra& g : {build_sl(2), build_sol2()}) {
            for (int i = 0; i < 10; ++i) {
                const FlatConnection w = random_connection(*m.source, g, rng);
                const Matrix lhs = mc_residual(*m.target, g, pullback(m, w));
                const Matrix rhs = m.in_degree(2) * mc_residual(*m.source, g, w);
                EXPECT_EQ(lhs, rhs);
                const FlatConnection f = sample_flat(*m.source, g, rng);
                EXPECT_TRUE(is_flat(*m.target, g, pullback(m, f)));
            }
        }
    }
}

TEST(Tangent, ValuesAtZeroAndPrecondition) {
    const Cdga A = build_compact_curve(2);
    const LieAlgebra g = build_sl(2);
    EXPECT_EQ(tangent_dimension(A, g, FlatConnection::zero(A, g)), 12u);
    const Cdga S = build_surface_model(1);
    // At 0 the tangent space is Z^1 (x) g = span(a1, b1) (x) sl2.
    EXPECT_EQ(tangent_dimension(S, g, FlatConnection::zero(S, g)), 6u);
    FlatConnection bad = FlatConnection::zero(S, g);
    bad.coeffs(S.index_of(1, "t"), 0) = Scalar::one(S.field);
    EXPECT_THROW(tangent_dimension(S, g, bad), PreconditionError);
}

TEST(Sampler, IsDeterministicAndFlat) {
    const Cdga A = build_surface_model(2);
    const LieAlgebra g = build_sl(3);
    std::mt19937_64 r1(99), r2(99);
    for (int i = 0; i < 10; ++i) {
        const FlatConnection a = sample_flat(A, g, r1), b = sample_flat(A, g, r2);
        EXPECT_EQ(a.coeffs, b.coeffs);
        EXPECT_TRUE(is_flat(A, g, a));
    }
}

TEST(Weights, ScalingNeedsWeights) {
    Cdga B = build_torus_model(2, 2);
    B.weights.reset();
    const LieAlgebra g = build_sl(2);
    EXPECT_THROW(weight_scale(B, FlatConnection::zero(B, g), Scalar(B.field, 2)), UnsupportedError);
    const Cdga S = build_surface_model(1);
    EXPECT_THROW(weight_scale(S, FlatConnection::zero(S, g), Scalar(S.field, 0)), InputError);
}
