#include <gtest/gtest.h>

#include <random>

#include "jumploci/models.hpp"

using namespace jumploci;

namespace {

bool has_axiom(const ValidationReport& r, const std::string& axiom) {
    for (const auto& f : r)
        if (f.axiom == axiom) return true;
    return false;
}

}  // namespace

TEST(Validate, CorruptedTorusDifferentialBreaksLeibniz) {
    Cdga A = build_torus_model(3, 3);
    const std::size_t e1 = A.index_of(1, "e1");
    A.differential[1](0, e1) = Scalar::one(A.field);  // d(e1) = e1e2
    const auto report = validate(A);
    ASSERT_TRUE(has_axiom(report, "leibniz"));
}

TEST(Validate, DetectsNonCommutativeProduct) {
    Cdga A = build_compact_curve(1);
    A.products[{1, 1, 1, 0}] = {Scalar::one(A.field)};  // b1 a1 = +w
    EXPECT_TRUE(has_axiom(validate(A), "graded-commutativity"));
}

TEST(Validate, DetectsNonzeroSquare) {
    Cdga A = build_torus_model(2, 2);
    A.weights.reset();
    A.differential[0](0, 0) = Scalar::one(A.field);
    A.differential[1](0, 0) = Scalar::one(A.field);
    EXPECT_TRUE(has_axiom(validate(A), "d-squared"));
}

TEST(Validate, DetectsDisconnectedAlgebra) {
    Cdga A = build_open_curve(2);
    A.basis[0].push_back("u");
    A.differential[0] = Matrix(2, 2, A.field);
    A.weights.reset();
    EXPECT_TRUE(has_axiom(validate(A), "connected"));
}

TEST(Validate, DetectsWeightOutOfRange) {
    Cdga A = build_compact_curve(1);
    (*A.weights)[1][0] = 3;
    EXPECT_TRUE(has_axiom(validate(A), "weight-range"));
}

TEST(Validate, ShapeErrorsThrow) {
    Cdga A = build_compact_curve(1);
    A.differential[0] = Matrix(1, 1, A.field);
    EXPECT_THROW(validate(A), InputError);
}

TEST(Cohomology, CompactCurveAndSurfaceModel) {
    const Cdga H = build_compact_curve(2);
    EXPECT_EQ(cohomology(H, 0).dimension, 1u);
    EXPECT_EQ(cohomology(H, 1).dimension, 4u);
    EXPECT_EQ(cohomology(H, 2).dimension, 1u);
    const Cdga S = build_surface_model(1);
    EXPECT_EQ(cohomology(S, 1).dimension, 2u);
    EXPECT_EQ(cohomology(S, 2).dimension, 2u);
    EXPECT_EQ(cohomology(S, 3).dimension, 1u);
}

TEST(Cohomology, EulerCharacteristicIgnoresTheDifferential) {
    for (const Cdga& A : {build_surface_model(1), build_surface_model(2), build_compact_curve(2), build_pencil(4),
                          build_torus_model(3, 3), tensor_product(build_compact_curve(2), build_compact_curve(1))}) {
        long chi = 0;
        for (int i = 0; i <= A.top_degree; ++i) chi += (i % 2 ? -1 : 1) * static_cast<long>(cohomology(A, i).dimension);
        EXPECT_EQ(chi, euler_characteristic(A)) << A.name;
    }
}

TEST(Cohomology, RepresentativesAreIndependentCocycles) {
    const Cdga A = build_surface_model(2);
    for (int i = 0; i <= A.top_degree; ++i) {
        const auto h = cohomology(A, i);
        for (const auto& v : h.representatives)
            if (i < A.top_degree) {
                EXPECT_TRUE(is_zero(A.d(i, v)));
            }
        if (!h.representatives.empty()) {
            const Matrix span = hstack(A.d_matrix(i - 1), Matrix::from_columns(h.representatives, A.dim(i), A.field));
            EXPECT_EQ(rank(span), rank(A.d_matrix(i - 1)) + h.dimension);
        }
    }
}

TEST(Weights, ComponentsSplitDegreeOneVector) {
    const Cdga A = build_surface_model(1);
    Vector v = A.zero(1);
    v[0] = Scalar(A.field, 2);
    v[A.index_of(1, "t")] = Scalar(A.field, 5);
    const auto parts = weight_components(A, v);
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(sum(parts.at(1), parts.at(2)), v);
    Cdga T = build_torus_model(2, 2);
    T.weights.reset();
    EXPECT_THROW(weight_components(T, T.zero(1)), UnsupportedError);
}

TEST(Morphism, SurfaceInclusionIsInjectiveCdgaMap) {
    const auto phi = surface_inclusion(2);
    EXPECT_TRUE(validate(phi).empty());
    EXPECT_TRUE(is_injective_in_degree(phi, 1));
}

TEST(Morphism, BrokenMapIsReported) {
    auto phi = surface_inclusion(1);
    phi.maps[2] = Matrix(phi.target->dim(2), phi.source->dim(2), phi.source->field);
    EXPECT_TRUE(has_axiom(validate(phi), "multiplicative"));
    auto psi = surface_inclusion(1);
    psi.maps[1](psi.target->index_of(1, "t"), 0) = Scalar::one(Field::rational());
    const auto report = validate(psi);
    EXPECT_TRUE(has_axiom(report, "chain-map"));
    EXPECT_TRUE(has_axiom(report, "weight-preserving"));
}
