#include <gtest/gtest.h>

#include "jumploci/models.hpp"

using namespace jumploci;

namespace {

std::vector<std::size_t> dims(const Cdga& A) {
    std::vector<std::size_t> d;
    for (int i = 0; i <= A.top_degree; ++i) d.push_back(A.dim(i));
    return d;
}

}  // namespace

TEST(Builders, DimensionsAndValidity) {
    struct Case {
        Cdga algebra;
        std::vector<std::size_t> dims;
    };
    const std::vector<Case> cases = {
        {build_compact_curve(2), {1, 4, 1}},
        {build_open_curve(3), {1, 3}},
        {build_surface_model(1), {1, 3, 3, 1}},
        {build_surface_model(2), {1, 5, 5, 1}},
        {build_torus_model(3, 3), {1, 3, 3, 1}},
        {build_torus_model(4, 2), {1, 4, 6}},
        {build_pencil(3), {1, 3, 2}},
        {build_pencil(4), {1, 4, 3}},
        {tensor_product(build_compact_curve(2), build_compact_curve(1)), {1, 6, 10, 6}},
    };
    for (const auto& c : cases) {
        EXPECT_EQ(dims(c.algebra), c.dims) << c.algebra.name;
        EXPECT_TRUE(validate(c.algebra).empty()) << c.algebra.name;
    }
}

TEST(Builders, ModularCopiesValidate) {
    for (const Field f : {Field::modular(3), Field::modular(5), Field::modular(7)}) {
        EXPECT_TRUE(validate(build_surface_model(2, f)).empty());
        EXPECT_TRUE(validate(build_pencil(4, f)).empty());
        EXPECT_TRUE(validate(to_field(build_torus_model(3, 3), f)).empty());
    }
}

TEST(Builders, RejectBadParameters) {
    EXPECT_THROW(build_compact_curve(0), InputError);
    EXPECT_THROW(build_open_curve(1), InputError);
    EXPECT_THROW(build_torus_model(0, 1), InputError);
    EXPECT_THROW(build_torus_model(5, 4), InputError);
    EXPECT_THROW(build_os_arrangement({{1, 0, 0}}), InputError);
}

TEST(Builders, TorusTopIsClampedToN) {
    EXPECT_EQ(build_torus_model(2, 3).top_degree, 2);
}

TEST(SurfaceModel, DifferentialOfTIsW) {
    const Cdga A = build_surface_model(2);
    const Vector dt = A.d(1, A.basis_vector(1, A.index_of(1, "t")));
    EXPECT_EQ(dt, A.basis_vector(2, A.index_of(2, "w")));
    EXPECT_EQ(A.weight(1, A.index_of(1, "t")), 2);
    EXPECT_EQ(A.weight(1, A.index_of(1, "a1")), 1);
}

TEST(Arrangement, GenericFourPlanesHaveTruncatedBooleanDimensions) {
    // Three coordinate planes and x + y + z: Poincare polynomial 1 + 4t + 6t^2 + 3t^3.
    const Cdga A = build_os_arrangement({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
    EXPECT_EQ(dims(A), (std::vector<std::size_t>{1, 4, 6, 3}));
    EXPECT_TRUE(validate(A).empty());
}

TEST(Arrangement, PencilDegreeTwoHasDimensionMMinusOne) {
    for (int m = 3; m <= 6; ++m) EXPECT_EQ(build_pencil(m).dim(2), static_cast<std::size_t>(m - 1));
}

TEST(Tensor, InclusionsAreCdgaMaps) {
    const auto t = tensor_with_inclusions(build_compact_curve(2), build_compact_curve(1));
    EXPECT_TRUE(validate(t.left).empty());
    EXPECT_TRUE(validate(t.right).empty());
    EXPECT_EQ(t.product->basis[1][4], "a1'");
}
