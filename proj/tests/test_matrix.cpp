#include <gtest/gtest.h>

#include <random>

#include "jumploci/matrix.hpp"

using namespace jumploci;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int sparsity = 0) {
    std::uniform_int_distribution<long> d(-3, 3);
    std::uniform_int_distribution<int> s(0, 3);
    Matrix m(r, c, Field::rational());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(Field::rational(), s(rng) < sparsity ? 0 : d(rng));
    return m;
}

}  // namespace

TEST(Matrix, RankOfKnownMatrices) {
    EXPECT_EQ(rank(Matrix::from_ints({{1, 2}, {2, 4}})), 1u);
    EXPECT_EQ(rank(Matrix::identity(4, Field::rational())), 4u);
    EXPECT_EQ(rank(Matrix(3, 0, Field::rational())), 0u);
    // rank drops mod 3 but not over Q
    const Matrix m = Matrix::from_ints({{1, 1}, {1, 4}});
    EXPECT_EQ(rank(m), 2u);
    EXPECT_EQ(rank(m.to_field(Field::modular(3))), 1u);
}

TEST(Matrix, RankPlusNullityIsColumnCount) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        const Matrix m = random_matrix(1 + t % 6, 1 + (t / 6) % 7, rng, t % 4);
        const auto k = kernel_basis(m);
        EXPECT_EQ(rank(m) + k.size(), m.cols());
        for (const auto& v : k) EXPECT_TRUE(is_zero(m.apply(v)));
        const auto mp = m.to_field(Field::modular(5));
        const auto kp = kernel_basis(mp);
        EXPECT_EQ(rank(mp) + kp.size(), m.cols());
        for (const auto& v : kp) EXPECT_TRUE(is_zero(mp.apply(v)));
    }
}

TEST(Matrix, BareissAgreesWithEchelonRank) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
        Matrix m = random_matrix(2 + t % 5, 2 + t % 4, rng, t % 3);
        const std::size_t fraction_free = rank(m);
        Matrix copy = m;
        EXPECT_EQ(detail::rref(copy).size(), fraction_free);
    }
}

TEST(Matrix, ModPRankNeverExceedsRationalRank) {
    std::mt19937_64 rng(13);
    std::size_t agree = 0;
    for (int t = 0; t < 200; ++t) {
        const Matrix m = random_matrix(4, 4, rng);
        const std::size_t rq = rank(m);
        const std::size_t rp = rank(m.to_field(Field::modular(101)));
        EXPECT_LE(rp, rq);
        agree += rp == rq;
    }
    EXPECT_GT(agree, 190u);
}

TEST(Matrix, SolveInverseDeterminant) {
    const Matrix a = Matrix::from_ints({{2, 1}, {1, 1}});
    const auto inv = inverse(a);
    ASSERT_TRUE(inv);
    EXPECT_EQ(a * *inv, Matrix::identity(2, Field::rational()));
    EXPECT_EQ(determinant(a), Scalar(Field::rational(), 1));
    EXPECT_FALSE(inverse(Matrix::from_ints({{1, 2}, {2, 4}})));
    EXPECT_EQ(determinant(Matrix::from_ints({{0, 1, 0}, {1, 0, 0}, {0, 0, 3}})), Scalar(Field::rational(), -3));

    const Vector b = {Scalar(Field::rational(), 3), Scalar(Field::rational(), 2)};
    const auto x = solve(a, b);
    ASSERT_TRUE(x);
    EXPECT_EQ(a.apply(*x), b);
    EXPECT_FALSE(solve(Matrix::from_ints({{1, 1}, {1, 1}}), b));
}

TEST(Matrix, DeterminantIsMultiplicative) {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 30; ++t) {
        const Matrix a = random_matrix(3, 3, rng), b = random_matrix(3, 3, rng);
        EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
    }
}

TEST(Matrix, IntersectionDimension) {
    const Matrix a = Matrix::from_ints({{1, 0}, {0, 1}, {0, 0}});
    const Matrix b = Matrix::from_ints({{0}, {1}, {1}});
    const Matrix c = Matrix::from_ints({{1}, {1}, {0}});
    EXPECT_EQ(intersection_dimension(a, b), 0u);
    EXPECT_EQ(intersection_dimension(a, c), 1u);
}

TEST(Matrix, MixedFieldsThrow) {
    const Matrix a = Matrix::identity(2, Field::rational());
    const Matrix b = Matrix::identity(2, Field::modular(3));
    EXPECT_THROW(a * b, InputError);
    EXPECT_THROW(a + b, InputError);
    EXPECT_THROW(Matrix::identity(2, Field::rational()) * Matrix(3, 1, Field::rational()), InputError);
}
