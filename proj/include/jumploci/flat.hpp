#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "cdga.hpp"
#include "lie.hpp"

namespace jumploci {

/// omega = sum_k a_k (x) x_k in A^1 (x) g. Row k of `coeffs` holds the
/// g-coordinates of x_k, for the k-th degree-1 basis element a_k.
struct FlatConnection {
    Matrix coeffs;

    static FlatConnection zero(const Cdga& A, const LieAlgebra& g) { return {Matrix(A.dim(1), g.dim(), A.field)}; }

    std::size_t rows() const { return coeffs.rows(); }
    Vector row(std::size_t k) const { return coeffs.row(k); }
    bool is_zero() const { return coeffs.is_zero(); }
};

inline void check_shape(const Cdga& A, const LieAlgebra& g, const FlatConnection& w) {
    if (w.coeffs.rows() != A.dim(1) || w.coeffs.cols() != g.dim()) {
        throw InputError("connection shape " + std::to_string(w.coeffs.rows()) + "x" + std::to_string(w.coeffs.cols()) +
                         " does not match dim A^1 = " + std::to_string(A.dim(1)) + ", dim g = " + std::to_string(g.dim()));
    }
    if (A.field != g.field || w.coeffs.field() != A.field) throw InputError("connection, algebra and Lie algebra fields differ");
}

/// d(omega) + 1/2 [omega, omega] as a dim A^2 x dim g matrix, computed as
/// sum_k d(a_k) (x) x_k + sum_{k<l} a_k a_l (x) [x_k, x_l].
inline Matrix mc_residual(const Cdga& A, const LieAlgebra& g, const FlatConnection& w) {
    check_shape(A, g, w);
    const std::size_t n1 = A.dim(1);
    Matrix res(A.dim(2), g.dim(), A.field);
    if (A.dim(2) == 0) return res;
    const Matrix& d1 = A.differential[1];
    std::vector<Vector> rows;
    rows.reserve(n1);
    for (std::size_t k = 0; k < n1; ++k) rows.push_back(w.row(k));
    for (std::size_t k = 0; k < n1; ++k) {
        if (is_zero(rows[k])) continue;
        for (std::size_t c = 0; c < A.dim(2); ++c) {
            const auto& dk = d1(c, k);
            if (dk.is_zero()) continue;
            for (std::size_t z = 0; z < g.dim(); ++z) res(c, z) += dk * rows[k][z];
        }
    }
    for (std::size_t k = 0; k < n1; ++k) {
        if (is_zero(rows[k])) continue;
        for (std::size_t l = k + 1; l < n1; ++l) {
            if (is_zero(rows[l])) continue;
            const Vector prod = A.product_of_basis(1, k, 1, l);
            if (is_zero(prod)) continue;
            const Vector br = g.bracket(rows[k], rows[l]);
            for (std::size_t c = 0; c < prod.size(); ++c) {
                if (prod[c].is_zero()) continue;
                for (std::size_t z = 0; z < br.size(); ++z) res(c, z) += prod[c] * br[z];
            }
        }
    }
    return res;
}

inline bool is_flat(const Cdga& A, const LieAlgebra& g, const FlatConnection& w) { return mc_residual(A, g, w).is_zero(); }

struct RankOneWitness {
    Vector eta;  // in A^1
    Vector x;    // in g
};

struct F1Result {
    bool member = false;
    std::optional<RankOneWitness> witness;
    std::string reason;
};

/// omega in F^1 iff omega = eta (x) x with eta closed.
inline F1Result f1_membership(const Cdga& A, const LieAlgebra& g, const FlatConnection& w) {
    check_shape(A, g, w);
    if (w.is_zero()) return {true, RankOneWitness{A.zero(1), g.zero()}, "zero connection"};
    const std::size_t r = rank(w.coeffs);
    if (r > 1) return {false, std::nullopt, "coefficient rank " + std::to_string(r)};
    std::size_t k = 0;
    while (jumploci::is_zero(w.row(k))) ++k;
    const Vector x = w.row(k);
    std::size_t z = 0;
    while (x[z].is_zero()) ++z;
    Vector eta = A.zero(1);
    const Scalar inv = x[z].inverse();
    for (std::size_t j = 0; j < A.dim(1); ++j) eta[j] = w.coeffs(j, z) * inv;
    if (A.top_degree >= 2 && !jumploci::is_zero(A.d(1, eta))) {
        return {false, RankOneWitness{eta, x}, "rank one but eta is not closed"};
    }
    return {true, RankOneWitness{eta, x}, "rank one with closed eta"};
}

/// omega in Pi(A, theta) iff omega in F^1 with witness eta (x) x and det theta(x) = 0.
inline bool pi_membership(const Cdga& A, const LieRep& theta, const FlatConnection& w) {
    const auto f1 = f1_membership(A, theta.lie, w);
    if (!f1.member) return false;
    if (w.is_zero()) return true;
    return det_theta(theta, f1.witness->x).is_zero();
}

/// Phi^* omega: coefficients pushed through the degree-1 component of Phi.
inline FlatConnection pullback(const CdgaMorphism& phi, const FlatConnection& w) {
    if (w.coeffs.rows() != phi.source->dim(1)) throw InputError("pullback: connection does not live on the source");
    return {phi.in_degree(1) * w.coeffs};
}

namespace detail {

/// Matrix of u -> du + [omega, u] from A^1 (x) g to A^2 (x) g, algebra-major.
inline Matrix mc_derivative(const Cdga& A, const LieAlgebra& g, const FlatConnection& w) {
    const std::size_t n1 = A.dim(1), n2 = A.dim(2), m = g.dim();
    Matrix D(n2 * m, n1 * m, A.field);
    for (std::size_t l = 0; l < n1; ++l) {
        for (std::size_t s = 0; s < m; ++s) {
            const std::size_t col = l * m + s;
            if (n2 > 0) {
                for (std::size_t c = 0; c < n2; ++c) {
                    const auto& dl = A.differential[1](c, l);
                    if (!dl.is_zero()) D(c * m + s, col) += dl;
                }
            }
            for (std::size_t k = 0; k < n1; ++k) {
                const Vector xk = w.row(k);
                if (jumploci::is_zero(xk)) continue;
                const Vector prod = A.product_of_basis(1, k, 1, l);
                if (prod.empty() || jumploci::is_zero(prod)) continue;
                const Vector br = g.bracket(xk, g.basis_vector(s));
                for (std::size_t c = 0; c < n2; ++c) {
                    if (prod[c].is_zero()) continue;
                    for (std::size_t z = 0; z < m; ++z) D(c * m + z, col) += prod[c] * br[z];
                }
            }
        }
    }
    return D;
}

}  // namespace detail

/// Zariski tangent dimension of the flat connections at omega: the nullity of the
/// linearised Maurer-Cartan map u -> du + [omega, u].
inline std::size_t tangent_dimension(const Cdga& A, const LieAlgebra& g, const FlatConnection& w) {
    if (!is_flat(A, g, w)) throw PreconditionError("tangent_dimension: connection is not flat");
    const Matrix D = detail::mc_derivative(A, g, w);
    return D.cols() - rank(D);
}

/// Row k scaled by s^{weight(a_k)}.
inline FlatConnection weight_scale(const Cdga& A, const FlatConnection& w, const Scalar& s) {
    if (!A.weights) throw UnsupportedError("weight_scale: algebra " + A.name + " carries no weights");
    if (s.is_zero()) throw InputError("weight_scale: scale must be nonzero");
    FlatConnection out = w;
    for (std::size_t k = 0; k < w.rows(); ++k) {
        const Scalar f = s.pow(static_cast<unsigned>(A.weight(1, k)));
        for (std::size_t z = 0; z < w.coeffs.cols(); ++z) out.coeffs(k, z) *= f;
    }
    return out;
}

inline Scalar random_scalar(Field f, std::mt19937_64& rng, int bound = 3) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    return Scalar(f, dist(rng));
}

inline FlatConnection random_connection(const Cdga& A, const LieAlgebra& g, std::mt19937_64& rng) {
    FlatConnection w = FlatConnection::zero(A, g);
    for (std::size_t k = 0; k < w.rows(); ++k)
        for (std::size_t z = 0; z < g.dim(); ++z) w.coeffs(k, z) = random_scalar(A.field, rng);
    return w;
}

/// Random closed degree-1 element.
inline Vector random_closed(const Cdga& A, std::mt19937_64& rng) {
    Vector eta = A.zero(1);
    for (const auto& v : kernel_basis(A.d_matrix(1))) axpy(eta, random_scalar(A.field, rng), v);
    return eta;
}

inline FlatConnection rank_one(const Vector& eta, const Vector& x, Field f) {
    FlatConnection w{Matrix(eta.size(), x.size(), f)};
    for (std::size_t k = 0; k < eta.size(); ++k)
        for (std::size_t z = 0; z < x.size(); ++z) w.coeffs(k, z) = eta[k] * x[z];
    return w;
}

/// Seeded sampler of flat connections. The Maurer-Cartan residual is affine in any
/// single row, so each attempt draws random rows on a random support and solves
/// for one row exactly, adding a random kernel element. Falls back to a rank-one
/// closed connection if no attempt succeeds.
inline FlatConnection sample_flat(const Cdga& A, const LieAlgebra& g, std::mt19937_64& rng, int attempts = 64) {
    const std::size_t n1 = A.dim(1), m = g.dim();
    std::bernoulli_distribution keep(0.5);
    for (int attempt = 0; attempt < attempts && n1 > 0; ++attempt) {
        FlatConnection w = FlatConnection::zero(A, g);
        for (std::size_t k = 0; k < n1; ++k) {
            if (!keep(rng)) continue;
            for (std::size_t z = 0; z < m; ++z) w.coeffs(k, z) = random_scalar(A.field, rng);
        }
        const std::size_t row = std::uniform_int_distribution<std::size_t>(0, n1 - 1)(rng);
        for (std::size_t z = 0; z < m; ++z) w.coeffs(row, z) = Scalar::zero(A.field);
        const Matrix base = mc_residual(A, g, w);
        const std::size_t out = base.rows() * m;
        Matrix L(out, m, A.field);
        for (std::size_t z = 0; z < m; ++z) {
            FlatConnection probe = w;
            probe.coeffs(row, z) = Scalar::one(A.field);
            const Matrix r = mc_residual(A, g, probe) - base;
            for (std::size_t c = 0; c < base.rows(); ++c)
                for (std::size_t y = 0; y < m; ++y) L(c * m + y, z) = r(c, y);
        }
        Vector rhs(out, Scalar::zero(A.field));
        for (std::size_t c = 0; c < base.rows(); ++c)
            for (std::size_t y = 0; y < m; ++y) rhs[c * m + y] = -base(c, y);
        auto x = solve(L, rhs);
        if (!x) continue;
        for (const auto& v : kernel_basis(L)) axpy(*x, random_scalar(A.field, rng, 2), v);
        w.coeffs.set_row(row, *x);
        if (!w.is_zero() && is_flat(A, g, w)) return w;
    }
    Vector x = g.zero();
    for (auto& s : x) s = random_scalar(A.field, rng);
    return rank_one(random_closed(A, rng), x, A.field);
}

}  // namespace jumploci
