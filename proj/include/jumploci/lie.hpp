#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace jumploci {

enum class LieKind { special_linear, solvable2, abelian, custom };

/// Finite-dimensional Lie algebra by structure constants [e_i, e_j] = sum_k c_ij^k e_k.
struct LieAlgebra {
    std::string name;
    Field field;
    LieKind kind = LieKind::custom;
    int rank_n = 0;  // n for sl_n and for the abelian algebra of dimension n
    std::vector<std::string> basis;
    std::vector<Scalar> constants;  // index (i * dim + j) * dim + k

    std::size_t dim() const { return basis.size(); }

    const Scalar& structure(std::size_t i, std::size_t j, std::size_t k) const {
        return constants[(i * dim() + j) * dim() + k];
    }

    Vector zero() const { return zero_vector(dim(), field); }
    Vector basis_vector(std::size_t i) const { return unit_vector(dim(), i, field); }

    Vector bracket(const Vector& x, const Vector& y) const {
        if (x.size() != dim() || y.size() != dim()) throw InputError("bracket: element has wrong dimension");
        Vector out = zero();
        const std::size_t n = dim();
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (y[j].is_zero()) continue;
                const Scalar xy = x[i] * y[j];
                for (std::size_t k = 0; k < n; ++k) {
                    const auto& c = structure(i, j, k);
                    if (!c.is_zero()) out[k] += xy * c;
                }
            }
        }
        return out;
    }

    std::size_t index_of(const std::string& label) const {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == label) return i;
        throw InputError(name + ": no basis element '" + label + "'");
    }

    /// Index of the root vector E_ij (1-based, i != j) of sl_n.
    std::size_t root_vector(int i, int j) const {
        if (kind != LieKind::special_linear) throw UnsupportedError(name + " is not sl_n");
        if (i == j || i < 1 || j < 1 || i > rank_n || j > rank_n) throw InputError("root vector index out of range");
        std::size_t idx = 0;
        for (int r = 1; r <= rank_n; ++r)
            for (int c = r + 1; c <= rank_n; ++c, ++idx)
                if (r == i && c == j) return idx;
        for (int r = 1; r <= rank_n; ++r)
            for (int c = 1; c < r; ++c, ++idx)
                if (r == i && c == j) return idx;
        throw std::logic_error("unreachable root index");
    }
};

struct LieAxiomFailure {
    std::string axiom;
    std::string witness;
};

inline std::vector<LieAxiomFailure> check_lie_axioms(const LieAlgebra& g) {
    std::vector<LieAxiomFailure> failures;
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Vector xy = g.bracket(g.basis_vector(i), g.basis_vector(j));
            const Vector yx = g.bracket(g.basis_vector(j), g.basis_vector(i));
            if (xy != scaled(yx, Scalar(g.field, -1))) {
                failures.push_back({"antisymmetry", g.basis[i] + ", " + g.basis[j]});
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vector x = g.basis_vector(i), y = g.basis_vector(j), z = g.basis_vector(k);
                Vector s = g.bracket(x, g.bracket(y, z));
                s = sum(s, g.bracket(y, g.bracket(z, x)));
                s = sum(s, g.bracket(z, g.bracket(x, y)));
                if (!is_zero(s)) failures.push_back({"jacobi", g.basis[i] + ", " + g.basis[j] + ", " + g.basis[k]});
            }
        }
    }
    return failures;
}

namespace detail {

/// Matrix realisation of the standard basis of sl_n, in basis order.
inline std::vector<Matrix> sl_basis_matrices(int n, Field f) {
    std::vector<Matrix> mats;
    const auto N = static_cast<std::size_t>(n);
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = r + 1; c < N; ++c) {
            Matrix m(N, N, f);
            m(r, c) = Scalar::one(f);
            mats.push_back(std::move(m));
        }
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < r; ++c) {
            Matrix m(N, N, f);
            m(r, c) = Scalar::one(f);
            mats.push_back(std::move(m));
        }
    for (std::size_t i = 0; i + 1 < N; ++i) {
        Matrix m(N, N, f);
        m(i, i) = Scalar::one(f);
        m(i + 1, i + 1) = Scalar(f, -1);
        mats.push_back(std::move(m));
    }
    return mats;
}

/// Coordinates of a matrix in the span of `basis`; throws if it lies outside.
inline Vector coordinates_in(const std::vector<Matrix>& basis, const Matrix& x) {
    const std::size_t n = x.rows() * x.cols();
    std::vector<Vector> cols;
    for (const auto& b : basis) {
        Vector v;
        v.reserve(n);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) v.push_back(b(i, j));
        cols.push_back(std::move(v));
    }
    Vector target;
    target.reserve(n);
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) target.push_back(x(i, j));
    const auto sol = solve(Matrix::from_columns(cols, n, x.field()), target);
    if (!sol) throw InputError("matrix is not in the span of the given basis");
    return *sol;
}

inline LieAlgebra from_matrix_basis(std::string name, LieKind kind, int n, std::vector<std::string> labels,
                                    const std::vector<Matrix>& mats, Field f) {
    LieAlgebra g;
    g.name = std::move(name);
    g.field = f;
    g.kind = kind;
    g.rank_n = n;
    g.basis = std::move(labels);
    const std::size_t d = mats.size();
    g.constants.assign(d * d * d, Scalar::zero(f));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Vector c = coordinates_in(mats, commutator(mats[i], mats[j]));
            for (std::size_t k = 0; k < d; ++k) g.constants[(i * d + j) * d + k] = c[k];
        }
    }
    return g;
}

}  // namespace detail

/// sl_n with basis E_ij (i < j), E_ij (i > j), H_i = E_ii - E_{i+1,i+1}.
/// For n = 2 the labels are E, F, H.
inline LieAlgebra build_sl(int n, Field f = Field::rational()) {
    if (n < 2) throw InputError("sl_n needs n >= 2");
    std::vector<std::string> labels;
    if (n == 2) {
        labels = {"E", "F", "H"};
    } else {
        for (int r = 1; r <= n; ++r)
            for (int c = r + 1; c <= n; ++c) labels.push_back("E" + std::to_string(r) + std::to_string(c));
        for (int r = 1; r <= n; ++r)
            for (int c = 1; c < r; ++c) labels.push_back("E" + std::to_string(r) + std::to_string(c));
        for (int i = 1; i < n; ++i) labels.push_back("H" + std::to_string(i));
    }
    return detail::from_matrix_basis("sl" + std::to_string(n), LieKind::special_linear, n, std::move(labels),
                                     detail::sl_basis_matrices(n, f), f);
}

/// The Borel subalgebra of sl_2: basis h, e with [h, e] = 2e.
inline LieAlgebra build_sol2(Field f = Field::rational()) {
    const auto sl = detail::sl_basis_matrices(2, f);
    return detail::from_matrix_basis("sol2", LieKind::solvable2, 2, {"h", "e"}, {sl[2], sl[0]}, f);
}

inline LieAlgebra build_abelian(int n, Field f = Field::rational()) {
    if (n < 1) throw InputError("abelian Lie algebra needs dimension >= 1");
    LieAlgebra g;
    g.name = "abelian" + std::to_string(n);
    g.field = f;
    g.kind = LieKind::abelian;
    g.rank_n = n;
    for (int i = 1; i <= n; ++i) g.basis.push_back("z" + std::to_string(i));
    g.constants.assign(static_cast<std::size_t>(n * n * n), Scalar::zero(f));
    return g;
}

/// Representation theta: g -> gl(V), one matrix per basis element of g.
struct LieRep {
    LieAlgebra lie;
    std::size_t dim = 0;
    std::vector<Matrix> matrices;

    Matrix of(const Vector& x) const {
        if (x.size() != lie.dim()) throw InputError("rep: element has wrong dimension");
        Matrix m(dim, dim, lie.field);
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (!x[i].is_zero()) m += matrices[i] * x[i];
        }
        return m;
    }
};

/// Pairs (i, j) of basis elements with [theta(e_i), theta(e_j)] != theta([e_i, e_j]).
inline std::vector<std::pair<std::size_t, std::size_t>> bracket_failures(const LieRep& r) {
    std::vector<std::pair<std::size_t, std::size_t>> bad;
    for (std::size_t i = 0; i < r.lie.dim(); ++i) {
        for (std::size_t j = i + 1; j < r.lie.dim(); ++j) {
            const Matrix lhs = commutator(r.matrices[i], r.matrices[j]);
            const Matrix rhs = r.of(r.lie.bracket(r.lie.basis_vector(i), r.lie.basis_vector(j)));
            if (!(lhs == rhs)) bad.emplace_back(i, j);
        }
    }
    return bad;
}

/// Builds a representation, rejecting matrices that violate the bracket relations.
inline LieRep make_rep(LieAlgebra g, std::vector<Matrix> mats) {
    if (mats.size() != g.dim()) throw InputError("rep needs one matrix per basis element");
    const std::size_t m = mats.empty() ? 0 : mats.front().rows();
    for (const auto& x : mats) {
        if (x.rows() != m || x.cols() != m) throw InputError("rep matrices must be square of equal size");
        if (x.field() != g.field) throw InputError("rep matrices over the wrong field");
    }
    LieRep r{std::move(g), m, std::move(mats)};
    const auto bad = bracket_failures(r);
    if (!bad.empty()) {
        throw InputError("not a representation: bracket fails on " + r.lie.basis[bad.front().first] + ", " +
                         r.lie.basis[bad.front().second]);
    }
    return r;
}

inline LieRep rep_defining(const LieAlgebra& g) {
    const Field f = g.field;
    switch (g.kind) {
        case LieKind::special_linear:
            return make_rep(g, detail::sl_basis_matrices(g.rank_n, f));
        case LieKind::solvable2: {
            const auto sl = detail::sl_basis_matrices(2, f);
            return make_rep(g, {sl[2], sl[0]});
        }
        case LieKind::abelian: {
            std::vector<Matrix> mats;
            for (int i = 0; i < g.rank_n; ++i) {
                Matrix m(static_cast<std::size_t>(g.rank_n), static_cast<std::size_t>(g.rank_n), f);
                m(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = Scalar::one(f);
                mats.push_back(std::move(m));
            }
            return make_rep(g, std::move(mats));
        }
        case LieKind::custom:
            break;
    }
    throw UnsupportedError(g.name + " has no defining representation");
}

/// ad: column k of ad(e_i) holds the coordinates of [e_i, e_k].
inline LieRep rep_adjoint(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix m(n, n, g.field);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(k, j) = g.structure(i, j, k);
        mats.push_back(std::move(m));
    }
    return make_rep(g, std::move(mats));
}

inline LieRep rep_trivial(const LieAlgebra& g, std::size_t m) {
    return make_rep(g, std::vector<Matrix>(g.dim(), Matrix(m, m, g.field)));
}

inline LieRep rep_direct_sum(const LieRep& a, const LieRep& b) {
    if (a.lie.name != b.lie.name || a.lie.constants != b.lie.constants) {
        throw InputError("direct sum of representations of different Lie algebras");
    }
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < a.lie.dim(); ++i) {
        Matrix m(a.dim + b.dim, a.dim + b.dim, a.lie.field);
        for (std::size_t r = 0; r < a.dim; ++r)
            for (std::size_t c = 0; c < a.dim; ++c) m(r, c) = a.matrices[i](r, c);
        for (std::size_t r = 0; r < b.dim; ++r)
            for (std::size_t c = 0; c < b.dim; ++c) m(a.dim + r, a.dim + c) = b.matrices[i](r, c);
        mats.push_back(std::move(m));
    }
    return make_rep(a.lie, std::move(mats));
}

inline Scalar det_theta(const LieRep& r, const Vector& x) { return determinant(r.of(x)); }

/// Nonzero v with theta(e_i) v = 0 for all basis elements, if any.
inline std::optional<Vector> fixed_vector(const LieRep& r) {
    Matrix stacked(r.dim * r.lie.dim(), r.dim, r.lie.field);
    for (std::size_t i = 0; i < r.lie.dim(); ++i)
        for (std::size_t a = 0; a < r.dim; ++a)
            for (std::size_t b = 0; b < r.dim; ++b) stacked(i * r.dim + a, b) = r.matrices[i](a, b);
    const auto k = kernel_basis(stacked);
    if (k.empty()) return std::nullopt;
    return k.front();
}

inline LieAlgebra to_field(const LieAlgebra& g, Field f) {
    LieAlgebra h = g;
    h.field = f;
    for (auto& c : h.constants) c = c.to_field(f);
    return h;
}

}  // namespace jumploci
