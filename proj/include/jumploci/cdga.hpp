#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace jumploci {

/// Finite connected commutative differential graded algebra.
///
/// Degree i has basis `basis[i]`; the single degree-0 element is the unit and its
/// products are implicit. `products` holds the nonzero products of basis elements
/// of positive degree, keyed by (deg x, idx x, deg y, idx y); unlisted products are
/// zero. `differential[i]` has shape dim(i+1) x dim(i), columns are images of the
/// degree-i basis; degree top maps to the zero space.
struct Cdga {
    using ProductKey = std::array<int, 4>;

    std::string name;
    Field field;
    int top_degree = 0;
    std::vector<std::vector<std::string>> basis;
    std::optional<std::vector<std::vector<int>>> weights;
    std::map<ProductKey, Vector> products;
    std::vector<Matrix> differential;

    std::size_t dim(int degree) const {
        if (degree < 0 || degree > top_degree) return 0;
        return basis[static_cast<std::size_t>(degree)].size();
    }

    Vector zero(int degree) const { return zero_vector(dim(degree), field); }
    Vector basis_vector(int degree, std::size_t idx) const { return unit_vector(dim(degree), idx, field); }

    int weight(int degree, std::size_t idx) const {
        if (!weights) throw UnsupportedError("algebra " + name + " carries no weights");
        return (*weights)[static_cast<std::size_t>(degree)][idx];
    }

    /// Product of two basis elements, as a vector of degree i + j (empty past top).
    Vector product_of_basis(int i, std::size_t a, int j, std::size_t b) const {
        if (i + j > top_degree) return {};
        if (i == 0) return basis_vector(j, b);
        if (j == 0) return basis_vector(i, a);
        const auto it = products.find({i, static_cast<int>(a), j, static_cast<int>(b)});
        if (it == products.end()) return zero(i + j);
        return it->second;
    }

    Vector multiply(int i, const Vector& x, int j, const Vector& y) const {
        if (x.size() != dim(i) || y.size() != dim(j)) throw InputError("multiply: vector/degree mismatch");
        Vector out = zero(i + j);
        if (i + j > top_degree) return out;
        for (std::size_t a = 0; a < x.size(); ++a) {
            if (x[a].is_zero()) continue;
            for (std::size_t b = 0; b < y.size(); ++b) {
                if (y[b].is_zero()) continue;
                axpy(out, x[a] * y[b], product_of_basis(i, a, j, b));
            }
        }
        return out;
    }

    Vector d(int degree, const Vector& x) const {
        if (x.size() != dim(degree)) throw InputError("d: vector/degree mismatch");
        if (degree >= top_degree) return {};
        return differential[static_cast<std::size_t>(degree)].apply(x);
    }

    /// Differential out of `degree` as a matrix, including the zero map past the top.
    Matrix d_matrix(int degree) const {
        if (degree < 0) return Matrix(dim(0), 0, field);
        if (degree >= top_degree) return Matrix(0, dim(degree), field);
        return differential[static_cast<std::size_t>(degree)];
    }

    bool has_zero_differential() const {
        for (const auto& m : differential)
            if (!m.is_zero()) return false;
        return true;
    }

    /// Shape checks only; the algebra axioms are checked by validate().
    void check_shapes() const {
        if (top_degree < 0) throw InputError(name + ": negative top degree");
        if (basis.size() != static_cast<std::size_t>(top_degree) + 1) {
            throw InputError(name + ": basis lists do not match top_degree");
        }
        if (differential.size() != static_cast<std::size_t>(top_degree)) {
            throw InputError(name + ": expected one differential matrix per degree below top");
        }
        for (int i = 0; i < top_degree; ++i) {
            const auto& m = differential[static_cast<std::size_t>(i)];
            if (m.rows() != dim(i + 1) || m.cols() != dim(i)) {
                throw InputError(name + ": differential in degree " + std::to_string(i) + " has wrong shape");
            }
            if (m.field() != field) throw InputError(name + ": differential field mismatch");
            m.check_field();
        }
        for (const auto& [key, v] : products) {
            const auto [i, a, j, b] = key;
            if (i < 1 || j < 1 || i + j > top_degree) {
                throw InputError(name + ": product entry outside degree range");
            }
            if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= dim(i) || static_cast<std::size_t>(b) >= dim(j)) {
                throw InputError(name + ": product entry index out of range");
            }
            if (v.size() != dim(i + j)) throw InputError(name + ": product vector has wrong length");
            for (const auto& s : v)
                if (s.field() != field) throw InputError(name + ": product coefficient field mismatch");
        }
        if (weights) {
            if (weights->size() != basis.size()) throw InputError(name + ": weights do not match degrees");
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if ((*weights)[i].size() != basis[i].size()) throw InputError(name + ": weights do not match basis");
            }
        }
    }

    /// Degree-1 basis index by label.
    std::size_t index_of(int degree, const std::string& label) const {
        const auto& labels = basis.at(static_cast<std::size_t>(degree));
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label) return i;
        throw InputError(name + ": no basis element '" + label + "' in degree " + std::to_string(degree));
    }
};

using CdgaPtr = std::shared_ptr<const Cdga>;

/// Degree-wise linear map between two algebras; maps[i] is dim_target(i) x dim_source(i).
struct CdgaMorphism {
    CdgaPtr source;
    CdgaPtr target;
    std::vector<Matrix> maps;

    Matrix in_degree(int i) const {
        if (i < 0 || static_cast<std::size_t>(i) >= maps.size()) {
            return Matrix(target->dim(i), source->dim(i), source->field);
        }
        return maps[static_cast<std::size_t>(i)];
    }

    Vector apply(int i, const Vector& v) const { return in_degree(i).apply(v); }
};

struct AxiomFailure {
    std::string axiom;
    std::string witness;
};

using ValidationReport = std::vector<AxiomFailure>;

namespace detail {

inline int sign_of(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

inline std::string basis_name(const Cdga& A, int deg, std::size_t idx) {
    return A.basis[static_cast<std::size_t>(deg)][idx] + "[" + std::to_string(deg) + "]";
}

/// Set of weights occurring in the support of a degree-`deg` vector.
inline bool supported_on_weight(const Cdga& A, int deg, const Vector& v, int w) {
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!v[k].is_zero() && A.weight(deg, k) != w) return false;
    }
    return true;
}

}  // namespace detail

/// Checks connectivity, graded commutativity, associativity, d^2 = 0, the graded
/// Leibniz rule and, when present, the weight conditions. Each failure carries the
/// witnessing basis tuple. Shape errors throw InputError before any axiom check.
inline ValidationReport validate(const Cdga& A) {
    A.check_shapes();
    ValidationReport report;
    const int top = A.top_degree;

    if (A.dim(0) != 1) report.push_back({"connected", "dim A^0 = " + std::to_string(A.dim(0))});
    if (A.dim(0) != 1) return report;

    for (int i = 1; i <= top; ++i) {
        for (int j = i; i + j <= top; ++j) {
            for (std::size_t a = 0; a < A.dim(i); ++a) {
                for (std::size_t b = 0; b < A.dim(j); ++b) {
                    const Vector xy = A.product_of_basis(i, a, j, b);
                    const Vector yx = A.product_of_basis(j, b, i, a);
                    if (xy != scaled(yx, Scalar(A.field, detail::sign_of(i * j)))) {
                        report.push_back({"graded-commutativity",
                                          detail::basis_name(A, i, a) + " * " + detail::basis_name(A, j, b)});
                    }
                }
            }
        }
    }

    for (int i = 1; i <= top; ++i) {
        for (int j = 1; i + j <= top; ++j) {
            for (int k = 1; i + j + k <= top; ++k) {
                for (std::size_t a = 0; a < A.dim(i); ++a) {
                    for (std::size_t b = 0; b < A.dim(j); ++b) {
                        const Vector xy = A.product_of_basis(i, a, j, b);
                        for (std::size_t c = 0; c < A.dim(k); ++c) {
                            const Vector lhs = A.multiply(i + j, xy, k, A.basis_vector(k, c));
                            const Vector rhs = A.multiply(i, A.basis_vector(i, a), j + k, A.product_of_basis(j, b, k, c));
                            if (lhs != rhs) {
                                report.push_back({"associativity", detail::basis_name(A, i, a) + " * " +
                                                                       detail::basis_name(A, j, b) + " * " +
                                                                       detail::basis_name(A, k, c)});
                            }
                        }
                    }
                }
            }
        }
    }

    for (int i = 0; i + 2 <= top; ++i) {
        const Matrix dd = A.differential[static_cast<std::size_t>(i + 1)] * A.differential[static_cast<std::size_t>(i)];
        for (std::size_t a = 0; a < A.dim(i); ++a) {
            if (!is_zero(dd.column(a))) report.push_back({"d-squared", "d(d(" + detail::basis_name(A, i, a) + "))"});
        }
    }

    for (int i = 0; i <= top; ++i) {
        for (int j = 0; i + j <= top; ++j) {
            for (std::size_t a = 0; a < A.dim(i); ++a) {
                for (std::size_t b = 0; b < A.dim(j); ++b) {
                    const Vector x = A.basis_vector(i, a);
                    const Vector y = A.basis_vector(j, b);
                    const Vector lhs = A.d(i + j, A.product_of_basis(i, a, j, b));
                    if (i + j + 1 > top) continue;
                    Vector rhs = A.multiply(i + 1, A.d(i, x), j, y);
                    axpy(rhs, Scalar(A.field, detail::sign_of(i)), A.multiply(i, x, j + 1, A.d(j, y)));
                    if (lhs != rhs) {
                        report.push_back({"leibniz", detail::basis_name(A, i, a) + " , " + detail::basis_name(A, j, b)});
                    }
                }
            }
        }
    }

    if (A.weights) {
        for (int i = 0; i <= top; ++i) {
            for (std::size_t a = 0; a < A.dim(i); ++a) {
                const int w = A.weight(i, a);
                if (w < i || w > 2 * i) {
                    report.push_back({"weight-range", detail::basis_name(A, i, a) + " has weight " + std::to_string(w)});
                }
                if (i < top && !detail::supported_on_weight(A, i + 1, A.d(i, A.basis_vector(i, a)), w)) {
                    report.push_back({"weight-differential", "d(" + detail::basis_name(A, i, a) + ")"});
                }
            }
        }
        for (int i = 1; i <= top; ++i) {
            for (int j = 1; i + j <= top; ++j) {
                for (std::size_t a = 0; a < A.dim(i); ++a) {
                    for (std::size_t b = 0; b < A.dim(j); ++b) {
                        const int w = A.weight(i, a) + A.weight(j, b);
                        if (!detail::supported_on_weight(A, i + j, A.product_of_basis(i, a, j, b), w)) {
                            report.push_back({"weight-multiplicative",
                                              detail::basis_name(A, i, a) + " * " + detail::basis_name(A, j, b)});
                        }
                    }
                }
            }
        }
    }
    return report;
}

struct CohomologyGroup {
    std::size_t dimension = 0;
    std::vector<Vector> representatives;
};

/// H^i(A): dim ker d^i - rank d^{i-1}, with kernel vectors completing a basis of
/// the image to a basis of the kernel.
inline CohomologyGroup cohomology(const Cdga& A, int i) {
    if (i < 0 || i > A.top_degree) throw InputError("cohomology degree out of range");
    const auto kernel = kernel_basis(A.d_matrix(i));
    const Matrix incoming = A.d_matrix(i - 1);
    CohomologyGroup h;
    Matrix span = incoming;
    std::size_t current = rank(span);
    for (const auto& v : kernel) {
        Matrix extended = hstack(span, Matrix::from_columns({v}, A.dim(i), A.field));
        const std::size_t r = rank(extended);
        if (r > current) {
            span = std::move(extended);
            current = r;
            h.representatives.push_back(v);
        }
    }
    h.dimension = h.representatives.size();
    return h;
}

inline long euler_characteristic(const Cdga& A) {
    long chi = 0;
    for (int i = 0; i <= A.top_degree; ++i) chi += detail::sign_of(i) * static_cast<long>(A.dim(i));
    return chi;
}

/// Degree-1 vectors split by weight; zero components are omitted.
inline std::map<int, Vector> weight_components(const Cdga& A, const Vector& v) {
    if (!A.weights) throw UnsupportedError("weight_components: algebra " + A.name + " carries no weights");
    if (v.size() != A.dim(1)) throw InputError("weight_components: expected a degree-1 vector");
    std::map<int, Vector> parts;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        auto [it, inserted] = parts.try_emplace(A.weight(1, k), A.zero(1));
        it->second[k] = v[k];
    }
    return parts;
}

/// Checks that a morphism is a weight-preserving map of CDGAs with identity in degree 0.
inline ValidationReport validate(const CdgaMorphism& phi) {
    ValidationReport report;
    const Cdga& S = *phi.source;
    const Cdga& T = *phi.target;
    if (S.field != T.field) throw InputError("morphism between algebras over different fields");
    for (std::size_t i = 0; i < phi.maps.size(); ++i) {
        const int deg = static_cast<int>(i);
        if (phi.maps[i].rows() != T.dim(deg) || phi.maps[i].cols() != S.dim(deg)) {
            throw InputError("morphism map in degree " + std::to_string(i) + " has wrong shape");
        }
    }
    const int top = std::max(S.top_degree, T.top_degree);
    if (!(phi.in_degree(0) == Matrix::identity(1, S.field))) report.push_back({"unital", "degree 0"});

    for (int i = 0; i <= S.top_degree; ++i) {
        for (std::size_t a = 0; a < S.dim(i); ++a) {
            const Vector x = S.basis_vector(i, a);
            Vector lhs = phi.apply(i + 1, i < S.top_degree ? S.d(i, x) : S.zero(i + 1));
            Vector rhs = i < T.top_degree ? T.d(i, phi.apply(i, x)) : T.zero(i + 1);
            if (lhs != rhs) report.push_back({"chain-map", detail::basis_name(S, i, a)});
        }
    }
    for (int i = 1; i <= S.top_degree; ++i) {
        for (int j = 1; i + j <= top; ++j) {
            for (std::size_t a = 0; a < S.dim(i); ++a) {
                for (std::size_t b = 0; b < S.dim(j); ++b) {
                    Vector xy = S.product_of_basis(i, a, j, b);
                    if (xy.empty()) xy = S.zero(i + j);
                    const Vector lhs = phi.apply(i + j, xy);
                    const Vector rhs = T.multiply(i, phi.apply(i, S.basis_vector(i, a)), j, phi.apply(j, S.basis_vector(j, b)));
                    if (lhs != rhs) {
                        report.push_back({"multiplicative", detail::basis_name(S, i, a) + " * " + detail::basis_name(S, j, b)});
                    }
                }
            }
        }
    }
    if (S.weights && T.weights) {
        for (int i = 0; i <= S.top_degree; ++i) {
            for (std::size_t a = 0; a < S.dim(i); ++a) {
                const Vector img = phi.apply(i, S.basis_vector(i, a));
                if (!detail::supported_on_weight(T, i, img, S.weight(i, a))) {
                    report.push_back({"weight-preserving", detail::basis_name(S, i, a)});
                }
            }
        }
    }
    return report;
}

inline bool is_injective_in_degree(const CdgaMorphism& phi, int i) {
    return rank(phi.in_degree(i)) == phi.source->dim(i);
}

}  // namespace jumploci
