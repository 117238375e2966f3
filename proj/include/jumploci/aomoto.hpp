#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flat.hpp"

namespace jumploci {

/// (A (x) V, d_omega) with d_omega = d (x) id + ad_omega, where
/// ad_omega(a (x) v) = sum_k a_k a (x) theta(x_k) v. differentials[i] maps
/// A^i (x) V -> A^{i+1} (x) V; basis index = algebra index * dim V + vector index.
struct AomotoComplex {
    std::size_t rep_dim = 0;
    std::vector<Matrix> differentials;  // one per degree 0..top, the last into the zero space
};

namespace detail {

inline std::string residual_summary(const Cdga& A, const LieAlgebra& g, const Matrix& res) {
    std::string out;
    for (std::size_t c = 0; c < res.rows(); ++c)
        for (std::size_t z = 0; z < res.cols(); ++z)
            if (!res(c, z).is_zero()) {
                out += (out.empty() ? "" : ", ") + A.basis[2][c] + "(x)" + g.basis[z] + " = " + res(c, z).to_string();
            }
    return out;
}

}  // namespace detail

inline AomotoComplex build_aomoto(const Cdga& A, const LieRep& theta, const FlatConnection& w) {
    const LieAlgebra& g = theta.lie;
    const Matrix res = mc_residual(A, g, w);
    if (!res.is_zero()) {
        throw PreconditionError("Aomoto complex needs a flat connection; residual: " + detail::residual_summary(A, g, res));
    }
    const std::size_t m = theta.dim;
    const Field f = A.field;
    std::vector<Matrix> thetas;
    for (std::size_t k = 0; k < A.dim(1); ++k) thetas.push_back(theta.of(w.row(k)));

    AomotoComplex C;
    C.rep_dim = m;
    for (int i = 0; i <= A.top_degree; ++i) {
        const std::size_t src = A.dim(i), dst = A.dim(i + 1);
        Matrix D(dst * m, src * m, f);
        if (dst > 0) {
            const Matrix d = A.d_matrix(i);
            for (std::size_t a = 0; a < src; ++a) {
                for (std::size_t b = 0; b < dst; ++b) {
                    const auto& x = d(b, a);
                    if (x.is_zero()) continue;
                    for (std::size_t s = 0; s < m; ++s) D(b * m + s, a * m + s) += x;
                }
                for (std::size_t k = 0; k < A.dim(1); ++k) {
                    if (thetas[k].is_zero()) continue;
                    const Vector prod = A.product_of_basis(1, k, i, a);
                    for (std::size_t b = 0; b < dst; ++b) {
                        if (prod[b].is_zero()) continue;
                        for (std::size_t r = 0; r < m; ++r)
                            for (std::size_t s = 0; s < m; ++s) {
                                const auto& t = thetas[k](r, s);
                                if (!t.is_zero()) D(b * m + r, a * m + s) += prod[b] * t;
                            }
                    }
                }
            }
        }
        C.differentials.push_back(std::move(D));
    }
    return C;
}

/// dim ker D^i - rank D^{i-1}.
inline std::size_t betti(const AomotoComplex& C, int i) {
    if (i < 0 || static_cast<std::size_t>(i) >= C.differentials.size()) throw InputError("Aomoto degree out of range");
    const Matrix& D = C.differentials[static_cast<std::size_t>(i)];
    const std::size_t kernel = D.cols() - rank(D);
    const std::size_t image = i == 0 ? 0 : rank(C.differentials[static_cast<std::size_t>(i - 1)]);
    return kernel - image;
}

inline std::vector<std::size_t> betti_numbers(const AomotoComplex& C) {
    std::vector<std::size_t> ranks;
    for (const auto& D : C.differentials) ranks.push_back(rank(D));
    std::vector<std::size_t> b;
    for (std::size_t i = 0; i < C.differentials.size(); ++i) {
        b.push_back(C.differentials[i].cols() - ranks[i] - (i == 0 ? 0 : ranks[i - 1]));
    }
    return b;
}

inline std::size_t aomoto_betti(const Cdga& A, const LieRep& theta, const FlatConnection& w, int i) {
    if (i < 0 || i > A.top_degree) throw InputError("Aomoto degree out of range");
    return betti(build_aomoto(A, theta, w), i);
}

inline bool resonance_membership(const Cdga& A, const LieRep& theta, const FlatConnection& w, int i, std::size_t depth) {
    if (depth == 0) {
        if (!is_flat(A, theta.lie, w)) throw PreconditionError("resonance: connection is not flat");
        return true;
    }
    return aomoto_betti(A, theta, w, i) >= depth;
}

/// Nonzero v with theta(x_k) v = 0 for every row x_k of omega.
inline std::optional<Vector> r01_common_kernel(const LieRep& theta, const FlatConnection& w) {
    const std::size_t m = theta.dim;
    Matrix stacked(w.rows() * m, m, theta.lie.field);
    for (std::size_t k = 0; k < w.rows(); ++k) {
        const Matrix t = theta.of(w.row(k));
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t s = 0; s < m; ++s) stacked(k * m + r, s) = t(r, s);
    }
    const auto k = kernel_basis(stacked);
    if (k.empty()) return std::nullopt;
    return k.front();
}

struct DepthGapReport {
    std::size_t s = 0;  // b1 over the source at omega
    std::size_t r = 0;  // b1 over the target at the pullback
    Vector fixed_vector;
    Vector eta_tensor_v;  // in A^1 (x) V, algebra-major
    std::vector<std::pair<std::string, bool>> checks;

    bool holds() const {
        for (const auto& [name, ok] : checks)
            if (!ok) return false;
        return true;
    }
};

/// Compares first Aomoto-Betti numbers of omega over A_f and of Phi^* omega over A,
/// for a representation with a fixed vector v and a closed eta outside im Phi^1.
/// Hypothesis failures throw PreconditionError naming the hypothesis.
inline DepthGapReport depth_gap(const CdgaMorphism& phi, const LieRep& theta, const FlatConnection& w, const Vector& eta) {
    const Cdga& S = *phi.source;
    const Cdga& T = *phi.target;
    const LieAlgebra& g = theta.lie;
    if (!validate(phi).empty()) throw PreconditionError("hypothesis 'cdga map' failed: Phi is not a CDGA morphism");
    if (!is_injective_in_degree(phi, 1)) throw PreconditionError("hypothesis 'injective' failed: Phi is not injective on H^1");
    const auto v = fixed_vector(theta);
    if (!v) throw PreconditionError("hypothesis 'fixed vector' failed: no nonzero vector is annihilated by g");
    if (eta.size() != T.dim(1)) throw InputError("eta must be a degree-1 vector of the target");
    if (T.top_degree >= 2 && !is_zero(T.d(1, eta))) throw PreconditionError("hypothesis 'eta closed' failed: d(eta) != 0");
    const Matrix img = phi.in_degree(1);
    if (rank(hstack(img, Matrix::from_columns({eta}, T.dim(1), T.field))) == rank(img)) {
        throw PreconditionError("hypothesis 'eta outside image' failed: eta lies in im Phi^1");
    }
    if (!is_flat(S, g, w)) throw PreconditionError("hypothesis 'flat' failed: omega is not flat");
    if (f1_membership(S, g, w).member) throw PreconditionError("hypothesis 'not in F1' failed: omega lies in F^1");

    const FlatConnection big = pullback(phi, w);
    const AomotoComplex source_complex = build_aomoto(S, theta, w);
    const AomotoComplex target_complex = build_aomoto(T, theta, big);

    DepthGapReport rep;
    rep.s = betti(source_complex, 1);
    rep.r = betti(target_complex, 1);
    rep.fixed_vector = *v;
    rep.eta_tensor_v = zero_vector(T.dim(1) * theta.dim, T.field);
    for (std::size_t a = 0; a < T.dim(1); ++a)
        for (std::size_t s = 0; s < theta.dim; ++s) rep.eta_tensor_v[a * theta.dim + s] = eta[a] * (*v)[s];
    const bool in_kernel = is_zero(target_complex.differentials[1].apply(rep.eta_tensor_v));
    rep.checks = {
        {"s >= 1", rep.s >= 1},
        {"r > s", rep.r > rep.s},
        {"r > 1", rep.r > 1},
        {"eta (x) v in ker d^1", in_kernel},
        {"pullback flat", is_flat(T, g, big)},
        {"pullback not in F1", !f1_membership(T, g, big).member},
    };
    return rep;
}

}  // namespace jumploci
