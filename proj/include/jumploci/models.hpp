#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cdga.hpp"

namespace jumploci {

namespace detail {

inline std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Sign and result of e_S * e_T in an exterior algebra; sign 0 when S and T meet.
inline std::pair<int, std::vector<int>> wedge(const std::vector<int>& s, const std::vector<int>& t) {
    int inversions = 0;
    for (int x : s) {
        for (int y : t) {
            if (x == y) return {0, {}};
            if (x > y) ++inversions;
        }
    }
    std::vector<int> merged(s);
    merged.insert(merged.end(), t.begin(), t.end());
    std::sort(merged.begin(), merged.end());
    return {inversions % 2 == 0 ? 1 : -1, merged};
}

inline std::string monomial_label(const std::vector<std::string>& gens, const std::vector<int>& s) {
    if (s.empty()) return "1";
    std::string out;
    for (int i : s) out += gens[static_cast<std::size_t>(i)];
    return out;
}

inline std::vector<Matrix> zero_differentials(const Cdga& A) {
    std::vector<Matrix> d;
    for (int i = 0; i < A.top_degree; ++i) d.emplace_back(A.dim(i + 1), A.dim(i), A.field);
    return d;
}

inline std::vector<std::vector<int>> degree_weights(const Cdga& A) {
    std::vector<std::vector<int>> w;
    for (int i = 0; i <= A.top_degree; ++i) w.emplace_back(A.dim(i), i);
    return w;
}

/// Exterior algebra on the named generators, truncated at degree `top`, d = 0.
inline Cdga exterior_algebra(const std::string& name, const std::vector<std::string>& gens, int top, Field f) {
    const int n = static_cast<int>(gens.size());
    Cdga A;
    A.name = name;
    A.field = f;
    A.top_degree = top;
    std::vector<std::map<std::vector<int>, std::size_t>> index(static_cast<std::size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) {
        std::vector<std::string> labels;
        for (const auto& s : subsets_of_size(n, k)) {
            index[static_cast<std::size_t>(k)][s] = labels.size();
            labels.push_back(monomial_label(gens, s));
        }
        A.basis.push_back(std::move(labels));
    }
    for (int i = 1; i <= top; ++i) {
        for (int j = 1; i + j <= top; ++j) {
            for (const auto& [s, a] : index[static_cast<std::size_t>(i)]) {
                for (const auto& [t, b] : index[static_cast<std::size_t>(j)]) {
                    const auto [sign, st] = wedge(s, t);
                    if (sign == 0) continue;
                    Vector v = A.zero(i + j);
                    v[index[static_cast<std::size_t>(i + j)].at(st)] = Scalar(f, sign);
                    A.products[{i, static_cast<int>(a), j, static_cast<int>(b)}] = std::move(v);
                }
            }
        }
    }
    A.differential = zero_differentials(A);
    A.weights = degree_weights(A);
    return A;
}

}  // namespace detail

/// Cohomology algebra of a closed orientable surface of genus g, d = 0.
/// Basis a1, b1, ..., ag, bg in degree 1 and w in degree 2, with ai*bi = w.
inline Cdga build_compact_curve(int genus, Field f = Field::rational()) {
    if (genus < 1) throw InputError("compact curve needs genus >= 1");
    Cdga A;
    A.name = "compact-curve:" + std::to_string(genus);
    A.field = f;
    A.top_degree = 2;
    std::vector<std::string> deg1;
    for (int i = 1; i <= genus; ++i) {
        deg1.push_back("a" + std::to_string(i));
        deg1.push_back("b" + std::to_string(i));
    }
    A.basis = {{"1"}, deg1, {"w"}};
    for (int i = 0; i < genus; ++i) {
        A.products[{1, 2 * i, 1, 2 * i + 1}] = {Scalar(f, 1)};
        A.products[{1, 2 * i + 1, 1, 2 * i}] = {Scalar(f, -1)};
    }
    A.differential = detail::zero_differentials(A);
    A.weights = detail::degree_weights(A);
    return A;
}

/// Formal model of a curve with first Betti number n and H^2 = 0.
inline Cdga build_open_curve(int betti, Field f = Field::rational()) {
    if (betti < 2) throw InputError("open curve needs first Betti number >= 2");
    Cdga A;
    A.name = "open-curve:" + std::to_string(betti);
    A.field = f;
    A.top_degree = 1;
    std::vector<std::string> deg1;
    for (int i = 1; i <= betti; ++i) deg1.push_back("x" + std::to_string(i));
    A.basis = {{"1"}, deg1};
    A.differential = detail::zero_differentials(A);
    A.weights = detail::degree_weights(A);
    return A;
}

/// Exterior algebra on n degree-1 generators e1..en truncated at `top`.
/// A `top` above n is lowered to n.
inline Cdga build_torus_model(int n, int top, Field f = Field::rational()) {
    if (n < 1) throw InputError("torus model needs n >= 1");
    top = std::min(top, n);
    if (top < 1 || top > 3) throw InputError("torus model truncation must lie in [1, 3]");
    std::vector<std::string> gens;
    for (int i = 1; i <= n; ++i) gens.push_back("e" + std::to_string(i));
    return detail::exterior_algebra("torus:" + std::to_string(n) + ":" + std::to_string(top), gens, top, f);
}

namespace detail {

struct TensorIndex {
    // per degree k: list of (i, a, b) with a in A^i, b in B^{k-i}
    std::vector<std::vector<std::array<int, 3>>> entries;
    std::vector<std::map<std::array<int, 3>, std::size_t>> lookup;
};

inline TensorIndex tensor_index(const Cdga& A, const Cdga& B, int top) {
    TensorIndex t;
    t.entries.resize(static_cast<std::size_t>(top) + 1);
    t.lookup.resize(static_cast<std::size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) {
        for (int i = k; i >= 0; --i) {
            for (std::size_t a = 0; a < A.dim(i); ++a) {
                for (std::size_t b = 0; b < B.dim(k - i); ++b) {
                    const std::array<int, 3> e{i, static_cast<int>(a), static_cast<int>(b)};
                    t.lookup[static_cast<std::size_t>(k)][e] = t.entries[static_cast<std::size_t>(k)].size();
                    t.entries[static_cast<std::size_t>(k)].push_back(e);
                }
            }
        }
    }
    return t;
}

inline std::string tensor_label(const std::string& x, const std::string& y) {
    if (x == "1") return y;
    if (y == "1") return x;
    return x + "*" + y;
}

/// x (deg i) tensor y (deg j) expanded into degree i + j of the product, accumulated into out.
inline void add_tensor(Vector& out, const TensorIndex& t, int i, const Vector& x, int j, const Vector& y, const Scalar& coef) {
    const int k = i + j;
    if (k >= static_cast<int>(t.lookup.size())) return;
    for (std::size_t a = 0; a < x.size(); ++a) {
        if (x[a].is_zero()) continue;
        for (std::size_t b = 0; b < y.size(); ++b) {
            if (y[b].is_zero()) continue;
            const auto idx = t.lookup[static_cast<std::size_t>(k)].at({i, static_cast<int>(a), static_cast<int>(b)});
            out[idx] += coef * x[a] * y[b];
        }
    }
}

}  // namespace detail

/// Graded tensor product, truncated at degree 3. Basis of degree k is ordered by
/// decreasing degree of the left factor.
inline Cdga tensor_product(const Cdga& A, const Cdga& B) {
    if (A.field != B.field) throw InputError("tensor_product: algebras over different fields");
    const int top = std::min(A.top_degree + B.top_degree, 3);
    const auto t = detail::tensor_index(A, B, top);
    Cdga P;
    P.name = A.name + "*" + B.name;
    P.field = A.field;
    P.top_degree = top;
    // Right-factor labels get a prime when they would collide with left-factor labels.
    std::vector<std::vector<std::string>> right = B.basis;
    bool collide = false;
    for (std::size_t i = 1; i < A.basis.size(); ++i)
        for (std::size_t j = 1; j < right.size(); ++j)
            for (const auto& l : right[j]) collide = collide || std::find(A.basis[i].begin(), A.basis[i].end(), l) != A.basis[i].end();
    if (collide)
        for (std::size_t j = 1; j < right.size(); ++j)
            for (auto& l : right[j]) l += "'";
    for (int k = 0; k <= top; ++k) {
        std::vector<std::string> labels;
        for (const auto& [i, a, b] : t.entries[static_cast<std::size_t>(k)]) {
            labels.push_back(detail::tensor_label(A.basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)],
                                                  right[static_cast<std::size_t>(k - i)][static_cast<std::size_t>(b)]));
        }
        P.basis.push_back(std::move(labels));
    }
    const Field f = P.field;
    for (int k = 1; k <= top; ++k) {
        for (int l = 1; k + l <= top; ++l) {
            for (std::size_t u = 0; u < P.dim(k); ++u) {
                const auto [i, a, b] = t.entries[static_cast<std::size_t>(k)][u];
                const int j = k - i;
                for (std::size_t v = 0; v < P.dim(l); ++v) {
                    const auto [i2, a2, b2] = t.entries[static_cast<std::size_t>(l)][v];
                    const int j2 = l - i2;
                    const Vector xx = A.product_of_basis(i, static_cast<std::size_t>(a), i2, static_cast<std::size_t>(a2));
                    const Vector yy = B.product_of_basis(j, static_cast<std::size_t>(b), j2, static_cast<std::size_t>(b2));
                    if (xx.empty() || yy.empty() || is_zero(xx) || is_zero(yy)) continue;
                    Vector out = P.zero(k + l);
                    detail::add_tensor(out, t, i + i2, xx, j + j2, yy, Scalar(f, detail::sign_of(j * i2)));
                    if (!is_zero(out)) P.products[{k, static_cast<int>(u), l, static_cast<int>(v)}] = std::move(out);
                }
            }
        }
    }
    for (int k = 0; k < top; ++k) {
        Matrix m(P.dim(k + 1), P.dim(k), f);
        for (std::size_t u = 0; u < P.dim(k); ++u) {
            const auto [i, a, b] = t.entries[static_cast<std::size_t>(k)][u];
            const int j = k - i;
            const Vector x = A.basis_vector(i, static_cast<std::size_t>(a));
            const Vector y = B.basis_vector(j, static_cast<std::size_t>(b));
            Vector out = P.zero(k + 1);
            if (i < A.top_degree) detail::add_tensor(out, t, i + 1, A.d(i, x), j, y, Scalar::one(f));
            if (j < B.top_degree) detail::add_tensor(out, t, i, x, j + 1, B.d(j, y), Scalar(f, detail::sign_of(i)));
            m.set_column(u, out);
        }
        P.differential.push_back(std::move(m));
    }
    if (A.weights && B.weights) {
        std::vector<std::vector<int>> w;
        for (int k = 0; k <= top; ++k) {
            std::vector<int> wk;
            for (const auto& [i, a, b] : t.entries[static_cast<std::size_t>(k)]) {
                wk.push_back(A.weight(i, static_cast<std::size_t>(a)) + B.weight(k - i, static_cast<std::size_t>(b)));
            }
            w.push_back(std::move(wk));
        }
        P.weights = std::move(w);
    }
    return P;
}

/// H(Sigma_g) tensor Lambda(t) with dt = w: the model with d = 0 on the curve part.
/// Weights: 1 on ai, bi; 2 on t and w; 3 on ai*t, bi*t; 4 on w*t.
inline Cdga build_surface_model(int genus, Field f = Field::rational()) {
    if (genus < 1) throw InputError("surface model needs genus >= 1");
    const Cdga H = build_compact_curve(genus, f);
    Cdga T = detail::exterior_algebra("t", {"t"}, 1, f);
    T.weights = std::vector<std::vector<int>>{{0}, {2}};
    Cdga A = tensor_product(H, T);
    A.name = "surface:" + std::to_string(genus);
    const auto t = detail::tensor_index(H, T, A.top_degree);
    const Vector w = H.basis_vector(2, 0);
    for (int k = 0; k < A.top_degree; ++k) {
        Matrix m(A.dim(k + 1), A.dim(k), f);
        for (std::size_t u = 0; u < A.dim(k); ++u) {
            const auto [i, a, b] = t.entries[static_cast<std::size_t>(k)][u];
            if (k - i != 1) continue;
            // d(x t) = (-1)^{|x|} x w
            const Vector xw = H.multiply(i, H.basis_vector(i, static_cast<std::size_t>(a)), 2, w);
            Vector out = A.zero(k + 1);
            detail::add_tensor(out, t, i + 2, xw, 0, T.basis_vector(0, 0), Scalar(f, detail::sign_of(i)));
            m.set_column(u, out);
        }
        A.differential[static_cast<std::size_t>(k)] = std::move(m);
    }
    return A;
}

/// The inclusion H(Sigma_g) -> surface model, identity on the curve part.
inline CdgaMorphism surface_inclusion(int genus, Field f = Field::rational()) {
    auto H = std::make_shared<const Cdga>(build_compact_curve(genus, f));
    auto A = std::make_shared<const Cdga>(build_surface_model(genus, f));
    CdgaMorphism phi{H, A, {}};
    for (int i = 0; i <= H->top_degree; ++i) {
        Matrix m(A->dim(i), H->dim(i), f);
        for (std::size_t a = 0; a < H->dim(i); ++a) m(a, a) = Scalar::one(f);
        phi.maps.push_back(std::move(m));
    }
    return phi;
}

struct TensorFactors {
    CdgaPtr product;
    CdgaMorphism left;
    CdgaMorphism right;
};

/// A tensor B together with the factor inclusions x -> x*1 and y -> 1*y.
inline TensorFactors tensor_with_inclusions(const Cdga& A, const Cdga& B) {
    auto a = std::make_shared<const Cdga>(A);
    auto b = std::make_shared<const Cdga>(B);
    auto p = std::make_shared<const Cdga>(tensor_product(A, B));
    const auto t = detail::tensor_index(A, B, p->top_degree);
    TensorFactors out{p, {a, p, {}}, {b, p, {}}};
    for (int i = 0; i <= A.top_degree; ++i) {
        Matrix m(p->dim(i), A.dim(i), A.field);
        if (i <= p->top_degree) {
            for (std::size_t x = 0; x < A.dim(i); ++x) m(t.lookup[static_cast<std::size_t>(i)].at({i, static_cast<int>(x), 0}), x) = Scalar::one(A.field);
        }
        out.left.maps.push_back(std::move(m));
    }
    for (int j = 0; j <= B.top_degree; ++j) {
        Matrix m(p->dim(j), B.dim(j), B.field);
        if (j <= p->top_degree) {
            for (std::size_t y = 0; y < B.dim(j); ++y) m(t.lookup[static_cast<std::size_t>(j)].at({0, 0, static_cast<int>(y)}), y) = Scalar::one(B.field);
        }
        out.right.maps.push_back(std::move(m));
    }
    return out;
}

/// Orlik-Solomon algebra of a central arrangement given by integer normals in three
/// coordinates. Relations are boundaries of circuits; the basis consists of the
/// no-broken-circuit monomials for the input order. d = 0, weights = degree.
inline Cdga build_os_arrangement(const std::vector<std::array<long, 3>>& normals, Field f = Field::rational()) {
    const int m = static_cast<int>(normals.size());
    if (m == 0) throw InputError("arrangement is empty");
    if (m < 2) throw InputError("arrangement needs at least two hyperplanes");
    const Field q = Field::rational();
    auto subset_rank = [&](const std::vector<int>& s) {
        Matrix mat(s.size(), 3, q);
        for (std::size_t r = 0; r < s.size(); ++r)
            for (std::size_t c = 0; c < 3; ++c) mat(r, c) = Scalar(q, normals[static_cast<std::size_t>(s[r])][c]);
        return static_cast<int>(rank(mat));
    };
    for (int i = 0; i < m; ++i) {
        if (subset_rank({i}) == 0) throw InputError("zero normal vector");
        for (int j = i + 1; j < m; ++j) {
            if (subset_rank({i, j}) < 2) {
                throw InputError("hyperplanes " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
            }
        }
    }
    std::vector<int> all(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) all[static_cast<std::size_t>(i)] = i;
    const int top = subset_rank(all);

    std::vector<std::vector<int>> circuits;
    for (int k = 3; k <= top + 1; ++k) {
        for (const auto& s : detail::subsets_of_size(m, k)) {
            if (subset_rank(s) != k - 1) continue;
            bool minimal = true;
            for (std::size_t drop = 0; drop < s.size() && minimal; ++drop) {
                std::vector<int> sub = s;
                sub.erase(sub.begin() + static_cast<long>(drop));
                if (subset_rank(sub) < static_cast<int>(sub.size())) minimal = false;
            }
            if (minimal) circuits.push_back(s);
        }
    }
    auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    auto is_nbc = [&](const std::vector<int>& s) {
        for (const auto& c : circuits) {
            const std::vector<int> broken(c.begin() + 1, c.end());
            if (contains(s, broken)) return false;
        }
        return true;
    };

    std::vector<std::string> gens;
    for (int i = 1; i <= m; ++i) gens.push_back("e" + std::to_string(i));
    const Cdga E = detail::exterior_algebra("E", gens, top, f);
    std::vector<std::map<std::vector<int>, std::size_t>> e_index(static_cast<std::size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) {
        const auto subs = detail::subsets_of_size(m, k);
        for (std::size_t i = 0; i < subs.size(); ++i) e_index[static_cast<std::size_t>(k)][subs[i]] = i;
    }

    Cdga A;
    A.name = "arrangement:" + std::to_string(m);
    A.field = f;
    A.top_degree = top;
    std::vector<std::vector<std::vector<int>>> nbc(static_cast<std::size_t>(top) + 1);
    // reduction[k]: dim A^k x dim E^k, the projection E^k -> A^k in the nbc basis
    std::vector<Matrix> reduction;
    for (int k = 0; k <= top; ++k) {
        const auto subs = detail::subsets_of_size(m, k);
        std::vector<std::string> labels;
        for (const auto& s : subs) {
            if (is_nbc(s)) {
                nbc[static_cast<std::size_t>(k)].push_back(s);
                labels.push_back(detail::monomial_label(gens, s));
            }
        }
        A.basis.push_back(labels);

        std::vector<Vector> ideal;
        for (const auto& c : circuits) {
            const int j = static_cast<int>(c.size()) - 1;
            if (j > k) continue;
            Vector boundary = E.zero(j);
            for (std::size_t drop = 0; drop < c.size(); ++drop) {
                std::vector<int> face = c;
                face.erase(face.begin() + static_cast<long>(drop));
                boundary[e_index[static_cast<std::size_t>(j)].at(face)] += Scalar(f, detail::sign_of(static_cast<int>(drop)));
            }
            for (const auto& mono : detail::subsets_of_size(m, k - j)) {
                ideal.push_back(E.multiply(k - j, E.basis_vector(k - j, e_index[static_cast<std::size_t>(k - j)].at(mono)), j, boundary));
            }
        }
        std::vector<Vector> columns;
        for (const auto& s : nbc[static_cast<std::size_t>(k)]) columns.push_back(E.basis_vector(k, e_index[static_cast<std::size_t>(k)].at(s)));
        const std::size_t n_nbc = columns.size();
        columns.insert(columns.end(), ideal.begin(), ideal.end());
        const Matrix span = Matrix::from_columns(columns, E.dim(k), f);
        if (rank(span) != E.dim(k) || n_nbc + rank(Matrix::from_columns(ideal, E.dim(k), f)) != E.dim(k)) {
            throw std::logic_error("no-broken-circuit monomials do not form a basis modulo the relations");
        }
        Matrix red(n_nbc, E.dim(k), f);
        for (std::size_t u = 0; u < E.dim(k); ++u) {
            const auto x = solve(span, E.basis_vector(k, u));
            for (std::size_t r = 0; r < n_nbc; ++r) red(r, u) = (*x)[r];
        }
        reduction.push_back(std::move(red));
    }
    for (int i = 1; i <= top; ++i) {
        for (int j = 1; i + j <= top; ++j) {
            const auto& ni = nbc[static_cast<std::size_t>(i)];
            const auto& nj = nbc[static_cast<std::size_t>(j)];
            for (std::size_t a = 0; a < ni.size(); ++a) {
                for (std::size_t b = 0; b < nj.size(); ++b) {
                    const Vector prod = E.product_of_basis(i, e_index[static_cast<std::size_t>(i)].at(ni[a]), j,
                                                           e_index[static_cast<std::size_t>(j)].at(nj[b]));
                    Vector v = reduction[static_cast<std::size_t>(i + j)].apply(prod);
                    if (!is_zero(v)) A.products[{i, static_cast<int>(a), j, static_cast<int>(b)}] = std::move(v);
                }
            }
        }
    }
    A.differential = detail::zero_differentials(A);
    A.weights = detail::degree_weights(A);
    return A;
}

/// m lines through one point: normals (1, k, 0) for k = 0..m-1.
inline Cdga build_pencil(int m, Field f = Field::rational()) {
    if (m < 2) throw InputError("pencil needs at least two lines");
    std::vector<std::array<long, 3>> normals;
    for (int k = 0; k < m; ++k) normals.push_back({1, k, 0});
    Cdga A = build_os_arrangement(normals, f);
    A.name = "pencil:" + std::to_string(m);
    return A;
}

/// Moves every coefficient of a rational model into another field.
inline Cdga to_field(const Cdga& A, Field f) {
    Cdga B = A;
    B.field = f;
    for (auto& [key, v] : B.products)
        for (auto& s : v) s = s.to_field(f);
    for (auto& m : B.differential) m = m.to_field(f);
    return B;
}

}  // namespace jumploci
