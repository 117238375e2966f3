#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flat.hpp"
#include "models.hpp"

namespace jumploci {

/// Quadratic presentation of the holonomy Lie algebra: generators dual to the
/// degree-1 basis, one relation per degree-2 basis element c,
///     sum_k lin[k] a_k + sum_{k<l} quad(k, l) [a_k, a_l],
/// where lin is the row of d^1 at c and quad(k, l) is the coefficient of c in a_k a_l.
struct HolonomyPresentation {
    struct Relation {
        Vector lin;
        Matrix quad;  // antisymmetric
    };

    std::vector<std::string> generators;
    std::vector<Relation> relations;
};

inline HolonomyPresentation holonomy_presentation(const Cdga& A) {
    HolonomyPresentation P;
    P.generators = A.dim(1) ? A.basis[1] : std::vector<std::string>{};
    const std::size_t n1 = A.dim(1);
    for (std::size_t c = 0; c < A.dim(2); ++c) {
        HolonomyPresentation::Relation rel{A.zero(1), Matrix(n1, n1, A.field)};
        for (std::size_t k = 0; k < n1; ++k) rel.lin[k] = A.differential[1](c, k);
        for (std::size_t k = 0; k < n1; ++k) {
            for (std::size_t l = k + 1; l < n1; ++l) {
                const Scalar q = A.product_of_basis(1, k, 1, l)[c];
                rel.quad(k, l) = q;
                rel.quad(l, k) = -q;
            }
        }
        P.relations.push_back(std::move(rel));
    }
    return P;
}

/// Value of each relation under the assignment a_k -> row k of phi.
inline std::vector<Vector> relation_values(const HolonomyPresentation& P, const LieAlgebra& g, const FlatConnection& phi) {
    if (phi.coeffs.rows() != P.generators.size() || phi.coeffs.cols() != g.dim()) {
        throw InputError("relation_check: assignment shape does not match the presentation");
    }
    const std::size_t n = P.generators.size();
    std::vector<Vector> rows;
    for (std::size_t k = 0; k < n; ++k) rows.push_back(phi.row(k));
    std::vector<Vector> values;
    for (const auto& rel : P.relations) {
        Vector v = g.zero();
        for (std::size_t k = 0; k < n; ++k) axpy(v, rel.lin[k], rows[k]);
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t l = k + 1; l < n; ++l) {
                if (rel.quad(k, l).is_zero()) continue;
                axpy(v, rel.quad(k, l), g.bracket(rows[k], rows[l]));
            }
        }
        values.push_back(std::move(v));
    }
    return values;
}

inline bool relation_check(const HolonomyPresentation& P, const LieAlgebra& g, const FlatConnection& phi) {
    for (const auto& v : relation_values(P, g, phi))
        if (!is_zero(v)) return false;
    return true;
}

/// Lie monomial: a generator (sub empty) or the bracket of its two children.
struct BracketTree {
    std::size_t generator = 0;
    std::vector<BracketTree> sub;

    static BracketTree gen(std::size_t i) { return {i, {}}; }
    static BracketTree bracket(BracketTree a, BracketTree b) { return {0, {std::move(a), std::move(b)}}; }
    bool is_generator() const { return sub.empty(); }
};

/// Finite linear combination of Lie monomials.
struct LiePolynomial {
    std::vector<std::pair<Scalar, BracketTree>> terms;

    static LiePolynomial generator(std::size_t i, Field f) { return {{{Scalar::one(f), BracketTree::gen(i)}}}; }

    LiePolynomial& add(const Scalar& c, const LiePolynomial& o) {
        for (const auto& [a, t] : o.terms) terms.emplace_back(c * a, t);
        return *this;
    }
};

inline LiePolynomial bracket(const LiePolynomial& x, const LiePolynomial& y) {
    LiePolynomial out;
    for (const auto& [a, s] : x.terms)
        for (const auto& [b, t] : y.terms) out.terms.emplace_back(a * b, BracketTree::bracket(s, t));
    return out;
}

/// Image in the tensor algebra, [u, v] = uv - vu; two Lie polynomials are equal in
/// the free Lie algebra iff these images agree.
using AssociativePolynomial = std::map<std::vector<std::size_t>, Scalar>;

namespace detail {

inline AssociativePolynomial expand_tree(const BracketTree& t, Field f) {
    if (t.is_generator()) return {{{t.generator}, Scalar::one(f)}};
    const auto a = expand_tree(t.sub[0], f);
    const auto b = expand_tree(t.sub[1], f);
    AssociativePolynomial out;
    for (const auto& [u, x] : a) {
        for (const auto& [v, y] : b) {
            std::vector<std::size_t> uv(u), vu(v);
            uv.insert(uv.end(), v.begin(), v.end());
            vu.insert(vu.end(), u.begin(), u.end());
            auto it = out.try_emplace(uv, Scalar::zero(f)).first;
            it->second += x * y;
            it = out.try_emplace(vu, Scalar::zero(f)).first;
            it->second -= x * y;
        }
    }
    return out;
}

inline Vector evaluate_tree(const BracketTree& t, const LieAlgebra& g, const std::vector<Vector>& images) {
    if (t.is_generator()) return images.at(t.generator);
    return g.bracket(evaluate_tree(t.sub[0], g, images), evaluate_tree(t.sub[1], g, images));
}

inline LiePolynomial substitute_tree(const BracketTree& t, std::size_t gen, const LiePolynomial& value, Field f) {
    if (t.is_generator()) return t.generator == gen ? value : LiePolynomial::generator(t.generator, f);
    return bracket(substitute_tree(t.sub[0], gen, value, f), substitute_tree(t.sub[1], gen, value, f));
}

}  // namespace detail

inline AssociativePolynomial expand(const LiePolynomial& p, Field f) {
    AssociativePolynomial out;
    for (const auto& [c, t] : p.terms) {
        for (const auto& [w, x] : detail::expand_tree(t, f)) {
            auto it = out.try_emplace(w, Scalar::zero(f)).first;
            it->second += c * x;
        }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

inline Vector evaluate(const LiePolynomial& p, const LieAlgebra& g, const std::vector<Vector>& images) {
    Vector v = g.zero();
    for (const auto& [c, t] : p.terms) axpy(v, c, detail::evaluate_tree(t, g, images));
    return v;
}

inline LiePolynomial substitute(const LiePolynomial& p, std::size_t gen, const LiePolynomial& value, Field f) {
    LiePolynomial out;
    for (const auto& [c, t] : p.terms) out.add(c, detail::substitute_tree(t, gen, value, f));
    return out;
}

/// Nonzero scalar multiples of each other in the free Lie algebra.
inline bool proportional(const LiePolynomial& a, const LiePolynomial& b, Field f) {
    const auto x = expand(a, f);
    const auto y = expand(b, f);
    if (x.empty() || y.empty() || x.size() != y.size()) return false;
    const auto lead = y.find(x.begin()->first);
    if (lead == y.end()) return false;
    const Scalar ratio = x.begin()->second / lead->second;
    for (const auto& [w, c] : x) {
        const auto it = y.find(w);
        if (it == y.end() || !(c == ratio * it->second)) return false;
    }
    return true;
}

/// Presentation with arbitrary Lie polynomial relations.
struct LiePresentation {
    std::vector<std::string> generators;
    std::vector<LiePolynomial> relations;
};

inline LiePresentation to_lie_presentation(const HolonomyPresentation& P, Field f) {
    LiePresentation L{P.generators, {}};
    const std::size_t n = P.generators.size();
    for (const auto& rel : P.relations) {
        LiePolynomial r;
        for (std::size_t k = 0; k < n; ++k)
            if (!rel.lin[k].is_zero()) r.add(rel.lin[k], LiePolynomial::generator(k, f));
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = k + 1; l < n; ++l)
                if (!rel.quad(k, l).is_zero())
                    r.add(rel.quad(k, l), bracket(LiePolynomial::generator(k, f), LiePolynomial::generator(l, f)));
        L.relations.push_back(std::move(r));
    }
    return L;
}

inline bool relation_check(const LiePresentation& P, const LieAlgebra& g, const FlatConnection& phi) {
    if (phi.coeffs.rows() != P.generators.size() || phi.coeffs.cols() != g.dim()) {
        throw InputError("relation_check: assignment shape does not match the presentation");
    }
    std::vector<Vector> images;
    for (std::size_t k = 0; k < P.generators.size(); ++k) images.push_back(phi.row(k));
    for (const auto& r : P.relations)
        if (!is_zero(evaluate(r, g, images))) return false;
    return true;
}

struct SurfacePresentations {
    LiePresentation curve;    // generators a1..bg, relation r
    LiePresentation surface;  // generators a1..bg, relations [ai, r], [bi, r]
    LiePolynomial r;
};

/// r = sum_i [a_i, b_i]. The surface presentation is obtained from the holonomy
/// presentation of the surface model by eliminating t via its linear relation
/// t = -r; each substituted relation is checked against [x, r].
inline SurfacePresentations surface_presentations(int genus, Field f = Field::rational()) {
    if (genus < 1) throw InputError("surface presentations need genus >= 1");
    const Cdga A = build_surface_model(genus, f);
    const LiePresentation full = to_lie_presentation(holonomy_presentation(A), f);
    const std::size_t n = 2 * static_cast<std::size_t>(genus);
    const std::size_t t = A.index_of(1, "t");

    SurfacePresentations out;
    for (std::size_t i = 0; i < n; i += 2) {
        out.r.add(Scalar::one(f), bracket(LiePolynomial::generator(i, f), LiePolynomial::generator(i + 1, f)));
    }
    const std::vector<std::string> gens(A.basis[1].begin(), A.basis[1].begin() + static_cast<long>(n));
    out.curve = {gens, {out.r}};
    out.surface.generators = gens;

    // The relation dual to w is t + r; solve it for t.
    const std::size_t w = A.index_of(2, "w");
    LiePolynomial minus_r;
    minus_r.add(Scalar(f, -1), out.r);
    LiePolynomial t_plus_r;
    t_plus_r.add(Scalar::one(f), LiePolynomial::generator(t, f)).add(Scalar::one(f), out.r);
    if (!proportional(full.relations[w], t_plus_r, f)) {
        throw std::logic_error("holonomy relation dual to w is not t + r");
    }
    for (std::size_t c = 0; c < full.relations.size(); ++c) {
        if (c == w) continue;
        const LiePolynomial eliminated = substitute(full.relations[c], t, minus_r, f);
        const std::size_t x = A.index_of(1, A.basis[2][c].substr(0, A.basis[2][c].find('*')));
        const LiePolynomial expected = bracket(LiePolynomial::generator(x, f), out.r);
        if (!proportional(eliminated, expected, f)) {
            throw std::logic_error("eliminated relation for " + A.basis[2][c] + " is not [x, r]");
        }
        out.surface.relations.push_back(expected);
    }
    return out;
}

/// relation_check on the holonomy presentation and is_flat agree on phi.
inline bool correspondence_check(const Cdga& A, const LieAlgebra& g, const FlatConnection& phi) {
    return relation_check(holonomy_presentation(A), g, phi) == is_flat(A, g, phi);
}

struct CounterexampleRho {
    FlatConnection assignment;  // rows a1, b1, ..., ag, bg
    Vector rho_r;               // image of r = sum [ai, bi]
};

/// a1 -> E12, b1 -> E23, all other generators -> 0 in sl_n.
inline CounterexampleRho build_counterexample_rho(int n, int genus, Field f = Field::rational()) {
    if (n < 3) throw InputError("the counterexample needs sl_n with n >= 3");
    if (genus < 1) throw InputError("genus must be >= 1");
    const LieAlgebra g = build_sl(n, f);
    CounterexampleRho out{{Matrix(2 * static_cast<std::size_t>(genus), g.dim(), f)}, {}};
    out.assignment.coeffs(0, g.root_vector(1, 2)) = Scalar::one(f);
    out.assignment.coeffs(1, g.root_vector(2, 3)) = Scalar::one(f);
    out.rho_r = g.zero();
    for (std::size_t i = 0; i < out.assignment.rows(); i += 2) {
        out.rho_r = sum(out.rho_r, g.bracket(out.assignment.row(i), out.assignment.row(i + 1)));
    }
    return out;
}

}  // namespace jumploci
