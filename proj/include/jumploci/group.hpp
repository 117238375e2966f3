#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lie.hpp"

namespace jumploci {

struct Letter {
    std::size_t generator;
    int exponent;  // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Word freely_reduce(const Word& w) {
    Word out;
    for (const auto& l : w) {
        if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

/// Finitely presented group; the presentation 2-complex stands for the space.
/// `aspherical` declares that the 2-complex is a K(pi, 1), which makes b2 meaningful.
struct FpGroup {
    std::vector<std::string> generators;
    std::vector<Word> relators;
    bool aspherical = false;

    long euler_characteristic() const {
        return 1 - static_cast<long>(generators.size()) + static_cast<long>(relators.size());
    }
};

/// Whitespace separated tokens `x` or `x^-1`.
inline Word parse_word(const std::string& text, const std::vector<std::string>& generators) {
    std::istringstream in(text);
    std::string tok;
    Word w;
    while (in >> tok) {
        int exp = 1;
        std::string name = tok;
        if (const auto pos = tok.find('^'); pos != std::string::npos) {
            const std::string e = tok.substr(pos + 1);
            if (e == "-1") {
                exp = -1;
            } else if (e != "1") {
                throw InputError("unsupported exponent in '" + tok + "'");
            }
            name = tok.substr(0, pos);
        }
        std::size_t idx = generators.size();
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (generators[i] == name) idx = i;
        if (idx == generators.size()) throw InputError("unknown generator '" + name + "'");
        w.push_back({idx, exp});
    }
    return freely_reduce(w);
}

inline std::string format_word(const Word& w, const std::vector<std::string>& generators) {
    std::string out;
    for (const auto& l : w) {
        if (!out.empty()) out += ' ';
        out += generators.at(l.generator);
        if (l.exponent < 0) out += "^-1";
    }
    return out;
}

/// < a1, b1, ..., ag, bg | [a1, b1] ... [ag, bg] > with [a, b] = a b a^-1 b^-1.
inline FpGroup surface_group(int genus) {
    if (genus < 1) throw InputError("surface group needs genus >= 1");
    FpGroup G;
    Word r;
    for (int i = 1; i <= genus; ++i) {
        const std::size_t a = G.generators.size();
        G.generators.push_back("a" + std::to_string(i));
        G.generators.push_back("b" + std::to_string(i));
        r.insert(r.end(), {{a, 1}, {a + 1, 1}, {a, -1}, {a + 1, -1}});
    }
    G.relators.push_back(r);
    G.aspherical = true;
    return G;
}

inline FpGroup free_group(int n) {
    if (n < 1) throw InputError("free group needs n >= 1");
    FpGroup G;
    for (int i = 1; i <= n; ++i) G.generators.push_back("x" + std::to_string(i));
    G.aspherical = true;
    return G;
}

enum class RepTarget { general_linear, special_linear, borel };

inline std::string to_string(RepTarget t) {
    switch (t) {
        case RepTarget::general_linear: return "GL";
        case RepTarget::special_linear: return "SL";
        case RepTarget::borel: return "Borel";
    }
    return "?";
}

/// Assignment of an invertible matrix to each generator. Relators are not
/// required to hold (see rep_check); target constraints are.
struct GroupRep {
    FpGroup group;
    RepTarget target = RepTarget::general_linear;
    std::vector<Matrix> images;
    std::vector<Matrix> inverses;

    std::size_t dim() const { return images.empty() ? 0 : images.front().rows(); }
    Field field() const { return images.empty() ? Field{} : images.front().field(); }

    Matrix evaluate(const Word& w) const {
        Matrix m = Matrix::identity(dim(), field());
        for (const auto& l : w) m = m * (l.exponent > 0 ? images[l.generator] : inverses[l.generator]);
        return m;
    }
};

inline GroupRep make_group_rep(FpGroup group, RepTarget target, std::vector<Matrix> images) {
    if (images.size() != group.generators.size()) throw InputError("rep needs one matrix per generator");
    if (images.empty()) throw InputError("rep of a group without generators");
    const std::size_t n = images.front().rows();
    GroupRep rho{std::move(group), target, {}, {}};
    for (std::size_t i = 0; i < images.size(); ++i) {
        const Matrix& m = images[i];
        if (m.rows() != n || m.cols() != n) throw InputError("rep matrices must be square of equal size");
        auto inv = inverse(m);
        if (!inv) throw InputError("image of generator " + rho.group.generators[i] + " is not invertible");
        if (target != RepTarget::general_linear && !(determinant(m) == Scalar::one(m.field()))) {
            throw InputError("image of generator " + rho.group.generators[i] + " does not have determinant 1");
        }
        if (target == RepTarget::borel && (n != 2 || !m(1, 0).is_zero())) {
            throw InputError("image of generator " + rho.group.generators[i] + " is not upper triangular in SL2");
        }
        rho.inverses.push_back(std::move(*inv));
    }
    rho.images = std::move(images);
    return rho;
}

/// Every relator evaluates to the identity.
inline bool rep_check(const GroupRep& rho) {
    const Matrix id = Matrix::identity(rho.dim(), rho.field());
    for (const auto& r : rho.group.relators)
        if (!(rho.evaluate(r) == id)) return false;
    return true;
}

/// Nonzero v with rho(x) v = v for every generator.
inline std::optional<Vector> fixed_vector(const GroupRep& rho) {
    const std::size_t n = rho.dim();
    const Field f = rho.field();
    Matrix stacked(n * rho.images.size(), n, f);
    const Matrix id = Matrix::identity(n, f);
    for (std::size_t i = 0; i < rho.images.size(); ++i) {
        const Matrix m = rho.images[i] - id;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) stacked(i * n + r, c) = m(r, c);
    }
    const auto k = kernel_basis(stacked);
    if (k.empty()) return std::nullopt;
    return k.front();
}

/// Fox Jacobian evaluated at rho: block (r, i) = rho(d r / d x_i), using
/// d(uw)/dx = du/dx + u dw/dx, dx/dx = 1, d(x^-1)/dx = -x^-1.
inline Matrix fox_jacobian(const GroupRep& rho) {
    const std::size_t n = rho.dim();
    const std::size_t gens = rho.group.generators.size();
    const Field f = rho.field();
    Matrix J(n * rho.group.relators.size(), n * gens, f);
    for (std::size_t r = 0; r < rho.group.relators.size(); ++r) {
        Matrix prefix = Matrix::identity(n, f);
        for (const auto& l : rho.group.relators[r]) {
            const Matrix block = l.exponent > 0 ? prefix : prefix * rho.inverses[l.generator] * Scalar(f, -1);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) J(r * n + a, l.generator * n + b) += block(a, b);
            prefix = prefix * (l.exponent > 0 ? rho.images[l.generator] : rho.inverses[l.generator]);
        }
    }
    return J;
}

struct TwistedCohomology {
    std::size_t b0 = 0, b1 = 0, b2 = 0;
    std::size_t dim_cocycles = 0;    // dim Z^1
    std::size_t dim_coboundaries = 0;  // dim B^1
};

/// Cohomology of V -> V^{#gens} -> V^{#relators} with D0 v = ((rho(x_i) - 1) v)_i
/// and D1 the evaluated Fox Jacobian.
inline TwistedCohomology twisted_cohomology(const GroupRep& rho) {
    if (!rep_check(rho)) throw PreconditionError("twisted_cohomology: relators do not evaluate to the identity");
    const std::size_t n = rho.dim();
    const std::size_t gens = rho.group.generators.size();
    const Field f = rho.field();
    Matrix D0(n * gens, n, f);
    const Matrix id = Matrix::identity(n, f);
    for (std::size_t i = 0; i < gens; ++i) {
        const Matrix m = rho.images[i] - id;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) D0(i * n + a, b) = m(a, b);
    }
    const Matrix D1 = fox_jacobian(rho);
    if (!(D1 * D0).is_zero()) throw std::logic_error("Fox identity D1 D0 = 0 failed");
    const std::size_t r0 = rank(D0);
    const std::size_t r1 = rank(D1);
    TwistedCohomology h;
    h.b0 = n - r0;
    h.dim_cocycles = n * gens - r1;
    h.dim_coboundaries = r0;
    h.b1 = h.dim_cocycles - r0;
    h.b2 = n * rho.group.relators.size() - r1;
    return h;
}

/// b_i >= depth; degree 2 only for presentations declared aspherical.
inline bool cv_membership(const GroupRep& rho, int i, std::size_t depth) {
    if (i < 0 || i > 2) throw InputError("characteristic varieties are computed in degrees 0, 1, 2");
    if (i == 2 && !rho.group.aspherical) {
        throw InputError("degree 2 needs a presentation declared aspherical");
    }
    const auto h = twisted_cohomology(rho);
    const std::size_t b = i == 0 ? h.b0 : (i == 1 ? h.b1 : h.b2);
    return b >= depth;
}

/// The representation Ad o rho on the Lie algebra of the target group: sl_n for SL,
/// sol2 for Borel, gl_n for GL.
inline GroupRep adjoint_rep(const GroupRep& rho) {
    const std::size_t n = rho.dim();
    const Field f = rho.field();
    std::vector<Matrix> basis;
    switch (rho.target) {
        case RepTarget::special_linear: basis = rep_defining(build_sl(static_cast<int>(n), f)).matrices; break;
        case RepTarget::borel: basis = rep_defining(build_sol2(f)).matrices; break;
        case RepTarget::general_linear:
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    Matrix m(n, n, f);
                    m(r, c) = Scalar::one(f);
                    basis.push_back(std::move(m));
                }
            break;
    }
    std::vector<Matrix> images;
    for (std::size_t i = 0; i < rho.images.size(); ++i) {
        std::vector<Vector> cols;
        for (const auto& b : basis) cols.push_back(detail::coordinates_in(basis, rho.images[i] * b * rho.inverses[i]));
        images.push_back(Matrix::from_columns(cols, basis.size(), f));
    }
    return make_group_rep(rho.group, RepTarget::general_linear, std::move(images));
}

struct RepTangent {
    std::size_t tangent_dimension = 0;  // dim Z^1(pi, ad rho)
    std::size_t coboundaries = 0;       // dim B^1
    std::size_t h1 = 0;
};

/// Zariski tangent dimension of Hom(pi, G) at rho, read off the Fox Jacobian of Ad o rho.
inline RepTangent tangent_dimension_rep(const GroupRep& rho) {
    const auto h = twisted_cohomology(adjoint_rep(rho));
    return {h.dim_cocycles, h.dim_coboundaries, h.b1};
}

inline GroupRep to_field(const GroupRep& rho, Field f) {
    std::vector<Matrix> mats;
    for (const auto& m : rho.images) mats.push_back(m.to_field(f));
    return make_group_rep(rho.group, rho.target, std::move(mats));
}

}  // namespace jumploci
