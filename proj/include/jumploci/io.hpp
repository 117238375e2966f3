#pragma once

// JSON readers and writers for every file format the CLI accepts. Models and Lie
// algebras may be given inline or by name:
//   algebras:  compact-curve:G  open-curve:N  surface:G  torus:N:TOP  pencil:M
//              and X*Y for tensor products (X, Y themselves names)
//   Lie:       slN  sol2  abelianN
//   reps:      "defining", "adjoint", "trivial:M", and sums like "trivial:1+adjoint"
//   groups:    surface:G  free:N

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "aomoto.hpp"
#include "group.hpp"
#include "holonomy.hpp"
#include "models.hpp"

namespace jumploci::io {

using nlohmann::json;

inline Field parse_field(const std::string& spec) {
    if (spec == "q" || spec == "Q") return Field::rational();
    if (spec == "f3") return Field::modular(3);
    if (spec == "f5") return Field::modular(5);
    if (spec.rfind("fp:", 0) == 0) {
        try {
            return Field::modular(static_cast<std::uint32_t>(std::stoul(spec.substr(3))));
        } catch (const std::logic_error& e) {
            if (dynamic_cast<const InputError*>(&e)) throw;
            throw InputError("bad field '" + spec + "'");
        }
    }
    throw InputError("unknown field '" + spec + "' (expected q, f3, f5 or fp:P)");
}

inline json to_json(const Scalar& s) { return s.to_string(); }

inline Scalar scalar_from(const json& j, Field f) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), f);
    if (j.is_number_integer()) return Scalar(f, j.get<long>());
    throw InputError("scalar must be a string or an integer, got " + j.dump());
}

inline json to_json(const Vector& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(to_json(s));
    return out;
}

inline Vector vector_from(const json& j, Field f) {
    if (!j.is_array()) throw InputError("expected an array of scalars");
    Vector v;
    for (const auto& x : j) v.push_back(scalar_from(x, f));
    return v;
}

inline json to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
    return out;
}

/// Rows of scalars; `cols` fixes the width when there are no rows.
inline Matrix matrix_from(const json& j, Field f, std::size_t cols = 0) {
    if (!j.is_array()) throw InputError("matrix must be an array of rows");
    if (!j.empty()) cols = j.front().size();
    Matrix m(j.size(), cols, f);
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw InputError("ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from(j[i][c], f);
    }
    return m;
}

template <typename T>
T get_field(const json& j, const char* key) {
    if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw InputError(std::string("field '") + key + "' has the wrong type");
    }
}

// ---------------------------------------------------------------- algebras

inline json to_json(const Cdga& A) {
    json out;
    out["name"] = A.name;
    out["top_degree"] = A.top_degree;
    out["basis"] = A.basis;
    if (A.weights) out["weights"] = *A.weights;
    json mult = json::array();
    for (const auto& [key, v] : A.products) {
        json entries = json::array();
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (!v[k].is_zero()) entries.push_back({{"deg", key[0] + key[2]}, {"idx", k}, {"coef", to_json(v[k])}});
        }
        mult.push_back({{"i", {key[0], key[1]}}, {"j", {key[2], key[3]}}, {"out", entries}});
    }
    out["mult"] = mult;
    json diff = json::array();
    for (int i = 0; i < A.top_degree; ++i) diff.push_back({{"deg", i}, {"matrix", to_json(A.differential[static_cast<std::size_t>(i)])}});
    out["diff"] = diff;
    return out;
}

inline Cdga named_cdga(const std::string& name, Field f) {
    if (const auto star = name.find('*'); star != std::string::npos) {
        return tensor_product(named_cdga(name.substr(0, star), f), named_cdga(name.substr(star + 1), f));
    }
    const auto colon = name.find(':');
    const std::string kind = name.substr(0, colon);
    std::vector<int> args;
    try {
        std::size_t pos = colon;
        while (pos != std::string::npos) {
            const auto next = name.find(':', pos + 1);
            args.push_back(std::stoi(name.substr(pos + 1, next == std::string::npos ? std::string::npos : next - pos - 1)));
            pos = next;
        }
    } catch (const std::logic_error&) {
        throw InputError("bad algebra name '" + name + "'");
    }
    auto need = [&](std::size_t n) {
        if (args.size() != n) throw InputError("algebra '" + kind + "' takes " + std::to_string(n) + " parameter(s)");
    };
    if (kind == "compact-curve") return need(1), build_compact_curve(args[0], f);
    if (kind == "open-curve") return need(1), build_open_curve(args[0], f);
    if (kind == "surface") return need(1), build_surface_model(args[0], f);
    if (kind == "torus") return need(2), build_torus_model(args[0], args[1], f);
    if (kind == "pencil") return need(1), build_pencil(args[0], f);
    throw InputError("unknown algebra name '" + name + "'");
}

inline Cdga cdga_from(const json& j, Field f) {
    if (j.is_string()) return named_cdga(j.get<std::string>(), f);
    if (!j.is_object()) throw InputError("algebra must be a name or an object");
    if (j.contains("arrangement")) {
        std::vector<std::array<long, 3>> normals;
        for (const auto& n : j.at("arrangement")) {
            if (!n.is_array() || n.size() != 3) throw InputError("arrangement normals need three coordinates");
            normals.push_back({n[0].get<long>(), n[1].get<long>(), n[2].get<long>()});
        }
        return build_os_arrangement(normals, f);
    }
    Cdga A;
    A.name = j.value("name", std::string("inline"));
    A.field = f;
    A.top_degree = get_field<int>(j, "top_degree");
    A.basis = get_field<std::vector<std::vector<std::string>>>(j, "basis");
    if (j.contains("weights")) A.weights = get_field<std::vector<std::vector<int>>>(j, "weights");
    if (A.basis.size() != static_cast<std::size_t>(A.top_degree) + 1) {
        throw InputError("basis must list labels for every degree 0..top_degree");
    }
    for (const auto& m : j.value("mult", json::array())) {
        const auto i = get_field<std::vector<int>>(m, "i");
        const auto k = get_field<std::vector<int>>(m, "j");
        if (i.size() != 2 || k.size() != 2) throw InputError("mult entries need [deg, idx] pairs");
        const int deg = i[0] + k[0];
        if (deg > A.top_degree || i[0] < 1 || k[0] < 1) throw InputError("mult entry outside the degree range");
        Vector v = A.zero(deg);
        for (const auto& o : m.value("out", json::array())) {
            if (get_field<int>(o, "deg") != deg) throw InputError("mult output in the wrong degree");
            const auto idx = get_field<std::size_t>(o, "idx");
            if (idx >= v.size()) throw InputError("mult output index out of range");
            v[idx] += scalar_from(o.at("coef"), f);
        }
        A.products[{i[0], i[1], k[0], k[1]}] = std::move(v);
    }
    for (int i = 0; i < A.top_degree; ++i) A.differential.emplace_back(A.dim(i + 1), A.dim(i), f);
    for (const auto& d : j.value("diff", json::array())) {
        const int deg = get_field<int>(d, "deg");
        if (deg < 0 || deg >= A.top_degree) {
            if (deg == A.top_degree) continue;
            throw InputError("diff entry degree out of range");
        }
        Matrix m = matrix_from(d.at("matrix"), f, A.dim(deg));
        if (m.rows() != A.dim(deg + 1) || m.cols() != A.dim(deg)) {
            throw InputError("diff in degree " + std::to_string(deg) + " must be " + std::to_string(A.dim(deg + 1)) + "x" +
                             std::to_string(A.dim(deg)));
        }
        A.differential[static_cast<std::size_t>(deg)] = std::move(m);
    }
    A.check_shapes();
    return A;
}

inline json to_json(const ValidationReport& r) {
    json out = json::array();
    for (const auto& f : r) out.push_back({{"axiom", f.axiom}, {"witness", f.witness}});
    return out;
}

// ---------------------------------------------------------------- Lie algebras

inline json to_json(const LieAlgebra& g) {
    json brackets = json::array();
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            json out = json::array();
            for (std::size_t k = 0; k < g.dim(); ++k)
                if (!g.structure(i, j, k).is_zero()) out.push_back({{"idx", k}, {"coef", to_json(g.structure(i, j, k))}});
            if (!out.empty()) brackets.push_back({{"i", i}, {"j", j}, {"out", out}});
        }
    }
    return {{"name", g.name}, {"dim", g.dim()}, {"basis", g.basis}, {"brackets", brackets}};
}

inline LieAlgebra lie_from(const json& j, Field f) {
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        try {
            if (name == "sol2") return build_sol2(f);
            if (name.rfind("sl", 0) == 0) return build_sl(std::stoi(name.substr(2)), f);
            if (name.rfind("abelian", 0) == 0) return build_abelian(std::stoi(name.substr(7)), f);
        } catch (const std::logic_error& e) {
            if (dynamic_cast<const InputError*>(&e)) throw;
        }
        throw InputError("unknown Lie algebra '" + name + "'");
    }
    LieAlgebra g;
    g.name = j.value("name", std::string("inline"));
    g.field = f;
    const auto dim = get_field<std::size_t>(j, "dim");
    g.basis = j.contains("basis") ? get_field<std::vector<std::string>>(j, "basis") : std::vector<std::string>{};
    if (g.basis.empty())
        for (std::size_t i = 0; i < dim; ++i) g.basis.push_back("x" + std::to_string(i + 1));
    if (g.basis.size() != dim) throw InputError("Lie basis length differs from dim");
    g.constants.assign(dim * dim * dim, Scalar::zero(f));
    for (const auto& b : j.value("brackets", json::array())) {
        const auto i = get_field<std::size_t>(b, "i");
        const auto k = get_field<std::size_t>(b, "j");
        if (i >= dim || k >= dim) throw InputError("bracket index out of range");
        for (const auto& o : b.value("out", json::array())) {
            const auto idx = get_field<std::size_t>(o, "idx");
            if (idx >= dim) throw InputError("bracket output index out of range");
            const Scalar c = scalar_from(o.at("coef"), f);
            g.constants[(i * dim + k) * dim + idx] = c;
            g.constants[(k * dim + i) * dim + idx] = -c;
        }
    }
    const auto failures = check_lie_axioms(g);
    if (!failures.empty()) throw InputError("not a Lie algebra: " + failures.front().axiom + " fails on " + failures.front().witness);
    return g;
}

inline json to_json(const LieRep& r) {
    json mats = json::array();
    for (const auto& m : r.matrices) mats.push_back(to_json(m));
    return {{"lie", to_json(r.lie)}, {"dim", r.dim}, {"matrices", mats}};
}

inline LieRep rep_from(const json& j, const LieAlgebra& g) {
    if (j.is_string()) {
        const auto spec = j.get<std::string>();
        std::optional<LieRep> total;
        std::size_t start = 0;
        while (start <= spec.size()) {
            const auto plus = spec.find('+', start);
            const std::string term = spec.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
            LieRep part = [&] {
                if (term == "defining") return rep_defining(g);
                if (term == "adjoint") return rep_adjoint(g);
                if (term.rfind("trivial:", 0) == 0) {
                    try {
                        return rep_trivial(g, std::stoul(term.substr(8)));
                    } catch (const std::logic_error&) {
                    }
                }
                throw InputError("unknown representation '" + term + "'");
            }();
            total = total ? rep_direct_sum(*total, part) : part;
            if (plus == std::string::npos) break;
            start = plus + 1;
        }
        return *total;
    }
    const auto dim = get_field<std::size_t>(j, "dim");
    std::vector<Matrix> mats;
    for (const auto& m : j.at("matrices")) mats.push_back(matrix_from(m, g.field, dim));
    return make_rep(g, std::move(mats));
}

// ---------------------------------------------------------------- connections

inline json connection_to_json(const FlatConnection& w) { return to_json(w.coeffs); }

inline FlatConnection connection_from(const json& coeffs, const Cdga& A, const LieAlgebra& g) {
    FlatConnection w{matrix_from(coeffs, A.field, g.dim())};
    check_shape(A, g, w);
    return w;
}

/// {cdga, lie, coeffs} plus the optional rep.
struct ConnectionInput {
    Cdga algebra;
    LieAlgebra lie;
    FlatConnection connection;
    std::optional<LieRep> rep;
};

inline ConnectionInput connection_input_from(const json& j, Field f) {
    Cdga A = cdga_from(j.at("cdga"), f);
    LieAlgebra g = lie_from(j.at("lie"), f);
    FlatConnection w = j.contains("coeffs") ? connection_from(j.at("coeffs"), A, g) : FlatConnection::zero(A, g);
    std::optional<LieRep> rep;
    if (j.contains("rep")) rep = rep_from(j.at("rep"), g);
    return {std::move(A), std::move(g), std::move(w), std::move(rep)};
}

// ---------------------------------------------------------------- morphisms

/// {inclusion: "surface", genus} | {inclusion: "tensor-left"|"tensor-right", left, right}
/// | {source, target, maps: [{deg, matrix}]}
inline CdgaMorphism morphism_from(const json& j, Field f) {
    if (j.contains("inclusion")) {
        const auto kind = get_field<std::string>(j, "inclusion");
        if (kind == "surface") return surface_inclusion(get_field<int>(j, "genus"), f);
        if (kind == "tensor-left" || kind == "tensor-right") {
            auto t = tensor_with_inclusions(cdga_from(j.at("left"), f), cdga_from(j.at("right"), f));
            return kind == "tensor-left" ? t.left : t.right;
        }
        throw InputError("unknown inclusion '" + kind + "'");
    }
    CdgaMorphism phi;
    phi.source = std::make_shared<const Cdga>(cdga_from(j.at("source"), f));
    phi.target = std::make_shared<const Cdga>(cdga_from(j.at("target"), f));
    const int top = phi.source->top_degree;
    for (int i = 0; i <= top; ++i) phi.maps.emplace_back(phi.target->dim(i), phi.source->dim(i), f);
    phi.maps[0] = Matrix::identity(1, f);
    for (const auto& m : j.value("maps", json::array())) {
        const int deg = get_field<int>(m, "deg");
        if (deg < 0 || deg > top) throw InputError("morphism degree out of range");
        Matrix mat = matrix_from(m.at("matrix"), f, phi.source->dim(deg));
        if (mat.rows() != phi.target->dim(deg) || mat.cols() != phi.source->dim(deg)) {
            throw InputError("morphism matrix in degree " + std::to_string(deg) + " has the wrong shape");
        }
        phi.maps[static_cast<std::size_t>(deg)] = std::move(mat);
    }
    return phi;
}

inline json to_json(const CdgaMorphism& phi) {
    json maps = json::array();
    for (std::size_t i = 0; i < phi.maps.size(); ++i) maps.push_back({{"deg", i}, {"matrix", to_json(phi.maps[i])}});
    return {{"source", to_json(*phi.source)}, {"target", to_json(*phi.target)}, {"maps", maps}};
}

// ---------------------------------------------------------------- presentations

inline json to_json(const HolonomyPresentation& P) {
    json rels = json::array();
    for (const auto& r : P.relations) {
        json quad = json::array();
        for (std::size_t k = 0; k < P.generators.size(); ++k)
            for (std::size_t l = k + 1; l < P.generators.size(); ++l)
                if (!r.quad(k, l).is_zero()) quad.push_back({{"k", k}, {"l", l}, {"coef", to_json(r.quad(k, l))}});
        rels.push_back({{"lin", to_json(r.lin)}, {"quad", quad}});
    }
    return {{"generators", P.generators}, {"relations", rels}};
}

inline HolonomyPresentation presentation_from(const json& j, Field f) {
    HolonomyPresentation P;
    P.generators = get_field<std::vector<std::string>>(j, "generators");
    const std::size_t n = P.generators.size();
    for (const auto& r : j.value("relations", json::array())) {
        HolonomyPresentation::Relation rel{zero_vector(n, f), Matrix(n, n, f)};
        if (r.contains("lin")) {
            rel.lin = vector_from(r.at("lin"), f);
            if (rel.lin.size() != n) throw InputError("relation linear part has the wrong length");
        }
        for (const auto& q : r.value("quad", json::array())) {
            const auto k = get_field<std::size_t>(q, "k");
            const auto l = get_field<std::size_t>(q, "l");
            if (k >= n || l >= n || k == l) throw InputError("quadratic term index out of range");
            const Scalar c = scalar_from(q.at("coef"), f);
            rel.quad(k, l) += c;
            rel.quad(l, k) -= c;
        }
        P.relations.push_back(std::move(rel));
    }
    return P;
}

// ---------------------------------------------------------------- groups

inline json to_json(const FpGroup& G) {
    json rels = json::array();
    for (const auto& r : G.relators) rels.push_back(format_word(r, G.generators));
    return {{"generators", G.generators}, {"relators", rels}, {"aspherical", G.aspherical}};
}

inline FpGroup group_from(const json& j) {
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        try {
            if (name.rfind("surface:", 0) == 0) return surface_group(std::stoi(name.substr(8)));
            if (name.rfind("free:", 0) == 0) return free_group(std::stoi(name.substr(5)));
        } catch (const std::logic_error& e) {
            if (dynamic_cast<const InputError*>(&e)) throw;
        }
        throw InputError("unknown group '" + name + "'");
    }
    FpGroup G;
    G.generators = get_field<std::vector<std::string>>(j, "generators");
    for (const auto& r : j.value("relators", json::array())) G.relators.push_back(parse_word(r.get<std::string>(), G.generators));
    G.aspherical = j.value("aspherical", false);
    return G;
}

inline RepTarget target_from(const std::string& s) {
    if (s == "GL") return RepTarget::general_linear;
    if (s == "SL") return RepTarget::special_linear;
    if (s == "Borel") return RepTarget::borel;
    throw InputError("unknown target '" + s + "'");
}

inline json to_json(const GroupRep& rho) {
    json mats = json::array();
    for (const auto& m : rho.images) mats.push_back(to_json(m));
    return {{"group", to_json(rho.group)}, {"target", to_string(rho.target)}, {"matrices", mats}};
}

inline GroupRep group_rep_from(const json& j, Field f) {
    FpGroup G = group_from(j.at("group"));
    const RepTarget target = target_from(j.value("target", std::string("GL")));
    std::vector<Matrix> mats;
    for (const auto& m : j.at("matrices")) mats.push_back(matrix_from(m, f));
    return make_group_rep(std::move(G), target, std::move(mats));
}

// ---------------------------------------------------------------- reports

inline json to_json(const DepthGapReport& r) {
    json checks = json::array();
    for (const auto& [name, ok] : r.checks) checks.push_back({{"name", name}, {"ok", ok}});
    return {{"s", r.s},
            {"r", r.r},
            {"degree", 1},
            {"witnesses", {{"fixed_vector", to_json(r.fixed_vector)}, {"eta_tensor_v", to_json(r.eta_tensor_v)}}},
            {"checks", checks}};
}

}  // namespace jumploci::io
