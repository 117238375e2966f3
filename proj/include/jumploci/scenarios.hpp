#pragma once

// Named end-to-end checks. Each scenario runs a fixed construction through the
// library and records every asserted property; a report passes when all hold.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "io.hpp"

namespace jumploci {

struct ScenarioOptions {
    std::uint64_t seed = 20240611;
    unsigned jobs = 1;
    std::optional<Field> field;  // only g1-bruteforce reads it
};

struct ScenarioReport {
    std::string name;
    bool passed = true;
    nlohmann::json details = nlohmann::json::object();
    std::vector<std::string> failures;
    double seconds = 0;

    void expect(bool ok, const std::string& property) {
        if (!ok) {
            passed = false;
            failures.push_back(property);
        }
    }
};

struct Scenario {
    std::string name;
    std::string description;
    std::map<std::string, std::string> parameters;
    std::string expected;
    std::function<void(const ScenarioOptions&, ScenarioReport&)> run;
};

namespace scenario_detail {

using nlohmann::json;

inline std::vector<Cdga> builder_models(Field f) {
    std::vector<Cdga> out;
    for (int g : {1, 2}) out.push_back(build_compact_curve(g, f));
    for (int n : {2, 3}) out.push_back(build_open_curve(n, f));
    for (int g : {1, 2}) out.push_back(build_surface_model(g, f));
    for (int n : {1, 2, 3}) out.push_back(build_torus_model(n, n, f));
    for (int m : {3, 4}) out.push_back(build_pencil(m, f));
    out.push_back(tensor_product(build_compact_curve(2, f), build_compact_curve(1, f)));
    return out;
}

/// Rows (E, F, F, E) on H(Sigma_2) with sl2 = <E, F, H>.
inline FlatConnection efe_connection(const Cdga& A, const LieAlgebra& sl2) {
    FlatConnection w = FlatConnection::zero(A, sl2);
    const std::size_t E = sl2.index_of("E"), F = sl2.index_of("F");
    const std::size_t rows[4] = {E, F, F, E};
    for (std::size_t k = 0; k < 4; ++k) w.coeffs(k, rows[k]) = Scalar::one(A.field);
    return w;
}

inline std::vector<Matrix> surface_rep_images(Field f) {
    const Matrix A = Matrix::from_ints({{1, 1}, {0, 1}}, f);
    const Matrix B = Matrix::from_ints({{1, 0}, {1, 1}}, f);
    return {A, B, B, A};
}

/// Product of random elementary matrices: an element of SL_n.
inline Matrix random_special(std::size_t n, Field f, std::mt19937_64& rng) {
    Matrix m = Matrix::identity(n, f);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int step = 0; step < 4 * static_cast<int>(n); ++step) {
        const std::size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        Matrix e = Matrix::identity(n, f);
        e(i, j) = random_scalar(f, rng, 2);
        m = m * e;
    }
    return m;
}

/// Random representation satisfying the relators: free groups get arbitrary
/// images, genus 1 a commuting pair (A, aA + bI), genus 2 the pattern (A, B, B, A).
inline GroupRep random_group_rep(const FpGroup& G, std::size_t n, Field f, std::mt19937_64& rng) {
    const std::size_t gens = G.generators.size();
    std::vector<Matrix> images;
    if (G.relators.empty()) {
        for (std::size_t i = 0; i < gens; ++i) images.push_back(random_special(n, f, rng));
        return make_group_rep(G, RepTarget::special_linear, std::move(images));
    }
    if (gens == 2) {
        const Matrix A = random_special(n, f, rng);
        for (;;) {
            const Matrix B = A * random_scalar(f, rng) + Matrix::identity(n, f) * random_scalar(f, rng);
            if (!determinant(B).is_zero()) return make_group_rep(G, RepTarget::general_linear, {A, B});
        }
    }
    const Matrix A = random_special(n, f, rng), B = random_special(n, f, rng);
    for (std::size_t i = 0; i < gens; i += 4) {
        images.insert(images.end(), {A, B, B, A});
    }
    images.resize(gens, Matrix::identity(n, f));
    return make_group_rep(G, RepTarget::special_linear, std::move(images));
}

/// Kronecker product m (x) I_k.
inline Matrix kron_identity(const Matrix& m, std::size_t k) {
    Matrix out(m.rows() * k, m.cols() * k, m.field());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            for (std::size_t s = 0; s < k; ++s) out(r * k + s, c * k + s) = m(r, c);
    return out;
}

inline long alternating_sum(const std::vector<std::size_t>& b) {
    long s = 0;
    for (std::size_t i = 0; i < b.size(); ++i) s += (i % 2 ? -1 : 1) * static_cast<long>(b[i]);
    return s;
}

/// Every Lie-coordinate component of omega is a closed 1-element.
inline bool components_closed(const Cdga& A, const FlatConnection& w) {
    if (A.top_degree < 2) return true;
    for (std::size_t z = 0; z < w.coeffs.cols(); ++z)
        if (!is_zero(A.d(1, w.coeffs.column(z)))) return false;
    return true;
}

inline void sl3_witness(const ScenarioOptions&, ScenarioReport& rep) {
    const Field q = Field::rational();
    const LieAlgebra g = build_sl(3, q);
    for (int genus : {1, 2}) {
        const Cdga A = build_surface_model(genus, q);
        FlatConnection w = FlatConnection::zero(A, g);
        const std::size_t t = A.index_of(1, "t");
        w.coeffs(A.index_of(1, "a1"), g.root_vector(1, 2)) = Scalar::one(q);
        w.coeffs(A.index_of(1, "b1"), g.root_vector(2, 3)) = Scalar::one(q);
        w.coeffs(t, g.root_vector(1, 3)) = Scalar(q, -1);

        const Matrix res = mc_residual(A, g, w);
        const auto f1 = f1_membership(A, g, w);
        const std::size_t coeff_rank = rank(w.coeffs);
        const bool t_row = !is_zero(w.row(t));
        const CdgaMorphism inc = surface_inclusion(genus, q);
        const bool image_misses_t = is_zero(inc.in_degree(1).row(t));

        const auto pres = surface_presentations(genus, q);
        FlatConnection on_curve{Matrix(2 * static_cast<std::size_t>(genus), g.dim(), q)};
        for (std::size_t k = 0; k < on_curve.rows(); ++k) on_curve.coeffs.set_row(k, w.row(k));
        const auto cx = build_counterexample_rho(3, genus, q);
        const Vector E13 = g.basis_vector(g.root_vector(1, 3));

        const std::string key = "genus" + std::to_string(genus);
        rep.details[key] = {{"residual_zero", res.is_zero()},
                            {"f1_member", f1.member},
                            {"coefficient_rank", coeff_rank},
                            {"t_row_nonzero", t_row},
                            {"relation_check_model", relation_check(holonomy_presentation(A), g, w)},
                            {"relation_check_curve", relation_check(pres.curve, g, on_curve)},
                            {"relation_check_surface_group", relation_check(pres.surface, g, on_curve)},
                            {"rho_r", io::to_json(cx.rho_r)}};
        rep.expect(res.is_zero(), key + ": residual is exactly 0");
        rep.expect(!f1.member, key + ": omega is outside F1");
        rep.expect(coeff_rank == 3, key + ": coefficient rank is 3");
        rep.expect(t_row && image_misses_t, key + ": t-row is nonzero, so omega is not a pullback from H");
        rep.expect(relation_check(holonomy_presentation(A), g, w), key + ": relations of h(A) hold");
        rep.expect(!relation_check(pres.curve, g, on_curve), key + ": relation of h(H) fails");
        rep.expect(cx.rho_r == E13, key + ": rho(r) = E13");
    }
}

inline void g1_bruteforce(const ScenarioOptions& opt, ScenarioReport& rep) {
    const Field f = opt.field.value_or(Field::modular(3));
    if (f.is_rational()) throw InputError("g1-bruteforce needs a finite field");
    const Cdga A = build_surface_model(1, f);
    const LieAlgebra g = build_sl(2, f);
    const auto result = brute_force_flat(A, g, opt.jobs);

    // Commuting pairs enumerated separately over sl2(F_p)^2.
    const long p = static_cast<long>(f.prime());
    std::vector<Vector> elements;
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b)
            for (long c = 0; c < p; ++c) elements.push_back({Scalar(f, a), Scalar(f, b), Scalar(f, c)});
    std::size_t commuting = 0;
    for (const auto& x : elements)
        for (const auto& y : elements)
            if (is_zero(g.bracket(x, y))) ++commuting;

    const std::size_t t = A.index_of(1, "t");
    std::size_t shape_ok = 0, f1_ok = 0;
    for (const auto& w : result.solutions) {
        if (is_zero(w.row(t)) && is_zero(g.bracket(w.row(0), w.row(1)))) ++shape_ok;
        if (f1_membership(A, g, w).member) ++f1_ok;
    }
    rep.details = {{"field", f.name()},
                   {"scanned", result.scanned},
                   {"solutions", result.solutions.size()},
                   {"commuting_pairs", commuting},
                   {"f1_members", f1_ok},
                   {"jobs", opt.jobs}};
    rep.expect(result.scanned == static_cast<std::uint64_t>(p * p * p * p * p * p * p * p * p), "all p^9 candidates scanned");
    rep.expect(shape_ok == result.solutions.size(), "every flat connection is (x, y, 0) with [x, y] = 0");
    rep.expect(result.solutions.size() == commuting, "flat set has the size of the commuting-pair set");
    rep.expect(f1_ok == result.solutions.size(), "every flat connection lies in F1");
}

inline void holonomy_correspondence(const ScenarioOptions& opt, ScenarioReport& rep) {
    const Field q = Field::rational();
    std::vector<Cdga> models;
    for (int n : {1, 2, 3}) models.push_back(build_torus_model(n, n, q));
    for (int g : {1, 2}) models.push_back(build_compact_curve(g, q));
    for (int n : {2, 3}) models.push_back(build_open_curve(n, q));
    for (int g : {1, 2}) models.push_back(build_surface_model(g, q));
    const std::vector<LieAlgebra> lies = {build_sl(2, q), build_sl(3, q), build_sol2(q)};
    std::mt19937_64 rng(opt.seed);
    std::size_t checked = 0, flat = 0, disagreements = 0;
    for (const auto& A : models) {
        const auto P = holonomy_presentation(A);
        for (const auto& g : lies) {
            for (int i = 0; i < 200; ++i) {
                FlatConnection w = i % 2 == 0 ? sample_flat(A, g, rng) : random_connection(A, g, rng);
                if (i % 4 == 2 && A.dim(1) > 0) {
                    // Perturb one coefficient of a flat sample to probe near misses.
                    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, A.dim(1) - 1)(rng);
                    const std::size_t z = std::uniform_int_distribution<std::size_t>(0, g.dim() - 1)(rng);
                    w.coeffs(k, z) += Scalar::one(q);
                }
                const bool holds = relation_check(P, g, w);
                const bool is_fl = is_flat(A, g, w);
                ++checked;
                flat += is_fl;
                if (holds != is_fl) {
                    if (disagreements == 0) rep.details["first_disagreement"] = {{"model", A.name}, {"lie", g.name}};
                    ++disagreements;
                }
            }
        }
    }
    // Exhaustive over F_3 on the genus-1 surface model with sl2.
    const Field f3 = Field::modular(3);
    const Cdga A = build_surface_model(1, f3);
    const LieAlgebra g = build_sl(2, f3);
    const auto P = holonomy_presentation(A);
    std::size_t exhaustive = 0, exhaustive_bad = 0, exhaustive_flat = 0;
    FlatConnection w = FlatConnection::zero(A, g);
    const std::size_t vars = A.dim(1) * g.dim();
    std::vector<long> x(vars, 0);
    for (;;) {
        for (std::size_t v = 0; v < vars; ++v) w.coeffs(v / g.dim(), v % g.dim()) = Scalar(f3, x[v]);
        const bool is_fl = is_flat(A, g, w);
        exhaustive_flat += is_fl;
        exhaustive_bad += relation_check(P, g, w) != is_fl;
        ++exhaustive;
        std::size_t i = vars;
        while (i > 0 && ++x[i - 1] == 3) x[--i] = 0;
        if (i == 0) break;
    }
    rep.details["random"] = {{"models", models.size()}, {"checked", checked}, {"flat", flat}, {"disagreements", disagreements}};
    rep.details["exhaustive_f3"] = {{"checked", exhaustive}, {"flat", exhaustive_flat}, {"disagreements", exhaustive_bad}};
    rep.expect(disagreements == 0, "relation_check agrees with is_flat on seeded samples");
    rep.expect(exhaustive_bad == 0, "relation_check agrees with is_flat on all of F_3^9");
}

inline void tangent_match(const ScenarioOptions&, ScenarioReport& rep) {
    const Field q = Field::rational();
    const Cdga A = build_compact_curve(2, q);
    const LieAlgebra g = build_sl(2, q);
    const std::size_t flat_side = tangent_dimension(A, g, efe_connection(A, g));
    const GroupRep rho = make_group_rep(surface_group(2), RepTarget::special_linear, surface_rep_images(q));
    const auto rep_side = tangent_dimension_rep(rho);
    rep.details = {{"flat_side", flat_side},
                   {"rep_side", rep_side.tangent_dimension},
                   {"rep_h1", rep_side.h1},
                   {"rep_coboundaries", rep_side.coboundaries},
                   {"expected", 6 * 2 - 3}};
    rep.expect(rep_check(rho), "(A, B, B, A) satisfies the surface relator");
    rep.expect(flat_side == rep_side.tangent_dimension, "tangent dimensions agree");
    rep.expect(flat_side == 9, "common tangent dimension is 6g - 3 = 9");
}

inline void depth_gap_product(const ScenarioOptions&, ScenarioReport& rep) {
    const Field q = Field::rational();
    const auto factors = tensor_with_inclusions(build_compact_curve(2, q), build_compact_curve(1, q));
    const LieAlgebra g = build_sl(2, q);
    const LieRep theta = rep_direct_sum(rep_trivial(g, 1), rep_adjoint(g));
    const Cdga& S = *factors.left.source;
    const Cdga& T = *factors.left.target;
    const FlatConnection w = efe_connection(S, g);
    // First basis element of the second factor's degree-1 part.
    const Vector eta = T.basis_vector(1, S.dim(1));
    const DepthGapReport gap = depth_gap(factors.left, theta, w, eta);

    const LieRep trivial = rep_trivial(g, 1);
    const std::size_t s0 = aomoto_betti(S, trivial, w, 1);
    const std::size_t r0 = aomoto_betti(T, trivial, pullback(factors.left, w), 1);

    rep.details = io::to_json(gap);
    rep.details["control_trivial"] = {{"s", s0}, {"r", r0}};
    for (const auto& [name, ok] : gap.checks) rep.expect(ok, name);
    rep.expect(s0 == 4 && r0 == 6, "trivial control: s = 4, r = 6");
}

inline void pencil_resonance(const ScenarioOptions& opt, ScenarioReport& rep) {
    const Field q = Field::rational();
    const LieAlgebra g = build_abelian(1, q);
    const LieRep theta = rep_defining(g);
    std::mt19937_64 rng(opt.seed);
    for (int m : {3, 4}) {
        const Cdga A = build_pencil(m, q);
        std::size_t resonant = 0, generic_resonant = 0;
        std::vector<std::size_t> kernel_dims;
        auto sample = [&](bool on_hyperplane) {
            for (;;) {
                Vector lambda = A.zero(1);
                Scalar total = Scalar::zero(q);
                for (std::size_t i = 0; i + 1 < lambda.size(); ++i) total += (lambda[i] = random_scalar(q, rng));
                lambda.back() = on_hyperplane ? -total : random_scalar(q, rng);
                if (!on_hyperplane) total += lambda.back();
                if (is_zero(lambda) || (!on_hyperplane && total.is_zero())) continue;
                return rank_one(lambda, {Scalar::one(q)}, q);
            }
        };
        for (int i = 0; i < 20; ++i) {
            const FlatConnection w = sample(true);
            const AomotoComplex C = build_aomoto(A, theta, w);
            resonant += betti(C, 1) >= 1;
            kernel_dims.push_back(C.differentials[1].cols() - rank(C.differentials[1]));
        }
        for (int i = 0; i < 20; ++i) generic_resonant += resonance_membership(A, theta, sample(false), 1, 1);
        const std::string key = "m" + std::to_string(m);
        rep.details[key] = {{"resonant_on_hyperplane", resonant},
                            {"resonant_off_hyperplane", generic_resonant},
                            {"kernel_dims", kernel_dims}};
        rep.expect(resonant == 20, key + ": every sum-zero lambda is in R^1_1");
        rep.expect(generic_resonant == 0, key + ": no generic lambda is in R^1_1");
        if (m == 3) {
            bool all_two = true;
            for (auto k : kernel_dims) all_two = all_two && k == 2;
            rep.expect(all_two, key + ": kernel dimension is 2");
        }
    }
}

inline void torus_pi_equals_r11(const ScenarioOptions& opt, ScenarioReport& rep) {
    const Field f3 = Field::modular(3);
    const Cdga A = build_torus_model(2, 2, f3);
    for (const LieAlgebra& g : {build_sl(2, f3), build_sol2(f3)}) {
        const auto flat = brute_force_flat(A, g, opt.jobs);
        std::size_t f1 = 0;
        std::map<std::string, std::size_t> mismatches, pi_count;
        const std::vector<std::pair<std::string, LieRep>> reps = {{"defining", rep_defining(g)}, {"adjoint", rep_adjoint(g)}};
        for (const auto& w : flat.solutions) {
            f1 += f1_membership(A, g, w).member;
            for (const auto& [name, theta] : reps) {
                const bool pi = pi_membership(A, theta, w);
                pi_count[name] += pi;
                mismatches[name] += pi != resonance_membership(A, theta, w, 1, 1);
            }
        }
        rep.details[g.name] = {{"flat", flat.solutions.size()}, {"f1", f1}, {"pi", pi_count}, {"mismatches", mismatches}};
        rep.expect(f1 == flat.solutions.size(), g.name + ": every flat connection lies in F1");
        for (const auto& [name, bad] : mismatches) rep.expect(bad == 0, g.name + "/" + name + ": R^1_1 equals Pi pointwise");
    }
}

inline void curve_saturation(const ScenarioOptions& opt, ScenarioReport& rep) {
    const Field q = Field::rational();
    const LieAlgebra g = build_sl(2, q);
    const std::vector<LieRep> reps = {rep_defining(g), rep_adjoint(g)};
    std::mt19937_64 rng(opt.seed);
    for (const Cdga& A : {build_open_curve(3, q), build_compact_curve(2, q)}) {
        std::size_t ok = 0, total = 0, min_b1 = SIZE_MAX;
        for (int i = 0; i < 100; ++i) {
            const FlatConnection w = sample_flat(A, g, rng);
            for (const auto& theta : reps) {
                const std::size_t b1 = aomoto_betti(A, theta, w, 1);
                min_b1 = std::min(min_b1, b1);
                ok += b1 >= 1;
                ++total;
            }
        }
        rep.details[A.name] = {{"checked", total}, {"b1_positive", ok}, {"min_b1", min_b1}};
        rep.expect(ok == total, A.name + ": every flat connection has b1 >= 1");
    }
}

inline void pi_in_r11(const ScenarioOptions& opt, ScenarioReport& rep) {
    const Field q = Field::rational();
    const LieAlgebra g = build_sl(2, q);
    const std::vector<LieRep> reps = {rep_defining(g), rep_adjoint(g)};
    std::vector<Cdga> models;
    for (auto& A : builder_models(q))
        if (cohomology(A, 1).dimension > 0) models.push_back(std::move(A));
    std::mt19937_64 rng(opt.seed);
    std::size_t members = 0, resonant = 0;
    for (int i = 0; i < 100; ++i) {
        const Cdga& A = models[static_cast<std::size_t>(i) % models.size()];
        const LieRep& theta = reps[static_cast<std::size_t>(i) % 2];
        Vector eta = random_closed(A, rng);
        while (is_zero(eta)) eta = random_closed(A, rng);
        // Nilpotent x = aE + bF + cH with c^2 + ab = 0, so det theta(x) = 0.
        Scalar a = random_scalar(q, rng);
        while (a.is_zero()) a = random_scalar(q, rng);
        const Scalar c = random_scalar(q, rng);
        Vector x = g.zero();
        x[g.index_of("E")] = a;
        x[g.index_of("F")] = -(c * c) / a;
        x[g.index_of("H")] = c;
        const FlatConnection w = rank_one(eta, x, q);
        members += pi_membership(A, theta, w);
        resonant += aomoto_betti(A, theta, w, 1) >= 1;
    }
    rep.details = {{"models", models.size()}, {"samples", 100}, {"pi_members", members}, {"b1_positive", resonant}};
    rep.expect(members == 100, "every sample lies in Pi");
    rep.expect(resonant == 100, "every Pi member has b1 >= 1");
}

inline void weight_equivariance(const ScenarioOptions& opt, ScenarioReport& rep) {
    const Field q = Field::rational();
    const LieAlgebra g = build_sl(2, q);
    std::mt19937_64 rng(opt.seed);
    const std::vector<Scalar> scales = {Scalar(q, 2),        Scalar(q, -1),         Scalar(q, 3),          Scalar::rational(1, 2),
                                        Scalar(q, -5),       Scalar::rational(-2, 3), Scalar(q, 7),         Scalar::rational(3, 4),
                                        Scalar(q, 11),       Scalar::rational(-1, 6)};
    std::size_t scaled_flat = 0, scaled_total = 0, nontrivial = 0;
    for (int i = 0; i < 50; ++i) {
        const Cdga A = build_surface_model(1 + i % 2, q);
        const FlatConnection w = sample_flat(A, g, rng);
        nontrivial += !w.is_zero();
        for (const auto& s : scales) {
            scaled_flat += is_flat(A, g, weight_scale(A, w, s));
            ++scaled_total;
        }
    }
    rep.details["scaling"] = {{"checked", scaled_total}, {"flat", scaled_flat}, {"nonzero_samples", nontrivial}};
    rep.expect(scaled_flat == scaled_total, "weight scaling preserves flatness");

    auto weight_one_zero = [](const Cdga& A, const FlatConnection& w) {
        for (std::size_t k = 0; k < w.rows(); ++k)
            if (A.weight(1, k) == 1 && !is_zero(w.row(k))) return false;
        return true;
    };
    // Exhaustive over F_3, genus 1.
    const Field f3 = Field::modular(3);
    const Cdga A3 = build_surface_model(1, f3);
    const auto flat = brute_force_flat(A3, build_sl(2, f3), opt.jobs);
    std::size_t pure = 0, closed = 0;
    for (const auto& w : flat.solutions) {
        if (!weight_one_zero(A3, w)) continue;
        ++pure;
        closed += components_closed(A3, w);
    }
    // Rational samples supported on weight 2.
    std::size_t q_flat = 0, q_closed = 0;
    for (int i = 0; i < 100; ++i) {
        const Cdga A = build_surface_model(1 + i % 2, q);
        FlatConnection w = FlatConnection::zero(A, g);
        if (i % 4 != 0)
            for (std::size_t k = 0; k < w.rows(); ++k)
                if (A.weight(1, k) == 2)
                    for (std::size_t z = 0; z < g.dim(); ++z) w.coeffs(k, z) = random_scalar(q, rng);
        if (!is_flat(A, g, w)) continue;
        ++q_flat;
        q_closed += components_closed(A, w);
    }
    rep.details["weight_two_only"] = {{"f3_flat", pure}, {"f3_closed", closed}, {"q_flat", q_flat}, {"q_closed", q_closed}};
    rep.expect(pure == closed, "over F_3 every flat omega with zero weight-1 part is closed");
    rep.expect(q_flat == q_closed, "over Q every flat omega with zero weight-1 part is closed");
}

inline void transversality_product(const ScenarioOptions&, ScenarioReport& rep) {
    const Field q = Field::rational();
    const auto factors = tensor_with_inclusions(build_compact_curve(2, q), build_compact_curve(1, q));
    const std::size_t degree1 = intersection_dimension(factors.left.in_degree(1), factors.right.in_degree(1));
    rep.details["degree1_intersection"] = degree1;
    rep.expect(degree1 == 0, "images of the two inclusions meet in 0 in degree 1");
    for (const LieAlgebra& g : {build_sl(2, q), build_sl(3, q), build_sol2(q)}) {
        const Matrix left = kron_identity(factors.left.in_degree(1), g.dim());
        const Matrix right = kron_identity(factors.right.in_degree(1), g.dim());
        const std::size_t common = intersection_dimension(left, right);
        rep.details["coefficient_intersection"][g.name] = common;
        rep.expect(common == 0, g.name + ": pullback coefficient spaces meet in 0");
        // Both pullbacks of flat connections are flat; their only common value is 0.
        const FlatConnection zero = FlatConnection::zero(*factors.left.source, g);
        rep.expect(is_flat(*factors.left.target, g, pullback(factors.left, zero)), g.name + ": 0 is a common flat pullback");
    }
}

inline void euler_identities(const ScenarioOptions& opt, ScenarioReport& rep) {
    const Field q = Field::rational();
    const LieAlgebra g = build_sl(2, q);
    const std::vector<LieRep> reps = {rep_defining(g), rep_adjoint(g)};
    std::mt19937_64 rng(opt.seed);
    std::size_t aomoto_ok = 0, aomoto_total = 0;
    for (const auto& A : builder_models(q)) {
        const long chi = euler_characteristic(A);
        for (int i = 0; i < 50; ++i) {
            const LieRep& theta = reps[static_cast<std::size_t>(i) % 2];
            const auto b = betti_numbers(build_aomoto(A, theta, sample_flat(A, g, rng)));
            aomoto_ok += alternating_sum(b) == chi * static_cast<long>(theta.dim);
            ++aomoto_total;
        }
    }
    std::size_t fox_ok = 0, fox_total = 0;
    const std::vector<FpGroup> groups = {free_group(2), free_group(3), surface_group(1), surface_group(2)};
    for (const auto& G : groups) {
        for (int i = 0; i < 50; ++i) {
            const std::size_t n = 2 + static_cast<std::size_t>(i % 2);
            const auto h = twisted_cohomology(random_group_rep(G, n, q, rng));
            const long lhs = static_cast<long>(h.b0) - static_cast<long>(h.b1) + static_cast<long>(h.b2);
            fox_ok += lhs == G.euler_characteristic() * static_cast<long>(n);
            ++fox_total;
        }
    }
    rep.details = {{"aomoto", {{"checked", aomoto_total}, {"holds", aomoto_ok}}}, {"fox", {{"checked", fox_total}, {"holds", fox_ok}}}};
    rep.expect(aomoto_ok == aomoto_total, "Aomoto-Betti alternating sum equals chi(A) dim V");
    rep.expect(fox_ok == fox_total, "Fox-calculus alternating sum equals chi dim V");
}

inline void validation_suite(const ScenarioOptions& opt, ScenarioReport& rep) {
    const Field q = Field::rational();
    std::vector<Cdga> models = builder_models(q);
    for (auto& A : builder_models(Field::modular(5))) models.push_back(std::move(A));
    models.push_back(build_os_arrangement({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}, q));
    models.push_back(tensor_product(build_open_curve(2, q), build_surface_model(1, q)));
    std::size_t valid = 0;
    for (const auto& A : models) {
        const auto failures = validate(A);
        valid += failures.empty();
        if (!failures.empty()) rep.details["invalid"].push_back({{"model", A.name}, {"axiom", failures.front().axiom}});
    }
    rep.expect(valid == models.size(), "every builder passes validate");
    std::size_t morphisms_ok = 0;
    const auto t = tensor_with_inclusions(build_compact_curve(2, q), build_compact_curve(1, q));
    for (const auto& phi : {surface_inclusion(1, q), surface_inclusion(2, q), t.left, t.right}) morphisms_ok += validate(phi).empty();
    rep.expect(morphisms_ok == 4, "builder morphisms are CDGA maps");

    std::size_t rep_count = 0, rep_ok = 0;
    std::vector<LieAlgebra> lies;
    for (int n : {2, 3, 4}) lies.push_back(build_sl(n, q));
    lies.push_back(build_sol2(q));
    lies.push_back(build_abelian(2, q));
    lies.push_back(build_sl(2, Field::modular(3)));
    for (const auto& g : lies) {
        rep_ok += check_lie_axioms(g).empty();
        for (const auto& r : {rep_defining(g), rep_adjoint(g), rep_trivial(g, 2), rep_direct_sum(rep_defining(g), rep_adjoint(g))}) {
            rep_ok += bracket_failures(r).empty();
            ++rep_count;
        }
    }
    rep.expect(rep_ok == rep_count + lies.size(), "Lie algebras and rep builders satisfy their axioms");

    std::mt19937_64 rng(opt.seed);
    const LieAlgebra sl2 = build_sl(2, q);
    const LieRep adj = rep_adjoint(sl2);
    std::size_t squares = 0, square_ok = 0;
    for (const auto& A : builder_models(q)) {
        for (int i = 0; i < 10; ++i) {
            const AomotoComplex C = build_aomoto(A, adj, sample_flat(A, sl2, rng));
            for (std::size_t k = 0; k + 1 < C.differentials.size(); ++k) {
                square_ok += (C.differentials[k + 1] * C.differentials[k]).is_zero();
                ++squares;
            }
        }
    }
    rep.expect(square_ok == squares, "d_omega squared vanishes on every flat sample");

    std::size_t fox = 0, fox_ok = 0;
    for (const auto& G : {free_group(2), surface_group(1), surface_group(2)}) {
        for (int i = 0; i < 10; ++i) {
            const GroupRep rho = random_group_rep(G, 2, q, rng);
            const std::size_t n = rho.dim();
            Matrix D0(n * G.generators.size(), n, q);
            for (std::size_t k = 0; k < G.generators.size(); ++k) {
                const Matrix m = rho.images[k] - Matrix::identity(n, q);
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b) D0(k * n + a, b) = m(a, b);
            }
            fox_ok += (fox_jacobian(rho) * D0).is_zero();
            ++fox;
        }
    }
    rep.expect(fox_ok == fox, "Fox identity D1 D0 = 0 on every rep sample");
    rep.details["counts"] = {{"models", models.size()},
                             {"valid_models", valid},
                             {"reps", rep_count},
                             {"aomoto_squares", squares},
                             {"fox_samples", fox}};
}

}  // namespace scenario_detail

inline const std::vector<Scenario>& scenario_catalog() {
    namespace sd = scenario_detail;
    static const std::vector<Scenario> catalog = {
        {"sl3-witness", "flat sl3 connection on the surface model that is neither rank one nor a pullback",
         {{"genus", "1,2"}, {"lie", "sl3"}}, "residual 0, rank 3, h(A) relations hold, h(H) relation fails", sd::sl3_witness},
        {"g1-bruteforce", "exhaustive flat sl2 connections on the genus-1 surface model over F_p",
         {{"field", "f3"}, {"lie", "sl2"}}, "flat set = commuting pairs with zero t-row, all in F1", sd::g1_bruteforce},
        {"holonomy-correspondence", "relation_check agrees with is_flat on random and exhaustive connections",
         {{"samples", "200"}, {"lie", "sl2,sl3,sol2"}}, "zero disagreements", sd::holonomy_correspondence},
        {"tangent-match", "tangent dimensions at (E,F,F,E) on H(Sigma_2) and at (A,B,B,A) in Hom(pi_1, SL2)",
         {{"genus", "2"}}, "both equal 9", sd::tangent_match},
        {"depth-gap-product", "first Aomoto-Betti numbers before and after pulling back to H(Sigma_2) (x) H(Sigma_1)",
         {{"rep", "trivial:1+adjoint"}}, "s >= 1, r > s, r > 1; trivial control s = 4, r = 6", sd::depth_gap_product},
        {"pencil-resonance", "resonance of rank-one connections on pencils of 3 and 4 lines",
         {{"samples", "20"}, {"m", "3,4"}}, "sum-zero lambdas resonate, generic ones do not; kernel dim 2 for m = 3",
         sd::pencil_resonance},
        {"torus-pi-equals-r11", "exhaustive F_3 comparison of Pi and R^1_1 on the 2-torus model",
         {{"field", "f3"}, {"lie", "sl2,sol2"}}, "flat = F1 and Pi = R^1_1 pointwise", sd::torus_pi_equals_r11},
        {"curve-saturation", "every flat connection on a curve model is resonant",
         {{"samples", "100"}, {"models", "open-curve:3,compact-curve:2"}}, "b1 >= 1 throughout", sd::curve_saturation},
        {"pi-in-r11", "nilpotent rank-one connections lie in R^1_1", {{"samples", "100"}}, "b1 >= 1 throughout", sd::pi_in_r11},
        {"weight-equivariance", "weight scaling preserves flatness; weight-2 flat connections are closed",
         {{"samples", "50"}, {"scales", "10"}}, "all scaled samples flat; all weight-2 flat samples closed", sd::weight_equivariance},
        {"transversality-product", "pullbacks along the two factor inclusions of H(Sigma_2) (x) H(Sigma_1) meet only in 0",
         {{"lie", "sl2,sl3,sol2"}}, "intersection dimension 0", sd::transversality_product},
        {"euler-identities", "alternating sums of Aomoto-Betti and Fox-calculus Betti numbers",
         {{"samples", "50"}}, "sum (-1)^i b_i = chi dim V", sd::euler_identities},
        {"validation-suite", "builders, reps, d_omega^2 and the Fox identity", {}, "no axiom failures", sd::validation_suite},
    };
    return catalog;
}

inline const Scenario* find_scenario(const std::string& name) {
    for (const auto& s : scenario_catalog())
        if (s.name == name) return &s;
    return nullptr;
}

/// Hypothesis failures become report failures; malformed input propagates.
inline ScenarioReport run_scenario(const Scenario& s, const ScenarioOptions& opt) {
    ScenarioReport rep;
    rep.name = s.name;
    const auto start = std::chrono::steady_clock::now();
    try {
        s.run(opt, rep);
    } catch (const PreconditionError& e) {
        rep.expect(false, e.what());
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

inline nlohmann::json to_json(const ScenarioReport& r) {
    return {{"name", r.name}, {"passed", r.passed}, {"failures", r.failures}, {"seconds", r.seconds}, {"details", r.details}};
}

}  // namespace jumploci
