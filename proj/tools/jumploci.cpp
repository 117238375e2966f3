// Command-line front end. Exit codes: 0 every asserted property holds,
// 1 a property or hypothesis failed, 2 malformed input or usage error.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "jumploci/brute_force.hpp"
#include "jumploci/io.hpp"
#include "jumploci/scenarios.hpp"

namespace {

using namespace jumploci;
using nlohmann::json;

struct Options {
    std::string input;
    std::string field = "q";
    bool json_output = false;
    std::uint64_t seed = ScenarioOptions{}.seed;
    unsigned jobs = 1;
    std::string model, lie, rep;
    int degree = 1;
    std::size_t depth = 1;
    bool list = false;
    std::string scenario;
};

struct Outcome {
    int code = 0;
    json report;
    std::string text;
};

json load_input(const Options& o) {
    json j = json::object();
    if (!o.input.empty()) {
        std::ifstream in(o.input);
        if (!in) throw InputError("cannot open '" + o.input + "'");
        try {
            j = json::parse(in);
        } catch (const json::parse_error& e) {
            throw InputError("'" + o.input + "' is not valid JSON: " + e.what());
        }
    }
    if (!o.model.empty()) j["cdga"] = o.model;
    if (!o.lie.empty()) j["lie"] = o.lie;
    if (!o.rep.empty()) j["rep"] = o.rep;
    return j;
}

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("input needs '") + key + "'");
    return j.at(key);
}

/// The algebra may be the whole document or sit under "cdga".
Cdga algebra_of(const json& j, Field f) {
    if (j.is_object() && j.contains("cdga")) return io::cdga_from(j.at("cdga"), f);
    if (j.is_object() && j.contains("basis")) return io::cdga_from(j, f);
    throw InputError("input needs an algebra ('cdga' or an inline basis)");
}

io::ConnectionInput connection_of(const json& j, Field f) {
    require(j, "cdga");
    require(j, "lie");
    return io::connection_input_from(j, f);
}

LieRep rep_of(const io::ConnectionInput& in) {
    if (!in.rep) throw InputError("input needs 'rep'");
    return *in.rep;
}

std::string residual_text(const Cdga& A, const LieAlgebra& g, const Matrix& res) {
    std::ostringstream out;
    for (std::size_t c = 0; c < res.rows(); ++c)
        for (std::size_t z = 0; z < res.cols(); ++z)
            if (!res(c, z).is_zero()) out << "  " << A.basis[2][c] << " (x) " << g.basis[z] << " : " << res(c, z) << "\n";
    return out.str();
}

json residual_json(const Cdga& A, const LieAlgebra& g, const Matrix& res) {
    json out = json::array();
    for (std::size_t c = 0; c < res.rows(); ++c)
        for (std::size_t z = 0; z < res.cols(); ++z)
            if (!res(c, z).is_zero()) out.push_back({{"algebra", A.basis[2][c]}, {"lie", g.basis[z]}, {"value", res(c, z).to_string()}});
    return out;
}

Outcome cmd_validate(const Options& o) {
    const Field f = io::parse_field(o.field);
    const json j = load_input(o);
    Outcome out;
    ValidationReport failures;
    if (j.contains("morphism") || j.contains("inclusion") || j.contains("source")) {
        failures = validate(io::morphism_from(j.contains("morphism") ? j.at("morphism") : j, f));
        out.report["kind"] = "morphism";
    } else {
        const Cdga A = algebra_of(j, f);
        failures = validate(A);
        out.report["kind"] = "cdga";
        out.report["name"] = A.name;
    }
    out.report["valid"] = failures.empty();
    out.report["failures"] = io::to_json(failures);
    std::ostringstream t;
    t << (failures.empty() ? "valid" : "invalid") << "\n";
    for (const auto& fl : failures) t << "  " << fl.axiom << ": " << fl.witness << "\n";
    out.text = t.str();
    out.code = failures.empty() ? 0 : 1;
    return out;
}

Outcome cmd_cohomology(const Options& o) {
    const Cdga A = algebra_of(load_input(o), io::parse_field(o.field));
    Outcome out;
    std::ostringstream t;
    json dims = json::array();
    for (int i = 0; i <= A.top_degree; ++i) {
        const auto h = cohomology(A, i);
        dims.push_back(h.dimension);
        t << "H^" << i << " = " << h.dimension << "\n";
        if (i == o.degree) {
            json reps = json::array();
            for (const auto& v : h.representatives) reps.push_back(io::to_json(v));
            out.report["representatives"] = reps;
        }
    }
    out.report["name"] = A.name;
    out.report["dimensions"] = dims;
    out.report["euler_characteristic"] = euler_characteristic(A);
    t << "chi = " << euler_characteristic(A) << "\n";
    out.text = t.str();
    return out;
}

Outcome cmd_mc_check(const Options& o) {
    const auto in = connection_of(load_input(o), io::parse_field(o.field));
    const Matrix res = mc_residual(in.algebra, in.lie, in.connection);
    Outcome out;
    out.report = {{"flat", res.is_zero()}, {"residual", residual_json(in.algebra, in.lie, res)}};
    out.text = res.is_zero() ? "flat: residual is 0\n" : "not flat: nonzero residual coordinates\n" + residual_text(in.algebra, in.lie, res);
    out.code = res.is_zero() ? 0 : 1;
    return out;
}

Outcome cmd_f1(const Options& o) {
    const auto in = connection_of(load_input(o), io::parse_field(o.field));
    const auto r = f1_membership(in.algebra, in.lie, in.connection);
    Outcome out;
    out.report = {{"member", r.member}, {"reason", r.reason}};
    if (r.witness) out.report["witness"] = {{"eta", io::to_json(r.witness->eta)}, {"x", io::to_json(r.witness->x)}};
    out.text = std::string(r.member ? "in F1" : "not in F1") + ": " + r.reason + "\n";
    out.code = r.member ? 0 : 1;
    return out;
}

Outcome cmd_pi(const Options& o) {
    const auto in = connection_of(load_input(o), io::parse_field(o.field));
    const bool member = pi_membership(in.algebra, rep_of(in), in.connection);
    Outcome out;
    out.report = {{"member", member}};
    out.text = member ? "in Pi\n" : "not in Pi\n";
    out.code = member ? 0 : 1;
    return out;
}

Outcome cmd_pullback(const Options& o) {
    const Field f = io::parse_field(o.field);
    const json j = load_input(o);
    const CdgaMorphism phi = io::morphism_from(require(j, "morphism"), f);
    const LieAlgebra g = io::lie_from(require(j, "lie"), f);
    const FlatConnection w = io::connection_from(require(j, "coeffs"), *phi.source, g);
    const FlatConnection big = pullback(phi, w);
    const bool src_flat = is_flat(*phi.source, g, w);
    const bool dst_flat = is_flat(*phi.target, g, big);
    Outcome out;
    out.report = {{"coeffs", io::to_json(big.coeffs)}, {"source_flat", src_flat}, {"pullback_flat", dst_flat}};
    out.text = big.coeffs.to_string() + "\n";
    out.code = src_flat == dst_flat ? 0 : 1;
    return out;
}

Outcome cmd_tangent(const Options& o) {
    const auto in = connection_of(load_input(o), io::parse_field(o.field));
    const std::size_t t = tangent_dimension(in.algebra, in.lie, in.connection);
    Outcome out;
    out.report = {{"tangent_dimension", t}};
    out.text = "tangent dimension " + std::to_string(t) + "\n";
    return out;
}

Outcome cmd_brute_force(const Options& o) {
    const Field f = io::parse_field(o.field);
    if (f.is_rational()) throw InputError("brute-force needs --field f3, f5 or fp:P");
    const json j = load_input(o);
    const Cdga A = io::cdga_from(require(j, "cdga"), f);
    const LieAlgebra g = io::lie_from(require(j, "lie"), f);
    const auto r = brute_force_flat(A, g, o.jobs);
    std::size_t f1 = 0;
    for (const auto& w : r.solutions) f1 += f1_membership(A, g, w).member;
    Outcome out;
    out.report = {{"field", f.name()}, {"scanned", r.scanned}, {"solutions", r.solutions.size()}, {"f1_members", f1}};
    if (o.list) {
        json sols = json::array();
        for (const auto& w : r.solutions) sols.push_back(io::to_json(w.coeffs));
        out.report["flat"] = sols;
    }
    std::ostringstream t;
    t << r.scanned << " candidates scanned\n" << r.solutions.size() << " flat connections (" << f1 << " in F1)\n";
    if (o.list)
        for (const auto& w : r.solutions) t << io::to_json(w.coeffs).dump() << "\n";
    out.text = t.str();
    return out;
}

Outcome cmd_holonomy(const Options& o) {
    const Field f = io::parse_field(o.field);
    const Cdga A = algebra_of(load_input(o), f);
    const auto P = holonomy_presentation(A);
    Outcome out;
    out.report = io::to_json(P);
    std::ostringstream t;
    t << "generators:";
    for (const auto& gname : P.generators) t << " " << gname;
    t << "\n";
    for (const auto& rel : P.relations) {
        std::string line;
        for (std::size_t k = 0; k < P.generators.size(); ++k)
            if (!rel.lin[k].is_zero()) line += " + (" + rel.lin[k].to_string() + ") " + P.generators[k];
        for (std::size_t k = 0; k < P.generators.size(); ++k)
            for (std::size_t l = k + 1; l < P.generators.size(); ++l)
                if (!rel.quad(k, l).is_zero())
                    line += " + (" + rel.quad(k, l).to_string() + ") [" + P.generators[k] + ", " + P.generators[l] + "]";
        t << (line.empty() ? " 0" : line.substr(2)) << "\n";
    }
    out.text = t.str();
    return out;
}

Outcome cmd_relation_check(const Options& o) {
    const Field f = io::parse_field(o.field);
    const json j = load_input(o);
    const LieAlgebra g = io::lie_from(require(j, "lie"), f);
    HolonomyPresentation P;
    if (j.contains("presentation")) {
        P = io::presentation_from(j.at("presentation"), f);
    } else {
        P = holonomy_presentation(algebra_of(j, f));
    }
    FlatConnection phi{io::matrix_from(require(j, "coeffs"), f, g.dim())};
    const auto values = relation_values(P, g, phi);
    Outcome out;
    json failing = json::array();
    std::ostringstream t;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (is_zero(values[i])) continue;
        failing.push_back({{"relation", i}, {"value", io::to_json(values[i])}});
        t << "  relation " << i << " -> " << to_string(values[i]) << "\n";
    }
    out.report = {{"holds", failing.empty()}, {"failing", failing}};
    out.text = (failing.empty() ? "all relations hold\n" : "relations fail:\n") + t.str();
    out.code = failing.empty() ? 0 : 1;
    return out;
}

Outcome cmd_aomoto_betti(const Options& o) {
    const auto in = connection_of(load_input(o), io::parse_field(o.field));
    const auto b = betti_numbers(build_aomoto(in.algebra, rep_of(in), in.connection));
    Outcome out;
    out.report = {{"betti", b}};
    std::ostringstream t;
    for (std::size_t i = 0; i < b.size(); ++i) t << "b" << i << " = " << b[i] << "\n";
    out.text = t.str();
    return out;
}

Outcome cmd_resonance(const Options& o) {
    const auto in = connection_of(load_input(o), io::parse_field(o.field));
    const bool member = resonance_membership(in.algebra, rep_of(in), in.connection, o.degree, o.depth);
    Outcome out;
    out.report = {{"member", member}, {"degree", o.degree}, {"depth", o.depth}};
    out.text = std::string(member ? "in" : "not in") + " R^" + std::to_string(o.degree) + "_" + std::to_string(o.depth) + "\n";
    out.code = member ? 0 : 1;
    return out;
}

Outcome cmd_depth_gap(const Options& o) {
    const Field f = io::parse_field(o.field);
    const json j = load_input(o);
    const CdgaMorphism phi = io::morphism_from(require(j, "morphism"), f);
    const LieAlgebra g = io::lie_from(require(j, "lie"), f);
    const LieRep theta = io::rep_from(require(j, "rep"), g);
    const FlatConnection w = io::connection_from(require(j, "coeffs"), *phi.source, g);
    const Vector eta = io::vector_from(require(j, "eta"), f);
    const auto r = depth_gap(phi, theta, w, eta);
    Outcome out;
    out.report = io::to_json(r);
    std::ostringstream t;
    t << "s = " << r.s << "\nr = " << r.r << "\n";
    for (const auto& [name, ok] : r.checks) t << (ok ? "  ok   " : "  FAIL ") << name << "\n";
    out.text = t.str();
    out.code = r.holds() ? 0 : 1;
    return out;
}

Outcome cmd_fox(const Options& o) {
    const GroupRep rho = io::group_rep_from(load_input(o), io::parse_field(o.field));
    if (!rep_check(rho)) throw PreconditionError("fox: relators do not evaluate to the identity");
    const auto h = twisted_cohomology(rho);
    const auto tangent = tangent_dimension_rep(rho);
    const long chi = rho.group.euler_characteristic();
    Outcome out;
    out.report = {{"jacobian", io::to_json(fox_jacobian(rho))},
                  {"betti", {h.b0, h.b1, h.b2}},
                  {"euler_characteristic", chi},
                  {"tangent_dimension", tangent.tangent_dimension}};
    std::ostringstream t;
    t << "b0 = " << h.b0 << "\nb1 = " << h.b1 << "\nb2 = " << h.b2 << "\nchi = " << chi << "\n"
      << "tangent dimension of Hom(pi, G) = " << tangent.tangent_dimension << "\n";
    if (rho.group.aspherical || o.degree < 2) {
        const bool member = cv_membership(rho, o.degree, o.depth);
        out.report["cv_member"] = member;
        t << (member ? "in" : "not in") << " V^" << o.degree << "_" << o.depth << "\n";
    }
    out.text = t.str();
    return out;
}

Outcome cmd_rep_check(const Options& o) {
    const GroupRep rho = io::group_rep_from(load_input(o), io::parse_field(o.field));
    const bool ok = rep_check(rho);
    Outcome out;
    json bad = json::array();
    const Matrix id = Matrix::identity(rho.dim(), rho.field());
    for (const auto& r : rho.group.relators)
        if (!(rho.evaluate(r) == id)) bad.push_back(format_word(r, rho.group.generators));
    out.report = {{"holds", ok}, {"failing_relators", bad}};
    out.text = ok ? "representation: all relators evaluate to the identity\n" : "relators fail: " + bad.dump() + "\n";
    out.code = ok ? 0 : 1;
    return out;
}

Outcome cmd_scenario(const Options& o) {
    Outcome out;
    ScenarioOptions so;
    so.seed = o.seed;
    so.jobs = o.jobs;
    if (o.field != "q") so.field = io::parse_field(o.field);
    if (o.scenario == "list") {
        std::ostringstream t;
        json list = json::array();
        for (const auto& s : scenario_catalog()) {
            list.push_back({{"name", s.name}, {"description", s.description}, {"parameters", s.parameters}, {"expected", s.expected}});
            t << std::left << std::setw(26) << s.name << s.description << "\n";
        }
        out.report = list;
        out.text = t.str();
        return out;
    }
    std::vector<const Scenario*> chosen;
    if (o.scenario == "all") {
        for (const auto& s : scenario_catalog()) chosen.push_back(&s);
    } else if (const Scenario* s = find_scenario(o.scenario)) {
        chosen.push_back(s);
    } else {
        throw InputError("unknown scenario '" + o.scenario + "' (try 'scenario list')");
    }
    std::ostringstream t;
    json reports = json::array();
    bool all = true;
    for (const Scenario* s : chosen) {
        const ScenarioReport r = run_scenario(*s, so);
        all = all && r.passed;
        reports.push_back(to_json(r));
        t << (r.passed ? "PASS " : "FAIL ") << r.name << "\n";
        for (const auto& fl : r.failures) t << "  failed: " << fl << "\n";
        if (chosen.size() == 1) t << r.details.dump(2) << "\n";
    }
    out.report = chosen.size() == 1 ? reports.front() : json{{"passed", all}, {"scenarios", reports}};
    out.text = t.str();
    out.code = all ? 0 : 1;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"jumploci: flat connections, resonance and holonomy on finite CDGA models"};
    app.require_subcommand(1);
    // Global flags may also follow the subcommand.
    app.fallthrough();
    Options opt;
    app.add_option("--field", opt.field, "q, f3, f5 or fp:P")->capture_default_str();
    app.add_flag("--json", opt.json_output, "print the report as JSON");
    app.add_option("--seed", opt.seed, "seed for random sampling")->capture_default_str();
    app.add_option("--jobs", opt.jobs, "brute force workers")->capture_default_str()->check(CLI::PositiveNumber);

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"validate", "check the CDGA (or morphism) axioms"},
        {"cohomology", "cohomology dimensions and representatives"},
        {"mc-check", "Maurer-Cartan residual of a connection"},
        {"f1", "membership in the rank-one locus F1"},
        {"pi", "membership in Pi(A, theta)"},
        {"pullback", "pull a connection back along a CDGA map"},
        {"tangent", "Zariski tangent dimension of the flat locus"},
        {"brute-force", "enumerate all flat connections over F_p"},
        {"holonomy", "quadratic presentation of the holonomy Lie algebra"},
        {"relation-check", "evaluate holonomy relations on an assignment"},
        {"aomoto-betti", "Betti numbers of the Aomoto complex"},
        {"resonance", "membership in R^i_r(A, theta)"},
        {"depth-gap", "compare b1 before and after pullback"},
        {"fox", "Fox Jacobian and twisted cohomology of a group rep"},
        {"rep-check", "check that a group rep satisfies the relators"},
        {"scenario", "run a named scenario, 'list' or 'all'"},
    };
    const std::map<std::string, std::function<Outcome(const Options&)>> handlers = {
        {"validate", cmd_validate},       {"cohomology", cmd_cohomology},
        {"mc-check", cmd_mc_check},       {"f1", cmd_f1},
        {"pi", cmd_pi},                   {"pullback", cmd_pullback},
        {"tangent", cmd_tangent},         {"brute-force", cmd_brute_force},
        {"holonomy", cmd_holonomy},       {"relation-check", cmd_relation_check},
        {"aomoto-betti", cmd_aomoto_betti}, {"resonance", cmd_resonance},
        {"depth-gap", cmd_depth_gap},     {"fox", cmd_fox},
        {"rep-check", cmd_rep_check},     {"scenario", cmd_scenario},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        if (name == "scenario") {
            sub->add_option("name", opt.scenario, "scenario name, 'list' or 'all'")->required();
            continue;
        }
        sub->add_option("--input,-i", opt.input, "JSON input file");
        sub->add_option("--model", opt.model, "named algebra, e.g. surface:1 or compact-curve:2*compact-curve:1");
        sub->add_option("--lie", opt.lie, "named Lie algebra: slN, sol2, abelianN");
        sub->add_option("--rep", opt.rep, "representation: defining, adjoint, trivial:M, sums with '+'");
        sub->add_option("--degree", opt.degree, "cohomological degree")->capture_default_str();
        sub->add_option("--depth", opt.depth, "depth r for jump loci")->capture_default_str();
        if (name == "brute-force") sub->add_flag("--list", opt.list, "print every flat connection");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return 2;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        const Outcome out = handlers.at(name)(opt);
        if (opt.json_output) {
            json report = out.report;
            if (report.is_object()) report["exit_code"] = out.code;
            std::cout << report.dump(2) << "\n";
        } else {
            std::cout << out.text;
        }
        return out.code;
    } catch (const PreconditionError& e) {
        if (opt.json_output) std::cout << json{{"error", "precondition"}, {"message", e.what()}, {"exit_code", 1}}.dump(2) << "\n";
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
}
