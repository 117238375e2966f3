// Acceptance gate: one line per criterion, each at its tolerance and time bound.
// Expected values come from closed-form oracles below and from the frozen goldens.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "jumploci/scenarios.hpp"

namespace {

using namespace jumploci;
using nlohmann::json;

json golden(const std::string& name) {
    std::ifstream in(std::string(JUMPLOCI_GOLDEN_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing golden file " + name);
    return json::parse(in);
}

/// Commuting pairs in sl2(F_p): 0 commutes with all p^3 elements and every
/// nonzero element has a one-dimensional centralizer.
std::uint64_t sl2_commuting_pairs(std::uint64_t p) { return p * p * p + (p * p * p - 1) * p; }

/// Commuting pairs in sol2(F_p): [a h + b e, c h + d e] = 2(ad - bc) e.
std::uint64_t sol2_commuting_pairs(std::uint64_t p) { return p * p + (p * p - 1) * p; }

struct Outcome {
    bool ok = true;
    std::ostringstream note;

    void need(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            note << " [failed: " << what << "]";
        }
    }
};

/// Runs a scenario under a time bound (seconds; 0 = none).
ScenarioReport timed(Outcome& out, const std::string& name, double bound, const ScenarioOptions& opt = {}) {
    const ScenarioReport r = run_scenario(*find_scenario(name), opt);
    out.need(r.passed, name + ": " + (r.failures.empty() ? "" : r.failures.front()));
    if (bound > 0) out.need(r.seconds < bound, name + " exceeded " + std::to_string(bound) + " s");
    out.note << " " << name << " " << std::fixed;
    out.note.precision(2);
    out.note << r.seconds << "s";
    return r;
}

struct Criterion {
    int id;
    std::string title;
    std::function<void(Outcome&)> check;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "sl3 witness on the surface model",
         [](Outcome& o) {
             const auto r = timed(o, "sl3-witness", 1.0);
             for (const char* g : {"genus1", "genus2"}) o.need(r.details.at(g).at("coefficient_rank") == 3, "coefficient rank 3");
         }},
        {2, "g=1 brute force over F_3 and F_5",
         [](Outcome& o) {
             const json gold = golden("g1_census.json");
             ScenarioOptions f3;
             f3.field = Field::modular(3);
             const auto r3 = timed(o, "g1-bruteforce", 5.0, f3);
             o.need(r3.details.at("solutions") == sl2_commuting_pairs(3), "F_3 census matches closed form");
             o.need(r3.details.at("solutions") == gold.at("f3").at("flat"), "F_3 census matches golden");
             o.need(r3.details.at("scanned") == gold.at("f3").at("scanned"), "F_3 scanned 3^9");
             ScenarioOptions f5;
             f5.field = Field::modular(5);
             f5.jobs = std::max(2u, std::thread::hardware_concurrency());
             const auto r5 = timed(o, "g1-bruteforce", 60.0, f5);
             o.need(r5.details.at("solutions") == sl2_commuting_pairs(5), "F_5 census matches closed form");
             o.need(r5.details.at("solutions") == gold.at("f5").at("flat"), "F_5 census matches golden");
             o.need(r5.details.at("scanned") == gold.at("f5").at("scanned"), "F_5 scanned 5^9");
         }},
        {3, "holonomy correspondence",
         [](Outcome& o) {
             const auto r = timed(o, "holonomy-correspondence", 0);
             const std::size_t models = r.details.at("random").at("models");
             o.need(models >= 9, "every d = 0 builder family covered");
             o.need(r.details.at("random").at("checked") == models * 3 * 200, "200 samples per model and Lie algebra");
             o.need(r.details.at("random").at("disagreements") == 0, "no disagreements");
             o.need(r.details.at("exhaustive_f3").at("checked") == 19683, "exhaustive over F_3^9");
             o.need(r.details.at("exhaustive_f3").at("flat") == sl2_commuting_pairs(3), "exhaustive flat count");
         }},
        {4, "tangent-dimension match",
         [](Outcome& o) {
             const auto r = timed(o, "tangent-match", 1.0);
             const json gold = golden("tangent_match.json");
             o.need(r.details.at("flat_side") == gold.at("tangent_dimension"), "flat side equals golden");
             o.need(r.details.at("rep_side") == gold.at("tangent_dimension"), "rep side equals golden");
         }},
        {5, "depth gap on H(Sigma_2) (x) H(Sigma_1)",
         [](Outcome& o) {
             const auto r = timed(o, "depth-gap-product", 1.0);
             const json gold = golden("depth_gap.json");
             const std::size_t s = r.details.at("s"), rr = r.details.at("r");
             o.need(s >= 1 && rr > s && rr > 1, "s >= 1, r > s, r > 1");
             o.need(r.details.at("s") == gold.at("trivial_plus_adjoint").at("s") &&
                        r.details.at("r") == gold.at("trivial_plus_adjoint").at("r"),
                    "s, r equal golden");
             o.need(r.details.at("control_trivial").at("s") == gold.at("trivial").at("s") &&
                        r.details.at("control_trivial").at("r") == gold.at("trivial").at("r"),
                    "trivial control s = 4, r = 6");
             o.need(!r.details.at("witnesses").at("eta_tensor_v").empty(), "eta (x) v exhibited");
         }},
        {6, "pencil resonance",
         [](Outcome& o) {
             const auto r = timed(o, "pencil-resonance", 1.0);
             const json gold = golden("pencil.json");
             for (const auto& k : r.details.at("m3").at("kernel_dims")) o.need(k == gold.at("kernel_dimension").at("m3"), "m = 3 kernel dim");
             for (const auto& k : r.details.at("m4").at("kernel_dims")) o.need(k == gold.at("kernel_dimension").at("m4"), "m = 4 kernel dim");
         }},
        {7, "torus model collapse over F_3",
         [](Outcome& o) {
             const auto r = timed(o, "torus-pi-equals-r11", 10.0);
             const json gold = golden("torus_census.json");
             o.need(r.details.at("sl2").at("flat") == sl2_commuting_pairs(3), "sl2 flat count matches closed form");
             o.need(r.details.at("sol2").at("flat") == sol2_commuting_pairs(3), "sol2 flat count matches closed form");
             o.need(r.details.at("sl2").at("flat") == gold.at("sl2") && r.details.at("sol2").at("flat") == gold.at("sol2"),
                    "flat counts equal golden");
         }},
        {8, "curve resonance saturation",
         [](Outcome& o) {
             const auto r = timed(o, "curve-saturation", 0);
             for (const auto& [name, v] : r.details.items()) o.need(v.at("checked") == 200, name + ": 100 samples x 2 reps");
         }},
        {9, "Pi inside R^1_1",
         [](Outcome& o) {
             const auto r = timed(o, "pi-in-r11", 0);
             o.need(r.details.at("pi_members") == 100, "100 Pi members");
         }},
        {10, "weight equivariance",
         [](Outcome& o) {
             const auto r = timed(o, "weight-equivariance", 0);
             o.need(r.details.at("scaling").at("checked") == 500, "50 samples x 10 scalars");
             o.need(r.details.at("scaling").at("nonzero_samples") == 50, "nonzero samples");
         }},
        {11, "transversality shadow",
         [](Outcome& o) {
             const auto r = timed(o, "transversality-product", 1.0);
             o.need(r.details.at("degree1_intersection") == 0, "degree-1 images meet in 0");
         }},
        {12, "Euler identities",
         [](Outcome& o) {
             const auto r = timed(o, "euler-identities", 0);
             o.need(r.details.at("aomoto").at("checked") == 50 * 12, "50 flat samples per model");
             o.need(r.details.at("fox").at("checked") == 50 * 4, "50 reps per group");
         }},
        {13, "validation suite", [](Outcome& o) { timed(o, "validation-suite", 0); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            c.check(o);
        } catch (const std::exception& e) {
            o.need(false, std::string("exception: ") + e.what());
        }
        failed += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << " AC" << c.id << " " << c.title << " |" << o.note.str() << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
