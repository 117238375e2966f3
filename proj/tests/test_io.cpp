#include <gtest/gtest.h>

#include <fstream>

#include "jumploci/io.hpp"

using namespace jumploci;
using nlohmann::json;

namespace {

json read_data(const std::string& name) {
    std::ifstream in(std::string(JUMPLOCI_DATA_DIR) + "/" + name);
    return json::parse(in);
}

}  // namespace

TEST(Io, FieldNames) {
    EXPECT_EQ(io::parse_field("q"), Field::rational());
    EXPECT_EQ(io::parse_field("f5"), Field::modular(5));
    EXPECT_EQ(io::parse_field("fp:13"), Field::modular(13));
    EXPECT_THROW(io::parse_field("fp:2"), InputError);
    EXPECT_THROW(io::parse_field("fp:x"), InputError);
    EXPECT_THROW(io::parse_field("r"), InputError);
}

TEST(Io, CdgaRoundTrip) {
    for (const char* name : {"surface:2", "compact-curve:2*compact-curve:1", "pencil:4", "torus:3:2", "open-curve:3"}) {
        const Cdga A = io::named_cdga(name, Field::rational());
        const Cdga B = io::cdga_from(io::to_json(A), Field::rational());
        EXPECT_EQ(io::to_json(A), io::to_json(B)) << name;
        EXPECT_TRUE(validate(B).empty()) << name;
    }
}

TEST(Io, ModularScalarsRoundTrip) {
    const Field f = Field::modular(5);
    const Cdga A = io::named_cdga("surface:1", f);
    const json j = io::to_json(A);
    EXPECT_EQ(io::to_json(io::cdga_from(j, f)), j);
}

TEST(Io, BadNamesAndShapes) {
    const Field q = Field::rational();
    EXPECT_THROW(io::named_cdga("klein:2", q), InputError);
    EXPECT_THROW(io::named_cdga("surface:x", q), InputError);
    EXPECT_THROW(io::named_cdga("torus:2", q), InputError);
    EXPECT_THROW(io::lie_from("so3", q), InputError);
    EXPECT_THROW(io::group_from("torus:2"), InputError);
    json bad = io::to_json(io::named_cdga("compact-curve:1", q));
    bad["diff"] = json::array({{{"deg", 1}, {"matrix", {{"1", "2"}}}}});
    EXPECT_THROW(io::cdga_from(bad, q), InputError);
    json missing = json::object();
    EXPECT_THROW(io::cdga_from(missing, q), InputError);
}

TEST(Io, LieAndRepRoundTrip) {
    const Field q = Field::rational();
    for (const char* name : {"sl2", "sl3", "sol2", "abelian2"}) {
        const LieAlgebra g = io::lie_from(json(name), q);
        const LieAlgebra h = io::lie_from(io::to_json(g), q);
        EXPECT_EQ(g.constants, h.constants) << name;
        const LieRep r = io::rep_from("defining", g);
        EXPECT_EQ(io::rep_from(io::to_json(r), g).matrices, r.matrices);
    }
    const LieAlgebra g = io::lie_from("sl2", q);
    EXPECT_EQ(io::rep_from("trivial:1+adjoint", g).dim, 4u);
    EXPECT_THROW(io::rep_from("spin", g), InputError);
    json affine = {{"dim", 2}, {"brackets", {{{"i", 0}, {"j", 1}, {"out", {{{"idx", 0}, {"coef", "1"}}}}}}}};
    EXPECT_NO_THROW(io::lie_from(affine, q));
    json broken = {{"dim", 3},
                   {"brackets",
                    {{{"i", 0}, {"j", 1}, {"out", {{{"idx", 0}, {"coef", "1"}}}}},
                     {{"i", 0}, {"j", 2}, {"out", {{{"idx", 1}, {"coef", "1"}}}}},
                     {{"i", 1}, {"j", 2}, {"out", {{{"idx", 0}, {"coef", "1"}}}}}}}};
    EXPECT_THROW(io::lie_from(broken, q), InputError);
}

TEST(Io, PresentationRoundTrip) {
    const auto P = holonomy_presentation(build_surface_model(2));
    const auto Q = io::presentation_from(io::to_json(P), Field::rational());
    EXPECT_EQ(io::to_json(P), io::to_json(Q));
}

TEST(Io, GroupRepRoundTrip) {
    const GroupRep rho = io::group_rep_from(read_data("surface_rep_g2.json"), Field::rational());
    EXPECT_TRUE(rep_check(rho));
    const GroupRep again = io::group_rep_from(io::to_json(rho), Field::rational());
    EXPECT_EQ(again.images, rho.images);
    EXPECT_EQ(io::to_json(again.group), io::to_json(rho.group));
}

TEST(Io, MorphismForms) {
    const Field q = Field::rational();
    const CdgaMorphism phi = io::morphism_from({{"inclusion", "surface"}, {"genus", 1}}, q);
    EXPECT_TRUE(validate(phi).empty());
    const CdgaMorphism psi = io::morphism_from(io::to_json(phi), q);
    EXPECT_TRUE(validate(psi).empty());
    EXPECT_EQ(psi.maps, phi.maps);
    EXPECT_THROW(io::morphism_from({{"inclusion", "diagonal"}}, q), InputError);
}

TEST(Io, SampleInputsParse) {
    const Field q = Field::rational();
    const auto in = io::connection_input_from(read_data("genus2_efe.json"), q);
    EXPECT_TRUE(is_flat(in.algebra, in.lie, in.connection));
    EXPECT_TRUE(in.rep.has_value());
    const auto witness = io::connection_input_from(read_data("sl3_witness.json"), q);
    EXPECT_TRUE(is_flat(witness.algebra, witness.lie, witness.connection));
    const auto nonflat = io::connection_input_from(read_data("nonflat.json"), q);
    EXPECT_FALSE(is_flat(nonflat.algebra, nonflat.lie, nonflat.connection));
    EXPECT_FALSE(validate(io::cdga_from(read_data("torus_corrupt.json"), q)).empty());
}
