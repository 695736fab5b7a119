#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "helpers.hpp"
#include "qgw/io.hpp"

using namespace qgw;
using namespace qgw::test;

namespace {

const std::string kData = QGW_TEST_DATA;

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("qgw_test_" + name)).string();
}

void expect_identical(const QuantumGroup& a, const QuantumGroup& b) {
    EXPECT_EQ(a.shape, b.shape);
    EXPECT_EQ(a.delta.matrix(), b.delta.matrix());
    EXPECT_EQ(a.antipode.matrix(), b.antipode.matrix());
    EXPECT_EQ(a.counit.coeffs(), b.counit.coeffs());
    EXPECT_EQ(a.haar.weights(), b.haar.weights());
    EXPECT_EQ(a.label, b.label);
}

} // namespace

TEST(Descriptor, RoundTripIsBitExact) {
    for (const std::string spec : {"kp", "sekine:3", "dual:sym:3", "zn:6"}) {
        SCOPED_TRACE(spec);
        const ResolvedGroup g = resolve_group(spec);
        const std::string text = descriptor_to_json(g.quantum_group(), g.irreps).dump();
        const LoadedDescriptor back = descriptor_from_json(json::parse(text));
        expect_identical(back.group, g.quantum_group());
        ASSERT_TRUE(back.irreps.has_value());
        EXPECT_TRUE(check_irreps(back.group, *back.irreps).accepted());
        EXPECT_TRUE(verify(back.group).accepted());
    }
}

TEST(Descriptor, SekineExportMatchesExplicitDelta) {
    const std::string path = temp_path("sekine3.json");
    write_text_file(path, descriptor_to_json(sekine(3)).dump());
    const ResolvedGroup g = resolve_group("file:" + path);
    EXPECT_LE(max_abs(Mat(g.quantum_group().delta.matrix() - sekine_delta_explicit(3).matrix())), 1e-9);
    std::filesystem::remove(path);
}

TEST(Descriptor, MalformedInputs) {
    json j = descriptor_to_json(kac_paljutkin().group);
    j["delta"].push_back({1000, 0, 1.0, 0.0});
    EXPECT_THROW(descriptor_from_json(j), StructuralError);
    json k = descriptor_to_json(kac_paljutkin().group);
    k.erase("counit");
    EXPECT_THROW(descriptor_from_json(k), ValidationError);
    json h = descriptor_to_json(kac_paljutkin().group);
    h["haar_weights"] = {0.5, 0.5, 0.5, 0.5, 0.5};
    EXPECT_THROW(descriptor_from_json(h), ValidationError);
}

TEST(Cayley, FileFormats) {
    const CayleyTable z4 = cayley_from_json(read_json_file(kData + "/z4_cayley.json"));
    EXPECT_EQ(z4.order, 4);
    EXPECT_TRUE(z4.is_abelian());
    EXPECT_EQ(cayley_from_json(cayley_to_json(quaternion_group())).product, quaternion_group().product);
    EXPECT_THROW(cayley_from_json(read_json_file(kData + "/bad_cayley.json")), ValidationError);
    EXPECT_THROW(resolve_group("f:cayley:" + kData + "/bad_cayley.json"), ValidationError);
}

TEST(Irreps, UserTableForS3) {
    const ResolvedGroup g = resolve_group("f:sym:3");
    EXPECT_FALSE(g.irreps.has_value());
    EXPECT_THROW(resolve_irreps(g, std::nullopt), UnsupportedError);
    const IrrepTable t = resolve_irreps(g, kData + "/s3_irreps.json");
    EXPECT_EQ(t.sum_dim_squared(), 6);
    const IrrepTable again = irreps_from_json(irreps_to_json(t), g.quantum_group().shape);
    EXPECT_EQ(again.irreps.size(), 3u);
    EXPECT_EQ(again.irreps[2].elements[3].coeffs(), t.irreps[2].elements[3].coeffs());
}

TEST(GroupSpec, Resolution) {
    EXPECT_EQ(resolve_group("kp").quantum_group().dim(), 8);
    EXPECT_EQ(resolve_group("sekine:4").quantum_group().dim(), 32);
    EXPECT_FALSE(resolve_group("sekine:4").irreps.has_value());
    EXPECT_THROW(resolve_irreps(resolve_group("sekine:4"), std::nullopt), UnsupportedError);
    EXPECT_EQ(resolve_group("cube:3").quantum_group().dim(), 8);
    EXPECT_EQ(resolve_group("f:dihedral:4").quantum_group().dim(), 8);
    EXPECT_EQ(resolve_group("dual:quaternion").quantum_group().dim(), 8);
    EXPECT_FALSE(resolve_group("sweedler").group.has_value());
    EXPECT_THROW(resolve_group("sweedler").quantum_group(), SpecError);
    EXPECT_THROW(resolve_group("nope"), SpecError);
    EXPECT_THROW(resolve_group("zn:x"), SpecError);
    EXPECT_THROW(resolve_group("file:/nonexistent/descriptor.json"), SpecError);
}

TEST(StateSpec, Presets) {
    const ResolvedGroup kp = resolve_group("kp");
    EXPECT_LE(max_diff(resolve_state("preset:e2", kp, 1), kp_e2()), 0.0);
    EXPECT_LE(max_diff(resolve_state("preset:example1", kp, 1), kp_example1()), 0.0);
    EXPECT_LE(max_diff(resolve_state("preset:example2", kp, 1), kp_example2()), 0.0);
    EXPECT_LE(max_diff(resolve_state("preset:pal", kp, 1), kp_pal()), 0.0);
    EXPECT_LE(max_diff(resolve_state("kp:mu=0/0/0.25/0.25/0.5,x=1", kp, 1), kp_example2()), 0.0);
    EXPECT_LE(max_diff(resolve_state("counit", kp, 1), kp.quantum_group().counit), 0.0);
    EXPECT_THROW(resolve_state("preset:sekine-walk", kp, 1), SpecError);
    EXPECT_THROW(resolve_state("kp:mu=1/0/0/0", kp, 1), SpecError);
    EXPECT_THROW(resolve_state("kp:w=1", kp, 1), SpecError);
    EXPECT_THROW(resolve_state("bogus", kp, 1), SpecError);
}

TEST(StateSpec, SekineAndClassical) {
    const ResolvedGroup k5 = resolve_group("sekine:5");
    const Functional walk = resolve_state("sekine:x0_1=0.25,x1_0=0.25,A1_1=0.25,A1_2=0.25,A2_1=0.25,A2_2=0.25", k5, 1);
    EXPECT_LE(max_diff(walk, sekine_walk_state(5)), 1e-16);
    EXPECT_LE(max_diff(resolve_state("preset:sekine-walk", k5, 1), sekine_walk_state(5)), 0.0);
    EXPECT_THROW(resolve_state("sekine:A1_2=0.5,A2_1=0.5", k5, 1), ValidationError);
    const ResolvedGroup z5 = resolve_group("zn:5");
    const Functional c = resolve_state("classical:1=0.5,4=0.5", z5, 1);
    EXPECT_LE(max_diff(c, zn_simple_state(z5.quantum_group())), 0.0);
    EXPECT_THROW(resolve_state("classical:9=1", z5, 1), SpecError);
    EXPECT_THROW(resolve_state("classical:0=1", resolve_group("kp"), 1), SpecError);
    const ResolvedGroup s4 = resolve_group("dual:sym:4");
    EXPECT_TRUE(is_state(resolve_state("preset:perm", s4, 1), s4.quantum_group()).valid);
}

TEST(StateSpec, RandomIsSeeded) {
    const ResolvedGroup kp = resolve_group("kp");
    EXPECT_EQ(resolve_state("random", kp, 42).coeffs(), resolve_state("random", kp, 42).coeffs());
    EXPECT_NE(resolve_state("random", kp, 42).coeffs(), resolve_state("random", kp, 43).coeffs());
}

TEST(Csv, SeventeenDigitsAndDeterminism) {
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
    const ResolvedGroup kp = resolve_group("kp");
    auto render = [&] {
        const BoundSeries s = run_experiment(kp.quantum_group(), *kp.irreps, resolve_state("random", kp, 7), 5);
        std::ostringstream out;
        write_csv(s, out);
        return out.str();
    };
    const std::string a = render();
    EXPECT_EQ(a, render());
    EXPECT_EQ(a.substr(0, a.find('\n')), "k,tv,l2,sep,ubl,lbl,rho_a,rho_b,rho_c,rho");
}

TEST(Csv, CyclicWalkBelowClosedBound) {
    const ResolvedGroup z9 = resolve_group("zn:9");
    const BoundSeries s = run_experiment(z9.quantum_group(), *z9.irreps, resolve_state("simple", z9, 1), 30);
    for (const BoundRow& r : s.rows)
        if (r.k >= 3) EXPECT_LE(*r.exact_tv, std::exp(-kPi * kPi * r.k / 162.0)) << r.k;
}

TEST(Csv, SecondExampleLowerColumnDominatesPathOracle) {
    const ResolvedGroup kp = resolve_group("kp");
    const BoundSeries s = run_experiment(kp.quantum_group(), *kp.irreps, resolve_state("preset:example2", kp, 1), 12);
    for (const BoundRow& r : s.rows)
        EXPECT_GE(r.lbl, 0.5 * std::abs(kp_example2_path_oracle(r.k).combinatorial) - 1e-12) << r.k;
}
