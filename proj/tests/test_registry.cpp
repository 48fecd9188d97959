// Copyright (c) 2026 the larmor developers.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "larmor/registry.hpp"

using namespace larmor;
using Catch::Matchers::WithinRel;

namespace {

/// Writes `content` to a fresh file under the system temp directory and
/// returns its path. Files are tiny and overwritten per test run.
std::string write_temp(const std::string& stem, const std::string& content) {
    const auto path =
        std::filesystem::temp_directory_path() / ("larmor-" + stem + ".cfg");
    std::ofstream out(path);
    out << content;
    out.close();
    return path.string();
}

const std::string kValidRegistry =
    "# comment line\n"
    "[constants]\n"
    "c = 2.0  # trailing comment\n"
    "hbar = 3.0\n"
    "extra_scale = 1.5\n"
    "\n"
    "[particle]\n"
    "name = toy\n"
    "mass_kg = 1.5\n"
    "mdm_J_per_T = -0.7\n"
    "edm_C_m = 0.3\n"
    "\n"
    "[particle]\n"
    "name = ghost\n"
    "mass_kg = 0.0\n"
    "mdm_J_per_T = 0.0\n"
    "edm_C_m = 0.0\n";

}  // namespace

TEST_CASE("shipped registry loads with the expected content") {
    const Registry reg = load_registry(LARMOR_TEST_REGISTRY);
    REQUIRE(reg.constants.c == 299792458.0);
    REQUIRE(reg.constants.hbar == 1.054571817e-34);
    REQUIRE(reg.extra_constants.count("nuclear_magneton") == 1);

    const ParticleSpec& n = find_particle(reg, "neutron");
    REQUIRE(n.mass == 1.67492749804e-27);
    REQUIRE(n.mdm == -9.6623651e-27);
    REQUIRE(n.edm == 0.0);

    REQUIRE_THROWS_AS(find_particle(reg, "proton"), UnknownParticle);
}

TEST_CASE("preset loader resolves a name in one call") {
    const ParticleSpec n = load_particle_preset("neutron",
                                                LARMOR_TEST_REGISTRY);
    REQUIRE(n.name == "neutron");
    REQUIRE_THROWS_AS(load_particle_preset("axion", LARMOR_TEST_REGISTRY),
                      UnknownParticle);
}

TEST_CASE("rest energy of the shipped neutron") {
    const Registry reg = load_registry(LARMOR_TEST_REGISTRY);
    const ParticleSpec& n = find_particle(reg, "neutron");
    REQUIRE_THAT(rest_energy(n, reg.constants),
                 WithinRel(1.5053497628721513e-10, 1e-14));
}

TEST_CASE("natural conversion of the shipped neutron in a 1 T field") {
    const Registry reg = load_registry(LARMOR_TEST_REGISTRY);
    const ParticleSpec& n = find_particle(reg, "neutron");
    const NaturalParams np =
        to_natural(n, FieldPoint{0.0, 1.0}, 0.0, reg.constants);
    REQUIRE(np.p() == 0.0);
    REQUIRE(np.pi() == 0.0);
    REQUIRE_THAT(np.delta(), WithinRel(6.418684440195857e-17, 1e-13));
}

TEST_CASE("natural conversion is linear in momentum and fields") {
    const ParticleSpec toy{"toy", 1.5, -0.7, 0.3};
    const PhysicalConstants constants{2.0, 3.0};
    const NaturalParams np =
        to_natural(toy, FieldPoint{0.9, 1.7}, 2.2, constants);
    REQUIRE_THAT(np.p(), WithinRel(2.2 / 3.0, 1e-15));
    REQUIRE_THAT(np.pi(), WithinRel(0.1175, 1e-14));
    REQUIRE_THAT(np.delta(), WithinRel(1.46 / 6.0, 1e-14));

    const NaturalParams doubled =
        to_natural(toy, FieldPoint{1.8, 3.4}, 4.4, constants);
    REQUIRE_THAT(doubled.p(), WithinRel(2.0 * np.p(), 1e-15));
    REQUIRE_THAT(doubled.pi(), WithinRel(2.0 * np.pi(), 1e-14));
    REQUIRE_THAT(doubled.delta(), WithinRel(2.0 * np.delta(), 1e-14));
}

TEST_CASE("massless particles cannot be converted to natural units") {
    const ParticleSpec ghost{"ghost", 0.0, 0.0, 0.0};
    REQUIRE_THROWS_AS(
        to_natural(ghost, FieldPoint{0.0, 0.0}, 1.0, {1.0, 1.0}),
        MasslessConversion);
}

TEST_CASE("parser accepts comments, blanks, and spacing") {
    const Registry reg =
        load_registry(write_temp("valid", kValidRegistry));
    REQUIRE(reg.constants.c == 2.0);
    REQUIRE(reg.constants.hbar == 3.0);
    REQUIRE(reg.extra_constants.at("extra_scale") == 1.5);
    REQUIRE(reg.particles.size() == 2);
    REQUIRE(reg.particles[0].name == "toy");
    REQUIRE(reg.particles[1].mass == 0.0);

    const Registry spaced = load_registry(write_temp(
        "spaced", "[constants]\n   c   =   1.0   \n\thbar\t=\t2e0\n"));
    REQUIRE(spaced.constants.c == 1.0);
    REQUIRE(spaced.constants.hbar == 2.0);
}

TEST_CASE("parser rejects malformed files") {
    REQUIRE_THROWS_AS(load_registry("/nonexistent/registry.cfg"),
                      MalformedRegistry);
    REQUIRE_THROWS_AS(load_registry(write_temp("empty", "")),
                      MalformedRegistry);
    REQUIRE_THROWS_AS(
        load_registry(write_temp("no-constants",
                                 "[particle]\nname = x\nmass_kg = 1\n"
                                 "mdm_J_per_T = 0\nedm_C_m = 0\n")),
        MalformedRegistry);
    REQUIRE_THROWS_AS(
        load_registry(write_temp("bad-c", "[constants]\nc = -1\nhbar = 1\n")),
        MalformedRegistry);
    REQUIRE_THROWS_AS(
        load_registry(write_temp("zero-hbar",
                                 "[constants]\nc = 1\nhbar = 0\n")),
        MalformedRegistry);
    REQUIRE_THROWS_AS(
        load_registry(write_temp("non-numeric",
                                 "[constants]\nc = fast\nhbar = 1\n")),
        MalformedRegistry);
    REQUIRE_THROWS_AS(
        load_registry(write_temp("partial-number",
                                 "[constants]\nc = 1.0x\nhbar = 1\n")),
        MalformedRegistry);
    REQUIRE_THROWS_AS(
        load_registry(write_temp("unknown-section",
                                 "[constants]\nc = 1\nhbar = 1\n[field]\n")),
        MalformedRegistry);
    REQUIRE_THROWS_AS(
        load_registry(write_temp("unterminated",
                                 "[constants\nc = 1\nhbar = 1\n")),
        MalformedRegistry);
    REQUIRE_THROWS_AS(
        load_registry(write_temp("outside",
                                 "c = 1\n[constants]\nc = 1\nhbar = 1\n")),
        MalformedRegistry);
    REQUIRE_THROWS_AS(
        load_registry(write_temp("no-equals",
                                 "[constants]\nc 1\nhbar = 1\n")),
        MalformedRegistry);
    REQUIRE_THROWS_AS(
        load_registry(write_temp("empty-value",
                                 "[constants]\nc =\nhbar = 1\n")),
        MalformedRegistry);
}

TEST_CASE("parser rejects bad particle sections") {
    const std::string head = "[constants]\nc = 1\nhbar = 1\n";
    REQUIRE_THROWS_AS(
        load_registry(write_temp(
            "missing-key",
            head + "[particle]\nname = x\nmass_kg = 1\nmdm_J_per_T = 0\n")),
        MalformedRegistry);
    REQUIRE_THROWS_AS(
        load_registry(write_temp(
            "unknown-key",
            head + "[particle]\nname = x\nmass_kg = 1\nmdm_J_per_T = 0\n"
                   "edm_C_m = 0\ncharge = 1\n")),
        MalformedRegistry);
    REQUIRE_THROWS_AS(
        load_registry(write_temp(
            "duplicate-key",
            head + "[particle]\nname = x\nname = y\nmass_kg = 1\n"
                   "mdm_J_per_T = 0\nedm_C_m = 0\n")),
        MalformedRegistry);
    REQUIRE_THROWS_AS(
        load_registry(write_temp(
            "negative-mass",
            head + "[particle]\nname = x\nmass_kg = -1\nmdm_J_per_T = 0\n"
                   "edm_C_m = 0\n")),
        MalformedRegistry);
    const std::string one_particle =
        "[particle]\nname = x\nmass_kg = 1\nmdm_J_per_T = 0\nedm_C_m = 0\n";
    REQUIRE_THROWS_AS(
        load_registry(write_temp("duplicate-particle",
                                 head + one_particle + one_particle)),
        MalformedRegistry);
}
