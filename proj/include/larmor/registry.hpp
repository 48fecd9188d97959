// Copyright (c) 2026 the larmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "larmor/errors.hpp"
#include "larmor/quantities.hpp"

namespace larmor {

/// A neutral particle with magnetic and electric dipole moments.
struct ParticleSpec {
    std::string name;
    double mass;  ///< rest mass, kg; zero allowed (massless limit)
    double mdm;   ///< magnetic dipole moment mu, J/T, any sign
    double edm;   ///< electric dipole moment d, C m, any sign
};

/// Static collinear fields along the propagation axis.
struct FieldPoint {
    double e_field;  ///< V/m
    double b_field;  ///< T
};

/// Parsed contents of a registry file: the [constants] section plus one
/// [particle] section per preset.
struct Registry {
    PhysicalConstants constants;
    std::map<std::string, double> extra_constants;  ///< non-required keys
    std::vector<ParticleSpec> particles;
};

namespace detail {

inline std::string trim(const std::string& s) {
    size_t b = 0;
    size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline double parse_registry_number(const std::string& text,
                                    const std::string& key,
                                    const std::string& path) {
    const std::string t = trim(text);
    double value = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw MalformedRegistry(path + ": key '" + key +
                                "' has non-numeric value '" + t + "'");
    }
    return value;
}

}  // namespace detail

/// Loads a registry file: '#' starts a comment (full-line or trailing),
/// '[section]' headers, 'key = value' pairs. Required: [constants] with
/// positive c and hbar; each [particle] with name, mass_kg >= 0,
/// mdm_J_per_T, edm_C_m. Unknown constants keys are kept; unknown particle
/// keys are rejected.
inline Registry load_registry(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw MalformedRegistry("cannot open registry file '" + path + "'");
    }

    Registry reg;
    reg.constants.c = 0.0;
    reg.constants.hbar = 0.0;
    bool saw_constants = false;

    struct RawParticle {
        std::map<std::string, std::string> keys;
        int line;
    };
    std::vector<RawParticle> raw_particles;
    std::string section;
    std::string line;
    int lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string t = detail::trim(line);
        if (t.empty()) {
            continue;
        }
        if (t.front() == '[') {
            if (t.back() != ']') {
                throw MalformedRegistry(path + ":" + std::to_string(lineno) +
                                        ": unterminated section header");
            }
            section = detail::trim(t.substr(1, t.size() - 2));
            if (section == "constants") {
                saw_constants = true;
            } else if (section == "particle") {
                raw_particles.push_back(RawParticle{{}, lineno});
            } else {
                throw MalformedRegistry(path + ":" + std::to_string(lineno) +
                                        ": unknown section '" + section +
                                        "'");
            }
            continue;
        }
        const size_t eq = t.find('=');
        if (eq == std::string::npos) {
            throw MalformedRegistry(path + ":" + std::to_string(lineno) +
                                    ": expected 'key = value', got '" + t +
                                    "'");
        }
        const std::string key = detail::trim(t.substr(0, eq));
        const std::string value = detail::trim(t.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw MalformedRegistry(path + ":" + std::to_string(lineno) +
                                    ": empty key or value");
        }
        if (section == "constants") {
            const double v = detail::parse_registry_number(value, key, path);
            if (key == "c") {
                reg.constants.c = v;
            } else if (key == "hbar") {
                reg.constants.hbar = v;
            } else {
                reg.extra_constants[key] = v;
            }
        } else if (section == "particle") {
            auto& keys = raw_particles.back().keys;
            if (!keys.emplace(key, value).second) {
                throw MalformedRegistry(path + ":" + std::to_string(lineno) +
                                        ": duplicate key '" + key + "'");
            }
        } else {
            throw MalformedRegistry(path + ":" + std::to_string(lineno) +
                                    ": key outside any section");
        }
    }

    if (!saw_constants || reg.constants.c <= 0.0 ||
        reg.constants.hbar <= 0.0) {
        throw MalformedRegistry(
            path + ": [constants] must define positive c and hbar");
    }

    for (const auto& raw : raw_particles) {
        const auto where = path + ":" + std::to_string(raw.line);
        for (const char* required :
             {"name", "mass_kg", "mdm_J_per_T", "edm_C_m"}) {
            if (raw.keys.find(required) == raw.keys.end()) {
                throw MalformedRegistry(where + ": [particle] missing key '" +
                                        std::string(required) + "'");
            }
        }
        for (const auto& [key, value] : raw.keys) {
            if (key != "name" && key != "mass_kg" && key != "mdm_J_per_T" &&
                key != "edm_C_m") {
                throw MalformedRegistry(where + ": unknown particle key '" +
                                        key + "'");
            }
        }
        ParticleSpec p;
        p.name = raw.keys.at("name");
        p.mass =
            detail::parse_registry_number(raw.keys.at("mass_kg"), "mass_kg",
                                          path);
        p.mdm = detail::parse_registry_number(raw.keys.at("mdm_J_per_T"),
                                              "mdm_J_per_T", path);
        p.edm = detail::parse_registry_number(raw.keys.at("edm_C_m"),
                                              "edm_C_m", path);
        if (p.mass < 0.0) {
            throw MalformedRegistry(where + ": mass_kg must be >= 0, got " +
                                    raw.keys.at("mass_kg"));
        }
        for (const auto& existing : reg.particles) {
            if (existing.name == p.name) {
                throw MalformedRegistry(where + ": duplicate particle '" +
                                        p.name + "'");
            }
        }
        reg.particles.push_back(std::move(p));
    }

    return reg;
}

/// Looks up a particle preset by name in an already loaded registry.
inline const ParticleSpec& find_particle(const Registry& reg,
                                         const std::string& name) {
    for (const auto& p : reg.particles) {
        if (p.name == name) {
            return p;
        }
    }
    throw UnknownParticle("particle '" + name + "' not found in registry");
}

/// Loads the registry at `path` and returns the named preset.
inline ParticleSpec load_particle_preset(const std::string& name,
                                         const std::string& path) {
    return find_particle(load_registry(path), name);
}

/// Rest energy m c^2 in joules.
inline double rest_energy(const ParticleSpec& particle,
                          const PhysicalConstants& constants) {
    return particle.mass * constants.c * constants.c;
}

/// Converts SI inputs to the dimensionless parameters:
///   p_tilde  = p / (m c)
///   pi_tilde = (d B + mu E / c^2) / (m c)
///   delta_tilde = (d E - mu B) / (m c^2)
/// Requires mass > 0; the massless limit must use the SI entry points of
/// the analytic module instead.
inline NaturalParams to_natural(const ParticleSpec& particle,
                                const FieldPoint& fields, double momentum,
                                const PhysicalConstants& constants) {
    detail::require_finite(fields.e_field, "e_field");
    detail::require_finite(fields.b_field, "b_field");
    detail::require_finite(momentum, "momentum");
    if (particle.mass <= 0.0) {
        throw MasslessConversion(
            "natural units are undefined for mass <= 0; use the SI "
            "operations");
    }
    const double mc = particle.mass * constants.c;
    const double mc2 = mc * constants.c;
    const double pi_si = particle.edm * fields.b_field +
                         particle.mdm * fields.e_field /
                             (constants.c * constants.c);
    const double delta_si = particle.edm * fields.e_field -
                            particle.mdm * fields.b_field;
    return NaturalParams(momentum / mc, pi_si / mc, delta_si / mc2);
}

}  // namespace larmor
