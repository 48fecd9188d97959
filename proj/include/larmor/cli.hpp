// Copyright (c) 2026 the larmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "larmor/errors.hpp"
#include "larmor/oracle.hpp"
#include "larmor/quantities.hpp"
#include "larmor/registry.hpp"
#include "larmor/sweep.hpp"
#include "larmor/table.hpp"
#include "larmor/verify.hpp"

#ifndef LARMOR_DEFAULT_REGISTRY
#define LARMOR_DEFAULT_REGISTRY "data/particles.cfg"
#endif

namespace larmor {
namespace cli {

namespace detail {

/// Shortest round-trip decimal form, for parameter echoes in metadata.
inline std::string param_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

inline std::string join_numbers(const std::vector<double>& values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += param_number(values[i]);
    }
    return out;
}

inline double parse_double_token(const std::string& text,
                                 const std::string& flag) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw CLI::ValidationError(flag, "'" + text + "' is not a number");
    }
    return value;
}

inline int parse_int_token(const std::string& text, const std::string& flag) {
    int value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw CLI::ValidationError(flag, "'" + text + "' is not an integer");
    }
    return value;
}

/// Parses the inclusive range syntax start:stop:count.
inline Grid parse_range(const std::string& text, const std::string& flag) {
    const size_t c1 = text.find(':');
    const size_t c2 = c1 == std::string::npos ? std::string::npos
                                              : text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        text.find(':', c2 + 1) != std::string::npos) {
        throw CLI::ValidationError(flag, "expected start:stop:count, got '" +
                                             text + "'");
    }
    const double start = parse_double_token(text.substr(0, c1), flag);
    const double stop =
        parse_double_token(text.substr(c1 + 1, c2 - c1 - 1), flag);
    const int count = parse_int_token(text.substr(c2 + 1), flag);
    return Grid(start, stop, count);
}

inline Cell optional_cell(const std::optional<double>& value) {
    if (value.has_value()) {
        return Cell(*value);
    }
    return Cell(std::monostate{});
}

inline Table sweep_table(const std::vector<SweepRow>& rows) {
    Table t;
    t.columns = {"series_label",      "swept_value",
                 "splitting",         "splitting_numeric",
                 "lowspeed_approx",   "highspeed_approx"};
    t.rows.reserve(rows.size());
    for (const SweepRow& row : rows) {
        t.rows.push_back({Cell(row.series_label), Cell(row.swept_value),
                          Cell(row.splitting),
                          optional_cell(row.splitting_numeric),
                          optional_cell(row.lowspeed_approx),
                          optional_cell(row.highspeed_approx)});
    }
    return t;
}

}  // namespace detail

/// Everything a single invocation needs; defaults are the shipped ones.
struct Options {
    std::string registry = LARMOR_DEFAULT_REGISTRY;
    std::string format = "csv";
    int precision = 17;
    std::string out_path;
    std::string eta_mode = "approx";
    double pi_tilde = 0.0;

    double eta = 0.0;
    double delta = 0.0;
    bool numeric = false;
    bool derivative = false;
    bool lowspeed = false;
    bool highspeed = false;

    std::string particle;
    bool natural = false;

    std::vector<double> velocities{0.0, 0.2, 0.5, 0.8};
    std::vector<double> deltas{0.3, 0.5, 0.9};
    std::string delta_range = "0:3:31";
    std::string velocity_range = "0:0.99:61";
    std::string doppler_range = "0:0.3:31";
    bool validate = false;
    double doppler_delta = 0.0;

    long samples = 10000;
    std::uint64_t seed = 42;
};

namespace detail {

inline EtaMode eta_mode_of(const Options& opt) {
    return opt.eta_mode == "exact" ? EtaMode::exact : EtaMode::approx;
}

inline Table run_spectrum(const Options& opt, TableMeta& meta) {
    meta.command = "spectrum";
    meta.parameters = {{"eta", param_number(opt.eta)},
                       {"delta", param_number(opt.delta)},
                       {"numeric", opt.numeric ? "true" : "false"}};
    const SpectrumResult s = eigenvalues_analytic(opt.eta, opt.delta);
    struct Level {
        const char* label;
        double energy;
    };
    const std::array<Level, 4> levels{{{"plus_up", s.e_plus_up},
                                       {"plus_down", s.e_plus_down},
                                       {"minus_down", s.e_minus_down},
                                       {"minus_up", s.e_minus_up}}};

    std::array<double, 4> numeric_sorted{};
    std::array<double, 4> analytic_sorted{};
    if (opt.numeric) {
        const EigenSystem es = diagonalize(
            build_hamiltonian(NaturalParams(opt.eta, 0.0, opt.delta)));
        numeric_sorted = es.eigenvalues;
        analytic_sorted = s.ascending();
    }

    Table t;
    t.columns = {"level", "energy", "energy_numeric", "deviation"};
    for (const Level& level : levels) {
        std::vector<Cell> row{Cell(std::string(level.label)),
                              Cell(level.energy), Cell(std::monostate{}),
                              Cell(std::monostate{})};
        if (opt.numeric) {
            const auto it =
                std::lower_bound(analytic_sorted.begin(),
                                 analytic_sorted.end(), level.energy);
            const auto rank = it - analytic_sorted.begin();
            row[2] = Cell(numeric_sorted[rank]);
            row[3] = Cell(std::abs(level.energy - numeric_sorted[rank]));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

inline Table run_split(const Options& opt, TableMeta& meta) {
    meta.command = "split";
    std::string quantity = "splitting";
    double value = 0.0;
    if (opt.derivative) {
        quantity = "derivative";
        value = splitting_derivative(opt.eta, opt.delta);
    } else if (opt.lowspeed) {
        quantity = "lowspeed_approx";
        value = splitting_lowspeed(opt.eta, opt.delta);
    } else if (opt.highspeed) {
        quantity = "highspeed_approx";
        value = splitting_highspeed(opt.eta, opt.delta);
    } else {
        value = spin_splitting(opt.eta, opt.delta);
    }
    meta.parameters = {{"eta", param_number(opt.eta)},
                       {"delta", param_number(opt.delta)},
                       {"quantity", quantity}};
    Table t;
    t.columns = {"quantity", "value"};
    t.rows.push_back({Cell(quantity), Cell(value)});
    return t;
}

inline Table run_limits(const Options& opt, TableMeta& meta) {
    meta.command = "limits";
    Table t;
    t.columns = {"quantity", "value", "unit"};
    if (opt.natural) {
        meta.parameters = {{"mode", "natural"}};
        const LimitBundle lim = relativistic_limits(1.0, {1.0, 1.0});
        t.rows.push_back(
            {Cell(std::string("max_splitting")), Cell(lim.max_splitting),
             Cell(std::string("mc^2"))});
        t.rows.push_back({Cell(std::string("max_larmor")),
                          Cell(lim.max_larmor),
                          Cell(std::string("mc^2/hbar"))});
        t.rows.push_back({Cell(std::string("min_wavelength")),
                          Cell(lim.min_wavelength),
                          Cell(std::string("hbar/(m*c)"))});
        return t;
    }
    meta.parameters = {{"particle", opt.particle}};
    const Registry reg = load_registry(opt.registry);
    const ParticleSpec& particle = find_particle(reg, opt.particle);
    const LimitBundle lim = relativistic_limits(particle.mass, reg.constants);
    t.rows.push_back({Cell(std::string("max_splitting")),
                      Cell(lim.max_splitting), Cell(std::string("J"))});
    t.rows.push_back({Cell(std::string("max_larmor")), Cell(lim.max_larmor),
                      Cell(std::string("rad/s"))});
    t.rows.push_back({Cell(std::string("min_wavelength")),
                      Cell(lim.min_wavelength), Cell(std::string("m"))});
    return t;
}

inline Table run_sweep_delta(const Options& opt, TableMeta& meta) {
    meta.command = "sweep-delta";
    meta.parameters = {{"velocities", join_numbers(opt.velocities)},
                       {"delta_range", opt.delta_range},
                       {"eta_mode", opt.eta_mode},
                       {"pi", param_number(opt.pi_tilde)},
                       {"validate", opt.validate ? "true" : "false"}};
    const Grid grid = parse_range(opt.delta_range, "--delta-range");
    return sweep_table(sweep_delta(opt.velocities, grid, eta_mode_of(opt),
                                   opt.pi_tilde, opt.validate));
}

inline Table run_sweep_velocity(const Options& opt, TableMeta& meta) {
    meta.command = "sweep-velocity";
    meta.parameters = {{"deltas", join_numbers(opt.deltas)},
                       {"velocity_range", opt.velocity_range},
                       {"eta_mode", opt.eta_mode},
                       {"pi", param_number(opt.pi_tilde)},
                       {"validate", opt.validate ? "true" : "false"}};
    const Grid grid = parse_range(opt.velocity_range, "--velocity-range");
    return sweep_table(sweep_velocity(opt.deltas, grid, eta_mode_of(opt),
                                      opt.pi_tilde, opt.validate));
}

inline Table run_doppler(const Options& opt, TableMeta& meta) {
    meta.command = "doppler";
    meta.parameters = {{"delta", param_number(opt.doppler_delta)},
                       {"velocity_range", opt.doppler_range}};
    const Grid grid = parse_range(opt.doppler_range, "--velocity-range");
    const DopplerResult result = doppler_compare(grid, opt.doppler_delta);
    Table t;
    t.columns = {"v", "motional_ratio", "nonrel_doppler", "rel_doppler"};
    t.rows.reserve(result.rows.size());
    for (const DopplerRow& row : result.rows) {
        t.rows.push_back({Cell(row.v), Cell(row.motional_ratio),
                          Cell(row.nonrel_doppler), Cell(row.rel_doppler)});
    }
    t.dropped_rows = result.dropped;
    return t;
}

inline Table run_verify(const Options& opt, TableMeta& meta,
                        std::ostream& err_stream, bool& all_pass) {
    meta.command = "verify";
    meta.parameters = {{"samples", std::to_string(opt.samples)},
                       {"seed", std::to_string(opt.seed)}};
    meta.seed = opt.seed;
    const VerifyReport report = run_verification(opt.seed, opt.samples);
    all_pass = report.all_pass();

    Table t;
    t.columns = {"suite", "metric", "samples", "value", "threshold", "status"};
    long passed = 0;
    for (const VerifySuiteResult& r : report.results) {
        t.rows.push_back({Cell(r.suite), Cell(r.metric),
                          Cell(std::to_string(r.samples)), Cell(r.value),
                          Cell(r.threshold),
                          Cell(std::string(r.pass ? "pass" : "fail"))});
        if (r.pass) {
            ++passed;
        } else {
            err_stream << "verify: FAIL " << r.suite << "/" << r.metric
                       << ": value " << format_number(r.value, 17)
                       << " vs threshold " << format_number(r.threshold, 17)
                       << "\n";
        }
    }
    err_stream << "verify: " << passed << "/" << report.results.size()
               << " checks passed\n";
    return t;
}

}  // namespace detail

/// Parses and runs one invocation. Data goes to `out_stream` (or the
/// --out file), diagnostics to `err_stream`. Returns the process exit
/// code: 0 success, 1 domain error, 2 usage error.
inline int run(int argc, const char* const* argv, std::ostream& out_stream,
               std::ostream& err_stream) {
    Options opt;
    CLI::App app{"Relativistic spin splitting of a neutral dipole particle "
                 "in collinear static fields"};
    app.require_subcommand(1);

    app.add_option("--registry", opt.registry,
                   "particle/constants registry file")
        ->envname("LARMOR_REGISTRY");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--precision", opt.precision,
                   "significant digits, 6 to 17")
        ->check(CLI::Range(6, 17));
    app.add_option("--out", opt.out_path, "write data to this file");
    app.add_option("--eta-mode", opt.eta_mode,
                   "eta from velocity: exact or approx (eta = cp)")
        ->check(CLI::IsMember({"exact", "approx"}));
    app.add_option("--pi", opt.pi_tilde,
                   "cross coupling pi (units mc) for sweeps");

    CLI::App* spectrum =
        app.add_subcommand("spectrum", "four energy levels at one point");
    spectrum->fallthrough();
    spectrum->add_option("--eta", opt.eta, "eta (units mc^2)")->required();
    spectrum->add_option("--delta", opt.delta, "delta (units mc^2)")
        ->required();
    spectrum->add_flag("--numeric", opt.numeric,
                       "attach eigensolver values and deviations");

    CLI::App* split =
        app.add_subcommand("split", "spin splitting at one point");
    split->fallthrough();
    split->add_option("--eta", opt.eta, "eta (units mc^2)")->required();
    split->add_option("--delta", opt.delta, "delta (units mc^2)")->required();
    CLI::Option* flag_derivative = split->add_flag(
        "--derivative", opt.derivative, "d(splitting)/d(eta) instead");
    CLI::Option* flag_lowspeed = split->add_flag(
        "--lowspeed", opt.lowspeed, "low-speed approximation instead");
    CLI::Option* flag_highspeed = split->add_flag(
        "--highspeed", opt.highspeed, "high-speed approximation instead");
    flag_derivative->excludes(flag_lowspeed);
    flag_derivative->excludes(flag_highspeed);
    flag_lowspeed->excludes(flag_highspeed);

    CLI::App* limits = app.add_subcommand(
        "limits", "splitting, frequency, and wavelength limits");
    limits->fallthrough();
    CLI::Option* opt_particle =
        limits->add_option("--particle", opt.particle, "registry preset");
    CLI::Option* opt_natural = limits->add_flag(
        "--natural", opt.natural, "natural units (m = c = hbar = 1)");
    opt_particle->excludes(opt_natural);

    CLI::App* sdelta = app.add_subcommand(
        "sweep-delta", "splitting vs delta, one series per velocity");
    sdelta->fallthrough();
    sdelta->add_option("--velocities", opt.velocities,
                       "comma-separated series velocities (fractions of c)")
        ->delimiter(',');
    sdelta->add_option("--delta-range", opt.delta_range,
                       "delta grid start:stop:count");
    sdelta->add_flag("--validate", opt.validate,
                     "cross-check every row against the eigensolver");

    CLI::App* svel = app.add_subcommand(
        "sweep-velocity", "splitting vs velocity, one series per delta");
    svel->fallthrough();
    svel->add_option("--deltas", opt.deltas,
                     "comma-separated series deltas (units mc^2)")
        ->delimiter(',');
    svel->add_option("--velocity-range", opt.velocity_range,
                     "velocity grid start:stop:count");
    svel->add_flag("--validate", opt.validate,
                   "cross-check every row against the eigensolver");

    CLI::App* doppler = app.add_subcommand(
        "doppler", "motional red shift vs Doppler references");
    doppler->fallthrough();
    doppler->add_option("--delta", opt.doppler_delta,
                        "fixed delta (units mc^2)");
    doppler->add_option("--velocity-range", opt.doppler_range,
                        "velocity grid start:stop:count");

    CLI::App* verify = app.add_subcommand(
        "verify", "run the self-verification suites");
    verify->fallthrough();
    verify->add_option("--samples", opt.samples, "random samples per suite");
    verify->add_option("--seed", opt.seed, "random seed");

    try {
        app.parse(argc, argv);

        if (limits->parsed() && !opt.natural && opt.particle.empty()) {
            throw CLI::RequiredError("limits needs --particle or --natural");
        }

        TableMeta meta;
        Table table;
        bool verify_pass = true;
        if (spectrum->parsed()) {
            table = detail::run_spectrum(opt, meta);
        } else if (split->parsed()) {
            table = detail::run_split(opt, meta);
        } else if (limits->parsed()) {
            table = detail::run_limits(opt, meta);
        } else if (sdelta->parsed()) {
            table = detail::run_sweep_delta(opt, meta);
        } else if (svel->parsed()) {
            table = detail::run_sweep_velocity(opt, meta);
        } else if (doppler->parsed()) {
            table = detail::run_doppler(opt, meta);
        } else {
            table = detail::run_verify(opt, meta, err_stream, verify_pass);
        }

        std::ofstream file;
        if (!opt.out_path.empty()) {
            file.open(opt.out_path);
            if (!file) {
                throw InvalidArgument("cannot open output file '" +
                                      opt.out_path + "'");
            }
        }
        std::ostream& dest = opt.out_path.empty() ? out_stream : file;
        if (opt.format == "json") {
            write_json(table, meta, dest, opt.precision);
        } else {
            write_csv(table, dest, opt.precision);
        }
        dest.flush();
        if (!dest) {
            throw InvalidArgument("failed writing output");
        }
        return verify_pass ? 0 : 1;
    } catch (const CLI::CallForHelp&) {
        out_stream << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out_stream << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err_stream << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err_stream << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cli
}  // namespace larmor
