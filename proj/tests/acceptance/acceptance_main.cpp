// Copyright (c) 2026 the larmor developers.
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance gate. Each criterion prints one PASS/FAIL line;
// the process exits 0 only when all ten pass. Criteria 1-9 drive the
// library directly; criterion 10 runs the CLI binary as a subprocess.
//
// Usage: acceptance <path-to-cli-binary> <path-to-registry-file>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

#include "larmor/dirac.hpp"
#include "larmor/oracle.hpp"
#include "larmor/quantities.hpp"
#include "larmor/registry.hpp"
#include "larmor/sampling.hpp"
#include "larmor/sweep.hpp"

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return std::string(buf);
}

struct Tuple {
    double p;
    double pi;
    double delta;
};

std::vector<Tuple> draw_tuples(long count) {
    larmor::SampleStream stream(42);
    std::vector<Tuple> tuples;
    tuples.reserve(static_cast<size_t>(count));
    for (long n = 0; n < count; ++n) {
        Tuple t;
        t.p = stream.random_sign() * stream.log_uniform_magnitude(-3.0, 3.0);
        t.pi = stream.random_sign() * stream.log_uniform_magnitude(-3.0, 3.0);
        t.delta =
            stream.random_sign() * stream.log_uniform_magnitude(-3.0, 3.0);
        tuples.push_back(t);
    }
    return tuples;
}

// Criterion 1: the independent eigensolver reproduces the closed-form
// spectrum over the full sampled parameter space.
std::string criterion_oracle(const std::vector<Tuple>& tuples) {
    double max_rel = 0.0;
    for (const Tuple& t : tuples) {
        const larmor::ComplexMatrix4 h = larmor::build_hamiltonian(
            larmor::NaturalParams(t.p, t.pi, t.delta));
        const larmor::EigenSystem es = larmor::diagonalize(h);
        const std::array<double, 4> exact =
            larmor::eigenvalues_analytic(std::hypot(t.p, t.pi), t.delta)
                .ascending();
        for (int k = 0; k < 4; ++k) {
            const double rel =
                std::abs(es.eigenvalues[k] - exact[k]) / std::abs(exact[k]);
            max_rel = std::max(max_rel, rel);
        }
    }
    if (!(max_rel < 1e-10)) {
        throw std::runtime_error("max rel eigenvalue error " + num(max_rel));
    }
    return "eigensolver matches the closed-form spectrum (max rel err " +
           num(max_rel) + " over " + std::to_string(tuples.size()) +
           " tuples)";
}

// Criterion 2: |Delta| <= 2 everywhere; on the eta = 0 line the bound is
// attained within 1e-12 exactly where |delta| >= 1, and nowhere among the
// moving samples.
std::string criterion_bound(const std::vector<Tuple>& tuples) {
    double max_abs = 0.0;
    double min_gap = 2.0;
    for (const Tuple& t : tuples) {
        const double eta = std::hypot(t.p, t.pi);
        const double split =
            std::abs(larmor::spin_splitting(eta, t.delta));
        max_abs = std::max(max_abs, split);
        min_gap = std::min(min_gap, 2.0 - split);
    }

    auto check_line = [&](double delta) {
        const double split =
            std::abs(larmor::spin_splitting(0.0, delta));
        max_abs = std::max(max_abs, split);
        const bool at_plateau = std::abs(split - 2.0) <= 1e-12;
        const bool expected = std::abs(delta) >= 1.0;
        if (at_plateau != expected) {
            throw std::runtime_error(
                "plateau misclassified at eta = 0, delta = " + num(delta));
        }
    };
    for (int i = 0; i <= 1000; ++i) {
        check_line(static_cast<double>(i));
        check_line(-static_cast<double>(i));
    }
    const larmor::Grid fine(0.0, 3.0, 301);
    for (int i = 0; i < fine.count(); ++i) {
        check_line(fine.point(i));
        check_line(-fine.point(i));
    }

    if (!(max_abs <= 2.0 + 1e-12)) {
        throw std::runtime_error("bound exceeded: max |Delta| = " +
                                 num(max_abs));
    }
    if (!(min_gap > 1e-12)) {
        throw std::runtime_error("a moving sample reached the plateau (gap " +
                                 num(min_gap) + ")");
    }
    return "splitting never exceeds the mass gap (max |Delta| = " +
           num(max_abs) + "; equality only at eta = 0, |delta| >= 1)";
}

// Criterion 3: the rest-frame sweep reproduces the 2*delta ramp and the
// plateau at 2.
std::string criterion_plateau() {
    const std::vector<larmor::SweepRow> rows = larmor::sweep_delta(
        {0.0}, larmor::Grid(0.0, 3.0, 301), larmor::EtaMode::approx, 0.0,
        false);
    double max_dev = 0.0;
    for (const larmor::SweepRow& row : rows) {
        const double expected =
            row.swept_value < 1.0 ? 2.0 * row.swept_value : 2.0;
        max_dev = std::max(max_dev, std::abs(row.splitting - expected));
    }
    if (!(max_dev <= 1e-12)) {
        throw std::runtime_error("rest-frame deviation " + num(max_dev));
    }
    return "rest-frame splitting is 2*delta then plateaus at 2 (max dev " +
           num(max_dev) + ")";
}

// Criterion 4: strict motional narrowing along velocity, and the analytic
// derivative agrees with central finite differences away from the
// singular set.
std::string criterion_narrowing() {
    double min_step = 2.0;
    for (const double delta : {0.3, 0.5, 0.9}) {
        const std::vector<larmor::SweepRow> rows = larmor::sweep_velocity(
            {delta}, larmor::Grid(0.0, 0.99, 61), larmor::EtaMode::approx,
            0.0, false);
        for (size_t i = 1; i < rows.size(); ++i) {
            min_step = std::min(
                min_step, rows[i - 1].splitting - rows[i].splitting);
        }
    }
    if (!(min_step > 1e-12)) {
        throw std::runtime_error("narrowing not strict (min step " +
                                 num(min_step) + ")");
    }

    larmor::SampleStream stream(42);
    const double lo = std::log10(0.05);
    const double hi = std::log10(5.0);
    const double h = 1e-6;
    double max_rel = 0.0;
    for (int n = 0; n < 1000; ++n) {
        const double eta = stream.log_uniform_magnitude(lo, hi);
        double delta = stream.log_uniform_magnitude(lo, hi);
        while (std::abs(delta - 1.0) < 0.05) {
            delta = stream.log_uniform_magnitude(lo, hi);
        }
        const double fd = (larmor::spin_splitting(eta + h, delta) -
                           larmor::spin_splitting(eta - h, delta)) /
                          (2.0 * h);
        const double exact = larmor::splitting_derivative(eta, delta);
        max_rel = std::max(max_rel,
                           std::abs(fd - exact) / std::abs(exact));
    }
    if (!(max_rel <= 1e-6)) {
        throw std::runtime_error("derivative mismatch (max rel err " +
                                 num(max_rel) + ")");
    }
    return "splitting strictly narrows with velocity (min step " +
           num(min_step) + "); derivative matches finite differences "
           "(max rel err " + num(max_rel) + ")";
}

// Criterion 5: halving eta shrinks the low-speed approximation error by
// about 2^4, the signature of a fourth-order remainder.
std::string criterion_lowspeed_order() {
    const double delta = 0.5;
    const auto err = [&](double eta) {
        return std::abs(larmor::splitting_lowspeed(eta, delta) -
                        larmor::spin_splitting(eta, delta));
    };
    std::vector<double> ratios;
    for (const double eta : {0.1, 0.01}) {
        const double ratio = err(eta) / err(eta / 2.0);
        if (!(ratio >= 12.0 && ratio <= 20.0)) {
            throw std::runtime_error("error ratio " + num(ratio) +
                                     " at eta = " + num(eta) +
                                     " outside [12, 20]");
        }
        ratios.push_back(ratio);
    }
    return "low-speed error falls ~16x when eta halves (ratios " +
           num(ratios[0]) + " at eta = 0.1, " + num(ratios[1]) +
           " at eta = 0.01)";
}

// Criterion 6: the high-speed tail approaches 2*delta/eta with a
// third-order remainder, so doubling eta shrinks the error by about 2^3.
std::string criterion_highspeed_order() {
    const double delta = 0.5;
    const double tail =
        larmor::spin_splitting(1000.0, delta) * 1000.0;
    const double tail_dev = std::abs(tail - 2.0 * delta) / (2.0 * delta);
    if (!(tail_dev <= 1e-3)) {
        throw std::runtime_error("tail deviation " + num(tail_dev) +
                                 " at eta = 1000");
    }
    const auto err = [&](double eta) {
        return std::abs(larmor::spin_splitting(eta, delta) -
                        larmor::splitting_highspeed(eta, delta));
    };
    std::vector<double> ratios;
    for (const double eta : {100.0, 1000.0}) {
        const double ratio = err(2.0 * eta) / err(eta);
        if (!(ratio >= 0.1 && ratio <= 1.0 / 6.0)) {
            throw std::runtime_error("error ratio " + num(ratio) +
                                     " at eta = " + num(eta) +
                                     " outside [1/10, 1/6]");
        }
        ratios.push_back(ratio);
    }
    return "high-speed tail is 2*delta/eta (rel dev " + num(tail_dev) +
           " at eta = 1000; error ratios " + num(ratios[0]) + ", " +
           num(ratios[1]) + ")";
}

// Criterion 7: the red-shift ratio equals the low-speed splitting divided
// by the rest splitting across its validity domain.
std::string criterion_redshift() {
    larmor::SampleStream stream(42);
    double max_dev = 0.0;
    for (int n = 0; n < 1000; ++n) {
        const double delta =
            stream.random_sign() * stream.uniform(0.05, 0.95);
        const double eta_cap =
            0.99 * std::sqrt(0.1) * (1.0 - std::abs(delta));
        const double target_eta = stream.uniform(0.0, eta_cap);
        const double v = target_eta / std::sqrt(1.0 + target_eta * target_eta);
        const double ratio = larmor::larmor_redshift(v, delta).ratio;
        const double eta = std::abs(larmor::kinematics_of(v).p_tilde);
        const double reference = larmor::splitting_lowspeed(eta, delta) /
                                 larmor::splitting_at_rest(delta);
        max_dev = std::max(max_dev, std::abs(ratio - reference));
    }
    if (!(max_dev <= 1e-14)) {
        throw std::runtime_error("identity broken (max dev " + num(max_dev) +
                                 ")");
    }
    const double spot = larmor::larmor_redshift(0.1, 0.0).ratio;
    if (!(std::abs(spot - 0.9949495) <= 1e-6)) {
        throw std::runtime_error("ratio at v = 0.1 is " + num(spot));
    }
    return "red-shift ratio identity holds to 1e-14 (max dev " +
           num(max_dev) + "; ratio(0.1, 0) = " + num(spot) + ")";
}

// Criterion 8: the limit bundle is (2, 2, 1/2) in natural units, and for
// the neutron preset the minimum wavelength is half the reduced Compton
// wavelength while the maximum frequency matches 2 m c^2 / hbar.
std::string criterion_limits(const std::string& registry_path) {
    const larmor::LimitBundle natural =
        larmor::relativistic_limits(1.0, larmor::PhysicalConstants{1.0, 1.0});
    if (natural.max_splitting != 2.0 || natural.max_larmor != 2.0 ||
        natural.min_wavelength != 0.5) {
        throw std::runtime_error("natural-unit bundle is not (2, 2, 0.5)");
    }

    const larmor::Registry reg = larmor::load_registry(registry_path);
    const larmor::ParticleSpec& neutron =
        larmor::find_particle(reg, "neutron");
    const larmor::LimitBundle lim =
        larmor::relativistic_limits(neutron.mass, reg.constants);
    const double compton_halves =
        lim.min_wavelength * neutron.mass * reg.constants.c /
        reg.constants.hbar;
    if (!(std::abs(compton_halves - 0.5) <= 1e-12)) {
        throw std::runtime_error("lambda_min * m c / hbar = " +
                                 num(compton_halves));
    }
    const double omega_expected = 2.0 * neutron.mass * reg.constants.c *
                                  reg.constants.c / reg.constants.hbar;
    if (!(std::abs(lim.max_larmor / omega_expected - 1.0) <= 1e-3)) {
        throw std::runtime_error("omega_max " + num(lim.max_larmor) +
                                 " vs expected " + num(omega_expected));
    }
    if (!(std::abs(lim.max_larmor / 2.86e24 - 1.0) <= 0.02)) {
        throw std::runtime_error("omega_max " + num(lim.max_larmor) +
                                 " far from 2.86e24 rad/s");
    }
    return "limit bundle is (2, 2, 0.5) in natural units; neutron "
           "lambda_min is half the Compton wavelength, omega_max = " +
           num(lim.max_larmor) + " rad/s";
}

// Criterion 9: the splitting vanishes identically in the massless limit.
std::string criterion_massless() {
    larmor::SampleStream stream(42);
    for (int n = 0; n < 1000; ++n) {
        const double cp =
            stream.random_sign() * stream.log_uniform_magnitude(-12.0, 12.0);
        const double cpi =
            stream.random_sign() * stream.log_uniform_magnitude(-12.0, 12.0);
        const double delta =
            stream.random_sign() * stream.log_uniform_magnitude(-12.0, 12.0);
        const double split =
            larmor::spin_splitting_si(cp, cpi, delta, 0.0);
        if (split != 0.0) {
            throw std::runtime_error("nonzero splitting " + num(split) +
                                     " at zero rest energy");
        }
    }
    return "splitting vanishes identically at zero rest energy "
           "(1000 combinations, all exactly 0)";
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

// Criterion 10: repeated CLI invocations with one seed are byte-identical.
std::string criterion_determinism(const std::string& cli) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "larmor-acceptance";
    fs::create_directories(dir);

    const auto invoke = [&](const std::string& args, const fs::path& out) {
        const std::string command = "\"" + cli + "\" " + args + " --out \"" +
                                    out.string() + "\" 2>/dev/null";
        const int status = std::system(command.c_str());
        if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0) {
            throw std::runtime_error("command failed: " + command);
        }
    };

    const struct {
        const char* args;
        const char* stem;
    } pairs[] = {
        {"verify --seed 42", "verify"},
        {"sweep-delta --velocities 0,0.5 --delta-range 0:3:31 --validate",
         "sweep"},
        {"--format json sweep-velocity --deltas 0.3,0.5,0.9 "
         "--velocity-range 0:0.99:61",
         "sweepjson"},
    };
    for (const auto& pair : pairs) {
        const fs::path first = dir / (std::string(pair.stem) + "-1.txt");
        const fs::path second = dir / (std::string(pair.stem) + "-2.txt");
        invoke(pair.args, first);
        invoke(pair.args, second);
        const std::string a = read_file(first);
        const std::string b = read_file(second);
        if (a.empty()) {
            throw std::runtime_error(std::string(pair.stem) +
                                     " produced no output");
        }
        if (a != b) {
            throw std::runtime_error(std::string(pair.stem) +
                                     " runs are not byte-identical");
        }
    }
    fs::remove_all(dir);
    return "repeated verify and sweep runs are byte-identical "
           "(3 command pairs)";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <cli-binary> <registry-file>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string registry_path = argv[2];

    const std::vector<Tuple> tuples = draw_tuples(10000);

    const std::vector<std::function<std::string()>> criteria = {
        [&] { return criterion_oracle(tuples); },
        [&] { return criterion_bound(tuples); },
        [&] { return criterion_plateau(); },
        [&] { return criterion_narrowing(); },
        [&] { return criterion_lowspeed_order(); },
        [&] { return criterion_highspeed_order(); },
        [&] { return criterion_redshift(); },
        [&] { return criterion_limits(registry_path); },
        [&] { return criterion_massless(); },
        [&] { return criterion_determinism(cli); },
    };

    int passed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        std::string verdict;
        bool ok = false;
        try {
            verdict = criteria[i]();
            ok = true;
            ++passed;
        } catch (const std::exception& e) {
            verdict = e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1)
                  << ": " << verdict << "\n";
    }
    std::cout << "acceptance: " << passed << "/" << criteria.size()
              << " criteria passed\n";
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
