// Copyright (c) 2026 the larmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "larmor/dirac.hpp"
#include "larmor/errors.hpp"
#include "larmor/oracle.hpp"
#include "larmor/quantities.hpp"
#include "larmor/sampling.hpp"
#include "larmor/sweep.hpp"

namespace larmor {

/// One check of the self-verification run. `value` is the worst observed
/// quantity named by `metric`; whether passing means staying below or
/// above `threshold` is fixed per metric by the suite that emits it.
struct VerifySuiteResult {
    std::string suite;
    std::string metric;
    long samples;
    double value;
    double threshold;
    bool pass;
};

struct VerifyReport {
    std::uint64_t seed;
    long requested_samples;
    std::vector<VerifySuiteResult> results;

    bool all_pass() const {
        for (const auto& r : results) {
            if (!r.pass) {
                return false;
            }
        }
        return true;
    }
};

namespace detail {

/// Random tuple with log-uniform magnitudes 10^[-3, 3] and random signs.
inline NaturalParams random_params(SampleStream& stream) {
    const double p = stream.random_sign() * stream.log_uniform_magnitude(-3.0, 3.0);
    const double pi = stream.random_sign() * stream.log_uniform_magnitude(-3.0, 3.0);
    const double delta =
        stream.random_sign() * stream.log_uniform_magnitude(-3.0, 3.0);
    return NaturalParams(p, pi, delta);
}

}  // namespace detail

/// Deterministic self-check of the analytic formulas against the
/// numerical eigensolver and of the documented bound, monotonicity, and
/// expansion-order properties. Identical seeds give identical reports.
inline VerifyReport run_verification(std::uint64_t seed, long samples) {
    if (samples < 2) {
        throw InvalidArgument("verification needs at least 2 samples");
    }
    VerifyReport report{seed, samples, {}};
    SampleStream stream(seed);
    const DiracBasis basis = standard_basis();

    // Suite: oracle agreement. Eigenvalues of the independent solver vs
    // the closed form over random tuples; the same tuples also feed the
    // bound check below.
    double max_rel_eigen = 0.0;
    double max_abs_bound_excess = -2.0;
    for (long n = 0; n < samples; ++n) {
        const NaturalParams np = detail::random_params(stream);
        const EigenSystem es = diagonalize(build_hamiltonian(np));
        const auto analytic =
            eigenvalues_analytic(np.eta(), np.delta()).ascending();
        for (int j = 0; j < 4; ++j) {
            const double rel = std::abs(es.eigenvalues[j] - analytic[j]) /
                               std::abs(analytic[j]);
            if (rel > max_rel_eigen) {
                max_rel_eigen = rel;
            }
        }
        const double excess =
            std::abs(spin_splitting(np.eta(), np.delta())) - 2.0;
        if (excess > max_abs_bound_excess) {
            max_abs_bound_excess = excess;
        }
    }
    report.results.push_back({"oracle_agreement", "max_rel_eigenvalue_error",
                              samples, max_rel_eigen, 1e-10,
                              max_rel_eigen < 1e-10});

    // Labeled-splitting consistency on moderate scales, where the stated
    // absolute tolerance is meaningful against the solver's floor.
    double max_abs_split = 0.0;
    for (long n = 0; n < samples; ++n) {
        const double p =
            stream.random_sign() * stream.log_uniform_magnitude(-3.0, 1.0);
        const double pi =
            stream.random_sign() * stream.log_uniform_magnitude(-3.0, 1.0);
        const double delta = stream.log_uniform_magnitude(-3.0, 1.0);
        const NaturalParams np(p, pi, delta);
        const double numeric = splitting_numeric(np, basis);
        const double analytic = spin_splitting(np.eta(), np.delta());
        const double err = std::abs(numeric - analytic);
        if (err > max_abs_split) {
            max_abs_split = err;
        }
    }
    report.results.push_back({"oracle_agreement", "max_abs_splitting_error",
                              samples, max_abs_split, 1e-12,
                              max_abs_split < 1e-12});

    // Suite: bound. Random part recorded above; adversarial line eta = 0
    // with an integer-valued coarse grid to 10^3 and a fine grid through
    // the plateau edge at delta = 1.
    long bound_points = samples;
    double max_plateau_gap = 0.0;
    double min_offplateau_distance = 2.0;
    const Grid coarse(0.0, 1000.0, 1001);
    const Grid fine(0.0, 3.0, 301);
    for (const Grid* grid : {&coarse, &fine}) {
        for (int i = 0; i < grid->count(); ++i) {
            const double delta = grid->point(i);
            const double magnitude = std::abs(spin_splitting(0.0, delta));
            ++bound_points;
            const double excess = magnitude - 2.0;
            if (excess > max_abs_bound_excess) {
                max_abs_bound_excess = excess;
            }
            if (delta >= 1.0) {
                max_plateau_gap = std::max(max_plateau_gap, std::abs(excess));
            } else {
                min_offplateau_distance =
                    std::min(min_offplateau_distance, 2.0 - magnitude);
            }
        }
    }
    report.results.push_back({"bound", "max_excess_over_2", bound_points,
                              max_abs_bound_excess, 1e-12,
                              max_abs_bound_excess <= 1e-12});
    report.results.push_back({"bound", "max_plateau_gap",
                              static_cast<long>(coarse.count() - 1 +
                                                fine.count() - 100),
                              max_plateau_gap, 1e-12,
                              max_plateau_gap <= 1e-12});
    report.results.push_back({"bound", "min_offplateau_distance_from_2", 101,
                              min_offplateau_distance, 1e-12,
                              min_offplateau_distance > 1e-12});

    // Suite: monotonicity. Strict decrease along velocity for three
    // representative couplings, then the closed-form derivative against
    // central finite differences away from the singular set.
    double min_decrement = 2.0;
    const Grid vgrid(0.0, 0.99, 61);
    for (const double delta : {0.3, 0.5, 0.9}) {
        double previous = 0.0;
        for (int i = 0; i < vgrid.count(); ++i) {
            const Kinematics k = kinematics_of(vgrid.point(i));
            const double s = spin_splitting(k.p_tilde, delta);
            if (i > 0) {
                min_decrement = std::min(min_decrement, previous - s);
            }
            previous = s;
        }
    }
    report.results.push_back({"monotonicity", "min_series_decrement", 3 * 60,
                              min_decrement, 1e-12, min_decrement > 1e-12});

    const long fd_points = std::min<long>(samples, 1000);
    double max_rel_fd = 0.0;
    const double step = 1e-6;
    for (long n = 0; n < fd_points; ++n) {
        const double eta =
            stream.log_uniform_magnitude(std::log10(0.05), std::log10(5.0));
        double delta =
            stream.log_uniform_magnitude(std::log10(0.05), std::log10(5.0));
        while (std::abs(delta - 1.0) < 0.05) {
            delta = stream.log_uniform_magnitude(std::log10(0.05),
                                                 std::log10(5.0));
        }
        const double fd = (spin_splitting(eta + step, delta) -
                           spin_splitting(eta - step, delta)) /
                          (2.0 * step);
        const double closed = splitting_derivative(eta, delta);
        const double rel = std::abs(fd - closed) / std::abs(closed);
        if (rel > max_rel_fd) {
            max_rel_fd = rel;
        }
    }
    report.results.push_back({"monotonicity", "max_rel_derivative_error",
                              fd_points, max_rel_fd, 1e-6,
                              max_rel_fd < 1e-6});

    // Suite: expansion order. Error-halving ratios pin the remainder
    // orders: quartic below (ratio near 16), cubic decay above (ratio
    // near 1/8), plus the leading-coefficient check at eta = 10^3.
    const double delta0 = 0.5;
    double low_dev = 0.0;
    for (const double eta : {0.1, 0.01}) {
        const double err_full = std::abs(splitting_lowspeed(eta, delta0) -
                                         spin_splitting(eta, delta0));
        const double err_half =
            std::abs(splitting_lowspeed(eta / 2.0, delta0) -
                     spin_splitting(eta / 2.0, delta0));
        const double ratio = err_full / err_half;
        low_dev = std::max(low_dev, std::abs(ratio - 16.0));
    }
    report.results.push_back({"expansion_order",
                              "lowspeed_err_ratio_dev_from_16", 2, low_dev,
                              4.0, low_dev <= 4.0});

    double high_dev = 0.0;
    for (const double eta : {100.0, 1000.0}) {
        const double err_base = std::abs(splitting_highspeed(eta, delta0) -
                                         spin_splitting(eta, delta0));
        const double err_double =
            std::abs(splitting_highspeed(2.0 * eta, delta0) -
                     spin_splitting(2.0 * eta, delta0));
        const double ratio = err_double / err_base;
        high_dev = std::max(high_dev, std::abs(ratio - 2.0 / 15.0));
    }
    report.results.push_back({"expansion_order",
                              "highspeed_err_ratio_dev_from_2_15", 2,
                              high_dev, 1.0 / 30.0, high_dev <= 1.0 / 30.0});

    const double product_dev =
        std::abs(spin_splitting(1000.0, delta0) * 1000.0 / (2.0 * delta0) -
                 1.0);
    report.results.push_back({"expansion_order",
                              "highspeed_product_rel_deviation", 1,
                              product_dev, 1e-3, product_dev < 1e-3});

    return report;
}

}  // namespace larmor
