// Copyright (c) 2026 the larmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "larmor/errors.hpp"
#include "larmor/oracle.hpp"
#include "larmor/quantities.hpp"

namespace larmor {

/// Inclusive linear grid. Points are computed as start + i*(stop-start)/
/// (count-1), never by accumulation, so the axis is reproducible.
class Grid {
public:
    Grid(double start, double stop, int count)
        : start_(start), stop_(stop), count_(count) {
        detail::require_finite(start, "grid start");
        detail::require_finite(stop, "grid stop");
        if (count < 2) {
            throw InvalidArgument("grid count must be >= 2, got " +
                                  std::to_string(count));
        }
        if (!(start < stop)) {
            throw InvalidArgument("grid start must be < stop");
        }
    }

    double start() const { return start_; }
    double stop() const { return stop_; }
    int count() const { return count_; }

    double point(int i) const {
        return start_ + static_cast<double>(i) * (stop_ - start_) /
                            static_cast<double>(count_ - 1);
    }

private:
    double start_;
    double stop_;
    int count_;
};

/// One sweep result row. The optional fields stay empty where a mode is
/// off or a validity guard rejects the point.
struct SweepRow {
    double series_label;  ///< the fixed parameter of this row's series
    double swept_value;
    double splitting;
    std::optional<double> splitting_numeric;
    std::optional<double> lowspeed_approx;
    std::optional<double> highspeed_approx;
};

namespace detail {

inline void check_velocity_range(double v) {
    require_finite(v, "velocity");
    if (v < 0.0 || v >= 1.0) {
        throw InvalidArgument("sweep velocities must lie in [0, 1), got " +
                              std::to_string(v));
    }
}

inline void check_delta_nonnegative(double delta) {
    require_finite(delta, "delta_tilde");
    if (delta < 0.0) {
        throw InvalidArgument("sweep delta_tilde must be >= 0, got " +
                              std::to_string(delta));
    }
}

/// Cross-checks one row against the numerical path. The oracle point is
/// built with p = eta so both paths see the identical eta.
inline double validate_row(double eta, double delta, const DiracBasis& basis,
                           double splitting, const std::string& where) {
    const double numeric =
        splitting_numeric(NaturalParams(eta, 0.0, delta), basis);
    if (!(std::abs(numeric - splitting) < 1e-10)) {
        throw OracleMismatch("analytic/numeric splitting disagreement at " +
                             where + ": analytic " +
                             std::to_string(splitting) + ", numeric " +
                             std::to_string(numeric));
    }
    return numeric;
}

}  // namespace detail

/// Splitting vs delta, one series per velocity, in the given velocity
/// order with delta ascending inside each series. With validate, every
/// row is cross-checked against the eigensolver (mismatch aborts).
inline std::vector<SweepRow> sweep_delta(const std::vector<double>& velocities,
                                         const Grid& deltas, EtaMode eta_mode,
                                         double pi_tilde, bool validate) {
    for (const double v : velocities) {
        detail::check_velocity_range(v);
    }
    detail::check_delta_nonnegative(deltas.start());
    if (velocities.empty()) {
        throw InvalidArgument("sweep requires at least one velocity");
    }

    const DiracBasis basis = standard_basis();
    std::vector<SweepRow> rows;
    rows.reserve(velocities.size() *
                 static_cast<size_t>(deltas.count()));
    for (const double v : velocities) {
        const Kinematics k = kinematics_of(v);
        const double eta = eta_of_velocity(k, pi_tilde, eta_mode);
        for (int i = 0; i < deltas.count(); ++i) {
            const double delta = deltas.point(i);
            SweepRow row;
            row.series_label = v;
            row.swept_value = delta;
            row.splitting = spin_splitting(eta, delta);
            if (validate) {
                row.splitting_numeric = detail::validate_row(
                    eta, delta, basis, row.splitting,
                    "(v = " + std::to_string(v) + ", delta = " +
                        std::to_string(delta) + ")");
            }
            rows.push_back(row);
        }
    }
    return rows;
}

/// Splitting vs velocity, one series per delta, with the low- and
/// high-speed approximations attached wherever their guards admit the
/// point. Series are non-increasing in v; strictly decreasing for
/// delta > 0.
inline std::vector<SweepRow> sweep_velocity(const std::vector<double>& deltas,
                                            const Grid& velocities,
                                            EtaMode eta_mode, double pi_tilde,
                                            bool validate) {
    for (const double d : deltas) {
        detail::check_delta_nonnegative(d);
    }
    detail::check_velocity_range(velocities.start());
    detail::check_velocity_range(velocities.stop());
    if (deltas.empty()) {
        throw InvalidArgument("sweep requires at least one delta");
    }

    const DiracBasis basis = standard_basis();
    std::vector<SweepRow> rows;
    rows.reserve(deltas.size() * static_cast<size_t>(velocities.count()));
    for (const double delta : deltas) {
        for (int i = 0; i < velocities.count(); ++i) {
            const double v = velocities.point(i);
            const Kinematics k = kinematics_of(v);
            const double eta = eta_of_velocity(k, pi_tilde, eta_mode);
            SweepRow row;
            row.series_label = delta;
            row.swept_value = v;
            row.splitting = spin_splitting(eta, delta);
            if (validate) {
                row.splitting_numeric = detail::validate_row(
                    eta, delta, basis, row.splitting,
                    "(delta = " + std::to_string(delta) + ", v = " +
                        std::to_string(v) + ")");
            }
            try {
                row.lowspeed_approx = splitting_lowspeed(eta, delta);
            } catch (const SingularExpansion&) {
            } catch (const OutsideExpansionDomain&) {
            }
            try {
                row.highspeed_approx = splitting_highspeed(eta, delta);
            } catch (const OutsideExpansionDomain&) {
            }
            rows.push_back(row);
        }
    }
    return rows;
}

/// One Doppler comparison row: the motional ratio next to both classical
/// reference shifts.
struct DopplerRow {
    double v;
    double motional_ratio;
    double nonrel_doppler;
    double rel_doppler;
};

struct DopplerResult {
    std::vector<DopplerRow> rows;
    long dropped = 0;  ///< grid points outside the low-speed guard
};

/// Motional red shift vs the two Doppler references over a velocity grid.
/// Points outside the low-speed validity guard are dropped and counted,
/// not erred on; a delta on the singular line |delta| = 1 still throws.
inline DopplerResult doppler_compare(const Grid& velocities, double delta) {
    detail::check_velocity_range(velocities.start());
    detail::check_velocity_range(velocities.stop());

    DopplerResult result;
    result.rows.reserve(static_cast<size_t>(velocities.count()));
    for (int i = 0; i < velocities.count(); ++i) {
        const double v = velocities.point(i);
        DopplerRow row;
        row.v = v;
        try {
            row.motional_ratio = larmor_redshift(v, delta).ratio;
        } catch (const OutsideExpansionDomain&) {
            ++result.dropped;
            continue;
        }
        const DopplerReference ref = doppler_reference(v);
        row.nonrel_doppler = ref.nonrel;
        row.rel_doppler = ref.rel;
        result.rows.push_back(row);
    }
    return result;
}

}  // namespace larmor
