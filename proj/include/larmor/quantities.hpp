// Copyright (c) 2026 the larmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "larmor/errors.hpp"

namespace larmor {

/// Physical constants in SI units. Values come from the shipped registry
/// file, never from literals in core math.
struct PhysicalConstants {
    double c;     ///< speed of light, m/s
    double hbar;  ///< reduced Planck constant, J s
};

/// Dimensionless parameters of the collinear-field problem, with energies
/// in units of the rest energy mc^2 and momenta in units of mc:
///
///   p_tilde     kinetic momentum p / (m c)
///   pi_tilde    cross coupling (d B + mu E / c^2) / (m c)
///   delta_tilde interaction energy (d E - mu B) / (m c^2)
///   eta_tilde   hypot(p_tilde, pi_tilde)
///
/// eta and delta fix the four-level spectrum completely; p and pi enter
/// only through eta.
class NaturalParams {
public:
    NaturalParams(double p_tilde, double pi_tilde, double delta_tilde)
        : p_(p_tilde), pi_(pi_tilde), delta_(delta_tilde) {
        detail::require_finite(p_, "p_tilde");
        detail::require_finite(pi_, "pi_tilde");
        detail::require_finite(delta_, "delta_tilde");
        eta_ = std::hypot(p_, pi_);
    }

    double p() const { return p_; }
    double pi() const { return pi_; }
    double delta() const { return delta_; }
    double eta() const { return eta_; }

private:
    double p_;
    double pi_;
    double delta_;
    double eta_;
};

/// The four exact levels E/mc^2 = +-sqrt(eta^2 + (1 +- delta)^2), labeled
/// by branch (sign of energy) and spin projection along the field axis,
/// plus the positive-branch splitting.
struct SpectrumResult {
    double e_plus_up;     ///< +sqrt(eta^2 + (1 + delta)^2)
    double e_plus_down;   ///< +sqrt(eta^2 + (1 - delta)^2)
    double e_minus_up;    ///< -e_plus_up
    double e_minus_down;  ///< -e_plus_down
    double splitting;     ///< e_plus_up - e_plus_down, stable evaluation

    std::array<double, 4> ascending() const {
        std::array<double, 4> v{e_minus_up, e_minus_down, e_plus_down,
                                e_plus_up};
        std::sort(v.begin(), v.end());
        return v;
    }
};

namespace detail {

inline void require_eta(double eta) {
    require_finite(eta, "eta_tilde");
    if (eta < 0.0) {
        throw InvalidArgument("eta_tilde must be non-negative, got " +
                              std::to_string(eta));
    }
}

/// Direct difference of the two positive levels. Loses relative accuracy
/// once eta dominates, where the two square roots nearly cancel.
inline double splitting_direct(double eta, double delta) {
    return std::hypot(eta, 1.0 + delta) - std::hypot(eta, 1.0 - delta);
}

/// Cancellation-free rewrite, multiplying by the conjugate sum:
/// (eta^2 + (1+d)^2) - (eta^2 + (1-d)^2) = 4 d.
inline double splitting_conjugate(double eta, double delta) {
    const double up = std::hypot(eta, 1.0 + delta);
    const double down = std::hypot(eta, 1.0 - delta);
    return 4.0 * delta / (up + down);
}

}  // namespace detail

/// Splitting at eta = 0: |1 + delta| - |1 - delta|. Equals 2 delta for
/// |delta| < 1 and saturates at sign(delta) * 2 on the plateau |delta| >= 1.
inline double splitting_at_rest(double delta) {
    detail::require_finite(delta, "delta_tilde");
    return std::abs(1.0 + delta) - std::abs(1.0 - delta);
}

/// Spin splitting Delta = E(+,up) - E(+,down) in units of mc^2. Exact for
/// all eta >= 0 and any delta; odd in delta; |Delta| <= 2 with equality
/// only at eta = 0, |delta| >= 1. Switches to a conjugate-sum form where
/// the direct difference would cancel catastrophically.
inline double spin_splitting(double eta, double delta) {
    detail::require_eta(eta);
    detail::require_finite(delta, "delta_tilde");
    if (eta == 0.0) {
        return splitting_at_rest(delta);
    }
    if (eta > 10.0 * (1.0 + std::abs(delta))) {
        return detail::splitting_conjugate(eta, delta);
    }
    return detail::splitting_direct(eta, delta);
}

/// All four levels plus the splitting. The splitting field is computed by
/// spin_splitting, so it is bitwise identical to that function's value.
inline SpectrumResult eigenvalues_analytic(double eta, double delta) {
    detail::require_eta(eta);
    detail::require_finite(delta, "delta_tilde");
    SpectrumResult s;
    s.e_plus_up = std::hypot(eta, 1.0 + delta);
    s.e_plus_down = std::hypot(eta, 1.0 - delta);
    s.e_minus_up = -s.e_plus_up;
    s.e_minus_down = -s.e_plus_down;
    s.splitting = spin_splitting(eta, delta);
    return s;
}

/// Full-dimensional splitting in joules: arguments cp, c pi, delta, and the
/// rest energy mc^2 all in joules. A massless particle has exactly zero
/// splitting whatever the fields and momentum.
inline double spin_splitting_si(double cp, double cpi, double delta,
                                double rest_energy) {
    detail::require_finite(cp, "cp");
    detail::require_finite(cpi, "cpi");
    detail::require_finite(delta, "delta");
    detail::require_finite(rest_energy, "rest_energy");
    if (rest_energy < 0.0) {
        throw InvalidArgument("rest_energy must be non-negative, got " +
                              std::to_string(rest_energy));
    }
    if (rest_energy == 0.0) {
        return 0.0;
    }
    const double eta = std::hypot(cp, cpi);
    return rest_energy *
           spin_splitting(eta / rest_energy, delta / rest_energy);
}

/// Nonrelativistic reference splitting 2 (d E - mu B), in joules.
inline double splitting_nonrel(double edm, double mdm, double e_field,
                               double b_field) {
    detail::require_finite(edm, "edm");
    detail::require_finite(mdm, "mdm");
    detail::require_finite(e_field, "e_field");
    detail::require_finite(b_field, "b_field");
    return 2.0 * (edm * e_field - mdm * b_field);
}

/// d(Delta)/d(eta) at fixed delta, from the closed form
///   d(Delta)/d(eta) = -(eta / (E_up E_down)) * Delta.
/// Nonpositive for delta >= 0: motion along the field always narrows the
/// splitting. Singular only where a level reaches zero (eta=0, |delta|=1).
inline double splitting_derivative(double eta, double delta) {
    const SpectrumResult s = eigenvalues_analytic(eta, delta);
    const double denom = s.e_plus_up * s.e_plus_down;
    if (denom == 0.0) {
        throw SingularPoint(
            "splitting derivative undefined at eta_tilde = 0, |delta_tilde| "
            "= 1");
    }
    return -(eta / denom) * s.splitting;
}

namespace detail {

/// Shared core of the low-speed expansion and the red-shift ratio:
/// 1 - eta^2 / (2 |1 - delta^2|), with the validity guard
/// eta^2 < 0.1 (1 - |delta|)^2 keeping the quartic remainder small on
/// both sides of |delta| = 1.
inline double lowspeed_factor(double eta, double delta) {
    require_eta(eta);
    require_finite(delta, "delta_tilde");
    if (std::abs(delta) == 1.0) {
        throw SingularExpansion(
            "low-speed expansion is singular at |delta_tilde| = 1");
    }
    const double margin = 1.0 - std::abs(delta);
    if (!(eta * eta < 0.1 * margin * margin)) {
        throw OutsideExpansionDomain(
            "low-speed expansion requires eta_tilde^2 < 0.1 (1 - "
            "|delta_tilde|)^2");
    }
    const double denom = std::abs((1.0 - delta) * (1.0 + delta));
    return 1.0 - eta * eta / (2.0 * denom);
}

}  // namespace detail

/// Low-speed expansion Delta ~ Delta_0 (1 - eta^2 / (2 |1 - delta^2|)),
/// with Delta_0 = splitting_at_rest(delta). Remainder O(eta^4).
inline double splitting_lowspeed(double eta, double delta) {
    const double factor = detail::lowspeed_factor(eta, delta);
    return splitting_at_rest(delta) * factor;
}

/// High-speed expansion Delta ~ 2 delta / eta, valid once eta dominates
/// both the rest energy and the interaction energy. Remainder O(eta^-3).
inline double splitting_highspeed(double eta, double delta) {
    detail::require_finite(eta, "eta_tilde");
    detail::require_finite(delta, "delta_tilde");
    if (!(eta > std::max(10.0, 10.0 * std::abs(delta)))) {
        throw OutsideExpansionDomain(
            "high-speed expansion requires eta_tilde > max(10, 10 "
            "|delta_tilde|)");
    }
    return 2.0 * delta / eta;
}

/// Velocity, Lorentz factor, and momentum of a free particle.
struct Kinematics {
    double velocity;  ///< fraction of c, in (-1, 1)
    double gamma;     ///< 1 / sqrt(1 - v^2)
    double p_tilde;   ///< gamma * v, momentum in units mc
};

inline Kinematics kinematics_of(double velocity) {
    detail::require_finite(velocity, "velocity");
    if (std::abs(velocity) >= 1.0) {
        throw SuperluminalVelocity("|velocity| must be < 1, got " +
                                   std::to_string(velocity));
    }
    Kinematics k;
    k.velocity = velocity;
    // (1-v)(1+v) keeps relative accuracy near |v| = 1, unlike 1 - v^2.
    k.gamma = 1.0 / std::sqrt((1.0 - velocity) * (1.0 + velocity));
    k.p_tilde = k.gamma * velocity;
    return k;
}

/// How eta is obtained from kinematics: exact folds in the cross coupling
/// pi, approx uses eta = cp (exact when pi = 0).
enum class EtaMode { exact, approx };

inline double eta_of_velocity(const Kinematics& k, double pi_tilde,
                              EtaMode mode) {
    detail::require_finite(pi_tilde, "pi_tilde");
    if (mode == EtaMode::exact) {
        return std::hypot(k.p_tilde, pi_tilde);
    }
    return k.p_tilde;
}

/// Ratio and shift of the precession frequency for a particle moving at
/// speed v along the field, relative to the same particle at rest.
struct RedShiftResult {
    double ratio;  ///< omega(v) / omega(0), <= 1 in the validity domain
    double shift;  ///< ratio - 1
};

/// Motional red shift of the precession frequency to leading order in v:
/// ratio = 1 - (gamma v)^2 / (2 |1 - delta^2|), using eta = gamma v.
/// Shares its guard and its arithmetic with splitting_lowspeed, so the
/// identity ratio = splitting_lowspeed / splitting_at_rest holds to
/// rounding error.
inline RedShiftResult larmor_redshift(double velocity, double delta) {
    const Kinematics k = kinematics_of(velocity);
    const double factor =
        detail::lowspeed_factor(std::abs(k.p_tilde), delta);
    return RedShiftResult{factor, factor - 1.0};
}

/// Longitudinal Doppler factors for a receding source, for contrast with
/// the motional red shift: the Doppler shifts are linear in v, the
/// motional shift quadratic.
struct DopplerReference {
    double nonrel;  ///< 1 - v
    double rel;     ///< gamma (1 - v) = sqrt((1 - v)/(1 + v))
};

inline DopplerReference doppler_reference(double velocity) {
    const Kinematics k = kinematics_of(velocity);
    DopplerReference d;
    d.nonrel = 1.0 - velocity;
    d.rel = k.gamma * d.nonrel;
    return d;
}

/// Hard limits of the model for a particle of mass m: splitting bound
/// 2 m c^2, precession frequency bound 2 m c^2 / hbar, and the shortest
/// emittable (reduced) wavelength c / omega_max = hbar / (2 m c), half
/// the reduced Compton wavelength.
struct LimitBundle {
    double max_splitting;   ///< J (or mc^2 = 1 units when m = c = hbar = 1)
    double max_larmor;      ///< rad/s
    double min_wavelength;  ///< m
};

inline LimitBundle relativistic_limits(double mass,
                                       const PhysicalConstants& constants) {
    detail::require_finite(mass, "mass");
    detail::require_finite(constants.c, "c");
    detail::require_finite(constants.hbar, "hbar");
    if (mass <= 0.0) {
        throw NonPositiveMass("mass must be positive, got " +
                              std::to_string(mass));
    }
    if (constants.c <= 0.0 || constants.hbar <= 0.0) {
        throw InvalidArgument("constants c and hbar must be positive");
    }
    LimitBundle lim;
    lim.max_splitting = 2.0 * mass * constants.c * constants.c;
    lim.max_larmor = lim.max_splitting / constants.hbar;
    lim.min_wavelength = constants.c / lim.max_larmor;
    return lim;
}

}  // namespace larmor
