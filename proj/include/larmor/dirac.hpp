// Copyright (c) 2026 the larmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>

#include "larmor/errors.hpp"
#include "larmor/matrix4.hpp"
#include "larmor/quantities.hpp"

namespace larmor {

/// The three matrices the Hamiltonian is built from, in the standard
/// (Dirac) representation:
///
///   beta  = diag(+1, +1, -1, -1)
///   alpha_x = antidiagonal sigma_x blocks
///   Sigma_x = diagonal sigma_x blocks (twice the spin operator S_x)
///
/// All are Hermitian, square to the identity, alpha_x anticommutes with
/// beta, and Sigma_x commutes with both.
struct DiracBasis {
    ComplexMatrix4 alpha_x;
    ComplexMatrix4 beta;
    ComplexMatrix4 sigma_x_big;
};

inline DiracBasis standard_basis() {
    DiracBasis b;
    b.beta(0, 0) = 1.0;
    b.beta(1, 1) = 1.0;
    b.beta(2, 2) = -1.0;
    b.beta(3, 3) = -1.0;
    b.alpha_x(0, 3) = 1.0;
    b.alpha_x(1, 2) = 1.0;
    b.alpha_x(2, 1) = 1.0;
    b.alpha_x(3, 0) = 1.0;
    b.sigma_x_big(0, 1) = 1.0;
    b.sigma_x_big(1, 0) = 1.0;
    b.sigma_x_big(2, 3) = 1.0;
    b.sigma_x_big(3, 2) = 1.0;
    return b;
}

/// Hamiltonian in natural units (mc^2 = 1):
///
///   H = p alpha_x + beta + pi (i beta alpha_x) + delta (beta Sigma_x)
///
/// The moment terms of the SI Hamiltonian collect exactly into the pi and
/// delta groups, so this form is algebraically identical to building it
/// term by term from (d, mu, E, B). Entries are written directly; the
/// construction is Hermitian by symmetry of the writes, not by tolerance.
inline ComplexMatrix4 build_hamiltonian(const NaturalParams& np) {
    const std::complex<double> off(np.p(), np.pi());
    ComplexMatrix4 h;
    h(0, 0) = 1.0;
    h(1, 1) = 1.0;
    h(2, 2) = -1.0;
    h(3, 3) = -1.0;
    h(0, 1) = np.delta();
    h(1, 0) = np.delta();
    h(2, 3) = -np.delta();
    h(3, 2) = -np.delta();
    h(0, 3) = off;
    h(3, 0) = std::conj(off);
    h(1, 2) = off;
    h(2, 1) = std::conj(off);
    return h;
}

}  // namespace larmor
