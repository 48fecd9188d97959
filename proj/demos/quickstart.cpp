// Copyright (c) 2026 the larmor developers.
// SPDX-License-Identifier: Apache-2.0

// Minimal tour of the library: the saturation of the splitting at 2 mc^2,
// its decrease with velocity, and the agreement between the closed-form
// levels and the independent eigensolver.

#include <cstdio>

#include "larmor/larmor.hpp"

int main() {
    using namespace larmor;

    std::printf("splitting at rest (units mc^2):\n");
    for (const double delta : {0.25, 0.5, 1.0, 2.0, 10.0}) {
        std::printf("  delta = %5.2f  ->  %.12f\n", delta,
                    spin_splitting(0.0, delta));
    }

    std::printf("\nmotional narrowing at delta = 0.5:\n");
    for (const double v : {0.0, 0.2, 0.5, 0.8, 0.99}) {
        const Kinematics k = kinematics_of(v);
        std::printf("  v = %4.2f  ->  %.12f\n", v,
                    spin_splitting(k.p_tilde, 0.5));
    }

    const NaturalParams np(1.0, 0.3, 0.7);
    const DiracBasis basis = standard_basis();
    const EigenSystem es = diagonalize(build_hamiltonian(np));
    const auto analytic = eigenvalues_analytic(np.eta(), np.delta());
    std::printf("\nclosed form vs eigensolver at (p, pi, delta) = "
                "(1, 0.3, 0.7):\n");
    const auto sorted = analytic.ascending();
    for (int i = 0; i < 4; ++i) {
        std::printf("  %+.12f  vs  %+.12f\n", sorted[i], es.eigenvalues[i]);
    }
    std::printf("  numeric splitting: %.12f\n", splitting_numeric(np, basis));

    const LimitBundle lim = relativistic_limits(1.0, {1.0, 1.0});
    std::printf("\nnatural-unit limits: max splitting %.1f, max frequency "
                "%.1f, min wavelength %.2f\n",
                lim.max_splitting, lim.max_larmor, lim.min_wavelength);
    return 0;
}
