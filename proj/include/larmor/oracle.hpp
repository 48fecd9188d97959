// Copyright (c) 2026 the larmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "larmor/dirac.hpp"
#include "larmor/errors.hpp"
#include "larmor/matrix4.hpp"
#include "larmor/quantities.hpp"

// Independent numerical diagonalization of the 4x4 Hamiltonian. Nothing
// here uses the closed-form eigenvalues; agreement between the two paths
// is what the test suite certifies.

namespace larmor {

/// Result of a numerical diagonalization: eigenvalues ascending,
/// eigenvectors[j] paired with eigenvalues[j], and the worst-column
/// residual max_j ||H v_j - lambda_j v_j|| against the input matrix.
struct EigenSystem {
    std::array<double, 4> eigenvalues;
    std::array<Vector4, 4> eigenvectors;
    double residual;
};

namespace detail {

inline double offdiag_frobenius(const ComplexMatrix4& a) {
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i != j) {
                sum += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(sum);
}

/// One two-sided rotation A <- U^dag A U, V <- V U on the (p, q) plane,
/// annihilating A[p][q]. The phase of A[p][q] is absorbed into the
/// rotation, reducing to the classic real Jacobi angle choice. Writes the
/// zeroed pair and real diagonal explicitly so the iterate stays exactly
/// Hermitian.
inline void jacobi_rotate(ComplexMatrix4& a, ComplexMatrix4& v, int p,
                          int q) {
    const std::complex<double> b = a(p, q);
    const double r = std::abs(b);
    if (r == 0.0) {
        return;
    }
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * r);
    const double t =
        (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const std::complex<double> s = (t * c) * (b / r);

    for (int k = 0; k < 4; ++k) {
        const std::complex<double> akp = a(k, p);
        const std::complex<double> akq = a(k, q);
        a(k, p) = c * akp - std::conj(s) * akq;
        a(k, q) = s * akp + c * akq;
    }
    for (int k = 0; k < 4; ++k) {
        const std::complex<double> apk = a(p, k);
        const std::complex<double> aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = std::conj(s) * apk + c * aqk;
    }
    for (int k = 0; k < 4; ++k) {
        const std::complex<double> vkp = v(k, p);
        const std::complex<double> vkq = v(k, q);
        v(k, p) = c * vkp - std::conj(s) * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

/// Cyclic sweeps until the off-diagonal Frobenius norm falls to the
/// threshold. Diagonal inputs converge in zero sweeps; the sweep cap only
/// triggers on NaN poisoning, never on a finite Hermitian matrix.
inline void jacobi_iterate(ComplexMatrix4& a, ComplexMatrix4& v,
                           double threshold) {
    int sweeps = 0;
    while (offdiag_frobenius(a) > threshold) {
        if (++sweeps > 100) {
            throw NoConvergence(
                "Jacobi iteration did not converge within 100 sweeps");
        }
        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                jacobi_rotate(a, v, p, q);
            }
        }
    }
}

}  // namespace detail

/// Diagonalizes a Hermitian 4x4 matrix by cyclic complex Jacobi rotations.
/// Requires hermiticity_defect(h) < 1e-12; the working copy is symmetrized
/// exactly before iterating. The residual is measured against the input h.
inline EigenSystem diagonalize(const ComplexMatrix4& h) {
    const double defect = hermiticity_defect(h);
    if (!(defect < 1e-12)) {
        throw NotHermitian("matrix is not Hermitian: defect = " +
                           std::to_string(defect));
    }

    ComplexMatrix4 a;
    for (int i = 0; i < 4; ++i) {
        a(i, i) = h(i, i).real();
        for (int j = i + 1; j < 4; ++j) {
            const std::complex<double> mean =
                0.5 * (h(i, j) + std::conj(h(j, i)));
            a(i, j) = mean;
            a(j, i) = std::conj(mean);
        }
    }

    ComplexMatrix4 v = ComplexMatrix4::identity();
    detail::jacobi_iterate(a, v, 1e-14 * frobenius_norm(a));

    std::array<int, 4> order{0, 1, 2, 3};
    std::stable_sort(order.begin(), order.end(), [&a](int x, int y) {
        return a(x, x).real() < a(y, y).real();
    });

    EigenSystem es;
    for (int j = 0; j < 4; ++j) {
        es.eigenvalues[j] = a(order[j], order[j]).real();
        for (int k = 0; k < 4; ++k) {
            es.eigenvectors[j][k] = v(k, order[j]);
        }
    }

    double residual = 0.0;
    for (int j = 0; j < 4; ++j) {
        Vector4 r = mat_vec(h, es.eigenvectors[j]);
        for (int k = 0; k < 4; ++k) {
            r[k] -= es.eigenvalues[j] * es.eigenvectors[j][k];
        }
        residual = std::max(residual, vec_norm(r));
    }
    es.residual = residual;
    return es;
}

enum class Spin { up, down };
enum class Branch { plus, minus };

struct LabeledLevel {
    double energy;
    Branch branch;
    Spin spin;
    double sigma_x_expectation;  ///< in [-1, 1]; near +-1 after rotation
    Vector4 vector;              ///< the rotated eigenvector
};

/// The four levels in ascending energy order, each with branch and spin.
struct LabeledSpectrum {
    std::array<LabeledLevel, 4> entries;
};

/// Rotates each degenerate eigenvalue cluster so every vector becomes a
/// Sigma_x eigenvector, then labels spin by the sign of <Sigma_x> and
/// branch by energy within each spin pair (each spin occurs once per
/// branch, so the lower level of a spin pair is the negative branch; this
/// also settles the doubly degenerate zero-energy point by continuity).
/// tol < 0 selects the default clustering width 1e-9 (1 + max |lambda|).
inline LabeledSpectrum classify_spin(const EigenSystem& es,
                                     const DiracBasis& basis,
                                     double tol = -1.0) {
    const double scale = 1.0 + std::max(std::abs(es.eigenvalues[0]),
                                        std::abs(es.eigenvalues[3]));
    if (tol < 0.0) {
        tol = 1e-9 * scale;
    }

    std::array<Vector4, 4> rotated = es.eigenvectors;
    std::array<double, 4> energy = es.eigenvalues;
    int start = 0;
    while (start < 4) {
        int stop = start + 1;
        while (stop < 4 &&
               es.eigenvalues[stop] - es.eigenvalues[stop - 1] <= tol) {
            ++stop;
        }
        const int size = stop - start;
        if (size > 1) {
            // Project Sigma_x onto the cluster, forced exactly Hermitian.
            // Zero padding outside the block keeps the padded directions
            // decoupled from every rotation.
            ComplexMatrix4 sblk;
            for (int aa = 0; aa < size; ++aa) {
                const Vector4 sv =
                    mat_vec(basis.sigma_x_big, es.eigenvectors[start + aa]);
                for (int bb = aa; bb < size; ++bb) {
                    const std::complex<double> val =
                        inner_product(es.eigenvectors[start + bb], sv);
                    if (aa == bb) {
                        sblk(aa, aa) = val.real();
                    } else {
                        sblk(bb, aa) = val;
                        sblk(aa, bb) = std::conj(val);
                    }
                }
            }
            ComplexMatrix4 w = ComplexMatrix4::identity();
            detail::jacobi_iterate(sblk, w, 1e-14 * frobenius_norm(sblk));
            for (int j = 0; j < size; ++j) {
                Vector4 u{};
                // Mixing within a cluster also mixes its eigenvalues; the
                // rotated vector's energy is its expectation of H, which in
                // the cluster's eigenbasis is the |W|^2-weighted mean.
                double e = 0.0;
                for (int aa = 0; aa < size; ++aa) {
                    for (int k = 0; k < 4; ++k) {
                        u[k] += w(aa, j) * es.eigenvectors[start + aa][k];
                    }
                    e += std::norm(w(aa, j)) * es.eigenvalues[start + aa];
                }
                rotated[start + j] = u;
                energy[start + j] = e;
            }
        }
        start = stop;
    }

    std::array<int, 4> order{0, 1, 2, 3};
    std::stable_sort(order.begin(), order.end(), [&energy](int x, int y) {
        return energy[x] < energy[y];
    });

    std::array<double, 4> expectation;
    for (int j = 0; j < 4; ++j) {
        const Vector4& u = rotated[order[j]];
        expectation[j] =
            inner_product(u, mat_vec(basis.sigma_x_big, u)).real();
        if (std::abs(expectation[j]) < 1.0 - 1e-6) {
            throw AmbiguousLabeling(
                "post-rotation |<Sigma_x>| = " +
                std::to_string(std::abs(expectation[j])) +
                " is too far from 1 to assign a spin label");
        }
    }

    LabeledSpectrum ls;
    for (int spin_case = 0; spin_case < 2; ++spin_case) {
        const bool want_up = (spin_case == 0);
        std::array<int, 4> members{};
        int count = 0;
        for (int j = 0; j < 4; ++j) {
            if ((expectation[j] > 0.0) == want_up) {
                members[count++] = j;
            }
        }
        if (count != 2) {
            throw AmbiguousLabeling(
                "expected exactly two levels per spin orientation, got " +
                std::to_string(count));
        }
        for (int k = 0; k < 2; ++k) {
            const int j = members[k];
            ls.entries[j] = LabeledLevel{
                energy[order[j]], k == 0 ? Branch::minus : Branch::plus,
                want_up ? Spin::up : Spin::down, expectation[j],
                rotated[order[j]]};
        }
    }
    return ls;
}

/// Positive-branch splitting E(+,up) - E(+,down) obtained entirely through
/// the numerical path: build, diagonalize, classify.
inline double splitting_numeric(const NaturalParams& np,
                                const DiracBasis& basis) {
    const EigenSystem es = diagonalize(build_hamiltonian(np));
    const LabeledSpectrum ls = classify_spin(es, basis);
    double e_up = 0.0;
    double e_down = 0.0;
    for (const LabeledLevel& level : ls.entries) {
        if (level.branch == Branch::plus) {
            if (level.spin == Spin::up) {
                e_up = level.energy;
            } else {
                e_down = level.energy;
            }
        }
    }
    return e_up - e_down;
}

}  // namespace larmor
