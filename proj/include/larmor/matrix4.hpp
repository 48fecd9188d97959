// Copyright (c) 2026 the larmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace larmor {

/// Dense complex 4x4 matrix. Value semantics, aggregate storage; all
/// arithmetic the spectrum work needs and nothing more.
struct ComplexMatrix4 {
    using Complex = std::complex<double>;
    std::array<std::array<Complex, 4>, 4> m{};

    Complex& operator()(int row, int col) { return m[row][col]; }
    const Complex& operator()(int row, int col) const { return m[row][col]; }

    static ComplexMatrix4 zero() { return ComplexMatrix4{}; }

    static ComplexMatrix4 identity() {
        ComplexMatrix4 r;
        for (int i = 0; i < 4; ++i) {
            r(i, i) = 1.0;
        }
        return r;
    }

    ComplexMatrix4 adjoint() const {
        ComplexMatrix4 r;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                r(i, j) = std::conj(m[j][i]);
            }
        }
        return r;
    }

    Complex trace() const { return m[0][0] + m[1][1] + m[2][2] + m[3][3]; }
};

inline ComplexMatrix4 operator+(const ComplexMatrix4& a,
                                const ComplexMatrix4& b) {
    ComplexMatrix4 r;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            r(i, j) = a(i, j) + b(i, j);
        }
    }
    return r;
}

inline ComplexMatrix4 operator-(const ComplexMatrix4& a,
                                const ComplexMatrix4& b) {
    ComplexMatrix4 r;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            r(i, j) = a(i, j) - b(i, j);
        }
    }
    return r;
}

inline ComplexMatrix4 operator*(ComplexMatrix4::Complex s,
                                const ComplexMatrix4& a) {
    ComplexMatrix4 r;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            r(i, j) = s * a(i, j);
        }
    }
    return r;
}

inline ComplexMatrix4 operator*(const ComplexMatrix4& a,
                                const ComplexMatrix4& b) {
    ComplexMatrix4 r;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            ComplexMatrix4::Complex acc = 0.0;
            for (int k = 0; k < 4; ++k) {
                acc += a(i, k) * b(k, j);
            }
            r(i, j) = acc;
        }
    }
    return r;
}

/// Largest entrywise magnitude, the max norm used by the algebra tests.
inline double max_abs(const ComplexMatrix4& a) {
    double best = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            best = std::max(best, std::abs(a(i, j)));
        }
    }
    return best;
}

/// Frobenius norm sqrt(sum |a_ij|^2).
inline double frobenius_norm(const ComplexMatrix4& a) {
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            sum += std::norm(a(i, j));
        }
    }
    return std::sqrt(sum);
}

/// Complex 4-vector companion of ComplexMatrix4.
using Vector4 = std::array<std::complex<double>, 4>;

inline Vector4 mat_vec(const ComplexMatrix4& a, const Vector4& x) {
    Vector4 y{};
    for (int i = 0; i < 4; ++i) {
        std::complex<double> acc = 0.0;
        for (int j = 0; j < 4; ++j) {
            acc += a(i, j) * x[j];
        }
        y[i] = acc;
    }
    return y;
}

/// Inner product conjugate-linear in the first argument.
inline std::complex<double> inner_product(const Vector4& a, const Vector4& b) {
    std::complex<double> acc = 0.0;
    for (int i = 0; i < 4; ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

inline double vec_norm(const Vector4& a) {
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
        sum += std::norm(a[i]);
    }
    return std::sqrt(sum);
}

/// Max entrywise magnitude of (M - M^dagger)/2; zero iff M is Hermitian.
inline double hermiticity_defect(const ComplexMatrix4& m) {
    double best = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const ComplexMatrix4::Complex d =
                0.5 * (m(i, j) - std::conj(m(j, i)));
            best = std::max(best, std::abs(d));
        }
    }
    return best;
}

}  // namespace larmor
