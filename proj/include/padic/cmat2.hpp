#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace padic {

using complex_t = std::complex<double>;

/// A 2x2 complex matrix, row-major. Comparisons use the entrywise max modulus.
struct ComplexMat2 {
  std::array<complex_t, 4> e{};

  static ComplexMat2 identity() { return {{1.0, 0.0, 0.0, 1.0}}; }

  complex_t at(int r, int c) const { return e[r * 2 + c]; }

  ComplexMat2 operator*(const ComplexMat2& o) const {
    return {{e[0] * o.e[0] + e[1] * o.e[2], e[0] * o.e[1] + e[1] * o.e[3],
             e[2] * o.e[0] + e[3] * o.e[2], e[2] * o.e[1] + e[3] * o.e[3]}};
  }
  ComplexMat2 operator-(const ComplexMat2& o) const {
    return {{e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2], e[3] - o.e[3]}};
  }

  ComplexMat2 adjoint() const {
    return {{std::conj(e[0]), std::conj(e[2]), std::conj(e[1]), std::conj(e[3])}};
  }

  complex_t det() const { return e[0] * e[3] - e[1] * e[2]; }

  ComplexMat2 inverse() const {
    const complex_t d = det();
    return {{e[3] / d, -e[1] / d, -e[2] / d, e[0] / d}};
  }

  double norm_inf() const {
    double m = 0;
    for (const auto& z : e) m = std::max(m, std::abs(z));
    return m;
  }
};

inline double distance(const ComplexMat2& a, const ComplexMat2& b) { return (a - b).norm_inf(); }

inline bool approx_equal(const ComplexMat2& a, const ComplexMat2& b, double tol = 1e-9) {
  return distance(a, b) <= tol;
}

/// Deviation from unitarity, max over ||U* U - I||.
inline double nonunitarity(const ComplexMat2& u) {
  return distance(u.adjoint() * u, ComplexMat2::identity());
}

/// Principal square root of a Hermitian positive-definite 2x2 matrix.
ComplexMat2 hermitian_sqrt(const ComplexMat2& P);

}  // namespace padic
