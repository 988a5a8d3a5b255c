#include "padic/cmat2.hpp"

namespace padic {

ComplexMat2 hermitian_sqrt(const ComplexMat2& P) {
  const double a = P.e[0].real();
  const double c = P.e[3].real();
  const complex_t b = P.e[1];  // P = [[a, b], [conj(b), c]]
  const double babs = std::abs(b);
  if (babs < 1e-15) {
    return {{std::sqrt(a), 0.0, 0.0, std::sqrt(c)}};
  }
  const double tr = a + c;
  const double disc = std::sqrt((a - c) * (a - c) + 4.0 * babs * babs);
  const double l1 = (tr + disc) / 2.0;
  const double l2 = (tr - disc) / 2.0;
  // eigenvector for l1: (b, l1 - a), normalized; the second is its orthogonal complement
  complex_t v1 = b, v2 = complex_t(l1 - a, 0.0);
  const double n = std::sqrt(std::norm(v1) + std::norm(v2));
  v1 /= n;
  v2 /= n;
  const complex_t w1 = -std::conj(v2), w2 = std::conj(v1);
  const double s1 = std::sqrt(l1), s2 = std::sqrt(l2);
  ComplexMat2 out;
  out.e[0] = s1 * v1 * std::conj(v1) + s2 * w1 * std::conj(w1);
  out.e[1] = s1 * v1 * std::conj(v2) + s2 * w1 * std::conj(w2);
  out.e[2] = s1 * v2 * std::conj(v1) + s2 * w2 * std::conj(w1);
  out.e[3] = s1 * v2 * std::conj(v2) + s2 * w2 * std::conj(w2);
  return out;
}

}  // namespace padic
