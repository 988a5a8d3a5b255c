#include "padic/mat3.hpp"

namespace padic {

Mat3 Mat3::inverse() const {
  const uint64_t m = mod_.m;
  const uint64_t dinv = inv_mod(det(), m);
  auto cof2 = [&](int r0, int c0, int r1, int c1) {
    return subm(mulm(at(r0, c0), at(r1, c1), m), mulm(at(r0, c1), at(r1, c0), m), m);
  };
  Mat3 out(mod_);
  // adjugate: out(j,i) = (-1)^{i+j} * minor(i,j)
  static constexpr int rsel[3][2] = {{1, 2}, {0, 2}, {0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      uint64_t c = cof2(rsel[i][0], rsel[j][0], rsel[i][1], rsel[j][1]);
      if ((i + j) & 1) c = subm(0, c, m);
      out.set(j, i, mulm(c, dinv, m));
    }
  return out;
}

std::string Mat3::str() const {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += "[";
    for (int j = 0; j < 3; ++j) {
      s += entry(i, j).str();
      if (j < 2) s += ",";
    }
    s += i < 2 ? "]," : "]";
  }
  return s + "]";
}

}  // namespace padic
