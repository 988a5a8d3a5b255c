#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "padic/modular.hpp"

namespace padic {

/**
 * A 3x3 matrix over Z/p^k, stored row-major as canonical residues.
 * All nine entries share one modulus.
 */
class Mat3 {
 public:
  Mat3() = default;
  explicit Mat3(Modulus mod) : mod_(mod) {}  // zero matrix

  static Mat3 identity(Modulus mod) {
    Mat3 r(mod);
    r.e_[0] = r.e_[4] = r.e_[8] = 1 % mod.m;
    return r;
  }

  static Mat3 from_rows(Modulus mod, const std::array<std::array<int64_t, 3>, 3>& rows) {
    Mat3 r(mod);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.e_[i * 3 + j] = reduce_signed(rows[i][j], mod.m);
    return r;
  }

  const Modulus& modulus() const { return mod_; }

  uint64_t at(int r, int c) const { return e_[r * 3 + c]; }
  ModInt entry(int r, int c) const { return ModInt(static_cast<int64_t>(at(r, c)), mod_); }
  void set(int r, int c, uint64_t canonical) { e_[r * 3 + c] = canonical % mod_.m; }
  void set_int(int r, int c, int64_t v) { e_[r * 3 + c] = reduce_signed(v, mod_.m); }

  Mat3 operator*(const Mat3& o) const {
    if (!(mod_ == o.mod_)) throw ModulusMismatch("mixed moduli in Mat3 product");
    const uint64_t m = mod_.m;
    Mat3 r(mod_);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        uint64_t s = 0;
        for (int l = 0; l < 3; ++l) s = addm(s, mulm(at(i, l), o.at(l, j), m), m);
        r.e_[i * 3 + j] = s;
      }
    return r;
  }

  Mat3 transpose() const {
    Mat3 r(mod_);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.e_[i * 3 + j] = at(j, i);
    return r;
  }

  uint64_t det() const {
    const uint64_t m = mod_.m;
    uint64_t d = 0;
    d = addm(d, mulm(at(0, 0), subm(mulm(at(1, 1), at(2, 2), m), mulm(at(1, 2), at(2, 1), m), m), m), m);
    d = subm(d, mulm(at(0, 1), subm(mulm(at(1, 0), at(2, 2), m), mulm(at(1, 2), at(2, 0), m), m), m), m);
    d = addm(d, mulm(at(0, 2), subm(mulm(at(1, 0), at(2, 1), m), mulm(at(1, 1), at(2, 0), m), m), m), m);
    return d;
  }

  /// Adjugate divided by the determinant; throws NotAUnit when det is not a unit.
  Mat3 inverse() const;

  bool operator==(const Mat3& o) const { return mod_ == o.mod_ && e_ == o.e_; }

  const std::array<uint64_t, 9>& raw() const { return e_; }

  /// Rows with signed representatives, e.g. "[[0,-1,0],[1,0,0],[0,0,1]]".
  std::string str() const;

 private:
  Modulus mod_;
  std::array<uint64_t, 9> e_{};
};

struct Mat3Hash {
  size_t operator()(const std::array<uint64_t, 9>& a) const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (uint64_t x : a) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace padic
