#pragma once

#include <cstdint>
#include <string>

#include "padic/errors.hpp"

namespace padic {

/// Deterministic primality check by trial division (moduli here are small).
bool is_prime(uint64_t n);

/**
 * A prime-power modulus p^k.
 *
 * The cached value m = p^k is capped at 2^32 - 1 so that any product of two
 * canonical residues fits in a 64-bit word; all arithmetic stays exact
 * without bignums.
 */
struct Modulus {
  uint32_t p = 0;
  uint32_t k = 0;
  uint64_t m = 0;

  static Modulus make(uint32_t p, uint32_t k);

  bool operator==(const Modulus&) const = default;
};

// Raw residue helpers. Arguments must already be canonical (< m).
inline uint64_t addm(uint64_t a, uint64_t b, uint64_t m) {
  uint64_t s = a + b;
  return s >= m ? s - m : s;
}
inline uint64_t subm(uint64_t a, uint64_t b, uint64_t m) {
  return a >= b ? a - b : a + m - b;
}
inline uint64_t mulm(uint64_t a, uint64_t b, uint64_t m) {
  return (a * b) % m;  // safe: residues are < 2^32
}
uint64_t powm(uint64_t base, uint64_t exp, uint64_t m);

/// Inverse of a modulo m; throws NotAUnit when gcd(a, m) > 1.
uint64_t inv_mod(uint64_t a, uint64_t m);

/// Canonical residue of a signed integer.
inline uint64_t reduce_signed(int64_t x, uint64_t m) {
  int64_t r = x % static_cast<int64_t>(m);
  if (r < 0) r += static_cast<int64_t>(m);
  return static_cast<uint64_t>(r);
}

/**
 * An element of Z/p^k with its modulus attached.
 *
 * Values are kept canonical in [0, p^k). Arithmetic between elements with
 * different moduli throws ModulusMismatch. Immutable in practice: all
 * operations return fresh values, so ModInt is safe to share across threads.
 */
class ModInt {
 public:
  ModInt() = default;
  ModInt(int64_t value, Modulus mod) : v_(reduce_signed(value, mod.m)), mod_(mod) {}

  uint64_t value() const { return v_; }
  const Modulus& modulus() const { return mod_; }

  /// Signed representative in (-m/2, m/2].
  int64_t signed_rep() const {
    int64_t m = static_cast<int64_t>(mod_.m);
    int64_t v = static_cast<int64_t>(v_);
    return v * 2 > m ? v - m : v;
  }

  bool is_zero() const { return v_ == 0; }
  bool is_unit() const { return v_ % mod_.p != 0; }

  ModInt operator+(const ModInt& o) const { return wrap(addm(v_, check(o), mod_.m)); }
  ModInt operator-(const ModInt& o) const { return wrap(subm(v_, check(o), mod_.m)); }
  ModInt operator*(const ModInt& o) const { return wrap(mulm(v_, check(o), mod_.m)); }
  ModInt operator-() const { return wrap(subm(0, v_, mod_.m)); }

  ModInt pow(uint64_t e) const { return wrap(powm(v_, e, mod_.m)); }

  /// Multiplicative inverse; throws NotAUnit when p divides the value.
  ModInt inv() const { return wrap(inv_mod(v_, mod_.m)); }

  bool operator==(const ModInt& o) const { return mod_ == o.mod_ && v_ == o.v_; }

  std::string str() const { return std::to_string(signed_rep()); }

 private:
  ModInt wrap(uint64_t raw) const {
    ModInt r;
    r.v_ = raw;
    r.mod_ = mod_;
    return r;
  }
  uint64_t check(const ModInt& o) const {
    if (!(mod_ == o.mod_)) throw ModulusMismatch("mixed moduli in ModInt arithmetic");
    return o.v_;
  }

  uint64_t v_ = 0;
  Modulus mod_;
};

/// True iff x is a square modulo p. Requires k = 1; 0 counts as a square.
bool is_square_mod_p(const ModInt& x);

/**
 * Smallest positive non-residue u mod p, for p = 1 (mod 4).
 * Throws WrongResidueClass for p = 3 (mod 4), where -1 serves instead.
 */
ModInt find_nonresidue(uint32_t p);

}  // namespace padic
