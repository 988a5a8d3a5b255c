#include "padic/modular.hpp"

namespace padic {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
    if (n % d == 0) return n == d;
  }
  for (uint64_t d = 11; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Modulus Modulus::make(uint32_t p, uint32_t k) {
  if (!is_prime(p)) throw DomainError("modulus base " + std::to_string(p) + " is not prime");
  if (k < 1) throw DomainError("modulus exponent must be at least 1");
  uint64_t m = 1;
  for (uint32_t i = 0; i < k; ++i) {
    m *= p;
    if (m > 0xFFFFFFFFull)
      throw DomainError("p^k exceeds the 32-bit residue cap (products must stay exact in 64 bits)");
  }
  return Modulus{p, k, m};
}

uint64_t powm(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulm(r, base, m);
    base = mulm(base, base, m);
    exp >>= 1;
  }
  return r;
}

uint64_t inv_mod(uint64_t a, uint64_t m) {
  int64_t r0 = static_cast<int64_t>(m), r1 = static_cast<int64_t>(a % m);
  int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    int64_t r2 = r0 - q * r1;
    int64_t t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw NotAUnit(std::to_string(a) + " is not a unit mod " + std::to_string(m));
  if (t0 < 0) t0 += static_cast<int64_t>(m);
  return static_cast<uint64_t>(t0);
}

bool is_square_mod_p(const ModInt& x) {
  const Modulus& mod = x.modulus();
  if (mod.k != 1) throw DomainError("is_square_mod_p requires a prime modulus (k = 1)");
  if (mod.p == 2) return true;  // 0 and 1 are both squares mod 2
  if (x.is_zero()) return true;
  return powm(x.value(), (mod.p - 1) / 2, mod.m) == 1;
}

ModInt find_nonresidue(uint32_t p) {
  if (!is_prime(p)) throw DomainError("find_nonresidue requires a prime");
  if (p % 4 != 1)
    throw WrongResidueClass("p = " + std::to_string(p) + " is not 1 mod 4; use v = -1 instead");
  Modulus mod = Modulus::make(p, 1);
  for (uint32_t u = 2; u < p; ++u) {
    ModInt c(u, mod);
    if (!is_square_mod_p(c)) return c;
  }
  throw DomainError("no non-residue found (unreachable for prime p > 2)");
}

}  // namespace padic
