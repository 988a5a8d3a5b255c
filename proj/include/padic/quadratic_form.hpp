#pragma once

#include <array>
#include <optional>

#include "padic/mat3.hpp"

namespace padic {

/**
 * The anisotropic ternary form for a given prime and truncation level:
 * diagonal Gram matrix diag(1, -v, p) mod p^k for odd p, the identity for
 * p = 2. The twist v is -1 when p = 3 (mod 4) and minus the smallest
 * non-residue when p = 1 (mod 4); it has no meaning for p = 2.
 */
struct FormSpec {
  uint32_t p = 0;
  Modulus mod;
  std::optional<ModInt> v;  // only for p > 2
  Mat3 gram;

  /// -v as a canonical residue; requires p > 2.
  ModInt neg_v() const {
    if (!v) throw DomainError("the twist v is only defined for odd primes");
    return -*v;
  }
};

FormSpec make_form(uint32_t p, uint32_t k);

/// Q(x) = x1^2 - v x2^2 + p x3^2 (resp. x1^2 + x2^2 + x3^2 for p = 2).
ModInt eval_Q(const FormSpec& f, const std::array<ModInt, 3>& x);

/**
 * Mod-p anisotropy probe (k = 1, p > 2): true iff x1^2 - v x2^2 = 0 has no
 * solution with (x1, x2) != (0, 0). The x3 term vanishes mod p, so the plane
 * check carries the whole content.
 */
bool check_anisotropy(const FormSpec& f);

}  // namespace padic
