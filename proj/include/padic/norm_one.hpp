#pragma once

#include <cstdint>
#include <vector>

#include "padic/modular.hpp"

namespace padic {

/// A solution (a, b) of a^2 - v b^2 = 1 mod p.
struct NormOnePair {
  ModInt a, b;

  bool operator==(const NormOnePair& o) const { return a == o.a && b == o.b; }
};

/**
 * The group of norm-one pairs mod p, cyclic of order p + 1, with the product
 * (a,b)*(c,d) = (ac + v bd, ad + bc). Equivalently: multiplication of
 * "complex" numbers a + ib with i^2 = v, or of the 2x2 matrices [[a,vb],[b,a]].
 */
class NormOneGroup {
 public:
  explicit NormOneGroup(uint32_t p);

  uint32_t p() const { return p_; }
  const ModInt& v() const { return v_; }

  /// All p + 1 solutions, in ascending canonical (a, b) order.
  const std::vector<NormOnePair>& elements() const { return elements_; }

  NormOnePair identity() const;
  NormOnePair product(const NormOnePair& x, const NormOnePair& y) const;
  NormOnePair conjugate(const NormOnePair& x) const { return {x.a, -x.b}; }
  NormOnePair power(const NormOnePair& x, uint64_t e) const;
  uint32_t order_of(const NormOnePair& x) const;

  /**
   * A pair of multiplicative order exactly p + 1. Pinned to (0,1) for p = 3
   * and (-2,1) for p = 5 so downstream matrix displays stay reproducible;
   * otherwise the signed-lex smallest generator.
   */
  NormOnePair generator() const;

  /// Exponent e with base^e = x; throws NotInImage if none exists.
  uint32_t dlog(const NormOnePair& x, const NormOnePair& base) const;

 private:
  uint32_t p_;
  ModInt v_;
  std::vector<NormOnePair> elements_;
};

// Free wrappers for the common one-shot calls.
std::vector<NormOnePair> solve_norm_one(uint32_t p);
NormOnePair pair_product(const NormOnePair& x, const NormOnePair& y, const ModInt& v);
NormOnePair find_generator(uint32_t p);

}  // namespace padic
