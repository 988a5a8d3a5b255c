#pragma once

#include <array>
#include <functional>
#include <string>

#include "padic/cmat2.hpp"
#include "padic/mat3.hpp"
#include "padic/norm_one.hpp"
#include "padic/quadratic_form.hpp"

namespace padic {

/// The element a^m x^r of D_n = <a, x | a^n = x^2 = e, x a x = a^-1>.
struct DihedralElement {
  uint32_t n = 1;
  uint32_t m = 0;
  uint32_t r = 0;

  bool operator==(const DihedralElement&) const = default;
};

inline DihedralElement dihedral_identity(uint32_t n) { return {n, 0, 0}; }

DihedralElement dihedral_mul(const DihedralElement& a, const DihedralElement& b);
DihedralElement dihedral_inv(const DihedralElement& a);

/// A 2x2 block [[a, svb], [b, sa]] with a^2 - v b^2 = 1 and s = +-1:
/// the image of a mod-p group element under the upper-left-minor homomorphism.
struct MinorMat2 {
  ModInt a, b;
  int s = 1;
  ModInt v;

  bool operator==(const MinorMat2& o) const { return a == o.a && b == o.b && s == o.s; }
};

/// Upper-left 2x2 minor of a block-triangular mod-p group element.
/// Throws MalformedElement when M lacks the required shape.
MinorMat2 project_minor(const FormSpec& f, const Mat3& M);

MinorMat2 minor_identity(const FormSpec& f);
MinorMat2 minor_mul(const MinorMat2& x, const MinorMat2& y);

/// The generator pair (C, Z) of the minor image: C from a norm-one generator,
/// Z = diag(1, -1).
MinorMat2 minor_C(const FormSpec& f, const NormOnePair& gen);
MinorMat2 minor_Z(const FormSpec& f);

/// Writes the minor as C^m Z^r over the given norm-one generator: the
/// isomorphism onto D_{p+1}. The exponent comes from a discrete log in the
/// norm-one cyclic group (linear scan of order p + 1).
DihedralElement to_dihedral(const MinorMat2& m, const NormOnePair& gen);

using DihedralCharacter = std::function<int(const DihedralElement&)>;

struct NamedCharacter {
  std::string name;
  DihedralCharacter chi;
};

/**
 * The four one-dimensional irreducibles of D_n for even n: trivial; the sign
 * of the reflection part; the character with kernel <a^2, x>; and the one
 * with kernel <a^2, ax>. Throws OddDegree for odd n.
 */
std::array<NamedCharacter, 4> dihedral_one_irreps(uint32_t n);

/**
 * The idx-th two-dimensional irreducible of D_n (even n, 1 <= idx <= (n-2)/2):
 * a maps to the rotation by 2*pi*idx/n and x to diag(1, -1). idx = 0 and
 * idx = n/2 are reducible and rejected with IndexOutOfRange.
 */
ComplexMat2 dihedral_two_irrep(uint32_t n, uint32_t idx, const DihedralElement& g);

}  // namespace padic
