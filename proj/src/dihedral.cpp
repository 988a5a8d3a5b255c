#include "padic/dihedral.hpp"

#include <numbers>

namespace padic {

DihedralElement dihedral_mul(const DihedralElement& a, const DihedralElement& b) {
  if (a.n != b.n) throw DomainError("dihedral degrees differ");
  const uint32_t n = a.n;
  // a^m1 x^r1 a^m2 x^r2 = a^(m1 + (-1)^r1 m2) x^(r1+r2)
  const uint32_t m2 = a.r ? (n - b.m) % n : b.m;
  return {n, (a.m + m2) % n, (a.r + b.r) % 2};
}

DihedralElement dihedral_inv(const DihedralElement& a) {
  if (a.r) return a;  // reflections are involutions
  return {a.n, (a.n - a.m) % a.n, 0};
}

MinorMat2 project_minor(const FormSpec& f, const Mat3& M) {
  if (f.p == 2) throw DomainError("the minor homomorphism is defined for odd primes");
  if (f.mod.k != 1) throw DomainError("the minor homomorphism lives at level k = 1");
  const uint64_t m = f.mod.m;
  if (M.at(0, 2) != 0 || M.at(1, 2) != 0)
    throw MalformedElement("matrix is not block-triangular: " + M.str());
  const uint64_t sv = M.at(2, 2);
  int s;
  if (sv == 1)
    s = 1;
  else if (sv == m - 1)
    s = -1;
  else
    throw MalformedElement("corner entry is not a sign: " + M.str());
  const ModInt a = M.entry(0, 0), b = M.entry(1, 0);
  const ModInt v = *f.v;
  const ModInt sgn(s, f.mod);
  if (!(M.entry(1, 1) == sgn * a) || !(M.entry(0, 1) == sgn * v * b))
    throw MalformedElement("minor block is not of the [[a,svb],[b,sa]] shape: " + M.str());
  if (!(a * a - v * b * b == ModInt(1, f.mod)))
    throw MalformedElement("minor block violates the norm-one condition: " + M.str());
  return {a, b, s, v};
}

MinorMat2 minor_identity(const FormSpec& f) {
  return {ModInt(1, f.mod), ModInt(0, f.mod), 1, *f.v};
}

MinorMat2 minor_mul(const MinorMat2& x, const MinorMat2& y) {
  // [[a,svb],[b,sa]] * [[a',s'vb'],[b',s'a']]: the pair part composes through
  // (a,b) -> (a, s*b)-twisted norm-one products, the sign multiplies.
  const ModInt sgn(x.s, x.a.modulus());
  const ModInt a = x.a * y.a + sgn * x.v * x.b * y.b;
  const ModInt b = y.a * x.b + sgn * x.a * y.b;
  return {a, b, x.s * y.s, x.v};
}

MinorMat2 minor_C(const FormSpec& f, const NormOnePair& gen) { return {gen.a, gen.b, 1, *f.v}; }

MinorMat2 minor_Z(const FormSpec& f) { return {ModInt(1, f.mod), ModInt(0, f.mod), -1, *f.v}; }

DihedralElement to_dihedral(const MinorMat2& m, const NormOnePair& gen) {
  const uint32_t p = m.a.modulus().p;
  const uint32_t n = p + 1;
  const uint32_t r = m.s == 1 ? 0 : 1;
  NormOnePair cur{ModInt(1, m.a.modulus()), ModInt(0, m.a.modulus())};
  for (uint32_t e = 0; e < n; ++e) {
    if (cur.a == m.a && cur.b == m.b) return {n, e, r};
    cur = pair_product(cur, gen, m.v);
  }
  throw NotInImage("minor is not generated by the given norm-one pair");
}

std::array<NamedCharacter, 4> dihedral_one_irreps(uint32_t n) {
  if (n % 2 != 0) throw OddDegree("the four-character family requires even degree");
  auto trivial = [](const DihedralElement&) { return 1; };
  auto refl = [](const DihedralElement& g) { return g.r ? -1 : 1; };
  auto rot = [](const DihedralElement& g) { return g.m % 2 ? -1 : 1; };
  auto both = [](const DihedralElement& g) { return (g.m + g.r) % 2 ? -1 : 1; };
  return {NamedCharacter{"trivial", trivial}, NamedCharacter{"refl_sign", refl},
          NamedCharacter{"rot_parity", rot}, NamedCharacter{"rot_refl_parity", both}};
}

ComplexMat2 dihedral_two_irrep(uint32_t n, uint32_t idx, const DihedralElement& g) {
  if (n % 2 != 0) throw OddDegree("two-dimensional irreps are listed for even degree");
  if (idx < 1 || idx > (n - 2) / 2)
    throw IndexOutOfRange("irrep index " + std::to_string(idx) + " out of range 1.." +
                          std::to_string((n - 2) / 2));
  if (g.n != n) throw DomainError("dihedral degree mismatch");
  const uint32_t turns = (idx * g.m) % n;
  double c, s;
  if ((4ull * turns) % n == 0) {
    // quarter-turn angles come out exact, integer-valued images stay integer
    static constexpr double qc[4] = {1, 0, -1, 0};
    static constexpr double qs[4] = {0, 1, 0, -1};
    const uint32_t q = 4 * turns / n;
    c = qc[q];
    s = qs[q];
  } else {
    const double theta = 2.0 * std::numbers::pi * turns / n;
    c = std::cos(theta);
    s = std::sin(theta);
  }
  ComplexMat2 out{{c, -s, s, c}};
  if (g.r) {
    out.e[1] = -out.e[1];
    out.e[3] = -out.e[3];  // right-multiply by diag(1, -1)
  }
  return out;
}

}  // namespace padic
