#include "padic/quadratic_form.hpp"

namespace padic {

FormSpec make_form(uint32_t p, uint32_t k) {
  FormSpec f;
  f.p = p;
  f.mod = Modulus::make(p, k);
  if (p == 2) {
    f.gram = Mat3::identity(f.mod);
    return f;
  }
  int64_t u = 1;
  if (p % 4 == 1) u = static_cast<int64_t>(find_nonresidue(p).value());
  f.v = ModInt(-u, f.mod);
  f.gram = Mat3(f.mod);
  f.gram.set_int(0, 0, 1);
  f.gram.set_int(1, 1, u);  // -v = u (or 1 when p = 3 mod 4)
  f.gram.set_int(2, 2, static_cast<int64_t>(p));
  return f;
}

ModInt eval_Q(const FormSpec& f, const std::array<ModInt, 3>& x) {
  ModInt acc(0, f.mod);
  for (int i = 0; i < 3; ++i) acc = acc + f.gram.entry(i, i) * x[i] * x[i];
  return acc;
}

bool check_anisotropy(const FormSpec& f) {
  if (f.p == 2) throw DomainError("anisotropy probe is defined for odd primes");
  if (f.mod.k != 1) throw DomainError("anisotropy probe runs at level k = 1");
  const uint64_t p = f.p;
  const uint64_t nv = f.neg_v().value();
  for (uint64_t x1 = 0; x1 < p; ++x1)
    for (uint64_t x2 = 0; x2 < p; ++x2) {
      if (x1 == 0 && x2 == 0) continue;
      if (addm(mulm(x1, x1, p), mulm(nv, mulm(x2, x2, p), p), p) == 0) return false;
    }
  return true;
}

}  // namespace padic
