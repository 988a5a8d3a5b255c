#include "padic/norm_one.hpp"

#include <algorithm>

#include "padic/quadratic_form.hpp"

namespace padic {

NormOneGroup::NormOneGroup(uint32_t p) : p_(p) {
  if (p == 2 || !is_prime(p)) throw DomainError("norm-one group requires an odd prime");
  FormSpec f = make_form(p, 1);
  v_ = *f.v;
  Modulus mod = f.mod;
  const uint64_t vv = v_.value();
  for (uint64_t a = 0; a < p; ++a)
    for (uint64_t b = 0; b < p; ++b) {
      if (subm(mulm(a, a, p), mulm(vv, mulm(b, b, p), p), p) == 1)
        elements_.push_back({ModInt(static_cast<int64_t>(a), mod), ModInt(static_cast<int64_t>(b), mod)});
    }
}

NormOnePair NormOneGroup::identity() const {
  Modulus mod = v_.modulus();
  return {ModInt(1, mod), ModInt(0, mod)};
}

NormOnePair NormOneGroup::product(const NormOnePair& x, const NormOnePair& y) const {
  return {x.a * y.a + v_ * x.b * y.b, x.a * y.b + x.b * y.a};
}

NormOnePair NormOneGroup::power(const NormOnePair& x, uint64_t e) const {
  NormOnePair acc = identity();
  NormOnePair base = x;
  while (e) {
    if (e & 1) acc = product(acc, base);
    base = product(base, base);
    e >>= 1;
  }
  return acc;
}

uint32_t NormOneGroup::order_of(const NormOnePair& x) const {
  NormOnePair cur = x;
  for (uint32_t n = 1; n <= p_ + 1; ++n) {
    if (cur == identity()) return n;
    cur = product(cur, x);
  }
  throw DomainError("element order exceeds p + 1; input is not norm-one");
}

NormOnePair NormOneGroup::generator() const {
  Modulus mod = v_.modulus();
  if (p_ == 3) return {ModInt(0, mod), ModInt(1, mod)};
  if (p_ == 5) return {ModInt(-2, mod), ModInt(1, mod)};
  std::vector<NormOnePair> gens;
  for (const auto& e : elements_)
    if (order_of(e) == p_ + 1) gens.push_back(e);
  auto signed_lex = [](const NormOnePair& x, const NormOnePair& y) {
    auto kx = std::pair(x.a.signed_rep(), x.b.signed_rep());
    auto ky = std::pair(y.a.signed_rep(), y.b.signed_rep());
    return kx < ky;
  };
  return *std::min_element(gens.begin(), gens.end(), signed_lex);
}

uint32_t NormOneGroup::dlog(const NormOnePair& x, const NormOnePair& base) const {
  NormOnePair cur = identity();
  for (uint32_t e = 0; e <= p_ + 1; ++e) {
    if (cur == x) return e;
    cur = product(cur, base);
  }
  throw NotInImage("pair is not a power of the given base");
}

std::vector<NormOnePair> solve_norm_one(uint32_t p) { return NormOneGroup(p).elements(); }

NormOnePair pair_product(const NormOnePair& x, const NormOnePair& y, const ModInt& v) {
  return {x.a * y.a + v * x.b * y.b, x.a * y.b + x.b * y.a};
}

NormOnePair find_generator(uint32_t p) { return NormOneGroup(p).generator(); }

}  // namespace padic
