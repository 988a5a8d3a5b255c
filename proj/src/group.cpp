#include "padic/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace padic {

namespace {

void spend(uint64_t& visits, const Budget& budget, const char* what) {
  if (++visits > budget.max_visits)
    throw BudgetExceeded(std::string("visit budget exhausted during ") + what);
}

}  // namespace

uint32_t FiniteMatrixGroup::add(const Mat3& M) {
  auto [it, fresh] = index_.emplace(M.raw(), static_cast<uint32_t>(elems_.size()));
  if (fresh) elems_.push_back(M);
  return it->second;
}

std::optional<uint32_t> FiniteMatrixGroup::find(const Mat3& M) const {
  auto it = index_.find(M.raw());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

uint32_t FiniteMatrixGroup::id_of(const Mat3& M) const {
  auto id = find(M);
  if (!id) throw NotInGroup("matrix not in the enumerated group: " + M.str());
  return *id;
}

bool FiniteMatrixGroup::is_closed() const {
  for (const auto& a : elems_)
    for (const auto& b : elems_)
      if (!find(a * b)) return false;
  return true;
}

bool FiniteMatrixGroup::same_elements(const FiniteMatrixGroup& o) const {
  if (size() != o.size()) return false;
  for (const auto& e : elems_)
    if (!o.find(e)) return false;
  return true;
}

FiniteMatrixGroup generate_closure(const std::vector<Mat3>& generators, Modulus mod,
                                   const Budget& budget) {
  FiniteMatrixGroup G(mod);
  G.add(Mat3::identity(mod));
  uint64_t visits = 0;
  std::deque<uint32_t> queue{0};
  while (!queue.empty()) {
    const uint32_t id = queue.front();
    queue.pop_front();
    const Mat3 base = G.at(id);
    for (const Mat3& g : generators) {
      spend(visits, budget, "closure generation");
      const Mat3 prod = base * g;
      if (G.find(prod)) continue;
      if (G.size() + 1 > budget.max_elements)
        throw BudgetExceeded("element budget exhausted during closure generation");
      queue.push_back(G.add(prod));
    }
  }
  return G;
}

FiniteMatrixGroup solve_defining_system(uint32_t p, uint32_t k, const Budget& budget) {
  const FormSpec f = make_form(p, k);
  const uint64_t m = f.mod.m;
  const uint64_t A0 = f.gram.at(0, 0), A1 = f.gram.at(1, 1), A2 = f.gram.at(2, 2);
  uint64_t visits = 0;

  using Col = std::array<uint64_t, 3>;
  auto col_q = [&](const Col& c) {
    return addm(addm(mulm(A0, mulm(c[0], c[0], m), m), mulm(A1, mulm(c[1], c[1], m), m), m),
                mulm(A2, mulm(c[2], c[2], m), m), m);
  };
  auto bil = [&](const Col& a, const Col& b) {
    return addm(addm(mulm(A0, mulm(a[0], b[0], m), m), mulm(A1, mulm(a[1], b[1], m), m), m),
                mulm(A2, mulm(a[2], b[2], m), m), m);
  };
  auto scan = [&](uint64_t target) {
    std::vector<Col> out;
    for (uint64_t x = 0; x < m; ++x)
      for (uint64_t y = 0; y < m; ++y)
        for (uint64_t z = 0; z < m; ++z) {
          spend(visits, budget, "defining-system column scan");
          Col c{x, y, z};
          if (col_q(c) == target) out.push_back(c);
        }
    return out;
  };

  const std::vector<Col> s1 = scan(A0);
  const std::vector<Col> s2 = scan(A1);
  const std::vector<Col> s3 = scan(A2);

  auto det_cols = [&](const Col& a, const Col& b, const Col& c) {
    uint64_t d = 0;
    d = addm(d, mulm(a[0], subm(mulm(b[1], c[2], m), mulm(b[2], c[1], m), m), m), m);
    d = subm(d, mulm(b[0], subm(mulm(a[1], c[2], m), mulm(a[2], c[1], m), m), m), m);
    d = addm(d, mulm(c[0], subm(mulm(a[1], b[2], m), mulm(a[2], b[1], m), m), m), m);
    return d;
  };

  FiniteMatrixGroup G(f.mod);
  for (const Col& c1 : s1) {
    std::vector<Col> z1;
    for (const Col& c3 : s3) {
      spend(visits, budget, "defining-system pruning");
      if (bil(c1, c3) == 0) z1.push_back(c3);
    }
    for (const Col& c2 : s2) {
      spend(visits, budget, "defining-system pruning");
      if (bil(c1, c2) != 0) continue;
      for (const Col& c3 : z1) {
        spend(visits, budget, "defining-system pruning");
        if (bil(c2, c3) != 0) continue;
        if (det_cols(c1, c2, c3) != 1 % m) continue;
        if (G.size() + 1 > budget.max_elements)
          throw BudgetExceeded("element budget exhausted during defining-system enumeration");
        Mat3 L(f.mod);
        for (int r = 0; r < 3; ++r) {
          L.set(r, 0, c1[r]);
          L.set(r, 1, c2[r]);
          L.set(r, 2, c3[r]);
        }
        G.add(L);
      }
    }
  }
  return G;
}

Mat3 ParamElement::to_matrix(const ModInt& v) const {
  Mat3 M(a.modulus());
  ModInt sign(s, a.modulus());
  M.set(0, 0, a.value());
  M.set(0, 1, (sign * v * b).value());
  M.set(1, 0, b.value());
  M.set(1, 1, (sign * a).value());
  M.set(2, 0, c.value());
  M.set(2, 1, d.value());
  M.set(2, 2, sign.value());
  return M;
}

std::vector<ParamElement> parameterize_mod_p(uint32_t p) {
  if (p == 2) throw DomainError("the M(a,b,c,d,s) parameterization requires p > 2");
  const FormSpec f = make_form(p, 1);
  NormOneGroup pairs(p);
  std::vector<ParamElement> out;
  out.reserve(2 * p * p * (p + 1));
  for (const NormOnePair& ab : pairs.elements())
    for (int s : {1, -1})
      for (uint64_t c = 0; c < p; ++c)
        for (uint64_t d = 0; d < p; ++d)
          out.push_back({ab.a, ab.b, ModInt(static_cast<int64_t>(c), f.mod),
                         ModInt(static_cast<int64_t>(d), f.mod), s});
  return out;
}

FiniteMatrixGroup commutator_subgroup(const FiniteMatrixGroup& G) {
  const size_t n = G.size();
  std::vector<Mat3> inverses(n, Mat3(G.modulus()));
  for (size_t i = 0; i < n; ++i) inverses[i] = G.at(i).inverse();
  std::vector<Mat3> comms;
  std::unordered_set<std::array<uint64_t, 9>, Mat3Hash> seen;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const Mat3 c = G.at(i) * G.at(j) * inverses[i] * inverses[j];
      if (seen.insert(c.raw()).second) comms.push_back(c);
    }
  return generate_closure(comms, G.modulus());
}

Abelianization abelianization(const FiniteMatrixGroup& G, const FiniteMatrixGroup& commutators) {
  const size_t n = G.size();
  std::vector<uint32_t> coset_min(n, UINT32_MAX);
  for (uint32_t i = 0; i < n; ++i) {
    uint32_t best = UINT32_MAX;
    for (const Mat3& h : commutators.elements()) best = std::min(best, G.id_of(G.at(i) * h));
    coset_min[i] = best;
  }
  std::vector<uint32_t> reps;
  for (uint32_t i = 0; i < n; ++i)
    if (coset_min[i] == i) reps.push_back(i);
  std::sort(reps.begin(), reps.end());
  std::unordered_map<uint32_t, uint32_t> coset_index;
  for (uint32_t q = 0; q < reps.size(); ++q) coset_index[reps[q]] = q;

  Abelianization ab;
  ab.order = reps.size();
  ab.coset_rep_ids = reps;
  const size_t q = reps.size();
  ab.mult_table.assign(q, std::vector<uint32_t>(q, 0));
  for (size_t i = 0; i < q; ++i)
    for (size_t j = 0; j < q; ++j)
      ab.mult_table[i][j] = coset_index.at(coset_min[G.mul(reps[i], reps[j])]);

  const uint32_t id_coset = coset_index.at(coset_min[G.identity_id()]);
  ab.element_orders.assign(q, 0);
  for (uint32_t i = 0; i < q; ++i) {
    uint32_t cur = i, ord = 1;
    while (cur != id_coset) {
      cur = ab.mult_table[cur][i];
      ++ord;
    }
    ab.element_orders[i] = ord;
  }

  const uint32_t max_ord = q ? *std::max_element(ab.element_orders.begin(), ab.element_orders.end()) : 1;
  if (q == 1) {
    ab.iso_type = "trivial";
  } else if (max_ord == q) {
    ab.iso_type = "Z/" + std::to_string(q);
  } else if (q == 4) {
    ab.iso_type = "Z/2 x Z/2";
  } else {
    ab.iso_type = "abelian of order " + std::to_string(q);
  }
  return ab;
}

std::vector<ConjClass> conjugacy_classes(const FiniteMatrixGroup& G) {
  const size_t n = G.size();
  std::vector<Mat3> inverses(n, Mat3(G.modulus()));
  for (size_t i = 0; i < n; ++i) inverses[i] = G.at(i).inverse();
  std::vector<int32_t> class_of(n, -1);
  std::vector<ConjClass> classes;
  for (uint32_t i = 0; i < n; ++i) {
    if (class_of[i] >= 0) continue;
    ConjClass cls;
    cls.rep_id = i;
    const int32_t ci = static_cast<int32_t>(classes.size());
    for (uint32_t j = 0; j < n; ++j) {
      const uint32_t t = G.id_of(G.at(j) * G.at(i) * inverses[j]);
      if (class_of[t] < 0) {
        class_of[t] = ci;
        cls.member_ids.push_back(t);
      }
    }
    std::sort(cls.member_ids.begin(), cls.member_ids.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

namespace {

bool ids_commute(const FiniteMatrixGroup& G, uint32_t a, uint32_t b) {
  return G.at(a) * G.at(b) == G.at(b) * G.at(a);
}

bool class_pair_commutes(const FiniteMatrixGroup& G, const ConjClass& A, const ConjClass& B) {
  for (uint32_t a : A.member_ids)
    for (uint32_t b : B.member_ids)
      if (!ids_commute(G, a, b)) return false;
  return true;
}

bool union_is_closed(const FiniteMatrixGroup& G, const std::vector<uint32_t>& ids) {
  std::unordered_set<uint32_t> inside(ids.begin(), ids.end());
  for (uint32_t a : ids)
    for (uint32_t b : ids)
      if (!inside.count(G.id_of(G.at(a) * G.at(b)))) return false;
  return true;
}

}  // namespace

FiniteMatrixGroup maximal_abelian_normal_subgroup(const FiniteMatrixGroup& G,
                                                  const std::vector<ConjClass>& classes) {
  const size_t c = classes.size();
  const uint32_t ident = G.identity_id();
  size_t id_class = 0;
  for (size_t i = 0; i < c; ++i)
    if (std::find(classes[i].member_ids.begin(), classes[i].member_ids.end(), ident) !=
        classes[i].member_ids.end())
      id_class = i;

  // Pairwise-commuting compatibility between classes (diagonal included).
  std::vector<std::vector<bool>> compat(c, std::vector<bool>(c, false));
  for (size_t i = 0; i < c; ++i)
    for (size_t j = i; j < c; ++j)
      compat[i][j] = compat[j][i] = class_pair_commutes(G, classes[i], classes[j]);

  std::vector<uint32_t> best;
  std::vector<size_t> chosen{id_class};

  // Depth-first over commuting class unions; keep the largest closed one.
  auto consider = [&](const std::vector<size_t>& subset) {
    std::vector<uint32_t> ids;
    for (size_t ci : subset)
      ids.insert(ids.end(), classes[ci].member_ids.begin(), classes[ci].member_ids.end());
    if (ids.size() <= best.size()) return;
    if (union_is_closed(G, ids)) best = ids;
  };

  auto dfs = [&](auto&& self, size_t next) -> void {
    consider(chosen);
    for (size_t ci = next; ci < c; ++ci) {
      if (ci == id_class || !compat[ci][ci]) continue;
      bool ok = true;
      for (size_t prev : chosen)
        if (!compat[prev][ci]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(ci);
      self(self, ci + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);

  FiniteMatrixGroup H(G.modulus());
  std::sort(best.begin(), best.end());
  for (uint32_t id : best) H.add(G.at(id));
  return H;
}

OneDimCharacters::OneDimCharacters(uint32_t p)
    : p_(p), form_(make_form(p, 1)), pairs_(p), gen_(pairs_.generator()) {
  if (p == 2) throw DomainError("the det/s/t/st character family requires p > 2");
}

int OneDimCharacters::chi_s(const Mat3& M) const {
  const uint64_t s = M.at(2, 2);
  if (s == 1) return 1;
  if (s == form_.mod.m - 1) return -1;
  throw MalformedElement("matrix lacks the block-triangular shape: " + M.str());
}

int OneDimCharacters::chi_t(const Mat3& M) const {
  if (p_ == 3) {
    const ModInt t = M.entry(0, 0) * M.entry(0, 0) - M.entry(1, 0) * M.entry(1, 0);
    return static_cast<int>(t.signed_rep());
  }
  if (p_ == 5) {
    return M.entry(0, 0).signed_rep() > 0 ? 1 : -1;
  }
  const NormOnePair ab{M.entry(0, 0), M.entry(1, 0)};
  return pairs_.dlog(ab, gen_) % 2 == 0 ? 1 : -1;
}

std::array<int, 4> OneDimCharacters::values(const Mat3& M) const {
  const int s = chi_s(M), t = chi_t(M);
  return {1, s, t, s * t};
}

std::vector<Mat3> axis_group_generators(const FormSpec& f) {
  std::vector<Mat3> gens;
  for (Axis ax : {Axis::X, Axis::Y, Axis::Z}) {
    auto sub = axis_group(f, ax);
    gens.insert(gens.end(), sub.begin(), sub.end());
  }
  return gens;
}

bool satisfies_defining_relations(const FormSpec& f, const Mat3& L) {
  return L.transpose() * f.gram * L == f.gram && L.det() == 1 % f.mod.m;
}

HenselReport hensel_compare(uint32_t p, uint32_t k, const Budget& budget) {
  const FormSpec f = make_form(p, k);
  const FiniteMatrixGroup closure = generate_closure(axis_group_generators(f), f.mod, budget);
  const FiniteMatrixGroup solved = solve_defining_system(p, k, budget);
  HenselReport r;
  r.closure_order = closure.size();
  r.solver_order = solved.size();
  r.contained = true;
  for (const Mat3& g : closure.elements())
    if (!solved.find(g)) {
      r.contained = false;
      break;
    }
  r.equal = r.contained && closure.size() == solved.size();
  return r;
}

}  // namespace padic
