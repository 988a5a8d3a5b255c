// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "padic/degree.hpp"
#include "padic/json_io.hpp"
#include "padic/qubit.hpp"

using namespace padic;

namespace {

int g_failures = 0;

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

template <typename Fn>
void criterion(int idx, const std::string& name, double time_cap_s, Fn&& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > time_cap_s)
    c.require(false, "took " + std::to_string(secs) + "s, cap " + std::to_string(time_cap_s) + "s");
  if (!c.ok) ++g_failures;
  std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL", idx, name.c_str(),
              secs, c.detail.empty() ? "" : " -- ", c.detail.c_str());
  std::fflush(stdout);
}

std::multiset<size_t> class_sizes(const std::vector<ConjClass>& classes) {
  std::multiset<size_t> out;
  for (const auto& c : classes) out.insert(c.size());
  return out;
}

void oracle_rec(const std::vector<uint32_t>& allowed, size_t from, uint64_t remaining,
                uint32_t slots, std::vector<uint32_t>& cur,
                std::vector<std::vector<uint32_t>>& out) {
  if (slots == 0) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (size_t i = from; i < allowed.size(); ++i) {
    const uint64_t sq = static_cast<uint64_t>(allowed[i]) * allowed[i];
    if (sq > remaining) continue;
    cur.push_back(allowed[i]);
    oracle_rec(allowed, i, remaining - sq, slots - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<uint32_t>> degree_oracle(uint64_t target, uint32_t slots,
                                                 std::vector<uint32_t> allowed) {
  std::sort(allowed.begin(), allowed.end());
  allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> cur;
  oracle_rec(allowed, 0, target, slots, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int main() {
  criterion(1, "solver orders 2p^2(p+1) for p = 3, 5, 7, 11", 60.0, [](Check& c) {
    const std::vector<std::pair<uint32_t, uint64_t>> expect{{3, 72}, {5, 300}, {7, 784}, {11, 2904}};
    for (auto [p, want] : expect) {
      const uint64_t got = solve_defining_system(p, 1).size();
      c.require(got == want, "p=" + std::to_string(p) + " gave " + std::to_string(got));
      c.require(want == 2ull * p * p * (p + 1), "closed form mismatch");
    }
  });

  criterion(2, "axis-group closure equals the solver set for p = 3, 5, 7", 60.0, [](Check& c) {
    for (uint32_t p : {3u, 5u, 7u}) {
      const FormSpec f = make_form(p, 1);
      const FiniteMatrixGroup closure = generate_closure(axis_group_generators(f), f.mod);
      const FiniteMatrixGroup solved = solve_defining_system(p, 1);
      c.require(closure.same_elements(solved), "sets differ at p = " + std::to_string(p));
    }
  });

  criterion(3, "exactly two Cardano decompositions per element, p = 3, 5, 7", 30.0, [](Check& c) {
    for (uint32_t p : {3u, 5u, 7u}) {
      const FormSpec f = make_form(p, 1);
      const auto [products, counts] = cardano_decomposition_tally(f);
      c.require(products.size() == 2ull * p * p * (p + 1),
                "product count off at p = " + std::to_string(p));
      for (uint64_t n : counts)
        if (n != 2) {
          c.require(false, "multiplicity " + std::to_string(n) + " at p = " + std::to_string(p));
          break;
        }
    }
  });

  criterion(4, "commutator orders 18 and 75; Klein four abelianizations", 120.0, [](Check& c) {
    const FiniteMatrixGroup g3 = solve_defining_system(3, 1);
    const FiniteMatrixGroup c3 = commutator_subgroup(g3);
    c.require(c3.size() == 18, "[G_3,G_3] order " + std::to_string(c3.size()));
    const Abelianization a3 = abelianization(g3, c3);
    c.require(a3.iso_type == "Z/2 x Z/2", "Ab(G_3) is " + a3.iso_type);

    const FiniteMatrixGroup g5 = solve_defining_system(5, 1);
    const FiniteMatrixGroup c5 = commutator_subgroup(g5);
    c.require(c5.size() == 75, "[G_5,G_5] order " + std::to_string(c5.size()));
    const Abelianization a5 = abelianization(g5, c5);
    c.require(a5.iso_type == "Z/2 x Z/2", "Ab(G_5) is " + a5.iso_type);
  });

  criterion(5, "conjugacy class size multisets of G_3 and G_5", 60.0, [](Check& c) {
    const auto s3 = class_sizes(conjugacy_classes(solve_defining_system(3, 1)));
    c.require(s3 == std::multiset<size_t>{1, 4, 4, 6, 6, 9, 12, 12, 18}, "G_3 classes wrong");
    const auto s5 = class_sizes(conjugacy_classes(solve_defining_system(5, 1)));
    c.require(s5 == std::multiset<size_t>{1, 6, 6, 6, 6, 15, 15, 25, 30, 30, 30, 30, 50, 50},
              "G_5 classes wrong");
  });

  criterion(6, "degree spectra pipelines with oracle cross-check", 120.0, [](Check& c) {
    const auto g3 = solve_degrees({68, 5, proper_divisors_above_one(72)});
    c.require(g3.size() == 1 && g3[0] == std::vector<uint32_t>{2, 4, 4, 4, 4},
              "G_3 spectrum not unique {2,4,4,4,4}");

    const auto unconstrained = solve_degrees({296, 10, proper_divisors_above_one(300)});
    const auto ito = constrain_by_ito(unconstrained, 12);
    const std::vector<std::vector<uint32_t>> prop16{{2, 2, 3, 3, 3, 3, 6, 6, 6, 12},
                                                    {2, 2, 6, 6, 6, 6, 6, 6, 6, 6},
                                                    {2, 4, 4, 4, 4, 4, 4, 4, 6, 12}};
    c.require(ito == prop16, "index-12 candidates differ from the three known rows");
    const auto final_two = constrain_by_min_two_count(ito, 2);
    c.require(final_two.size() == 2 && final_two[0] == prop16[0] && final_two[1] == prop16[1],
              "two-qubit constraint did not leave the first two rows");

    for (uint64_t target = 1; target <= 400; ++target) {
      const DegreeProblem a{target, 5, proper_divisors_above_one(72)};
      if (solve_degrees(a) != degree_oracle(target, 5, a.allowed_degrees)) {
        c.require(false, "oracle mismatch at residual " + std::to_string(target));
        break;
      }
      const DegreeProblem b{target, 10, proper_divisors_above_one(300)};
      if (solve_degrees(b) != degree_oracle(target, 10, b.allowed_degrees)) {
        c.require(false, "oracle mismatch at residual " + std::to_string(target));
        break;
      }
    }
  });

  criterion(7, "norm-one groups: order p+1, cyclic, pinned generators", 60.0, [](Check& c) {
    for (uint32_t p = 3; p <= 97; p += 2) {
      if (!is_prime(p)) continue;
      NormOneGroup g(p);
      c.require(g.elements().size() == p + 1, "count off at p = " + std::to_string(p));
      bool cyclic = false;
      for (const auto& e : g.elements()) {
        const uint32_t ord = g.order_of(e);
        if ((p + 1) % ord != 0) c.require(false, "order not dividing p+1 at p = " + std::to_string(p));
        if (ord == p + 1) cyclic = true;
      }
      c.require(cyclic, "no generator at p = " + std::to_string(p));
    }
    NormOneGroup g3(3), g5(5);
    c.require(g3.generator().a.value() == 0 && g3.generator().b.value() == 1 &&
                  g3.order_of(g3.generator()) == 4,
              "p = 3 generator is not (0,1) of order 4");
    c.require(g5.generator().a.signed_rep() == -2 && g5.generator().b.signed_rep() == 1 &&
                  g5.order_of(g5.generator()) == 6,
              "p = 5 generator is not (-2,1) of order 6");
  });

  criterion(8, "minor image satisfies the dihedral presentation, p <= 23", 60.0, [](Check& c) {
    for (uint32_t p = 3; p <= 23; p += 2) {
      if (!is_prime(p)) continue;
      const FormSpec f = make_form(p, 1);
      const NormOnePair gen = find_generator(p);
      const MinorMat2 C = minor_C(f, gen), Z = minor_Z(f);
      MinorMat2 cp = minor_identity(f);
      for (uint32_t i = 0; i < p + 1; ++i) cp = minor_mul(cp, C);
      c.require(cp == minor_identity(f), "C^{p+1} != 1 at p = " + std::to_string(p));
      c.require(minor_mul(Z, Z) == minor_identity(f), "Z^2 != 1 at p = " + std::to_string(p));
      MinorMat2 cinv = C;
      for (uint32_t i = 1; i < p; ++i) cinv = minor_mul(cinv, C);
      c.require(minor_mul(minor_mul(Z, C), Z) == cinv, "ZCZ != C^-1 at p = " + std::to_string(p));

      std::vector<MinorMat2> minors;
      const NormOneGroup pairs(p);
      for (const NormOnePair& ab : pairs.elements())
        for (int s : {1, -1}) minors.push_back({ab.a, ab.b, s, *f.v});
      std::set<std::pair<uint32_t, uint32_t>> seen;
      for (const auto& m : minors) seen.insert({to_dihedral(m, gen).m, to_dihedral(m, gen).r});
      c.require(seen.size() == 2 * (p + 1), "not bijective at p = " + std::to_string(p));
      for (const auto& x : minors)
        for (const auto& y : minors)
          if (!(to_dihedral(minor_mul(x, y), gen) ==
                dihedral_mul(to_dihedral(x, gen), to_dihedral(y, gen)))) {
            c.require(false, "not multiplicative at p = " + std::to_string(p));
            break;
          }
    }
  });

  criterion(9, "qubit maps: generator images, homomorphism, irreducibility, kernels, unitarity",
            60.0, [](Check& c) {
    auto rows = [](uint32_t p, std::array<std::array<int64_t, 3>, 3> r) {
      return Mat3::from_rows(Modulus::make(p, 1), r);
    };
    const double h = 0.5, rt = std::sqrt(3.0) / 2.0;

    QubitRep j3(3, 1);
    c.require(distance(j3.eval_modp(rows(3, {{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}})),
                       ComplexMat2{{0, -1, 1, 0}}) == 0.0,
              "J_3(C) wrong");
    c.require(distance(j3.eval_modp(rows(3, {{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}})),
                       ComplexMat2{{1, 0, 0, -1}}) == 0.0,
              "J_3(Z) wrong");

    QubitRep j51(5, 1), j52(5, 2);
    const Mat3 C5 = rows(5, {{{-2, -2, 0}, {1, -2, 0}, {0, 0, 1}}});
    const Mat3 Z5 = rows(5, {{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}});
    c.require(approx_equal(j51.eval_modp(C5), ComplexMat2{{h, -rt, rt, h}}), "J_5^1(C) wrong");
    c.require(approx_equal(j51.eval_modp(Z5), ComplexMat2{{1, 0, 0, -1}}), "J_5^1(Z) wrong");
    c.require(approx_equal(j52.eval_modp(C5), ComplexMat2{{-h, -rt, rt, -h}}), "J_5^2(C) wrong");
    c.require(approx_equal(j52.eval_modp(Z5), ComplexMat2{{1, 0, 0, -1}}), "J_5^2(Z) wrong");

    QubitRep j2(2, 1);
    c.require(distance(j2.eval_modp(rows(2, {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}})),
                       ComplexMat2{{-1, 1, 0, 1}}) == 0.0,
              "J_2((12)) wrong");
    c.require(distance(j2.eval_modp(rows(2, {{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}})),
                       ComplexMat2{{1, 0, 1, -1}}) == 0.0,
              "J_2((23)) wrong");

    c.require(homomorphism_check(3, 1) == 0.0, "J_3 pairs deviate");
    c.require(homomorphism_check(2, 1) == 0.0, "J_2 pairs deviate");
    c.require(homomorphism_check(5, 1) < 1e-9, "J_5^1 pairs deviate");
    c.require(homomorphism_check(5, 2) < 1e-9, "J_5^2 pairs deviate");

    c.require(irreducibility_check(3, 1), "J_3 reducible");
    c.require(irreducibility_check(5, 1), "J_5^1 reducible");
    c.require(irreducibility_check(5, 2), "J_5^2 reducible");
    c.require(irreducibility_check(2, 1), "J_2 reducible");

    const KernelReport k1 = faithfulness_check(5, 1), k2 = faithfulness_check(5, 2);
    c.require(k1.image_kernel == 1, "J_5^1 image kernel " + std::to_string(k1.image_kernel));
    c.require(k2.image_kernel == 2, "J_5^2 image kernel " + std::to_string(k2.image_kernel));

    for (auto [p, variant] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 1}, {5, 1}, {5, 2}}) {
      QubitRep rep(p, variant);
      const FiniteMatrixGroup G = solve_defining_system(p, 1);
      std::vector<ComplexMat2> images;
      for (const Mat3& g : G.elements()) images.push_back(rep.eval_modp(g));
      c.require(unitarize(images).max_nonunitarity < 1e-9, "unitarize failed");
    }
    std::vector<ComplexMat2> taus;
    for (const auto& g : s3_all()) taus.push_back(tau_prime(g));
    c.require(unitarize(taus).max_nonunitarity < 1e-9, "tau' unitarization failed");
  });

  criterion(10, "exact orthogonality of the four linear characters", 60.0, [](Check& c) {
    for (uint32_t p : {3u, 5u}) {
      const FiniteMatrixGroup g = solve_defining_system(p, 1);
      OneDimCharacters chi(p);
      long long gram[4][4] = {};
      for (const Mat3& M : g.elements()) {
        const auto v = chi.values(M);
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) gram[i][j] += v[i] * v[j];
      }
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          c.require(gram[i][j] == (i == j ? static_cast<long long>(g.size()) : 0),
                    "orthogonality fails at p = " + std::to_string(p));
    }
  });

  criterion(11, "level-2 probe at p = 3: both orders, containment", 600.0, [](Check& c) {
    const HenselReport r = hensel_compare(3, 2);
    c.require(r.closure_order > 0 && r.solver_order > 0, "empty enumeration");
    c.require(r.contained, "closure not contained in the solver set");
    c.note("closure " + std::to_string(r.closure_order) + ", solver " +
           std::to_string(r.solver_order) + ", equality observed: " + (r.equal ? "yes" : "no"));
  });

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", g_failures);
  return 1;
}
