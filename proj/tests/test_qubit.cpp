#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "padic/qubit.hpp"

using namespace padic;

namespace {

Mat3 rows(uint32_t p, std::array<std::array<int64_t, 3>, 3> r) {
  return Mat3::from_rows(Modulus::make(p, 1), r);
}

}  // namespace

TEST_CASE("coherent sequences") {
  const Mat3 id3 = Mat3::identity(Modulus::make(3, 1));
  const PadicMat3 lift = PadicMat3::constant_lift(id3, 4);
  CHECK(lift.project_pi1() == id3);
  CHECK(lift.project(3) == Mat3::identity(Modulus::make(3, 3)));

  std::array<std::vector<uint64_t>, 9> bad;
  for (auto& s : bad) s = {1, 1};
  bad[0] = {1, 2};  // 2 != 1 mod 3
  CHECK_THROWS_AS(PadicMat3(3, 2, bad), IncoherentSequence);
}

TEST_CASE("variant counts") {
  CHECK(variant_count(2) == 1);
  CHECK(variant_count(3) == 1);
  CHECK(variant_count(5) == 2);
  CHECK(variant_count(7) == 3);
  CHECK_THROWS_AS(QubitRep(5, 3), BadVariant);
  CHECK_THROWS_AS(QubitRep(3, 2), BadVariant);
  CHECK_THROWS_AS(QubitRep(2, 2), BadVariant);
}

TEST_CASE("explicit generator images for p = 3") {
  QubitRep j3(3);
  CHECK(approx_equal(j3.eval_modp(rows(3, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}})),
                     ComplexMat2::identity(), 0.0));
  // C = M(0,1,.,.,1) and Z = M(1,0,.,.,-1); images are exact integer matrices
  const ComplexMat2 jc = j3.eval_modp(rows(3, {{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}}));
  CHECK(distance(jc, ComplexMat2{{0, -1, 1, 0}}) == 0.0);
  const ComplexMat2 jz = j3.eval_modp(rows(3, {{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}}));
  CHECK(distance(jz, ComplexMat2{{1, 0, 0, -1}}) == 0.0);
}

TEST_CASE("the p = 3 map is the entrywise embedding of the minor") {
  QubitRep j3(3);
  const FiniteMatrixGroup G = solve_defining_system(3, 1);
  std::set<std::array<int, 4>> image;
  for (const Mat3& g : G.elements()) {
    const ComplexMat2 val = j3.eval_modp(g);
    std::array<int, 4> key;
    for (int i = 0; i < 4; ++i) {
      CHECK(val.e[i].imag() == 0.0);
      key[i] = static_cast<int>(val.e[i].real());
    }
    // exact match with the signed minor entries
    CHECK(key[0] == g.entry(0, 0).signed_rep());
    CHECK(key[1] == g.entry(0, 1).signed_rep());
    CHECK(key[2] == g.entry(1, 0).signed_rep());
    CHECK(key[3] == g.entry(1, 1).signed_rep());
    image.insert(key);
  }
  CHECK(image.size() == 8);
}

TEST_CASE("explicit generator images for p = 5") {
  const Mat3 C = rows(5, {{{-2, -2, 0}, {1, -2, 0}, {0, 0, 1}}});
  const Mat3 Z = rows(5, {{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}});
  const double h = 0.5, rt = std::sqrt(3.0) / 2.0;
  QubitRep j51(5, 1), j52(5, 2);
  CHECK(approx_equal(j51.eval_modp(C), ComplexMat2{{h, -rt, rt, h}}));
  CHECK(approx_equal(j51.eval_modp(Z), ComplexMat2{{1, 0, 0, -1}}));
  CHECK(approx_equal(j52.eval_modp(C), ComplexMat2{{-h, -rt, rt, -h}}));
  CHECK(approx_equal(j52.eval_modp(Z), ComplexMat2{{1, 0, 0, -1}}));
}

TEST_CASE("explicit generator images for p = 2") {
  QubitRep j2(2);
  const ComplexMat2 t12 = j2.eval_modp(rows(2, {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}}));
  CHECK(distance(t12, ComplexMat2{{-1, 1, 0, 1}}) == 0.0);
  const ComplexMat2 t23 = j2.eval_modp(rows(2, {{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}}));
  CHECK(distance(t23, ComplexMat2{{1, 0, 1, -1}}) == 0.0);
}

TEST_CASE("rejections") {
  QubitRep j3(3);
  CHECK_THROWS_AS(j3.eval_modp(rows(3, {{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}})), NotInGroup);
  QubitRep j2(2);
  CHECK_THROWS_AS(j2.eval_modp(rows(2, {{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}})), NotInGroup);
}

TEST_CASE("homomorphism deviations vanish") {
  CHECK(homomorphism_check(3, 1) == 0.0);
  CHECK(homomorphism_check(2, 1) == 0.0);
  CHECK(homomorphism_check(5, 1) < 1e-9);
  CHECK(homomorphism_check(5, 2) < 1e-9);
}

TEST_CASE("the dihedral family works beyond the worked-out primes") {
  CHECK(homomorphism_check(7, 2) < 1e-9);
  CHECK(irreducibility_check(7, 2));
  // image kernel of variant idx inside D_8 is gcd(idx, 8) rotations
  CHECK(faithfulness_check(7, 1).image_kernel == 1);
  CHECK(faithfulness_check(7, 2).image_kernel == 2);
  CHECK(faithfulness_check(7, 3).image_kernel == 1);
}

TEST_CASE("irreducibility by commutant dimension") {
  CHECK(irreducibility_check(3, 1));
  CHECK(irreducibility_check(5, 1));
  CHECK(irreducibility_check(5, 2));
  CHECK(irreducibility_check(2, 1));

  // a direct sum of two characters has a two-dimensional commutant
  OneDimCharacters chi(3);
  const FiniteMatrixGroup G = solve_defining_system(3, 1);
  std::vector<ComplexMat2> sums;
  for (const Mat3& g : G.elements()) {
    const auto vals = chi.values(g);
    sums.push_back(ComplexMat2{{double(vals[0]), 0, 0, double(vals[1])}});
  }
  CHECK(commutant_dimension(sums) == 2);
}

TEST_CASE("unitarization") {
  // already-orthogonal images keep the identity basis
  for (auto [p, variant] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 1}, {5, 1}}) {
    QubitRep rep(p, variant);
    const FiniteMatrixGroup G = solve_defining_system(p, 1);
    std::vector<ComplexMat2> images;
    for (const Mat3& g : G.elements()) images.push_back(rep.eval_modp(g));
    const Unitarized u = unitarize(images);
    CHECK(approx_equal(u.basis, ComplexMat2::identity()));
    CHECK(u.max_nonunitarity < 1e-9);
  }

  // the integer S_3 constituent needs a genuine basis change
  std::vector<ComplexMat2> taus;
  for (const auto& g : s3_all()) taus.push_back(tau_prime(g));
  const Unitarized u = unitarize(taus);
  CHECK(u.max_nonunitarity < 1e-9);
  CHECK_FALSE(approx_equal(u.basis, ComplexMat2::identity()));

  QubitRep j2u(2, 1, true);
  CHECK(nonunitarity(j2u.eval_modp(rows(2, {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}}))) < 1e-9);
}

TEST_CASE("kernel sizes") {
  const KernelReport k51 = faithfulness_check(5, 1);
  CHECK(k51.image_kernel == 1);
  CHECK(k51.group_kernel == 25);  // the two free lower-row entries at s = 1, (a,b) = (1,0)

  const KernelReport k52 = faithfulness_check(5, 2);
  CHECK(k52.image_kernel == 2);
  CHECK(k52.group_kernel == 50);

  // a trivial representation has the whole group as kernel
  const FiniteMatrixGroup G = solve_defining_system(3, 1);
  const std::vector<ComplexMat2> trivial(G.size(), ComplexMat2::identity());
  size_t kernel = 0;
  for (const auto& img : trivial)
    if (approx_equal(img, ComplexMat2::identity())) ++kernel;
  CHECK(kernel == G.size());
}

TEST_CASE("evaluation factors through the first component") {
  std::mt19937_64 rng(99);
  for (auto [p, variant] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 1}, {5, 2}}) {
    QubitRep rep(p, variant);
    const FiniteMatrixGroup G = solve_defining_system(p, 1);
    std::uniform_int_distribution<uint32_t> pick(0, static_cast<uint32_t>(G.size() - 1));
    for (int trial = 0; trial < 50; ++trial) {
      const Mat3& base = G.at(pick(rng));
      std::array<std::vector<uint64_t>, 9> seqs;
      for (int e = 0; e < 9; ++e) {
        uint64_t val = base.raw()[e], scale = p;
        seqs[e].push_back(val);
        for (int depth = 1; depth < 4; ++depth) {
          val += (rng() % p) * scale;
          scale *= p;
          seqs[e].push_back(val);
        }
      }
      const PadicMat3 lifted(p, 4, seqs);
      CHECK(distance(rep.eval(lifted), rep.eval_modp(base)) == 0.0);
    }
  }
}
