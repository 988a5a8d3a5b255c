#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "padic/norm_one.hpp"
#include "padic/rotation.hpp"

namespace padic {

/// Caps on stored elements and candidate visits for the enumeration loops.
struct Budget {
  uint64_t max_elements = 10'000'000;
  uint64_t max_visits = 1'000'000'000;
};

/**
 * An enumerated finite group of 3x3 matrices over Z/p^k with a hash index
 * from matrix to element id. Construction appends; afterwards the group is
 * treated as immutable shared data.
 */
class FiniteMatrixGroup {
 public:
  explicit FiniteMatrixGroup(Modulus mod) : mod_(mod) {}

  const Modulus& modulus() const { return mod_; }
  size_t size() const { return elems_.size(); }
  const Mat3& at(uint32_t id) const { return elems_[id]; }
  const std::vector<Mat3>& elements() const { return elems_; }

  /// Appends if new; returns the element id either way.
  uint32_t add(const Mat3& M);

  std::optional<uint32_t> find(const Mat3& M) const;
  uint32_t id_of(const Mat3& M) const;  // throws NotInGroup

  uint32_t mul(uint32_t a, uint32_t b) const { return id_of(elems_[a] * elems_[b]); }
  uint32_t inv(uint32_t a) const { return id_of(elems_[a].inverse()); }
  uint32_t identity_id() const { return id_of(Mat3::identity(mod_)); }

  /// Full closure check: every pairwise product lands back in the set.
  bool is_closed() const;

  bool same_elements(const FiniteMatrixGroup& o) const;

 private:
  Modulus mod_;
  std::vector<Mat3> elems_;
  std::unordered_map<std::array<uint64_t, 9>, uint32_t, Mat3Hash> index_;
};

/// Breadth-first closure of the generators under multiplication.
FiniteMatrixGroup generate_closure(const std::vector<Mat3>& generators, Modulus mod,
                                   const Budget& budget = {});

/**
 * All solutions of L^T A L = A, det L = 1 mod p^k, enumerated column by
 * column: the two leading columns are pruned by the quadratic and bilinear
 * conditions before the third is scanned against the remaining equations.
 */
FiniteMatrixGroup solve_defining_system(uint32_t p, uint32_t k, const Budget& budget = {});

/// The element M(a,b,c,d,s) = [[a, svb, 0], [b, sa, 0], [c, d, s]] of the mod-p group.
struct ParamElement {
  ModInt a, b, c, d;
  int s = 1;

  Mat3 to_matrix(const ModInt& v) const;
};

/// All 2p^2(p+1) parameter tuples (odd p); bijective with the mod-p solver set.
std::vector<ParamElement> parameterize_mod_p(uint32_t p);

/// Subgroup generated by all commutators [g, h] = g h g^-1 h^-1.
FiniteMatrixGroup commutator_subgroup(const FiniteMatrixGroup& G);

struct Abelianization {
  uint64_t order = 0;
  std::vector<uint32_t> coset_rep_ids;            // smallest member id per coset
  std::vector<std::vector<uint32_t>> mult_table;  // coset index products
  std::vector<uint32_t> element_orders;           // order of each coset in the quotient
  std::string iso_type;                           // "trivial", "Z/n", "Z/2 x Z/2", ...
};

Abelianization abelianization(const FiniteMatrixGroup& G, const FiniteMatrixGroup& commutators);

struct ConjClass {
  uint32_t rep_id = 0;
  std::vector<uint32_t> member_ids;

  size_t size() const { return member_ids.size(); }
};

/// Orbit partition under conjugation, classes ordered by smallest member id.
std::vector<ConjClass> conjugacy_classes(const FiniteMatrixGroup& G);

/**
 * Largest abelian normal subgroup found among unions of conjugacy classes
 * that contain the identity class, commute pairwise and close under product.
 */
FiniteMatrixGroup maximal_abelian_normal_subgroup(const FiniteMatrixGroup& G,
                                                  const std::vector<ConjClass>& classes);

/**
 * The four one-dimensional characters det, s, t, st of the mod-p group.
 * t is evaluated by the closed forms a^2 - b^2 (p = 3) and sign(a) under
 * signed representatives (p = 5); for other odd p it is the parity of the
 * discrete log of the norm-one part, which the closed forms specialize.
 */
class OneDimCharacters {
 public:
  explicit OneDimCharacters(uint32_t p);

  int chi_det(const Mat3&) const { return 1; }
  int chi_s(const Mat3& M) const;
  int chi_t(const Mat3& M) const;
  int chi_st(const Mat3& M) const { return chi_s(M) * chi_t(M); }

  std::array<int, 4> values(const Mat3& M) const;

 private:
  uint32_t p_;
  FormSpec form_;
  NormOneGroup pairs_;
  NormOnePair gen_;
};

struct HenselReport {
  uint64_t closure_order = 0;
  uint64_t solver_order = 0;
  bool equal = false;
  bool contained = false;  // closure subset of solver set
};

/// Builds the quotient group both ways (axis-group closure vs. defining-system
/// solver) and compares the results. Equality for k >= 2 is reported, never assumed.
HenselReport hensel_compare(uint32_t p, uint32_t k, const Budget& budget = {});

/// Generators for the closure route: the three axis subgroups mod p^k.
std::vector<Mat3> axis_group_generators(const FormSpec& f);

/// True iff L^T A L = A and det L = 1 at the form's level.
bool satisfies_defining_relations(const FormSpec& f, const Mat3& L);

}  // namespace padic
