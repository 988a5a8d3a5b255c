#pragma once

#include <cstdint>
#include <vector>

#include "padic/cmat2.hpp"
#include "padic/dihedral.hpp"
#include "padic/group.hpp"

namespace padic {

/**
 * A 3x3 matrix of truncated p-adic integers: each entry is a coherent
 * sequence (a_1, ..., a_K) with a_{j+1} = a_j mod p^j. Only the first
 * component ever reaches the qubit maps, but the type carries and validates
 * the full sequence view.
 */
class PadicMat3 {
 public:
  PadicMat3(uint32_t p, uint32_t depth, std::array<std::vector<uint64_t>, 9> entries);

  static PadicMat3 constant_lift(const Mat3& mod_p, uint32_t depth);

  uint32_t p() const { return p_; }
  uint32_t depth() const { return depth_; }

  /// Entrywise j-th component (1-based), i.e. the reduction mod p^j.
  Mat3 project(uint32_t level) const;
  Mat3 project_pi1() const { return project(1); }

  const std::array<std::vector<uint64_t>, 9>& entries() const { return seq_; }

 private:
  uint32_t p_;
  uint32_t depth_;
  std::array<std::vector<uint64_t>, 9> seq_;
};

/// A permutation of {0, 1, 2}; image[i] is where i goes.
struct S3Element {
  std::array<uint8_t, 3> image{0, 1, 2};

  bool operator==(const S3Element&) const = default;
};

S3Element s3_mul(const S3Element& a, const S3Element& b);  // composition a after b
std::vector<S3Element> s3_all();
int s3_sign(const S3Element& a);

/// Reads a mod-2 group element as the permutation matrix it is.
S3Element s3_from_matrix_mod2(const Mat3& M);

/// The degree-2 constituent of the permutation representation of S_3 in the
/// basis {e1 - e2, e2 - e3}; integer matrices, unitary only after a basis change.
ComplexMat2 tau_prime(const S3Element& g);

/// Number of qubit variants: (p-1)/2 for odd p, 1 for p = 2.
uint32_t variant_count(uint32_t p);

/**
 * Evaluator for the two-dimensional representations: the dihedral composite
 * for odd p, and the S_3 route for p = 2. By default p = 2 answers in the raw
 * integer basis; unitary_basis conjugates by the group-averaged square root.
 */
class QubitRep {
 public:
  QubitRep(uint32_t p, uint32_t variant = 1, bool unitary_basis = false);

  uint32_t p() const { return p_; }
  uint32_t variant() const { return variant_; }

  ComplexMat2 eval_modp(const Mat3& M) const;
  ComplexMat2 eval(const PadicMat3& M) const { return eval_modp(M.project_pi1()); }

  /// Value on the dihedral element (odd p) — the image-side representation.
  ComplexMat2 image_value(const DihedralElement& g) const;

 private:
  uint32_t p_;
  uint32_t variant_;
  bool unitary_;
  FormSpec form_;                    // meaningful for odd p
  NormOnePair gen_{};                // odd p
  ComplexMat2 basis_ = ComplexMat2::identity();
  ComplexMat2 basis_inv_ = ComplexMat2::identity();
};

/// Max over all pairs (M, N) of ||J(MN) - J(M) J(N)||.
double homomorphism_check(uint32_t p, uint32_t variant);

/// Dimension of { X : X J(g) = J(g) X for all g }, computed by Gaussian
/// elimination on the stacked commutation equations.
int commutant_dimension(const std::vector<ComplexMat2>& images, double tol = 1e-9);

/// True iff the commutant of the image is one-dimensional.
bool irreducibility_check(uint32_t p, uint32_t variant);

struct Unitarized {
  ComplexMat2 basis;                // S = P^{1/2} with P the group-averaged Gram matrix
  std::vector<ComplexMat2> images;  // S J(g) S^-1
  double max_nonunitarity = 0.0;
};

Unitarized unitarize(const std::vector<ComplexMat2>& images);

struct KernelReport {
  uint64_t group_kernel = 0;  // elements of the mod-p group mapped to the identity
  uint64_t image_kernel = 0;  // kernel size inside D_{p+1} (resp. S_3 for p = 2)
};

KernelReport faithfulness_check(uint32_t p, uint32_t variant);

}  // namespace padic
