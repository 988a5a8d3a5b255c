#include "padic/qubit.hpp"

#include <algorithm>

namespace padic {

PadicMat3::PadicMat3(uint32_t p, uint32_t depth, std::array<std::vector<uint64_t>, 9> entries)
    : p_(p), depth_(depth), seq_(std::move(entries)) {
  if (depth_ < 1) throw DomainError("p-adic depth must be at least 1");
  Modulus::make(p_, depth_);  // validates p prime and the word-size cap
  std::vector<uint64_t> pk(depth_ + 1, 1);
  for (uint32_t j = 1; j <= depth_; ++j) pk[j] = pk[j - 1] * p_;
  for (auto& s : seq_) {
    if (s.size() != depth_) throw IncoherentSequence("entry sequence length differs from depth");
    for (uint32_t j = 0; j < depth_; ++j) s[j] %= pk[j + 1];
    for (uint32_t j = 0; j + 1 < depth_; ++j)
      if (s[j + 1] % pk[j + 1] != s[j])
        throw IncoherentSequence("sequence breaks the coherence condition a_{j+1} = a_j mod p^j");
  }
}

PadicMat3 PadicMat3::constant_lift(const Mat3& mod_p, uint32_t depth) {
  if (mod_p.modulus().k != 1) throw DomainError("constant lift starts from a mod-p matrix");
  std::array<std::vector<uint64_t>, 9> seqs;
  for (int i = 0; i < 9; ++i) seqs[i].assign(depth, mod_p.raw()[i]);
  return PadicMat3(mod_p.modulus().p, depth, std::move(seqs));
}

Mat3 PadicMat3::project(uint32_t level) const {
  if (level < 1 || level > depth_) throw DomainError("projection level out of range");
  Mat3 M(Modulus::make(p_, level));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) M.set(i, j, seq_[i * 3 + j][level - 1]);
  return M;
}

S3Element s3_mul(const S3Element& a, const S3Element& b) {
  S3Element r;
  for (int i = 0; i < 3; ++i) r.image[i] = a.image[b.image[i]];
  return r;
}

std::vector<S3Element> s3_all() {
  std::vector<S3Element> out;
  std::array<uint8_t, 3> perm{0, 1, 2};
  do {
    out.push_back({perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

int s3_sign(const S3Element& a) {
  int inv = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (a.image[i] > a.image[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

S3Element s3_from_matrix_mod2(const Mat3& M) {
  if (M.modulus().p != 2 || M.modulus().k != 1)
    throw DomainError("permutation reading requires a mod-2 matrix");
  S3Element g;
  std::array<bool, 3> hit{false, false, false};
  for (int col = 0; col < 3; ++col) {
    int row = -1;
    for (int r = 0; r < 3; ++r) {
      if (M.at(r, col) == 1) {
        if (row >= 0) throw NotInGroup("matrix mod 2 is not a permutation matrix: " + M.str());
        row = r;
      }
    }
    if (row < 0 || hit[row]) throw NotInGroup("matrix mod 2 is not a permutation matrix: " + M.str());
    hit[row] = true;
    g.image[col] = static_cast<uint8_t>(row);
  }
  return g;
}

ComplexMat2 tau_prime(const S3Element& g) {
  // coordinates of e_i - e_j in the basis f1 = e0-e1, f2 = e1-e2 (0-indexed)
  auto coords = [](int i, int j) -> std::array<double, 2> {
    if (i == j) return {0, 0};
    double sign = 1;
    if (i > j) {
      std::swap(i, j);
      sign = -1;
    }
    if (i == 0 && j == 1) return {sign, 0};
    if (i == 1 && j == 2) return {0, sign};
    return {sign, sign};  // (0,2)
  };
  const auto col1 = coords(g.image[0], g.image[1]);
  const auto col2 = coords(g.image[1], g.image[2]);
  return {{col1[0], col2[0], col1[1], col2[1]}};
}

uint32_t variant_count(uint32_t p) {
  if (!is_prime(p)) throw DomainError("variant count requires a prime");
  return p == 2 ? 1 : (p - 1) / 2;
}

QubitRep::QubitRep(uint32_t p, uint32_t variant, bool unitary_basis)
    : p_(p), variant_(variant), unitary_(unitary_basis) {
  if (variant_ < 1 || variant_ > variant_count(p))
    throw BadVariant("variant " + std::to_string(variant) + " not available for p = " +
                     std::to_string(p));
  if (p_ != 2) {
    form_ = make_form(p_, 1);
    gen_ = NormOneGroup(p_).generator();
  }
  if (unitary_) {
    std::vector<ComplexMat2> raw;
    if (p_ == 2) {
      for (const auto& g : s3_all()) raw.push_back(tau_prime(g));
    } else {
      for (uint32_t m = 0; m < p_ + 1; ++m)
        for (uint32_t r = 0; r < 2; ++r)
          raw.push_back(dihedral_two_irrep(p_ + 1, variant_, {p_ + 1, m, r}));
    }
    const Unitarized u = unitarize(raw);
    basis_ = u.basis;
    basis_inv_ = u.basis.inverse();
  }
}

ComplexMat2 QubitRep::image_value(const DihedralElement& g) const {
  if (p_ == 2) throw DomainError("p = 2 factors through S_3, not a dihedral group");
  ComplexMat2 out = dihedral_two_irrep(p_ + 1, variant_, g);
  if (unitary_) out = basis_ * out * basis_inv_;
  return out;
}

ComplexMat2 QubitRep::eval_modp(const Mat3& M) const {
  if (M.modulus().p != p_ || M.modulus().k != 1)
    throw DomainError("qubit maps evaluate mod-p matrices for their own prime");
  if (p_ == 2) {
    ComplexMat2 out = tau_prime(s3_from_matrix_mod2(M));
    if (unitary_) out = basis_ * out * basis_inv_;
    return out;
  }
  if (!satisfies_defining_relations(form_, M))
    throw NotInGroup("matrix violates the defining relations mod p: " + M.str());
  const MinorMat2 minor = project_minor(form_, M);
  return image_value(to_dihedral(minor, gen_));
}

double homomorphism_check(uint32_t p, uint32_t variant) {
  const FiniteMatrixGroup G = solve_defining_system(p, 1);
  const QubitRep rep(p, variant);
  std::vector<ComplexMat2> J;
  J.reserve(G.size());
  for (const Mat3& g : G.elements()) J.push_back(rep.eval_modp(g));
  double worst = 0;
  for (uint32_t i = 0; i < G.size(); ++i)
    for (uint32_t j = 0; j < G.size(); ++j) {
      const uint32_t ij = G.id_of(G.at(i) * G.at(j));
      worst = std::max(worst, distance(J[ij], J[i] * J[j]));
    }
  return worst;
}

int commutant_dimension(const std::vector<ComplexMat2>& images, double tol) {
  // rows of the linear system in x = vec(X), X J - J X = 0
  std::vector<std::array<complex_t, 4>> rows;
  for (const auto& J : images) {
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        std::array<complex_t, 4> row{};
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            complex_t coeff = 0;
            if (i == r) coeff += J.at(j, c);   // (X J)_{rc} term
            if (j == c) coeff -= J.at(r, i);   // (J X)_{rc} term
            row[i * 2 + j] += coeff;
          }
        rows.push_back(row);
      }
  }
  int rank = 0;
  for (int col = 0; col < 4 && rank < static_cast<int>(rows.size()); ++col) {
    size_t pivot = rank;
    double best = 0;
    for (size_t r = rank; r < rows.size(); ++r) {
      const double mag = std::abs(rows[r][col]);
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best <= tol) continue;
    std::swap(rows[rank], rows[pivot]);
    const complex_t lead = rows[rank][col];
    for (size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank) continue;
      const complex_t f = rows[r][col] / lead;
      for (int cc = 0; cc < 4; ++cc) rows[r][cc] -= f * rows[rank][cc];
    }
    ++rank;
  }
  return 4 - rank;
}

bool irreducibility_check(uint32_t p, uint32_t variant) {
  const FiniteMatrixGroup G = solve_defining_system(p, 1);
  const QubitRep rep(p, variant);
  std::vector<ComplexMat2> images;
  images.reserve(G.size());
  for (const Mat3& g : G.elements()) images.push_back(rep.eval_modp(g));
  return commutant_dimension(images) == 1;
}

Unitarized unitarize(const std::vector<ComplexMat2>& images) {
  ComplexMat2 P{};
  for (const auto& J : images) {
    const ComplexMat2 g = J.adjoint() * J;
    for (int i = 0; i < 4; ++i) P.e[i] += g.e[i];
  }
  for (int i = 0; i < 4; ++i) P.e[i] /= static_cast<double>(images.size());
  Unitarized out;
  out.basis = hermitian_sqrt(P);
  const ComplexMat2 inv = out.basis.inverse();
  for (const auto& J : images) {
    out.images.push_back(out.basis * J * inv);
    out.max_nonunitarity = std::max(out.max_nonunitarity, nonunitarity(out.images.back()));
  }
  return out;
}

KernelReport faithfulness_check(uint32_t p, uint32_t variant) {
  const QubitRep rep(p, variant);
  KernelReport r;
  const FiniteMatrixGroup G = solve_defining_system(p, 1);
  for (const Mat3& g : G.elements())
    if (approx_equal(rep.eval_modp(g), ComplexMat2::identity())) ++r.group_kernel;
  if (p == 2) {
    for (const auto& g : s3_all())
      if (approx_equal(tau_prime(g), ComplexMat2::identity())) ++r.image_kernel;
  } else {
    for (uint32_t m = 0; m < p + 1; ++m)
      for (uint32_t rr = 0; rr < 2; ++rr)
        if (approx_equal(rep.image_value({p + 1, m, rr}), ComplexMat2::identity()))
          ++r.image_kernel;
  }
  return r;
}

}  // namespace padic
