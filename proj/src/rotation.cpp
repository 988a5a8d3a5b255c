#include "padic/rotation.hpp"

#include <unordered_map>
#include <unordered_set>

namespace padic {

namespace {

struct Plane {
  int g, h, n;
};

// Coordinate planes fixed by matching the explicit mod-p axis-group displays:
// x rotations act on (e2, e3), y on (e1, e3), z on (e1, e2).
Plane plane_of(Axis ax) {
  switch (ax) {
    case Axis::X: return {1, 2, 0};
    case Axis::Y: return {0, 2, 1};
    case Axis::Z: return {0, 1, 2};
  }
  throw DomainError("bad axis");
}

}  // namespace

AxisSpec axis_spec(const FormSpec& f, Axis ax) {
  if (f.p == 2) {
    ModInt one(1, f.mod);
    return {ax, one, one};
  }
  Plane pl = plane_of(ax);
  ModInt qg = f.gram.entry(pl.g, pl.g);
  ModInt qh = f.gram.entry(pl.h, pl.h);
  return {ax, qh * qg.inv(), qg * qh};
}

Mat3 rotation(const FormSpec& f, Axis ax, RotParam t) {
  const Plane pl = plane_of(ax);
  const uint64_t m = f.mod.m;
  Mat3 M = Mat3::identity(f.mod);
  if (t.infinite) {
    M.set(pl.g, pl.g, m - 1);
    M.set(pl.h, pl.h, m - 1);
    return M;
  }
  const uint64_t s = t.sigma % m;
  if (f.p == 2 && (s & 1)) {
    // sigma = 2t + 1; the block below is R(sigma) rewritten with a unit denominator
    const uint64_t half = m >> 1;  // 2^{k-1}
    const uint64_t tau = half ? ((s - 1) / 2) % half : 0;
    const uint64_t q = mulm(tau, addm(tau, 1 % m, m), m);      // t(t+1)
    const uint64_t den = addm(1 % m, mulm(2 % m, q, m), m);    // 1 + 2t(t+1), odd
    const uint64_t dinv = inv_mod(den, m);
    const uint64_t diag = mulm(subm(0, mulm(2 % m, q, m), m), dinv, m);
    const uint64_t off = mulm(addm(1 % m, mulm(2 % m, tau, m), m), dinv, m);
    M.set(pl.g, pl.g, diag);
    M.set(pl.h, pl.h, diag);
    M.set(pl.g, pl.h, subm(0, off, m));
    M.set(pl.h, pl.g, off);
    return M;
  }
  const uint64_t alpha = axis_spec(f, ax).alpha.value();
  const uint64_t as2 = mulm(alpha, mulm(s, s, m), m);
  const uint64_t den = addm(1 % m, as2, m);
  if (den % f.p == 0)
    throw SingularDenominator("1 + alpha*sigma^2 is not a unit for sigma = " + std::to_string(s));
  const uint64_t dinv = inv_mod(den, m);
  const uint64_t diag = mulm(subm(1 % m, as2, m), dinv, m);
  M.set(pl.g, pl.g, diag);
  M.set(pl.h, pl.h, diag);
  M.set(pl.g, pl.h, subm(0, mulm(mulm(2 % m, alpha, m), mulm(s, dinv, m), m), m));
  M.set(pl.h, pl.g, mulm(mulm(2 % m, s, m), dinv, m));
  return M;
}

std::vector<Mat3> axis_group(const FormSpec& f, Axis ax) {
  std::vector<Mat3> out;
  std::unordered_set<std::array<uint64_t, 9>, Mat3Hash> seen;
  auto push = [&](const Mat3& M) {
    if (seen.insert(M.raw()).second) out.push_back(M);
  };
  const uint64_t m = f.mod.m;
  const Mat3 flip = rotation(f, ax, RotParam::inf());
  if (f.p == 2) {
    for (uint64_t s = 0; s < m; s += 2) push(rotation(f, ax, RotParam::finite(s)));
    for (uint64_t s = 0; s < m; s += 2) push(flip * rotation(f, ax, RotParam::finite(s)));
    for (uint64_t tau = 0; tau < m / 2; ++tau) push(rotation(f, ax, RotParam::finite(2 * tau + 1)));
    return out;
  }
  for (uint64_t s = 0; s < m; ++s) push(rotation(f, ax, RotParam::finite(s)));
  if (ax == Axis::Z) {
    for (uint64_t t = 0; t < m / f.p; ++t) push(flip * rotation(f, ax, RotParam::finite(t * f.p)));
  } else {
    for (uint64_t s = 0; s < m; ++s) push(flip * rotation(f, ax, RotParam::finite(s)));
  }
  return out;
}

std::string to_string(const CardanoFactor& f) {
  if (f.branch == 1) return std::to_string(f.sigma);
  if (f.sigma == 0) return "inf";
  return "inf*" + std::to_string(f.sigma);
}

std::vector<CardanoFactor> axis_factors(const FormSpec& f, Axis ax) {
  if (f.p == 2) throw DomainError("Cardano decompositions exist only for odd primes");
  const uint64_t m = f.mod.m;
  std::vector<CardanoFactor> out;
  for (uint64_t s = 0; s < m; ++s) out.push_back({1, s});
  if (ax == Axis::Z) {
    for (uint64_t t = 0; t < m / f.p; ++t) out.push_back({2, t * f.p});
  } else {
    for (uint64_t s = 0; s < m; ++s) out.push_back({2, s});
  }
  return out;
}

Mat3 factor_matrix(const FormSpec& f, Axis ax, const CardanoFactor& cf) {
  Mat3 R = rotation(f, ax, RotParam::finite(cf.sigma));
  if (cf.branch == 2) return rotation(f, ax, RotParam::inf()) * R;
  return R;
}

Mat3 cardano_compose(const FormSpec& f, const CardanoTriple& t) {
  return factor_matrix(f, Axis::X, t.fx) * factor_matrix(f, Axis::Y, t.fy) *
         factor_matrix(f, Axis::Z, t.fz);
}

namespace {

struct FactorGrid {
  std::vector<CardanoFactor> fx, fy, fz;
  std::vector<Mat3> mx, my, mz;

  explicit FactorGrid(const FormSpec& f) {
    fx = axis_factors(f, Axis::X);
    fy = axis_factors(f, Axis::Y);
    fz = axis_factors(f, Axis::Z);
    for (const auto& c : fx) mx.push_back(factor_matrix(f, Axis::X, c));
    for (const auto& c : fy) my.push_back(factor_matrix(f, Axis::Y, c));
    for (const auto& c : fz) mz.push_back(factor_matrix(f, Axis::Z, c));
  }
};

}  // namespace

std::vector<CardanoTriple> cardano_decompose(const FormSpec& f, const Mat3& M) {
  FactorGrid grid(f);
  std::unordered_map<std::array<uint64_t, 9>, uint32_t, Mat3Hash> zindex;
  for (uint32_t i = 0; i < grid.mz.size(); ++i) zindex.emplace(grid.mz[i].raw(), i);
  std::vector<Mat3> yinv;
  yinv.reserve(grid.my.size());
  for (const Mat3& Y : grid.my) yinv.push_back(Y.inverse());
  std::vector<CardanoTriple> out;
  for (size_t i = 0; i < grid.mx.size(); ++i) {
    const Mat3 xi = grid.mx[i].inverse() * M;
    for (size_t j = 0; j < grid.my.size(); ++j) {
      const Mat3 rest = yinv[j] * xi;
      auto it = zindex.find(rest.raw());
      if (it != zindex.end()) out.push_back({grid.fx[i], grid.fy[j], grid.fz[it->second]});
    }
  }
  if (out.empty()) throw NotInGroup("matrix has no Cardano decomposition: " + M.str());
  return out;
}

std::pair<std::vector<Mat3>, std::vector<uint64_t>> cardano_decomposition_tally(const FormSpec& f) {
  FactorGrid grid(f);
  std::vector<Mat3> products;
  std::vector<uint64_t> counts;
  std::unordered_map<std::array<uint64_t, 9>, uint32_t, Mat3Hash> index;
  for (const auto& X : grid.mx)
    for (const auto& Y : grid.my) {
      const Mat3 XY = X * Y;
      for (const auto& Z : grid.mz) {
        const Mat3 P = XY * Z;
        auto [it, fresh] = index.emplace(P.raw(), static_cast<uint32_t>(products.size()));
        if (fresh) {
          products.push_back(P);
          counts.push_back(0);
        }
        ++counts[it->second];
      }
    }
  return {std::move(products), std::move(counts)};
}

}  // namespace padic
