#include "padic/json_io.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace padic {

using nlohmann::json;

json matrix_json(const Mat3& M) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j) row.push_back(M.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

Mat3 matrix_from_json(const json& j, Modulus mod) {
  if (!j.is_array() || j.size() != 3) throw DomainError("matrix JSON must be a 3x3 array");
  std::array<std::array<int64_t, 3>, 3> rows{};
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_array() || j[i].size() != 3) throw DomainError("matrix JSON must be a 3x3 array");
    for (int c = 0; c < 3; ++c) rows[i][c] = j[i][c].get<int64_t>();
  }
  return Mat3::from_rows(mod, rows);
}

void dump_group(std::ostream& os, const FiniteMatrixGroup& G) {
  for (const Mat3& g : G.elements()) {
    json line;
    line["m"] = matrix_json(g);
    line["mod"] = G.modulus().m;
    os << line.dump() << "\n";
  }
}

Modulus modulus_from_value(uint64_t m) {
  if (m < 2) throw DomainError("modulus value must exceed 1");
  uint64_t p = m;
  for (uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      p = d;
      break;
    }
  uint32_t k = 0;
  uint64_t rest = m;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw DomainError("modulus value " + std::to_string(m) + " is not a prime power");
  return Modulus::make(static_cast<uint32_t>(p), k);
}

FiniteMatrixGroup load_group(std::istream& is) {
  std::string line;
  bool have_mod = false;
  Modulus mod;
  std::vector<Mat3> elems;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    const uint64_t m = j.at("mod").get<uint64_t>();
    if (!have_mod) {
      mod = modulus_from_value(m);
      have_mod = true;
    } else if (m != mod.m) {
      throw DomainError("group dump mixes moduli");
    }
    elems.push_back(matrix_from_json(j.at("m"), mod));
  }
  if (!have_mod) throw DomainError("empty group dump");
  FiniteMatrixGroup G(mod);
  for (const Mat3& e : elems) G.add(e);
  return G;
}

json classes_json(const FiniteMatrixGroup& G, const std::vector<ConjClass>& classes) {
  json out;
  out["classes"] = json::array();
  for (const auto& cls : classes) {
    json c;
    c["size"] = cls.size();
    c["rep"] = matrix_json(G.at(cls.rep_id));
    out["classes"].push_back(c);
  }
  return out;
}

json cmat2_json(const ComplexMat2& M) {
  json out = json::array();
  // +0.0 normalizes negative zeros for stable output
  for (const auto& z : M.e) out.push_back(json::array({z.real() + 0.0, z.imag() + 0.0}));
  return out;
}

PadicMat3 padic_matrix_from_json(const json& j, uint32_t p) {
  if (!j.is_array() || j.size() != 3) throw DomainError("p-adic matrix JSON must be a 3x3 array");
  bool sequences = j[0].is_array() && j[0].size() == 3 && j[0][0].is_array();
  if (!sequences) {
    const Mat3 M = matrix_from_json(j, Modulus::make(p, 1));
    return PadicMat3::constant_lift(M, 1);
  }
  uint32_t depth = 0;
  std::array<std::vector<uint64_t>, 9> seqs;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      const json& cell = j[r][c];
      if (!cell.is_array() || cell.empty())
        throw DomainError("p-adic entries must be non-empty digit sequences");
      if (depth == 0) depth = static_cast<uint32_t>(cell.size());
      if (cell.size() != depth) throw IncoherentSequence("entry sequences have mixed depth");
      for (const auto& d : cell) {
        const int64_t raw = d.get<int64_t>();
        seqs[r * 3 + c].push_back(reduce_signed(raw, Modulus::make(p, depth).m));
      }
    }
  return PadicMat3(p, depth, std::move(seqs));
}

}  // namespace padic
