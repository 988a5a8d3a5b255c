#pragma once

#include <iosfwd>

#include <json.hpp>

#include "padic/group.hpp"
#include "padic/qubit.hpp"

namespace padic {

nlohmann::json matrix_json(const Mat3& M);
Mat3 matrix_from_json(const nlohmann::json& j, Modulus mod);

/// One element per line: {"m": [[...],[...],[...]], "mod": p^k}.
void dump_group(std::ostream& os, const FiniteMatrixGroup& G);
FiniteMatrixGroup load_group(std::istream& is);

nlohmann::json classes_json(const FiniteMatrixGroup& G, const std::vector<ConjClass>& classes);

nlohmann::json cmat2_json(const ComplexMat2& M);

/// Accepts a plain 3x3 integer array (constant lift) or a 3x3 array of
/// coherent digit sequences.
PadicMat3 padic_matrix_from_json(const nlohmann::json& j, uint32_t p);

/// Factors m = p^k; rejects values that are not prime powers.
Modulus modulus_from_value(uint64_t m);

}  // namespace padic
