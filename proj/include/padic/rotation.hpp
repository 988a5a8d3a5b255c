#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "padic/quadratic_form.hpp"

namespace padic {

enum class Axis { X, Y, Z };

/// Rotation parameter: a residue mod p^k, or the distinguished point at infinity.
struct RotParam {
  bool infinite = false;
  uint64_t sigma = 0;

  static RotParam finite(uint64_t s) { return {false, s}; }
  static RotParam inf() { return {true, 0}; }
};

/// Per-axis plane data: the ratio alpha of the two plane form coefficients,
/// and the plane-form discriminant kappa (kept for display).
struct AxisSpec {
  Axis axis;
  ModInt alpha;
  ModInt kappa;
};

AxisSpec axis_spec(const FormSpec& f, Axis ax);

/**
 * The rotation around a reference axis with parameter sigma, embedded into
 * the appropriate coordinate plane:
 *
 *   [ (1 - a s^2)/(1 + a s^2)   -2 a s/(1 + a s^2) ]
 *   [     2 s/(1 + a s^2)      (1 - a s^2)/(1 + a s^2) ]
 *
 * with a = alpha of the axis. sigma = infinity gives the limit element
 * (-1 on the plane, +1 on the axis). For p = 2 an odd parameter is handled
 * by the substitution sigma = 2t + 1, which clears the even denominator.
 *
 * Throws SingularDenominator when 1 + alpha sigma^2 is not a unit.
 */
Mat3 rotation(const FormSpec& f, Axis ax, RotParam t);

/// The full axis subgroup mod p^k, deduplicated, in enumeration order.
std::vector<Mat3> axis_group(const FormSpec& f, Axis ax);

/**
 * One branch-tagged factor of a Cardano product. Branch 1 is R(sigma),
 * branch 2 is R(inf) * R(sigma); for the z-axis branch 2 restricts sigma to
 * multiples of p. Within one axis, distinct tags give distinct matrices.
 */
struct CardanoFactor {
  int branch = 1;
  uint64_t sigma = 0;

  bool operator==(const CardanoFactor&) const = default;
};

struct CardanoTriple {
  CardanoFactor fx, fy, fz;

  bool operator==(const CardanoTriple&) const = default;
};

std::string to_string(const CardanoFactor& f);

/// All branch-tagged factors of one axis (2p^k for x and y, p^k + p^{k-1} for z).
std::vector<CardanoFactor> axis_factors(const FormSpec& f, Axis ax);

Mat3 factor_matrix(const FormSpec& f, Axis ax, const CardanoFactor& cf);

/// Product R_x R_y R_z of the tagged factors.
Mat3 cardano_compose(const FormSpec& f, const CardanoTriple& t);

/**
 * Every branch-tagged triple whose product equals M, found by exhaustive
 * search over the full factor grid (odd p). Throws NotInGroup when no triple
 * matches. At k = 1 the list always has length exactly 2; multiplicity for
 * k >= 2 is an open question, so nothing is assumed about it here.
 */
std::vector<CardanoTriple> cardano_decompose(const FormSpec& f, const Mat3& M);

/**
 * One pass over the whole factor grid: the distinct products together with
 * how many triples produce each. Works at any level k.
 */
std::pair<std::vector<Mat3>, std::vector<uint64_t>> cardano_decomposition_tally(const FormSpec& f);

}  // namespace padic
