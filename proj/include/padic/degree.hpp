#pragma once

#include <cstdint>
#include <vector>

namespace padic {

/**
 * Instance of the irrep-degree equation: find all non-decreasing multisets
 * (d_1, ..., d_slot_count) from allowed_degrees with sum of squares equal to
 * residual_sum (the group order minus the number of one-dimensional irreps).
 */
struct DegreeProblem {
  uint64_t residual_sum = 0;
  uint32_t slot_count = 0;
  std::vector<uint32_t> allowed_degrees;  // all > 1
};

/// All solutions in lexicographic order; empty means infeasible.
std::vector<std::vector<uint32_t>> solve_degrees(const DegreeProblem& prob);

/// Keeps multisets whose every degree divides the index of an abelian normal subgroup.
std::vector<std::vector<uint32_t>> constrain_by_ito(const std::vector<std::vector<uint32_t>>& multisets,
                                                    uint64_t index);

/// Keeps multisets containing at least min_twos copies of degree 2.
std::vector<std::vector<uint32_t>> constrain_by_min_two_count(
    const std::vector<std::vector<uint32_t>>& multisets, uint32_t min_twos);

/// Divisors of n greater than 1, ascending.
std::vector<uint32_t> proper_divisors_above_one(uint64_t n);

}  // namespace padic
