#include "padic/degree.hpp"

#include <algorithm>

namespace padic {

namespace {

void search(const std::vector<uint32_t>& allowed, size_t from, uint64_t remaining, uint32_t slots,
            std::vector<uint32_t>& cur, std::vector<std::vector<uint32_t>>& out) {
  if (slots == 0) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (size_t i = from; i < allowed.size(); ++i) {
    const uint64_t d = allowed[i];
    const uint64_t sq = d * d;
    // non-decreasing degrees: the remaining slots are all >= d, so slots * d^2
    // is a lower bound; once it overshoots, every later choice does too
    if (sq * slots > remaining) break;
    cur.push_back(allowed[i]);
    search(allowed, i, remaining - sq, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<uint32_t>> solve_degrees(const DegreeProblem& prob) {
  std::vector<uint32_t> allowed = prob.allowed_degrees;
  std::sort(allowed.begin(), allowed.end());
  allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> cur;
  if (prob.slot_count == 0) return out;
  search(allowed, 0, prob.residual_sum, prob.slot_count, cur, out);
  return out;
}

std::vector<std::vector<uint32_t>> constrain_by_ito(const std::vector<std::vector<uint32_t>>& multisets,
                                                    uint64_t index) {
  std::vector<std::vector<uint32_t>> out;
  for (const auto& ms : multisets) {
    bool ok = true;
    for (uint32_t d : ms)
      if (index % d != 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(ms);
  }
  return out;
}

std::vector<std::vector<uint32_t>> constrain_by_min_two_count(
    const std::vector<std::vector<uint32_t>>& multisets, uint32_t min_twos) {
  std::vector<std::vector<uint32_t>> out;
  for (const auto& ms : multisets)
    if (std::count(ms.begin(), ms.end(), 2u) >= static_cast<long>(min_twos)) out.push_back(ms);
  return out;
}

std::vector<uint32_t> proper_divisors_above_one(uint64_t n) {
  std::vector<uint32_t> out;
  for (uint64_t d = 2; d <= n; ++d)
    if (n % d == 0) out.push_back(static_cast<uint32_t>(d));
  return out;
}

}  // namespace padic
