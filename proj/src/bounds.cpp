#include "rookfft/bounds.hpp"

#include <algorithm>

#include "rookfft/combinatorics.hpp"
#include "rookfft/counting.hpp"

namespace rookfft {

std::uint64_t zeta_step_bound(int n, int k, int group_order) {
  const auto g = static_cast<std::uint64_t>(group_order);
  const auto c = static_cast<std::uint64_t>(n - k);
  std::uint64_t cubic = 0;
  if (c >= 1) cubic = (c - 1) * c * (2 * c - 1) / 6;
  const std::uint64_t per_element = checked_add(checked_mul(g, c * c), checked_mul(checked_mul(g, g), cubic));
  return checked_mul(per_element, rank_class_size(n, k, group_order));
}

std::uint64_t zeta_sum_of_step_bounds(int n, int group_order) {
  std::uint64_t total = 0;
  for (int k = 0; k <= n; ++k) total = checked_add(total, zeta_step_bound(n, k, group_order));
  return total;
}

bool within_cubic_bound(std::uint64_t ops, int n, int group_order) {
  const auto g = static_cast<std::uint64_t>(group_order);
  const auto nn = static_cast<std::uint64_t>(n);
  const unsigned __int128 lhs = static_cast<unsigned __int128>(ops) * 3;
  const unsigned __int128 rhs =
      static_cast<unsigned __int128>(2 * g * g * nn * nn * nn) * cardinality(n, group_order);
  return lhs <= rhs;
}

std::uint64_t cubic_bound_floor(int n, int group_order) {
  const auto g = static_cast<std::uint64_t>(group_order);
  const auto nn = static_cast<std::uint64_t>(n);
  return checked_mul(2 * g * g * nn * nn * nn, cardinality(n, group_order)) / 3;
}

std::uint64_t zeta_storage_bound(int n, int group_order) {
  std::uint64_t worst = 0;
  for (int k = 0; k < n; ++k) {
    worst = std::max(worst, checked_mul(static_cast<std::uint64_t>(n - k - 1), rank_class_size(n, k, group_order)));
  }
  return checked_add(checked_mul(2, cardinality(n, group_order)), checked_mul(3, worst));
}

std::uint64_t zeta_storage_trivial_bound(int n, int group_order) {
  return checked_mul(static_cast<std::uint64_t>(n + 1), cardinality(n, group_order));
}

std::uint64_t naive_zeta_cost(int n, int group_order) {
  std::uint64_t total = 0;
  for (int k = 0; k <= n; ++k) {
    total = checked_add(total, checked_mul(rank_class_size(n, k, group_order), cardinality(n - k, group_order) - 1));
  }
  return total;
}

}  // namespace rookfft
