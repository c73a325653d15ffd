#include "rookfft/counting.hpp"

#include <stdexcept>

#include "rookfft/combinatorics.hpp"
#include "rookfft/group_table.hpp"

namespace rookfft {

std::uint64_t rank_class_size(int n, int k, int group_order) {
  if (group_order < 1) throw std::invalid_argument("group order must be positive");
  const std::uint64_t c = binomial(n, k);
  return checked_mul(checked_mul(checked_mul(c, c), factorial(k)),
                     checked_pow(static_cast<std::uint64_t>(group_order), k));
}

std::uint64_t cardinality(int n, int group_order) {
  if (n < 0) throw std::invalid_argument("cardinality: n must be non-negative");
  std::uint64_t total = 0;
  for (int k = 0; k <= n; ++k) total = checked_add(total, rank_class_size(n, k, group_order));
  return total;
}

std::uint64_t cardinality(int n, const GroupTable& group) { return cardinality(n, group.order()); }

std::uint64_t cardinality_recursive(int n, int group_order) {
  if (n < 3) throw std::domain_error("cardinality_recursive: the recursion holds for n >= 3");
  const auto g = static_cast<std::uint64_t>(group_order);
  std::uint64_t prev2 = cardinality(1, group_order);
  std::uint64_t prev1 = cardinality(2, group_order);
  for (int m = 3; m <= n; ++m) {
    const auto mm = static_cast<std::uint64_t>(m);
    // (2m-1)|G||S_{m-1}| + |S_{m-1}| - (m-1)²|G|²|S_{m-2}|
    const std::uint64_t plus = checked_add(checked_mul(checked_mul(2 * mm - 1, g), prev1), prev1);
    const std::uint64_t minus = checked_mul(checked_mul((mm - 1) * (mm - 1), checked_mul(g, g)), prev2);
    if (minus > plus) throw std::logic_error("cardinality_recursive: negative intermediate");
    prev2 = prev1;
    prev1 = plus - minus;
  }
  return prev1;
}

std::uint64_t cardinality_recursive(int n, const GroupTable& group) {
  return cardinality_recursive(n, group.order());
}

}  // namespace rookfft
