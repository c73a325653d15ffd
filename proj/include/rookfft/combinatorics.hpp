#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rookfft {

/// Largest ground-set size any element type can hold.
inline constexpr int kMaxN = 16;

using Mask = std::uint32_t;

/// Exact binomial coefficient; throws std::overflow_error if it does not fit.
std::uint64_t binomial(int n, int k);
std::uint64_t factorial(int n);

/// Checked arithmetic used by every exact counting routine.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, int exp);

inline int popcount(Mask m) { return __builtin_popcount(m); }

/// Position of the subset among all |subset|-subsets in colexicographic order.
std::uint64_t colex_rank(Mask subset);
/// Inverse of colex_rank for k-subsets.
Mask colex_unrank(std::uint64_t rank, int k);

/// Lexicographic rank (Lehmer code) of a permutation of {0..k-1}.
std::uint64_t lehmer_rank(std::span<const std::uint8_t> perm);
std::vector<std::uint8_t> lehmer_unrank(std::uint64_t rank, int k);

/// Integer partition, parts non-increasing.
using Partition = std::vector<int>;

/// All partitions of k, lexicographically decreasing: [k], [k-1,1], ...
std::vector<Partition> partitions(int k);

/// Standard Young tableau stored as the row index of each entry 0..k-1.
using RowWord = std::vector<std::uint8_t>;

/// All standard Young tableaux of the given shape, ordered lexicographically
/// by their row words.
std::vector<RowWord> standard_tableaux(const Partition& shape);

std::string partition_label(const Partition& p);

}  // namespace rookfft
