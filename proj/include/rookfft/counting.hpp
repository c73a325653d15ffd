#pragma once

#include <cstdint>

namespace rookfft {

class GroupTable;

/// Number of rank-k elements of G≀R_n: C(n,k)² k! |G|^k.
std::uint64_t rank_class_size(int n, int k, int group_order = 1);

/// |G≀R_n| = Σ_k C(n,k)² k! |G|^k (|G| = 1 gives |R_n|). Throws
/// std::overflow_error when the value does not fit in 64 bits.
std::uint64_t cardinality(int n, int group_order = 1);
std::uint64_t cardinality(int n, const GroupTable& group);

/// The same value obtained from the three-term recursion in n; only stated
/// for n ≥ 3, so smaller n raises std::domain_error.
std::uint64_t cardinality_recursive(int n, int group_order = 1);
std::uint64_t cardinality_recursive(int n, const GroupTable& group);

}  // namespace rookfft
