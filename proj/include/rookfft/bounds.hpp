#pragma once

#include <cstdint>

namespace rookfft {

/// Closed-form cost and storage bounds for the fast zeta transform on
/// G≀R_n, as exact integers (|G| = 1 for R_n).

/// Operations allowed for step n-k (all rank-k elements):
/// (|G|(n-k)² + |G|²(n-k-1)(n-k)(2n-2k-1)/6) · C(n,k)² k! |G|^k.
std::uint64_t zeta_step_bound(int n, int k, int group_order = 1);

/// Sum of the step bounds.
std::uint64_t zeta_sum_of_step_bounds(int n, int group_order = 1);

/// Whether `ops` ≤ (2/3) |G|² n³ |G≀R_n|, evaluated exactly.
bool within_cubic_bound(std::uint64_t ops, int n, int group_order = 1);
/// (2/3) |G|² n³ |G≀R_n| rounded down, for reporting.
std::uint64_t cubic_bound_floor(int n, int group_order = 1);

/// 2|G≀R_n| + 3 max_{0≤k<n} (n-k-1) C(n,k)² k! |G|^k.
std::uint64_t zeta_storage_bound(int n, int group_order = 1);
/// (n+1) |G≀R_n|.
std::uint64_t zeta_storage_trivial_bound(int n, int group_order = 1);

/// Additions used by summing every upper set directly: Σ_s (|{t ≥ s}| - 1).
std::uint64_t naive_zeta_cost(int n, int group_order = 1);

}  // namespace rookfft
