#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rookfft/group_table.hpp"
#include "rookfft/partial_perm.hpp"
#include "rookfft/wreath_elem.hpp"

namespace rookfft {

inline constexpr int kDefaultDenseCap = 8;
/// Hard ceiling for dense enumeration, reached only on explicit request.
inline constexpr int kUnsafeDenseCap = 12;

/// Dense numbering of the elements of R_n or G≀R_n.
///
/// Layout: rank descending (rank n first); within a rank, domain subset in
/// colex order, then range subset in colex order, then the permutation type
/// by Lehmer code, then the labels read along the rows in increasing order
/// as odometer digits (the last row varies fastest).
///
/// With this layout the elements with a fixed (domain, range) pair form a
/// contiguous run of k!|G|^k indices, numbered exactly like the maximal
/// subgroup G≀S_k.
class ElementIndex {
 public:
  /// `group` may be null for the plain rook monoid. Throws if n exceeds
  /// `dense_cap`.
  explicit ElementIndex(int n, GroupPtr group = nullptr, int dense_cap = kDefaultDenseCap);

  int n() const { return n_; }
  bool has_group() const { return has_group_; }
  const GroupPtr& group() const { return group_; }
  int group_order() const { return group_->order(); }

  std::uint64_t total() const { return total_; }
  std::uint64_t rank_offset(int k) const { return offsets_[k]; }
  std::uint64_t rank_count(int k) const { return counts_[k]; }
  /// C(n,k): number of rank-k idempotents.
  std::uint64_t subset_count(int k) const { return binom_[k]; }
  /// k!|G|^k: order of the maximal subgroup of rank k.
  std::uint64_t subgroup_order(int k) const { return subgroup_[k]; }
  int rank_at(std::uint64_t index) const;

  std::uint64_t index_of(const PartialPerm& shape, std::span<const Label> labels_by_column) const;
  /// Index with identity labels.
  std::uint64_t index_of(const PartialPerm& shape) const;
  std::uint64_t index_of(const WreathElem& w) const { return index_of(w.shape(), w.labels()); }

  /// Offset of the (domain, range) run inside the whole numbering.
  std::uint64_t run_offset(int k, Mask domain, Mask range) const;

  /// Decodes an index; `labels_by_column` (length ≥ n) receives the labels.
  PartialPerm shape_at(std::uint64_t index, std::span<Label> labels_by_column) const;
  PartialPerm shape_at(std::uint64_t index) const;
  WreathElem element_at(std::uint64_t index) const;

  /// Group elements of the rank-k maximal subgroup, as full-rank elements on
  /// k points, in subgroup-id order.
  WreathElem subgroup_element(int k, std::uint64_t id) const;

 private:
  int n_;
  bool has_group_;
  GroupPtr group_;
  std::uint64_t total_ = 0;
  std::vector<std::uint64_t> offsets_, counts_, binom_, subgroup_, fact_, gpow_;
  std::vector<std::uint32_t> colex_of_mask_;
  std::vector<std::vector<Mask>> subsets_by_rank_;
};

}  // namespace rookfft
