#include "rookfft/element_index.hpp"

#include <algorithm>
#include <stdexcept>

#include "rookfft/counting.hpp"

namespace rookfft {

namespace {

GroupPtr trivial_group() {
  static const GroupPtr g = std::make_shared<const GroupTable>(GroupTable::trivial());
  return g;
}

}  // namespace

ElementIndex::ElementIndex(int n, GroupPtr group, int dense_cap)
    : n_(n), has_group_(group != nullptr), group_(group ? std::move(group) : trivial_group()) {
  if (n < 0 || n > kMaxN) throw std::invalid_argument("ElementIndex: n out of range");
  if (n > dense_cap) {
    throw std::invalid_argument("ElementIndex: n = " + std::to_string(n) + " exceeds the dense cap " +
                                std::to_string(dense_cap));
  }
  const int g = group_->order();
  offsets_.assign(n + 1, 0);
  counts_.assign(n + 1, 0);
  binom_.assign(n + 1, 0);
  subgroup_.assign(n + 1, 0);
  fact_.assign(n + 1, 0);
  gpow_.assign(n + 1, 0);
  for (int k = 0; k <= n; ++k) {
    binom_[k] = binomial(n, k);
    fact_[k] = factorial(k);
    gpow_[k] = checked_pow(static_cast<std::uint64_t>(g), k);
    subgroup_[k] = checked_mul(fact_[k], gpow_[k]);
    counts_[k] = rank_class_size(n, k, g);
  }
  std::uint64_t off = 0;
  for (int k = n; k >= 0; --k) {
    offsets_[k] = off;
    off = checked_add(off, counts_[k]);
  }
  total_ = off;
  colex_of_mask_.assign(std::size_t{1} << n, 0);
  subsets_by_rank_.assign(n + 1, {});
  for (int k = 0; k <= n; ++k) subsets_by_rank_[k].resize(binom_[k]);
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    const auto r = static_cast<std::uint32_t>(colex_rank(m));
    colex_of_mask_[m] = r;
    subsets_by_rank_[popcount(m)][r] = m;
  }
}

int ElementIndex::rank_at(std::uint64_t index) const {
  if (index >= total_) throw std::out_of_range("element index out of range");
  int k = n_;
  while (index >= offsets_[k] + counts_[k]) --k;
  return k;
}

std::uint64_t ElementIndex::run_offset(int k, Mask domain, Mask range) const {
  return offsets_[k] + (colex_of_mask_[domain] * binom_[k] + colex_of_mask_[range]) * subgroup_[k];
}

std::uint64_t ElementIndex::index_of(const PartialPerm& shape, std::span<const Label> labels) const {
  if (shape.size() != n_) throw DimensionError("index_of: ground set differs from the index");
  const Mask dom = shape.domain_mask();
  const Mask ran = shape.range_mask();
  const int k = popcount(dom);
  const int g = group_->order();
  if (g > 1 && labels.size() < static_cast<std::size_t>(n_)) throw DimensionError("index_of: missing labels");
  // Permutation type Lehmer code, and labels arranged by row.
  std::array<Label, kMaxN> by_row{};
  std::uint64_t lehmer = 0;
  Mask used = 0;
  int i = 0;
  for (Mask d = dom; d != 0; d &= d - 1, ++i) {
    const int x = __builtin_ctz(d);
    const int y = shape(x);
    const int v = popcount(ran & ((Mask{1} << y) - 1));
    lehmer = lehmer * static_cast<std::uint64_t>(k - i) +
             static_cast<std::uint64_t>(v - popcount(used & ((Mask{1} << v) - 1)));
    used |= Mask{1} << v;
    by_row[v] = g > 1 ? labels[x] : Label{0};
  }
  std::uint64_t code = 0;
  if (g > 1) {
    for (int j = 0; j < k; ++j) code = code * static_cast<std::uint64_t>(g) + by_row[j];
  }
  return run_offset(k, dom, ran) + lehmer * gpow_[k] + code;
}

std::uint64_t ElementIndex::index_of(const PartialPerm& shape) const {
  if (group_->order() == 1) return index_of(shape, {});
  std::array<Label, kMaxN> e;
  e.fill(static_cast<Label>(group_->identity()));
  return index_of(shape, {e.data(), static_cast<std::size_t>(n_)});
}

PartialPerm ElementIndex::shape_at(std::uint64_t index, std::span<Label> labels) const {
  const int k = rank_at(index);
  std::uint64_t local = index - offsets_[k];
  const auto g = static_cast<std::uint64_t>(group_->order());
  std::array<Label, kMaxN> by_row{};
  for (int j = k - 1; j >= 0; --j) {
    by_row[j] = static_cast<Label>(local % g);
    local /= g;
  }
  const std::uint64_t lehmer = local % fact_[k];
  local /= fact_[k];
  const Mask ran = subsets_by_rank_[k][local % binom_[k]];
  const Mask dom = subsets_by_rank_[k][local / binom_[k]];
  const auto perm = lehmer_unrank(lehmer, k);
  std::array<int, kMaxN> ran_list{};
  int j = 0;
  for (Mask r = ran; r != 0; r &= r - 1) ran_list[j++] = __builtin_ctz(r);
  std::vector<std::uint8_t> im(n_, PartialPerm::kUndefined);
  const auto e = static_cast<Label>(group_->identity());
  for (int c = 0; c < n_ && c < static_cast<int>(labels.size()); ++c) labels[c] = e;
  int i = 0;
  for (Mask d = dom; d != 0; d &= d - 1, ++i) {
    const int x = __builtin_ctz(d);
    im[x] = static_cast<std::uint8_t>(ran_list[perm[i]]);
    if (static_cast<int>(labels.size()) > x) labels[x] = by_row[perm[i]];
  }
  return PartialPerm::from_images(im);
}

PartialPerm ElementIndex::shape_at(std::uint64_t index) const { return shape_at(index, std::span<Label>{}); }

WreathElem ElementIndex::element_at(std::uint64_t index) const {
  std::array<Label, kMaxN> labels{};
  const PartialPerm shape = shape_at(index, {labels.data(), static_cast<std::size_t>(n_)});
  return WreathElem(shape, {labels.data(), static_cast<std::size_t>(n_)}, group_);
}

WreathElem ElementIndex::subgroup_element(int k, std::uint64_t id) const {
  if (id >= subgroup_[k]) throw std::out_of_range("subgroup element id out of range");
  const auto g = static_cast<std::uint64_t>(group_->order());
  std::array<Label, kMaxN> by_row{};
  for (int j = k - 1; j >= 0; --j) {
    by_row[j] = static_cast<Label>(id % g);
    id /= g;
  }
  const auto perm = lehmer_unrank(id, k);
  std::vector<Label> labels(k);
  for (int c = 0; c < k; ++c) labels[c] = by_row[perm[c]];
  return WreathElem(PartialPerm::from_images(perm), labels, group_);
}

}  // namespace rookfft
