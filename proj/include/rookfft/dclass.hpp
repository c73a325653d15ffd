#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rookfft/element_index.hpp"
#include "rookfft/partial_perm.hpp"
#include "rookfft/wreath_elem.hpp"

namespace rookfft {

/// The rank-k elements of R_n (or G≀R_n) with the data that identifies them
/// with r_k × r_k matrices over the group algebra of G_k.
struct DClassInfo {
  int n = 0;
  int k = 0;
  /// Domains of the rank-k idempotents in colex order; position = grid index.
  std::vector<Mask> idempotents;
  /// Partial identity on {0..k-1}.
  PartialPerm e;
  /// p[a]: order-preserving bijection from {0..k-1} onto idempotents[a].
  std::vector<PartialPerm> p;
  std::uint64_t group_order = 1;
  std::string group_descriptor;

  std::size_t r() const { return idempotents.size(); }
  /// Grid position of an idempotent given by its domain; throws if the mask
  /// does not have k points.
  std::size_t position(Mask domain) const;
};

std::vector<DClassInfo> build_dclasses(int n, const GroupPtr& group = nullptr);

/// Σ_k r_k² |G_k|.
std::uint64_t dclass_total(const std::vector<DClassInfo>& classes);

/// p_b ∘ s ∘ p_a⁻¹ for s in G_k (given on k points), as an element of the
/// full semigroup.
WreathElem lift_from_subgroup(const DClassInfo& d, std::size_t b, std::size_t a, const WreathElem& s);

/// Inverse of lift_from_subgroup: the group element p_b⁻¹ ∘ t ∘ p_a of a
/// rank-k element t with range b and domain a, on k points.
WreathElem project_to_subgroup(const DClassInfo& d, const WreathElem& t);

}  // namespace rookfft
