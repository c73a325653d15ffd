#include "rookfft/dclass.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "rookfft/counting.hpp"
#include "rookfft/irreps.hpp"

namespace rookfft {

std::size_t DClassInfo::position(Mask domain) const {
  if (popcount(domain) != k || (n < 32 && (domain >> n) != 0))
    throw std::invalid_argument("not a rank-" + std::to_string(k) + " idempotent");
  return static_cast<std::size_t>(colex_rank(domain));
}

std::vector<DClassInfo> build_dclasses(int n, const GroupPtr& group) {
  std::vector<DClassInfo> out;
  for (int k = 0; k <= n; ++k) {
    DClassInfo d;
    d.n = n;
    d.k = k;
    const std::uint64_t r = binomial(n, k);
    for (std::uint64_t i = 0; i < r; ++i) {
      d.idempotents.push_back(colex_unrank(i, k));
      d.p.push_back(p_map(n, d.idempotents.back()));
    }
    d.e = PartialPerm::partial_identity(n, (Mask{1} << k) - 1);
    const WreathGroup w(k, group);
    d.group_order = w.order();
    d.group_descriptor = w.descriptor();
    out.push_back(std::move(d));
  }
  return out;
}

std::uint64_t dclass_total(const std::vector<DClassInfo>& classes) {
  std::uint64_t t = 0;
  for (const auto& d : classes) t = checked_add(t, checked_mul(checked_mul(d.r(), d.r()), d.group_order));
  return t;
}

WreathElem lift_from_subgroup(const DClassInfo& d, std::size_t b, std::size_t a, const WreathElem& s) {
  if (s.size() != d.k || s.rank() != d.k) throw DimensionError("subgroup element has the wrong size");
  std::array<std::uint8_t, kMaxN> images;
  images.fill(PartialPerm::kUndefined);
  std::array<Label, kMaxN> labels{};
  for (int p = 0; p < d.k; ++p) {
    images[p] = static_cast<std::uint8_t>(s.shape()(p));
    labels[p] = static_cast<Label>(s.label(p));
  }
  const auto& g = s.group_ptr();
  const WreathElem wide(PartialPerm::from_images({images.data(), static_cast<std::size_t>(d.n)}),
                        {labels.data(), static_cast<std::size_t>(d.n)}, g);
  const WreathElem pb = WreathElem::embed(d.p.at(b), g);
  const WreathElem pa_inv = WreathElem::embed(inverse(d.p.at(a)), g);
  return wreath_compose(wreath_compose(pb, wide), pa_inv);
}

WreathElem project_to_subgroup(const DClassInfo& d, const WreathElem& t) {
  if (t.size() != d.n || t.rank() != d.k) throw DimensionError("element is not in this D-class");
  const auto& g = t.group_ptr();
  const std::size_t a = d.position(t.shape().domain_mask());
  const std::size_t b = d.position(t.shape().range_mask());
  const WreathElem pb_inv = WreathElem::embed(inverse(d.p[b]), g);
  const WreathElem pa = WreathElem::embed(d.p[a], g);
  const WreathElem u = wreath_compose(wreath_compose(pb_inv, t), pa);
  std::array<std::uint8_t, kMaxN> images{};
  for (int p = 0; p < d.k; ++p) images[p] = static_cast<std::uint8_t>(u.shape()(p));
  return WreathElem(PartialPerm::from_images({images.data(), static_cast<std::size_t>(d.k)}),
                    u.labels().first(static_cast<std::size_t>(d.k)), g);
}

}  // namespace rookfft
