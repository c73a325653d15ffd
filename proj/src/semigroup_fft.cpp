#include "rookfft/semigroup_fft.hpp"

#include <algorithm>
#include <stdexcept>

#include "rookfft/irrep_cache.hpp"

namespace rookfft {

FourierPlan::FourierPlan(IndexPtr index, std::shared_ptr<const IrrepSet> base_irreps,
                         std::optional<std::filesystem::path> cache_dir)
    : index_(std::move(index)), base_irreps_(std::move(base_irreps)) {
  const bool wreath = index_->has_group() && index_->group_order() > 1;
  const GroupPtr group = wreath ? index_->group() : nullptr;
  if (wreath && !base_irreps_) {
    try {
      base_irreps_ = std::make_shared<const IrrepSet>(cyclic_irreps(*group));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("irreps for " + group->descriptor() + " must be supplied");
    }
  }
  if (wreath && base_irreps_->group_order() != static_cast<std::uint64_t>(group->order()))
    throw DimensionError("base irreps do not match the group order");
  dclasses_ = build_dclasses(index_->n(), group);
  for (int k = 0; k <= index_->n(); ++k)
    irreps_.push_back(cached_subgroup_irreps(base_irreps_.get(), group, k, cache_dir));
}

std::string FourierPlan::group_descriptor() const {
  return index_->has_group() ? index_->group()->descriptor() : std::string("trivial");
}

BlockSpectrum BlockSpectrum::zeros(const FourierPlan& plan) {
  BlockSpectrum s;
  s.n = plan.n();
  s.group = plan.group_descriptor();
  for (int k = 0; k <= plan.n(); ++k) {
    const auto r = static_cast<Eigen::Index>(plan.dclass(k).r());
    std::vector<ComplexMatrix> row;
    for (const auto& ir : plan.irreps(k).irreps()) row.push_back(ComplexMatrix::Zero(r * ir.dim, r * ir.dim));
    s.blocks.push_back(std::move(row));
  }
  return s;
}

std::uint64_t BlockSpectrum::flat_size() const {
  std::uint64_t t = 0;
  for (const auto& rank : blocks)
    for (const auto& m : rank) t += static_cast<std::uint64_t>(m.size());
  return t;
}

namespace {

void require_shape(const BlockSpectrum& s, const FourierPlan& plan) {
  if (s.blocks.size() != static_cast<std::size_t>(plan.n() + 1))
    throw DimensionError("spectrum has " + std::to_string(s.blocks.size()) + " ranks, expected " +
                         std::to_string(plan.n() + 1));
  for (int k = 0; k <= plan.n(); ++k) {
    const auto& irreps = plan.irreps(k);
    const auto r = static_cast<Eigen::Index>(plan.dclass(k).r());
    if (s.blocks[k].size() != irreps.size()) throw DimensionError("spectrum rank " + std::to_string(k) + " has the wrong irreps");
    for (std::size_t i = 0; i < irreps.size(); ++i) {
      const Eigen::Index side = r * irreps.dim(i);
      if (s.blocks[k][i].rows() != side || s.blocks[k][i].cols() != side)
        throw DimensionError("spectrum block (" + std::to_string(k) + ", " + irreps.irreps()[i].label +
                             ") has the wrong shape");
    }
  }
}

// Visits (block, b, a, i, j) in the documented flat order.
template <typename Fn>
void for_each_entry(const FourierPlan& plan, Fn&& fn) {
  for (int k = 0; k <= plan.n(); ++k) {
    const auto r = static_cast<Eigen::Index>(plan.dclass(k).r());
    for (std::size_t rho = 0; rho < plan.irreps(k).size(); ++rho) {
      const Eigen::Index d = plan.irreps(k).dim(rho);
      for (Eigen::Index b = 0; b < r; ++b)
        for (Eigen::Index a = 0; a < r; ++a)
          for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = 0; j < d; ++j) fn(k, rho, b * d + i, a * d + j);
    }
  }
}

}  // namespace

Eigen::VectorXcd BlockSpectrum::flatten(const FourierPlan& plan) const {
  require_shape(*this, plan);
  Eigen::VectorXcd out(static_cast<Eigen::Index>(flat_size()));
  Eigen::Index pos = 0;
  for_each_entry(plan, [&](int k, std::size_t rho, Eigen::Index row, Eigen::Index col) {
    out[pos++] = blocks[k][rho](row, col);
  });
  return out;
}

BlockSpectrum BlockSpectrum::unflatten(const FourierPlan& plan, const Eigen::VectorXcd& flat) {
  BlockSpectrum s = zeros(plan);
  if (static_cast<std::uint64_t>(flat.size()) != s.flat_size())
    throw DimensionError("flat spectrum has " + std::to_string(flat.size()) + " entries, expected " +
                         std::to_string(s.flat_size()));
  Eigen::Index pos = 0;
  for_each_entry(plan, [&](int k, std::size_t rho, Eigen::Index row, Eigen::Index col) {
    s.blocks[k][rho](row, col) = flat[pos++];
  });
  return s;
}

double BlockSpectrum::max_abs_diff(const BlockSpectrum& other) const {
  if (blocks.size() != other.blocks.size()) throw DimensionError("spectra have different shapes");
  double m = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (blocks[k].size() != other.blocks[k].size()) throw DimensionError("spectra have different shapes");
    for (std::size_t i = 0; i < blocks[k].size(); ++i) {
      if (blocks[k][i].rows() != other.blocks[k][i].rows()) throw DimensionError("spectra have different shapes");
      if (blocks[k][i].size() > 0) m = std::max(m, (blocks[k][i] - other.blocks[k][i]).cwiseAbs().maxCoeff());
    }
  }
  return m;
}

BlockSpectrum BlockSpectrum::operator*(const BlockSpectrum& other) const {
  if (blocks.size() != other.blocks.size()) throw DimensionError("spectra have different shapes");
  BlockSpectrum out = *this;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (blocks[k].size() != other.blocks[k].size()) throw DimensionError("spectra have different shapes");
    for (std::size_t i = 0; i < blocks[k].size(); ++i) {
      if (blocks[k][i].cols() != other.blocks[k][i].rows()) throw DimensionError("spectra have different shapes");
      out.blocks[k][i] = blocks[k][i] * other.blocks[k][i];
    }
  }
  return out;
}

BlockSpectrum& BlockSpectrum::operator*=(std::complex<double> c) {
  for (auto& rank : blocks)
    for (auto& m : rank) m *= c;
  return *this;
}

Eigen::VectorXcd extract_h(const ComplexVector& v, const DClassInfo& d, std::size_t b, std::size_t a) {
  if (v.basis() != Basis::groupoid) throw std::invalid_argument("extract_h expects groupoid-basis input");
  if (a >= d.r() || b >= d.r()) throw std::invalid_argument("idempotent outside the D-class");
  const auto off = v.index().run_offset(d.k, d.idempotents[a], d.idempotents[b]);
  return v.values().segment(static_cast<Eigen::Index>(off), static_cast<Eigen::Index>(d.group_order));
}

BlockSpectrum fft(const ComplexVector& f, const FourierPlan& plan, OpCounter* counter) {
  if (f.basis() != Basis::semigroup) throw std::invalid_argument("fft expects semigroup-basis input");
  require_same_index(f, CoeffVector<std::complex<double>>(plan.index_ptr(), Basis::semigroup), "fft");
  const ComplexVector g = zeta_fast(f, counter);
  BlockSpectrum out = BlockSpectrum::zeros(plan);
  for (int k = 0; k <= plan.n(); ++k) {
    const auto& d = plan.dclass(k);
    const auto& irreps = plan.irreps(k);
    const auto r = static_cast<Eigen::Index>(d.r());
    const auto order = static_cast<Eigen::Index>(irreps.group_order());
    ComplexMatrix h(r * r, order);
    for (Eigen::Index b = 0; b < r; ++b)
      for (Eigen::Index a = 0; a < r; ++a) {
        const auto off = f.index().run_offset(k, d.idempotents[a], d.idempotents[b]);
        h.row(b * r + a) = g.values().segment(static_cast<Eigen::Index>(off), order).transpose();
      }
    const auto flat = group_ft_batch(h, irreps);
    for (std::size_t rho = 0; rho < irreps.size(); ++rho) {
      const Eigen::Index dim = irreps.dim(rho);
      auto& m = out.blocks[k][rho];
      for (Eigen::Index b = 0; b < r; ++b)
        for (Eigen::Index a = 0; a < r; ++a)
          for (Eigen::Index i = 0; i < dim; ++i)
            for (Eigen::Index j = 0; j < dim; ++j) m(b * dim + i, a * dim + j) = flat[rho](b * r + a, i * dim + j);
    }
  }
  return out;
}

ComplexVector spectrum_to_groupoid(const BlockSpectrum& spectrum, const FourierPlan& plan) {
  require_shape(spectrum, plan);
  ComplexVector v(plan.index_ptr(), Basis::groupoid);
  for (int k = 0; k <= plan.n(); ++k) {
    const auto& d = plan.dclass(k);
    const auto& irreps = plan.irreps(k);
    const auto r = static_cast<Eigen::Index>(d.r());
    std::vector<ComplexMatrix> flat;
    for (std::size_t rho = 0; rho < irreps.size(); ++rho) {
      const Eigen::Index dim = irreps.dim(rho);
      const auto& m = spectrum.blocks[k][rho];
      ComplexMatrix f(r * r, dim * dim);
      for (Eigen::Index b = 0; b < r; ++b)
        for (Eigen::Index a = 0; a < r; ++a)
          for (Eigen::Index i = 0; i < dim; ++i)
            for (Eigen::Index j = 0; j < dim; ++j) f(b * r + a, i * dim + j) = m(b * dim + i, a * dim + j);
      flat.push_back(std::move(f));
    }
    const ComplexMatrix h = group_ift_batch(flat, irreps);
    for (Eigen::Index b = 0; b < r; ++b)
      for (Eigen::Index a = 0; a < r; ++a) {
        const auto off = plan.index().run_offset(k, d.idempotents[a], d.idempotents[b]);
        v.values().segment(static_cast<Eigen::Index>(off), h.cols()) = h.row(b * r + a).transpose();
      }
  }
  return v;
}

ComplexVector ifft(const BlockSpectrum& spectrum, const FourierPlan& plan, OpCounter* counter) {
  return mobius_transform(spectrum_to_groupoid(spectrum, plan), counter);
}

BlockSpectrum direct_evaluation(const ComplexVector& f, const FourierPlan& plan) {
  const ElementIndex& idx = plan.index();
  const int n = idx.n();
  BlockSpectrum out = BlockSpectrum::zeros(plan);
  std::vector<WreathGroup> groups;
  for (int k = 0; k <= n; ++k) groups.emplace_back(k, idx.group());
  for (std::uint64_t i = 0; i < idx.total(); ++i) {
    const std::complex<double> c = f[i];
    if (c == std::complex<double>{}) continue;
    const WreathElem s = idx.element_at(i);
    const Mask dom = s.shape().domain_mask();
    // Every t ≤ s is a restriction of s to a subset of its domain.
    for (Mask sub = dom;; sub = (sub - 1) & dom) {
      PartialPerm shape = s.shape();
      for (int x = 0; x < n; ++x)
        if (((dom >> x) & 1u) && !((sub >> x) & 1u)) shape = shape.restricted_away(x);
      const WreathElem t(shape, s.labels(), s.group_ptr());
      const int k = t.rank();
      const auto& d = plan.dclass(k);
      const auto b = static_cast<Eigen::Index>(d.position(shape.range_mask()));
      const auto a = static_cast<Eigen::Index>(d.position(shape.domain_mask()));
      const std::uint64_t g = groups[k].id_of(project_to_subgroup(d, t));
      const auto mats = plan.irreps(k).matrices(g);
      for (std::size_t rho = 0; rho < mats.size(); ++rho) {
        const Eigen::Index dim = mats[rho].rows();
        out.blocks[k][rho].block(b * dim, a * dim, dim, dim) += c * mats[rho];
      }
      if (sub == 0) break;
    }
  }
  return out;
}

template <typename Scalar>
CoeffVector<Scalar> convolve_naive(const CoeffVector<Scalar>& f, const CoeffVector<Scalar>& g) {
  require_same_index(f, g, "convolve_naive");
  if (f.basis() != Basis::semigroup || g.basis() != Basis::semigroup)
    throw std::invalid_argument("convolve_naive expects semigroup-basis input");
  const ElementIndex& idx = f.index();
  CoeffVector<Scalar> out(f.index_ptr(), Basis::semigroup);
  std::vector<WreathElem> elems;
  elems.reserve(idx.total());
  for (std::uint64_t i = 0; i < idx.total(); ++i) elems.push_back(idx.element_at(i));
  for (std::uint64_t i = 0; i < idx.total(); ++i) {
    if (f[i] == Scalar{}) continue;
    for (std::uint64_t j = 0; j < idx.total(); ++j) {
      if (g[j] == Scalar{}) continue;
      out[idx.index_of(wreath_compose(elems[i], elems[j]))] += f[i] * g[j];
    }
  }
  return out;
}

template CoeffVector<std::complex<double>> convolve_naive(const CoeffVector<std::complex<double>>&,
                                                          const CoeffVector<std::complex<double>>&);
template CoeffVector<std::int64_t> convolve_naive(const CoeffVector<std::int64_t>&, const CoeffVector<std::int64_t>&);

ComplexVector convolve_spectral(const ComplexVector& f, const ComplexVector& g, const FourierPlan& plan) {
  require_same_index(f, g, "convolve_spectral");
  return ifft(fft(f, plan) * fft(g, plan), plan);
}

std::vector<EnergyEntry> isotypic_energy(const BlockSpectrum& spectrum, const FourierPlan& plan) {
  require_shape(spectrum, plan);
  std::vector<EnergyEntry> out;
  for (int k = 0; k <= plan.n(); ++k)
    for (std::size_t rho = 0; rho < plan.irreps(k).size(); ++rho)
      out.push_back({k, plan.irreps(k).irreps()[rho].label, plan.irreps(k).dim(rho),
                     spectrum.blocks[k][rho].squaredNorm()});
  return out;
}

}  // namespace rookfft
