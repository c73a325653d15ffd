#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rookfft/coeff_vector.hpp"
#include "rookfft/dclass.hpp"
#include "rookfft/irreps.hpp"
#include "rookfft/zeta.hpp"

namespace rookfft {

/// Everything the transform needs for one semigroup: the element index,
/// the D-classes and an IrrepSet for every maximal subgroup.
class FourierPlan {
 public:
  /// `base_irreps` is required for a non-cyclic group; Z_m falls back to
  /// its characters. With `cache_dir` set, subgroup irreps are read from or
  /// written to disk.
  explicit FourierPlan(IndexPtr index, std::shared_ptr<const IrrepSet> base_irreps = nullptr,
                       std::optional<std::filesystem::path> cache_dir = std::nullopt);

  const ElementIndex& index() const { return *index_; }
  const IndexPtr& index_ptr() const { return index_; }
  int n() const { return index_->n(); }
  const std::vector<DClassInfo>& dclasses() const { return dclasses_; }
  const DClassInfo& dclass(int k) const { return dclasses_.at(static_cast<std::size_t>(k)); }
  const IrrepSet& irreps(int k) const { return irreps_.at(static_cast<std::size_t>(k)); }
  const std::shared_ptr<const IrrepSet>& base_irreps() const { return base_irreps_; }
  std::string group_descriptor() const;

 private:
  IndexPtr index_;
  std::shared_ptr<const IrrepSet> base_irreps_;
  std::vector<DClassInfo> dclasses_;
  std::vector<IrrepSet> irreps_;
};

/// The image of a coefficient vector under the Wedderburn isomorphism.
///
/// blocks[k][ρ] is an (r_k d_ρ)-square matrix; sub-block (b, a) of size d_ρ
/// corresponds to the matrix unit E_{b,a} for row idempotent b and column
/// idempotent a. Ranks are stored in increasing k.
struct BlockSpectrum {
  int n = 0;
  std::string group;
  std::vector<std::vector<ComplexMatrix>> blocks;

  static BlockSpectrum zeros(const FourierPlan& plan);
  /// Σ_k Σ_ρ (r_k d_ρ)², which equals |S|.
  std::uint64_t flat_size() const;
  /// Rank, then irrep, then row idempotent, then column idempotent, then
  /// row-major inside each d_ρ × d_ρ block.
  Eigen::VectorXcd flatten(const FourierPlan& plan) const;
  static BlockSpectrum unflatten(const FourierPlan& plan, const Eigen::VectorXcd& flat);

  double max_abs_diff(const BlockSpectrum& other) const;
  BlockSpectrum operator*(const BlockSpectrum& other) const;
  BlockSpectrum& operator*=(std::complex<double> c);
};

/// h_{b,a}(s) = v(p_b s p_a⁻¹) over G_k for a groupoid-basis vector.
Eigen::VectorXcd extract_h(const ComplexVector& v, const DClassInfo& d, std::size_t b, std::size_t a);

BlockSpectrum fft(const ComplexVector& f, const FourierPlan& plan, OpCounter* counter = nullptr);
ComplexVector ifft(const BlockSpectrum& spectrum, const FourierPlan& plan, OpCounter* counter = nullptr);
/// The groupoid-basis vector recovered by the inverse group transforms,
/// before the final Möbius step.
ComplexVector spectrum_to_groupoid(const BlockSpectrum& spectrum, const FourierPlan& plan);

/// ⊕ Σ_s f(s) ρ̄(s) with ρ̄(⌊t⌋) = E_{tt⁻¹, t⁻¹t} ⊗ ρ(p⁻¹ t p), summed over the
/// down-set of each s. Brute force; the reference for fft.
BlockSpectrum direct_evaluation(const ComplexVector& f, const FourierPlan& plan);

/// Σ_{rt = s} f(r) g(t), by enumerating all pairs.
template <typename Scalar>
CoeffVector<Scalar> convolve_naive(const CoeffVector<Scalar>& f, const CoeffVector<Scalar>& g);

ComplexVector convolve_spectral(const ComplexVector& f, const ComplexVector& g, const FourierPlan& plan);

struct EnergyEntry {
  int k = 0;
  std::string label;
  int dim = 0;
  double energy = 0;
};

/// Squared Frobenius norm of every (k, ρ) block.
std::vector<EnergyEntry> isotypic_energy(const BlockSpectrum& spectrum, const FourierPlan& plan);

extern template CoeffVector<std::complex<double>> convolve_naive(const CoeffVector<std::complex<double>>&,
                                                                 const CoeffVector<std::complex<double>>&);
extern template CoeffVector<std::int64_t> convolve_naive(const CoeffVector<std::int64_t>&,
                                                         const CoeffVector<std::int64_t>&);

}  // namespace rookfft
