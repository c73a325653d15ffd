#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rookfft/combinatorics.hpp"
#include "rookfft/element_index.hpp"
#include "rookfft/group_table.hpp"

namespace rookfft {

/// The group G≀S_k (S_k for trivial G) with elements numbered exactly as
/// the rank-k run of an ElementIndex: Lehmer code of the permutation, then
/// labels along the rows.
class WreathGroup {
 public:
  explicit WreathGroup(int k, GroupPtr base = nullptr);

  int degree() const { return k_; }
  std::uint64_t order() const { return index_.total() == 0 ? 0 : index_.rank_count(k_); }
  const GroupTable& base() const { return *index_.group(); }
  const GroupPtr& base_ptr() const { return index_.group(); }
  bool is_symmetric() const { return index_.group_order() == 1; }
  /// "S3", "Z2wrS3", ...
  std::string descriptor() const;

  WreathElem element(std::uint64_t id) const { return index_.subgroup_element(k_, id); }
  std::uint64_t id_of(const WreathElem& w) const { return index_.index_of(w); }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t identity() const { return 0; }

 private:
  int k_;
  ElementIndex index_;
};

/// One irreducible representation: its label and dimension.
struct Irrep {
  std::string label;
  int dim = 0;
};

using ComplexMatrix = Eigen::MatrixXcd;

/// Computes ρ_r(g) for every irrep r of one group element.
class IrrepEvaluator {
 public:
  virtual ~IrrepEvaluator() = default;
  virtual void evaluate(std::uint64_t element, std::vector<ComplexMatrix>& out) const = 0;
  /// Visits every element; the default evaluates each one independently.
  virtual void walk(std::uint64_t order,
                    const std::function<void(std::uint64_t, const std::vector<ComplexMatrix>&)>& visit) const;
};

/// A complete set of inequivalent irreducible unitary representations of a
/// finite group whose elements are numbered 0..order-1.
///
/// Representations are either materialized (one table per irrep whose row g
/// is ρ(g) flattened row-major) or evaluated on demand, which is how large
/// groups are handled.
class IrrepSet {
 public:
  IrrepSet(std::string descriptor, std::uint64_t order, std::vector<Irrep> irreps, std::vector<ComplexMatrix> tables);
  IrrepSet(std::string descriptor, std::uint64_t order, std::vector<Irrep> irreps,
           std::shared_ptr<const IrrepEvaluator> evaluator);

  const std::string& descriptor() const { return descriptor_; }
  std::uint64_t group_order() const { return order_; }
  const std::vector<Irrep>& irreps() const { return irreps_; }
  std::size_t size() const { return irreps_.size(); }
  int dim(std::size_t r) const { return irreps_.at(r).dim; }
  bool materialized() const { return !tables_.empty(); }
  const ComplexMatrix& table(std::size_t r) const { return tables_.at(r); }

  /// ρ_r(g) as a dim×dim matrix.
  ComplexMatrix matrix(std::size_t r, std::uint64_t element) const;
  std::vector<ComplexMatrix> matrices(std::uint64_t element) const;

  /// Calls visit(g, mats) for every group element, where mats[r] = ρ_r(g).
  void for_each_element(const std::function<void(std::uint64_t, const std::vector<ComplexMatrix>&)>& visit) const;

  /// Copy with every table filled in.
  IrrepSet materialize() const;

 private:
  std::string descriptor_;
  std::uint64_t order_;
  std::vector<Irrep> irreps_;
  std::vector<ComplexMatrix> tables_;
  std::shared_ptr<const IrrepEvaluator> evaluator_;
};

/// Groups with |G|² above this many stored entries are evaluated on demand.
inline constexpr std::uint64_t kMaterializeLimit = std::uint64_t{1} << 22;

/// Irreps of S_k in Young's orthogonal form, one per partition of k in
/// lexicographically decreasing order, bases indexed by standard tableaux.
/// Cached per k. Requires 0 ≤ k ≤ 8.
const IrrepSet& symmetric_irreps(int k);

/// Characters of Z_m: χ_j(x) = exp(2πi·jx/m).
IrrepSet cyclic_irreps(const GroupTable& zm);

/// Complete irreps of G≀S_k induced from the base tensor representations
/// extended over Young subgroups. Labels are tuples of partitions, one per
/// irrep of G. Throws if the result would not be complete or would exceed
/// 10^6 elements.
IrrepSet wreath_irreps(const IrrepSet& base_irreps, const GroupPtr& base, int k);

/// Irreps for the rank-k maximal subgroup of R_n or G≀R_n.
IrrepSet subgroup_irreps(const IrrepSet* base_irreps, const GroupPtr& base, int k);

/// Structural checks backing "complete set of inequivalent irreducibles".
struct IrrepReport {
  double homomorphism_error = 0;
  double unitarity_error = 0;
  double identity_error = 0;
  std::uint64_t sum_of_squares = 0;
  std::uint64_t group_order = 0;
  double min_character_gap = 0;
  double max_character_norm_error = 0;
  bool passed(double tol = 1e-10) const;
};

/// Exhaustive over all pairs when `exhaustive`, otherwise over
/// generators × all elements (which already implies the homomorphism law).
IrrepReport check_irreps(const IrrepSet& irreps, const WreathGroup& group, bool exhaustive);

/// Per-irrep Fourier coefficients of one function on the group.
using GroupSpectrum = std::vector<ComplexMatrix>;

/// f̂(ρ) = Σ_g f(g) ρ(g) for every irrep.
GroupSpectrum group_ft(const Eigen::VectorXcd& f, const IrrepSet& irreps);
/// f(g) = (1/|G|) Σ_ρ d_ρ tr(ρ(g)* F(ρ)).
Eigen::VectorXcd group_ift(const GroupSpectrum& spectrum, const IrrepSet& irreps);

/// Batched transforms: each row of `functions` is a function on the group.
/// Result r has one row per function holding f̂(ρ_r) flattened row-major.
std::vector<ComplexMatrix> group_ft_batch(const ComplexMatrix& functions, const IrrepSet& irreps);
ComplexMatrix group_ift_batch(const std::vector<ComplexMatrix>& spectra, const IrrepSet& irreps);

/// Naive operation count of one group transform: Σ_ρ |G| d_ρ² = |G|².
std::uint64_t naive_group_ft_cost(const IrrepSet& irreps);

}  // namespace rookfft
