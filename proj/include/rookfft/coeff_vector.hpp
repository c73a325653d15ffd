#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <stdexcept>

#include <Eigen/Core>

#include "rookfft/element_index.hpp"

namespace rookfft {

enum class Basis { semigroup, groupoid };

inline const char* to_string(Basis b) { return b == Basis::semigroup ? "semigroup" : "groupoid"; }

using IndexPtr = std::shared_ptr<const ElementIndex>;

/// A function on the semigroup, densely indexed by an ElementIndex and tagged
/// with the basis its coefficients refer to.
template <typename Scalar>
class CoeffVector {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  CoeffVector(IndexPtr index, Basis basis)
      : index_(std::move(index)), values_(Vector::Zero(static_cast<Eigen::Index>(index_->total()))), basis_(basis) {}

  CoeffVector(IndexPtr index, Vector values, Basis basis)
      : index_(std::move(index)), values_(std::move(values)), basis_(basis) {
    if (static_cast<std::uint64_t>(values_.size()) != index_->total()) {
      throw DimensionError("coefficient vector length does not match the element index");
    }
  }

  const ElementIndex& index() const { return *index_; }
  const IndexPtr& index_ptr() const { return index_; }
  Basis basis() const { return basis_; }
  Eigen::Index size() const { return values_.size(); }

  const Vector& values() const { return values_; }
  Vector& values() { return values_; }
  Scalar& operator[](std::uint64_t i) { return values_[static_cast<Eigen::Index>(i)]; }
  const Scalar& operator[](std::uint64_t i) const { return values_[static_cast<Eigen::Index>(i)]; }

  /// Same coefficients reinterpreted in another basis.
  CoeffVector relabeled(Basis b) const { return CoeffVector(index_, values_, b); }

  template <typename Other>
  CoeffVector<Other> cast() const {
    return CoeffVector<Other>(index_, values_.template cast<Other>(), basis_);
  }

 private:
  IndexPtr index_;
  Vector values_;
  Basis basis_;
};

using ComplexVector = CoeffVector<std::complex<double>>;
using IntegerVector = CoeffVector<std::int64_t>;

template <typename A, typename B>
void require_same_index(const CoeffVector<A>& a, const CoeffVector<B>& b, const char* what) {
  if (a.index_ptr() != b.index_ptr() &&
      (a.index().n() != b.index().n() || a.index().group_order() != b.index().group_order())) {
    throw DimensionError(std::string(what) + ": operands live on different semigroups");
  }
}

}  // namespace rookfft
