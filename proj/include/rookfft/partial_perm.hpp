#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rookfft/combinatorics.hpp"

namespace rookfft {

/// Raised when two operands live on different ground sets or groups.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An element of the rook monoid R_n: an injective partial map on {0..n-1}.
///
/// Points are 0-based internally; the textual form is 1-based. The domain
/// and range bitmasks are cached so complements are cheap to probe.
class PartialPerm {
 public:
  static constexpr std::uint8_t kUndefined = 0xFF;

  PartialPerm() : PartialPerm(0) {}
  /// The empty map on n points.
  explicit PartialPerm(int n);

  static PartialPerm identity(int n);
  /// Partial identity on the points of `mask`.
  static PartialPerm partial_identity(int n, Mask mask);
  /// images[i] is the 0-based image of i, or kUndefined.
  static PartialPerm from_images(std::span<const std::uint8_t> images);
  /// images[i] is the 1-based image of i+1, or 0 for undefined.
  static PartialPerm from_one_based(std::span<const int> images);

  int size() const { return n_; }
  int rank() const { return popcount(dom_); }
  Mask domain_mask() const { return dom_; }
  Mask range_mask() const { return ran_; }
  bool defined(int x) const { return (dom_ >> x) & 1u; }
  int operator()(int x) const { return image_[x]; }
  std::span<const std::uint8_t> images() const { return {image_.data(), static_cast<std::size_t>(n_)}; }

  /// Copy with x ↦ y added; x must be outside the domain and y outside the range.
  PartialPerm extended(int x, int y) const;
  /// Copy with x removed from the domain.
  PartialPerm restricted_away(int x) const;

  bool is_idempotent() const { return dom_ == ran_ && is_partial_identity(); }

  friend bool operator==(const PartialPerm& a, const PartialPerm& b) {
    return a.n_ == b.n_ && a.dom_ == b.dom_ && a.image_ == b.image_;
  }

 private:
  bool is_partial_identity() const;

  int n_ = 0;
  Mask dom_ = 0;
  Mask ran_ = 0;
  std::array<std::uint8_t, kMaxN> image_{};
};

/// a ∘ b: defined at x iff x ∈ dom(b) and b(x) ∈ dom(a).
PartialPerm compose(const PartialPerm& a, const PartialPerm& b);
/// Unique semigroup inverse; the transpose of the rook matrix.
PartialPerm inverse(const PartialPerm& a);
/// Natural partial order: t extends s as a partial function.
bool leq(const PartialPerm& s, const PartialPerm& t);
/// (-1)^(rk t - rk s) on intervals; throws std::domain_error when s ≰ t.
int mobius(const PartialPerm& s, const PartialPerm& t);
/// Arrows from dom(s) to ran(s) as a permutation of {0..rk(s)-1}.
PartialPerm perm_type(const PartialPerm& s);
/// Order-preserving bijection from {0..|A|-1} onto A.
PartialPerm p_map(int n, Mask subset);

/// Partial identities dom(s) = s⁻¹s and ran(s) = ss⁻¹.
inline PartialPerm dom_idempotent(const PartialPerm& s) { return PartialPerm::partial_identity(s.size(), s.domain_mask()); }
inline PartialPerm ran_idempotent(const PartialPerm& s) { return PartialPerm::partial_identity(s.size(), s.range_mask()); }

/// "a1,a2,...,an" with 1-based images and "-" for undefined points.
std::string to_string(const PartialPerm& s);
PartialPerm parse_partial_perm(std::string_view text);

}  // namespace rookfft
