#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rookfft/group_table.hpp"
#include "rookfft/partial_perm.hpp"

namespace rookfft {

using Label = std::uint16_t;

/// One nonzero entry of a monomial matrix, 0-based.
struct Cell {
  int row;
  int col;
  int label;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// An element of G≀R_n: an n×n matrix over {0} ∪ G with at most one nonzero
/// entry per row and column.
///
/// Stored as the underlying rook shape (column j ↦ row i when entry (i,j) is
/// nonzero) plus the group label carried by each column of the domain.
class WreathElem {
 public:
  /// The zero matrix.
  WreathElem(int n, GroupPtr group);
  WreathElem(const PartialPerm& shape, std::span<const Label> labels_by_column, GroupPtr group);

  static WreathElem identity(int n, GroupPtr group);
  /// Embeds a rook matrix with every nonzero entry set to the identity of G.
  static WreathElem embed(const PartialPerm& shape, GroupPtr group);

  int size() const { return shape_.size(); }
  int rank() const { return shape_.rank(); }
  const PartialPerm& shape() const { return shape_; }
  /// Label of the entry in column `col`; meaningful only if the column is nonzero.
  int label(int col) const { return labels_[col]; }
  std::span<const Label> labels() const { return {labels_.data(), static_cast<std::size_t>(size())}; }
  std::optional<int> cell(int row, int col) const;
  /// Nonzero entries sorted by row.
  std::vector<Cell> cells() const;
  WreathElem with_cell(int row, int col, int label) const;

  const GroupTable& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }

  friend bool operator==(const WreathElem& a, const WreathElem& b);

 private:
  PartialPerm shape_;
  std::array<Label, kMaxN> labels_{};
  GroupPtr group_;
};

/// Matrix product over the monoid {0} ∪ G.
WreathElem wreath_compose(const WreathElem& a, const WreathElem& b);
/// Transpose with every entry inverted in G.
WreathElem wreath_inverse(const WreathElem& a);
/// s ≤ t iff s is obtained from t by replacing entries with 0.
bool wreath_leq(const WreathElem& s, const WreathElem& t);

/// "row,col:label;..." with 1-based rows/columns and 0-based group ids,
/// cells sorted by row; the zero matrix is "0".
std::string to_string(const WreathElem& s);
WreathElem parse_wreath_elem(std::string_view text, int n, GroupPtr group);

}  // namespace rookfft
