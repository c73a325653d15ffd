#include "rookfft/wreath_elem.hpp"

#include <algorithm>
#include <charconv>

namespace rookfft {

namespace {

void require_group(const GroupPtr& g) {
  if (!g) throw std::invalid_argument("wreath element requires a group table");
}

}  // namespace

WreathElem::WreathElem(int n, GroupPtr group) : shape_(n), group_(std::move(group)) {
  require_group(group_);
  labels_.fill(static_cast<Label>(group_->identity()));
}

WreathElem::WreathElem(const PartialPerm& shape, std::span<const Label> labels_by_column, GroupPtr group)
    : shape_(shape), group_(std::move(group)) {
  require_group(group_);
  if (static_cast<int>(labels_by_column.size()) != shape.size()) throw DimensionError("label count does not match n");
  const auto e = static_cast<Label>(group_->identity());
  for (int c = 0; c < shape.size(); ++c) {
    if (!shape.defined(c)) {
      labels_[c] = e;
      continue;
    }
    if (labels_by_column[c] >= group_->order()) throw std::invalid_argument("group label out of range");
    labels_[c] = labels_by_column[c];
  }
  for (int c = shape.size(); c < kMaxN; ++c) labels_[c] = e;
}

WreathElem WreathElem::identity(int n, GroupPtr group) { return embed(PartialPerm::identity(n), std::move(group)); }

WreathElem WreathElem::embed(const PartialPerm& shape, GroupPtr group) {
  require_group(group);
  std::vector<Label> labels(shape.size(), static_cast<Label>(group->identity()));
  return WreathElem(shape, labels, std::move(group));
}

std::optional<int> WreathElem::cell(int row, int col) const {
  if (shape_.defined(col) && shape_(col) == row) return labels_[col];
  return std::nullopt;
}

std::vector<Cell> WreathElem::cells() const {
  std::vector<Cell> out;
  for (int c = 0; c < size(); ++c) {
    if (shape_.defined(c)) out.push_back({shape_(c), c, labels_[c]});
  }
  std::sort(out.begin(), out.end(), [](const Cell& a, const Cell& b) { return a.row < b.row; });
  return out;
}

WreathElem WreathElem::with_cell(int row, int col, int label) const {
  WreathElem w = *this;
  w.shape_ = shape_.extended(col, row);
  if (label < 0 || label >= group_->order()) throw std::invalid_argument("group label out of range");
  w.labels_[col] = static_cast<Label>(label);
  return w;
}

bool operator==(const WreathElem& a, const WreathElem& b) {
  if (!(a.shape_ == b.shape_)) return false;
  if (a.group_ != b.group_ && !(*a.group_ == *b.group_)) return false;
  for (int c = 0; c < a.size(); ++c) {
    if (a.shape_.defined(c) && a.labels_[c] != b.labels_[c]) return false;
  }
  return true;
}

namespace {

void require_same(const WreathElem& a, const WreathElem& b, const char* what) {
  if (a.size() != b.size()) throw DimensionError(std::string(what) + ": ground sets differ");
  if (a.group_ptr() != b.group_ptr() && !(a.group() == b.group())) {
    throw DimensionError(std::string(what) + ": groups differ");
  }
}

}  // namespace

WreathElem wreath_compose(const WreathElem& a, const WreathElem& b) {
  require_same(a, b, "wreath_compose");
  const PartialPerm shape = compose(a.shape(), b.shape());
  std::vector<Label> labels(a.size(), static_cast<Label>(a.group().identity()));
  for (int j = 0; j < b.size(); ++j) {
    if (!shape.defined(j)) continue;
    const int k = b.shape()(j);
    labels[j] = static_cast<Label>(a.group().mul(a.label(k), b.label(j)));
  }
  return WreathElem(shape, labels, a.group_ptr());
}

WreathElem wreath_inverse(const WreathElem& a) {
  const PartialPerm shape = inverse(a.shape());
  std::vector<Label> labels(a.size(), static_cast<Label>(a.group().identity()));
  for (int j = 0; j < a.size(); ++j) {
    if (a.shape().defined(j)) labels[a.shape()(j)] = static_cast<Label>(a.group().inv(a.label(j)));
  }
  return WreathElem(shape, labels, a.group_ptr());
}

bool wreath_leq(const WreathElem& s, const WreathElem& t) {
  require_same(s, t, "wreath_leq");
  if (!leq(s.shape(), t.shape())) return false;
  for (int c = 0; c < s.size(); ++c) {
    if (s.shape().defined(c) && s.label(c) != t.label(c)) return false;
  }
  return true;
}

std::string to_string(const WreathElem& s) {
  const auto cells = s.cells();
  if (cells.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(cells[i].row + 1) + "," + std::to_string(cells[i].col + 1) + ":" +
           std::to_string(cells[i].label);
  }
  return out;
}

namespace {

int parse_int(std::string_view tok, std::string_view whole) {
  while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
  while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\r')) tok.remove_suffix(1);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw std::invalid_argument("malformed wreath cell in '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

WreathElem parse_wreath_elem(std::string_view text, int n, GroupPtr group) {
  WreathElem w(n, std::move(group));
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\r')) text.remove_suffix(1);
  if (text == "0") return w;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t semi = text.find(';', start);
    const std::string_view cell = text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    const std::size_t comma = cell.find(',');
    const std::size_t colon = cell.find(':');
    if (comma == std::string_view::npos || colon == std::string_view::npos || colon < comma) {
      throw std::invalid_argument("malformed wreath cell in '" + std::string(text) + "'");
    }
    const int row = parse_int(cell.substr(0, comma), text);
    const int col = parse_int(cell.substr(comma + 1, colon - comma - 1), text);
    const int label = parse_int(cell.substr(colon + 1), text);
    if (row < 1 || row > n || col < 1 || col > n) throw std::invalid_argument("wreath cell outside the matrix");
    if (w.shape().defined(col - 1) || ((w.shape().range_mask() >> (row - 1)) & 1u)) {
      throw std::invalid_argument("wreath element has two entries in one row or column");
    }
    w = w.with_cell(row - 1, col - 1, label);
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return w;
}

}  // namespace rookfft
