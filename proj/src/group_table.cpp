#include "rookfft/group_table.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace rookfft {

GroupTable::GroupTable(std::vector<std::vector<int>> mul, std::string descriptor)
    : order_(static_cast<int>(mul.size())), descriptor_(std::move(descriptor)) {
  if (order_ == 0) throw std::invalid_argument("group table is empty");
  mul_.reserve(static_cast<std::size_t>(order_) * order_);
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != order_) throw std::invalid_argument("group table is not square");
    for (int v : row) {
      if (v < 0 || v >= order_) throw std::invalid_argument("group table entry out of range");
      mul_.push_back(v);
    }
  }
  identity_ = -1;
  for (int e = 0; e < order_ && identity_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < order_ && ok; ++x) ok = this->mul(e, x) == x && this->mul(x, e) == x;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw std::invalid_argument("group table has no identity");
  inv_.assign(order_, -1);
  for (int x = 0; x < order_; ++x) {
    for (int y = 0; y < order_; ++y) {
      if (this->mul(x, y) == identity_) {
        if (this->mul(y, x) != identity_) throw std::invalid_argument("group table: one-sided inverse");
        inv_[x] = y;
        break;
      }
    }
    if (inv_[x] < 0) throw std::invalid_argument("group table: element without inverse");
  }
  if (order_ <= 64) {
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        for (int c = 0; c < order_; ++c)
          if (this->mul(this->mul(a, b), c) != this->mul(a, this->mul(b, c)))
            throw std::invalid_argument("group table is not associative");
  }
}

GroupTable GroupTable::trivial() { return GroupTable({{0}}, "trivial"); }

GroupTable GroupTable::cyclic(int m) {
  if (m < 1) throw std::invalid_argument("cyclic group order must be positive");
  if (m == 1) return trivial();
  std::vector<std::vector<int>> mul(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) mul[a][b] = (a + b) % m;
  return GroupTable(std::move(mul), "Z" + std::to_string(m));
}

GroupTable GroupTable::from_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group table " + path.string());
  const auto j = nlohmann::json::parse(in);
  auto mul = j.at("mul").get<std::vector<std::vector<int>>>();
  if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(mul.size())) {
    throw std::invalid_argument("group table order does not match table size");
  }
  return GroupTable(std::move(mul), "table:" + j.value("name", path.stem().string()));
}

std::uint64_t GroupTable::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xFF;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(order_));
  for (int v : mul_) mix(static_cast<std::uint64_t>(v));
  return h;
}

}  // namespace rookfft
