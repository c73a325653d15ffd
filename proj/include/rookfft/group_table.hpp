#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

namespace rookfft {

/// A finite group given by its multiplication table over ids 0..order-1.
class GroupTable {
 public:
  /// Validates closure, identity and inverses always; associativity
  /// exhaustively when order ≤ 64.
  GroupTable(std::vector<std::vector<int>> mul, std::string descriptor);

  static GroupTable trivial();
  static GroupTable cyclic(int m);
  /// JSON: {"name": ..., "order": m, "mul": [[...], ...]}.
  static GroupTable from_json_file(const std::filesystem::path& path);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  /// Stable text identifying the group ("trivial", "Z3", "table:<name>").
  const std::string& descriptor() const { return descriptor_; }
  /// FNV-1a over the table; identifies user-supplied groups in caches.
  std::uint64_t fingerprint() const;

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.order_ == b.order_ && a.mul_ == b.mul_;
  }

 private:
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::string descriptor_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

}  // namespace rookfft
