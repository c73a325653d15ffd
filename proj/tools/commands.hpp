#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace rookspec {

struct RunConfig {
  std::string command;
  std::optional<int> n;
  std::optional<std::string> group;
  std::string in, in2, out, binary;
  std::optional<std::filesystem::path> cache_dir;
  double tolerance = 1e-9;
  std::uint64_t seed = 42;
  bool verify = false;
  bool naive = false;
  bool unsafe_n = false;

  int dense_cap() const;
};

/// A bound, round-trip or self-test check that did not hold; exit code 2.
class CheckFailure : public std::runtime_error {
 public:
  CheckFailure(const std::string& what, nlohmann::json report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const nlohmann::json& report() const { return report_; }

 private:
  nlohmann::json report_;
};

nlohmann::json cmd_transform(const RunConfig& cfg);
nlohmann::json cmd_inverse(const RunConfig& cfg);
nlohmann::json cmd_convolve(const RunConfig& cfg);
nlohmann::json cmd_energy(const RunConfig& cfg);
nlohmann::json cmd_bench(const RunConfig& cfg);
nlohmann::json cmd_selftest(const RunConfig& cfg);

}  // namespace rookspec
