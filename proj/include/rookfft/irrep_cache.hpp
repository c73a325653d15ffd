#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "rookfft/irreps.hpp"

namespace rookfft {

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary layout, all integers little-endian:
///   "RFIR" | u32 version | u64 descriptor hash | i32 k | u64 group order | u32 irrep count
///   per irrep: u32 label length | label bytes | u32 dim | order·dim² × (f64 re, f64 im), row-major
///   u64 FNV-1a checksum of every preceding byte
inline constexpr std::uint32_t kIrrepCacheVersion = 1;

/// Key for the group an IrrepSet belongs to. User tables are distinguished
/// by the table fingerprint, not only by name.
std::uint64_t irrep_cache_key(const std::string& descriptor, std::uint64_t base_fingerprint);

void save_irreps(const IrrepSet& irreps, int k, std::uint64_t key, const std::filesystem::path& path);

/// Throws CacheError on a bad magic, version, checksum, or a key/k mismatch.
IrrepSet load_irreps(const std::filesystem::path& path, std::optional<std::uint64_t> expected_key,
                     std::optional<int> expected_k);

/// Irreps of the rank-k maximal subgroup, read from or written to
/// `cache_dir` when it is set. Sets that are too large to materialize are
/// built in memory and not cached.
IrrepSet cached_subgroup_irreps(const IrrepSet* base_irreps, const GroupPtr& base, int k,
                                const std::optional<std::filesystem::path>& cache_dir);

std::filesystem::path irrep_cache_path(const std::filesystem::path& cache_dir, const std::string& descriptor,
                                       std::uint64_t key);

}  // namespace rookfft
