#include "rookfft/irrep_cache.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

namespace rookfft {

namespace {

constexpr char kMagic[4] = {'R', 'F', 'I', 'R'};

std::uint64_t fnv1a(const char* data, std::size_t len, std::uint64_t h = 1469598103934665603ULL) {
  for (std::size_t i = 0; i < len; ++i) {
    h ^= static_cast<unsigned char>(data[i]);
    h *= 1099511628211ULL;
  }
  return h;
}

class Writer {
 public:
  template <typename T>
  void put(T v) {
    static_assert(std::endian::native == std::endian::little, "cache files are little-endian");
    char b[sizeof(T)];
    std::memcpy(b, &v, sizeof(T));
    buf_.append(b, sizeof(T));
  }
  void bytes(const std::string& s) { buf_ += s; }
  std::string& str() { return buf_; }

 private:
  std::string buf_;
};

class Reader {
 public:
  explicit Reader(const std::string& buf) : buf_(buf) {}
  template <typename T>
  T get() {
    need(sizeof(T));
    T v;
    std::memcpy(&v, buf_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return v;
  }
  std::string bytes(std::size_t n) {
    need(n);
    std::string s = buf_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  std::size_t pos() const { return pos_; }

 private:
  void need(std::size_t n) const {
    if (pos_ + n > buf_.size()) throw CacheError("irrep cache is truncated");
  }
  const std::string& buf_;
  std::size_t pos_ = 0;
};

}  // namespace

std::uint64_t irrep_cache_key(const std::string& descriptor, std::uint64_t base_fingerprint) {
  std::uint64_t h = fnv1a(descriptor.data(), descriptor.size());
  char b[8];
  std::memcpy(b, &base_fingerprint, 8);
  return fnv1a(b, 8, h);
}

void save_irreps(const IrrepSet& irreps, int k, std::uint64_t key, const std::filesystem::path& path) {
  if (!irreps.materialized()) throw CacheError("only materialized irrep sets can be cached");
  Writer w;
  w.bytes(std::string(kMagic, 4));
  w.put<std::uint32_t>(kIrrepCacheVersion);
  w.put<std::uint64_t>(key);
  w.put<std::int32_t>(k);
  w.put<std::uint64_t>(irreps.group_order());
  w.put<std::uint32_t>(static_cast<std::uint32_t>(irreps.size()));
  for (std::size_t r = 0; r < irreps.size(); ++r) {
    const auto& ir = irreps.irreps()[r];
    w.put<std::uint32_t>(static_cast<std::uint32_t>(ir.label.size()));
    w.bytes(ir.label);
    w.put<std::uint32_t>(static_cast<std::uint32_t>(ir.dim));
    const auto& t = irreps.table(r);
    for (Eigen::Index g = 0; g < t.rows(); ++g)
      for (Eigen::Index c = 0; c < t.cols(); ++c) {
        w.put<double>(t(g, c).real());
        w.put<double>(t(g, c).imag());
      }
  }
  const std::uint64_t sum = fnv1a(w.str().data(), w.str().size());
  w.put<std::uint64_t>(sum);

  std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write irrep cache " + tmp);
    out.write(w.str().data(), static_cast<std::streamsize>(w.str().size()));
    if (!out) throw CacheError("cannot write irrep cache " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

IrrepSet load_irreps(const std::filesystem::path& path, std::optional<std::uint64_t> expected_key,
                     std::optional<int> expected_k) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot open irrep cache " + path.string());
  const std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (buf.size() < 8 + 4) throw CacheError("irrep cache " + path.string() + " is truncated");
  std::uint64_t stored_sum;
  std::memcpy(&stored_sum, buf.data() + buf.size() - 8, 8);
  if (fnv1a(buf.data(), buf.size() - 8) != stored_sum)
    throw CacheError("irrep cache " + path.string() + " failed its checksum");

  Reader r(buf);
  if (r.bytes(4) != std::string(kMagic, 4)) throw CacheError("irrep cache " + path.string() + " has a bad magic");
  if (r.get<std::uint32_t>() != kIrrepCacheVersion) throw CacheError("irrep cache version mismatch");
  const auto key = r.get<std::uint64_t>();
  const auto k = r.get<std::int32_t>();
  if (expected_key && key != *expected_key) throw CacheError("irrep cache belongs to a different group");
  if (expected_k && k != *expected_k) throw CacheError("irrep cache belongs to a different rank");
  const auto order = r.get<std::uint64_t>();
  const auto count = r.get<std::uint32_t>();
  std::vector<Irrep> irreps;
  std::vector<ComplexMatrix> tables;
  std::uint64_t sum_sq = 0;
  for (std::uint32_t i = 0; i < count; ++i) {
    Irrep ir;
    ir.label = r.bytes(r.get<std::uint32_t>());
    ir.dim = static_cast<int>(r.get<std::uint32_t>());
    if (ir.dim <= 0) throw CacheError("irrep cache has a non-positive dimension");
    sum_sq += static_cast<std::uint64_t>(ir.dim) * ir.dim;
    if (sum_sq > order) throw CacheError("irrep cache dimensions exceed the group order");
    ComplexMatrix t(static_cast<Eigen::Index>(order), ir.dim * ir.dim);
    for (Eigen::Index g = 0; g < t.rows(); ++g)
      for (Eigen::Index c = 0; c < t.cols(); ++c) {
        const double re = r.get<double>();
        const double im = r.get<double>();
        t(g, c) = {re, im};
      }
    irreps.push_back(std::move(ir));
    tables.push_back(std::move(t));
  }
  if (r.pos() != buf.size() - 8) throw CacheError("irrep cache has trailing bytes");
  if (sum_sq != order) throw CacheError("irrep cache is not a complete set");
  return IrrepSet("cached", order, std::move(irreps), std::move(tables));
}

std::filesystem::path irrep_cache_path(const std::filesystem::path& cache_dir, const std::string& descriptor,
                                       std::uint64_t key) {
  std::ostringstream name;
  name << descriptor << "-" << std::hex << key << ".irreps";
  std::string s = name.str();
  for (char& c : s)
    if (c == '/' || c == ':' || c == '\\') c = '_';
  return cache_dir / s;
}

IrrepSet cached_subgroup_irreps(const IrrepSet* base_irreps, const GroupPtr& base, int k,
                                const std::optional<std::filesystem::path>& cache_dir) {
  const WreathGroup w(k, base);
  const std::string desc = w.descriptor();
  const std::uint64_t key = irrep_cache_key(desc, w.base().fingerprint());
  if (cache_dir) {
    const auto path = irrep_cache_path(*cache_dir, desc, key);
    if (std::filesystem::exists(path)) {
      IrrepSet loaded = load_irreps(path, key, k);
      return IrrepSet(desc, loaded.group_order(), loaded.irreps(), [&] {
        std::vector<ComplexMatrix> t;
        for (std::size_t r = 0; r < loaded.size(); ++r) t.push_back(loaded.table(r));
        return t;
      }());
    }
  }
  IrrepSet built = subgroup_irreps(base_irreps, base, k);
  if (cache_dir && built.materialized()) save_irreps(built, k, key, irrep_cache_path(*cache_dir, desc, key));
  return built;
}

}  // namespace rookfft
