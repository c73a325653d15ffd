#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <random>
#include <sstream>

#include "rookfft/bounds.hpp"
#include "rookfft/counting.hpp"
#include "rookfft/dataset.hpp"
#include "rookfft/irrep_cache.hpp"
#include "rookfft/semigroup_fft.hpp"
#include "rookfft/spectrum_io.hpp"
#include "rookfft/zeta.hpp"

namespace rookspec {

using namespace rookfft;
using json = nlohmann::json;
using cd = std::complex<double>;

int RunConfig::dense_cap() const { return unsafe_n ? kUnsafeDenseCap : kDefaultDenseCap; }

namespace {

Dataset load(const RunConfig& cfg, const std::string& path, std::optional<int> n, std::optional<std::string> group) {
  if (path.empty()) throw std::invalid_argument(cfg.command + " needs --in");
  return parse_dataset(path, n, std::move(group), cfg.dense_cap());
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void require_out(const RunConfig& cfg) {
  if (cfg.out.empty()) throw std::invalid_argument(cfg.command + " needs --out");
}

// Drops round-off left by the floating transforms.
ComplexVector chop(ComplexVector v) {
  double scale = 1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) scale = std::max(scale, std::abs(v.values()[i]));
  const double eps = 1e-12 * scale;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    cd& z = v.values()[i];
    z = {std::abs(z.real()) < eps ? 0.0 : z.real(), std::abs(z.imag()) < eps ? 0.0 : z.imag()};
  }
  return v;
}

double max_error(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() == 0) return 0;
  return (a.values() - b.values()).cwiseAbs().maxCoeff();
}

std::uint64_t nonzero(const ComplexVector& v) {
  std::uint64_t c = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) c += v.values()[i] != cd{};
  return c;
}

json energy_table(const BlockSpectrum& s, const FourierPlan& plan) {
  json entries = json::array();
  double total = 0;
  for (const auto& e : isotypic_energy(s, plan)) {
    entries.push_back({{"k", e.k}, {"irrep", e.label}, {"dim", e.dim}, {"energy", e.energy}});
    total += e.energy;
  }
  return {{"entries", entries}, {"total", total}};
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// Hashes every random value a suite draws, so runs can be compared by seed.
struct Digest {
  std::uint64_t h = 1469598103934665603ULL;
  void mix(double x) {
    std::uint64_t bits;
    std::memcpy(&bits, &x, 8);
    for (int i = 0; i < 8; ++i) {
      h ^= (bits >> (8 * i)) & 0xFF;
      h *= 1099511628211ULL;
    }
  }
};

ComplexVector random_complex(const IndexPtr& idx, std::mt19937_64& rng, Digest& dg) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexVector v(idx, Basis::semigroup);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = u(rng), im = u(rng);
    dg.mix(re);
    dg.mix(im);
    v.values()[i] = {re, im};
  }
  return v;
}

IntegerVector random_integer(const IndexPtr& idx, std::mt19937_64& rng, Digest& dg) {
  std::uniform_int_distribution<int> u(-9, 9);
  IntegerVector v(idx, Basis::semigroup);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v.values()[i] = u(rng);
    dg.mix(static_cast<double>(v.values()[i]));
  }
  return v;
}

struct SemigroupCase {
  int n;
  int g;  // 1 for R_n
};

IndexPtr make_index(const SemigroupCase& c) {
  GroupPtr group = c.g > 1 ? std::make_shared<const GroupTable>(GroupTable::cyclic(c.g)) : nullptr;
  return std::make_shared<const ElementIndex>(c.n, group);
}

std::string case_name(const SemigroupCase& c) {
  return c.g > 1 ? "Z" + std::to_string(c.g) + "wrR" + std::to_string(c.n) : "R" + std::to_string(c.n);
}

}  // namespace

json cmd_transform(const RunConfig& cfg) {
  require_out(cfg);
  const Dataset ds = load(cfg, cfg.in, cfg.n, cfg.group);
  const FourierPlan plan(ds.index, ds.group.irreps, cfg.cache_dir);
  const BlockSpectrum s = cfg.naive ? direct_evaluation(ds.values, plan) : fft(ds.values, plan);
  std::optional<std::filesystem::path> bin;
  if (!cfg.binary.empty()) bin = cfg.binary;
  write_spectrum(s, plan, cfg.out, bin);

  json report = {{"command", "transform"},
                 {"n", ds.n},
                 {"group", ds.group.descriptor},
                 {"size", s.flat_size()},
                 {"method", cfg.naive ? "direct" : "fast"},
                 {"output", cfg.out}};
  if (bin) report["binary"] = cfg.binary;
  if (cfg.verify) {
    const double err = max_error(ifft(s, plan), ds.values);
    const bool ok = err <= cfg.tolerance;
    report["verify"] = {{"max_error", err}, {"tolerance", cfg.tolerance}, {"passed", ok}};
    if (!ok) throw CheckFailure("transform round trip exceeded the tolerance", report);
  }
  return report;
}

json cmd_inverse(const RunConfig& cfg) {
  require_out(cfg);
  if (cfg.in.empty()) throw std::invalid_argument("inverse needs --in");
  std::ifstream in(cfg.in);
  if (!in) throw ParseError("cannot open " + cfg.in);
  json manifest;
  try {
    manifest = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed spectrum manifest: ") + e.what());
  }
  const int n = manifest.at("n").get<int>();
  if (cfg.n && *cfg.n != n) throw DimensionError("spectrum is for n=" + std::to_string(n));
  std::string desc = cfg.group.value_or(manifest.at("group").get<std::string>());
  if (desc == "trivial") desc = "none";
  const GroupChoice choice = resolve_group(desc);
  const auto index = std::make_shared<const ElementIndex>(n, choice.group, cfg.dense_cap());
  const FourierPlan plan(index, choice.irreps, cfg.cache_dir);
  const auto dir = std::filesystem::path(cfg.in).parent_path();
  const BlockSpectrum s = spectrum_from_json(manifest, plan, dir.empty() ? "." : dir);
  const ComplexVector g = spectrum_to_groupoid(s, plan);
  const ComplexVector f = chop(cfg.naive ? mobius_naive(g) : mobius_transform(g));
  write_text(cfg.out, format_dataset(f, choice.descriptor));
  return {{"command", "inverse"}, {"n", n},        {"group", choice.descriptor}, {"size", f.size()},
          {"nonzero", nonzero(f)}, {"output", cfg.out}};
}

json cmd_convolve(const RunConfig& cfg) {
  require_out(cfg);
  if (cfg.in2.empty()) throw std::invalid_argument("convolve needs --in2");
  const Dataset a = load(cfg, cfg.in, cfg.n, cfg.group);
  const Dataset b = load(cfg, cfg.in2, a.n, a.group.descriptor);
  ComplexVector c = [&] {
    if (cfg.naive) return convolve_naive(a.values, b.values);
    const FourierPlan plan(a.index, a.group.irreps, cfg.cache_dir);
    return chop(convolve_spectral(a.values, b.values, plan));
  }();
  write_text(cfg.out, format_dataset(c, a.group.descriptor));
  return {{"command", "convolve"}, {"n", a.n},     {"group", a.group.descriptor},   {"size", c.size()},
          {"nonzero", nonzero(c)}, {"output", cfg.out}, {"method", cfg.naive ? "naive" : "spectral"}};
}

json cmd_energy(const RunConfig& cfg) {
  const Dataset ds = load(cfg, cfg.in, cfg.n, cfg.group);
  const FourierPlan plan(ds.index, ds.group.irreps, cfg.cache_dir);
  const BlockSpectrum s = cfg.naive ? direct_evaluation(ds.values, plan) : fft(ds.values, plan);
  json report = energy_table(s, plan);
  report["command"] = "energy";
  report["n"] = ds.n;
  report["group"] = ds.group.descriptor;
  report["method"] = cfg.naive ? "direct" : "fast";
  if (!cfg.out.empty()) write_text(cfg.out, report.dump(1) + "\n");
  return report;
}

json cmd_bench(const RunConfig& cfg) {
  if (!cfg.n) throw std::invalid_argument("bench needs --n");
  const int n = *cfg.n;
  if (n < 3) throw std::invalid_argument("bench needs n >= 3");
  if (n > cfg.dense_cap()) throw std::invalid_argument("n exceeds the cap; pass --unsafe-n to go beyond it");
  const GroupChoice choice = resolve_group(cfg.group.value_or("none"));
  const int g = choice.group ? choice.group->order() : 1;
  const auto index = std::make_shared<const ElementIndex>(n, choice.group, cfg.dense_cap());

  IntegerVector ones(index, Basis::semigroup);
  ones.values().setOnes();
  OpCounter counter;
  const IntegerVector z = zeta_fast(ones, &counter);

  bool ok = true;
  json steps = json::array();
  for (int j = 0; j <= n; ++j) {
    const int k = n - j;
    const std::uint64_t measured = j < static_cast<int>(counter.step_operations.size()) ? counter.step_operations[j] : 0;
    const std::uint64_t bound = zeta_step_bound(n, k, g);
    steps.push_back({{"step", j}, {"k", k}, {"measured", measured}, {"bound", bound}, {"ok", measured <= bound}});
    ok = ok && measured <= bound;
  }
  const bool cubic_ok = within_cubic_bound(counter.operations, n, g);
  const std::uint64_t storage_bound = zeta_storage_bound(n, g);
  const std::uint64_t trivial_bound = zeta_storage_trivial_bound(n, g);
  const bool storage_ok = counter.peak_stored <= storage_bound && counter.peak_stored <= trivial_bound;
  ok = ok && cubic_ok && storage_ok;

  // The zeta transform of the all-ones vector counts the elements above each s.
  bool values_ok = true;
  for (std::uint64_t i = 0; i < index->total(); ++i) {
    const int k = index->rank_at(i);
    std::uint64_t above = 0;
    for (int j = k; j <= n; ++j)
      above += binomial(n - k, j - k) * binomial(n - k, j - k) * factorial(j - k) * checked_pow(g, j - k);
    if (static_cast<std::uint64_t>(z[i]) != above) values_ok = false;
  }
  ok = ok && values_ok;

  json group_stage = json::array();
  std::uint64_t group_total = 0;
  for (int k = 0; k <= n; ++k) {
    const std::uint64_t r = binomial(n, k);
    const std::uint64_t order = checked_mul(factorial(k), checked_pow(g, k));
    const std::uint64_t cost = checked_mul(r * r, checked_mul(order, order));
    group_total = checked_add(group_total, cost);
    group_stage.push_back({{"k", k}, {"transforms", r * r}, {"naive_ops_per_transform", order * order}, {"ops", cost}});
  }

  json report = {
      {"command", "bench"},
      {"n", n},
      {"group", choice.descriptor},
      {"group_order", g},
      {"size", index->total()},
      {"steps", steps},
      {"total",
       {{"measured", counter.operations},
        {"sum_of_step_bounds", zeta_sum_of_step_bounds(n, g)},
        {"cubic_bound", cubic_bound_floor(n, g)},
        {"naive_cost", naive_zeta_cost(n, g)},
        {"ok", cubic_ok}}},
      {"storage",
       {{"peak", counter.peak_stored},
        {"bound", storage_bound},
        {"trivial_bound", trivial_bound},
        {"ok", storage_ok},
        // n^(1/4)|S|/3, reported and never checked.
        {"quarter_power_reference", std::pow(static_cast<double>(n), 0.25) * static_cast<double>(index->total()) / 3.0}}},
      {"values_ok", values_ok},
      {"group_stage", {{"ranks", group_stage}, {"naive_ops", group_total}}},
      {"passed", ok}};
  if (!ok) throw CheckFailure("measured cost exceeds a bound", report);
  return report;
}

json cmd_selftest(const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  const double tol = cfg.tolerance;
  json suites = json::array();
  bool all = true;

  const auto run = [&](const std::string& name, auto&& body) {
    Digest dg;
    json entry = {{"name", name}};
    try {
      std::string detail;
      double err = 0;
      const bool ok = body(dg, detail, err);
      entry["passed"] = ok;
      entry["max_error"] = err;
      entry["detail"] = detail;
    } catch (const std::exception& e) {
      entry["passed"] = false;
      entry["max_error"] = 0.0;
      entry["detail"] = e.what();
    }
    entry["vector_digest"] = hex64(dg.h);
    all = all && entry["passed"].get<bool>();
    suites.push_back(std::move(entry));
  };

  run("cardinality", [&](Digest&, std::string& detail, double&) {
    for (int g : {1, 2})
      for (int n = 0; n <= 4; ++n) {
        const ElementIndex idx(n, g > 1 ? std::make_shared<const GroupTable>(GroupTable::cyclic(g)) : nullptr);
        if (idx.total() != cardinality(n, g)) {
          detail = "index size differs from the closed form at n=" + std::to_string(n);
          return false;
        }
        if (n >= 3 && cardinality_recursive(n, g) != cardinality(n, g)) {
          detail = "recursion differs at n=" + std::to_string(n);
          return false;
        }
      }
    detail = "n <= 4, |G| <= 2";
    return true;
  });

  const std::vector<SemigroupCase> small = {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {1, 2}, {2, 2}, {3, 2}};

  run("zeta_oracle", [&](Digest& dg, std::string& detail, double&) {
    for (const auto& c : small) {
      const auto idx = make_index(c);
      for (int t = 0; t < 5; ++t) {
        const IntegerVector f = random_integer(idx, rng, dg);
        const IntegerVector fast = zeta_fast(f);
        if (fast.values() != zeta_naive(f).values() || mobius_transform(fast).values() != f.values()) {
          detail = "mismatch on " + case_name(c);
          return false;
        }
      }
    }
    detail = "fast zeta and Mobius equal the interval sums";
    return true;
  });

  run("irreps", [&](Digest&, std::string& detail, double& err) {
    const GroupPtr z2 = std::make_shared<const GroupTable>(GroupTable::cyclic(2));
    const IrrepSet base = cyclic_irreps(*z2);
    for (int k = 0; k <= 4; ++k) {
      const auto rep = check_irreps(symmetric_irreps(k), WreathGroup(k), true);
      err = std::max({err, rep.homomorphism_error, rep.unitarity_error});
      if (!rep.passed(1e-10)) {
        detail = "S" + std::to_string(k) + " failed";
        return false;
      }
    }
    for (int k = 0; k <= 3; ++k) {
      const auto rep = check_irreps(wreath_irreps(base, z2, k), WreathGroup(k, z2), true);
      err = std::max({err, rep.homomorphism_error, rep.unitarity_error});
      if (!rep.passed(1e-10)) {
        detail = "Z2wrS" + std::to_string(k) + " failed";
        return false;
      }
    }
    detail = "S_k for k <= 4 and Z2wrS_k for k <= 3";
    return true;
  });

  run("wedderburn", [&](Digest& dg, std::string& detail, double& err) {
    for (const auto& c : std::vector<SemigroupCase>{{1, 1}, {2, 1}, {3, 1}, {1, 2}, {2, 2}}) {
      const auto idx = make_index(c);
      const FourierPlan plan(idx, nullptr, cfg.cache_dir);
      const ComplexVector f = random_complex(idx, rng, dg);
      err = std::max(err, fft(f, plan).max_abs_diff(direct_evaluation(f, plan)));
    }
    detail = "fft against direct evaluation, n <= 3";
    return err <= 1e-10;
  });

  run("round_trip", [&](Digest& dg, std::string& detail, double& err) {
    for (const auto& c : small) {
      const auto idx = make_index(c);
      const FourierPlan plan(idx, nullptr, cfg.cache_dir);
      const ComplexVector f = random_complex(idx, rng, dg);
      err = std::max(err, max_error(ifft(fft(f, plan), plan), f));
      const ComplexVector flat = random_complex(idx, rng, dg);
      const BlockSpectrum s = BlockSpectrum::unflatten(plan, flat.values());
      err = std::max(err, fft(ifft(s, plan), plan).max_abs_diff(s));
    }
    detail = "ifft(fft(f)) and fft(ifft(F))";
    return err <= tol;
  });

  run("homomorphism", [&](Digest& dg, std::string& detail, double& err) {
    for (const auto& c : std::vector<SemigroupCase>{{3, 1}, {2, 2}}) {
      const auto idx = make_index(c);
      const FourierPlan plan(idx, nullptr, cfg.cache_dir);
      for (int t = 0; t < 5; ++t) {
        const ComplexVector f = random_complex(idx, rng, dg);
        const ComplexVector g = random_complex(idx, rng, dg);
        err = std::max(err, fft(convolve_naive(f, g), plan).max_abs_diff(fft(f, plan) * fft(g, plan)));
      }
    }
    detail = "convolution maps to blockwise products on R3 and Z2wrR2";
    return err <= tol;
  });

  run("dimension", [&](Digest&, std::string& detail, double&) {
    for (const auto& c : small) {
      const auto idx = make_index(c);
      const FourierPlan plan(idx, nullptr, cfg.cache_dir);
      if (BlockSpectrum::zeros(plan).flat_size() != idx->total() || dclass_total(plan.dclasses()) != idx->total()) {
        detail = "spectrum size differs from |S| on " + case_name(c);
        return false;
      }
    }
    detail = "sum of r_k^2 |G_k| equals |S|";
    return true;
  });

  run("cache_integrity", [&](Digest&, std::string& detail, double& err) {
    std::filesystem::path dir;
    bool scratch = false;
    if (cfg.cache_dir) {
      dir = *cfg.cache_dir;
    } else {
      dir = std::filesystem::temp_directory_path() / ("rookspec-selftest-" + std::to_string(cfg.seed));
      std::filesystem::remove_all(dir);
      scratch = true;
    }
    const GroupPtr z2 = std::make_shared<const GroupTable>(GroupTable::cyclic(2));
    const IrrepSet base = cyclic_irreps(*z2);
    int checked = 0;
    for (int k = 0; k <= 3; ++k) {
      for (const GroupPtr& g : {GroupPtr{}, z2}) {
        const WreathGroup w(k, g);
        const auto key = irrep_cache_key(w.descriptor(), w.base().fingerprint());
        const auto path = irrep_cache_path(dir, w.descriptor(), key);
        const IrrepSet built = subgroup_irreps(&base, g, k);
        if (!std::filesystem::exists(path)) save_irreps(built, k, key, path);
        const IrrepSet loaded = load_irreps(path, key, k);
        if (loaded.size() != built.size()) throw CacheError(path.string() + " lists the wrong irreps");
        for (std::size_t r = 0; r < built.size(); ++r)
          err = std::max(err, (loaded.table(r) - built.table(r)).cwiseAbs().maxCoeff());
        ++checked;
      }
    }
    for (const auto& entry : std::filesystem::directory_iterator(dir))
      if (entry.path().extension() == ".irreps") {
        load_irreps(entry.path(), std::nullopt, std::nullopt);
        ++checked;
      }
    if (scratch) {
      // A flipped byte must be caught.
      const WreathGroup w(3);
      const auto path = irrep_cache_path(dir, w.descriptor(), irrep_cache_key(w.descriptor(), w.base().fingerprint()));
      std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
      f.seekp(40);
      f.put('\x7f');
      f.close();
      bool caught = false;
      try {
        load_irreps(path, std::nullopt, std::nullopt);
      } catch (const CacheError&) {
        caught = true;
      }
      std::filesystem::remove_all(dir);
      if (!caught) {
        detail = "a corrupted cache file was accepted";
        return false;
      }
    }
    detail = std::to_string(checked) + " cache files verified";
    return err == 0.0;
  });

  json report = {{"command", "selftest"}, {"seed", cfg.seed}, {"tolerance", tol}, {"suites", suites}, {"passed", all}};
  if (!all) throw CheckFailure("self-test failed", report);
  return report;
}

}  // namespace rookspec
