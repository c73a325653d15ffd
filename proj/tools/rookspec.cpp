// rookspec: Fourier analysis of coefficient data on rook monoids and their
// wreath products.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "rookfft/dataset.hpp"
#include "rookfft/irrep_cache.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitCheck = 2;

void print(const nlohmann::json& j) { std::cout << j.dump(1) << "\n"; }

int fail(const std::string& command, const std::string& kind, const std::string& message, int line = 0) {
  nlohmann::json err = {{"command", command}, {"error", {{"kind", kind}, {"message", message}}}};
  if (line > 0) err["error"]["line"] = line;
  print(err);
  return kind == "check" ? kExitCheck : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  rookspec::RunConfig cfg;
  CLI::App app{"Fourier transforms on rook monoids R_n and wreath products G wr R_n"};
  app.require_subcommand(1);

  int n = -1;
  std::string group, cache_dir;
  const auto common = [&](CLI::App* sub) {
    sub->add_option("--n", n, "ground set size");
    sub->add_option("--group", group, "none | Z<m> | cyclic:<m> | table:<file.json>");
    sub->add_option("--cache-dir", cache_dir, "irrep cache directory (default: $ROOKSPEC_CACHE_DIR)");
    sub->add_option("--tolerance", cfg.tolerance, "tolerance for end-to-end checks");
    sub->add_flag("--unsafe-n", cfg.unsafe_n, "allow n up to 12 (memory grows like |R_n|)");
    sub->add_flag("--naive", cfg.naive, "use the direct reference algorithms");
  };

  auto* transform = app.add_subcommand("transform", "dataset -> spectrum");
  common(transform);
  transform->add_option("--in", cfg.in, "input dataset")->required();
  transform->add_option("--out", cfg.out, "output spectrum manifest (JSON)")->required();
  transform->add_option("--binary", cfg.binary, "write entries to this little-endian blob");
  transform->add_flag("--verify", cfg.verify, "check the inverse reproduces the input");

  auto* inverse = app.add_subcommand("inverse", "spectrum -> dataset");
  common(inverse);
  inverse->add_option("--in", cfg.in, "input spectrum manifest")->required();
  inverse->add_option("--out", cfg.out, "output dataset")->required();

  auto* convolve = app.add_subcommand("convolve", "convolution of two datasets");
  common(convolve);
  convolve->add_option("--in", cfg.in, "left operand")->required();
  convolve->add_option("--in2", cfg.in2, "right operand")->required();
  convolve->add_option("--out", cfg.out, "output dataset")->required();

  auto* energy = app.add_subcommand("energy", "isotypic energy table");
  common(energy);
  energy->add_option("--in", cfg.in, "input dataset")->required();
  energy->add_option("--out", cfg.out, "also write the table here");

  auto* bench = app.add_subcommand("bench", "instrumented zeta transform against its bounds");
  common(bench);

  auto* selftest = app.add_subcommand("selftest", "run the invariant suites");
  common(selftest);
  selftest->add_option("--seed", cfg.seed, "seed for the random suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(argc > 1 ? argv[1] : "", "usage", e.what());
  }

  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  if (n >= 0) cfg.n = n;
  if (!group.empty()) cfg.group = group;
  if (!cache_dir.empty()) {
    cfg.cache_dir = cache_dir;
  } else if (const char* env = std::getenv("ROOKSPEC_CACHE_DIR"); env && *env) {
    cfg.cache_dir = env;
  }

  try {
    nlohmann::json report;
    if (cfg.command == "transform") report = rookspec::cmd_transform(cfg);
    else if (cfg.command == "inverse") report = rookspec::cmd_inverse(cfg);
    else if (cfg.command == "convolve") report = rookspec::cmd_convolve(cfg);
    else if (cfg.command == "energy") report = rookspec::cmd_energy(cfg);
    else if (cfg.command == "bench") report = rookspec::cmd_bench(cfg);
    else report = rookspec::cmd_selftest(cfg);
    print(report);
    return kExitOk;
  } catch (const rookspec::CheckFailure& e) {
    nlohmann::json report = e.report();
    report["error"] = {{"kind", "check"}, {"message", e.what()}};
    print(report);
    return kExitCheck;
  } catch (const rookfft::ParseError& e) {
    return fail(cfg.command, "parse", e.what(), e.line());
  } catch (const rookfft::CacheError& e) {
    return fail(cfg.command, "cache", e.what());
  } catch (const std::exception& e) {
    return fail(cfg.command, "validation", e.what());
  }
}
