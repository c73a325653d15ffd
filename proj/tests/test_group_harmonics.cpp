#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

#include "rookfft/combinatorics.hpp"
#include "rookfft/irrep_cache.hpp"
#include "rookfft/irreps.hpp"
#include "test_support.hpp"

using namespace rookfft;
using rookfft::testing::cyclic;

namespace {

std::vector<int> dims(const IrrepSet& s) {
  std::vector<int> out;
  for (const auto& ir : s.irreps()) out.push_back(ir.dim);
  return out;
}

Eigen::VectorXcd random_function(std::uint64_t order, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXcd f(static_cast<Eigen::Index>(order));
  for (auto& z : f) z = {u(rng), u(rng)};
  return f;
}

Eigen::VectorXcd group_convolve(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g, const WreathGroup& G) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(f.size());
  for (std::uint64_t x = 0; x < G.order(); ++x)
    for (std::uint64_t y = 0; y < G.order(); ++y) out[G.mul(x, y)] += f[x] * g[y];
  return out;
}

double spectrum_diff(const GroupSpectrum& a, const GroupSpectrum& b) {
  double m = 0;
  for (std::size_t r = 0; r < a.size(); ++r) m = std::max(m, (a[r] - b[r]).cwiseAbs().maxCoeff());
  return m;
}

// Permutation of k points sending i to perm[i], with identity labels.
std::uint64_t perm_id(const WreathGroup& G, std::vector<std::uint8_t> perm) {
  return G.id_of(WreathElem::embed(PartialPerm::from_images(perm), G.base_ptr()));
}

std::shared_ptr<const IrrepSet> z2_irreps() {
  return std::make_shared<const IrrepSet>(cyclic_irreps(GroupTable::cyclic(2)));
}

}  // namespace

TEST(SymmetricIrreps, SmallGroups) {
  const IrrepSet& s2 = symmetric_irreps(2);
  ASSERT_EQ(s2.size(), 2u);
  const WreathGroup G2(2);
  const std::uint64_t swap = perm_id(G2, {1, 0});
  EXPECT_NEAR(s2.matrix(0, swap)(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(s2.matrix(1, swap)(0, 0).real(), -1.0, 1e-15);

  const IrrepSet& s3 = symmetric_irreps(3);
  EXPECT_EQ(dims(s3), (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(s3.irreps()[0].label, "[3]");
  EXPECT_EQ(s3.irreps()[1].label, "[2,1]");
  EXPECT_EQ(s3.irreps()[2].label, "[1,1,1]");
  EXPECT_EQ(dims(symmetric_irreps(4)), (std::vector<int>{1, 3, 2, 3, 1}));
  EXPECT_EQ(symmetric_irreps(0).group_order(), 1u);
  EXPECT_THROW(symmetric_irreps(9), std::exception);
}

TEST(SymmetricIrreps, AdjacentTranspositionsAreOrthogonalInvolutions) {
  for (int k = 2; k <= 5; ++k) {
    const IrrepSet& irreps = symmetric_irreps(k);
    const WreathGroup G(k);
    for (int i = 0; i + 1 < k; ++i) {
      std::vector<std::uint8_t> perm(k);
      for (int j = 0; j < k; ++j) perm[j] = static_cast<std::uint8_t>(j);
      std::swap(perm[i], perm[i + 1]);
      const std::uint64_t s = perm_id(G, perm);
      for (std::size_t r = 0; r < irreps.size(); ++r) {
        const ComplexMatrix m = irreps.matrix(r, s);
        const auto eye = ComplexMatrix::Identity(m.rows(), m.cols());
        EXPECT_LT((m * m - eye).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((m - m.transpose()).cwiseAbs().maxCoeff(), 1e-15);
        EXPECT_LT(m.imag().cwiseAbs().maxCoeff(), 1e-15);
      }
    }
  }
}

TEST(SymmetricIrreps, CompleteUpToSix) {
  for (int k = 1; k <= 6; ++k) {
    const IrrepReport rep = check_irreps(symmetric_irreps(k), WreathGroup(k), k <= 5);
    EXPECT_TRUE(rep.passed(1e-10)) << k;
    EXPECT_EQ(rep.sum_of_squares, factorial(k));
  }
}

TEST(SymmetricIrreps, LazyEvaluationAtSeven) {
  const IrrepSet& s7 = symmetric_irreps(7);
  ASSERT_FALSE(s7.materialized());
  const WreathGroup G(7);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> pick(0, G.order() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint64_t a = pick(rng), b = pick(rng);
    const auto ma = s7.matrices(a), mb = s7.matrices(b), mab = s7.matrices(G.mul(a, b));
    for (std::size_t r = 0; r < s7.size(); ++r) {
      EXPECT_LT((ma[r] * mb[r] - mab[r]).cwiseAbs().maxCoeff(), 1e-10);
      EXPECT_LT((ma[r].adjoint() * ma[r] - ComplexMatrix::Identity(ma[r].rows(), ma[r].cols())).cwiseAbs().maxCoeff(),
                1e-10);
    }
  }
  // The walk visits every element once and agrees with direct evaluation.
  std::vector<char> seen(G.order(), 0);
  double worst = 0;
  s7.for_each_element([&](std::uint64_t g, const std::vector<ComplexMatrix>& mats) {
    ++seen[g];
    if (g % 997 == 0) {
      for (std::size_t r = 0; r < mats.size(); ++r)
        worst = std::max(worst, (mats[r] - s7.matrix(r, g)).cwiseAbs().maxCoeff());
    }
  });
  EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](char c) { return c == 1; }));
  EXPECT_LT(worst, 1e-10);
}

TEST(WreathIrreps, TrivialBaseReproducesSymmetric) {
  const GroupPtr one = std::make_shared<const GroupTable>(GroupTable::trivial());
  const IrrepSet base = cyclic_irreps(*one);
  for (int k = 1; k <= 4; ++k) {
    const IrrepSet w = wreath_irreps(base, one, k);
    const IrrepSet& s = symmetric_irreps(k);
    ASSERT_EQ(w.size(), s.size());
    for (std::size_t r = 0; r < s.size(); ++r) {
      EXPECT_EQ(w.irreps()[r].label, s.irreps()[r].label);
      EXPECT_LT((w.table(r) - s.table(r)).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(WreathIrreps, Z2SmallDegrees) {
  const GroupPtr z2 = cyclic(2);
  const IrrepSet w1 = wreath_irreps(*z2_irreps(), z2, 1);
  EXPECT_EQ(dims(w1), (std::vector<int>{1, 1}));
  const IrrepSet w2 = wreath_irreps(*z2_irreps(), z2, 2);
  std::vector<int> d = dims(w2);
  std::sort(d.begin(), d.end());
  EXPECT_EQ(d, (std::vector<int>{1, 1, 1, 1, 2}));
  for (int k = 1; k <= 3; ++k) {
    const IrrepReport rep = check_irreps(wreath_irreps(*z2_irreps(), z2, k), WreathGroup(k, z2), true);
    EXPECT_TRUE(rep.passed(1e-10)) << k;
    EXPECT_EQ(rep.sum_of_squares, factorial(k) << k);
  }
}

TEST(WreathIrreps, Z3Degree2) {
  const GroupPtr z3 = cyclic(3);
  const IrrepSet base = cyclic_irreps(*z3);
  const IrrepReport rep = check_irreps(wreath_irreps(base, z3, 2), WreathGroup(2, z3), true);
  EXPECT_TRUE(rep.passed(1e-10));
  EXPECT_EQ(rep.sum_of_squares, 18u);
}

TEST(WreathIrreps, IncompleteBaseIsRejected) {
  const GroupPtr z2 = cyclic(2);
  const IrrepSet full = cyclic_irreps(*z2);
  const IrrepSet partial(full.descriptor(), 2, {full.irreps()[0]}, {full.table(0)});
  EXPECT_THROW(wreath_irreps(partial, z2, 2), std::exception);
}

TEST(CyclicIrreps, CharactersOfZ4) {
  const IrrepSet c = cyclic_irreps(GroupTable::cyclic(4));
  ASSERT_EQ(c.size(), 4u);
  EXPECT_NEAR(std::abs(c.matrix(1, 1)(0, 0) - std::complex<double>(0, 1)), 0.0, 1e-15);
  EXPECT_EQ(c.irreps()[3].label, "chi3");
  EXPECT_TRUE(check_irreps(c, WreathGroup(1, cyclic(4)), true).passed());
}

TEST(GroupTransform, DeltaAtIdentityAndAtElement) {
  const IrrepSet& s4 = symmetric_irreps(4);
  Eigen::VectorXcd f = Eigen::VectorXcd::Zero(24);
  f[0] = 1.0;
  for (const auto& m : group_ft(f, s4)) EXPECT_LT((m - ComplexMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff(), 1e-15);
  f[0] = 0.0;
  f[13] = 1.0;
  const GroupSpectrum spec = group_ft(f, s4);
  for (std::size_t r = 0; r < s4.size(); ++r) EXPECT_LT((spec[r] - s4.matrix(r, 13)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(GroupTransform, ConvolutionBecomesProduct) {
  std::mt19937_64 rng(21);
  const GroupPtr z2 = cyclic(2);
  const IrrepSet z2s2 = wreath_irreps(*z2_irreps(), z2, 2);
  const std::vector<std::pair<const IrrepSet*, WreathGroup>> cases = {
      {&symmetric_irreps(3), WreathGroup(3)}, {&symmetric_irreps(4), WreathGroup(4)}, {&z2s2, WreathGroup(2, z2)}};
  for (const auto& [irreps, G] : cases) {
    for (int trial = 0; trial < 5; ++trial) {
      const Eigen::VectorXcd f = random_function(G.order(), rng), g = random_function(G.order(), rng);
      const GroupSpectrum fg = group_ft(group_convolve(f, g, G), *irreps);
      const GroupSpectrum F = group_ft(f, *irreps), H = group_ft(g, *irreps);
      GroupSpectrum prod;
      for (std::size_t r = 0; r < F.size(); ++r) prod.push_back(F[r] * H[r]);
      EXPECT_LT(spectrum_diff(fg, prod), 1e-10) << G.descriptor();
    }
  }
}

TEST(GroupTransform, InverseAndParseval) {
  std::mt19937_64 rng(22);
  const IrrepSet& s4 = symmetric_irreps(4);
  const Eigen::VectorXcd f = random_function(24, rng);
  EXPECT_LT(rookfft::testing::max_abs(group_ift(group_ft(f, s4), s4), f), 1e-12);

  const GroupPtr z2 = cyclic(2);
  const IrrepSet w = wreath_irreps(*z2_irreps(), z2, 2);
  const Eigen::VectorXcd h = random_function(8, rng);
  const GroupSpectrum H = group_ft(h, w);
  double rhs = 0;
  for (std::size_t r = 0; r < w.size(); ++r) rhs += w.dim(r) * H[r].squaredNorm();
  EXPECT_NEAR(h.squaredNorm(), rhs / 8.0, 1e-12);
}

TEST(GroupTransform, BatchMatchesSingle) {
  std::mt19937_64 rng(23);
  const IrrepSet& s3 = symmetric_irreps(3);
  ComplexMatrix batch(4, 6);
  for (int row = 0; row < 4; ++row) batch.row(row) = random_function(6, rng).transpose();
  const auto spectra = group_ft_batch(batch, s3);
  for (int row = 0; row < 4; ++row) {
    const GroupSpectrum one = group_ft(batch.row(row).transpose(), s3);
    for (std::size_t r = 0; r < s3.size(); ++r) {
      const int d = s3.dim(r);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) EXPECT_LT(std::abs(spectra[r](row, i * d + j) - one[r](i, j)), 1e-14);
    }
  }
  EXPECT_LT((group_ift_batch(spectra, s3) - batch).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_EQ(naive_group_ft_cost(s3), 36u);
}

class IrrepCacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("rookfft_cache_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(IrrepCacheTest, SaveLoadRoundTrip) {
  const IrrepSet& s4 = symmetric_irreps(4);
  const std::uint64_t key = irrep_cache_key("S4", 0);
  const auto path = dir_ / "s4.irreps";
  save_irreps(s4, 4, key, path);
  const IrrepSet back = load_irreps(path, key, 4);
  ASSERT_EQ(back.size(), s4.size());
  for (std::size_t r = 0; r < s4.size(); ++r) {
    EXPECT_EQ(back.irreps()[r].label, s4.irreps()[r].label);
    EXPECT_EQ(back.table(r), s4.table(r));
  }
  EXPECT_THROW(load_irreps(path, key + 1, 4), CacheError);
  EXPECT_THROW(load_irreps(path, key, 3), CacheError);
}

TEST_F(IrrepCacheTest, CorruptionIsDetected) {
  const auto path = dir_ / "s3.irreps";
  save_irreps(symmetric_irreps(3), 3, 7, path);
  std::fstream io(path, std::ios::in | std::ios::out | std::ios::binary);
  io.seekp(40);
  io.put('\x5a');
  io.close();
  EXPECT_THROW(load_irreps(path, std::nullopt, std::nullopt), CacheError);
  std::ofstream(dir_ / "short.irreps", std::ios::binary) << "RFIR";
  EXPECT_THROW(load_irreps(dir_ / "short.irreps", std::nullopt, std::nullopt), CacheError);
}

TEST_F(IrrepCacheTest, CachedSubgroupIrrepsReuseFiles) {
  const GroupPtr z2 = cyclic(2);
  const auto base = z2_irreps();
  const IrrepSet first = cached_subgroup_irreps(base.get(), z2, 2, dir_);
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir_)) ++files;
  EXPECT_GE(files, 1u);
  const IrrepSet second = cached_subgroup_irreps(base.get(), z2, 2, dir_);
  for (std::size_t r = 0; r < first.size(); ++r) EXPECT_EQ(first.table(r), second.table(r));
  EXPECT_TRUE(check_irreps(second, WreathGroup(2, z2), true).passed());
}
