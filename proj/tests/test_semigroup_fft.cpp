#include <gtest/gtest.h>

#include <random>
#include <set>

#include "rookfft/counting.hpp"
#include "rookfft/dclass.hpp"
#include "rookfft/semigroup_fft.hpp"
#include "test_support.hpp"

using namespace rookfft;
using rookfft::testing::delta;
using rookfft::testing::make_index;
using rookfft::testing::max_abs;
using rookfft::testing::random_complex;

namespace {

struct Case {
  int n;
  int g;
};

FourierPlan make_plan(int n, int g = 1) { return FourierPlan(make_index(n, g)); }

const std::vector<Case> kSmallCases = {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}};

}  // namespace

TEST(DClasses, RookMonoidOfThree) {
  const auto classes = build_dclasses(3);
  ASSERT_EQ(classes.size(), 4u);
  const std::vector<std::size_t> r = {1, 3, 3, 1};
  for (int k = 0; k <= 3; ++k) {
    EXPECT_EQ(classes[k].r(), r[k]);
    EXPECT_EQ(classes[k].group_order, factorial(k));
  }
  EXPECT_EQ(dclass_total(classes), 34u);
  EXPECT_EQ(dclass_total(build_dclasses(2, rookfft::testing::cyclic(2))), 17u);
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(dclass_total(build_dclasses(n)), cardinality(n));
}

TEST(DClasses, LiftAndProjectAreInverse) {
  auto idx = make_index(3, 2);
  const auto classes = build_dclasses(3, idx->group());
  for (const auto& d : classes) {
    for (std::size_t b = 0; b < d.r(); ++b)
      for (std::size_t a = 0; a < d.r(); ++a)
        for (std::uint64_t id = 0; id < d.group_order; ++id) {
          const WreathElem s = idx->subgroup_element(d.k, id);
          const WreathElem t = lift_from_subgroup(d, b, a, s);
          ASSERT_EQ(t.shape().domain_mask(), d.idempotents[a]);
          ASSERT_EQ(t.shape().range_mask(), d.idempotents[b]);
          ASSERT_EQ(project_to_subgroup(d, t), s);
          ASSERT_EQ(idx->index_of(t), idx->run_offset(d.k, d.idempotents[a], d.idempotents[b]) + id);
        }
  }
}

TEST(DClasses, ExtractHReadsLiftedElements) {
  std::mt19937_64 rng(31);
  for (const Case c : {Case{3, 1}, Case{2, 2}}) {
    const FourierPlan plan = make_plan(c.n, c.g);
    const ComplexVector v = random_complex(plan.index_ptr(), rng).relabeled(Basis::groupoid);
    std::set<std::uint64_t> covered;
    for (const auto& d : plan.dclasses())
      for (std::size_t b = 0; b < d.r(); ++b)
        for (std::size_t a = 0; a < d.r(); ++a) {
          const Eigen::VectorXcd h = extract_h(v, d, b, a);
          ASSERT_EQ(static_cast<std::uint64_t>(h.size()), d.group_order);
          for (std::uint64_t id = 0; id < d.group_order; ++id) {
            const std::uint64_t t = plan.index().index_of(lift_from_subgroup(d, b, a, plan.index().subgroup_element(d.k, id)));
            EXPECT_EQ(h[static_cast<Eigen::Index>(id)], v[t]);
            covered.insert(t);
          }
        }
    EXPECT_EQ(covered.size(), plan.index().total());
  }
}

TEST(Fft, HandComputedDeltaOnR2) {
  // δ at 1 ↦ 2: its down-set adds the empty map, so rank 0 sees 1 and
  // rank 1 sees E_{b,a} with a = {1} and b = {2}.
  const FourierPlan plan = make_plan(2);
  const BlockSpectrum s = fft(delta(plan.index_ptr(), plan.index().index_of(parse_partial_perm("2,-"))), plan);
  ASSERT_EQ(s.blocks.size(), 3u);
  EXPECT_EQ(s.blocks[0][0](0, 0), std::complex<double>(1.0));
  ComplexMatrix e = ComplexMatrix::Zero(2, 2);
  e(1, 0) = 1.0;
  EXPECT_LT((s.blocks[1][0] - e).cwiseAbs().maxCoeff(), 1e-15);
  for (const auto& m : s.blocks[2]) EXPECT_LT(m.cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Fft, MatchesDirectEvaluation) {
  std::mt19937_64 rng(32);
  for (const Case c : kSmallCases) {
    const FourierPlan plan = make_plan(c.n, c.g);
    for (int trial = 0; trial < 3; ++trial) {
      const ComplexVector f = random_complex(plan.index_ptr(), rng);
      EXPECT_LT(fft(f, plan).max_abs_diff(direct_evaluation(f, plan)), 1e-10) << c.n << "," << c.g;
    }
  }
}

TEST(Fft, RoundTrip) {
  std::mt19937_64 rng(33);
  for (const Case c : {Case{4, 1}, Case{5, 1}, Case{3, 2}, Case{3, 3}}) {
    const FourierPlan plan = make_plan(c.n, c.g);
    const ComplexVector f = random_complex(plan.index_ptr(), rng);
    const BlockSpectrum s = fft(f, plan);
    EXPECT_EQ(s.flat_size(), plan.index().total());
    EXPECT_LT(max_abs(ifft(s, plan).values(), f.values()), 1e-9);
    EXPECT_EQ(BlockSpectrum::unflatten(plan, s.flatten(plan)).max_abs_diff(s), 0.0);
  }
}

TEST(Fft, ZeroSpectrumIsZeroFunction) {
  const FourierPlan plan = make_plan(3, 2);
  const ComplexVector z = ifft(BlockSpectrum::zeros(plan), plan);
  EXPECT_EQ(z.values().cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(fft(ComplexVector(plan.index_ptr(), Basis::semigroup), plan).max_abs_diff(BlockSpectrum::zeros(plan)), 0.0);
}

TEST(Fft, RejectsForeignVectors) {
  const FourierPlan plan = make_plan(3);
  EXPECT_THROW(fft(ComplexVector(make_index(2), Basis::semigroup), plan), DimensionError);
  EXPECT_THROW(fft(ComplexVector(plan.index_ptr(), Basis::groupoid), plan), std::invalid_argument);
}

TEST(Convolution, TheoremHolds) {
  std::mt19937_64 rng(34);
  for (const Case c : {Case{2, 1}, Case{3, 1}, Case{2, 2}, Case{2, 3}}) {
    const FourierPlan plan = make_plan(c.n, c.g);
    for (int trial = 0; trial < 5; ++trial) {
      const ComplexVector f = random_complex(plan.index_ptr(), rng), g = random_complex(plan.index_ptr(), rng);
      const BlockSpectrum lhs = fft(convolve_naive(f, g), plan);
      EXPECT_LT(lhs.max_abs_diff(fft(f, plan) * fft(g, plan)), 1e-9);
      EXPECT_LT(max_abs(convolve_spectral(f, g, plan).values(), convolve_naive(f, g).values()), 1e-9);
    }
  }
}

TEST(Convolution, NaiveIsAssociativeOnIntegers) {
  std::mt19937_64 rng(35);
  auto idx = make_index(3);
  const IntegerVector a = rookfft::testing::random_integer(idx, rng), b = rookfft::testing::random_integer(idx, rng),
                      c = rookfft::testing::random_integer(idx, rng);
  EXPECT_EQ(convolve_naive(convolve_naive(a, b), c).values(), convolve_naive(a, convolve_naive(b, c)).values());
}

TEST(Convolution, DeltasMultiplyLikeElements) {
  auto idx = make_index(2, 2);
  for (std::uint64_t x = 0; x < idx->total(); ++x)
    for (std::uint64_t y = 0; y < idx->total(); ++y) {
      const ComplexVector xy = convolve_naive(delta(idx, x), delta(idx, y));
      const std::uint64_t expected = idx->index_of(wreath_compose(idx->element_at(x), idx->element_at(y)));
      ASSERT_EQ(xy.values(), delta(idx, expected).values());
    }
}

TEST(Convolution, ZeroElementAbsorbs) {
  std::mt19937_64 rng(36);
  const FourierPlan plan = make_plan(3);
  const ComplexVector f = random_complex(plan.index_ptr(), rng);
  const std::uint64_t zero = plan.index().index_of(PartialPerm(3));
  const ComplexVector out = convolve_spectral(f, delta(plan.index_ptr(), zero), plan);
  EXPECT_LT(max_abs(out.values(), delta(plan.index_ptr(), zero).values() * f.values().sum()), 1e-12);
}

TEST(Groupoid, MultiplicationLawOnR2) {
  // ⌊s⌋⌊t⌋ = ⌊st⌋ when dom s = ran t, and 0 otherwise.
  auto idx = make_index(2);
  const auto basis_element = [&](std::uint64_t s) {
    ComplexVector g(idx, Basis::groupoid);
    g[s] = 1.0;
    return mobius_transform(g);
  };
  for (std::uint64_t s = 0; s < idx->total(); ++s)
    for (std::uint64_t t = 0; t < idx->total(); ++t) {
      const ComplexVector prod = zeta_fast(convolve_naive(basis_element(s), basis_element(t)));
      const PartialPerm ps = idx->shape_at(s), pt = idx->shape_at(t);
      ComplexVector expected(idx, Basis::groupoid);
      if (ps.domain_mask() == pt.range_mask()) expected[idx->index_of(compose(ps, pt))] = 1.0;
      ASSERT_EQ(prod.values(), expected.values()) << s << "," << t;
    }
}

TEST(Energy, DeltaAtIdentityHasIdentityBlocks) {
  const FourierPlan plan = make_plan(3);
  const auto entries = isotypic_energy(fft(delta(plan.index_ptr(), 0), plan), plan);
  double total = 0;
  for (const auto& e : entries) {
    EXPECT_NEAR(e.energy, static_cast<double>(plan.dclass(e.k).r() * e.dim), 1e-12) << e.k << " " << e.label;
    total += e.energy;
  }
  EXPECT_NEAR(total, 1.0 + 3.0 + 6.0 + 4.0, 1e-12);
}

TEST(Energy, ZeroAndScaling) {
  std::mt19937_64 rng(37);
  const FourierPlan plan = make_plan(2, 2);
  for (const auto& e : isotypic_energy(BlockSpectrum::zeros(plan), plan)) EXPECT_EQ(e.energy, 0.0);
  const ComplexVector f = random_complex(plan.index_ptr(), rng);
  BlockSpectrum s = fft(f, plan);
  const auto before = isotypic_energy(s, plan);
  s *= std::complex<double>(0.0, 3.0);
  const auto after = isotypic_energy(s, plan);
  ASSERT_EQ(before.size(), after.size());
  for (std::size_t i = 0; i < before.size(); ++i) EXPECT_NEAR(after[i].energy, 9.0 * before[i].energy, 1e-10);
}

TEST(Plan, DescriptorsAndIrreps) {
  const FourierPlan plan = make_plan(3, 2);
  EXPECT_EQ(plan.group_descriptor(), "Z2");
  EXPECT_EQ(make_plan(2).group_descriptor(), "trivial");
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(plan.irreps(k).group_order(), plan.dclass(k).group_order);
}
