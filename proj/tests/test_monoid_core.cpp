#include <gtest/gtest.h>

#include <array>
#include <map>
#include <set>
#include <vector>

#include "rookfft/combinatorics.hpp"
#include "rookfft/counting.hpp"
#include "rookfft/element_index.hpp"
#include "rookfft/partial_perm.hpp"
#include "rookfft/wreath_elem.hpp"
#include "test_support.hpp"

using namespace rookfft;
using rookfft::testing::cyclic;

namespace {

PartialPerm pp(const char* text) { return parse_partial_perm(text); }

std::vector<PartialPerm> all_elements(int n) {
  ElementIndex idx(n);
  std::vector<PartialPerm> out;
  for (std::uint64_t i = 0; i < idx.total(); ++i) out.push_back(idx.shape_at(i));
  return out;
}

using RookMatrix = std::vector<std::vector<int>>;

RookMatrix to_matrix(const PartialPerm& s) {
  RookMatrix m(s.size(), std::vector<int>(s.size(), 0));
  for (int j = 0; j < s.size(); ++j)
    if (s.defined(j)) m[s(j)][j] = 1;
  return m;
}

RookMatrix product(const RookMatrix& a, const RookMatrix& b) {
  const std::size_t n = a.size();
  RookMatrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Term-by-term sum of C(n,k)^2 k! in 128 bits with Pascal's triangle.
unsigned __int128 cardinality_oracle(int n) {
  std::vector<std::vector<unsigned __int128>> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    c[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  unsigned __int128 total = 0, fact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    total += c[n][k] * c[n][k] * fact;
  }
  return total;
}

}  // namespace

TEST(PartialPerm, ComposeWorkedExample) {
  const PartialPerm sigma = pp("2,-,1,-");
  const PartialPerm pi = pp("4,3,-,-");
  EXPECT_EQ(to_string(compose(pi, sigma)), "3,-,4,-");
  EXPECT_EQ(to_string(compose(sigma, pi)), "-,1,-,-");
  EXPECT_NE(sigma.domain_mask(), pi.range_mask());
}

TEST(PartialPerm, InverseWorkedExample) {
  const PartialPerm sigma = pp("-,1,-,4");
  EXPECT_EQ(to_string(inverse(sigma)), "2,-,-,4");
  EXPECT_EQ(to_matrix(inverse(sigma))[1][0], 1);
}

TEST(PartialPerm, PermTypeWorkedExample) {
  EXPECT_EQ(to_string(perm_type(pp("4,-,1,2"))), "3,1,2");
  EXPECT_EQ(perm_type(pp("-,-,-")).size(), 0);
}

TEST(PartialPerm, MobiusEmptyToIdentity) {
  EXPECT_EQ(mobius(PartialPerm(3), PartialPerm::identity(3)), -1);
  EXPECT_EQ(mobius(pp("2,-,-"), pp("2,3,1")), 1);
  EXPECT_THROW(mobius(pp("2,-,-"), pp("3,-,-")), std::domain_error);
}

TEST(PartialPerm, TextRoundTrip) {
  for (const auto& s : all_elements(4)) EXPECT_EQ(parse_partial_perm(to_string(s)), s);
  EXPECT_THROW(pp("1,1"), std::invalid_argument);
  EXPECT_THROW(pp("0,2"), std::invalid_argument);
  EXPECT_THROW(pp("3,x"), std::invalid_argument);
}

TEST(PartialPerm, ComposeMatchesRookMatrixProduct) {
  const auto elems = all_elements(3);
  for (const auto& a : elems)
    for (const auto& b : elems) ASSERT_EQ(to_matrix(compose(a, b)), product(to_matrix(a), to_matrix(b)));
}

TEST(PartialPerm, ComposeIsAssociative) {
  const auto elems = all_elements(3);
  for (const auto& a : elems)
    for (const auto& b : elems)
      for (const auto& c : elems) ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
}

TEST(PartialPerm, InverseIsUniqueSemigroupInverse) {
  const auto elems = all_elements(3);
  for (const auto& x : elems) {
    int found = 0;
    for (const auto& y : elems) {
      if (compose(compose(x, y), x) == x && compose(compose(y, x), y) == y) {
        ++found;
        EXPECT_EQ(y, inverse(x));
      }
    }
    EXPECT_EQ(found, 1) << to_string(x);
  }
}

TEST(PartialPerm, LeqMatchesIdempotentCharacterisation) {
  // s ≤ t iff s = t ∘ e for the idempotent e = s⁻¹s.
  const auto elems = all_elements(3);
  for (const auto& s : elems)
    for (const auto& t : elems) {
      const bool expected = compose(t, dom_idempotent(s)) == s;
      ASSERT_EQ(leq(s, t), expected) << to_string(s) << " vs " << to_string(t);
    }
}

TEST(PartialPerm, LeqIsPartialOrder) {
  const auto elems = all_elements(3);
  for (const auto& a : elems) {
    EXPECT_TRUE(leq(a, a));
    for (const auto& b : elems) {
      if (leq(a, b) && leq(b, a)) EXPECT_EQ(a, b);
      for (const auto& c : elems)
        if (leq(a, b) && leq(b, c)) EXPECT_TRUE(leq(a, c));
    }
  }
}

TEST(PartialPerm, MobiusInvertsZetaOnR2) {
  const auto elems = all_elements(2);
  ASSERT_EQ(elems.size(), 7u);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      int sum = 0;
      for (std::size_t m = 0; m < elems.size(); ++m) {
        if (leq(elems[i], elems[m]) && leq(elems[m], elems[j])) sum += mobius(elems[i], elems[m]);
      }
      EXPECT_EQ(sum, i == j ? 1 : 0);
    }
}

TEST(PartialPerm, PermTypeRecoversElement) {
  for (const auto& s : all_elements(4)) {
    const PartialPerm pr = p_map(4, s.range_mask());
    const PartialPerm pd = p_map(4, s.domain_mask());
    std::vector<std::uint8_t> padded(4, PartialPerm::kUndefined);
    const PartialPerm t = perm_type(s);
    for (int x = 0; x < t.size(); ++x) padded[x] = static_cast<std::uint8_t>(t(x));
    EXPECT_EQ(compose(compose(pr, PartialPerm::from_images(padded)), inverse(pd)), s);
    EXPECT_EQ(perm_type(s).rank(), s.rank());
  }
}

TEST(PartialPerm, IdempotentsAreRestrictionsOfIdentity) {
  int count = 0;
  for (const auto& s : all_elements(4)) {
    const bool idem = compose(s, s) == s;
    EXPECT_EQ(s.is_idempotent(), idem);
    count += idem;
  }
  EXPECT_EQ(count, 16);
}

TEST(Counting, CardinalityOracle) {
  const std::array<std::uint64_t, 8> expected = {1, 2, 7, 34, 209, 1546, 13327, 130922};
  for (int n = 0; n < 8; ++n) {
    EXPECT_EQ(cardinality(n), expected[n]);
    EXPECT_EQ(static_cast<unsigned __int128>(cardinality(n)), cardinality_oracle(n));
  }
  for (int n = 8; n <= 16; ++n) EXPECT_EQ(static_cast<unsigned __int128>(cardinality(n)), cardinality_oracle(n));
}

TEST(Counting, RecursionAgrees) {
  for (int n = 3; n <= 12; ++n) EXPECT_EQ(cardinality_recursive(n), cardinality(n)) << n;
  EXPECT_THROW(cardinality_recursive(2), std::domain_error);
  for (int n = 3; n <= 6; ++n) EXPECT_EQ(cardinality_recursive(n, 3), cardinality(n, 3));
}

TEST(Counting, WreathCardinality) {
  EXPECT_EQ(cardinality(1, 2), 3u);
  EXPECT_EQ(cardinality(2, 2), 17u);
  EXPECT_EQ(cardinality(2, 3), 1u + 12u + 18u);
  EXPECT_EQ(cardinality(3, *cyclic(2)), cardinality(3, 2));
  EXPECT_EQ(rank_class_size(3, 2, 2), 9u * 2u * 4u);
}

TEST(Counting, OverflowIsReported) {
  EXPECT_THROW(cardinality(40), std::overflow_error);
  EXPECT_THROW(binomial(80, 40), std::overflow_error);
}

TEST(Combinatorics, ColexAndLehmerRoundTrip) {
  for (int k = 0; k <= 5; ++k)
    for (std::uint64_t r = 0; r < binomial(6, k); ++r) EXPECT_EQ(colex_rank(colex_unrank(r, k)), r);
  for (std::uint64_t r = 0; r < 120; ++r) EXPECT_EQ(lehmer_rank(lehmer_unrank(r, 5)), r);
  EXPECT_EQ(lehmer_unrank(0, 3), (std::vector<std::uint8_t>{0, 1, 2}));
}

TEST(Combinatorics, TableauxCountsMatchHookFormula) {
  EXPECT_EQ(partitions(5).size(), 7u);
  EXPECT_EQ(standard_tableaux({3, 2}).size(), 5u);
  EXPECT_EQ(standard_tableaux({2, 2, 1}).size(), 5u);
  EXPECT_EQ(standard_tableaux({4, 2, 1}).size(), 35u);
  std::uint64_t sum = 0;
  for (const auto& p : partitions(6)) sum += standard_tableaux(p).size() * standard_tableaux(p).size();
  EXPECT_EQ(sum, 720u);
}

TEST(ElementIndex, RoundTripAndLayout) {
  for (int n = 0; n <= 5; ++n) {
    ElementIndex idx(n);
    ASSERT_EQ(idx.total(), cardinality(n));
    int last_rank = n;
    for (std::uint64_t i = 0; i < idx.total(); ++i) {
      const PartialPerm s = idx.shape_at(i);
      ASSERT_EQ(idx.index_of(s), i);
      ASSERT_EQ(idx.rank_at(i), s.rank());
      ASSERT_LE(s.rank(), last_rank);
      last_rank = s.rank();
    }
    if (n > 0) {
      EXPECT_EQ(idx.index_of(PartialPerm::identity(n)), 0u);
      EXPECT_EQ(idx.index_of(PartialPerm(n)), idx.total() - 1);
    }
  }
}

TEST(ElementIndex, RunsMatchSubgroupNumbering) {
  auto idx = rookfft::testing::make_index(4, 2);
  for (int k = 0; k <= 4; ++k) {
    for (std::uint64_t d = 0; d < binomial(4, k); ++d)
      for (std::uint64_t r = 0; r < binomial(4, k); ++r) {
        const Mask dom = colex_unrank(d, k), ran = colex_unrank(r, k);
        const std::uint64_t off = idx->run_offset(k, dom, ran);
        for (std::uint64_t id = 0; id < idx->subgroup_order(k); ++id) {
          const WreathElem w = idx->element_at(off + id);
          ASSERT_EQ(w.shape().domain_mask(), dom);
          ASSERT_EQ(w.shape().range_mask(), ran);
        }
      }
  }
}

TEST(ElementIndex, RespectsDenseCap) {
  EXPECT_THROW(ElementIndex(9), std::exception);
  EXPECT_NO_THROW(ElementIndex(9, nullptr, kMaxN));
}

TEST(WreathElem, ComposeMatchesMatrixProduct) {
  const GroupPtr z3 = cyclic(3);
  ElementIndex idx(2, z3);
  for (std::uint64_t i = 0; i < idx.total(); ++i)
    for (std::uint64_t j = 0; j < idx.total(); ++j) {
      const WreathElem a = idx.element_at(i), b = idx.element_at(j);
      const WreathElem c = wreath_compose(a, b);
      for (int row = 0; row < 2; ++row)
        for (int col = 0; col < 2; ++col) {
          std::optional<int> expected;
          for (int m = 0; m < 2; ++m) {
            const auto x = a.cell(row, m), y = b.cell(m, col);
            if (x && y) expected = z3->mul(*x, *y);
          }
          ASSERT_EQ(c.cell(row, col), expected);
        }
    }
}

TEST(WreathElem, InverseAndOrder) {
  const GroupPtr z2 = cyclic(2);
  ElementIndex idx(3, z2);
  for (std::uint64_t i = 0; i < idx.total(); ++i) {
    const WreathElem s = idx.element_at(i);
    const WreathElem si = wreath_inverse(s);
    EXPECT_EQ(wreath_compose(wreath_compose(s, si), s), s);
    EXPECT_EQ(idx.index_of(s), i);
    EXPECT_EQ(parse_wreath_elem(to_string(s), 3, z2), s);
    for (const auto& c : s.cells()) EXPECT_TRUE(wreath_leq(WreathElem(3, z2).with_cell(c.row, c.col, c.label), s));
  }
  EXPECT_EQ(to_string(WreathElem(3, z2)), "0");
}

TEST(WreathElem, TrivialGroupMatchesRookMonoid) {
  const GroupPtr one = std::make_shared<const GroupTable>(GroupTable::trivial());
  const auto elems = all_elements(3);
  for (const auto& a : elems)
    for (const auto& b : elems)
      ASSERT_EQ(wreath_compose(WreathElem::embed(a, one), WreathElem::embed(b, one)).shape(), compose(a, b));
}

TEST(GroupTable, RejectsNonGroups) {
  EXPECT_THROW(GroupTable({{0, 1}, {1, 1}}, "bad"), std::exception);
  EXPECT_THROW(GroupTable({{0, 1}, {0, 1}}, "bad"), std::exception);
  EXPECT_NO_THROW(GroupTable({{0, 1}, {1, 0}}, "z2"));
  EXPECT_EQ(GroupTable::cyclic(4).descriptor(), "Z4");
}
