#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rookfft/coeff_vector.hpp"

namespace rookfft {

/// Instrumentation for the fast transforms.
///
/// An operation is one multiply-add of complex numbers; for these transforms
/// every operation is a single addition or subtraction into an accumulator.
/// Storage is counted in scalars held by inputs, outputs and workspaces.
struct OpCounter {
  std::uint64_t operations = 0;
  std::uint64_t peak_stored = 0;
  std::uint64_t current_stored = 0;
  /// step_operations[j] counts the work of step j, i.e. of the rank n-j elements.
  std::vector<std::uint64_t> step_operations;

  void add_ops(int step, std::uint64_t count) {
    if (static_cast<int>(step_operations.size()) <= step) step_operations.resize(step + 1, 0);
    step_operations[step] += count;
    operations += count;
  }
  void allocate(std::uint64_t count) {
    current_stored += count;
    peak_stored = std::max(peak_stored, current_stored);
  }
  void release(std::uint64_t count) { current_stored -= std::min(count, current_stored); }
};

namespace detail {

/// Top-down partial zeta recurrence over the ranks of G≀R_n.
///
/// For a rank-k element s with co-rank c = n-k, slot m ∈ [0, c] holds the sum
/// of in(t) over t ≥ s avoiding the first m unused columns and the first m
/// unused rows of s. Slot c is in(s) and slot 0 is the result; the middle
/// slots live in per-rank workspaces which are dropped once no lower rank
/// can read them (two ranks below).
///
/// With `Signed`, every extension term picks up the sign (-1)^(rk t - rk s),
/// which turns the recurrence into Möbius inversion.
template <typename Scalar, bool Signed>
void partial_zeta_kernel(const ElementIndex& idx, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& in,
                         Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& out, OpCounter* counter) {
  const int n = idx.n();
  const int g = idx.group_order();
  out.resize(in.size());
  OpCounter scratch;
  OpCounter& ctr = counter ? *counter : scratch;
  ctr.step_operations.assign(n + 1, 0);
  ctr.allocate(static_cast<std::uint64_t>(in.size()) * 2);

  if (n <= 1) {
    // Direct formulas: the only non-maximal element is the zero map.
    for (Eigen::Index i = 0; i < in.size(); ++i) out[i] = in[i];
    if (n == 1) {
      const std::uint64_t zero = idx.rank_offset(0);
      Scalar acc = in[static_cast<Eigen::Index>(zero)];
      for (std::uint64_t i = 0; i < idx.rank_count(1); ++i) {
        if constexpr (Signed) {
          acc -= in[static_cast<Eigen::Index>(idx.rank_offset(1) + i)];
        } else {
          acc += in[static_cast<Eigen::Index>(idx.rank_offset(1) + i)];
        }
      }
      out[static_cast<Eigen::Index>(zero)] = acc;
      ctr.add_ops(1, idx.rank_count(1));
    }
    ctr.release(static_cast<std::uint64_t>(in.size()) * 2);
    return;
  }

  std::vector<std::vector<Scalar>> ws(n + 1);
  auto slot = [&](int rank, std::uint64_t global, int m) -> Scalar {
    const int c = n - rank;
    if (m == c) return in[static_cast<Eigen::Index>(global)];
    if (m == 0) return out[static_cast<Eigen::Index>(global)];
    const std::uint64_t local = global - idx.rank_offset(rank);
    return ws[rank][local * static_cast<std::uint64_t>(c - 1) + static_cast<std::uint64_t>(m - 1)];
  };

  std::array<Label, kMaxN> labels{};
  std::array<Label, kMaxN> ext_labels{};
  const std::span<const Label> ext_span{ext_labels.data(), static_cast<std::size_t>(n)};

  for (int k = n; k >= 0; --k) {
    const int c = n - k;
    const int step = c;
    if (k + 3 <= n && !ws[k + 3].empty()) {
      ctr.release(ws[k + 3].size());
      std::vector<Scalar>().swap(ws[k + 3]);
    }
    const std::uint64_t count = idx.rank_count(k);
    const std::uint64_t offset = idx.rank_offset(k);
    if (c >= 2) {
      ws[k].assign(count * static_cast<std::uint64_t>(c - 1), Scalar(0));
      ctr.allocate(ws[k].size());
    }
    if (c == 0) {
      for (std::uint64_t e = 0; e < count; ++e) out[static_cast<Eigen::Index>(offset + e)] = in[static_cast<Eigen::Index>(offset + e)];
      continue;
    }
    std::uint64_t step_ops = 0;
    for (std::uint64_t e = 0; e < count; ++e) {
      const std::uint64_t global = offset + e;
      const PartialPerm s = idx.shape_at(global, {labels.data(), static_cast<std::size_t>(n)});
      std::array<int, kMaxN> d{}, r{};
      {
        int a = 0, b = 0;
        for (int x = 0; x < n; ++x) {
          if (!s.defined(x)) d[a++] = x;
          if (!((s.range_mask() >> x) & 1u)) r[b++] = x;
        }
      }
      // Index of s with extra arrows; labels of s are copied once per lookup family.
      auto single = [&](int col, int row, int lab) {
        ext_labels = labels;
        ext_labels[col] = static_cast<Label>(lab);
        return idx.index_of(s.extended(col, row), ext_span);
      };
      auto twice = [&](int col1, int row1, int lab1, int col2, int row2, int lab2) {
        ext_labels = labels;
        ext_labels[col1] = static_cast<Label>(lab1);
        ext_labels[col2] = static_cast<Label>(lab2);
        return idx.index_of(s.extended(col1, row1).extended(col2, row2), ext_span);
      };

#ifndef NDEBUG
      // A stored slot m is keyed by length only: the first m unused columns
      // and rows of t must be those of s.
      auto check_prefix = [&](std::uint64_t t, int m) {
        const PartialPerm st = idx.shape_at(t);
        int a = 0, b = 0;
        for (int x = 0; x < n && (a < m || b < m); ++x) {
          if (!st.defined(x) && a < m) assert(d[a++] == x);
          if (!((st.range_mask() >> x) & 1u) && b < m) assert(r[b++] == x);
        }
      };
#endif
      Scalar above = in[static_cast<Eigen::Index>(global)];  // slot m+1, starting at slot c
      for (int m = c - 1; m >= 0; --m) {
        Scalar value = above;
        auto add_single = [&](std::uint64_t t) {
#ifndef NDEBUG
          check_prefix(t, m);
#endif
          if constexpr (Signed) {
            value -= slot(k + 1, t, m);
          } else {
            value += slot(k + 1, t, m);
          }
          ++step_ops;
        };
        // Arrows into row r[m], from columns d[m..c-1].
        for (int i = m; i < c; ++i)
          for (int lab = 0; lab < g; ++lab) add_single(single(d[i], r[m], lab));
        // Arrows out of column d[m], into rows r[m+1..c-1].
        for (int j = m + 1; j < c; ++j)
          for (int lab = 0; lab < g; ++lab) add_single(single(d[m], r[j], lab));
        // Elements counted by both families.
        for (int i = m + 1; i < c; ++i)
          for (int j = m + 1; j < c; ++j)
            for (int l1 = 0; l1 < g; ++l1)
              for (int l2 = 0; l2 < g; ++l2) {
                const std::uint64_t t = twice(d[i], r[m], l1, d[m], r[j], l2);
#ifndef NDEBUG
                check_prefix(t, m);
#endif
                value -= slot(k + 2, t, m);
                ++step_ops;
              }
        if (m == 0) {
          out[static_cast<Eigen::Index>(global)] = value;
        } else {
          ws[k][e * static_cast<std::uint64_t>(c - 1) + static_cast<std::uint64_t>(m - 1)] = value;
        }
        above = value;
      }
    }
    ctr.add_ops(step, step_ops);
  }
  for (auto& w : ws) {
    ctr.release(w.size());
    std::vector<Scalar>().swap(w);
  }
  ctr.release(static_cast<std::uint64_t>(in.size()) * 2);
}

/// Visits every t ≥ s once, with rk(t) - rk(s) as the second argument.
template <typename Visit>
void for_each_above(const ElementIndex& idx, std::uint64_t global, Visit&& visit) {
  const int n = idx.n();
  std::array<Label, kMaxN> labels{};
  const PartialPerm s = idx.shape_at(global, {labels.data(), static_cast<std::size_t>(n)});
  std::array<int, kMaxN> d{};
  int c = 0;
  for (int x = 0; x < n; ++x)
    if (!s.defined(x)) d[c++] = x;
  const int g = idx.group_order();
  auto rec = [&](auto&& self, int pos, const PartialPerm& t, int added) -> void {
    if (pos == c) {
      visit(idx.index_of(t, {labels.data(), static_cast<std::size_t>(n)}), added);
      return;
    }
    self(self, pos + 1, t, added);
    const int col = d[pos];
    for (int row = 0; row < n; ++row) {
      if ((t.range_mask() >> row) & 1u) continue;
      const PartialPerm next = t.extended(col, row);
      for (int lab = 0; lab < g; ++lab) {
        labels[col] = static_cast<Label>(lab);
        self(self, pos + 1, next, added + 1);
      }
      labels[col] = static_cast<Label>(idx.group()->identity());
    }
  };
  rec(rec, 0, s, 0);
}

}  // namespace detail

/// Groupoid-basis coefficients g(s) = Σ_{t ≥ s} f(t), by enumerating every
/// upper set.
template <typename Scalar>
CoeffVector<Scalar> zeta_naive(const CoeffVector<Scalar>& f) {
  if (f.basis() != Basis::semigroup) throw std::invalid_argument("zeta_naive expects semigroup-basis input");
  CoeffVector<Scalar> g(f.index_ptr(), Basis::groupoid);
  const ElementIndex& idx = f.index();
  for (std::uint64_t s = 0; s < idx.total(); ++s) {
    Scalar acc(0);
    detail::for_each_above(idx, s, [&](std::uint64_t t, int) { acc += f[t]; });
    g[s] = acc;
  }
  return g;
}

/// f(s) = Σ_{t ≥ s} (-1)^(rk t - rk s) g(t), by direct summation.
template <typename Scalar>
CoeffVector<Scalar> mobius_naive(const CoeffVector<Scalar>& g) {
  if (g.basis() != Basis::groupoid) throw std::invalid_argument("mobius_naive expects groupoid-basis input");
  CoeffVector<Scalar> f(g.index_ptr(), Basis::semigroup);
  const ElementIndex& idx = g.index();
  for (std::uint64_t s = 0; s < idx.total(); ++s) {
    Scalar acc(0);
    detail::for_each_above(idx, s, [&](std::uint64_t t, int added) {
      if (added & 1) {
        acc -= g[t];
      } else {
        acc += g[t];
      }
    });
    f[s] = acc;
  }
  return f;
}

/// Fast zeta transform on R_n (the index must not carry a group).
template <typename Scalar>
CoeffVector<Scalar> zeta_fast_rook(const CoeffVector<Scalar>& f, OpCounter* counter = nullptr) {
  if (f.basis() != Basis::semigroup) throw std::invalid_argument("zeta_fast_rook expects semigroup-basis input");
  if (f.index().has_group()) throw std::invalid_argument("zeta_fast_rook: index carries a group; use zeta_fast_wreath");
  CoeffVector<Scalar> g(f.index_ptr(), Basis::groupoid);
  detail::partial_zeta_kernel<Scalar, false>(f.index(), f.values(), g.values(), counter);
  return g;
}

/// Fast zeta transform on G≀R_n; `group` must be the index's group.
template <typename Scalar>
CoeffVector<Scalar> zeta_fast_wreath(const CoeffVector<Scalar>& f, const GroupTable& group,
                                     OpCounter* counter = nullptr) {
  if (f.basis() != Basis::semigroup) throw std::invalid_argument("zeta_fast_wreath expects semigroup-basis input");
  if (!(group == *f.index().group())) throw DimensionError("zeta_fast_wreath: group differs from the index group");
  CoeffVector<Scalar> g(f.index_ptr(), Basis::groupoid);
  detail::partial_zeta_kernel<Scalar, false>(f.index(), f.values(), g.values(), counter);
  return g;
}

/// Dispatches on whether the index carries a group.
template <typename Scalar>
CoeffVector<Scalar> zeta_fast(const CoeffVector<Scalar>& f, OpCounter* counter = nullptr) {
  if (f.index().has_group()) return zeta_fast_wreath(f, *f.index().group(), counter);
  return zeta_fast_rook(f, counter);
}

/// Inverse of the zeta transform, via the signed fast recurrence (or the
/// direct signed sum when `naive` is set).
template <typename Scalar>
CoeffVector<Scalar> mobius_transform(const CoeffVector<Scalar>& g, OpCounter* counter = nullptr, bool naive = false) {
  if (g.basis() != Basis::groupoid) throw std::invalid_argument("mobius_transform expects groupoid-basis input");
  if (naive) return mobius_naive(g);
  CoeffVector<Scalar> f(g.index_ptr(), Basis::semigroup);
  detail::partial_zeta_kernel<Scalar, true>(g.index(), g.values(), f.values(), counter);
  return f;
}

}  // namespace rookfft
