#include "rookfft/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace rookfft {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n-k+i) is always divisible by i at this point.
    r = checked_mul(r, static_cast<std::uint64_t>(n - k + i)) / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::uint64_t factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, static_cast<std::uint64_t>(i));
  return r;
}

std::uint64_t colex_rank(Mask subset) {
  std::uint64_t r = 0;
  int i = 1;
  while (subset != 0) {
    const int a = __builtin_ctz(subset);
    r += binomial(a, i);
    subset &= subset - 1;
    ++i;
  }
  return r;
}

Mask colex_unrank(std::uint64_t rank, int k) {
  Mask m = 0;
  for (int i = k; i >= 1; --i) {
    int a = i - 1;
    while (binomial(a + 1, i) <= rank) ++a;
    rank -= binomial(a, i);
    m |= Mask{1} << a;
  }
  return m;
}

std::uint64_t lehmer_rank(std::span<const std::uint8_t> perm) {
  const int k = static_cast<int>(perm.size());
  std::uint64_t r = 0;
  Mask used = 0;
  for (int i = 0; i < k; ++i) {
    const int v = perm[i];
    const int smaller_unused = v - popcount(used & ((Mask{1} << v) - 1));
    r = r * static_cast<std::uint64_t>(k - i) + static_cast<std::uint64_t>(smaller_unused);
    used |= Mask{1} << v;
  }
  return r;
}

std::vector<std::uint8_t> lehmer_unrank(std::uint64_t rank, int k) {
  std::vector<std::uint8_t> digits(k);
  for (int i = k - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(k - i);
    digits[i] = static_cast<std::uint8_t>(rank % base);
    rank /= base;
  }
  std::vector<std::uint8_t> perm(k);
  Mask used = 0;
  for (int i = 0; i < k; ++i) {
    int c = digits[i];
    int v = 0;
    for (;; ++v) {
      if (used & (Mask{1} << v)) continue;
      if (c == 0) break;
      --c;
    }
    perm[i] = static_cast<std::uint8_t>(v);
    used |= Mask{1} << v;
  }
  return perm;
}

namespace {

void partitions_rec(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

void tableaux_rec(const Partition& shape, std::vector<int>& filled, RowWord& word, int total,
                  std::vector<RowWord>& out) {
  const int placed = static_cast<int>(word.size());
  if (placed == total) {
    out.push_back(word);
    return;
  }
  for (int row = 0; row < static_cast<int>(shape.size()); ++row) {
    if (filled[row] >= shape[row]) continue;
    if (row > 0 && filled[row] >= filled[row - 1]) continue;
    ++filled[row];
    word.push_back(static_cast<std::uint8_t>(row));
    tableaux_rec(shape, filled, word, total, out);
    word.pop_back();
    --filled[row];
  }
}

}  // namespace

std::vector<Partition> partitions(int k) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(k, k, cur, out);
  return out;
}

std::vector<RowWord> standard_tableaux(const Partition& shape) {
  int total = 0;
  for (int p : shape) total += p;
  std::vector<RowWord> out;
  std::vector<int> filled(shape.size(), 0);
  RowWord word;
  tableaux_rec(shape, filled, word, total, out);
  return out;
}

std::string partition_label(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

}  // namespace rookfft
