#include "rookfft/partial_perm.hpp"

#include <charconv>

namespace rookfft {

PartialPerm::PartialPerm(int n) : n_(n) {
  if (n < 0 || n > kMaxN) throw std::invalid_argument("ground-set size out of range: " + std::to_string(n));
  image_.fill(kUndefined);
}

PartialPerm PartialPerm::identity(int n) {
  return partial_identity(n, n == 32 ? ~Mask{0} : (Mask{1} << n) - 1);
}

PartialPerm PartialPerm::partial_identity(int n, Mask mask) {
  PartialPerm p(n);
  if (mask >> n) throw std::invalid_argument("subset exceeds ground set");
  for (int x = 0; x < n; ++x) {
    if ((mask >> x) & 1u) p.image_[x] = static_cast<std::uint8_t>(x);
  }
  p.dom_ = p.ran_ = mask;
  return p;
}

PartialPerm PartialPerm::from_images(std::span<const std::uint8_t> images) {
  PartialPerm p(static_cast<int>(images.size()));
  for (int x = 0; x < p.n_; ++x) {
    const std::uint8_t y = images[x];
    if (y == kUndefined) continue;
    if (y >= p.n_) throw std::invalid_argument("image out of range");
    if ((p.ran_ >> y) & 1u) throw std::invalid_argument("partial map is not injective");
    p.image_[x] = y;
    p.dom_ |= Mask{1} << x;
    p.ran_ |= Mask{1} << y;
  }
  return p;
}

PartialPerm PartialPerm::from_one_based(std::span<const int> images) {
  std::vector<std::uint8_t> im(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] < 0 || images[i] > static_cast<int>(images.size())) throw std::invalid_argument("image out of range");
    im[i] = images[i] == 0 ? kUndefined : static_cast<std::uint8_t>(images[i] - 1);
  }
  return from_images(im);
}

PartialPerm PartialPerm::extended(int x, int y) const {
  if (defined(x) || ((ran_ >> y) & 1u)) throw std::invalid_argument("extension collides with existing arrow");
  PartialPerm p = *this;
  p.image_[x] = static_cast<std::uint8_t>(y);
  p.dom_ |= Mask{1} << x;
  p.ran_ |= Mask{1} << y;
  return p;
}

PartialPerm PartialPerm::restricted_away(int x) const {
  if (!defined(x)) return *this;
  PartialPerm p = *this;
  p.ran_ &= ~(Mask{1} << p.image_[x]);
  p.dom_ &= ~(Mask{1} << x);
  p.image_[x] = kUndefined;
  return p;
}

bool PartialPerm::is_partial_identity() const {
  for (int x = 0; x < n_; ++x) {
    if (defined(x) && image_[x] != x) return false;
  }
  return true;
}

PartialPerm compose(const PartialPerm& a, const PartialPerm& b) {
  if (a.size() != b.size()) throw DimensionError("compose: ground sets differ");
  std::array<std::uint8_t, kMaxN> im;
  im.fill(PartialPerm::kUndefined);
  for (int x = 0; x < b.size(); ++x) {
    if (b.defined(x) && a.defined(b(x))) im[x] = static_cast<std::uint8_t>(a(b(x)));
  }
  return PartialPerm::from_images({im.data(), static_cast<std::size_t>(a.size())});
}

PartialPerm inverse(const PartialPerm& a) {
  std::array<std::uint8_t, kMaxN> im;
  im.fill(PartialPerm::kUndefined);
  for (int x = 0; x < a.size(); ++x) {
    if (a.defined(x)) im[a(x)] = static_cast<std::uint8_t>(x);
  }
  return PartialPerm::from_images({im.data(), static_cast<std::size_t>(a.size())});
}

bool leq(const PartialPerm& s, const PartialPerm& t) {
  if (s.size() != t.size()) throw DimensionError("leq: ground sets differ");
  if ((s.domain_mask() & ~t.domain_mask()) != 0) return false;
  for (int x = 0; x < s.size(); ++x) {
    if (s.defined(x) && s(x) != t(x)) return false;
  }
  return true;
}

int mobius(const PartialPerm& s, const PartialPerm& t) {
  if (!leq(s, t)) throw std::domain_error("mobius: arguments are not comparable (s is not below t)");
  return ((t.rank() - s.rank()) & 1) ? -1 : 1;
}

PartialPerm perm_type(const PartialPerm& s) {
  std::vector<std::uint8_t> im;
  im.reserve(s.rank());
  const Mask ran = s.range_mask();
  for (int x = 0; x < s.size(); ++x) {
    if (!s.defined(x)) continue;
    im.push_back(static_cast<std::uint8_t>(popcount(ran & ((Mask{1} << s(x)) - 1))));
  }
  return PartialPerm::from_images(im);
}

PartialPerm p_map(int n, Mask subset) {
  std::vector<std::uint8_t> im(n, PartialPerm::kUndefined);
  int i = 0;
  for (int x = 0; x < n; ++x) {
    if ((subset >> x) & 1u) im[i++] = static_cast<std::uint8_t>(x);
  }
  if (subset >> n) throw std::invalid_argument("subset exceeds ground set");
  return PartialPerm::from_images(im);
}

std::string to_string(const PartialPerm& s) {
  std::string out;
  for (int x = 0; x < s.size(); ++x) {
    if (x) out += ',';
    out += s.defined(x) ? std::to_string(s(x) + 1) : std::string("-");
  }
  return out;
}

namespace {

std::string_view trim(std::string_view v) {
  while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
  while (!v.empty() && (v.back() == ' ' || v.back() == '\t' || v.back() == '\r')) v.remove_suffix(1);
  return v;
}

}  // namespace

PartialPerm parse_partial_perm(std::string_view text) {
  std::vector<int> images;
  text = trim(text);
  if (text.empty()) return PartialPerm(0);
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view tok = trim(text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start));
    if (tok == "-") {
      images.push_back(0);
    } else {
      int v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 1) {
        throw std::invalid_argument("malformed partial permutation entry '" + std::string(tok) + "'");
      }
      images.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(images.size()) > kMaxN) throw std::invalid_argument("partial permutation too long");
  return PartialPerm::from_one_based(images);
}

}  // namespace rookfft
