#include "rookfft/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rookfft/irrep_cache.hpp"

namespace rookfft {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Parses one real at the front of s; accepts a leading '+'.
bool take_real(std::string_view& s, double& out) {
  std::string_view t = s;
  bool neg = false;
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
    neg = t[0] == '-';
    t.remove_prefix(1);
  }
  if (t.empty() || t[0] == '+' || t[0] == '-') return false;
  double v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || !std::isfinite(v)) return false;
  out = neg ? -v : v;
  s = t.substr(static_cast<std::size_t>(ptr - t.data()));
  return true;
}

int parse_int(std::string_view s, const char* what) {
  s = trim(s);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

}  // namespace

GroupChoice resolve_group(std::string_view descriptor) {
  descriptor = trim(descriptor);
  GroupChoice c;
  if (descriptor.empty() || descriptor == "none" || descriptor == "trivial") {
    c.descriptor = "none";
    return c;
  }
  int m = 0;
  if (descriptor.starts_with("cyclic:")) {
    m = parse_int(descriptor.substr(7), "cyclic order");
  } else if (descriptor.size() > 1 && (descriptor[0] == 'Z' || descriptor[0] == 'z') &&
             descriptor.find_first_not_of("0123456789", 1) == std::string_view::npos) {
    m = parse_int(descriptor.substr(1), "cyclic order");
  }
  if (m != 0 || descriptor.starts_with("cyclic:")) {
    if (m < 1) throw ParseError("cyclic group order must be positive");
    if (m == 1) {
      c.descriptor = "none";
      return c;
    }
    c.descriptor = "Z" + std::to_string(m);
    c.group = std::make_shared<const GroupTable>(GroupTable::cyclic(m));
    c.irreps = std::make_shared<const IrrepSet>(cyclic_irreps(*c.group));
    return c;
  }
  if (descriptor.starts_with("table:")) {
    const std::filesystem::path path{std::string(descriptor.substr(6))};
    c.descriptor = std::string(descriptor);
    c.group = std::make_shared<const GroupTable>(GroupTable::from_json_file(path));
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    if (j.contains("irreps")) {
      auto irreps_path = std::filesystem::path(j.at("irreps").get<std::string>());
      if (irreps_path.is_relative()) irreps_path = path.parent_path() / irreps_path;
      const WreathGroup g1(1, c.group);
      IrrepSet loaded = load_irreps(irreps_path, irrep_cache_key(g1.descriptor(), c.group->fingerprint()), 1);
      const auto report = check_irreps(loaded, g1, c.group->order() <= 720);
      if (!report.passed()) throw std::runtime_error("irreps supplied for " + c.group->descriptor() + " fail validation");
      c.irreps = std::make_shared<const IrrepSet>(std::move(loaded));
    } else {
      try {
        c.irreps = std::make_shared<const IrrepSet>(cyclic_irreps(*c.group));
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument("group table " + path.string() + " names no irreps file");
      }
    }
    return c;
  }
  throw ParseError("unknown group descriptor '" + std::string(descriptor) + "'");
}

std::complex<double> parse_complex(std::string_view text) {
  std::string_view s = trim(text);
  const std::string orig(s);
  double a = 0;
  if (!take_real(s, a)) throw ParseError("bad number '" + orig + "'");
  if (s.empty()) return {a, 0.0};
  if (s == "i") return {0.0, a};
  double b = 0;
  if ((s[0] != '+' && s[0] != '-') || !take_real(s, b) || s != "i") throw ParseError("bad number '" + orig + "'");
  return {a, b};
}

std::string format_complex(std::complex<double> z) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, z.real());
  std::string out(buf, res.ptr);
  if (z.imag() != 0.0) {
    res = std::to_chars(buf, buf + sizeof buf, z.imag());
    std::string im(buf, res.ptr);
    if (im[0] != '-') out += "+";
    out += im + "i";
  }
  return out;
}

std::string element_text(const ElementIndex& index, std::uint64_t i) {
  if (!index.has_group()) return to_string(index.shape_at(i));
  return to_string(index.element_at(i));
}

std::uint64_t parse_element(const ElementIndex& index, std::string_view text) {
  text = trim(text);
  try {
    if (!index.has_group()) {
      const PartialPerm s = parse_partial_perm(text);
      if (s.size() != index.n())
        throw ParseError("element '" + std::string(text) + "' has " + std::to_string(s.size()) + " points, expected " +
                         std::to_string(index.n()));
      return index.index_of(s);
    }
    return index.index_of(parse_wreath_elem(text, index.n(), index.group()));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

Dataset parse_dataset_text(std::string_view text, std::optional<int> n_hint, std::optional<std::string> group_hint,
                           int dense_cap) {
  std::optional<int> n;
  std::optional<std::string> group;
  struct {
    int n = 0;
    GroupChoice group;
    IndexPtr index;
    std::optional<ComplexVector> values;
  } ds;
  int line_no = 0;
  std::size_t pos = 0;

  const auto ensure_index = [&](int line) {
    if (ds.index) return;
    if (!n) n = n_hint;
    if (!group) group = group_hint;
    if (!n) throw ParseError("missing 'n=' header", line);
    if (n_hint && *n_hint != *n) throw ParseError("dataset declares n=" + std::to_string(*n) + " but n=" + std::to_string(*n_hint) + " was requested", line);
    ds.n = *n;
    try {
      ds.group = resolve_group(group.value_or("none"));
    } catch (const std::exception& e) {
      throw ParseError(e.what(), line);
    }
    if (group_hint && resolve_group(*group_hint).descriptor != ds.group.descriptor)
      throw ParseError("dataset group '" + ds.group.descriptor + "' does not match '" + *group_hint + "'", line);
    try {
      ds.index = std::make_shared<const ElementIndex>(ds.n, ds.group.group, dense_cap);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), line);
    }
    ds.values.emplace(ds.index, Basis::semigroup);
  };

  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (!ds.index && line.starts_with("n=")) {
      try {
        n = parse_int(line.substr(2), "n");
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
      }
      continue;
    }
    if (!ds.index && line.starts_with("group=")) {
      group = std::string(trim(line.substr(6)));
      continue;
    }
    ensure_index(line_no);
    const auto comma = line.rfind(',');
    if (comma == std::string_view::npos) throw ParseError("expected '<element> , <value>'", line_no);
    try {
      const std::uint64_t i = parse_element(*ds.index, line.substr(0, comma));
      (*ds.values)[i] += parse_complex(line.substr(comma + 1));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  ensure_index(line_no);
  return Dataset{ds.n, ds.group, ds.index, std::move(*ds.values)};
}

Dataset parse_dataset(const std::filesystem::path& path, std::optional<int> n_hint,
                      std::optional<std::string> group_hint, int dense_cap) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open dataset " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_dataset_text(ss.str(), n_hint, std::move(group_hint), dense_cap);
}

std::string format_dataset(const ComplexVector& v, const std::string& group_descriptor) {
  std::string out = "n=" + std::to_string(v.index().n()) + "\ngroup=" + group_descriptor + "\n";
  for (std::uint64_t i = 0; i < v.index().total(); ++i) {
    if (v[i] == std::complex<double>{}) continue;
    out += element_text(v.index(), i) + " , " + format_complex(v[i]) + "\n";
  }
  return out;
}

}  // namespace rookfft
