#pragma once

#include <complex>
#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rookfft/coeff_vector.hpp"
#include "rookfft/group_table.hpp"
#include "rookfft/irreps.hpp"

namespace rookfft {

/// Malformed input, with the 1-based line number when it came from a file.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A group named on the command line or in a dataset header.
struct GroupChoice {
  /// "none" for the plain rook monoid.
  std::string descriptor;
  GroupPtr group;  // null for "none"
  std::shared_ptr<const IrrepSet> irreps;
};

/// Accepts "none", "Z<m>", "cyclic:<m>" and "table:<json path>". A table
/// file may name an irrep file for G under "irreps", relative to itself.
GroupChoice resolve_group(std::string_view descriptor);

/// "1.5", "-2", "0.5+2i", "1e-3-4i", "3i".
std::complex<double> parse_complex(std::string_view text);
std::string format_complex(std::complex<double> z);

/// Element text for the index: "2,-,5" for R_n, "1,2:0;3,1:1" or "0" for G≀R_n.
std::string element_text(const ElementIndex& index, std::uint64_t i);
std::uint64_t parse_element(const ElementIndex& index, std::string_view text);

struct Dataset {
  int n = 0;
  GroupChoice group;
  IndexPtr index;
  ComplexVector values;
};

/// Header lines "n=<int>" and "group=<descriptor>", then "<element> , <value>"
/// records. Blank lines and lines starting with '#' are skipped; duplicates
/// are summed; absent elements are zero. A file without records (or an
/// empty file, given `n_hint`/`group_hint`) yields the zero vector.
Dataset parse_dataset(const std::filesystem::path& path, std::optional<int> n_hint = std::nullopt,
                      std::optional<std::string> group_hint = std::nullopt, int dense_cap = 8);
Dataset parse_dataset_text(std::string_view text, std::optional<int> n_hint = std::nullopt,
                           std::optional<std::string> group_hint = std::nullopt, int dense_cap = 8);

/// Writes the nonzero coefficients in index order.
std::string format_dataset(const ComplexVector& v, const std::string& group_descriptor);

}  // namespace rookfft
