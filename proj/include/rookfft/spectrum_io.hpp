#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "rookfft/semigroup_fft.hpp"

namespace rookfft {

inline constexpr int kSpectrumLayoutVersion = 1;

/// Manifest: {"format": "rookfft.spectrum", "layout_version", "n", "group",
/// "size", "blocks": [{"k", "irrep", "dim", "r", "offset", "length"}, ...],
/// "data": [[re, im], ...]} or, with a binary blob, "data_file" naming a file
/// of `size` little-endian (re, im) double pairs in the flat layout.
nlohmann::json spectrum_to_json(const BlockSpectrum& s, const FourierPlan& plan,
                                const std::optional<std::string>& data_file = std::nullopt);

/// Writes the manifest to `json_path`; with `binary_path` the entries go to
/// that file and the manifest names it relative to the manifest directory.
void write_spectrum(const BlockSpectrum& s, const FourierPlan& plan, const std::filesystem::path& json_path,
                    const std::optional<std::filesystem::path>& binary_path = std::nullopt);

/// Checks n, group and every block shape against the plan.
BlockSpectrum read_spectrum(const std::filesystem::path& json_path, const FourierPlan& plan);
BlockSpectrum spectrum_from_json(const nlohmann::json& j, const FourierPlan& plan,
                                 const std::filesystem::path& base_dir = ".");

nlohmann::json complex_json(std::complex<double> z);

}  // namespace rookfft
