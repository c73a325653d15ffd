#include "rookfft/spectrum_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include "rookfft/dataset.hpp"

namespace rookfft {

nlohmann::json complex_json(std::complex<double> z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json spectrum_to_json(const BlockSpectrum& s, const FourierPlan& plan,
                                const std::optional<std::string>& data_file) {
  const Eigen::VectorXcd flat = s.flatten(plan);
  nlohmann::json j;
  j["format"] = "rookfft.spectrum";
  j["layout_version"] = kSpectrumLayoutVersion;
  j["n"] = plan.n();
  j["group"] = plan.group_descriptor();
  j["size"] = flat.size();
  auto blocks = nlohmann::json::array();
  std::uint64_t offset = 0;
  for (int k = 0; k <= plan.n(); ++k) {
    for (std::size_t rho = 0; rho < plan.irreps(k).size(); ++rho) {
      const auto len = static_cast<std::uint64_t>(s.blocks[k][rho].size());
      blocks.push_back({{"k", k},
                        {"irrep", plan.irreps(k).irreps()[rho].label},
                        {"dim", plan.irreps(k).dim(rho)},
                        {"r", plan.dclass(k).r()},
                        {"offset", offset},
                        {"length", len}});
      offset += len;
    }
  }
  j["blocks"] = std::move(blocks);
  if (data_file) {
    j["data_file"] = *data_file;
  } else {
    auto data = nlohmann::json::array();
    for (Eigen::Index i = 0; i < flat.size(); ++i) data.push_back(complex_json(flat[i]));
    j["data"] = std::move(data);
  }
  return j;
}

void write_spectrum(const BlockSpectrum& s, const FourierPlan& plan, const std::filesystem::path& json_path,
                    const std::optional<std::filesystem::path>& binary_path) {
  std::optional<std::string> rel;
  if (binary_path) {
    static_assert(std::endian::native == std::endian::little, "binary spectra are little-endian");
    const Eigen::VectorXcd flat = s.flatten(plan);
    std::ofstream bin(*binary_path, std::ios::binary | std::ios::trunc);
    if (!bin) throw std::runtime_error("cannot write " + binary_path->string());
    for (Eigen::Index i = 0; i < flat.size(); ++i) {
      const double pair[2] = {flat[i].real(), flat[i].imag()};
      bin.write(reinterpret_cast<const char*>(pair), sizeof pair);
    }
    const auto dir = json_path.parent_path().empty() ? std::filesystem::path(".") : json_path.parent_path();
    rel = std::filesystem::relative(std::filesystem::absolute(*binary_path), std::filesystem::absolute(dir)).generic_string();
  }
  std::ofstream out(json_path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + json_path.string());
  out << spectrum_to_json(s, plan, rel).dump(1) << "\n";
}

BlockSpectrum spectrum_from_json(const nlohmann::json& j, const FourierPlan& plan,
                                 const std::filesystem::path& base_dir) {
  if (j.value("format", "") != "rookfft.spectrum") throw ParseError("not a spectrum manifest");
  if (j.at("layout_version").get<int>() != kSpectrumLayoutVersion) throw ParseError("unsupported spectrum layout version");
  if (j.at("n").get<int>() != plan.n()) throw DimensionError("spectrum is for n=" + std::to_string(j.at("n").get<int>()));
  if (j.at("group").get<std::string>() != plan.group_descriptor())
    throw DimensionError("spectrum is for group " + j.at("group").get<std::string>());

  const BlockSpectrum shape = BlockSpectrum::zeros(plan);
  const auto& blocks = j.at("blocks");
  std::size_t bi = 0;
  for (int k = 0; k <= plan.n(); ++k)
    for (std::size_t rho = 0; rho < plan.irreps(k).size(); ++rho, ++bi) {
      if (bi >= blocks.size()) throw DimensionError("spectrum manifest lists too few blocks");
      const auto& b = blocks[bi];
      if (b.at("k").get<int>() != k || b.at("irrep").get<std::string>() != plan.irreps(k).irreps()[rho].label ||
          b.at("dim").get<int>() != plan.irreps(k).dim(rho) || b.at("r").get<std::size_t>() != plan.dclass(k).r())
        throw DimensionError("spectrum block " + std::to_string(bi) + " does not match the semigroup");
    }
  if (bi != blocks.size()) throw DimensionError("spectrum manifest lists too many blocks");

  const auto size = static_cast<Eigen::Index>(shape.flat_size());
  if (j.at("size").get<Eigen::Index>() != size) throw DimensionError("spectrum size mismatch");
  Eigen::VectorXcd flat(size);
  if (j.contains("data_file")) {
    const auto path = base_dir / j.at("data_file").get<std::string>();
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    const std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (buf.size() != static_cast<std::size_t>(size) * 16) throw DimensionError("binary spectrum has the wrong length");
    for (Eigen::Index i = 0; i < size; ++i) {
      double pair[2];
      std::memcpy(pair, buf.data() + i * 16, 16);
      flat[i] = {pair[0], pair[1]};
    }
  } else {
    const auto& data = j.at("data");
    if (static_cast<Eigen::Index>(data.size()) != size) throw DimensionError("spectrum data has the wrong length");
    for (Eigen::Index i = 0; i < size; ++i) flat[i] = {data[i].at(0).get<double>(), data[i].at(1).get<double>()};
  }
  return BlockSpectrum::unflatten(plan, flat);
}

BlockSpectrum read_spectrum(const std::filesystem::path& json_path, const FourierPlan& plan) {
  std::ifstream in(json_path);
  if (!in) throw ParseError("cannot open " + json_path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed spectrum manifest: ") + e.what());
  }
  const auto dir = json_path.parent_path().empty() ? std::filesystem::path(".") : json_path.parent_path();
  return spectrum_from_json(j, plan, dir);
}

}  // namespace rookfft
