#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "rookfft/dataset.hpp"
#include "rookfft/irrep_cache.hpp"
#include "rookfft/spectrum_io.hpp"
#include "test_support.hpp"

using namespace rookfft;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "rookfft_io_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Dataset, SingleRecordIsUnitMass) {
  const Dataset ds = parse_dataset_text("n=7\ngroup=none\n2,-,5,-,-,-,3 , 1.0\n");
  EXPECT_EQ(ds.n, 7);
  EXPECT_EQ(ds.group.descriptor, "none");
  const PartialPerm s = PartialPerm::from_one_based(std::vector<int>{2, 0, 5, 0, 0, 0, 3});
  const std::uint64_t at = ds.index->index_of(s);
  EXPECT_EQ(ds.values[at], std::complex<double>(1.0));
  EXPECT_EQ(ds.values.values().cwiseAbs().sum(), 1.0);
  EXPECT_EQ(s(0), 1);
  EXPECT_EQ(s(2), 4);
  EXPECT_EQ(s(6), 2);
  EXPECT_EQ(s.rank(), 3);
}

TEST(Dataset, EmptyInputIsZero) {
  const Dataset ds = parse_dataset_text("", 3);
  EXPECT_EQ(ds.values.size(), 34);
  EXPECT_EQ(ds.values.values().cwiseAbs().maxCoeff(), 0.0);
  const Dataset headers_only = parse_dataset_text("# nothing here\nn=2\ngroup=Z2\n\n");
  EXPECT_EQ(headers_only.values.size(), 17);
  EXPECT_THROW(parse_dataset_text(""), ParseError);
}

TEST(Dataset, DuplicatesAreSummed) {
  const Dataset ds = parse_dataset_text("n=2\n1,2 , 1.5\n# again\n1,2 , 0.5-1i\n");
  EXPECT_EQ(ds.values[0], std::complex<double>(2.0, -1.0));
}

TEST(Dataset, ErrorsCarryLineNumbers) {
  const auto line_of = [](const char* text) {
    try {
      parse_dataset_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("n=2\n1,2 , 1\n1,1 , 2\n"), 3);
  EXPECT_EQ(line_of("n=2\n\n1,2\n"), 3);
  EXPECT_EQ(line_of("n=2\n1,2 , abc\n"), 2);
  EXPECT_EQ(line_of("n=x\n"), 1);
  EXPECT_EQ(line_of("n=2\ngroup=Q7\n1,2 , 1\n"), 3);
  EXPECT_EQ(line_of("n=2\n1,2,3 , 1\n"), 2);
  EXPECT_THROW(parse_dataset_text("n=3\n1,2,3 , 1\n", 4), ParseError);
  EXPECT_THROW(parse_dataset_text("n=9\n"), ParseError);
}

TEST(Dataset, WreathRecordsRoundTrip) {
  std::mt19937_64 rng(41);
  auto idx = rookfft::testing::make_index(2, 3);
  const ComplexVector v = rookfft::testing::random_complex(idx, rng);
  const std::string text = format_dataset(v, "Z3");
  const Dataset back = parse_dataset_text(text);
  EXPECT_EQ(back.group.descriptor, "Z3");
  EXPECT_EQ(back.values.values(), v.values());
  EXPECT_EQ(parse_element(*idx, "0"), idx->total() - 1);
  EXPECT_EQ(element_text(*idx, 0), "1,1:0;2,2:0");
}

TEST(Dataset, GroupDescriptors) {
  EXPECT_EQ(resolve_group("none").descriptor, "none");
  EXPECT_EQ(resolve_group("trivial").descriptor, "none");
  EXPECT_EQ(resolve_group("Z1").descriptor, "none");
  EXPECT_EQ(resolve_group("cyclic:4").descriptor, "Z4");
  EXPECT_EQ(resolve_group("Z5").group->order(), 5);
  EXPECT_THROW(resolve_group("Z0"), std::exception);
  EXPECT_THROW(resolve_group("S3"), std::exception);
}

TEST(Dataset, TableGroupFromFile) {
  const char* mul = R"("mul": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]])";
  const fs::path bare = scratch("klein_bare.json");
  std::ofstream(bare) << R"({"name": "klein", "order": 4, )" << mul << "}";
  EXPECT_THROW(resolve_group("table:" + bare.string()), std::invalid_argument);

  // Characters of Z2 x Z2 with x read as two bits.
  std::vector<Irrep> irreps;
  std::vector<ComplexMatrix> tables;
  for (int a = 0; a < 4; ++a) {
    irreps.push_back({"chi" + std::to_string(a), 1});
    ComplexMatrix t(4, 1);
    for (int x = 0; x < 4; ++x) t(x, 0) = (__builtin_popcount(a & x) % 2) ? -1.0 : 1.0;
    tables.push_back(t);
  }
  const fs::path table = scratch("klein.json");
  std::ofstream(table) << R"({"name": "klein", "order": 4, "irreps": "klein.irreps", )" << mul << "}";
  const GroupTable klein = GroupTable::from_json_file(table);
  save_irreps(IrrepSet("klein", 4, irreps, tables), 1,
              irrep_cache_key(WreathGroup(1, std::make_shared<const GroupTable>(klein)).descriptor(), klein.fingerprint()),
              scratch("klein.irreps"));
  const GroupChoice g = resolve_group("table:" + table.string());
  EXPECT_EQ(g.group->order(), 4);
  ASSERT_TRUE(g.irreps);
  EXPECT_EQ(g.irreps->size(), 4u);
  const FourierPlan plan(std::make_shared<const ElementIndex>(2, g.group), g.irreps);
  std::mt19937_64 rng(43);
  const ComplexVector f = rookfft::testing::random_complex(plan.index_ptr(), rng);
  EXPECT_LT(rookfft::testing::max_abs(ifft(fft(f, plan), plan).values(), f.values()), 1e-9);
  const fs::path bad = scratch("bad.json");
  std::ofstream(bad) << R"({"name": "bad", "order": 2, "mul": [[0,1],[1,1]]})";
  EXPECT_THROW(resolve_group("table:" + bad.string()), std::exception);
}

TEST(Complex, ParseAndFormat) {
  EXPECT_EQ(parse_complex("1.5"), std::complex<double>(1.5, 0));
  EXPECT_EQ(parse_complex("-2"), std::complex<double>(-2, 0));
  EXPECT_EQ(parse_complex("0.5+2i"), std::complex<double>(0.5, 2));
  EXPECT_EQ(parse_complex("1e-3-4i"), std::complex<double>(1e-3, -4));
  EXPECT_EQ(parse_complex("3i"), std::complex<double>(0, 3));
  EXPECT_EQ(parse_complex(" -2.5i "), std::complex<double>(0, -2.5));
  EXPECT_THROW(parse_complex(""), ParseError);
  EXPECT_THROW(parse_complex("1+"), ParseError);
  EXPECT_THROW(parse_complex("nan"), ParseError);
  for (const std::complex<double> z : {std::complex<double>(0.1, -0.3), std::complex<double>(-1e-300, 7),
                                       std::complex<double>(2, 0), std::complex<double>(0, -1.25)})
    EXPECT_EQ(parse_complex(format_complex(z)), z);
}

TEST(SpectrumIo, JsonAndBinaryRoundTrip) {
  std::mt19937_64 rng(42);
  const FourierPlan plan(rookfft::testing::make_index(3, 2));
  const BlockSpectrum s = fft(rookfft::testing::random_complex(plan.index_ptr(), rng), plan);

  const nlohmann::json j = spectrum_to_json(s, plan);
  EXPECT_EQ(j["format"], "rookfft.spectrum");
  EXPECT_EQ(j["size"], plan.index().total());
  EXPECT_EQ(spectrum_from_json(j, plan).max_abs_diff(s), 0.0);

  const fs::path manifest = scratch("spec.json"), blob = scratch("spec.bin");
  write_spectrum(s, plan, manifest, blob);
  EXPECT_EQ(fs::file_size(blob), plan.index().total() * 16);
  EXPECT_EQ(read_spectrum(manifest, plan).max_abs_diff(s), 0.0);

  write_spectrum(s, plan, manifest);
  EXPECT_EQ(read_spectrum(manifest, plan).max_abs_diff(s), 0.0);
}

TEST(SpectrumIo, ShapeMismatchIsRejected) {
  const FourierPlan p3(rookfft::testing::make_index(3)), p2(rookfft::testing::make_index(2));
  const nlohmann::json j = spectrum_to_json(BlockSpectrum::zeros(p3), p3);
  EXPECT_THROW(spectrum_from_json(j, p2), std::exception);
  nlohmann::json truncated = j;
  truncated["data"].erase(truncated["data"].begin());
  EXPECT_THROW(spectrum_from_json(truncated, p3), std::exception);
  nlohmann::json version = j;
  version["layout_version"] = 99;
  EXPECT_THROW(spectrum_from_json(version, p3), std::exception);
}

TEST(SpectrumIo, BlocksFollowFlatLayout) {
  const FourierPlan plan(rookfft::testing::make_index(3));
  const nlohmann::json j = spectrum_to_json(BlockSpectrum::zeros(plan), plan);
  std::uint64_t offset = 0;
  int last_k = -1;
  for (const auto& b : j["blocks"]) {
    EXPECT_EQ(b["offset"].get<std::uint64_t>(), offset);
    const std::uint64_t side = b["r"].get<std::uint64_t>() * b["dim"].get<std::uint64_t>();
    EXPECT_EQ(b["length"].get<std::uint64_t>(), side * side);
    EXPECT_GE(b["k"].get<int>(), last_k);
    last_k = b["k"].get<int>();
    offset += side * side;
  }
  EXPECT_EQ(offset, 34u);
}
