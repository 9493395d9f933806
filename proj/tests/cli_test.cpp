// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "waveletn/tools/cli.hpp"
#include "waveletn/tools/io.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "waveletn");
  std::ostringstream out, err;
  const int code = waveletn::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return (fs::path(WAVELETN_TEST_DATA) / name).string(); }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("waveletn_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  fs::path dir_;
};

TEST_F(Cli, ValidateExitCodes) {
  const Outcome ok = invoke({"validate", data("haar.json")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_TRUE(json::parse(ok.out).at("unitary").get<bool>());
  const Outcome bad = invoke({"validate", data("broken.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_FALSE(json::parse(bad.out).at("unitary").get<bool>());
}

TEST_F(Cli, ParseAndPreconditionErrors) {
  const Outcome missing = invoke({"validate", path("missing.json")});
  EXPECT_EQ(missing.code, 2);
  EXPECT_EQ(json::parse(missing.err).at("error"), "Parse");
  std::ofstream(path("dup.json")) << R"({"N": 2, "filters": [{"coeffs": [[0, 1, 0], [0, 2, 0]]}]})";
  EXPECT_EQ(invoke({"validate", path("dup.json")}).code, 2);
  EXPECT_EQ(invoke({"nonsense"}).code, 2);
  EXPECT_EQ(invoke({"complete", data("haar_m0.json"), "--method", "spline"}).code, 2);
  const Outcome shape = invoke({"complete", data("d4_m0.json"), "--method", "householder_const"});
  EXPECT_EQ(shape.code, 3);
  EXPECT_EQ(json::parse(shape.err).at("error"), "UnsupportedShape");
  EXPECT_EQ(invoke({"cascade", data("haar.json"), "--level", "15"}).code, 3);
  EXPECT_EQ(invoke({"spectrum", data("haar.json"), "--window", "300"}).code, 3);
  EXPECT_EQ(invoke({"analyze", data("haar.json"), data("ramp.csv"), "--levels", "17"}).code, 3);
}

TEST_F(Cli, CompleteWritesAValidBank) {
  EXPECT_EQ(invoke({"complete", data("haar3_m0.json"), "-o", path("bank3.json")}).code, 0);
  EXPECT_EQ(invoke({"validate", path("bank3.json")}).code, 0);
  EXPECT_EQ(invoke({"complete", data("haar_m0.json"), "--method", "flip2", "-o", path("bank2.json")}).code, 0);
  const auto file = waveletn::io::read_filters(path("bank2.json"));
  EXPECT_EQ(file.filters.size(), 2u);
}

TEST_F(Cli, SpectrumOfStretchedHaar) {
  const Outcome r = invoke({"spectrum", data("stretched_haar.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "NotOrthonormal");
  EXPECT_EQ(j.at("fixed_space").at("dim"), 2);
  bool found = false;
  for (const auto& c : j.at("cycles"))
    if (c.at("points") == json::parse("[[1, 3], [2, 3]]")) found = true;
  EXPECT_TRUE(found);
  const Outcome h = invoke({"spectrum", data("haar.json")});
  EXPECT_EQ(json::parse(h.out).at("verdict"), "Orthonormal");
}

TEST_F(Cli, Wold) {
  const Outcome scalar = invoke({"wold", data("haar_m0.json")});
  ASSERT_EQ(scalar.code, 0);
  EXPECT_EQ(json::parse(scalar.out).at("kind"), "Shift");
  std::ofstream(path("z.json")) << R"({"N": 2, "filters": [{"coeffs": [[1, 1, 0]]}]})";
  const Outcome z = invoke({"wold", path("z.json"), "--method", "matrix"});
  ASSERT_EQ(z.code, 0);
  const json jz = json::parse(z.out);
  EXPECT_EQ(jz.at("kind"), "UnitaryPart");
  EXPECT_EQ(jz.at("eigenpairs")[0].at("xi"), json::parse("[[-1, 1.0, 0.0]]"));
  const Outcome vec = invoke({"wold", data("haar.json")});
  ASSERT_EQ(vec.code, 0);
  EXPECT_LE(json::parse(vec.out).at("dim").get<int>(), 2);
}

TEST_F(Cli, AnalyzeSynthesizeRoundTrip) {
  ASSERT_EQ(invoke({"analyze", data("haar.json"), data("ramp.csv"), "--levels", "4", "-o", path("c.json")}).code, 0);
  const Outcome s = invoke({"synthesize", data("haar.json"), path("c.json"), "-o", path("r.csv"), "--reference",
                     data("ramp.csv")});
  EXPECT_EQ(s.code, 0);
  const auto a = waveletn::io::read_signal_csv(data("ramp.csv"));
  const auto b = waveletn::io::read_signal_csv(path("r.csv"));
  EXPECT_LE(waveletn::distance(a, b), 1e-10);
  EXPECT_EQ(slurp(path("r.csv")).substr(0, 8), "k,re,im\n");
  // Deterministic output.
  ASSERT_EQ(invoke({"analyze", data("haar.json"), data("ramp.csv"), "--levels", "4", "-o", path("c2.json")}).code, 0);
  EXPECT_EQ(slurp(path("c.json")), slurp(path("c2.json")));
}

TEST_F(Cli, Cascade) {
  const Outcome r = invoke({"cascade", data("d4.json"), "--out-dir", path("out")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j.at("l2_norm2").get<double>(), 1.0, 1e-4);
  EXPECT_TRUE(j.at("father_filter").get<bool>());
  EXPECT_EQ(slurp(path("out/phi.csv")).substr(0, 19), "x,value_re,value_im");
  EXPECT_EQ(slurp(path("out/psi_hat_1.csv")).substr(0, 7), "t,re,im");
  EXPECT_TRUE(fs::exists(path("out/phi_hat.csv")));
}

TEST_F(Cli, ClassifyAndPartition) {
  const Outcome n = invoke({"classify", data("pairing_cocycle.json")});
  ASSERT_EQ(n.code, 0);
  const json jn = json::parse(n.out);
  EXPECT_EQ(jn.at("verdict"), "NotCoboundary");
  EXPECT_EQ(jn.at("witness"), json::parse("[1]"));
  const Outcome e = invoke({"classify", data("constructed_cocycle.json"), data("trivial_cocycle.json")});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_EQ(json::parse(e.out).at("verdict"), "Equivalent");
  const Outcome d = invoke({"classify", data("pairing_cocycle.json"), data("trivial_cocycle.json")});
  EXPECT_EQ(json::parse(d.out).at("verdict"), "Disjoint");

  EXPECT_EQ(invoke({"partition", data("partition_valid.json")}).code, 0);
  EXPECT_EQ(invoke({"partition", data("partition_invalid.json")}).code, 1);
  const Outcome c = invoke({"partition", data("partition_valid.json"), "--angle", "1/3", "--depth", "4"});
  EXPECT_EQ(json::parse(c.out).at("coding").at("word"), json::parse("[1, 1, 1, 1]"));
}

TEST_F(Cli, CompareScales) {
  const Outcome r = invoke({"compare-scales", data("haar.json"), data("haar3_m0.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_LE(j.at("commute_residual").get<double>(), 1e-12);
  EXPECT_EQ(j.at("decomposition").at("B"), json::array());
  EXPECT_EQ(invoke({"compare-scales", data("haar.json"), data("stretched_haar_m0.json")}).code, 3);
}

TEST_F(Cli, ToleranceOverride) {
  ::setenv("WAVELETN_TOL", "0.5", 1);
  const Outcome loose = invoke({"validate", data("broken.json")});
  ::setenv("WAVELETN_TOL", "abc", 1);
  const Outcome invalid = invoke({"validate", data("haar.json")});
  ::unsetenv("WAVELETN_TOL");
  EXPECT_EQ(loose.code, 0);
  EXPECT_EQ(invalid.code, 2);
}

TEST(CanonicalJson, FormatsAndSortsKeys) {
  const json j{{"b", 1}, {"a", {0.5, -0.0, 2}}, {"c", "x"}};
  EXPECT_EQ(waveletn::io::canonical_dump(j),
            "{\n  \"a\": [5.000000000000e-01, 0.000000000000e+00, 2],\n  \"b\": 1,\n  \"c\": \"x\"\n}\n");
}

}  // namespace
