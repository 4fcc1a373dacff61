// Copyright 2026 The wavelearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "support/oracles.hpp"
#include "wavelearn/datagen.hpp"
#include "wavelearn/formats.hpp"
#include "wavelearn/transform.hpp"
#include "wavelearn/wav.hpp"

namespace wavelearn::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("wavelearn_cli_" + std::string(info->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  int Run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return RunCli(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, SynthWritesDatasetAndManifest) {
  ASSERT_EQ(Run({"synth", "--base", "sine", "--n", "256", "--m", "64", "--seed", "1",
                 "--out", Path("ds")}),
            kExitOk)
      << err_.str();
  const auto signals = ReadDataset(Path("ds"));
  ASSERT_EQ(signals.size(), 64u);
  for (const auto& s : signals) EXPECT_EQ(s.size(), 256u);
  EXPECT_TRUE(fs::exists(Path("ds/manifest.json")));
  EXPECT_TRUE(fs::exists(Path("ds/signal_000063.csv")));
}

TEST_F(CliTest, SynthIsDeterministic) {
  for (const char* name : {"a", "b"}) {
    ASSERT_EQ(Run({"synth", "--n", "64", "--m", "5", "--seed", "9", "--out", Path(name)}),
              kExitOk);
  }
  for (int i = 0; i < 5; ++i) {
    char file[32];
    std::snprintf(file, sizeof file, "signal_%06d.csv", i);
    EXPECT_EQ(ReadFile(Path(std::string("a/") + file)),
              ReadFile(Path(std::string("b/") + file)));
  }
}

TEST_F(CliTest, WindowedSquareMatchesLibrary) {
  ASSERT_EQ(Run({"synth", "--base", "square", "--windowed", "--n", "512", "--m", "6",
                 "--seed", "2", "--out", Path("w")}),
            kExitOk);
  SynthConfig config;
  config.base = BaseWave::kSquare;
  config.windowed = true;
  config.length = 512;
  config.count = 6;
  config.seed = 2;
  const auto signals = ReadDataset(Path("w"));
  ASSERT_EQ(signals.size(), 6u);
  for (std::size_t i = 0; i < signals.size(); ++i) {
    EXPECT_EQ(signals[i], SynthWindowed(config, i));
    for (double v : signals[i].samples()) EXPECT_LE(std::abs(v), 1.0);
  }
}

TEST_F(CliTest, TrainWritesRunDirectory) {
  ASSERT_EQ(Run({"synth", "--n", "256", "--m", "64", "--seed", "1", "--out", Path("ds")}),
            kExitOk);
  ASSERT_EQ(Run({"train", Path("ds"), "--k", "8", "--levels", "3", "--max-steps", "200",
                 "--out", Path("run")}),
            kExitOk)
      << err_.str();
  const auto history = DecodeCsvTable(ReadFile(Path("run/history.csv")), "history");
  ASSERT_EQ(history.columns.size(), 5u);
  EXPECT_EQ(history.columns[0].size(), 200u);
  EXPECT_NE(out_.str().find("final loss"), std::string::npos);
  for (const char* f : {"config", "filter.json", "seed", "manifest.json"}) {
    EXPECT_TRUE(fs::exists(Path(std::string("run/") + f))) << f;
  }
  EXPECT_EQ(ReadFilterFile(Path("run/filter.json")).h.size(), 8u);

  ASSERT_EQ(Run({"train", Path("ds"), "--k", "8", "--levels", "3", "--max-steps", "200",
                 "--out", Path("run2")}),
            kExitOk);
  EXPECT_EQ(ReadFile(Path("run/filter.json")), ReadFile(Path("run2/filter.json")));
}

TEST_F(CliTest, ConstraintOnlyTrainingOnZeroSignals) {
  const std::vector<Signal> zeros(8, Signal(std::vector<double>(64, 0.0)));
  WriteDataset(Path("zero"), zeros, {});
  ASSERT_EQ(Run({"train", Path("zero"), "--lambda1", "0", "--lambda2", "1", "--out",
                 Path("run")}),
            kExitOk)
      << err_.str();
  EXPECT_LT(WaveletLoss(ReadFilterFile(Path("run/filter.json")).h).total, 1e-6);
}

TEST_F(CliTest, TrainRejectsInfeasibleDepth) {
  const std::vector<Signal> data(2, Signal(std::vector<double>(16, 0.5)));
  WriteDataset(Path("ds"), data, {});
  EXPECT_EQ(Run({"train", Path("ds"), "--levels", "5", "--out", Path("run")}), kExitUsage);
  EXPECT_NE(err_.str().find("depth"), std::string::npos) << err_.str();
}

TEST_F(CliTest, TransformReconstructRoundTrip) {
  std::mt19937_64 gen(4);
  const auto x = testing::RandomVector(gen, 512);
  WriteSignalCsv(Path("x.csv"), x);
  ASSERT_EQ(Run({"transform", Path("x.csv"), "--filter", "db4", "--levels", "5", "--out",
                 Path("c.txt")}),
            kExitOk)
      << err_.str();
  ASSERT_EQ(Run({"reconstruct", Path("c.txt"), "--filter", "db4", "--out", Path("y.csv")}),
            kExitOk)
      << err_.str();
  EXPECT_LT(testing::MaxAbsDiff(ReadSignalCsv(Path("y.csv")), x), 1e-6);
}

TEST_F(CliTest, ConstantSignalHasZeroHaarDetails) {
  WriteSignalCsv(Path("c.csv"), std::vector<double>(64, 0.3));
  ASSERT_EQ(Run({"transform", Path("c.csv"), "--filter", "haar", "--levels", "4", "--out",
                 Path("k.txt")}),
            kExitOk);
  const auto coeffs = ReadCoefficientFile(Path("k.txt"));
  const auto layout = FlatLayout(64, 4);
  for (const auto& span : layout) {
    if (span.is_approx) continue;
    for (std::size_t i = 0; i < span.length; ++i) {
      EXPECT_NEAR(coeffs.values[span.offset + i], 0.0, 1e-15);
    }
  }
}

TEST_F(CliTest, ZeroCoefficientsReconstructToZero) {
  WriteCoefficientFile(Path("z.txt"), {32, 2, 4, "db2", std::vector<double>(32, 0.0)});
  ASSERT_EQ(Run({"reconstruct", Path("z.txt"), "--filter", "db2", "--out", Path("z.csv")}),
            kExitOk);
  for (double v : ReadSignalCsv(Path("z.csv"))) EXPECT_EQ(v, 0.0);
}

TEST_F(CliTest, ReconstructRejectsFilterMismatch) {
  WriteCoefficientFile(Path("z.txt"), {32, 2, 4, "db2", std::vector<double>(32, 0.0)});
  EXPECT_EQ(Run({"reconstruct", Path("z.txt"), "--filter", "db4", "--out", Path("z.csv")}),
            kExitUsage);
}

TEST_F(CliTest, MalformedFilesGiveLineDiagnostics) {
  WriteFileAtomic(Path("bad.csv"), "0.5\n0.25\noops\n0\n");
  EXPECT_EQ(Run({"transform", Path("bad.csv"), "--filter", "haar", "--levels", "1",
                 "--out", Path("o.txt")}),
            kExitUsage);
  EXPECT_NE(err_.str().find("bad.csv:3"), std::string::npos) << err_.str();
  WriteFileAtomic(Path("bad.txt"), "8 1 2 haar\n1\n2\nthree\n");
  EXPECT_EQ(Run({"reconstruct", Path("bad.txt"), "--filter", "haar", "--out",
                 Path("o.csv")}),
            kExitUsage);
  EXPECT_NE(err_.str().find("bad.txt:4"), std::string::npos) << err_.str();
}

TEST_F(CliTest, CompareFindsStoredSym5) {
  ASSERT_EQ(Run({"filter", "sym5", "--out", Path("sym5.json")}), kExitOk);
  ASSERT_EQ(Run({"compare", "--filter", Path("sym5.json"), "--out", Path("table.txt")}),
            kExitOk);
  const std::string table = ReadFile(Path("table.txt"));
  const auto first_row = table.substr(table.find('\n') + 1);
  std::istringstream row(first_row);
  std::string rank, family, order, distance;
  row >> rank >> family >> order >> distance;
  EXPECT_EQ(rank, "1");
  EXPECT_EQ(family, "Symlet");
  EXPECT_EQ(order, "5");
  EXPECT_EQ(distance, "0.000000");
}

TEST_F(CliTest, CascadeOnHaar) {
  ASSERT_EQ(Run({"cascade", "--filter", "haar", "--out", Path("casc")}), kExitOk);
  const auto phi = DecodeCsvTable(ReadFile(Path("casc/phi.csv")), "phi");
  ASSERT_EQ(phi.columns.size(), 2u);
  for (std::size_t i = 0; i < phi.columns[0].size(); ++i) {
    if (phi.columns[0][i] < 1.0) EXPECT_NEAR(phi.columns[1][i], 1.0, 1e-9);
  }
  EXPECT_TRUE(fs::exists(Path("casc/psi.csv")));
}

TEST_F(CliTest, SampleThenTransformHasZeroTopScales) {
  ASSERT_EQ(Run({"sample", "--filter", "sym8", "--n", "1024", "--levels", "6",
                 "--zero-top-scales", "3", "--seed", "5", "--out", Path("s.csv")}),
            kExitOk)
      << err_.str();
  ASSERT_EQ(Run({"transform", Path("s.csv"), "--filter", "sym8", "--levels", "6",
                 "--out", Path("s.txt")}),
            kExitOk);
  const auto coeffs = ReadCoefficientFile(Path("s.txt"));
  for (const auto& span : FlatLayout(1024, 6)) {
    if (span.is_approx || span.level > 3) continue;
    for (std::size_t i = 0; i < span.length; ++i) {
      EXPECT_LT(std::abs(coeffs.values[span.offset + i]), 1e-10);
    }
  }
}

TEST_F(CliTest, PlotRendersSvgWithLegend) {
  ASSERT_EQ(Run({"cascade", "--filter", "db2", "--out", Path("casc")}), kExitOk);
  ASSERT_EQ(Run({"plot", Path("casc/phi.csv"), Path("casc/psi.csv"), "--title", "db2",
                 "--out", Path("p.svg")}),
            kExitOk)
      << err_.str();
  const std::string svg = ReadFile(Path("p.svg"));
  EXPECT_NE(svg.find("<polyline"), std::string::npos);
  EXPECT_NE(svg.find(">phi<"), std::string::npos);
  EXPECT_NE(svg.find(">psi<"), std::string::npos);
  WriteFileAtomic(Path("junk.csv"), "a,b\n1,x\n");
  EXPECT_EQ(Run({"plot", Path("junk.csv"), "--out", Path("j.svg")}), kExitUsage);
}

TEST_F(CliTest, WavIngestSegments) {
  std::vector<std::int16_t> pcm(2 * 3000);
  for (std::size_t i = 0; i < pcm.size(); ++i) pcm[i] = static_cast<std::int16_t>(i % 200);
  const auto bytes = EncodeWav16(pcm, 2, 16000);
  WriteFileAtomic(Path("in.wav"), std::string(bytes.begin(), bytes.end()));
  ASSERT_EQ(Run({"wav-ingest", Path("in.wav"), "--n", "1024", "--hop", "512", "--out",
                 Path("ds")}),
            kExitOk)
      << err_.str();
  EXPECT_EQ(ReadDataset(Path("ds")).size(), 4u);
  WriteFileAtomic(Path("not.wav"), "RIFF....WAVEjunk");
  EXPECT_EQ(Run({"wav-ingest", Path("not.wav"), "--out", Path("ds2")}), kExitUsage);
}

TEST_F(CliTest, RerunReproducesOutputs) {
  ASSERT_EQ(Run({"sample", "--filter", "db3", "--n", "256", "--levels", "4", "--seed",
                 "8", "--out", Path("a.csv")}),
            kExitOk);
  ASSERT_EQ(Run({"rerun", ManifestPathFor("sample", Path("a.csv")), "--out",
                 Path("b.csv")}),
            kExitOk)
      << err_.str();
  EXPECT_EQ(ReadFile(Path("a.csv")), ReadFile(Path("b.csv")));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Run({}), kExitUsage);
  EXPECT_EQ(Run({"synth"}), kExitUsage);  // --out is required
  EXPECT_EQ(Run({"synth", "--n", "100", "--m", "1", "--out", Path("x")}), kExitUsage);
  EXPECT_EQ(Run({"synth", "--n", "abc", "--out", Path("x")}), kExitUsage);
  EXPECT_EQ(Run({"filter", "db99", "--out", Path("f.json")}), kExitUsage);
  EXPECT_EQ(Run({"compare", "--filter", Path("missing.json")}), kExitUsage);
  EXPECT_EQ(Run({"rerun", Path("missing.json")}), kExitUsage);
  EXPECT_EQ(Run({"--help"}), kExitOk);
}

}  // namespace
}  // namespace wavelearn::cli
