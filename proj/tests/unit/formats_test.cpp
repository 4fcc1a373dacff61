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

#include "wavelearn/formats.hpp"

#include <cmath>
#include <filesystem>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "support/oracles.hpp"
#include "wavelearn/classical.hpp"
#include "wavelearn/errors.hpp"
#include "wavelearn/plot.hpp"

namespace wavelearn {
namespace {

namespace fs = std::filesystem;

fs::path TempDir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("wavelearn_formats_" + name);
  fs::remove_all(dir);
  return dir;
}

TEST(RealTest, RoundTripsExactly) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double v = u(gen) * std::pow(10.0, (i % 40) - 20);
    double back = 0.0;
    ASSERT_TRUE(ParseReal(FormatReal(v), back));
    EXPECT_EQ(back, v);
  }
  double out = 0.0;
  EXPECT_FALSE(ParseReal("1.5x", out));
  EXPECT_FALSE(ParseReal("", out));
  EXPECT_FALSE(ParseReal("nan", out));
}

TEST(FilterFileTest, RoundTrip) {
  const FilterFile f{"db6", ClassicalFilter({WaveletFamily::kDaubechies, 6})};
  const auto back = DecodeFilterFile(EncodeFilterFile(f), "mem");
  EXPECT_EQ(back.name, "db6");
  EXPECT_EQ(back.h, f.h);
}

TEST(FilterFileTest, RejectsBadContent) {
  EXPECT_THROW(DecodeFilterFile("{", "mem"), IoError);
  EXPECT_THROW(DecodeFilterFile(R"({"name": "x", "k": 3, "h": [1, 2]})", "mem"), IoError);
  EXPECT_THROW(DecodeFilterFile(R"({"name": "x", "k": 3, "h": [1, 2, 3]})", "mem"), IoError);
  EXPECT_THROW(DecodeFilterFile(R"({"name": "x", "k": 2, "h": [1, "a"]})", "mem"), IoError);
  EXPECT_THROW(DecodeFilterFile(R"({"k": 2, "h": [1, 1]})", "mem"), IoError);
  EXPECT_NO_THROW(DecodeFilterFile(R"({"name": "x", "k": 2, "h": [1, 1]})", "mem"));
}

TEST(CoefficientFileTest, RoundTripAndDiagnostics) {
  CoefficientFile c{8, 2, 4, "my filter", {1, 2, 3, 4, 5, 6, 7, 0.125}};
  const auto text = EncodeCoefficientFile(c);
  const auto back = DecodeCoefficientFile(text, "mem");
  EXPECT_EQ(back.length, 8u);
  EXPECT_EQ(back.levels, 2);
  EXPECT_EQ(back.filter_size, 4u);
  EXPECT_EQ(back.filter_name, "my_filter");
  EXPECT_EQ(back.values, c.values);
  try {
    DecodeCoefficientFile("8 2 4 x\n1\n2\nbad\n", "coeffs.txt");
    FAIL();
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("coeffs.txt:4"), std::string::npos) << e.what();
  }
  EXPECT_THROW(DecodeCoefficientFile("8 2 4 x\n1\n2\n", "mem"), IoError);
  EXPECT_THROW(DecodeCoefficientFile("", "mem"), IoError);
}

TEST(SignalCsvTest, RoundTripAndErrors) {
  const std::vector<double> x{0.1, -2.5e-300, 3.0, 1.0 / 3.0};
  EXPECT_EQ(DecodeSignalCsv(EncodeSignalCsv(x), "mem"), x);
  EXPECT_EQ(DecodeSignalCsv("1\n\n2\n", "mem"), (std::vector<double>{1, 2}));
  try {
    DecodeSignalCsv("1\n2\nthree\n", "sig.csv");
    FAIL();
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("sig.csv:3"), std::string::npos) << e.what();
  }
}

TEST(SamplesTest, DispatchesOnExtension) {
  const auto dir = TempDir("samples");
  fs::create_directories(dir);
  const std::vector<double> x{0.5, -0.25, 0.0, 0.75};
  WriteSamples((dir / "a.csv").string(), x);
  EXPECT_EQ(ReadSamples((dir / "a.csv").string()), x);
  WriteSamples((dir / "a.wav").string(), x);
  EXPECT_EQ(ReadSamples((dir / "a.wav").string()), x);
  EXPECT_THROW(ReadSamples((dir / "missing.csv").string()), IoError);
  fs::remove_all(dir);
}

TEST(KeyValuesTest, RoundTripAndLookup) {
  const KeyValues kv{{"k", "20"}, {"lambda1", "0.5"}, {"name", "a b"}};
  const auto back = DecodeKeyValues(EncodeKeyValues(kv), "mem");
  EXPECT_EQ(back, kv);
  EXPECT_EQ(Lookup(back, "lambda1", "mem"), "0.5");
  EXPECT_THROW(Lookup(back, "missing", "mem"), IoError);
}

TEST(DatasetTest, RoundTrip) {
  const auto dir = TempDir("dataset");
  std::vector<Signal> signals;
  for (int i = 0; i < 3; ++i) {
    std::vector<double> s(16);
    for (std::size_t n = 0; n < 16; ++n) s[n] = std::sin(0.1 * (n + 1) * (i + 1));
    signals.emplace_back(std::move(s));
  }
  WriteDataset(dir.string(), signals, {{"seed", "4"}});
  EXPECT_TRUE(fs::exists(dir / "signal_000002.csv"));
  EXPECT_EQ(ReadDataset(dir.string()), signals);
  fs::remove(dir / "signal_000001.csv");
  EXPECT_THROW(ReadDataset(dir.string()), IoError);
  fs::remove_all(dir);
}

TEST(WriteFileAtomicTest, CreatesParentsAndReplaces) {
  const auto dir = TempDir("atomic");
  const auto path = (dir / "nested" / "out.txt").string();
  WriteFileAtomic(path, "first");
  WriteFileAtomic(path, "second");
  EXPECT_EQ(ReadFile(path), "second");
  EXPECT_FALSE(fs::exists(path + ".tmp"));
  fs::remove_all(dir);
}

TEST(TablesTest, HistoryAndMatches) {
  TrainingHistory h;
  h.records.push_back({0, 1.5, 1.0, 0.25, 0.25});
  h.records.push_back({1, 1.0, 0.5, 0.25, 0.25});
  const auto table = DecodeCsvTable(EncodeHistoryCsv(h), "mem");
  EXPECT_EQ(table.header,
            (std::vector<std::string>{"step", "total", "recon", "sparsity", "constraint"}));
  ASSERT_EQ(table.columns.size(), 5u);
  EXPECT_EQ(table.columns[1], (std::vector<double>{1.5, 1.0}));

  const std::vector<WaveletMatch> matches{{{WaveletFamily::kSymlet, 5}, 0.0, 1},
                                          {{WaveletFamily::kHaar, 1}, 0.123456789, 2}};
  const auto text = FormatMatchTable(matches);
  EXPECT_NE(text.find("Symlet"), std::string::npos);
  EXPECT_NE(text.find("0.123457"), std::string::npos);

  SampledFunction f{{1.0, 2.0}, 0.5, 0};
  EXPECT_EQ(DecodeCsvTable(EncodeSampledFunction(f), "mem").columns[0],
            (std::vector<double>{0.0, 0.5}));
}

TEST(PlotTest, DeterministicSvg) {
  const std::vector<PlotSeries> s{{"phi", {0, 1, 2}, {0, 1, 0}},
                                  {"psi", {0, 1, 2}, {1, -1, 1}}};
  const auto a = RenderSvg(s, "title");
  EXPECT_EQ(a, RenderSvg(s, "title"));
  EXPECT_EQ(a.rfind("<svg", 0), 0u);
  EXPECT_NE(a.find("</svg>"), std::string::npos);
  EXPECT_NE(a.find("psi"), std::string::npos);
  EXPECT_THROW(RenderSvg({}, "empty"), InvalidArgument);
}

TEST(PlotTest, NiceTicksAreRoundAndInRange) {
  const auto t = NiceTicks(-0.3, 2.7, 5);
  EXPECT_EQ(t, (std::vector<double>{0.0, 1.0, 2.0}));
  EXPECT_FALSE(std::signbit(t.front()));
  const auto wide = NiceTicks(-1234.0, 5678.0, 5);
  for (double v : wide) {
    EXPECT_GE(v, -1234.0);
    EXPECT_LE(v, 5678.0);
    EXPECT_EQ(std::fmod(v, 1000.0), 0.0);
  }
  const auto flat = NiceTicks(1.0, 1.0, 5);
  EXPECT_FALSE(flat.empty());
}

}  // namespace
}  // namespace wavelearn
