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

// Text file formats shared by the command-line tools.
//
//   filter file       {"name": ..., "k": ..., "h": [...]}   (JSON)
//   coefficient file  "N J k name" header, then one value per line in
//                     d_1..d_J, a_J order
//   signal            one value per line (or a 16-bit PCM .wav)
//   dataset           directory of signal_NNNNNN.csv plus manifest.txt
//   key-value         "key = value" lines
//
// All reals are written with 17 significant digits so that a write/read
// cycle is exact.

#ifndef WAVELEARN_FORMATS_HPP_
#define WAVELEARN_FORMATS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wavelearn/analysis.hpp"
#include "wavelearn/filterbank.hpp"
#include "wavelearn/training.hpp"
#include "wavelearn/transform.hpp"

namespace wavelearn {

// "%.16e": 17 significant digits, round-trips every finite double.
std::string FormatReal(double v);

// Parses a whole token as a finite double; false on trailing junk.
bool ParseReal(std::string_view text, double& out);

// Writes via a temporary sibling and rename. Throws IoError.
void WriteFileAtomic(const std::string& path, const std::string& contents);
std::string ReadFile(const std::string& path);

struct FilterFile {
  std::string name;
  ScalingFilter h{std::vector<double>{1.0, 1.0}};
};

std::string EncodeFilterFile(const FilterFile& file);
FilterFile DecodeFilterFile(const std::string& text, const std::string& origin);
void WriteFilterFile(const std::string& path, const FilterFile& file);
FilterFile ReadFilterFile(const std::string& path);

struct CoefficientFile {
  std::size_t length = 0;  // N
  int levels = 0;          // J
  std::size_t filter_size = 0;
  std::string filter_name;
  std::vector<double> values;  // flat d_1..d_J, a_J
};

std::string EncodeCoefficientFile(const CoefficientFile& file);
CoefficientFile DecodeCoefficientFile(const std::string& text,
                                      const std::string& origin);
void WriteCoefficientFile(const std::string& path, const CoefficientFile& file);
CoefficientFile ReadCoefficientFile(const std::string& path);

// Single-column CSV. Blank lines are ignored; anything else that is not a
// number is reported with its line number.
std::string EncodeSignalCsv(std::span<const double> samples);
std::vector<double> DecodeSignalCsv(const std::string& text,
                                    const std::string& origin);
void WriteSignalCsv(const std::string& path, std::span<const double> samples);
std::vector<double> ReadSignalCsv(const std::string& path);

// Dispatches on the extension: ".wav" is read as 16-bit PCM, anything else
// as single-column CSV.
std::vector<double> ReadSamples(const std::string& path);
void WriteSamples(const std::string& path, std::span<const double> samples);

using KeyValues = std::vector<std::pair<std::string, std::string>>;

std::string EncodeKeyValues(const KeyValues& kv);
KeyValues DecodeKeyValues(const std::string& text, const std::string& origin);
// Value for `key`; throws IoError naming the origin when missing.
const std::string& Lookup(const KeyValues& kv, const std::string& key,
                          const std::string& origin);

// Creates `dir`, writes signal_000000.csv ... and manifest.txt holding
// `config` followed by count and N.
void WriteDataset(const std::string& dir, std::span<const Signal> signals,
                  const KeyValues& config);
std::vector<Signal> ReadDataset(const std::string& dir);

// "t,value" header then one row per sample.
std::string EncodeSampledFunction(const SampledFunction& f);

// "step,total,recon,sparsity,constraint" header then one row per step.
std::string EncodeHistoryCsv(const TrainingHistory& history);

// Fixed-width table: rank, family, order, distance (6 decimals).
std::string FormatMatchTable(std::span<const WaveletMatch> matches);

// Numeric columns of a CSV file; a first row that does not parse is treated
// as a header and returned in `header`.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;
};
CsvTable DecodeCsvTable(const std::string& text, const std::string& origin);

}  // namespace wavelearn

#endif  // WAVELEARN_FORMATS_HPP_
