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

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wavelearn/errors.hpp"
#include "wavelearn/wav.hpp"

namespace wavelearn {
namespace {

namespace fs = std::filesystem;

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

[[noreturn]] void Malformed(const std::string& origin, std::size_t line,
                            const std::string& what) {
  throw IoError(origin + ":" + std::to_string(line) + ": " + what);
}

std::string SignalFileName(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "signal_%06zu.csv", i);
  return buf;
}

}  // namespace

std::string FormatReal(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

bool ParseReal(std::string_view text, double& out) {
  const std::string t = Trim(text);
  if (t.empty()) return false;
  const char* begin = t.data();
  const char* end = t.data() + t.size();
  if (*begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

void WriteFileAtomic(const std::string& path, const std::string& contents) {
  const fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << contents;
    out.flush();
    if (!out) throw IoError("write failed for '" + path + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + path + "'");
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

std::string EncodeFilterFile(const FilterFile& file) {
  std::string out = "{\n  \"name\": " + nlohmann::json(file.name).dump() +
                    ",\n  \"k\": " + std::to_string(file.h.size()) +
                    ",\n  \"h\": [\n";
  const auto h = file.h.coeffs();
  for (std::size_t i = 0; i < h.size(); ++i) {
    out += "    " + FormatReal(h[i]) + (i + 1 < h.size() ? ",\n" : "\n");
  }
  out += "  ]\n}\n";
  return out;
}

FilterFile DecodeFilterFile(const std::string& text, const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(origin + ": malformed filter file: " + e.what());
  }
  if (!j.is_object() || !j.contains("name") || !j.contains("k") ||
      !j.contains("h") || !j["name"].is_string() ||
      !j["k"].is_number_integer() || !j["h"].is_array()) {
    throw IoError(origin + ": filter file needs string 'name', integer 'k' "
                           "and array 'h'");
  }
  std::vector<double> h;
  for (const auto& v : j["h"]) {
    if (!v.is_number()) throw IoError(origin + ": non-numeric filter tap");
    h.push_back(v.get<double>());
  }
  if (j["k"].get<long long>() != static_cast<long long>(h.size())) {
    throw IoError(origin + ": 'k' is " + std::to_string(j["k"].get<long long>()) +
                  " but 'h' has " + std::to_string(h.size()) + " taps");
  }
  try {
    return {j["name"].get<std::string>(), ScalingFilter(std::move(h))};
  } catch (const InvalidArgument& e) {
    throw IoError(origin + ": " + e.what());
  }
}

void WriteFilterFile(const std::string& path, const FilterFile& file) {
  WriteFileAtomic(path, EncodeFilterFile(file));
}

FilterFile ReadFilterFile(const std::string& path) {
  return DecodeFilterFile(ReadFile(path), path);
}

std::string EncodeCoefficientFile(const CoefficientFile& file) {
  std::string name = file.filter_name.empty() ? "unnamed" : file.filter_name;
  for (char& c : name) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') c = '_';
  }
  std::string out = std::to_string(file.length) + " " +
                    std::to_string(file.levels) + " " +
                    std::to_string(file.filter_size) + " " + name + "\n";
  for (double v : file.values) out += FormatReal(v) + "\n";
  return out;
}

CoefficientFile DecodeCoefficientFile(const std::string& text,
                                      const std::string& origin) {
  const auto lines = Lines(text);
  if (lines.empty()) Malformed(origin, 1, "missing 'N J k filter-name' header");
  CoefficientFile file;
  {
    std::istringstream header(lines[0]);
    long long n = 0, levels = 0, k = 0;
    if (!(header >> n >> levels >> k >> file.filter_name) || n <= 0 ||
        levels <= 0 || k <= 0) {
      Malformed(origin, 1, "expected header 'N J k filter-name'");
    }
    file.length = static_cast<std::size_t>(n);
    file.levels = static_cast<int>(levels);
    file.filter_size = static_cast<std::size_t>(k);
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (Trim(lines[i]).empty()) continue;
    double v = 0.0;
    if (!ParseReal(lines[i], v)) {
      Malformed(origin, i + 1, "not a number: '" + Trim(lines[i]) + "'");
    }
    file.values.push_back(v);
  }
  if (file.values.size() != file.length) {
    Malformed(origin, lines.size(),
              "header says N = " + std::to_string(file.length) + " but found " +
                  std::to_string(file.values.size()) + " values");
  }
  try {
    CheckDepth(file.length, file.levels);
  } catch (const InvalidArgument& e) {
    Malformed(origin, 1, e.what());
  }
  return file;
}

void WriteCoefficientFile(const std::string& path, const CoefficientFile& file) {
  WriteFileAtomic(path, EncodeCoefficientFile(file));
}

CoefficientFile ReadCoefficientFile(const std::string& path) {
  return DecodeCoefficientFile(ReadFile(path), path);
}

std::string EncodeSignalCsv(std::span<const double> samples) {
  std::string out;
  out.reserve(samples.size() * 24);
  for (double v : samples) out += FormatReal(v) + "\n";
  return out;
}

std::vector<double> DecodeSignalCsv(const std::string& text,
                                    const std::string& origin) {
  std::vector<double> samples;
  const auto lines = Lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (Trim(lines[i]).empty()) continue;
    double v = 0.0;
    if (!ParseReal(lines[i], v)) {
      Malformed(origin, i + 1, "not a number: '" + Trim(lines[i]) + "'");
    }
    samples.push_back(v);
  }
  return samples;
}

void WriteSignalCsv(const std::string& path, std::span<const double> samples) {
  WriteFileAtomic(path, EncodeSignalCsv(samples));
}

std::vector<double> ReadSignalCsv(const std::string& path) {
  return DecodeSignalCsv(ReadFile(path), path);
}

namespace {
bool IsWavPath(const std::string& path) {
  auto ext = fs::path(path).extension().string();
  for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext == ".wav";
}
}  // namespace

std::vector<double> ReadSamples(const std::string& path) {
  if (IsWavPath(path)) return ReadWav16(path).mono;
  return ReadSignalCsv(path);
}

void WriteSamples(const std::string& path, std::span<const double> samples) {
  if (IsWavPath(path)) {
    WriteWav16(path, samples, 44100);
  } else {
    WriteSignalCsv(path, samples);
  }
}

std::string EncodeKeyValues(const KeyValues& kv) {
  std::string out;
  for (const auto& [k, v] : kv) out += k + " = " + v + "\n";
  return out;
}

KeyValues DecodeKeyValues(const std::string& text, const std::string& origin) {
  KeyValues kv;
  const auto lines = Lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string line = Trim(lines[i]);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) Malformed(origin, i + 1, "expected 'key = value'");
    kv.emplace_back(Trim(std::string_view(line).substr(0, eq)),
                    Trim(std::string_view(line).substr(eq + 1)));
  }
  return kv;
}

const std::string& Lookup(const KeyValues& kv, const std::string& key,
                          const std::string& origin) {
  for (const auto& [k, v] : kv) {
    if (k == key) return v;
  }
  throw IoError(origin + ": missing key '" + key + "'");
}

void WriteDataset(const std::string& dir, std::span<const Signal> signals,
                  const KeyValues& config) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir + "'");
  for (std::size_t i = 0; i < signals.size(); ++i) {
    WriteSignalCsv((fs::path(dir) / SignalFileName(i)).string(),
                   signals[i].samples());
  }
  KeyValues manifest = config;
  manifest.emplace_back("count", std::to_string(signals.size()));
  manifest.emplace_back("N", std::to_string(signals.empty() ? 0 : signals[0].size()));
  WriteFileAtomic((fs::path(dir) / "manifest.txt").string(),
                  EncodeKeyValues(manifest));
}

std::vector<Signal> ReadDataset(const std::string& dir) {
  const std::string manifest_path = (fs::path(dir) / "manifest.txt").string();
  const KeyValues kv = DecodeKeyValues(ReadFile(manifest_path), manifest_path);
  std::size_t count = 0, n = 0;
  try {
    count = std::stoul(Lookup(kv, "count", manifest_path));
    n = std::stoul(Lookup(kv, "N", manifest_path));
  } catch (const std::logic_error&) {
    throw IoError(manifest_path + ": count and N must be integers");
  }
  std::vector<Signal> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::string path = (fs::path(dir) / SignalFileName(i)).string();
    std::vector<double> samples = ReadSignalCsv(path);
    if (samples.size() != n) {
      throw IoError(path + ": expected " + std::to_string(n) + " samples, found " +
                    std::to_string(samples.size()));
    }
    try {
      out.emplace_back(std::move(samples));
    } catch (const InvalidArgument& e) {
      throw IoError(path + ": " + e.what());
    }
  }
  return out;
}

std::string EncodeSampledFunction(const SampledFunction& f) {
  std::string out = "t,value\n";
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    out += FormatReal(f.t(i)) + "," + FormatReal(f.values[i]) + "\n";
  }
  return out;
}

std::string EncodeHistoryCsv(const TrainingHistory& history) {
  std::string out = "step,total,recon,sparsity,constraint\n";
  for (const auto& r : history.records) {
    out += std::to_string(r.step) + "," + FormatReal(r.total) + "," +
           FormatReal(r.reconstruction) + "," + FormatReal(r.sparsity) + "," +
           FormatReal(r.constraint) + "\n";
  }
  return out;
}

std::string FormatMatchTable(std::span<const WaveletMatch> matches) {
  std::string out = "rank  family      order  distance\n";
  char buf[96];
  for (const auto& m : matches) {
    std::snprintf(buf, sizeof buf, "%-5d %-11s %-6d %.6f\n", m.rank,
                  std::string(FamilyName(m.id.family)).c_str(), m.id.order,
                  m.distance);
    out += buf;
  }
  return out;
}

CsvTable DecodeCsvTable(const std::string& text, const std::string& origin) {
  CsvTable table;
  const auto lines = Lines(text);
  bool first = true;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (Trim(lines[i]).empty()) continue;
    std::vector<std::string> cells;
    std::istringstream row(lines[i]);
    for (std::string cell; std::getline(row, cell, ',');) cells.push_back(Trim(cell));
    std::vector<double> values(cells.size());
    bool numeric = true;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      numeric = numeric && ParseReal(cells[c], values[c]);
    }
    if (first) {
      first = false;
      table.columns.resize(cells.size());
      if (!numeric) {
        table.header = cells;
        continue;
      }
    }
    if (!numeric) Malformed(origin, i + 1, "non-numeric cell");
    if (cells.size() != table.columns.size()) {
      Malformed(origin, i + 1,
                "expected " + std::to_string(table.columns.size()) +
                    " columns, found " + std::to_string(cells.size()));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) table.columns[c].push_back(values[c]);
  }
  if (table.columns.empty() || table.columns[0].empty()) {
    Malformed(origin, lines.size(), "no data rows");
  }
  return table;
}

}  // namespace wavelearn
