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

#include "wavelearn/wav.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <string>

#include "wavelearn/errors.hpp"

namespace wavelearn {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint16_t ReadU16(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint16_t>(b[at] | (b[at + 1] << 8));
}

std::uint32_t ReadU32(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint32_t>(b[at]) |
         (static_cast<std::uint32_t>(b[at + 1]) << 8) |
         (static_cast<std::uint32_t>(b[at + 2]) << 16) |
         (static_cast<std::uint32_t>(b[at + 3]) << 24);
}

bool Tag(std::span<const std::uint8_t> b, std::size_t at, const char* tag) {
  return std::equal(tag, tag + 4, b.begin() + static_cast<std::ptrdiff_t>(at));
}

void PutU16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void PutU32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int s = 0; s < 32; s += 8) out.push_back(static_cast<std::uint8_t>(v >> s));
}

void PutTag(std::vector<std::uint8_t>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

}  // namespace

WavAudio DecodeWav16(std::span<const std::uint8_t> b) {
  if (b.size() < 12 || !Tag(b, 0, "RIFF") || !Tag(b, 8, "WAVE")) {
    throw IoError("not a RIFF/WAVE file");
  }
  WavAudio audio;
  bool have_fmt = false;
  std::size_t at = 12;
  while (at + 8 <= b.size()) {
    const std::uint32_t size = ReadU32(b, at + 4);
    const std::size_t body = at + 8;
    if (size > b.size() - body) {
      throw IoError("chunk at offset " + std::to_string(at) +
                    " runs past end of file");
    }
    if (Tag(b, at, "fmt ")) {
      if (size < 16) throw IoError("fmt chunk too short");
      std::uint16_t format = ReadU16(b, body);
      audio.channels = ReadU16(b, body + 2);
      audio.sample_rate = ReadU32(b, body + 4);
      const std::uint16_t bits = ReadU16(b, body + 14);
      if (format == kFormatExtensible) {
        if (size < 40) throw IoError("extensible fmt chunk too short");
        format = ReadU16(b, body + 24);
      }
      if (format != kFormatPcm) {
        throw IoError("unsupported WAV format tag " + std::to_string(format) +
                      " (only PCM)");
      }
      if (bits != 16) {
        throw IoError("unsupported bits per sample " + std::to_string(bits) +
                      " (only 16)");
      }
      if (audio.channels != 1 && audio.channels != 2) {
        throw IoError("unsupported channel count " +
                      std::to_string(audio.channels) + " (only 1 or 2)");
      }
      have_fmt = true;
    } else if (Tag(b, at, "data")) {
      if (!have_fmt) throw IoError("data chunk precedes fmt chunk");
      const std::size_t frame = 2u * audio.channels;
      const std::size_t frames = size / frame;
      audio.mono.resize(frames);
      for (std::size_t f = 0; f < frames; ++f) {
        double acc = 0.0;
        for (std::size_t c = 0; c < audio.channels; ++c) {
          acc += static_cast<std::int16_t>(ReadU16(b, body + f * frame + 2 * c));
        }
        audio.mono[f] = acc / audio.channels / 32768.0;
      }
      return audio;
    }
    at = body + size + (size & 1u);
  }
  throw IoError(have_fmt ? "no data chunk" : "no fmt chunk");
}

WavAudio ReadWav16(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  try {
    return DecodeWav16(bytes);
  } catch (const IoError& e) {
    throw IoError("'" + path + "': " + e.what());
  }
}

std::vector<std::uint8_t> EncodeWav16(std::span<const std::int16_t> interleaved,
                                      std::uint16_t channels,
                                      std::uint32_t sample_rate) {
  const auto data_bytes = static_cast<std::uint32_t>(interleaved.size() * 2);
  std::vector<std::uint8_t> out;
  out.reserve(44 + data_bytes);
  PutTag(out, "RIFF");
  PutU32(out, 36 + data_bytes);
  PutTag(out, "WAVE");
  PutTag(out, "fmt ");
  PutU32(out, 16);
  PutU16(out, kFormatPcm);
  PutU16(out, channels);
  PutU32(out, sample_rate);
  PutU32(out, sample_rate * channels * 2);
  PutU16(out, static_cast<std::uint16_t>(channels * 2));
  PutU16(out, 16);
  PutTag(out, "data");
  PutU32(out, data_bytes);
  for (std::int16_t s : interleaved) PutU16(out, static_cast<std::uint16_t>(s));
  return out;
}

void WriteWav16(const std::string& path, std::span<const double> samples,
                std::uint32_t sample_rate) {
  std::vector<std::int16_t> pcm(samples.size());
  std::transform(samples.begin(), samples.end(), pcm.begin(), [](double s) {
    const double q = std::round(std::clamp(s, -1.0, 1.0) * 32768.0);
    return static_cast<std::int16_t>(std::clamp(q, -32768.0, 32767.0));
  });
  const auto bytes = EncodeWav16(pcm, 1, sample_rate);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace wavelearn
