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

// Minimal RIFF/WAVE support for 16-bit PCM.

#ifndef WAVELEARN_WAV_HPP_
#define WAVELEARN_WAV_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wavelearn {

struct WavAudio {
  std::uint32_t sample_rate = 0;
  std::uint16_t channels = 0;
  // Channel-averaged samples scaled by 1/32768.
  std::vector<double> mono;
};

// Accepts PCM (format 1) or WAVE_FORMAT_EXTENSIBLE with a PCM sub-format, 16
// bits per sample, one or two channels. Unknown chunks are skipped. Throws
// IoError naming the offending field otherwise.
WavAudio ReadWav16(const std::string& path);
WavAudio DecodeWav16(std::span<const std::uint8_t> bytes);

// Mono 16-bit PCM. Samples are clamped to [-1, 1], scaled by 32768 and
// rounded; +1.0 saturates at 32767.
void WriteWav16(const std::string& path, std::span<const double> samples,
                std::uint32_t sample_rate);

// Raw int16 samples, interleaved, as a complete WAV image.
std::vector<std::uint8_t> EncodeWav16(std::span<const std::int16_t> interleaved,
                                      std::uint16_t channels,
                                      std::uint32_t sample_rate);

}  // namespace wavelearn

#endif  // WAVELEARN_WAV_HPP_
