// Copyright 2026 The NVSR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>

#include "nvsr/types.hpp"

namespace nvsr {

enum class WavEncoding { kPcm16, kFloat32 };

struct WavReadInfo {
  int channels = 1;
  WavEncoding encoding = WavEncoding::kPcm16;
  bool downmixed = false;
};

/// Reads a RIFF/WAVE file holding 16-bit integer or 32-bit float PCM.
/// Multi-channel input is averaged to mono and a warning is emitted.
/// Throws IoError when the file cannot be opened and MalformedFile when
/// the chunk structure or sample format is not supported.
Waveform read_wav(const std::filesystem::path& path, WavReadInfo* info = nullptr);

/// Writes a mono WAV. 16-bit output is clipped to [-1, 1] before
/// quantization; float output is written as-is.
void write_wav(const std::filesystem::path& path, const Waveform& w,
               WavEncoding encoding = WavEncoding::kPcm16);

}  // namespace nvsr
