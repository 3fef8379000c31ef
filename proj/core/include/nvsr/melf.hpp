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

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "nvsr/types.hpp"

namespace nvsr {

// MELF mel exchange format, little-endian throughout:
//
//   offset  size  field
//   0       4     magic "MELF"
//   4       4     version (u32) = 1
//   8       4     T, frames (u32)
//   12      4     F, mel bands (u32)
//   16      4     sample_rate (u32)
//   20      4     window_len (u32)
//   24      4     hop (u32)
//   28      1     scale (u8): 0 linear, 1 natural log with eps 1e-8
//   29      4*T*F energies as float32, row-major (time-major)
inline constexpr std::uint32_t kMelfVersion = 1;
inline constexpr std::size_t kMelfHeaderSize = 29;

void write_melf(std::ostream& out, const MelSpectrogram& m);
void write_melf(const std::filesystem::path& path, const MelSpectrogram& m);

/// Throws MalformedFile on bad magic, unsupported version, unknown scale
/// flag, truncated payload or trailing bytes.
MelSpectrogram read_melf(std::istream& in);
MelSpectrogram read_melf(const std::filesystem::path& path);

/// Writes to a sibling temporary and renames it into place so readers
/// never observe a partial file.
void write_melf_atomic(const std::filesystem::path& path, const MelSpectrogram& m);

}  // namespace nvsr
