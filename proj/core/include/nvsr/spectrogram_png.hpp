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

/// Writes a grayscale PNG of 20 log10 |S| (frequency upward, time to the
/// right) clamped to [max - dynamic_range_db, max].
void write_spectrogram_png(const std::filesystem::path& path,
                           const MagSpectrogram& s,
                           double dynamic_range_db = 100.0);

}  // namespace nvsr
