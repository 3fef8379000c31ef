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
#include <string>
#include <vector>

namespace nvsr {

struct ManifestEntry {
  std::filesystem::path path;  // resolved against the manifest's directory
  std::string split;           // empty when the line has no tag
  std::string id;              // path relative to the manifest, no extension
};

/// Reads a newline-delimited manifest: `<relative wav path> [split]`.
/// Blank lines and lines starting with '#' are skipped. Only entries whose
/// split matches `split` (or that carry no tag) are kept; an empty `split`
/// keeps everything. Throws IoError if the manifest cannot be opened.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& manifest,
                                         const std::string& split = "test");

}  // namespace nvsr
