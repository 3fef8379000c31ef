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

#include "nvsr/manifest.hpp"

#include <fstream>
#include <sstream>

#include "nvsr/errors.hpp"

namespace nvsr {

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& manifest,
                                         const std::string& split) {
  std::ifstream in(manifest);
  if (!in) throw IoError("cannot open manifest " + manifest.string());
  const std::filesystem::path base = manifest.parent_path();
  std::vector<ManifestEntry> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string rel, tag;
    if (!(fields >> rel) || rel.front() == '#') continue;
    fields >> tag;
    if (!split.empty() && !tag.empty() && tag != split) continue;
    ManifestEntry e;
    e.path = base / rel;
    e.split = tag;
    e.id = std::filesystem::path(rel).replace_extension().generic_string();
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace nvsr
