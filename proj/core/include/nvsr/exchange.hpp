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

#include <chrono>
#include <filesystem>

namespace nvsr {

// File names used by the request/response exchange with external
// predictors and vocoders.
inline constexpr const char* kRequestFile = "request.melf";
inline constexpr const char* kResponseMelFile = "response.melf";
inline constexpr const char* kResponseWavFile = "response.wav";

/// Polls until `path` exists or the timeout elapses. Returns false on timeout.
bool wait_for_file(const std::filesystem::path& path,
                   std::chrono::milliseconds timeout,
                   std::chrono::milliseconds poll_interval);

/// Creates the directory if needed and checks it is a directory.
/// Throws IoError otherwise.
void prepare_exchange_dir(const std::filesystem::path& dir);

}  // namespace nvsr
