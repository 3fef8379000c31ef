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

#include <vector>

#include "nvsr/types.hpp"

namespace nvsr {

/// Rational up/down factors for a rate conversion, reduced by their gcd.
struct ResampleRatio {
  int up = 1;
  int down = 1;
};

/// Throws InvalidArgument if either rate is non-positive or the reduced
/// factors exceed kMaxResampleFactor.
ResampleRatio resample_ratio(int source_rate, int target_rate);

inline constexpr int kMaxResampleFactor = 1000;

/// Anti-aliasing FIR used by resample_poly: Kaiser-windowed sinc with
/// beta = 5 and 10 zero crossings per side of the slower rate, cutoff at
/// the lower Nyquist frequency, gain `up`. Length 20*max(up,down)+1.
std::vector<double> polyphase_filter(const ResampleRatio& ratio);

/// Polyphase rational resampling with zero group delay.
///
/// Output length is round(len * target / source). Identity ratios return
/// the input unchanged.
Waveform resample_poly(const Waveform& w, int target_rate);

}  // namespace nvsr
