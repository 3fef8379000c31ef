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

#include "nvsr/iir.hpp"
#include "nvsr/types.hpp"

namespace nvsr {

/// Low-resolution simulation settings: lowpass at target_rate/2, subsample
/// to target_rate, upsample back to source_rate.
struct DegradeSpec {
  int target_rate = 8000;
  int source_rate = kCanonicalRate;
  int filter_order = 8;
  double passband_ripple_db = 0.05;
  bool zero_phase = false;
};

void validate(const DegradeSpec& spec);

/// Chebyshev type I lowpass applied to the waveform (same length and rate).
/// Throws InvalidArgument if cutoff is not inside (0, Nyquist).
Waveform cheby1_lowpass(const Waveform& w, double cutoff_hz, int order = 8,
                        double ripple_db = 0.05, bool zero_phase = false);

struct LowResPair {
  Waveform low;        // at spec.target_rate
  Waveform upsampled;  // at spec.source_rate, same length as the input
};

/// Produces the band-limited signal at the low rate and its upsampled
/// version. Deterministic: identical inputs give bit-identical outputs.
LowResPair simulate_lr(const Waveform& target, const DegradeSpec& spec);

}  // namespace nvsr
