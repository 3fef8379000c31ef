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

#include "nvsr/types.hpp"

namespace nvsr {

inline constexpr double kLsdFloor = 1e-8;

/// Log-spectral distance between two magnitude spectrograms:
///
///   LSD = 1/T sum_t sqrt( 1/K sum_k log10( Y^2 / Yhat^2 )^2 )
///
/// Magnitudes are floored at `floor` first. Throws ShapeMismatch when the
/// shapes differ and InvalidArgument on empty input.
double lsd(const MagSpectrogram& reference, const MagSpectrogram& estimate,
           double floor = kLsdFloor);
double lsd(const RealMatrix& reference, const RealMatrix& estimate,
           double floor = kLsdFloor);

/// LSD between two waveforms at the same rate using the canonical
/// 2048/441 framing. The estimate is trimmed or zero-padded to the
/// reference length.
double lsd(const Waveform& reference, const Waveform& estimate);

}  // namespace nvsr
