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

/// Periodic Hann window of the given length.
std::vector<double> hann_window(int length);

/// Centered short-time Fourier transform with a periodic Hann window.
///
/// The signal is zero-padded by window_len/2 on both sides and frame t is
/// centered on sample t*hop, giving ceil(len/hop) frames of
/// window_len/2+1 bins. An empty waveform yields an empty spectrogram.
///
/// Throws InvalidArgument if window_len is not a power of two, if
/// hop is outside [1, window_len], or if any sample is non-finite.
ComplexSpectrogram stft(const Waveform& w, int window_len = kWindowLength,
                        int hop = kHopLength);

/// Least-squares overlap-add inverse of stft().
///
/// Reconstructs s.length samples. Requires hop <= window_len/2 so every
/// output sample is covered by a non-vanishing window.
Waveform istft(const ComplexSpectrogram& s);

/// Elementwise |X|.
MagSpectrogram magnitude(const ComplexSpectrogram& s);

/// |stft(w)| with the canonical framing unless overridden.
MagSpectrogram magnitude_stft(const Waveform& w, int window_len = kWindowLength,
                              int hop = kHopLength);

}  // namespace nvsr
