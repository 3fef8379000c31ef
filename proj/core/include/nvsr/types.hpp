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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Core>

namespace nvsr {

using RealMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexMatrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic,
                                    Eigen::Dynamic, Eigen::RowMajor>;

// Reference analysis configuration: 44.1 kHz, Hann 2048 / hop 441, 128 mels.
inline constexpr int kCanonicalRate = 44100;
inline constexpr int kWindowLength = 2048;
inline constexpr int kHopLength = 441;
inline constexpr int kMelBands = 128;

// Offset used by the natural-log mel representation: log(energy + eps).
inline constexpr double kLogMelEpsilon = 1e-8;

/// Mono signal with its sampling rate.
struct Waveform {
  std::vector<double> samples;
  int sample_rate = kCanonicalRate;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  double duration_seconds() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

/// Throws InvalidArgument unless the rate is positive and every sample finite.
void validate(const Waveform& w);

/// STFT framing shared by complex, magnitude and mel spectrograms.
struct Framing {
  int window_len = kWindowLength;
  int hop = kHopLength;
  int sample_rate = kCanonicalRate;

  int bins() const { return window_len / 2 + 1; }
  double bin_hz(int k) const {
    return static_cast<double>(k) * sample_rate / window_len;
  }
  friend bool operator==(const Framing&, const Framing&) = default;
};

/// T x K complex STFT. `length` is the number of waveform samples the
/// frames were computed from; the inverse transform reproduces that length.
struct ComplexSpectrogram {
  ComplexMatrix bins;
  Framing framing;
  std::size_t length = 0;

  Eigen::Index frames() const { return bins.rows(); }
};

/// T x K non-negative magnitudes.
struct MagSpectrogram {
  RealMatrix mags;
  Framing framing;
  std::size_t length = 0;

  Eigen::Index frames() const { return mags.rows(); }
};

enum class MelScale : unsigned char { kLinear = 0, kLog = 1 };

/// T x F mel-band energies, either linear or natural-log (eps offset).
struct MelSpectrogram {
  RealMatrix energies;
  Framing framing;
  MelScale scale = MelScale::kLinear;

  Eigen::Index frames() const { return energies.rows(); }
  Eigen::Index n_mels() const { return energies.cols(); }
};

/// log(m + eps), elementwise. Identity on already-log input.
MelSpectrogram to_log(const MelSpectrogram& m);

/// exp(m) - eps clamped at zero. Identity on already-linear input.
MelSpectrogram to_linear(const MelSpectrogram& m);

}  // namespace nvsr
