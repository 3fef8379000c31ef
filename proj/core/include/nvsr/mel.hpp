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

#include <Eigen/SparseCore>

#include "nvsr/types.hpp"

namespace nvsr {

/// HTK mel scale, m = 2595 log10(1 + f/700). Rejects negative input.
double hz_to_mel(double hz);
/// Inverse of hz_to_mel.
double mel_to_hz(double mel);

/// Triangular mel filterbank W (K x F).
///
/// Band f rises linearly from edge f to its peak at center f and falls to
/// zero at edge f+2, with n_mels+2 edges equally spaced on the mel axis
/// between f_min and f_max. Peaks are 1 unless area normalization is on,
/// in which case each triangle is scaled by 2 / (upper - lower edge).
struct MelFilterbank {
  RealMatrix weights;                       // K x F, dense
  Eigen::SparseMatrix<double> sparse;       // same values, for products
  std::vector<double> edges_hz;             // F + 2 triangle edges
  int sample_rate = kCanonicalRate;
  int window_len = kWindowLength;
  double f_min = 0.0;
  double f_max = kCanonicalRate / 2.0;

  Eigen::Index bins() const { return weights.rows(); }
  Eigen::Index n_mels() const { return weights.cols(); }

  double center_hz(int band) const { return edges_hz[band + 1]; }
  double lower_hz(int band) const { return edges_hz[band]; }
  double upper_hz(int band) const { return edges_hz[band + 2]; }

  /// Band whose center frequency is nearest to hz.
  int band_nearest(double hz) const;
  /// Highest band whose whole triangle lies at or below hz (0 if none).
  int last_band_below(double hz) const;
};

struct FilterbankOptions {
  int sample_rate = kCanonicalRate;
  int window_len = kWindowLength;
  int n_mels = kMelBands;
  double f_min = 0.0;
  double f_max = kCanonicalRate / 2.0;
  bool area_normalize = false;
};

/// Throws InvalidArgument if the frequency range is invalid, n_mels < 2,
/// or any band ends up without a single nonzero weight (too many bands
/// for the available bins).
MelFilterbank build_filterbank(const FilterbankOptions& opts = {});

/// The 44.1 kHz / 2048 / 128-band filterbank, built once and shared.
const MelFilterbank& canonical_filterbank();

/// energies = mags * W, linear scale. Throws ShapeMismatch on K mismatch.
MelSpectrogram mel_transform(const MagSpectrogram& s, const MelFilterbank& fb);

struct PseudoInverseOptions {
  int max_iterations = 200;
  double tolerance = 1e-8;  // relative change of the squared residual
};

/// Non-negative least-squares estimate of magnitudes whose mel transform
/// matches m. Initialized with the area-normalized transpose and refined
/// with multiplicative updates. Log-scale input is converted to linear.
MagSpectrogram mel_pseudo_inverse(const MelSpectrogram& m, const MelFilterbank& fb,
                                  const PseudoInverseOptions& opts = {});

/// Linear mel spectrogram of a waveform: mel_transform(|stft(w)|) using
/// the filterbank's window length. The waveform rate must match.
MelSpectrogram mel_spectrogram(const Waveform& w, const MelFilterbank& fb,
                               int hop = kHopLength);

}  // namespace nvsr
