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

#include "nvsr/lsd.hpp"

#include <cmath>
#include <string>

#include "nvsr/errors.hpp"
#include "nvsr/stft.hpp"

namespace nvsr {

double lsd(const RealMatrix& reference, const RealMatrix& estimate, double floor) {
  if (reference.rows() != estimate.rows() || reference.cols() != estimate.cols()) {
    throw ShapeMismatch("LSD operands are " + std::to_string(reference.rows()) + "x" +
                        std::to_string(reference.cols()) + " and " +
                        std::to_string(estimate.rows()) + "x" +
                        std::to_string(estimate.cols()));
  }
  if (reference.size() == 0) throw InvalidArgument("LSD of an empty spectrogram");
  // log10(Y^2 / Yhat^2) = 2 (log10 Y - log10 Yhat)
  const Eigen::ArrayXXd diff =
      2.0 * (reference.array().max(floor).log10() - estimate.array().max(floor).log10());
  const Eigen::ArrayXd per_frame = diff.square().rowwise().mean().sqrt();
  return per_frame.mean();
}

double lsd(const MagSpectrogram& reference, const MagSpectrogram& estimate, double floor) {
  return lsd(reference.mags, estimate.mags, floor);
}

double lsd(const Waveform& reference, const Waveform& estimate) {
  if (reference.sample_rate != estimate.sample_rate) {
    throw InvalidArgument("LSD needs equal rates, got " +
                          std::to_string(reference.sample_rate) + " and " +
                          std::to_string(estimate.sample_rate));
  }
  Waveform aligned = estimate;
  aligned.samples.resize(reference.size(), 0.0);
  return lsd(magnitude_stft(reference), magnitude_stft(aligned));
}

}  // namespace nvsr
