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

#include <cmath>
#include <string>

#include "nvsr/errors.hpp"
#include "nvsr/types.hpp"

namespace nvsr {

void validate(const Waveform& w) {
  if (w.sample_rate <= 0) {
    throw InvalidArgument("waveform sample rate must be positive, got " +
                          std::to_string(w.sample_rate));
  }
  for (std::size_t i = 0; i < w.samples.size(); ++i) {
    if (!std::isfinite(w.samples[i])) {
      throw InvalidArgument("waveform sample " + std::to_string(i) +
                            " is not finite");
    }
  }
}

MelSpectrogram to_log(const MelSpectrogram& m) {
  if (m.scale == MelScale::kLog) return m;
  MelSpectrogram out = m;
  out.energies = (m.energies.array() + kLogMelEpsilon).log().matrix();
  out.scale = MelScale::kLog;
  return out;
}

MelSpectrogram to_linear(const MelSpectrogram& m) {
  if (m.scale == MelScale::kLinear) return m;
  MelSpectrogram out = m;
  out.energies =
      (m.energies.array().exp() - kLogMelEpsilon).cwiseMax(0.0).matrix();
  out.scale = MelScale::kLinear;
  return out;
}

}  // namespace nvsr
