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

#include "nvsr/degrade.hpp"

#include <string>

#include "nvsr/errors.hpp"
#include "nvsr/resample.hpp"

namespace nvsr {

void validate(const DegradeSpec& spec) {
  if (spec.target_rate <= 0 || spec.source_rate <= 0) {
    throw InvalidArgument("degrade rates must be positive");
  }
  if (spec.target_rate >= spec.source_rate) {
    throw InvalidArgument("target rate " + std::to_string(spec.target_rate) +
                          " must be below source rate " +
                          std::to_string(spec.source_rate));
  }
  if (spec.filter_order < 1) throw InvalidArgument("filter order must be >= 1");
  if (!(spec.passband_ripple_db > 0.0)) {
    throw InvalidArgument("passband ripple must be positive");
  }
}

Waveform cheby1_lowpass(const Waveform& w, double cutoff_hz, int order,
                        double ripple_db, bool zero_phase) {
  validate(w);
  const SosFilter sos = design_cheby1_lowpass(order, ripple_db, cutoff_hz, w.sample_rate);
  Waveform out;
  out.sample_rate = w.sample_rate;
  out.samples = zero_phase ? sos.filter_zero_phase(w.samples) : sos.filter(w.samples);
  return out;
}

LowResPair simulate_lr(const Waveform& target, const DegradeSpec& spec) {
  validate(spec);
  validate(target);
  if (target.sample_rate != spec.source_rate) {
    throw InvalidArgument("input rate " + std::to_string(target.sample_rate) +
                          " does not match degrade source rate " +
                          std::to_string(spec.source_rate));
  }
  const Waveform filtered =
      cheby1_lowpass(target, spec.target_rate / 2.0, spec.filter_order,
                     spec.passband_ripple_db, spec.zero_phase);
  LowResPair pair;
  pair.low = resample_poly(filtered, spec.target_rate);
  pair.upsampled = resample_poly(pair.low, spec.source_rate);
  pair.upsampled.samples.resize(target.size(), 0.0);
  return pair;
}

}  // namespace nvsr
