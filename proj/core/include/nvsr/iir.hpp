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
#include <span>
#include <vector>

namespace nvsr {

/// Normalized second-order section, a0 == 1.
struct Biquad {
  double b0 = 1.0, b1 = 0.0, b2 = 0.0;
  double a1 = 0.0, a2 = 0.0;
};

/// Cascade of biquads. The overall gain is folded into the first section.
class SosFilter {
 public:
  SosFilter() = default;
  explicit SosFilter(std::vector<Biquad> sections)
      : sections_(std::move(sections)) {}

  const std::vector<Biquad>& sections() const { return sections_; }

  /// Complex response H(e^{jw}) at the given frequency.
  std::complex<double> response(double freq_hz, double sample_rate) const;

  /// Causal filtering from zero initial state (transposed direct form II).
  std::vector<double> filter(std::span<const double> x) const;

  /// Forward-backward filtering; squares the magnitude response and
  /// cancels the phase.
  std::vector<double> filter_zero_phase(std::span<const double> x) const;

 private:
  std::vector<Biquad> sections_;
};

/// Chebyshev type I lowpass via the analog prototype and the bilinear
/// transform with frequency prewarping. `cutoff_hz` is the passband edge,
/// where the gain equals -ripple_db. Throws InvalidArgument unless
/// 0 < cutoff < sample_rate/2, order >= 1 and ripple_db > 0.
SosFilter design_cheby1_lowpass(int order, double ripple_db, double cutoff_hz,
                                double sample_rate);

}  // namespace nvsr
