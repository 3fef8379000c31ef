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

#include "nvsr/iir.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "nvsr/errors.hpp"

namespace nvsr {

std::complex<double> SosFilter::response(double freq_hz, double sample_rate) const {
  const double omega = 2.0 * std::numbers::pi * freq_hz / sample_rate;
  const std::complex<double> z1 = std::polar(1.0, -omega);
  const std::complex<double> z2 = z1 * z1;
  std::complex<double> h = 1.0;
  for (const Biquad& s : sections_) {
    h *= (s.b0 + s.b1 * z1 + s.b2 * z2) / (1.0 + s.a1 * z1 + s.a2 * z2);
  }
  return h;
}

std::vector<double> SosFilter::filter(std::span<const double> x) const {
  std::vector<double> y(x.begin(), x.end());
  for (const Biquad& s : sections_) {
    double z1 = 0.0, z2 = 0.0;
    for (double& v : y) {
      const double in = v;
      const double out = s.b0 * in + z1;
      z1 = s.b1 * in - s.a1 * out + z2;
      z2 = s.b2 * in - s.a2 * out;
      v = out;
    }
  }
  return y;
}

std::vector<double> SosFilter::filter_zero_phase(std::span<const double> x) const {
  std::vector<double> y = filter(x);
  std::reverse(y.begin(), y.end());
  y = filter(y);
  std::reverse(y.begin(), y.end());
  return y;
}

SosFilter design_cheby1_lowpass(int order, double ripple_db, double cutoff_hz,
                                double sample_rate) {
  if (order < 1) throw InvalidArgument("filter order must be >= 1");
  if (!(ripple_db > 0.0)) throw InvalidArgument("passband ripple must be positive");
  if (!(sample_rate > 0.0)) throw InvalidArgument("sample rate must be positive");
  if (!(cutoff_hz > 0.0 && cutoff_hz < sample_rate / 2.0)) {
    throw InvalidArgument("cutoff " + std::to_string(cutoff_hz) +
                          " Hz must lie strictly between 0 and Nyquist (" +
                          std::to_string(sample_rate / 2.0) + " Hz)");
  }

  // Analog prototype with passband edge at 1 rad/s.
  const double eps = std::sqrt(std::pow(10.0, ripple_db / 10.0) - 1.0);
  const double mu = std::asinh(1.0 / eps) / order;
  const double fs2 = 2.0 * sample_rate;
  const double warped = fs2 * std::tan(std::numbers::pi * cutoff_hz / sample_rate);

  std::vector<std::complex<double>> digital_poles;
  for (int k = 1; k <= order; ++k) {
    const double theta = std::numbers::pi * (2.0 * k - 1.0) / (2.0 * order);
    const std::complex<double> analog(-std::sinh(mu) * std::sin(theta),
                                      std::cosh(mu) * std::cos(theta));
    const std::complex<double> p = analog * warped;
    digital_poles.push_back((fs2 + p) / (fs2 - p));
  }

  // Each section gets unit DC gain; the prototype's DC gain (1 for odd
  // orders, the ripple floor for even ones) goes into the first section.
  std::vector<Biquad> sections;
  for (const auto& p : digital_poles) {
    if (p.imag() > 1e-12) {
      Biquad s{1.0, 2.0, 1.0, -2.0 * p.real(), std::norm(p)};
      const double g = (1.0 + s.a1 + s.a2) / 4.0;
      s.b0 *= g;
      s.b1 *= g;
      s.b2 *= g;
      sections.push_back(s);
    } else if (std::abs(p.imag()) <= 1e-12) {
      Biquad s{1.0, 1.0, 0.0, -p.real(), 0.0};
      const double g = (1.0 + s.a1) / 2.0;
      s.b0 *= g;
      s.b1 *= g;
      sections.insert(sections.begin(), s);
    }
  }
  const double dc_gain = (order % 2 == 0) ? 1.0 / std::sqrt(1.0 + eps * eps) : 1.0;
  sections.front().b0 *= dc_gain;
  sections.front().b1 *= dc_gain;
  sections.front().b2 *= dc_gain;
  return SosFilter(std::move(sections));
}

}  // namespace nvsr
