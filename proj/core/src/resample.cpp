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

#include "nvsr/resample.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "nvsr/errors.hpp"

namespace nvsr {
namespace {

constexpr double kKaiserBeta = 5.0;
constexpr int kZeroCrossings = 10;

double sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

}  // namespace

ResampleRatio resample_ratio(int source_rate, int target_rate) {
  if (source_rate <= 0 || target_rate <= 0) {
    throw InvalidArgument("sample rates must be positive");
  }
  const int g = std::gcd(source_rate, target_rate);
  ResampleRatio r{target_rate / g, source_rate / g};
  if (r.up > kMaxResampleFactor || r.down > kMaxResampleFactor) {
    throw InvalidArgument("rate ratio " + std::to_string(target_rate) + "/" +
                          std::to_string(source_rate) + " reduces to " +
                          std::to_string(r.up) + "/" + std::to_string(r.down) +
                          ", beyond the supported factor " +
                          std::to_string(kMaxResampleFactor));
  }
  return r;
}

std::vector<double> polyphase_filter(const ResampleRatio& ratio) {
  const int max_rate = std::max(ratio.up, ratio.down);
  const int half_len = kZeroCrossings * max_rate;
  const int taps = 2 * half_len + 1;
  const double cutoff = 1.0 / max_rate;  // relative to the upsampled Nyquist
  const double i0_beta = std::cyl_bessel_i(0.0, kKaiserBeta);

  std::vector<double> h(taps);
  double sum = 0.0;
  for (int n = 0; n < taps; ++n) {
    const double m = n - half_len;
    const double r = m / half_len;
    const double window =
        std::cyl_bessel_i(0.0, kKaiserBeta * std::sqrt(std::max(0.0, 1.0 - r * r))) /
        i0_beta;
    h[n] = cutoff * sinc(cutoff * m) * window;
    sum += h[n];
  }
  for (double& v : h) v *= ratio.up / sum;
  return h;
}

Waveform resample_poly(const Waveform& w, int target_rate) {
  validate(w);
  const ResampleRatio ratio = resample_ratio(w.sample_rate, target_rate);
  if (ratio.up == ratio.down) return w;

  const std::vector<double> h = polyphase_filter(ratio);
  const auto taps = static_cast<long long>(h.size());
  const long long half_len = (taps - 1) / 2;
  const auto len = static_cast<long long>(w.size());
  const long long up = ratio.up;
  const long long down = ratio.down;
  const long long out_len = (len * up + down / 2) / down;

  Waveform out;
  out.sample_rate = target_rate;
  out.samples.assign(static_cast<std::size_t>(out_len), 0.0);
  for (long long j = 0; j < out_len; ++j) {
    // Output j sits at upsampled position j*down; input n at n*up, and the
    // filter tap for that pair is j*down - n*up + half_len.
    const long long pos = j * down + half_len;
    long long n_hi = pos / up;
    long long n_lo = pos - (taps - 1) <= 0 ? 0 : (pos - (taps - 1) + up - 1) / up;
    if (n_hi >= len) n_hi = len - 1;
    double acc = 0.0;
    for (long long n = n_lo; n <= n_hi; ++n) {
      acc += w.samples[static_cast<std::size_t>(n)] * h[static_cast<std::size_t>(pos - n * up)];
    }
    out.samples[static_cast<std::size_t>(j)] = acc;
  }
  return out;
}

}  // namespace nvsr
