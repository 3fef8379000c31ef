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

#include "nvsr/mel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nvsr/errors.hpp"
#include "nvsr/stft.hpp"

namespace nvsr {

double hz_to_mel(double hz) {
  if (!(hz >= 0.0)) {
    throw InvalidArgument("frequency must be non-negative, got " + std::to_string(hz));
  }
  return 2595.0 * std::log10(1.0 + hz / 700.0);
}

double mel_to_hz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

int MelFilterbank::band_nearest(double hz) const {
  int best = 0;
  double best_dist = std::abs(center_hz(0) - hz);
  for (int b = 1; b < n_mels(); ++b) {
    const double d = std::abs(center_hz(b) - hz);
    if (d < best_dist) {
      best = b;
      best_dist = d;
    }
  }
  return best;
}

int MelFilterbank::last_band_below(double hz) const {
  int band = 0;
  for (int b = 0; b < n_mels(); ++b) {
    if (upper_hz(b) <= hz) band = b;
  }
  return band;
}

MelFilterbank build_filterbank(const FilterbankOptions& o) {
  if (o.sample_rate <= 0 || o.window_len < 2) {
    throw InvalidArgument("filterbank needs a positive rate and window length");
  }
  if (!(o.f_min >= 0.0 && o.f_min < o.f_max && o.f_max <= o.sample_rate / 2.0)) {
    throw InvalidArgument("filterbank range must satisfy 0 <= f_min < f_max <= rate/2");
  }
  if (o.n_mels < 2) throw InvalidArgument("filterbank needs at least 2 bands");
  const int bins = o.window_len / 2 + 1;
  if (o.n_mels > bins) {
    throw InvalidArgument(std::to_string(o.n_mels) + " mel bands exceed the " +
                          std::to_string(bins) + " available bins");
  }

  MelFilterbank fb;
  fb.sample_rate = o.sample_rate;
  fb.window_len = o.window_len;
  fb.f_min = o.f_min;
  fb.f_max = o.f_max;

  const double mel_lo = hz_to_mel(o.f_min);
  const double mel_hi = hz_to_mel(o.f_max);
  fb.edges_hz.resize(o.n_mels + 2);
  for (int i = 0; i < o.n_mels + 2; ++i) {
    fb.edges_hz[i] = mel_to_hz(mel_lo + (mel_hi - mel_lo) * i / (o.n_mels + 1));
  }
  fb.edges_hz.front() = o.f_min;
  fb.edges_hz.back() = o.f_max;

  fb.weights = RealMatrix::Zero(bins, o.n_mels);
  for (int band = 0; band < o.n_mels; ++band) {
    const double lo = fb.edges_hz[band];
    const double mid = fb.edges_hz[band + 1];
    const double hi = fb.edges_hz[band + 2];
    const double scale = o.area_normalize ? 2.0 / (hi - lo) : 1.0;
    bool any = false;
    for (int k = 0; k < bins; ++k) {
      const double f = static_cast<double>(k) * o.sample_rate / o.window_len;
      const double rise = (f - lo) / (mid - lo);
      const double fall = (hi - f) / (hi - mid);
      const double w = std::max(0.0, std::min(rise, fall));
      if (w > 0.0) {
        fb.weights(k, band) = w * scale;
        any = true;
      }
    }
    if (!any) {
      throw InvalidArgument("mel band " + std::to_string(band) +
                            " covers no STFT bin; too many bands for " +
                            std::to_string(bins) + " bins");
    }
  }
  fb.sparse = fb.weights.sparseView();
  fb.sparse.makeCompressed();
  return fb;
}

const MelFilterbank& canonical_filterbank() {
  static const MelFilterbank fb = build_filterbank({});
  return fb;
}

MelSpectrogram mel_transform(const MagSpectrogram& s, const MelFilterbank& fb) {
  if (s.mags.cols() != fb.bins()) {
    throw ShapeMismatch("magnitude has " + std::to_string(s.mags.cols()) +
                        " bins, filterbank expects " + std::to_string(fb.bins()));
  }
  MelSpectrogram m;
  m.energies = s.mags * fb.sparse;
  m.framing = s.framing;
  m.scale = MelScale::kLinear;
  return m;
}

MagSpectrogram mel_pseudo_inverse(const MelSpectrogram& input, const MelFilterbank& fb,
                                  const PseudoInverseOptions& opts) {
  const MelSpectrogram m = to_linear(input);
  if (m.n_mels() != fb.n_mels()) {
    throw ShapeMismatch("mel has " + std::to_string(m.n_mels()) +
                        " bands, filterbank has " + std::to_string(fb.n_mels()));
  }
  if (!m.energies.allFinite()) throw InvalidArgument("mel has non-finite entries");

  const Eigen::Index frames = m.frames();
  const RealMatrix target = m.energies.cwiseMax(0.0);

  // Normalized transpose: spread each band's energy uniformly over its
  // triangle, then average the per-band densities seen by each bin.
  Eigen::RowVectorXd area = fb.weights.colwise().sum();
  Eigen::VectorXd coverage = fb.weights.rowwise().sum();
  RealMatrix density = target.array().rowwise() / area.array();
  RealMatrix s = density * fb.sparse.transpose();
  for (Eigen::Index k = 0; k < s.cols(); ++k) {
    if (coverage(k) > 0.0) {
      s.col(k) /= coverage(k);
    } else {
      s.col(k).setZero();
    }
  }

  // Multiplicative updates for min ||S W - M||^2 subject to S >= 0.
  const RealMatrix numerator = target * fb.sparse.transpose();
  constexpr double kTiny = 1e-30;
  double previous = (s * fb.sparse - target).squaredNorm();
  for (int it = 0; it < opts.max_iterations && previous > 0.0; ++it) {
    const RealMatrix denominator = (s * fb.sparse) * fb.sparse.transpose();
    s = s.cwiseProduct(numerator).cwiseQuotient(
        denominator.unaryExpr([](double d) { return d + kTiny; }));
    const double current = (s * fb.sparse - target).squaredNorm();
    const double change = std::abs(previous - current) / std::max(previous, kTiny);
    previous = current;
    if (change < opts.tolerance) break;
  }

  MagSpectrogram out;
  out.mags = s.cwiseMax(0.0);
  out.framing = m.framing;
  out.length = static_cast<std::size_t>(frames) * m.framing.hop;
  return out;
}

MelSpectrogram mel_spectrogram(const Waveform& w, const MelFilterbank& fb, int hop) {
  if (w.sample_rate != fb.sample_rate) {
    throw InvalidArgument("waveform rate " + std::to_string(w.sample_rate) +
                          " does not match filterbank rate " +
                          std::to_string(fb.sample_rate));
  }
  return mel_transform(magnitude_stft(w, fb.window_len, hop), fb);
}

}  // namespace nvsr
