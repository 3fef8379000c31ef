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

#include "nvsr/stft.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "nvsr/errors.hpp"

namespace nvsr {
namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

std::vector<double> hann_window(int length) {
  std::vector<double> w(length);
  for (int n = 0; n < length; ++n) {
    w[n] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * n / length);
  }
  return w;
}

ComplexSpectrogram stft(const Waveform& w, int window_len, int hop) {
  validate(w);
  if (!is_power_of_two(window_len) || window_len < 2) {
    throw InvalidArgument("window length must be a power of two, got " +
                          std::to_string(window_len));
  }
  if (hop < 1 || hop > window_len) {
    throw InvalidArgument("hop must be in [1, window_len], got " +
                          std::to_string(hop));
  }

  ComplexSpectrogram s;
  s.framing = {window_len, hop, w.sample_rate};
  s.length = w.size();
  const auto len = static_cast<Eigen::Index>(w.size());
  const Eigen::Index frames = (len + hop - 1) / hop;
  const int bins = window_len / 2 + 1;
  s.bins = ComplexMatrix::Zero(frames, bins);
  if (frames == 0) return s;

  const detail::RealFft fft(window_len);
  const std::vector<double> window = hann_window(window_len);
  const Eigen::Index half = window_len / 2;
  std::vector<double> frame(window_len);
  for (Eigen::Index t = 0; t < frames; ++t) {
    const Eigen::Index start = t * hop - half;
    for (int n = 0; n < window_len; ++n) {
      const Eigen::Index i = start + n;
      frame[n] = (i >= 0 && i < len) ? w.samples[i] * window[n] : 0.0;
    }
    fft.forward(frame, {s.bins.row(t).data(), static_cast<std::size_t>(bins)});
  }
  return s;
}

Waveform istft(const ComplexSpectrogram& s) {
  const Framing& f = s.framing;
  if (f.sample_rate <= 0) throw InvalidArgument("spectrogram sample rate must be positive");
  if (!is_power_of_two(f.window_len)) {
    throw InvalidArgument("window length must be a power of two");
  }
  if (f.hop < 1 || f.hop > f.window_len / 2) {
    throw InvalidArgument(
        "Hann overlap-add needs 1 <= hop <= window_len/2, got hop " +
        std::to_string(f.hop) + " for window " + std::to_string(f.window_len));
  }
  if (s.bins.cols() != f.bins()) {
    throw ShapeMismatch("spectrogram has " + std::to_string(s.bins.cols()) +
                        " bins, framing implies " + std::to_string(f.bins()));
  }
  if (!s.bins.allFinite()) throw InvalidArgument("spectrogram has non-finite entries");

  Waveform out;
  out.sample_rate = f.sample_rate;
  out.samples.assign(s.length, 0.0);
  const Eigen::Index frames = s.frames();
  if (frames == 0 || s.length == 0) return out;

  const int n = f.window_len;
  const Eigen::Index half = n / 2;
  const detail::RealFft fft(n);
  const std::vector<double> window = hann_window(n);
  const Eigen::Index padded = (frames - 1) * f.hop + n;
  std::vector<double> acc(padded, 0.0);
  std::vector<double> norm(padded, 0.0);
  std::vector<double> frame(n);
  for (Eigen::Index t = 0; t < frames; ++t) {
    fft.inverse({s.bins.row(t).data(), static_cast<std::size_t>(f.bins())}, frame);
    const Eigen::Index start = t * f.hop;
    for (int i = 0; i < n; ++i) {
      acc[start + i] += frame[i] * window[i] / n;
      norm[start + i] += window[i] * window[i];
    }
  }
  const auto len = static_cast<Eigen::Index>(s.length);
  for (Eigen::Index i = 0; i < len; ++i) {
    const Eigen::Index p = i + half;
    if (p < padded && norm[p] > 1e-10) out.samples[i] = acc[p] / norm[p];
  }
  return out;
}

MagSpectrogram magnitude(const ComplexSpectrogram& s) {
  MagSpectrogram m;
  m.mags = s.bins.cwiseAbs();
  m.framing = s.framing;
  m.length = s.length;
  return m;
}

MagSpectrogram magnitude_stft(const Waveform& w, int window_len, int hop) {
  return magnitude(stft(w, window_len, hop));
}

}  // namespace nvsr
