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

#include "nvsr/vocoder.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nvsr/errors.hpp"
#include "nvsr/exchange.hpp"
#include "nvsr/melf.hpp"
#include "nvsr/resample.hpp"
#include "nvsr/stft.hpp"
#include "nvsr/wav.hpp"

namespace nvsr {
namespace {

ComplexSpectrogram with_phase(const MagSpectrogram& mag, const ComplexMatrix& phase) {
  ComplexSpectrogram s;
  s.bins = mag.mags.cast<std::complex<double>>().cwiseProduct(phase);
  s.framing = mag.framing;
  s.length = mag.length;
  return s;
}

}  // namespace

void validate(const VocoderConfig& cfg) {
  if (cfg.gl_iterations < 0) throw InvalidArgument("gl_iterations must be >= 0");
  if (!(cfg.momentum >= 0.0 && cfg.momentum < 1.0)) {
    throw InvalidArgument("momentum must lie in [0, 1)");
  }
  if (cfg.output_rate <= 0) throw InvalidArgument("output rate must be positive");
}

double spectral_convergence(const MagSpectrogram& mag, const Waveform& w) {
  const MagSpectrogram est = magnitude_stft(w, mag.framing.window_len, mag.framing.hop);
  if (est.mags.rows() != mag.mags.rows() || est.mags.cols() != mag.mags.cols()) {
    throw ShapeMismatch("waveform framing does not match the target magnitude");
  }
  const double norm = mag.mags.norm();
  if (norm == 0.0) return est.mags.norm() == 0.0 ? 0.0 : INFINITY;
  return (est.mags - mag.mags).norm() / norm;
}

Waveform griffin_lim(const MagSpectrogram& mag, int iterations, double momentum,
                     std::vector<double>* convergence) {
  if (iterations < 0) throw InvalidArgument("iterations must be >= 0");
  if (!(momentum >= 0.0 && momentum < 1.0)) {
    throw InvalidArgument("momentum must lie in [0, 1)");
  }
  if (!mag.mags.allFinite()) throw InvalidArgument("magnitude has non-finite entries");
  if ((mag.mags.array() < 0.0).any()) throw InvalidArgument("magnitude has negative entries");
  const Framing& f = mag.framing;
  const auto expected_frames =
      static_cast<Eigen::Index>((mag.length + f.hop - 1) / f.hop);
  if (expected_frames != mag.frames()) {
    throw ShapeMismatch("magnitude has " + std::to_string(mag.frames()) +
                        " frames but length " + std::to_string(mag.length) +
                        " implies " + std::to_string(expected_frames));
  }

  const double mag_norm = mag.mags.norm();
  const auto track = [&](const ComplexMatrix& rebuilt) {
    if (convergence == nullptr) return;
    const double err = (rebuilt.cwiseAbs() - mag.mags).norm();
    convergence->push_back(mag_norm > 0.0 ? err / mag_norm : err);
  };
  if (convergence != nullptr) convergence->clear();

  ComplexMatrix angles = ComplexMatrix::Ones(mag.frames(), mag.mags.cols());
  ComplexMatrix rebuilt = ComplexMatrix::Zero(mag.frames(), mag.mags.cols());
  const double beta = momentum / (1.0 + momentum);
  for (int it = 0; it < iterations; ++it) {
    const ComplexMatrix previous = rebuilt;
    const Waveform inverse = istft(with_phase(mag, angles));
    rebuilt = stft(inverse, f.window_len, f.hop).bins;
    track(rebuilt);
    angles = rebuilt - beta * previous;
    angles = angles.unaryExpr([](std::complex<double> z) {
      return z / (std::abs(z) + 1e-16);
    });
  }
  Waveform out = istft(with_phase(mag, angles));
  if (convergence != nullptr) track(stft(out, f.window_len, f.hop).bins);
  return out;
}

GriffinLimVocoder::GriffinLimVocoder(VocoderConfig cfg, const MelFilterbank* fb)
    : cfg_(cfg), fb_(fb != nullptr ? fb : &canonical_filterbank()) {
  validate(cfg_);
}

Waveform GriffinLimVocoder::synthesize(const MelSpectrogram& input) const {
  if (!input.energies.allFinite()) throw InvalidArgument("mel has non-finite entries");
  const MelSpectrogram mel = to_linear(input);
  if (mel.framing.window_len != fb_->window_len ||
      mel.framing.sample_rate != fb_->sample_rate) {
    throw InvalidArgument("mel framing does not match the vocoder filterbank");
  }
  const MagSpectrogram mag = mel_pseudo_inverse(mel, *fb_, cfg_.pseudo_inverse);
  Waveform w = griffin_lim(mag, cfg_.gl_iterations, cfg_.momentum);
  double peak = 0.0;
  for (double s : w.samples) peak = std::max(peak, std::abs(s));
  if (peak > kPeakLimit) {
    const double g = kPeakLimit / peak;
    for (double& s : w.samples) s *= g;
  }
  if (w.sample_rate != cfg_.output_rate) w = resample_poly(w, cfg_.output_rate);
  return w;
}

Waveform ExternalVocoder::synthesize(const MelSpectrogram& mel) const {
  if (!mel.energies.allFinite()) throw InvalidArgument("mel has non-finite entries");
  prepare_exchange_dir(dir_);
  const auto request = dir_ / kRequestFile;
  const auto response = dir_ / kResponseWavFile;
  std::error_code ec;
  std::filesystem::remove(response, ec);
  write_melf_atomic(request, opts_.request_scale == MelScale::kLog ? to_log(mel)
                                                                   : to_linear(mel));
  if (!wait_for_file(response, opts_.timeout, opts_.poll_interval)) {
    std::filesystem::remove(request, ec);
    throw ExchangeTimeout("no vocoder response in " + dir_.string());
  }
  Waveform w;
  try {
    w = read_wav(response);
  } catch (...) {
    std::filesystem::remove(response, ec);
    std::filesystem::remove(request, ec);
    throw;
  }
  std::filesystem::remove(response, ec);
  std::filesystem::remove(request, ec);
  return w;
}

Waveform synthesize(const MelSpectrogram& m, const VocoderConfig& cfg) {
  return GriffinLimVocoder(cfg).synthesize(m);
}

}  // namespace nvsr
