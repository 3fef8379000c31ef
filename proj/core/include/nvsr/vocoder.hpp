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

#include <filesystem>
#include <string>
#include <vector>

#include "nvsr/mel.hpp"
#include "nvsr/melbwe.hpp"
#include "nvsr/types.hpp"

namespace nvsr {

struct VocoderConfig {
  int gl_iterations = 32;
  double momentum = 0.99;
  int output_rate = kCanonicalRate;
  PseudoInverseOptions pseudo_inverse;
};

void validate(const VocoderConfig& cfg);

/// Fast Griffin-Lim phase reconstruction from zero initial phase.
///
/// Each iteration projects onto consistent spectrograms (iSTFT then STFT)
/// and extrapolates by `momentum`. With zero iterations the result is the
/// zero-phase inverse. When `convergence` is non-null it receives
/// iterations+1 spectral convergence values, the first for the initial
/// estimate.
Waveform griffin_lim(const MagSpectrogram& mag, int iterations, double momentum,
                     std::vector<double>* convergence = nullptr);

/// || |stft(w)| - mag ||_F / ||mag||_F with the magnitude's framing.
double spectral_convergence(const MagSpectrogram& mag, const Waveform& w);

enum VocoderCapability : unsigned {
  kDeterministic = 1u << 0,
  kExternalProcess = 1u << 1,
  kLearned = 1u << 2,
};

/// Mel to waveform synthesis.
class Vocoder {
 public:
  virtual ~Vocoder() = default;
  virtual Waveform synthesize(const MelSpectrogram& mel) const = 0;
  virtual std::string name() const = 0;
  virtual unsigned capabilities() const = 0;
};

/// Reference vocoder: NNLS mel inversion followed by fast Griffin-Lim.
/// Output peaks are scaled down to at most kPeakLimit.
class GriffinLimVocoder final : public Vocoder {
 public:
  static constexpr double kPeakLimit = 0.999;

  explicit GriffinLimVocoder(VocoderConfig cfg = {},
                             const MelFilterbank* fb = nullptr);

  Waveform synthesize(const MelSpectrogram& mel) const override;
  std::string name() const override { return "griffin-lim"; }
  unsigned capabilities() const override { return kDeterministic; }

  const VocoderConfig& config() const { return cfg_; }

 private:
  VocoderConfig cfg_;
  const MelFilterbank* fb_;
};

/// Bridge to an out-of-process vocoder: writes request.melf and waits for
/// response.wav in the exchange directory.
class ExternalVocoder final : public Vocoder {
 public:
  explicit ExternalVocoder(std::filesystem::path exchange_dir,
                           ExchangeOptions opts = {})
      : dir_(std::move(exchange_dir)), opts_(opts) {}

  Waveform synthesize(const MelSpectrogram& mel) const override;
  std::string name() const override { return "external"; }
  unsigned capabilities() const override { return kExternalProcess | kLearned; }

 private:
  std::filesystem::path dir_;
  ExchangeOptions opts_;
};

/// GriffinLimVocoder(cfg).synthesize(m). Throws InvalidArgument on
/// non-finite mel values or a framing other than the filterbank's.
Waveform synthesize(const MelSpectrogram& m, const VocoderConfig& cfg = {});

}  // namespace nvsr
