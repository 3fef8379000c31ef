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
#include <memory>
#include <optional>
#include <string>

#include "nvsr/mel.hpp"
#include "nvsr/melbwe.hpp"
#include "nvsr/types.hpp"
#include "nvsr/vocoder.hpp"

namespace nvsr {

enum class PredictorKind { kPad, kExternal, kNone };

PredictorKind parse_predictor(const std::string& name);
std::string to_string(PredictorKind kind);

struct PipelineConfig {
  PredictorKind predictor = PredictorKind::kPad;
  VocoderConfig vocoder;
  bool postprocess = true;
  // Forces the cutoff used by padding and replacement. Otherwise a known
  // input rate below 44.1 kHz gives rate/2 and anything else is detected.
  std::optional<double> cutoff_hz;
  CutoffOptions cutoff_detection;
  bool lfr_crossfade = false;
  double max_input_seconds = 600.0;
  std::filesystem::path exchange_dir;
  ExchangeOptions exchange;
};

struct LfrOptions {
  // Linear 3-bin crossfade above the boundary instead of a hard switch.
  bool crossfade = false;
};

/// Lower-frequencies replacement. STFT bins strictly below cutoff_hz are
/// taken from `original`, the rest from `vocoder_out`, and the result is
/// resynthesized with the inverse STFT. The vocoder output is trimmed or
/// zero-padded to the original's length first. A cutoff equal to the
/// Nyquist frequency replaces every bin.
///
/// Throws InvalidArgument if the rates differ or cutoff is not in
/// (0, Nyquist].
Waveform lfr_postprocess(const Waveform& vocoder_out, const Waveform& original,
                         double cutoff_hz, const LfrOptions& opts = {});

/// Per-utterance side information from a pipeline run.
struct PipelineTrace {
  double cutoff_hz = 0.0;
  int cutoff_band = 0;
  bool cutoff_detected = false;
  MelSpectrogram input_mel;
  MelSpectrogram predicted_mel;
};

/// Mel prediction, vocoding and optional replacement post-processing.
/// Stateless per call and safe to share across threads as long as the
/// predictor and vocoder are.
class Pipeline {
 public:
  explicit Pipeline(PipelineConfig cfg);
  Pipeline(PipelineConfig cfg, std::unique_ptr<MelPredictor> predictor,
           std::unique_ptr<Vocoder> vocoder);

  /// Super-resolves x (any rate >= 2 kHz) to 44.1 kHz.
  Waveform run(const Waveform& x, PipelineTrace* trace = nullptr) const;

  /// Vocodes a given mel (for example the target's) and applies the
  /// configured post-processing against the upsampled input.
  Waveform resynthesize(const MelSpectrogram& mel, const Waveform& upsampled_input,
                        double cutoff_hz) const;

  const PipelineConfig& config() const { return cfg_; }
  const MelFilterbank& filterbank() const { return *fb_; }
  const Vocoder& vocoder() const { return *vocoder_; }
  const MelPredictor& predictor() const { return *predictor_; }

 private:
  PipelineConfig cfg_;
  const MelFilterbank* fb_;
  std::unique_ptr<MelPredictor> predictor_;
  std::unique_ptr<Vocoder> vocoder_;
};

/// Pipeline(cfg).run(x).
Waveform nvsr(const Waveform& x, const PipelineConfig& cfg = {});

}  // namespace nvsr
