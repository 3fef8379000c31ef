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

#include "nvsr/pipeline.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "nvsr/errors.hpp"
#include "nvsr/resample.hpp"
#include "nvsr/stft.hpp"

namespace nvsr {
namespace {

constexpr int kMinInputRate = 2000;

std::unique_ptr<MelPredictor> make_predictor(const PipelineConfig& cfg) {
  switch (cfg.predictor) {
    case PredictorKind::kPad:
      return std::make_unique<PadPredictor>(-1, cfg.cutoff_detection);
    case PredictorKind::kNone:
      return std::make_unique<IdentityPredictor>();
    case PredictorKind::kExternal: {
      std::filesystem::path dir = cfg.exchange_dir;
      if (dir.empty()) {
        if (const char* env = std::getenv("NVSR_EXCHANGE_DIR")) dir = env;
      }
      if (dir.empty()) {
        throw InvalidArgument(
            "external predictor needs an exchange directory (NVSR_EXCHANGE_DIR)");
      }
      return std::make_unique<ExternalPredictor>(dir, cfg.exchange);
    }
  }
  throw InvalidArgument("unknown predictor kind");
}

Waveform fit_length(Waveform w, std::size_t length) {
  w.samples.resize(length, 0.0);
  return w;
}

}  // namespace

PredictorKind parse_predictor(const std::string& name) {
  if (name == "pad") return PredictorKind::kPad;
  if (name == "external") return PredictorKind::kExternal;
  if (name == "none") return PredictorKind::kNone;
  throw InvalidArgument("unknown predictor '" + name + "' (pad, external, none)");
}

std::string to_string(PredictorKind kind) {
  switch (kind) {
    case PredictorKind::kPad:
      return "pad";
    case PredictorKind::kExternal:
      return "external";
    case PredictorKind::kNone:
      return "none";
  }
  return "?";
}

Waveform lfr_postprocess(const Waveform& vocoder_out, const Waveform& original,
                         double cutoff_hz, const LfrOptions& opts) {
  if (vocoder_out.sample_rate != original.sample_rate) {
    throw InvalidArgument("replacement needs equal rates, got " +
                          std::to_string(vocoder_out.sample_rate) + " and " +
                          std::to_string(original.sample_rate));
  }
  const double nyquist = original.sample_rate / 2.0;
  if (!(cutoff_hz > 0.0 && cutoff_hz <= nyquist)) {
    throw InvalidArgument("replacement cutoff " + std::to_string(cutoff_hz) +
                          " Hz outside (0, " + std::to_string(nyquist) + "]");
  }
  const Waveform aligned = fit_length(vocoder_out, original.size());
  const ComplexSpectrogram low = stft(original);
  ComplexSpectrogram mixed = stft(aligned);

  const Framing& f = mixed.framing;
  const int bins = f.bins();
  int boundary = bins;  // first bin taken from the vocoder
  if (cutoff_hz < nyquist) {
    boundary = 0;
    while (boundary < bins && f.bin_hz(boundary) < cutoff_hz) ++boundary;
  }
  mixed.bins.leftCols(boundary) = low.bins.leftCols(boundary);
  if (opts.crossfade) {
    constexpr int kFadeBins = 3;
    for (int j = 0; j < kFadeBins && boundary + j < bins; ++j) {
      const double keep = 1.0 - (j + 1.0) / (kFadeBins + 1.0);
      mixed.bins.col(boundary + j) =
          keep * low.bins.col(boundary + j) + (1.0 - keep) * mixed.bins.col(boundary + j);
    }
  }
  return istft(mixed);
}

Pipeline::Pipeline(PipelineConfig cfg)
    : cfg_(std::move(cfg)), fb_(&canonical_filterbank()) {
  validate(cfg_.vocoder);
  validate(cfg_.cutoff_detection);
  predictor_ = make_predictor(cfg_);
  vocoder_ = std::make_unique<GriffinLimVocoder>(cfg_.vocoder, fb_);
}

Pipeline::Pipeline(PipelineConfig cfg, std::unique_ptr<MelPredictor> predictor,
                   std::unique_ptr<Vocoder> vocoder)
    : cfg_(std::move(cfg)),
      fb_(&canonical_filterbank()),
      predictor_(std::move(predictor)),
      vocoder_(std::move(vocoder)) {
  if (!predictor_ || !vocoder_) throw InvalidArgument("pipeline needs a predictor and a vocoder");
}

Waveform Pipeline::resynthesize(const MelSpectrogram& mel, const Waveform& upsampled_input,
                                double cutoff_hz) const {
  Waveform y = fit_length(vocoder_->synthesize(mel), upsampled_input.size());
  if (y.sample_rate != upsampled_input.sample_rate) {
    throw InvalidArgument("vocoder rate does not match the input rate");
  }
  if (cfg_.postprocess && !upsampled_input.empty()) {
    y = lfr_postprocess(y, upsampled_input, cutoff_hz, {cfg_.lfr_crossfade});
  }
  return y;
}

Waveform Pipeline::run(const Waveform& x, PipelineTrace* trace) const {
  validate(x);
  if (x.sample_rate < kMinInputRate) {
    throw InvalidArgument("input rate " + std::to_string(x.sample_rate) +
                          " Hz is below the supported minimum of 2 kHz");
  }
  if (x.duration_seconds() > cfg_.max_input_seconds) {
    throw InvalidArgument("input is " + std::to_string(x.duration_seconds()) +
                          " s long, above the cap of " +
                          std::to_string(cfg_.max_input_seconds) + " s");
  }
  const int rate = fb_->sample_rate;
  if (x.empty()) return Waveform{{}, rate};

  const Waveform upsampled = x.sample_rate == rate ? x : resample_poly(x, rate);
  MelSpectrogram mel = mel_spectrogram(upsampled, *fb_);

  const double nyquist = rate / 2.0;
  PipelineTrace local;
  PipelineTrace& t = trace != nullptr ? *trace : local;
  if (cfg_.cutoff_hz || x.sample_rate < rate) {
    t.cutoff_hz = cfg_.cutoff_hz ? *cfg_.cutoff_hz : x.sample_rate / 2.0;
    if (!(t.cutoff_hz > 0.0)) throw InvalidArgument("cutoff must be positive");
    t.cutoff_hz = std::min(t.cutoff_hz, nyquist);
    t.cutoff_band = fb_->last_band_below(t.cutoff_hz);
    t.cutoff_detected = false;
  } else {
    const CutoffDetection d = detect_cutoff(mel, cfg_.cutoff_detection);
    t.cutoff_band = d.band;
    t.cutoff_hz = d.band == fb_->n_mels() - 1 ? nyquist : fb_->center_hz(d.band);
    t.cutoff_detected = true;
  }

  MelSpectrogram predicted = predictor_->predict(mel, {t.cutoff_band});
  Waveform y = resynthesize(predicted, upsampled, t.cutoff_hz);
  if (trace != nullptr) {
    t.input_mel = std::move(mel);
    t.predicted_mel = std::move(predicted);
  }
  return y;
}

Waveform nvsr(const Waveform& x, const PipelineConfig& cfg) {
  return Pipeline(cfg).run(x);
}

}  // namespace nvsr
