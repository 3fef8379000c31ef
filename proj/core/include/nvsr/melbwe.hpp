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

#include <chrono>
#include <filesystem>
#include <memory>
#include <string>

#include "nvsr/mel.hpp"
#include "nvsr/types.hpp"

namespace nvsr {

inline constexpr double kDefaultCutoffThresholdDb = 40.0;

struct CutoffOptions {
  double threshold_db = kDefaultCutoffThresholdDb;
  // Refinement: the cutoff is the highest band at or below the coarse edge
  // whose level is within knee_db of the mean level of reference_width
  // bands centred reference_offset bands below the edge. knee_db <= 0
  // disables refinement.
  double knee_db = 12.0;
  int reference_offset = 7;
  int reference_width = 5;
};

void validate(const CutoffOptions& opts);

struct CutoffDetection {
  int band = 0;
  int coarse_band = 0;  // highest band within threshold_db of the peak
  bool silent = false;  // input had no energy; band is F-1
};

/// Cutoff band of a band-limited linear mel spectrogram.
///
/// Levels are the time-averaged band energies in dB relative to the loudest
/// band. The coarse edge is the highest band within threshold_db of that
/// peak. If the edge is the top band the input is treated as full band.
/// Otherwise the result moves down to the highest band no more than knee_db
/// below the local in-band reference level, which places it at the start of
/// the roll-off instead of deep in the stopband.
///
/// Every step is relative, so scaling the input by a positive constant does
/// not move the result. All-zero input returns F-1 with `silent` set and
/// emits a warning. Throws InvalidArgument on log-scale or frameless input.
CutoffDetection detect_cutoff(const MelSpectrogram& x, const CutoffOptions& opts = {});

/// Binary T x F mask, ones for bands <= cutoff_band.
struct CutoffMask {
  int cutoff_band = 0;
  RealMatrix mask;
};

/// Throws InvalidArgument if cutoff_band is outside [0, F).
CutoffMask build_mask(int cutoff_band, Eigen::Index frames, Eigen::Index n_mels);

/// Replication padding:
///   Y = M (*) X + |1 - M| (*) (X[:, c] * 1_{1xF})
/// Bands up to c are copied, every band above c repeats band c of the
/// same frame. Throws ShapeMismatch if mask and input disagree.
MelSpectrogram pad_predict(const MelSpectrogram& x, const CutoffMask& mask);

/// Side information a caller may pass to a predictor.
struct PredictionContext {
  int cutoff_band = -1;  // known cutoff band, -1 when unknown
};

/// Maps linear mel input to a full-band estimate of the same shape.
class MelPredictor {
 public:
  virtual ~MelPredictor() = default;
  virtual MelSpectrogram predict(const MelSpectrogram& x,
                                 const PredictionContext& ctx) const = 0;
  virtual std::string name() const = 0;

  MelSpectrogram predict(const MelSpectrogram& x) const { return predict(x, {}); }
};

/// Returns its input (the "no mel prediction" ablation).
class IdentityPredictor final : public MelPredictor {
 public:
  using MelPredictor::predict;
  MelSpectrogram predict(const MelSpectrogram& x,
                         const PredictionContext&) const override {
    return x;
  }
  std::string name() const override { return "none"; }
};

/// Replication padding above a fixed band. Without a fixed band it uses
/// the context's band, and detects the cutoff when neither is known.
class PadPredictor final : public MelPredictor {
 public:
  explicit PadPredictor(int cutoff_band = -1, CutoffOptions detection = {})
      : cutoff_band_(cutoff_band), detection_(detection) {}

  using MelPredictor::predict;
  MelSpectrogram predict(const MelSpectrogram& x,
                         const PredictionContext& ctx) const override;
  std::string name() const override { return "pad"; }

 private:
  int cutoff_band_;
  CutoffOptions detection_;
};

struct ExchangeOptions {
  std::chrono::milliseconds timeout{30000};
  std::chrono::milliseconds poll_interval{5};
  MelScale request_scale = MelScale::kLinear;
};

/// Sends x to an external predictor through `exchange_dir`: writes
/// request.melf, waits for response.melf to be renamed into place, reads it
/// and removes both files. The response is returned in linear scale.
///
/// Throws ExchangeTimeout if no response appears in time, MalformedFile if
/// the response cannot be parsed, ShapeMismatch if its T or F differ from
/// the request, and IoError if the directory is unusable.
MelSpectrogram external_predict(const MelSpectrogram& x,
                                const std::filesystem::path& exchange_dir,
                                const ExchangeOptions& opts = {});

class ExternalPredictor final : public MelPredictor {
 public:
  explicit ExternalPredictor(std::filesystem::path exchange_dir,
                             ExchangeOptions opts = {})
      : dir_(std::move(exchange_dir)), opts_(opts) {}

  using MelPredictor::predict;
  MelSpectrogram predict(const MelSpectrogram& x,
                         const PredictionContext&) const override {
    return external_predict(x, dir_, opts_);
  }
  std::string name() const override { return "external"; }

 private:
  std::filesystem::path dir_;
  ExchangeOptions opts_;
};

}  // namespace nvsr
