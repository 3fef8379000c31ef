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

#include "nvsr/melbwe.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "nvsr/errors.hpp"
#include "nvsr/exchange.hpp"
#include "nvsr/log.hpp"
#include "nvsr/melf.hpp"

namespace nvsr {

void validate(const CutoffOptions& opts) {
  if (!(opts.threshold_db > 0.0) || !std::isfinite(opts.threshold_db)) {
    throw InvalidArgument("cutoff threshold must be a positive number of dB");
  }
  if (!std::isfinite(opts.knee_db)) throw InvalidArgument("knee_db must be finite");
  if (opts.reference_offset < 1 || opts.reference_width < 1) {
    throw InvalidArgument("reference offset and width must be at least 1");
  }
}

CutoffDetection detect_cutoff(const MelSpectrogram& x, const CutoffOptions& opts) {
  validate(opts);
  if (x.scale != MelScale::kLinear) {
    throw InvalidArgument("cutoff detection expects a linear-scale mel");
  }
  if (x.frames() < 1 || x.n_mels() < 1) {
    throw InvalidArgument("cutoff detection needs at least one frame and band");
  }
  const Eigen::RowVectorXd level = x.energies.colwise().mean();
  const double peak = level.maxCoeff();
  const int last = static_cast<int>(x.n_mels()) - 1;
  if (!(peak > 0.0)) {
    warn("cutoff detection on a silent mel spectrogram; assuming full band");
    return {last, last, true};
  }

  std::vector<double> db(level.size());
  for (Eigen::Index f = 0; f < level.size(); ++f) {
    db[f] = 20.0 * std::log10(std::max(level(f) / peak, 1e-300));
  }

  int coarse = 0;
  for (int f = last; f >= 0; --f) {
    if (db[f] >= -opts.threshold_db) {
      coarse = f;
      break;
    }
  }
  if (coarse == last || opts.knee_db <= 0.0) return {coarse, coarse, false};

  const int centre = coarse - opts.reference_offset;
  const int lo = std::max(0, centre - (opts.reference_width - 1) / 2);
  const int hi = std::max(lo, std::min(coarse, centre + opts.reference_width / 2));
  double reference = 0.0;
  for (int f = lo; f <= hi; ++f) reference += db[f];
  reference /= hi - lo + 1;

  for (int f = coarse; f >= 0; --f) {
    if (db[f] >= reference - opts.knee_db) return {f, coarse, false};
  }
  return {coarse, coarse, false};
}

CutoffMask build_mask(int cutoff_band, Eigen::Index frames, Eigen::Index n_mels) {
  if (cutoff_band < 0 || cutoff_band >= n_mels) {
    throw InvalidArgument("cutoff band " + std::to_string(cutoff_band) +
                          " outside [0, " + std::to_string(n_mels) + ")");
  }
  CutoffMask m;
  m.cutoff_band = cutoff_band;
  m.mask = RealMatrix::Zero(frames, n_mels);
  m.mask.leftCols(cutoff_band + 1).setOnes();
  return m;
}

MelSpectrogram pad_predict(const MelSpectrogram& x, const CutoffMask& mask) {
  if (x.scale != MelScale::kLinear) {
    throw InvalidArgument("replication padding expects a linear-scale mel");
  }
  if (mask.mask.rows() != x.frames() || mask.mask.cols() != x.n_mels()) {
    throw ShapeMismatch("mask is " + std::to_string(mask.mask.rows()) + "x" +
                        std::to_string(mask.mask.cols()) + ", mel is " +
                        std::to_string(x.frames()) + "x" + std::to_string(x.n_mels()));
  }
  const int c = mask.cutoff_band;
  if (c < 0 || c >= x.n_mels()) throw InvalidArgument("mask cutoff band out of range");

  MelSpectrogram y = x;
  const auto& M = mask.mask.array();
  const RealMatrix replicated = x.energies.col(c).replicate(1, x.n_mels());
  y.energies = (M * x.energies.array() + (1.0 - M).abs() * replicated.array()).matrix();
  return y;
}

MelSpectrogram PadPredictor::predict(const MelSpectrogram& x,
                                     const PredictionContext& ctx) const {
  int band = cutoff_band_ >= 0 ? cutoff_band_ : ctx.cutoff_band;
  if (band < 0) band = detect_cutoff(x, detection_).band;
  return pad_predict(x, build_mask(band, x.frames(), x.n_mels()));
}

MelSpectrogram external_predict(const MelSpectrogram& x,
                                const std::filesystem::path& exchange_dir,
                                const ExchangeOptions& opts) {
  prepare_exchange_dir(exchange_dir);
  const auto request = exchange_dir / kRequestFile;
  const auto response = exchange_dir / kResponseMelFile;
  std::error_code ec;
  std::filesystem::remove(response, ec);

  const MelSpectrogram sent =
      opts.request_scale == MelScale::kLog ? to_log(x) : to_linear(x);
  write_melf_atomic(request, sent);

  if (!wait_for_file(response, opts.timeout, opts.poll_interval)) {
    std::filesystem::remove(request, ec);
    throw ExchangeTimeout("no response in " + exchange_dir.string() + " after " +
                          std::to_string(opts.timeout.count()) + " ms");
  }
  MelSpectrogram reply;
  try {
    reply = read_melf(response);
  } catch (const MalformedFile&) {
    std::filesystem::remove(response, ec);
    std::filesystem::remove(request, ec);
    throw;
  }
  std::filesystem::remove(response, ec);
  std::filesystem::remove(request, ec);

  if (reply.frames() != x.frames() || reply.n_mels() != x.n_mels()) {
    throw ShapeMismatch("external predictor answered " + std::to_string(reply.frames()) +
                        "x" + std::to_string(reply.n_mels()) + " for a " +
                        std::to_string(x.frames()) + "x" + std::to_string(x.n_mels()) +
                        " request");
  }
  if (!reply.energies.allFinite()) {
    throw MalformedFile("external predictor returned non-finite energies");
  }
  reply.framing = x.framing;
  MelSpectrogram linear = to_linear(reply);
  linear.energies = linear.energies.cwiseMax(0.0);
  return linear;
}

}  // namespace nvsr
