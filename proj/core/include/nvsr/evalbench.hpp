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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nvsr/pipeline.hpp"
#include "nvsr/types.hpp"

namespace nvsr {

/// One (utterance, input rate, system) measurement.
struct EvalResult {
  std::string utterance_id;
  int input_rate = 0;
  std::string system;
  std::string vocoder;  // "-" for systems that do not vocode
  double lsd = 0.0;
  double runtime_ms = 0.0;
  bool ok = true;
  std::string error;
};

inline const std::vector<int> kDefaultGridRates = {2000,  4000,  8000, 12000,
                                                   16000, 24000, 32000};

struct GridSpec {
  std::vector<int> rates = kDefaultGridRates;
  // System labels. Built-in: unprocessed, target, gt-mel, pad, none,
  // external. A "-nopost" suffix disables replacement post-processing.
  std::vector<std::string> systems = {"unprocessed", "pad"};
  std::filesystem::path manifest;
  std::string split = "test";
  int target_rate = kCanonicalRate;
  int workers = 0;  // 0: hardware concurrency
  VocoderConfig vocoder;
  std::filesystem::path exchange_dir;
  std::optional<std::filesystem::path> png_dir;
};

/// Throws InvalidArgument on unknown systems or rates not below target.
void validate(const GridSpec& spec);

struct Utterance {
  std::string id;
  Waveform audio;  // at the grid's target rate
};

struct SummaryRow {
  std::string system;
  std::vector<double> mean_lsd;  // per rate, NaN when nothing succeeded
  double average = 0.0;          // mean over rates
};

struct GridReport {
  std::vector<EvalResult> results;  // sorted by (system, rate, utterance)
  std::vector<int> rates;
  std::vector<SummaryRow> summary;  // in GridSpec::systems order
  bool any_failure = false;
};

/// Evaluates every (utterance, rate, system) with a bounded worker pool.
/// Per-item failures are recorded as rows with ok=false and do not stop
/// the run.
GridReport run_grid(const GridSpec& spec, const std::vector<Utterance>& utterances);

/// Loads `spec.manifest`; unreadable files become failed
/// rows for every (rate, system).
GridReport run_grid(const GridSpec& spec);

/// Builds per-(system, rate) means from results.
std::vector<SummaryRow> summarize(const std::vector<EvalResult>& results,
                                  const std::vector<std::string>& systems,
                                  const std::vector<int>& rates);

/// Deterministic CSV (no timings): utterance,input_rate,system,vocoder,lsd,status.
void write_results_csv(std::ostream& out, const GridReport& report);
/// utterance,input_rate,system,runtime_ms.
void write_timing_csv(std::ostream& out, const GridReport& report);
/// Markdown table, one row per system, one column per rate in kHz plus AVG.
void write_summary_markdown(std::ostream& out, const GridReport& report);

}  // namespace nvsr
