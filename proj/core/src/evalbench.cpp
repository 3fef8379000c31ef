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

#include "nvsr/evalbench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

#include "nvsr/degrade.hpp"
#include "nvsr/errors.hpp"
#include "nvsr/lsd.hpp"
#include "nvsr/manifest.hpp"
#include "nvsr/resample.hpp"
#include "nvsr/spectrogram_png.hpp"
#include "nvsr/stft.hpp"
#include "nvsr/wav.hpp"

namespace nvsr {
namespace {

constexpr const char* kNoPostSuffix = "-nopost";

struct SystemSpec {
  std::string label;
  std::string base;
  bool postprocess = true;
};

SystemSpec parse_system(const std::string& label) {
  SystemSpec s{label, label, true};
  const std::string suffix = kNoPostSuffix;
  if (label.size() > suffix.size() &&
      label.compare(label.size() - suffix.size(), suffix.size(), suffix) == 0) {
    s.base = label.substr(0, label.size() - suffix.size());
    s.postprocess = false;
  }
  static const std::vector<std::string> known = {"unprocessed", "target", "gt-mel",
                                                 "pad",         "none",   "external"};
  if (std::find(known.begin(), known.end(), s.base) == known.end()) {
    throw InvalidArgument("unknown system '" + label + "'");
  }
  if (!s.postprocess && (s.base == "unprocessed" || s.base == "target")) {
    throw InvalidArgument("system '" + s.base + "' has no post-processing to disable");
  }
  return s;
}

// One evaluator per system label; pipelines are const and shareable, but the
// external bridge owns a single exchange directory and must be serialized.
struct SystemRunner {
  SystemSpec spec;
  std::unique_ptr<Pipeline> pipeline;
  std::unique_ptr<std::mutex> serialize;
};

SystemRunner make_runner(const SystemSpec& spec, const GridSpec& grid) {
  SystemRunner r;
  r.spec = spec;
  if (spec.base == "unprocessed" || spec.base == "target") return r;
  PipelineConfig cfg;
  cfg.vocoder = grid.vocoder;
  cfg.postprocess = spec.postprocess;
  cfg.exchange_dir = grid.exchange_dir;
  if (spec.base == "external") {
    cfg.predictor = PredictorKind::kExternal;
    r.serialize = std::make_unique<std::mutex>();
  } else if (spec.base == "none" || spec.base == "gt-mel") {
    cfg.predictor = PredictorKind::kNone;
  } else {
    cfg.predictor = PredictorKind::kPad;
  }
  r.pipeline = std::make_unique<Pipeline>(cfg);
  return r;
}

std::string sanitize(std::string s) {
  std::replace_if(s.begin(), s.end(), [](char c) { return c == '/' || c == '\\'; }, '_');
  return s;
}

struct Task {
  const Utterance* utterance = nullptr;
  std::string load_error;  // set when the utterance could not be read
  std::string id;
  int rate = 0;
};

std::vector<EvalResult> evaluate(const Task& task, const std::vector<SystemRunner>& runners,
                                 const GridSpec& grid) {
  std::vector<EvalResult> rows;
  const auto failed_all = [&](const std::string& why) {
    for (const auto& r : runners) {
      EvalResult e;
      e.utterance_id = task.id;
      e.input_rate = task.rate;
      e.system = r.spec.label;
      e.vocoder = r.pipeline ? r.pipeline->vocoder().name() : "-";
      e.lsd = std::numeric_limits<double>::quiet_NaN();
      e.ok = false;
      e.error = why;
      rows.push_back(std::move(e));
    }
    return rows;
  };
  if (task.utterance == nullptr) return failed_all(task.load_error);

  const Waveform& target = task.utterance->audio;
  LowResPair pair;
  MagSpectrogram reference;
  try {
    pair = simulate_lr(target, DegradeSpec{task.rate, grid.target_rate});
    reference = magnitude_stft(target);
  } catch (const std::exception& ex) {
    return failed_all(ex.what());
  }

  for (const auto& runner : runners) {
    EvalResult e;
    e.utterance_id = task.id;
    e.input_rate = task.rate;
    e.system = runner.spec.label;
    e.vocoder = runner.pipeline ? runner.pipeline->vocoder().name() : "-";
    const auto start = std::chrono::steady_clock::now();
    try {
      Waveform out;
      const std::string& base = runner.spec.base;
      if (base == "unprocessed") {
        out = pair.upsampled;
      } else if (base == "target") {
        out = target;
      } else if (base == "gt-mel") {
        out = runner.pipeline->resynthesize(
            mel_spectrogram(target, runner.pipeline->filterbank()), pair.upsampled,
            task.rate / 2.0);
      } else if (runner.serialize) {
        std::lock_guard lock(*runner.serialize);
        out = runner.pipeline->run(pair.low);
      } else {
        out = runner.pipeline->run(pair.low);
      }
      out.samples.resize(target.size(), 0.0);
      const MagSpectrogram estimate = magnitude_stft(out);
      e.lsd = lsd(reference, estimate);
      if (!std::isfinite(e.lsd)) throw Error("non-finite LSD");
      if (grid.png_dir) {
        write_spectrogram_png(*grid.png_dir / (sanitize(task.id) + "_" +
                                               std::to_string(task.rate) + "_" +
                                               runner.spec.label + ".png"),
                              estimate);
      }
    } catch (const std::exception& ex) {
      e.ok = false;
      e.lsd = std::numeric_limits<double>::quiet_NaN();
      e.error = ex.what();
    }
    e.runtime_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    rows.push_back(std::move(e));
  }
  return rows;
}

GridReport run_tasks(const GridSpec& spec, const std::vector<Task>& tasks) {
  validate(spec);
  std::vector<SystemRunner> runners;
  for (const auto& label : spec.systems) runners.push_back(make_runner(parse_system(label), spec));
  if (spec.png_dir) std::filesystem::create_directories(*spec.png_dir);

  std::vector<std::vector<EvalResult>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      slots[i] = evaluate(tasks[i], runners, spec);
    }
  };
  unsigned workers = spec.workers > 0 ? static_cast<unsigned>(spec.workers)
                                      : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();

  GridReport report;
  report.rates = spec.rates;
  for (auto& slot : slots) {
    for (auto& r : slot) report.results.push_back(std::move(r));
  }
  std::stable_sort(report.results.begin(), report.results.end(),
                   [](const EvalResult& a, const EvalResult& b) {
                     if (a.system != b.system) return a.system < b.system;
                     if (a.input_rate != b.input_rate) return a.input_rate < b.input_rate;
                     return a.utterance_id < b.utterance_id;
                   });
  report.any_failure = std::any_of(report.results.begin(), report.results.end(),
                                   [](const EvalResult& r) { return !r.ok; });
  report.summary = summarize(report.results, spec.systems, spec.rates);
  return report;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

std::string fixed(double v, int digits) {
  if (!std::isfinite(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

void validate(const GridSpec& spec) {
  if (spec.target_rate <= 0) throw InvalidArgument("target rate must be positive");
  if (spec.rates.empty()) throw InvalidArgument("grid needs at least one input rate");
  for (int r : spec.rates) {
    if (r <= 0 || r >= spec.target_rate) {
      throw InvalidArgument("grid rate " + std::to_string(r) +
                            " must be positive and below the target rate");
    }
  }
  if (spec.systems.empty()) throw InvalidArgument("grid needs at least one system");
  for (const auto& s : spec.systems) parse_system(s);
  validate(spec.vocoder);
}

std::vector<SummaryRow> summarize(const std::vector<EvalResult>& results,
                                  const std::vector<std::string>& systems,
                                  const std::vector<int>& rates) {
  std::map<std::pair<std::string, int>, std::pair<double, int>> acc;
  for (const auto& r : results) {
    if (!r.ok) continue;
    auto& [sum, n] = acc[{r.system, r.input_rate}];
    sum += r.lsd;
    ++n;
  }
  std::vector<SummaryRow> rows;
  for (const auto& system : systems) {
    SummaryRow row;
    row.system = system;
    double total = 0.0;
    int counted = 0;
    for (int rate : rates) {
      const auto it = acc.find({system, rate});
      if (it == acc.end() || it->second.second == 0) {
        row.mean_lsd.push_back(std::numeric_limits<double>::quiet_NaN());
        continue;
      }
      const double mean = it->second.first / it->second.second;
      row.mean_lsd.push_back(mean);
      total += mean;
      ++counted;
    }
    row.average = counted > 0 ? total / counted : std::numeric_limits<double>::quiet_NaN();
    rows.push_back(std::move(row));
  }
  return rows;
}

GridReport run_grid(const GridSpec& spec, const std::vector<Utterance>& utterances) {
  std::vector<Task> tasks;
  for (const auto& u : utterances) {
    for (int rate : spec.rates) tasks.push_back({&u, {}, u.id, rate});
  }
  return run_tasks(spec, tasks);
}

GridReport run_grid(const GridSpec& spec) {
  validate(spec);
  const auto entries = read_manifest(spec.manifest, spec.split);
  std::vector<Utterance> loaded;
  std::vector<std::pair<std::string, std::string>> broken;  // id, error
  loaded.reserve(entries.size());
  for (const auto& e : entries) {
    try {
      Waveform w = read_wav(e.path);
      if (w.sample_rate != spec.target_rate) w = resample_poly(w, spec.target_rate);
      loaded.push_back({e.id, std::move(w)});
    } catch (const std::exception& ex) {
      broken.emplace_back(e.id, ex.what());
    }
  }
  std::vector<Task> tasks;
  for (const auto& u : loaded) {
    for (int rate : spec.rates) tasks.push_back({&u, {}, u.id, rate});
  }
  for (const auto& [id, why] : broken) {
    for (int rate : spec.rates) tasks.push_back({nullptr, why, id, rate});
  }
  return run_tasks(spec, tasks);
}

void write_results_csv(std::ostream& out, const GridReport& report) {
  out << "utterance,input_rate,system,vocoder,lsd,status,error\n";
  for (const auto& r : report.results) {
    out << csv_field(r.utterance_id) << ',' << r.input_rate << ',' << csv_field(r.system)
        << ',' << r.vocoder << ',' << fixed(r.lsd, 6) << ',' << (r.ok ? "ok" : "failed")
        << ',' << csv_field(r.error) << '\n';
  }
}

void write_timing_csv(std::ostream& out, const GridReport& report) {
  out << "utterance,input_rate,system,runtime_ms\n";
  for (const auto& r : report.results) {
    out << csv_field(r.utterance_id) << ',' << r.input_rate << ',' << csv_field(r.system)
        << ',' << fixed(r.runtime_ms, 3) << '\n';
  }
}

void write_summary_markdown(std::ostream& out, const GridReport& report) {
  out << "| System |";
  for (int r : report.rates) out << ' ' << fixed(r / 1000.0, r % 1000 == 0 ? 0 : 1) << " |";
  out << " AVG |\n|---|";
  for (std::size_t i = 0; i <= report.rates.size(); ++i) out << "---:|";
  out << '\n';
  for (const auto& row : report.summary) {
    out << "| " << row.system << " |";
    for (double v : row.mean_lsd) out << ' ' << (std::isfinite(v) ? fixed(v, 2) : "n/a") << " |";
    out << ' ' << (std::isfinite(row.average) ? fixed(row.average, 2) : "n/a") << " |\n";
  }
}

}  // namespace nvsr
