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

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "nvsr/degrade.hpp"
#include "nvsr/errors.hpp"
#include "nvsr/evalbench.hpp"
#include "nvsr/lsd.hpp"
#include "nvsr/pipeline.hpp"
#include "nvsr/resample.hpp"
#include "nvsr/wav.hpp"

namespace fs = std::filesystem;
using namespace nvsr;

namespace {

WavEncoding encoding(bool float32) {
  return float32 ? WavEncoding::kFloat32 : WavEncoding::kPcm16;
}

// Grid rates may be given in kHz (2,4,8) or Hz (2000,22050).
std::vector<int> to_hz(const std::vector<double>& rates) {
  std::vector<int> out;
  for (double r : rates) {
    if (!(r > 0.0)) throw InvalidArgument("rates must be positive");
    out.push_back(static_cast<int>(std::lround(r < 1000.0 ? r * 1000.0 : r)));
  }
  return out;
}

struct SimulateArgs {
  fs::path in, out;
  std::optional<fs::path> keep_lr;
  int target_rate = 8000;
  bool zero_phase = false;
  bool float32 = false;
};

int run_simulate(const SimulateArgs& a) {
  const Waveform y = read_wav(a.in);
  DegradeSpec spec;
  spec.target_rate = a.target_rate;
  spec.source_rate = y.sample_rate;
  spec.zero_phase = a.zero_phase;
  const LowResPair pair = simulate_lr(y, spec);
  write_wav(a.out, pair.upsampled, encoding(a.float32));
  if (a.keep_lr) write_wav(*a.keep_lr, pair.low, encoding(a.float32));
  return 0;
}

struct SrArgs {
  fs::path in, out;
  std::string predictor = "pad";
  bool no_postproc = false;
  bool crossfade = false;
  std::optional<double> cutoff_hz;
  fs::path exchange_dir;
  int iterations = 32;
  bool float32 = false;
  bool verbose = false;
};

int run_sr(const SrArgs& a) {
  PipelineConfig cfg;
  cfg.predictor = parse_predictor(a.predictor);
  cfg.postprocess = !a.no_postproc;
  cfg.lfr_crossfade = a.crossfade;
  cfg.cutoff_hz = a.cutoff_hz;
  cfg.exchange_dir = a.exchange_dir;
  cfg.vocoder.gl_iterations = a.iterations;
  const Pipeline pipeline(cfg);
  PipelineTrace trace;
  const Waveform y = pipeline.run(read_wav(a.in), &trace);
  write_wav(a.out, y, encoding(a.float32));
  if (a.verbose) {
    std::fprintf(stderr, "cutoff %.1f Hz (band %d, %s)\n", trace.cutoff_hz, trace.cutoff_band,
                 trace.cutoff_detected ? "detected" : "from input rate");
  }
  return 0;
}

struct BenchArgs {
  fs::path manifest;
  std::vector<double> rates = {2, 4, 8, 12, 16, 24, 32};
  std::vector<std::string> systems = {"unprocessed", "pad"};
  std::optional<fs::path> out, summary, timing, png_dir;
  std::string split = "test";
  fs::path exchange_dir;
  int workers = 0;
  int iterations = 32;
};

int run_bench(const BenchArgs& a) {
  GridSpec spec;
  spec.manifest = a.manifest;
  spec.rates = to_hz(a.rates);
  spec.systems = a.systems;
  spec.split = a.split;
  spec.workers = a.workers;
  spec.exchange_dir = a.exchange_dir;
  spec.png_dir = a.png_dir;
  spec.vocoder.gl_iterations = a.iterations;
  const GridReport report = run_grid(spec);

  const auto write_file = [](const fs::path& path, auto&& emit) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open " + path.string() + " for writing");
    emit(os);
  };
  if (a.out) {
    write_file(*a.out, [&](std::ostream& os) { write_results_csv(os, report); });
  } else {
    write_results_csv(std::cout, report);
  }
  if (a.timing) write_file(*a.timing, [&](std::ostream& os) { write_timing_csv(os, report); });
  if (a.summary) {
    write_file(*a.summary, [&](std::ostream& os) { write_summary_markdown(os, report); });
  } else {
    write_summary_markdown(a.out ? std::cout : std::cerr, report);
  }
  std::size_t failed = 0;
  for (const auto& r : report.results) failed += !r.ok;
  if (failed > 0) {
    std::fprintf(stderr, "%zu of %zu evaluations failed\n", failed, report.results.size());
  }
  return report.any_failure ? 1 : 0;
}

struct LsdArgs {
  fs::path ref, est;
};

int run_lsd(const LsdArgs& a) {
  Waveform ref = read_wav(a.ref);
  Waveform est = read_wav(a.est);
  if (ref.sample_rate != kCanonicalRate) ref = resample_poly(ref, kCanonicalRate);
  if (est.sample_rate != kCanonicalRate) est = resample_poly(est, kCanonicalRate);
  std::printf("%.6f\n", lsd(ref, est));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mel-domain speech super-resolution toolkit"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Band-limit a recording at a lower rate");
  simulate->add_option("--in", sim.in, "Input WAV")->required()->check(CLI::ExistingFile);
  simulate->add_option("--out", sim.out, "Band-limited output at the input rate")->required();
  simulate->add_option("--target-rate", sim.target_rate, "Low sample rate in Hz")->required();
  simulate->add_option("--keep-lr", sim.keep_lr, "Also write the signal at the low rate");
  simulate->add_flag("--zero-phase", sim.zero_phase, "Filter forward and backward");
  simulate->add_flag("--float", sim.float32, "Write 32-bit float WAV");

  SrArgs sr;
  auto* srcmd = app.add_subcommand("sr", "Super-resolve a recording to 44.1 kHz");
  srcmd->add_option("--in", sr.in, "Input WAV")->required()->check(CLI::ExistingFile);
  srcmd->add_option("--out", sr.out, "Output WAV at 44.1 kHz")->required();
  srcmd->add_option("--predictor", sr.predictor, "Mel predictor")
      ->check(CLI::IsMember({"pad", "external", "none"}))
      ->capture_default_str();
  srcmd->add_flag("--no-postproc", sr.no_postproc, "Skip low-band replacement");
  srcmd->add_flag("--crossfade", sr.crossfade, "3-bin crossfade at the replacement boundary");
  srcmd->add_option("--cutoff-hz", sr.cutoff_hz, "Override the input cutoff");
  srcmd->add_option("--exchange-dir", sr.exchange_dir,
                    "Exchange directory for the external predictor")
      ->envname("NVSR_EXCHANGE_DIR");
  srcmd->add_option("--iterations", sr.iterations, "Griffin-Lim iterations")
      ->capture_default_str();
  srcmd->add_flag("--float", sr.float32, "Write 32-bit float WAV");
  srcmd->add_flag("-v,--verbose", sr.verbose, "Report the cutoff used");

  BenchArgs bench;
  auto* benchcmd = app.add_subcommand("bench", "Evaluate systems over a grid of input rates");
  benchcmd->add_option("--manifest", bench.manifest, "Manifest of 44.1 kHz WAVs")
      ->required()
      ->check(CLI::ExistingFile);
  benchcmd->add_option("--rates", bench.rates, "Input rates in kHz (or Hz)")
      ->delimiter(',')
      ->capture_default_str();
  benchcmd->add_option("--systems", bench.systems,
                       "unprocessed, target, gt-mel, pad, none, external; -nopost suffix "
                       "disables replacement")
      ->delimiter(',')
      ->capture_default_str();
  benchcmd->add_option("--out", bench.out, "Results CSV (default stdout)");
  benchcmd->add_option("--summary", bench.summary, "Markdown summary table");
  benchcmd->add_option("--timing", bench.timing, "Per-item runtime CSV");
  benchcmd->add_option("--png-dir", bench.png_dir, "Write output spectrogram PNGs here");
  benchcmd->add_option("--split", bench.split, "Manifest split tag")->capture_default_str();
  benchcmd->add_option("--workers", bench.workers, "Worker threads (0: all cores)")
      ->check(CLI::NonNegativeNumber);
  benchcmd->add_option("--exchange-dir", bench.exchange_dir,
                       "Exchange directory for the external predictor")
      ->envname("NVSR_EXCHANGE_DIR");
  benchcmd->add_option("--iterations", bench.iterations, "Griffin-Lim iterations")
      ->capture_default_str();

  LsdArgs lsd_args;
  auto* lsdcmd = app.add_subcommand("lsd", "Log-spectral distance between two recordings");
  lsdcmd->add_option("--ref", lsd_args.ref, "Reference WAV")->required()->check(CLI::ExistingFile);
  lsdcmd->add_option("--est", lsd_args.est, "Estimate WAV")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate) return run_simulate(sim);
    if (*srcmd) return run_sr(sr);
    if (*benchcmd) return run_bench(bench);
    if (*lsdcmd) return run_lsd(lsd_args);
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "nvsr: %s\n", ex.what());
    return 1;
  }
  return 0;
}
