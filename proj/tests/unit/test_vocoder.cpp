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


#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "nvsr/degrade.hpp"
#include "nvsr/errors.hpp"
#include "nvsr/lsd.hpp"
#include "nvsr/mel.hpp"
#include "nvsr/stft.hpp"
#include "nvsr/vocoder.hpp"
#include "oracles.hpp"
#include "signals.hpp"

using namespace nvsr;

namespace {

MagSpectrogram smooth_random_mags(Eigen::Index frames, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  RealMatrix raw = RealMatrix::NullaryExpr(frames, 1025, [&] { return u(rng); });
  RealMatrix smooth = RealMatrix::Zero(frames, 1025);
  constexpr int kRadius = 4;
  for (Eigen::Index t = 0; t < frames; ++t) {
    for (Eigen::Index k = 0; k < 1025; ++k) {
      double acc = 0.0;
      int n = 0;
      for (Eigen::Index dt = -1; dt <= 1; ++dt) {
        for (Eigen::Index dk = -kRadius; dk <= kRadius; ++dk) {
          const Eigen::Index tt = t + dt, kk = k + dk;
          if (tt < 0 || tt >= frames || kk < 0 || kk >= 1025) continue;
          acc += raw(tt, kk);
          ++n;
        }
      }
      smooth(t, k) = acc / n;
    }
  }
  MagSpectrogram s;
  s.mags = smooth;
  s.length = static_cast<std::size_t>(frames) * kHopLength;
  return s;
}

Waveform zero_phase_inverse(const MagSpectrogram& m) {
  ComplexSpectrogram s;
  s.bins = m.mags.cast<std::complex<double>>();
  s.framing = m.framing;
  s.length = m.length;
  return istft(s);
}

double max_abs(const Waveform& w) {
  double m = 0.0;
  for (double v : w.samples) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

TEST_CASE("zero mel synthesizes silence", "[vocoder]") {
  MelSpectrogram m;
  m.energies = RealMatrix::Zero(20, 128);
  const auto w = synthesize(m);
  CHECK(w.size() == 20u * 441u);
  CHECK(max_abs(w) < 1e-6);
}

TEST_CASE("zero iterations is the zero-phase inverse", "[vocoder]") {
  const auto mag = smooth_random_mags(12, 1);
  const auto w = griffin_lim(mag, 0, 0.99);
  const auto ref = zero_phase_inverse(mag);
  REQUIRE(w.size() == ref.size());
  CHECK(w.samples == ref.samples);

  const auto mel = mel_spectrogram(testing::speech_like(0.5, 44100, 3), canonical_filterbank());
  VocoderConfig cfg;
  cfg.gl_iterations = 0;
  const auto synth = synthesize(mel, cfg);
  const auto baseline = zero_phase_inverse(mel_pseudo_inverse(mel, canonical_filterbank()));
  REQUIRE(max_abs(baseline) <= GriffinLimVocoder::kPeakLimit);
  CHECK(synth.samples == baseline.samples);
}

TEST_CASE("sinusoid magnitude reconstructs a matching sinusoid", "[vocoder]") {
  const auto x = testing::sinusoid(1000.0, 0.5, 44100);
  const auto w = griffin_lim(magnitude_stft(x), 32, 0.99);
  // Phase is only recovered up to a slow drift, so compare 100 ms segments.
  for (std::size_t start = 2205; start + 4410 <= x.size() - 2205; start += 4410) {
    const std::vector<double> a(x.samples.begin() + start, x.samples.begin() + start + 4410);
    const std::vector<double> b(w.samples.begin() + start, w.samples.begin() + start + 4410);
    CHECK(testing::max_normalized_xcorr(a, b, 45) >= 0.99);
  }
}

TEST_CASE("more iterations lower the spectral convergence error", "[vocoder]") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto mag = smooth_random_mags(30, seed);
    const double one = spectral_convergence(mag, griffin_lim(mag, 1, 0.99));
    const double many = spectral_convergence(mag, griffin_lim(mag, 32, 0.99));
    CHECK(many < one);
  }
}

TEST_CASE("plain Griffin-Lim never increases the convergence error", "[vocoder]") {
  const auto mag = magnitude_stft(testing::speech_like(0.5, 44100, 4));
  std::vector<double> trace;
  griffin_lim(mag, 40, 0.0, &trace);
  REQUIRE(trace.size() == 41);
  for (std::size_t i = 1; i < trace.size(); ++i) CHECK(trace[i] <= trace[i - 1] + 1e-9);
}

TEST_CASE("momentum converges faster than plain iterations", "[vocoder]") {
  const auto mag = magnitude_stft(testing::speech_like(0.5, 44100, 5));
  std::vector<double> fast, plain;
  griffin_lim(mag, 32, 0.99, &fast);
  griffin_lim(mag, 32, 0.0, &plain);
  CHECK(fast.back() < plain.back());
  CHECK(fast.back() < fast.front());
}

TEST_CASE("synthesis from clean mel beats a 4 kHz band-limited copy", "[vocoder]") {
  const auto& fb = canonical_filterbank();
  for (std::uint64_t seed : {6u, 7u}) {
    const auto y = testing::speech_like(1.0, 44100, seed);
    const auto synth = synthesize(mel_spectrogram(y, fb));
    const auto degraded = simulate_lr(y, {4000}).upsampled;
    REQUIRE(synth.size() >= y.size());
    Waveform trimmed = synth;
    trimmed.samples.resize(y.size());
    CHECK(lsd(y, trimmed) < lsd(y, degraded));
  }
}

TEST_CASE("synthesized audio is mel-consistent with its input", "[vocoder]") {
  const auto& fb = canonical_filterbank();
  for (std::uint64_t seed : {8u, 9u}) {
    const auto m = mel_spectrogram(testing::speech_like(1.0, 44100, seed), fb);
    const auto w = synthesize(m);
    const auto back = mel_spectrogram(w, fb);
    REQUIRE(back.frames() == m.frames());
    CHECK((back.energies - m.energies).norm() / m.energies.norm() < 0.35);
  }
}

TEST_CASE("synthesis is deterministic and peak-limited", "[vocoder]") {
  const auto& fb = canonical_filterbank();
  auto y = testing::speech_like(0.5, 44100, 10);
  for (double& v : y.samples) v *= 4.0;
  const auto m = mel_spectrogram(y, fb);
  const auto a = synthesize(m);
  const auto b = synthesize(m);
  CHECK(a.samples == b.samples);
  CHECK(max_abs(a) <= GriffinLimVocoder::kPeakLimit + 1e-15);
  CHECK(max_abs(a) >= GriffinLimVocoder::kPeakLimit - 1e-12);
}

TEST_CASE("output rate other than 44.1 kHz is resampled", "[vocoder]") {
  const auto m = mel_spectrogram(testing::speech_like(0.5, 44100, 11), canonical_filterbank());
  VocoderConfig cfg;
  cfg.output_rate = 16000;
  const auto w = synthesize(m, cfg);
  CHECK(w.sample_rate == 16000);
  CHECK(w.size() == static_cast<std::size_t>(std::llround(m.frames() * 441.0 * 16000 / 44100)));
}

TEST_CASE("vocoder inputs are validated", "[vocoder]") {
  VocoderConfig bad;
  bad.gl_iterations = -1;
  CHECK_THROWS_AS(GriffinLimVocoder(bad), InvalidArgument);
  bad = {};
  bad.momentum = 1.0;
  CHECK_THROWS_AS(GriffinLimVocoder(bad), InvalidArgument);

  MelSpectrogram m;
  m.energies = RealMatrix::Ones(3, 128);
  m.energies(1, 1) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(synthesize(m), InvalidArgument);

  m.energies = RealMatrix::Ones(3, 128);
  m.framing.window_len = 1024;
  CHECK_THROWS_AS(synthesize(m), InvalidArgument);

  auto mag = smooth_random_mags(4, 2);
  mag.mags(0, 0) = -1.0;
  CHECK_THROWS_AS(griffin_lim(mag, 2, 0.5), InvalidArgument);

  GriffinLimVocoder v;
  CHECK(v.name() == "griffin-lim");
  CHECK(v.capabilities() == kDeterministic);
}
