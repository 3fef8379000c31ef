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

#include <benchmark/benchmark.h>

#include <random>

#include "nvsr/degrade.hpp"
#include "nvsr/lsd.hpp"
#include "nvsr/mel.hpp"
#include "nvsr/resample.hpp"
#include "nvsr/stft.hpp"
#include "nvsr/vocoder.hpp"

using namespace nvsr;

namespace {

Waveform noise(double seconds, int rate = kCanonicalRate) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> n(0.0, 0.1);
  Waveform w;
  w.sample_rate = rate;
  w.samples.resize(static_cast<std::size_t>(seconds * rate));
  for (double& s : w.samples) s = n(rng);
  return w;
}

void BM_Stft(benchmark::State& state) {
  const Waveform x = noise(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stft(x));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(x.size()));
}
BENCHMARK(BM_Stft)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_StftRoundTrip(benchmark::State& state) {
  const Waveform x = noise(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(istft(stft(x)));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(x.size()));
}
BENCHMARK(BM_StftRoundTrip)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ResampleUp(benchmark::State& state) {
  const int rate = static_cast<int>(state.range(0));
  const Waveform x = noise(2.0, rate);
  for (auto _ : state) benchmark::DoNotOptimize(resample_poly(x, kCanonicalRate));
}
BENCHMARK(BM_ResampleUp)->Arg(2000)->Arg(8000)->Arg(16000)->Arg(32000)->Unit(benchmark::kMillisecond);

void BM_SimulateLr(benchmark::State& state) {
  const Waveform x = noise(2.0);
  const DegradeSpec spec{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(simulate_lr(x, spec));
}
BENCHMARK(BM_SimulateLr)->Arg(8000)->Arg(16000)->Unit(benchmark::kMillisecond);

void BM_MelPseudoInverse(benchmark::State& state) {
  const MelFilterbank& fb = canonical_filterbank();
  const MelSpectrogram mel = mel_spectrogram(noise(2.0), fb);
  for (auto _ : state) benchmark::DoNotOptimize(mel_pseudo_inverse(mel, fb));
}
BENCHMARK(BM_MelPseudoInverse)->Unit(benchmark::kMillisecond);

void BM_GriffinLim(benchmark::State& state) {
  const MagSpectrogram mag = magnitude_stft(noise(2.0));
  const int iterations = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(griffin_lim(mag, iterations, 0.99));
}
BENCHMARK(BM_GriffinLim)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_Lsd(benchmark::State& state) {
  const MagSpectrogram a = magnitude_stft(noise(2.0));
  MagSpectrogram b = a;
  b.mags *= 1.7;
  for (auto _ : state) benchmark::DoNotOptimize(lsd(a, b));
}
BENCHMARK(BM_Lsd)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
