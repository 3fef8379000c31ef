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

#include "nvsr/errors.hpp"
#include "nvsr/stft.hpp"
#include "oracles.hpp"
#include "signals.hpp"

using namespace nvsr;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("canonical framing gives 1025 bins and ceil(len/hop) frames", "[stft]") {
  for (std::size_t len : {1u, 440u, 441u, 442u, 44100u, 44101u}) {
    Waveform w{std::vector<double>(len, 0.1), 44100};
    const auto s = stft(w);
    CHECK(s.bins.cols() == 1025);
    CHECK(s.frames() == static_cast<Eigen::Index>((len + 440) / 441));
    CHECK(s.length == len);
  }
}

TEST_CASE("empty waveform gives an empty spectrogram and back", "[stft]") {
  const auto s = stft(Waveform{{}, 44100});
  CHECK(s.frames() == 0);
  CHECK(istft(s).empty());
}

TEST_CASE("zero in, zero out", "[stft]") {
  Waveform w{std::vector<double>(5000, 0.0), 44100};
  const auto s = stft(w);
  CHECK(s.bins.cwiseAbs().maxCoeff() == 0.0);
  const auto back = istft(s);
  REQUIRE(back.size() == w.size());
  for (double v : back.samples) CHECK(v == 0.0);
}

TEST_CASE("hann window matches the periodic closed form", "[stft]") {
  const auto w = hann_window(2048);
  const auto ref = testing::reference_hann(2048);
  REQUIRE(w.size() == ref.size());
  CHECK(max_abs_diff(w, ref) < 1e-15);
}

TEST_CASE("frames agree with a direct DFT of the windowed frame", "[stft]") {
  const auto w = testing::white_noise(0.1, 44100, 3);
  const auto s = stft(w);
  for (int t : {0, 1, 5, static_cast<int>(s.frames()) - 1}) {
    const auto ref = testing::reference_stft_frame(w.samples, 2048, 441, t);
    double err = 0.0, scale = 0.0;
    for (int k = 0; k < 1025; ++k) {
      err = std::max(err, std::abs(s.bins(t, k) - ref[k]));
      scale = std::max(scale, std::abs(ref[k]));
    }
    CHECK(err < 1e-9 * scale);
  }
}

TEST_CASE("bin-centre sinusoid peaks at its bin in every interior frame", "[stft]") {
  for (int k : {10, 93, 400, 1000}) {
    const double f = k * 44100.0 / 2048.0;
    const auto w = testing::sinusoid(f, 0.5, 44100);
    const auto m = magnitude(stft(w));
    for (Eigen::Index t = 5; t < m.frames() - 5; ++t) {
      Eigen::Index arg = 0;
      m.mags.row(t).maxCoeff(&arg);
      CHECK(arg == k);
    }
  }
}

TEST_CASE("round trip reconstructs white noise", "[stft]") {
  const auto w = testing::white_noise(1.0, 44100, 11);
  const auto back = istft(stft(w));
  REQUIRE(back.size() == w.size());
  CHECK(max_abs_diff(w.samples, back.samples) < 1e-6);
}

TEST_CASE("round trip reconstructs a speech-shaped chirp", "[stft]") {
  const auto w = testing::chirp(100.0, 8000.0, 1.3, 44100);
  const auto back = istft(stft(w));
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    num += std::pow(w.samples[i] - back.samples[i], 2);
    den += w.samples[i] * w.samples[i];
  }
  CHECK(std::sqrt(num / den) < 1e-6);
}

TEST_CASE("inverse matches a textbook overlap-add on arbitrary spectra", "[stft]") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  ComplexSpectrogram s;
  s.framing = Framing{};
  s.length = 3000;
  s.bins.resize(8, 1025);
  for (Eigen::Index t = 0; t < s.bins.rows(); ++t) {
    for (Eigen::Index k = 0; k < s.bins.cols(); ++k) s.bins(t, k) = {g(rng), g(rng)};
    s.bins(t, 0).imag(0.0);
    s.bins(t, 1024).imag(0.0);
  }
  const auto ours = istft(s);
  const auto ref = testing::reference_istft(s.bins, 2048, 441, s.length);
  CHECK(max_abs_diff(ours.samples, ref) < 1e-9);
}

TEST_CASE("reconstruction holds for other framings", "[stft]") {
  const auto w = testing::white_noise(0.3, 16000, 2);
  for (auto [n, hop] : {std::pair{512, 128}, std::pair{1024, 256}, std::pair{256, 100}}) {
    const auto back = istft(stft(w, n, hop));
    CHECK(max_abs_diff(w.samples, back.samples) < 1e-9);
  }
}

TEST_CASE("spectrogram energy scales with the square of the amplitude", "[stft]") {
  auto w = testing::white_noise(0.5, 44100, 8);
  const double e1 = magnitude(stft(w)).mags.squaredNorm();
  for (double& v : w.samples) v *= 3.0;
  const double e3 = magnitude(stft(w)).mags.squaredNorm();
  CHECK_THAT(e3 / e1, WithinRel(9.0, 1e-12));
}

TEST_CASE("invalid framings and samples are rejected", "[stft]") {
  const auto w = testing::white_noise(0.1, 44100, 1);
  CHECK_THROWS_AS(stft(w, 2000, 441), InvalidArgument);
  CHECK_THROWS_AS(stft(w, 2048, 0), InvalidArgument);
  CHECK_THROWS_AS(stft(w, 512, 600), InvalidArgument);

  auto bad = w;
  bad.samples[10] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(stft(bad), InvalidArgument);

  auto s = stft(w);
  s.framing.hop = 1500;
  CHECK_THROWS_AS(istft(s), InvalidArgument);
}

TEST_CASE("magnitude is non-negative and matches the complex modulus", "[stft]") {
  const auto s = stft(testing::white_noise(0.2, 44100, 4));
  const auto m = magnitude(s);
  CHECK(m.mags.minCoeff() >= 0.0);
  CHECK_THAT((m.mags - s.bins.cwiseAbs()).cwiseAbs().maxCoeff(), WithinAbs(0.0, 0.0));
  CHECK(m.length == s.length);
}
