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
#include <numbers>
#include <vector>

#include "nvsr/degrade.hpp"
#include "nvsr/errors.hpp"
#include "nvsr/iir.hpp"
#include "oracles.hpp"
#include "signals.hpp"

using namespace nvsr;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

double tail_amplitude(const std::vector<double>& y, std::size_t skip) {
  double peak = 0.0;
  for (std::size_t i = skip; i < y.size(); ++i) peak = std::max(peak, std::abs(y[i]));
  return peak;
}

}  // namespace

TEST_CASE("designed response matches the closed-form Chebyshev magnitude", "[iir]") {
  for (int order : {1, 2, 3, 4, 5, 8, 10}) {
    for (double fc : {1000.0, 4000.0, 8000.0, 16000.0}) {
      const auto f = design_cheby1_lowpass(order, 0.05, fc, 44100.0);
      CHECK(f.sections().size() == static_cast<std::size_t>((order + 1) / 2));
      for (double frac = 0.01; frac < 0.999; frac += 0.0173) {
        const double hz = frac * 22050.0;
        const double ours = std::abs(f.response(hz, 44100.0));
        const double ref = testing::cheby1_magnitude(order, 0.05, fc, 44100.0, hz);
        CHECK_THAT(ours, WithinAbs(ref, 1e-9));
      }
    }
  }
}

TEST_CASE("order-8 design attenuates 1.5x cutoff by at least 40 dB", "[iir]") {
  for (int l : {2000, 4000, 8000, 12000, 16000, 24000}) {
    const double fc = l / 2.0;
    const auto f = design_cheby1_lowpass(8, 0.05, fc, 44100.0);
    const double db = 20.0 * std::log10(std::abs(f.response(1.5 * fc, 44100.0)));
    CHECK(db <= -40.0);
  }
}

TEST_CASE("DC gain follows the ripple convention", "[iir]") {
  const double eps2 = std::pow(10.0, 0.05 / 10.0) - 1.0;
  const auto even = design_cheby1_lowpass(8, 0.05, 4000.0, 44100.0);
  CHECK_THAT(std::abs(even.response(0.0, 44100.0)), WithinRel(1.0 / std::sqrt(1.0 + eps2), 1e-12));
  const auto odd = design_cheby1_lowpass(5, 0.05, 4000.0, 44100.0);
  CHECK_THAT(std::abs(odd.response(0.0, 44100.0)), WithinRel(1.0, 1e-12));
}

TEST_CASE("constant input settles to the DC gain", "[iir]") {
  const auto f = design_cheby1_lowpass(8, 0.05, 4000.0, 44100.0);
  const double h0 = std::abs(f.response(0.0, 44100.0));
  const std::vector<double> x(8000, 0.5);
  const auto y = f.filter(x);
  for (std::size_t i = 4000; i < y.size(); ++i) CHECK_THAT(y[i], WithinAbs(0.5 * h0, 1e-3));
}

TEST_CASE("zero input gives zero output", "[iir]") {
  const auto f = design_cheby1_lowpass(8, 0.05, 4000.0, 44100.0);
  const std::vector<double> x(1000, 0.0);
  for (double v : f.filter(x)) CHECK(v == 0.0);
  for (double v : f.filter_zero_phase(x)) CHECK(v == 0.0);
}

TEST_CASE("steady-state sinusoid at 1.5x cutoff is 40 dB down", "[iir]") {
  const double fc = 4000.0;
  const auto x = testing::sinusoid(1.5 * fc, 1.0, 44100, 1.0);
  const auto lp = cheby1_lowpass(x, fc);
  const double amp = tail_amplitude(lp.samples, 22050);
  const auto f = design_cheby1_lowpass(8, 0.05, fc, 44100.0);
  CHECK(amp <= 0.01);
  CHECK_THAT(amp, WithinRel(std::abs(f.response(1.5 * fc, 44100.0)), 1e-3));
}

TEST_CASE("zero-phase filtering squares the magnitude and removes delay", "[iir]") {
  const double fc = 4000.0;
  const auto f = design_cheby1_lowpass(8, 0.05, fc, 44100.0);
  const auto x = testing::sinusoid(1000.0, 1.0, 44100, 1.0);
  const auto y = f.filter_zero_phase(x.samples);
  const double expect = std::norm(f.response(1000.0, 44100.0));
  double num = 0.0, den = 0.0;
  for (std::size_t i = 10000; i < 34100; ++i) {
    num += y[i] * x.samples[i];
    den += x.samples[i] * x.samples[i];
  }
  CHECK_THAT(num / den, WithinRel(expect, 1e-3));
  const std::vector<double> a(x.samples.begin() + 4410, x.samples.end() - 4410);
  const std::vector<double> b(y.begin() + 4410, y.end() - 4410);
  CHECK(testing::max_normalized_xcorr(a, b, 0) > 0.99999);
}

TEST_CASE("design arguments are validated", "[iir]") {
  CHECK_THROWS_AS(design_cheby1_lowpass(0, 0.05, 4000.0, 44100.0), InvalidArgument);
  CHECK_THROWS_AS(design_cheby1_lowpass(8, 0.0, 4000.0, 44100.0), InvalidArgument);
  CHECK_THROWS_AS(design_cheby1_lowpass(8, 0.05, 22050.0, 44100.0), InvalidArgument);
  CHECK_THROWS_AS(design_cheby1_lowpass(8, 0.05, -1.0, 44100.0), InvalidArgument);
  CHECK_THROWS_AS(cheby1_lowpass(testing::white_noise(0.01, 8000, 1), 4000.0), InvalidArgument);
}
