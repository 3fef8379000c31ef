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

#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <string>
#include <vector>
#include <mutex>
#include <utility>

#include "nvsr/errors.hpp"

namespace nvsr::detail {
namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;
};

// Plans live for the whole process; FFTW's planner is not thread-safe.
std::pair<fftw_plan, fftw_plan> plans_for(int n) {
  static std::mutex mutex;
  static std::map<int, PlanPair> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<double> real(n);
    std::vector<fftw_complex> cplx(n / 2 + 1);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    PlanPair p;
    p.forward = fftw_plan_dft_r2c_1d(n, real.data(), cplx.data(), flags);
    p.inverse = fftw_plan_dft_c2r_1d(n, cplx.data(), real.data(),
                                     flags | FFTW_DESTROY_INPUT);
    if (p.forward == nullptr || p.inverse == nullptr) {
      throw Error("FFTW failed to create a plan of size " + std::to_string(n));
    }
    it = cache.emplace(n, p).first;
  }
  return {it->second.forward, it->second.inverse};
}

}  // namespace

RealFft::RealFft(int size) : size_(size) {
  if (size < 2) throw InvalidArgument("FFT size must be at least 2");
  auto [fwd, inv] = plans_for(size);
  forward_plan_ = fwd;
  inverse_plan_ = inv;
}

void RealFft::forward(std::span<const double> in,
                      std::span<std::complex<double>> out) const {
  // r2c out-of-place preserves its input.
  fftw_execute_dft_r2c(static_cast<fftw_plan>(forward_plan_),
                       const_cast<double*>(in.data()),
                       reinterpret_cast<fftw_complex*>(out.data()));
}

void RealFft::inverse(std::span<const std::complex<double>> in,
                      std::span<double> out) const {
  // c2r clobbers its input, so work on a copy.
  thread_local std::vector<std::complex<double>> scratch;
  scratch.assign(in.begin(), in.end());
  fftw_execute_dft_c2r(static_cast<fftw_plan>(inverse_plan_),
                       reinterpret_cast<fftw_complex*>(scratch.data()),
                       out.data());
}

}  // namespace nvsr::detail
