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

#include <complex>
#include <span>
#include <vector>

namespace nvsr::detail {

// Real-input FFT of a fixed size. Plans are created once per size under a
// lock and executed through FFTW's new-array interface, so one instance can
// be used from several threads as long as each thread passes its own
// buffers.
class RealFft {
 public:
  explicit RealFft(int size);

  int size() const { return size_; }
  int bins() const { return size_ / 2 + 1; }

  // out[k] = sum_n in[n] exp(-2 pi i k n / N), k in [0, N/2].
  void forward(std::span<const double> in,
               std::span<std::complex<double>> out) const;

  // Unnormalized inverse: out[n] = sum over the Hermitian extension of in.
  // Divide by size() for the true inverse.
  void inverse(std::span<const std::complex<double>> in,
               std::span<double> out) const;

 private:
  int size_;
  void* forward_plan_;
  void* inverse_plan_;
};

}  // namespace nvsr::detail
