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


#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nvsr::testing {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::vector<std::complex<double>> direct_dft(const std::vector<double>& frame) {
  const std::size_t n = frame.size();
  std::vector<std::complex<double>> out(n / 2 + 1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double ang = -2.0 * kPi * static_cast<double>((k * i) % n) / n;
      acc += frame[i] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    out[k] = acc;
  }
  return out;
}

std::vector<double> reference_hann(int n) {
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = std::pow(std::sin(kPi * i / n), 2.0);
  return w;
}

std::vector<std::complex<double>> reference_stft_frame(const std::vector<double>& x,
                                                       int window_len, int hop, int t) {
  const auto w = reference_hann(window_len);
  std::vector<double> frame(window_len, 0.0);
  const long start = static_cast<long>(t) * hop - window_len / 2;
  for (int i = 0; i < window_len; ++i) {
    const long j = start + i;
    if (j >= 0 && j < static_cast<long>(x.size())) frame[i] = x[j] * w[i];
  }
  return direct_dft(frame);
}

std::vector<double> reference_istft(const ComplexMatrix& bins, int window_len, int hop,
                                    std::size_t length) {
  const auto w = reference_hann(window_len);
  const long pad = window_len / 2;
  const long total = static_cast<long>(length) + 2 * pad + window_len;
  std::vector<double> acc(total, 0.0), norm(total, 0.0);
  const int k_max = window_len / 2;
  for (Eigen::Index t = 0; t < bins.rows(); ++t) {
    for (int i = 0; i < window_len; ++i) {
      // Inverse DFT of a Hermitian-symmetric spectrum.
      double v = bins(t, 0).real();
      for (int k = 1; k < k_max; ++k) {
        const double ang = 2.0 * kPi * static_cast<double>((static_cast<long>(k) * i) %
                                                          window_len) / window_len;
        v += 2.0 * (bins(t, k).real() * std::cos(ang) - bins(t, k).imag() * std::sin(ang));
      }
      v += bins(t, k_max).real() * ((i % 2 == 0) ? 1.0 : -1.0);
      v /= window_len;
      const long j = t * hop + i;
      if (j < total) {
        acc[j] += v * w[i];
        norm[j] += w[i] * w[i];
      }
    }
  }
  std::vector<double> out(length, 0.0);
  for (std::size_t n = 0; n < length; ++n) {
    const long j = static_cast<long>(n) + pad;
    out[n] = norm[j] > 1e-12 ? acc[j] / norm[j] : 0.0;
  }
  return out;
}

RealMatrix brute_matmul(const RealMatrix& a, const RealMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("brute_matmul shapes");
  RealMatrix c(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      double s = 0.0;
      for (Eigen::Index k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  }
  return c;
}

RealMatrix brute_pad(const RealMatrix& x, int c) {
  RealMatrix y(x.rows(), x.cols());
  for (Eigen::Index t = 0; t < x.rows(); ++t) {
    for (Eigen::Index f = 0; f < x.cols(); ++f) {
      const double m = f <= c ? 1.0 : 0.0;
      y(t, f) = m * x(t, f) + std::abs(1.0 - m) * x(t, c);
    }
  }
  return y;
}

double brute_lsd(const RealMatrix& y, const RealMatrix& y_hat, double floor) {
  double total = 0.0;
  for (Eigen::Index t = 0; t < y.rows(); ++t) {
    double frame = 0.0;
    for (Eigen::Index k = 0; k < y.cols(); ++k) {
      const double a = std::max(y(t, k), floor);
      const double b = std::max(y_hat(t, k), floor);
      const double d = std::log10((a * a) / (b * b));
      frame += d * d;
    }
    total += std::sqrt(frame / static_cast<double>(y.cols()));
  }
  return total / static_cast<double>(y.rows());
}

double chebyshev_t(int n, double x) {
  if (std::abs(x) <= 1.0) return std::cos(n * std::acos(x));
  const double s = (x < 0 && n % 2 == 1) ? -1.0 : 1.0;
  return s * std::cosh(n * std::acosh(std::abs(x)));
}

double cheby1_magnitude(int order, double ripple_db, double cutoff_hz, double sample_rate,
                        double freq_hz) {
  const double eps = std::sqrt(std::pow(10.0, ripple_db / 10.0) - 1.0);
  const double r = std::tan(kPi * freq_hz / sample_rate) / std::tan(kPi * cutoff_hz / sample_rate);
  const double tn = chebyshev_t(order, r);
  return 1.0 / std::sqrt(1.0 + eps * eps * tn * tn);
}

void radix2_fft(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  if ((n & (n - 1)) != 0) throw std::invalid_argument("radix2_fft needs a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * kPi / static_cast<double>(len);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w = 1.0;
      for (std::size_t k = 0; k < len / 2; ++k) {
        const auto u = a[i + k];
        const auto v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

double band_energy(const std::vector<double>& x, int rate, double lo_hz,
                          double hi_hz) {
  std::size_t n = 1;
  while (n < x.size()) n <<= 1;
  std::vector<std::complex<double>> a(n, 0.0);
  const double m = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double p = 2.0 * kPi * static_cast<double>(i) / m;
    const double w = 0.35875 - 0.48829 * std::cos(p) + 0.14128 * std::cos(2 * p) -
                     0.01168 * std::cos(3 * p);
    a[i] = x[i] * w;
  }
  radix2_fft(a);
  double e = 0.0;
  for (std::size_t k = 0; k <= n / 2; ++k) {
    const double f = static_cast<double>(k) * rate / static_cast<double>(n);
    if (f >= lo_hz && f < hi_hz) e += std::norm(a[k]);
  }
  return e;
}

double max_normalized_xcorr(const std::vector<double>& a, const std::vector<double>& b,
                            int max_lag) {
  double best = -1.0;
  const long n = static_cast<long>(std::min(a.size(), b.size()));
  for (int lag = -max_lag; lag <= max_lag; ++lag) {
    double ab = 0.0, aa = 0.0, bb = 0.0;
    for (long i = 0; i < n; ++i) {
      const long j = i + lag;
      if (j < 0 || j >= n) continue;
      ab += a[i] * b[j];
      aa += a[i] * a[i];
      bb += b[j] * b[j];
    }
    if (aa > 0 && bb > 0) best = std::max(best, ab / std::sqrt(aa * bb));
  }
  return best;
}

}  // namespace nvsr::testing
