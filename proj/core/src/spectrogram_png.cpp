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

#include "nvsr/spectrogram_png.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <vector>

#include "nvsr/errors.hpp"

namespace nvsr {

void write_spectrogram_png(const std::filesystem::path& path, const MagSpectrogram& s,
                           double dynamic_range_db) {
  const auto width = static_cast<png_uint_32>(std::max<Eigen::Index>(s.frames(), 1));
  const auto height = static_cast<png_uint_32>(std::max<Eigen::Index>(s.mags.cols(), 1));

  const Eigen::ArrayXXd db = 20.0 * s.mags.array().max(1e-12).log10();
  const double top = s.mags.size() > 0 ? db.maxCoeff() : 0.0;
  const double bottom = top - dynamic_range_db;

  std::vector<png_byte> pixels(static_cast<std::size_t>(width) * height, 0);
  for (Eigen::Index t = 0; t < s.frames(); ++t) {
    for (Eigen::Index k = 0; k < s.mags.cols(); ++k) {
      const double v = std::clamp((db(t, k) - bottom) / dynamic_range_db, 0.0, 1.0);
      const std::size_t row = height - 1 - static_cast<std::size_t>(k);
      pixels[row * width + static_cast<std::size_t>(t)] =
          static_cast<png_byte>(std::lround(v * 255.0));
    }
  }

  std::unique_ptr<FILE, int (*)(FILE*)> fp(std::fopen(path.c_str(), "wb"), &std::fclose);
  if (!fp) throw IoError("cannot open " + path.string() + " for writing");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png != nullptr ? png_create_info_struct(png) : nullptr;
  if (png == nullptr || info == nullptr) {
    png_destroy_write_struct(&png, &info);
    throw IoError("libpng initialization failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("failed writing " + path.string());
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, width, height, 8, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (png_uint_32 y = 0; y < height; ++y) {
    png_write_row(png, &pixels[static_cast<std::size_t>(y) * width]);
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace nvsr
