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

#include "nvsr/melf.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "nvsr/errors.hpp"

namespace nvsr {
namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
  const std::array<char, 4> b = {static_cast<char>(v & 0xFF),
                                 static_cast<char>((v >> 8) & 0xFF),
                                 static_cast<char>((v >> 16) & 0xFF),
                                 static_cast<char>((v >> 24) & 0xFF)};
  out.write(b.data(), 4);
}

std::uint32_t get_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint32_t checked_u32(Eigen::Index v, const char* what) {
  if (v < 0 || v > static_cast<Eigen::Index>(UINT32_MAX)) {
    throw InvalidArgument(std::string("MELF ") + what + " out of range");
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace

void write_melf(std::ostream& out, const MelSpectrogram& m) {
  out.write("MELF", 4);
  put_u32(out, kMelfVersion);
  put_u32(out, checked_u32(m.frames(), "frame count"));
  put_u32(out, checked_u32(m.n_mels(), "band count"));
  put_u32(out, checked_u32(m.framing.sample_rate, "sample rate"));
  put_u32(out, checked_u32(m.framing.window_len, "window length"));
  put_u32(out, checked_u32(m.framing.hop, "hop"));
  const char scale = static_cast<char>(m.scale);
  out.write(&scale, 1);
  for (Eigen::Index t = 0; t < m.frames(); ++t) {
    for (Eigen::Index f = 0; f < m.n_mels(); ++f) {
      const float v = static_cast<float>(m.energies(t, f));
      std::uint32_t raw;
      std::memcpy(&raw, &v, sizeof raw);
      put_u32(out, raw);
    }
  }
  if (!out) throw IoError("failed writing MELF stream");
}

void write_melf(const std::filesystem::path& path, const MelSpectrogram& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_melf(out, m);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

void write_melf_atomic(const std::filesystem::path& path, const MelSpectrogram& m) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  write_melf(tmp, m);
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename " + tmp.string() + ": " + ec.message());
}

MelSpectrogram read_melf(std::istream& in) {
  std::array<unsigned char, kMelfHeaderSize> header{};
  in.read(reinterpret_cast<char*>(header.data()), header.size());
  if (in.gcount() != static_cast<std::streamsize>(header.size())) {
    throw MalformedFile("MELF header truncated");
  }
  if (std::memcmp(header.data(), "MELF", 4) != 0) throw MalformedFile("bad MELF magic");
  const std::uint32_t version = get_u32(&header[4]);
  if (version != kMelfVersion) {
    throw MalformedFile("unsupported MELF version " + std::to_string(version));
  }
  const std::uint32_t frames = get_u32(&header[8]);
  const std::uint32_t bands = get_u32(&header[12]);
  MelSpectrogram m;
  m.framing.sample_rate = static_cast<int>(get_u32(&header[16]));
  m.framing.window_len = static_cast<int>(get_u32(&header[20]));
  m.framing.hop = static_cast<int>(get_u32(&header[24]));
  const unsigned char scale = header[28];
  if (scale > 1) throw MalformedFile("unknown MELF scale flag " + std::to_string(scale));
  m.scale = static_cast<MelScale>(scale);

  const std::size_t count = static_cast<std::size_t>(frames) * bands;
  constexpr std::size_t kMaxValues = std::size_t{1} << 28;
  if (count > kMaxValues) {
    throw MalformedFile("MELF header claims " + std::to_string(frames) + "x" +
                        std::to_string(bands) + " values");
  }
  std::vector<unsigned char> payload(count * 4);
  in.read(reinterpret_cast<char*>(payload.data()),
          static_cast<std::streamsize>(payload.size()));
  if (static_cast<std::size_t>(in.gcount()) != payload.size()) {
    throw MalformedFile("MELF payload truncated: expected " +
                        std::to_string(payload.size()) + " bytes");
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw MalformedFile("trailing bytes after MELF payload");
  }
  m.energies.resize(frames, bands);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t raw = get_u32(&payload[i * 4]);
    float v;
    std::memcpy(&v, &raw, sizeof v);
    m.energies.data()[i] = v;
  }
  return m;
}

MelSpectrogram read_melf(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_melf(in);
}

}  // namespace nvsr
