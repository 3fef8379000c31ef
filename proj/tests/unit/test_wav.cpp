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

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "nvsr/errors.hpp"
#include "nvsr/log.hpp"
#include "nvsr/wav.hpp"
#include "signals.hpp"

namespace fs = std::filesystem;
using namespace nvsr;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "nvsr_test_wav";
  fs::create_directories(dir);
  return dir / name;
}

void append16(std::vector<char>& v, std::uint16_t x) {
  v.push_back(static_cast<char>(x & 0xff));
  v.push_back(static_cast<char>(x >> 8));
}

void append32(std::vector<char>& v, std::uint32_t x) {
  for (int i = 0; i < 4; ++i) v.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

// Stereo 16-bit PCM file with an extra chunk before "data".
void write_stereo(const fs::path& p, const std::vector<std::int16_t>& interleaved, int rate) {
  std::vector<char> b;
  const std::uint32_t data_bytes = static_cast<std::uint32_t>(interleaved.size() * 2);
  b.insert(b.end(), {'R', 'I', 'F', 'F'});
  append32(b, 4 + 24 + 12 + 8 + data_bytes);
  b.insert(b.end(), {'W', 'A', 'V', 'E', 'f', 'm', 't', ' '});
  append32(b, 16);
  append16(b, 1);
  append16(b, 2);
  append32(b, rate);
  append32(b, rate * 4);
  append16(b, 4);
  append16(b, 16);
  b.insert(b.end(), {'L', 'I', 'S', 'T'});
  append32(b, 4);
  b.insert(b.end(), {'a', 'b', 'c', 'd'});
  b.insert(b.end(), {'d', 'a', 't', 'a'});
  append32(b, data_bytes);
  for (std::int16_t s : interleaved) append16(b, static_cast<std::uint16_t>(s));
  std::ofstream(p, std::ios::binary).write(b.data(), static_cast<std::streamsize>(b.size()));
}

}  // namespace

TEST_CASE("16-bit PCM round trip is within one quantisation step", "[wav]") {
  const auto w = testing::white_noise(0.25, 22050, 4, 0.15);
  const auto p = scratch("pcm16.wav");
  write_wav(p, w, WavEncoding::kPcm16);
  WavReadInfo info;
  const auto r = read_wav(p, &info);
  CHECK(info.encoding == WavEncoding::kPcm16);
  CHECK(info.channels == 1);
  CHECK_FALSE(info.downmixed);
  REQUIRE(r.size() == w.size());
  CHECK(r.sample_rate == 22050);
  for (std::size_t i = 0; i < w.size(); ++i) {
    CHECK(std::abs(r.samples[i] - w.samples[i]) <= 0.5 / 32768.0 + 1e-15);
  }
}

TEST_CASE("32-bit float round trip is exact to single precision", "[wav]") {
  const auto w = testing::sinusoid(440.0, 0.1, 8000);
  const auto p = scratch("float.wav");
  write_wav(p, w, WavEncoding::kFloat32);
  const auto r = read_wav(p);
  REQUIRE(r.size() == w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    CHECK(r.samples[i] == static_cast<double>(static_cast<float>(w.samples[i])));
  }
}

TEST_CASE("PCM writing clips out-of-range samples", "[wav]") {
  Waveform w{{-2.0, -1.0, 0.0, 1.0, 2.0}, 16000};
  const auto p = scratch("clip.wav");
  write_wav(p, w);
  const auto r = read_wav(p);
  CHECK(r.samples[0] == -1.0);
  CHECK(r.samples[1] == -1.0);
  CHECK(r.samples[2] == 0.0);
  CHECK(r.samples[3] == 32767.0 / 32768.0);
  CHECK(r.samples[4] == 32767.0 / 32768.0);
}

TEST_CASE("multi-channel input is averaged to mono with a warning", "[wav]") {
  const auto p = scratch("stereo.wav");
  write_stereo(p, {16384, 0, -16384, -16384, 8192, 24576}, 44100);
  std::vector<std::string> warnings;
  set_warning_handler([&](std::string_view m) { warnings.emplace_back(m); });
  WavReadInfo info;
  const auto r = read_wav(p, &info);
  set_warning_handler(nullptr);
  REQUIRE(r.size() == 3);
  CHECK(r.samples[0] == 0.25);
  CHECK(r.samples[1] == -0.5);
  CHECK(r.samples[2] == 0.5);
  CHECK(info.channels == 2);
  CHECK(info.downmixed);
  CHECK(warnings.size() == 1);
}

TEST_CASE("empty waveform round trips", "[wav]") {
  const auto p = scratch("empty.wav");
  write_wav(p, Waveform{{}, 8000});
  const auto r = read_wav(p);
  CHECK(r.empty());
  CHECK(r.sample_rate == 8000);
}

TEST_CASE("unreadable and malformed files are distinct errors", "[wav]") {
  CHECK_THROWS_AS(read_wav(scratch("does_not_exist.wav")), IoError);

  const auto junk = scratch("junk.wav");
  std::ofstream(junk) << "definitely not RIFF";
  CHECK_THROWS_AS(read_wav(junk), MalformedFile);

  const auto truncated = scratch("truncated.wav");
  write_wav(truncated, testing::white_noise(0.01, 8000, 1));
  fs::resize_file(truncated, 30);
  CHECK_THROWS_AS(read_wav(truncated), MalformedFile);
}
