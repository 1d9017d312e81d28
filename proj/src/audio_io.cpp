// Copyright (c) 2026 The speakcount Authors
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

#include "speakcount/audio_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "speakcount/common.hpp"

namespace speakcount {

namespace {

constexpr int kSampleRate = 16000;

void put_u16(std::vector<char>& buf, uint16_t v) {
  buf.push_back(static_cast<char>(v & 0xff));
  buf.push_back(static_cast<char>((v >> 8) & 0xff));
}

void put_u32(std::vector<char>& buf, uint32_t v) {
  for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

uint16_t get_u16(const unsigned char* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

uint32_t get_u32(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

std::vector<unsigned char> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  return bytes;
}

void write_file(const std::string& path, const std::vector<char>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open file for writing: " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw DataError("short write: " + path);
}

}  // namespace

AudioSegment read_wav(const std::string& path) {
  const auto bytes = read_file(path);
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw DataError("not a RIFF/WAVE file: " + path);
  }
  size_t pos = 12;
  bool have_fmt = false;
  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  AudioSegment seg;
  bool have_data = false;
  while (pos + 8 <= bytes.size()) {
    const char* tag = reinterpret_cast<const char*>(bytes.data() + pos);
    const uint32_t chunk_size = get_u32(bytes.data() + pos + 4);
    const size_t body = pos + 8;
    if (body + chunk_size > bytes.size()) {
      throw DataError("truncated WAV chunk in " + path);
    }
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      if (chunk_size < 16) throw DataError("bad fmt chunk in " + path);
      format = get_u16(bytes.data() + body);
      channels = get_u16(bytes.data() + body + 2);
      rate = get_u32(bytes.data() + body + 4);
      bits = get_u16(bytes.data() + body + 14);
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      if (!have_fmt) throw DataError("WAV data chunk before fmt in " + path);
      if (format != 1) {
        throw DataError(path + ": unsupported WAV format " +
                        std::to_string(format) + " (need PCM)");
      }
      if (channels != 1) {
        throw DataError(path + ": expected mono, got " +
                        std::to_string(channels) + " channels");
      }
      if (rate != kSampleRate) {
        throw DataError(path + ": expected 16000 Hz, got " +
                        std::to_string(rate) + " Hz");
      }
      if (bits != 16) {
        throw DataError(path + ": expected 16-bit samples, got " +
                        std::to_string(bits));
      }
      const size_t n = chunk_size / 2;
      seg.samples.resize(n);
      for (size_t i = 0; i < n; ++i) {
        const int16_t s = static_cast<int16_t>(get_u16(bytes.data() + body + 2 * i));
        seg.samples[i] = s / 32768.0;
      }
      have_data = true;
    }
    pos = body + chunk_size + (chunk_size & 1);  // chunks are word-aligned
  }
  if (!have_data) throw DataError("WAV has no data chunk: " + path);
  seg.sample_rate = kSampleRate;
  return seg;
}

void write_wav(const std::string& path, const AudioSegment& seg) {
  if (seg.sample_rate != kSampleRate) {
    throw DataError("write_wav expects 16000 Hz, got " +
                    std::to_string(seg.sample_rate));
  }
  const uint32_t n = static_cast<uint32_t>(seg.samples.size());
  const uint32_t data_bytes = n * 2;
  std::vector<char> buf;
  buf.reserve(44 + data_bytes);
  buf.insert(buf.end(), {'R', 'I', 'F', 'F'});
  put_u32(buf, 36 + data_bytes);
  buf.insert(buf.end(), {'W', 'A', 'V', 'E'});
  buf.insert(buf.end(), {'f', 'm', 't', ' '});
  put_u32(buf, 16);
  put_u16(buf, 1);  // PCM
  put_u16(buf, 1);  // mono
  put_u32(buf, kSampleRate);
  put_u32(buf, kSampleRate * 2);
  put_u16(buf, 2);
  put_u16(buf, 16);
  buf.insert(buf.end(), {'d', 'a', 't', 'a'});
  put_u32(buf, data_bytes);
  for (uint32_t i = 0; i < n; ++i) {
    const double clamped = std::clamp(seg.samples[i], -1.0, 1.0);
    const int v = static_cast<int>(std::lround(clamped * 32767.0));
    put_u16(buf, static_cast<uint16_t>(static_cast<int16_t>(v)));
  }
  write_file(path, buf);
}

void write_lmfb(const std::string& path, const LmfbMatrix& m) {
  std::vector<char> buf;
  buf.reserve(16 + m.values.size() * 4);
  buf.insert(buf.end(), {'L', 'M', 'F', 'B'});
  put_u32(buf, 1);  // version
  put_u32(buf, static_cast<uint32_t>(m.frames));
  put_u32(buf, static_cast<uint32_t>(m.n_mels));
  for (double v : m.values) {
    const float f = static_cast<float>(v);
    uint32_t bits;
    std::memcpy(&bits, &f, 4);
    put_u32(buf, bits);
  }
  write_file(path, buf);
}

LmfbMatrix read_lmfb(const std::string& path) {
  const auto bytes = read_file(path);
  if (bytes.size() < 16 || std::memcmp(bytes.data(), "LMFB", 4) != 0) {
    throw DataError("not an LMFB archive: " + path);
  }
  const uint32_t version = get_u32(bytes.data() + 4);
  if (version != 1) {
    throw DataError(path + ": unsupported LMFB version " +
                    std::to_string(version));
  }
  LmfbMatrix m;
  m.frames = static_cast<int>(get_u32(bytes.data() + 8));
  m.n_mels = static_cast<int>(get_u32(bytes.data() + 12));
  const size_t count = static_cast<size_t>(m.frames) * m.n_mels;
  if (bytes.size() != 16 + count * 4) {
    throw DataError(path + ": corrupt LMFB archive (expected " +
                    std::to_string(16 + count * 4) + " bytes, got " +
                    std::to_string(bytes.size()) + ")");
  }
  m.values.resize(count);
  for (size_t i = 0; i < count; ++i) {
    const uint32_t bits = get_u32(bytes.data() + 16 + 4 * i);
    float f;
    std::memcpy(&f, &bits, 4);
    m.values[i] = f;
  }
  return m;
}

}  // namespace speakcount
