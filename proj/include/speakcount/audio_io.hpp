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

#ifndef SPEAKCOUNT_AUDIO_IO_HPP_
#define SPEAKCOUNT_AUDIO_IO_HPP_

#include <string>

#include "speakcount/dsp.hpp"

namespace speakcount {

// Reads mono 16-bit PCM WAV at 16 kHz. Anything else (rate, channels,
// sample format) is rejected with a DataError naming the offending field.
AudioSegment read_wav(const std::string& path);

// Writes mono 16-bit PCM WAV; samples are clamped to [-1, 1] and rounded.
void write_wav(const std::string& path, const AudioSegment& seg);

// Feature archive: magic "LMFB", version u32, frames u32, n_mels u32, then
// frames*n_mels little-endian f32, row-major by frame.
void write_lmfb(const std::string& path, const LmfbMatrix& m);
LmfbMatrix read_lmfb(const std::string& path);

}  // namespace speakcount

#endif  // SPEAKCOUNT_AUDIO_IO_HPP_
