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

#ifndef SPEAKCOUNT_DSP_HPP_
#define SPEAKCOUNT_DSP_HPP_

#include <cstddef>
#include <vector>

namespace speakcount {

// Mono audio at a fixed sample rate, amplitudes nominally in [-1, 1].
struct AudioSegment {
  std::vector<double> samples;
  int sample_rate = 16000;
};

enum class WindowType { kRectangular, kHamming };

// Front-end parameters: 25 ms frames, 10 ms hop at 16 kHz, 512-point
// spectra, 40 mel filters.
struct DspConfig {
  double pre_emphasis_coeff = 0.97;
  int frame_len = 400;
  int hop = 160;
  int nfft = 512;
  int n_mels = 40;
  double log_floor = 1e-10;
  WindowType window = WindowType::kRectangular;
};

// T x n_mels log mel filterbank energies, row-major by frame.
struct LmfbMatrix {
  int frames = 0;
  int n_mels = 0;
  std::vector<double> values;

  double at(int t, int m) const { return values[static_cast<size_t>(t) * n_mels + m]; }
};

// y[t] = x[t] - coeff * x[t-1]; y[0] = x[0]. coeff must be in [0, 1).
AudioSegment pre_emphasize(const AudioSegment& seg, double coeff);

// Number of full frames in a signal of the given length; trailing partial
// frames are dropped.
int frame_count(size_t num_samples, const DspConfig& cfg);

// Frame i covers samples [i*hop, i*hop + frame_len). Short signals yield
// zero frames.
std::vector<std::vector<double>> frame_signal(const AudioSegment& seg,
                                              const DspConfig& cfg);

// One-sided magnitude of the nfft-point DFT (bins 0..nfft/2). The frame is
// zero-padded to nfft; it must not be longer than nfft.
std::vector<double> magnitude_spectrum(const std::vector<double>& frame,
                                       int nfft);

// Perceptual frequency scale used to place the filter centers.
double hz_to_mel(double hz);
double mel_to_hz(double mel);

// Triangular mel filterbank, n_mels x (nfft/2 + 1), row-major. Centers are
// equally spaced on the mel scale from 0 Hz to sample_rate/2 and snapped to
// FFT bins, so each filter peaks at exactly 1 and adjacent slopes sum to
// exactly 1 on every interior bin.
struct MelFilterbank {
  int n_mels = 0;
  int n_bins = 0;
  std::vector<double> weights;          // n_mels x n_bins
  std::vector<int> center_bins;         // peak bin per filter
  std::vector<double> target_center_hz; // pre-snap mel-spaced centers

  double at(int mel, int bin) const { return weights[static_cast<size_t>(mel) * n_bins + bin]; }
};

MelFilterbank mel_filterbank(const DspConfig& cfg, int sample_rate = 16000);

// Full front end: pre-emphasis -> framing -> power spectrum -> filterbank
// -> log(max(., log_floor)). Throws DataError if the segment is shorter
// than one frame.
LmfbMatrix extract_lmfb(const AudioSegment& seg, const DspConfig& cfg);

}  // namespace speakcount

#endif  // SPEAKCOUNT_DSP_HPP_
