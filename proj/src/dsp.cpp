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

#include "speakcount/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "speakcount/common.hpp"

namespace speakcount {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 Cooley-Tukey, in place.
void fft_radix2(std::vector<std::complex<double>>& a) {
  const size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * kPi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

}  // namespace

AudioSegment pre_emphasize(const AudioSegment& seg, double coeff) {
  if (coeff < 0.0 || coeff >= 1.0) {
    throw DataError("pre-emphasis coefficient must be in [0, 1), got " +
                    std::to_string(coeff));
  }
  AudioSegment out;
  out.sample_rate = seg.sample_rate;
  out.samples.resize(seg.samples.size());
  if (seg.samples.empty()) return out;
  out.samples[0] = seg.samples[0];  // no history for the first sample
  for (size_t t = 1; t < seg.samples.size(); ++t) {
    out.samples[t] = seg.samples[t] - coeff * seg.samples[t - 1];
  }
  return out;
}

int frame_count(size_t num_samples, const DspConfig& cfg) {
  if (num_samples < static_cast<size_t>(cfg.frame_len)) return 0;
  return static_cast<int>((num_samples - cfg.frame_len) / cfg.hop) + 1;
}

std::vector<std::vector<double>> frame_signal(const AudioSegment& seg,
                                              const DspConfig& cfg) {
  const int t_frames = frame_count(seg.samples.size(), cfg);
  std::vector<std::vector<double>> frames;
  frames.reserve(static_cast<size_t>(t_frames));
  for (int i = 0; i < t_frames; ++i) {
    const size_t start = static_cast<size_t>(i) * cfg.hop;
    frames.emplace_back(seg.samples.begin() + start,
                        seg.samples.begin() + start + cfg.frame_len);
  }
  return frames;
}

std::vector<double> magnitude_spectrum(const std::vector<double>& frame,
                                       int nfft) {
  if (static_cast<int>(frame.size()) > nfft) {
    throw DataError("frame longer than nfft (" +
                    std::to_string(frame.size()) + " > " +
                    std::to_string(nfft) + ")");
  }
  std::vector<std::complex<double>> buf(static_cast<size_t>(nfft),
                                        std::complex<double>(0.0, 0.0));
  for (size_t i = 0; i < frame.size(); ++i) buf[i] = frame[i];
  if (is_power_of_two(nfft)) {
    fft_radix2(buf);
  } else {
    // Direct DFT fallback for odd sizes; only used by tests.
    std::vector<std::complex<double>> out(buf.size());
    for (int k = 0; k < nfft; ++k) {
      std::complex<double> acc(0.0, 0.0);
      for (int n = 0; n < nfft; ++n) {
        const double ang = -2.0 * kPi * k * n / nfft;
        acc += buf[n] * std::complex<double>(std::cos(ang), std::sin(ang));
      }
      out[k] = acc;
    }
    buf = std::move(out);
  }
  std::vector<double> mag(static_cast<size_t>(nfft / 2 + 1));
  for (int k = 0; k <= nfft / 2; ++k) mag[k] = std::abs(buf[k]);
  return mag;
}

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double mel_to_hz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

MelFilterbank mel_filterbank(const DspConfig& cfg, int sample_rate) {
  const int n_bins = cfg.nfft / 2 + 1;
  const double nyquist = sample_rate / 2.0;
  const double bin_hz = static_cast<double>(sample_rate) / cfg.nfft;

  MelFilterbank fb;
  fb.n_mels = cfg.n_mels;
  fb.n_bins = n_bins;
  fb.weights.assign(static_cast<size_t>(cfg.n_mels) * n_bins, 0.0);
  fb.center_bins.resize(cfg.n_mels);
  fb.target_center_hz.resize(cfg.n_mels);

  // n_mels + 2 points equally spaced in mel between 0 and Nyquist; the
  // outer two are the first filter's left foot and the last one's right
  // foot. Snapped to bins so the triangles are linear in bin index.
  const int n_points = cfg.n_mels + 2;
  const double mel_max = hz_to_mel(nyquist);
  std::vector<int> point_bins(static_cast<size_t>(n_points));
  for (int p = 0; p < n_points; ++p) {
    const double hz = mel_to_hz(mel_max * p / (n_points - 1));
    int bin = static_cast<int>(std::lround(hz / bin_hz));
    bin = std::clamp(bin, 0, n_bins - 1);
    point_bins[p] = bin;
    if (p >= 1 && p <= cfg.n_mels) {
      fb.center_bins[p - 1] = bin;
      fb.target_center_hz[p - 1] = hz;
    }
  }
  for (int p = 1; p < n_points; ++p) {
    if (point_bins[p] <= point_bins[p - 1]) {
      throw DataError("mel filterbank degenerate: adjacent centers share bin " +
                      std::to_string(point_bins[p]));
    }
  }

  // Between adjacent centers, the rising weight of one filter and the
  // falling weight of its neighbour are computed as u and 1 - u from a
  // single division, so their sum is exactly 1 on every interior bin.
  for (int p = 0; p + 1 < n_points; ++p) {
    const int lo = point_bins[p];
    const int hi = point_bins[p + 1];
    for (int bin = lo; bin < hi; ++bin) {
      const double u =
          static_cast<double>(bin - lo) / static_cast<double>(hi - lo);
      if (p >= 1) {  // falling slope of filter p-1 on [center, right foot)
        fb.weights[static_cast<size_t>(p - 1) * n_bins + bin] = 1.0 - u;
      }
      if (p + 1 <= cfg.n_mels) {  // rising slope of filter p on [left foot, center)
        fb.weights[static_cast<size_t>(p) * n_bins + bin] = u;
      }
    }
  }
  // Right foot of the last filter ends with weight 0 at point_bins.back().
  return fb;
}

LmfbMatrix extract_lmfb(const AudioSegment& seg, const DspConfig& cfg) {
  const int t_frames = frame_count(seg.samples.size(), cfg);
  if (t_frames == 0) {
    throw DataError("insufficient samples for one frame: got " +
                    std::to_string(seg.samples.size()) + ", need " +
                    std::to_string(cfg.frame_len));
  }
  const AudioSegment emphasized = pre_emphasize(seg, cfg.pre_emphasis_coeff);
  const auto frames = frame_signal(emphasized, cfg);
  const MelFilterbank fb = mel_filterbank(cfg, seg.sample_rate);

  std::vector<double> window;
  if (cfg.window == WindowType::kHamming) {
    window.resize(static_cast<size_t>(cfg.frame_len));
    for (int n = 0; n < cfg.frame_len; ++n) {
      window[n] = 0.54 - 0.46 * std::cos(2.0 * kPi * n / (cfg.frame_len - 1));
    }
  }

  LmfbMatrix out;
  out.frames = t_frames;
  out.n_mels = cfg.n_mels;
  out.values.resize(static_cast<size_t>(t_frames) * cfg.n_mels);
  std::vector<double> frame(static_cast<size_t>(cfg.frame_len));
  for (int t = 0; t < t_frames; ++t) {
    frame = frames[static_cast<size_t>(t)];
    if (!window.empty()) {
      for (int n = 0; n < cfg.frame_len; ++n) frame[n] *= window[n];
    }
    const auto mag = magnitude_spectrum(frame, cfg.nfft);
    for (int m = 0; m < cfg.n_mels; ++m) {
      double energy = 0.0;
      for (int k = 0; k < fb.n_bins; ++k) {
        const double w = fb.at(m, k);
        if (w != 0.0) energy += w * mag[k] * mag[k];
      }
      out.values[static_cast<size_t>(t) * cfg.n_mels + m] =
          std::log(std::max(energy, cfg.log_floor));
    }
  }
  return out;
}

}  // namespace speakcount
