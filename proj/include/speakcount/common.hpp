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

#ifndef SPEAKCOUNT_COMMON_HPP_
#define SPEAKCOUNT_COMMON_HPP_

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace speakcount {

// Bad or missing input data (files, manifests, shapes). CLI exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite values or other numerical breakdown. CLI exit code 3.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Portable deterministic RNG (splitmix64 core). Streams derived by hashing
// (seed, index) pairs are independent of iteration order, which keeps
// dataset generation and training reproducible bit-for-bit across runs.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

  // Standard normal via Box-Muller; no cached second value so draws stay
  // independent of call interleaving.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

 private:
  uint64_t state_;
};

// Mixes a base seed with stream indices into a fresh seed.
inline uint64_t derive_seed(uint64_t base, uint64_t a, uint64_t b = 0) {
  Rng r(base ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xd1b54a32d192ed03ULL));
  r.next_u64();
  return r.next_u64();
}

// In-place Fisher-Yates with our own RNG so shuffles do not depend on the
// standard library's unspecified std::shuffle algorithm.
template <typename T>
void deterministic_shuffle(std::vector<T>& v, Rng& rng) {
  for (size_t i = v.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(rng.below(i));
    std::swap(v[i - 1], v[j]);
  }
}

// Runs fn(chunk) for chunk in [0, n_chunks) on up to n_threads workers.
// The chunk partition is fixed by the caller, so any accumulation done per
// chunk and merged in chunk order is identical for every worker count.
inline void parallel_for_chunks(int n_chunks, int n_threads,
                                const std::function<void(int)>& fn) {
  if (n_threads <= 0) {
    n_threads = static_cast<int>(std::thread::hardware_concurrency());
    if (n_threads <= 0) n_threads = 1;
  }
  if (n_threads > n_chunks) n_threads = n_chunks;
  if (n_threads <= 1) {
    for (int c = 0; c < n_chunks; ++c) fn(c);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(static_cast<size_t>(n_threads));
  for (int w = 0; w < n_threads; ++w) {
    workers.emplace_back([w, n_chunks, n_threads, &fn]() {
      for (int c = w; c < n_chunks; c += n_threads) fn(c);
    });
  }
  for (auto& t : workers) t.join();
}

}  // namespace speakcount

#endif  // SPEAKCOUNT_COMMON_HPP_
