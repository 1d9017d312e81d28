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

#ifndef SPEAKCOUNT_CORPUS_HPP_
#define SPEAKCOUNT_CORPUS_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "speakcount/dsp.hpp"

namespace speakcount {

// Segment classes: how many speakers are simultaneously active.
enum class ClassLabel : int {
  kNonSpeech = 0,
  kOneSpeaker = 1,
  kTwoSpeakers = 2,
  kThreeSpeakers = 3,
};

constexpr int kNumClasses = 4;

const char* class_name(ClassLabel label);

// One clean source inside a mixture: a synthetic voice (f0 + seed) or a
// slice of a real recording (path + sample offset).
struct SourceSpec {
  enum class Kind { kSynth, kWav } kind = Kind::kSynth;
  double f0 = 0.0;
  uint64_t seed = 0;
  std::string path;
  size_t offset = 0;
};

// Background content for source-free segments.
enum class BackgroundKind { kNone, kSilence, kNoise };

// Everything needed to reproduce one mixture exactly.
struct MixSpec {
  std::vector<SourceSpec> sources;  // 0..3 entries
  std::vector<double> sir_db;       // one per source beyond the first
  BackgroundKind background = BackgroundKind::kNone;
  uint64_t background_seed = 0;
  double gain = 1.0;                // level randomization after mixing
  int segment_frames = 0;
};

struct ManifestEntry {
  std::string id;
  ClassLabel label = ClassLabel::kNonSpeech;
  MixSpec mix;
  std::string audio_path;  // relative to the manifest's directory
};

struct DatasetManifest {
  std::string split;
  int frames = 0;
  uint64_t seed = 0;
  double vad_threshold_db = -30.0;
  int min_active_frames = 0;
  std::array<int, kNumClasses> class_counts{};
  std::vector<ManifestEntry> entries;
};

// Knobs for the simulated corpus.
struct DatasetConfig {
  int per_class_train = 5000;
  int per_class_cv = 500;
  int per_class_test = 500;
  int frames = 20;
  uint64_t seed = 42;
  int max_speakers = 3;
  double sir_min_db = 0.0;
  double sir_max_db = 5.0;
  double vad_threshold_db = -30.0;
  double min_active_frac = 0.25;
  double f0_min = 95.0;
  double f0_max = 280.0;
  std::string source_dir;  // optional directory of clean 16 kHz WAVs
  DspConfig dsp;
};

// Samples needed for the given number of analysis frames.
size_t samples_for_frames(int frames, const DspConfig& cfg);

// Scales every source after the first so its power sits sir_db below the
// first source, sums, and rescales to peak <= 1 only if the sum clips.
// Throws DataError on length mismatch or a zero-power source.
AudioSegment mix_sources(const std::vector<AudioSegment>& sources,
                         const std::vector<double>& sir_db);

// Amplitude gain applied to each interferer by mix_sources; gains[0] is
// always 1. Exposed so callers can measure component powers directly.
std::vector<double> mix_gains(const std::vector<AudioSegment>& sources,
                              const std::vector<double>& sir_db);

// Frame-level activity: a frame is active iff its energy exceeds the peak
// frame energy scaled by rel_threshold_db (which must be negative).
std::vector<bool> energy_vad(const AudioSegment& seg, const DspConfig& cfg,
                             double rel_threshold_db);

// Number of masks with at least min_active_frames active frames, clamped
// to the 4 classes. Masks must share one frame count.
ClassLabel label_segment(const std::vector<std::vector<bool>>& masks,
                         int min_active_frames);

// Harmonic-rich periodic source with jittered f0, burst/gap envelope and
// syllabic amplitude modulation. Deterministic per (f0, seed).
AudioSegment synth_voice(double f0, int duration_frames, uint64_t seed,
                         const DspConfig& cfg = DspConfig{});

// Band-limited noise with a slowly moving level, for the non-speech class.
AudioSegment synth_noise(int duration_frames, uint64_t seed,
                         const DspConfig& cfg = DspConfig{});

// Renders one clean source described by a spec.
AudioSegment realize_source(const SourceSpec& spec, int frames,
                            const DspConfig& cfg);

// Renders the audio for a manifest entry: sources mixed at their SIRs (or
// the background for source-free entries), then the stored gain.
AudioSegment realize_audio(const ManifestEntry& entry, const DspConfig& cfg);

// Re-derives the label of an entry from per-source activity masks; the
// stored label must always match this.
ClassLabel derive_label(const ManifestEntry& entry,
                        const DatasetManifest& manifest,
                        const DspConfig& cfg);

// Builds one balanced split by generating candidate mixtures and labeling
// them from speaker activity until every class quota is filled.
DatasetManifest build_dataset_split(const DatasetConfig& cfg,
                                    const std::string& split, int per_class,
                                    uint64_t split_seed);

// Line-delimited text form; parse(render(m)) reproduces m exactly.
std::string render_manifest(const DatasetManifest& m);
DatasetManifest parse_manifest(const std::string& text);

void save_manifest(const std::string& path, const DatasetManifest& m);
DatasetManifest load_manifest(const std::string& path);

}  // namespace speakcount

#endif  // SPEAKCOUNT_CORPUS_HPP_
