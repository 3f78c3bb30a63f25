// Copyright (c) 2026 The TrapForge Authors. All Rights Reserved.
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

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace trapforge {

/// Deterministic random stream. The engine is std::mt19937_64, whose output
/// sequence is pinned by the C++ standard; all variate transforms (uniform,
/// normal, gamma, beta) are implemented here so draws do not depend on the
/// standard library's unspecified distribution algorithms.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t stream_seed) : engine_(stream_seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0,1) with 53 bits of precision.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0,n). Unbiased via rejection. n must be >= 1.
  std::uint64_t uniform_int(std::uint64_t n);

  /// Uniform real in [lo,hi).
  double uniform_real(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  /// Standard normal via Box-Muller; the second value of each pair is cached.
  double normal();

  /// Gamma(alpha, 1) via Marsaglia-Tsang, with the boost transform for
  /// alpha < 1. alpha must be > 0.
  double gamma(double alpha);

  /// Beta(a, b) as the gamma ratio X / (X + Y).
  double beta(double a, double b);

 private:
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

/// splitmix64 step: increments then scrambles. Good avalanche, used for all
/// stream-id derivation.
std::uint64_t mix_u64(std::uint64_t x);

/// FNV-1a over the bytes of s, folded with the given basis offset.
std::uint64_t hash_bytes(std::string_view s);

/// Stream id for (run seed, sample id, step index). Equal inputs always give
/// equal streams, so a sample's draws do not depend on what else is in the
/// batch or on worker scheduling.
std::uint64_t derive_stream(std::uint64_t seed, std::string_view sample_id,
                            std::uint64_t step_index);

/// Reserved step indices for run-level streams; pipeline steps use indices
/// 0..n-1, far below these.
inline constexpr std::uint64_t kMixupLambdaStream = 1ULL << 62;
inline constexpr std::uint64_t kMixupPairingStream = (1ULL << 62) + 1;

}  // namespace trapforge
