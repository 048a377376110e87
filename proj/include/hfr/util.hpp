/*
 Copyright 2026 hfrkit authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace hfr {

uint64_t fnv1a64(const void* data, size_t n,
                 uint64_t state = 0xcbf29ce484222325ULL);
uint64_t fnv1a64(const std::string& s);
std::string to_hex(uint64_t v);

/// Derives an independent child seed from a base seed and a purpose tag.
/// Distinct tags give uncorrelated streams; the mapping is stable across
/// runs and platforms.
uint64_t derive_seed(uint64_t base, const std::string& tag);

/// Seeded random stream. The engine is std::mt19937_64 (fully specified by
/// the standard); the distributions are implemented here instead of the
/// std:: ones, whose output is implementation-defined.
class RandomStream {
 public:
  explicit RandomStream(uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0,1) with 53 random bits.
  double uniform01();
  /// Standard normal via Box-Muller.
  double normal();
  double normal(double mean, double stddev) { return mean + stddev * normal(); }
  /// Uniform integer in [0,n), n > 0.
  int uniform_int(int n);
  uint64_t next_u64() { return engine_(); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(uniform_int(static_cast<int>(i)));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Runs fn(0..n_jobs-1) on up to n_workers threads, joining before return.
/// Jobs must be independent; results are deterministic regardless of the
/// worker count.
void parallel_for(int n_jobs, int n_workers,
                  const std::function<void(int)>& fn);

std::string strfmt(const char* fmt, ...);

}  // namespace hfr
