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

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hfr {

/// Dense row-major double tensor. Images and batches use (C,H,W) and
/// (N,C,H,W) layouts respectively.
struct Tensor {
  std::vector<int> shape;
  std::vector<double> v;

  Tensor() = default;
  explicit Tensor(std::vector<int> s) : shape(std::move(s)) {
    v.assign(static_cast<size_t>(numel_of(shape)), 0.0);
  }

  static int64_t numel_of(const std::vector<int>& s) {
    int64_t n = 1;
    for (int d : s) {
      if (d < 0) throw std::invalid_argument("negative tensor dim");
      n *= d;
    }
    return n;
  }

  int64_t numel() const { return static_cast<int64_t>(v.size()); }
  int dim(int i) const { return shape[static_cast<size_t>(i)]; }
  int ndim() const { return static_cast<int>(shape.size()); }

  // (C,H,W)
  double& at(int c, int y, int x) {
    return v[(static_cast<size_t>(c) * shape[1] + y) * shape[2] + x];
  }
  double at(int c, int y, int x) const {
    return v[(static_cast<size_t>(c) * shape[1] + y) * shape[2] + x];
  }

  // (N,C,H,W)
  double& at(int n, int c, int y, int x) {
    return v[((static_cast<size_t>(n) * shape[1] + c) * shape[2] + y) *
                 shape[3] +
             x];
  }
  double at(int n, int c, int y, int x) const {
    return v[((static_cast<size_t>(n) * shape[1] + c) * shape[2] + y) *
                 shape[3] +
             x];
  }
};

/// Copies sample i of a (N,C,H,W) batch into a (C,H,W) tensor.
inline Tensor batch_sample(const Tensor& batch, int i) {
  Tensor out({batch.dim(1), batch.dim(2), batch.dim(3)});
  const size_t stride = out.v.size();
  std::copy(batch.v.begin() + static_cast<int64_t>(i) * stride,
            batch.v.begin() + static_cast<int64_t>(i + 1) * stride,
            out.v.begin());
  return out;
}

/// Writes a (C,H,W) tensor into sample i of a (N,C,H,W) batch.
inline void set_batch_sample(Tensor& batch, int i, const Tensor& sample) {
  const size_t stride = sample.v.size();
  std::copy(sample.v.begin(), sample.v.end(),
            batch.v.begin() + static_cast<int64_t>(i) * stride);
}

}  // namespace hfr
