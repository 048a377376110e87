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

#include <filesystem>
#include <vector>

namespace hfr {

/// Interleaved RGB image with values in [0,1].
struct Image {
  int height = 0;
  int width = 0;
  std::vector<double> rgb;  // height*width*3

  Image() = default;
  Image(int h, int w) : height(h), width(w) {
    rgb.assign(static_cast<size_t>(h) * w * 3, 0.0);
  }
  double at(int y, int x, int c) const {
    return rgb[(static_cast<size_t>(y) * width + x) * 3 + c];
  }
  double& at(int y, int x, int c) {
    return rgb[(static_cast<size_t>(y) * width + x) * 3 + c];
  }
};

/// Reads a PPM (P6), PGM (P5) or uncompressed 24/32-bit BMP file. Grayscale
/// sources are replicated across the three channels.
Image read_image(const std::filesystem::path& path);

/// Writes a binary PPM (P6, 8-bit). Values are clamped to [0,1] and rounded
/// to the nearest of 256 levels; the output bytes are a pure function of the
/// pixel values.
void write_ppm(const Image& img, const std::filesystem::path& path);

}  // namespace hfr
