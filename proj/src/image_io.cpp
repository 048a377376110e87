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

#include "hfr/image_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "hfr/util.hpp"

namespace hfr {

namespace {

[[noreturn]] void fail(const std::filesystem::path& p, const std::string& why) {
  throw std::runtime_error("image '" + p.string() + "': " + why);
}

// Skips whitespace and '#' comment lines in a PNM header.
int pnm_int(std::istream& in) {
  int c = in.get();
  while (c == '#' || std::isspace(c)) {
    if (c == '#') {
      while (c != '\n' && c != EOF) c = in.get();
    }
    c = in.get();
  }
  int value = 0;
  bool any = false;
  while (std::isdigit(c)) {
    value = value * 10 + (c - '0');
    any = true;
    c = in.get();
  }
  if (!any) throw std::runtime_error("bad PNM header");
  return value;
}

Image read_pnm(std::ifstream& in, const std::filesystem::path& p, bool color) {
  int w = 0, h = 0, maxval = 0;
  try {
    w = pnm_int(in);
    h = pnm_int(in);
    maxval = pnm_int(in);
  } catch (const std::exception&) {
    fail(p, "malformed PNM header");
  }
  if (w <= 0 || h <= 0) fail(p, "bad dimensions");
  if (maxval != 255) fail(p, strfmt("unsupported maxval %d", maxval));
  const int ch = color ? 3 : 1;
  std::vector<unsigned char> raw(static_cast<size_t>(w) * h * ch);
  in.read(reinterpret_cast<char*>(raw.data()),
          static_cast<std::streamsize>(raw.size()));
  if (in.gcount() != static_cast<std::streamsize>(raw.size()))
    fail(p, "truncated pixel data");
  Image img(h, w);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (int c = 0; c < 3; ++c) {
        const size_t idx = (static_cast<size_t>(y) * w + x) * ch +
                           (color ? static_cast<size_t>(c) : 0);
        img.at(y, x, c) = raw[idx] / 255.0;
      }
  return img;
}

uint32_t le32(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

Image read_bmp(std::ifstream& in, const std::filesystem::path& p) {
  unsigned char hdr[54];
  in.seekg(0);
  in.read(reinterpret_cast<char*>(hdr), 54);
  if (in.gcount() != 54) fail(p, "truncated BMP header");
  const uint32_t data_offset = le32(hdr + 10);
  const int32_t w = static_cast<int32_t>(le32(hdr + 18));
  const int32_t h_raw = static_cast<int32_t>(le32(hdr + 22));
  const uint16_t bpp = static_cast<uint16_t>(hdr[28] | (hdr[29] << 8));
  const uint32_t compression = le32(hdr + 30);
  if (compression != 0) fail(p, "compressed BMP unsupported");
  if (bpp != 24 && bpp != 32) fail(p, strfmt("unsupported BMP depth %u", bpp));
  const bool bottom_up = h_raw > 0;
  const int h = bottom_up ? h_raw : -h_raw;
  if (w <= 0 || h <= 0) fail(p, "bad dimensions");
  const int bytes_pp = bpp / 8;
  const size_t row_stride = (static_cast<size_t>(w) * bytes_pp + 3) & ~3ULL;
  std::vector<unsigned char> row(row_stride);
  Image img(h, w);
  in.seekg(data_offset);
  for (int r = 0; r < h; ++r) {
    in.read(reinterpret_cast<char*>(row.data()),
            static_cast<std::streamsize>(row_stride));
    if (in.gcount() != static_cast<std::streamsize>(row_stride))
      fail(p, "truncated pixel data");
    const int y = bottom_up ? h - 1 - r : r;
    for (int x = 0; x < w; ++x) {
      const unsigned char* px = row.data() + static_cast<size_t>(x) * bytes_pp;
      img.at(y, x, 0) = px[2] / 255.0;  // BMP stores BGR
      img.at(y, x, 1) = px[1] / 255.0;
      img.at(y, x, 2) = px[0] / 255.0;
    }
  }
  return img;
}

}  // namespace

Image read_image(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open");
  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (in.gcount() != 2) fail(path, "empty file");
  if (magic[0] == 'P' && magic[1] == '6') return read_pnm(in, path, true);
  if (magic[0] == 'P' && magic[1] == '5') return read_pnm(in, path, false);
  if (magic[0] == 'B' && magic[1] == 'M') return read_bmp(in, path);
  fail(path, "unrecognized format (expected PPM/PGM/BMP)");
}

void write_ppm(const Image& img, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << "P6\n" << img.width << " " << img.height << "\n255\n";
  std::vector<unsigned char> raw(img.rgb.size());
  for (size_t i = 0; i < img.rgb.size(); ++i) {
    double v = img.rgb[i];
    if (v < 0.0) v = 0.0;
    if (v > 1.0) v = 1.0;
    raw[i] = static_cast<unsigned char>(std::lround(v * 255.0));
  }
  out.write(reinterpret_cast<const char*>(raw.data()),
            static_cast<std::streamsize>(raw.size()));
  if (!out) throw std::runtime_error("short write '" + path.string() + "'");
}

}  // namespace hfr
