#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

namespace zerotig {

// Dense H x W x C tensor of doubles, row-major with interleaved channels.
// Pixel values are unitless intensities; the pipeline keeps them in [0,1].
struct Image {
  int height = 0;
  int width = 0;
  int channels = 0;
  std::vector<double> data;

  Image() = default;
  Image(int h, int w, int c, double fill = 0.0)
      : height(h), width(w), channels(c),
        data(static_cast<std::size_t>(h) * w * c, fill) {}

  bool empty() const { return data.empty(); }
  std::size_t size() const { return data.size(); }

  double& at(int y, int x, int c) {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  double at(int y, int x, int c) const {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }

  bool same_shape(const Image& o) const {
    return height == o.height && width == o.width && channels == o.channels;
  }

  bool all_finite() const {
    for (double v : data)
      if (!std::isfinite(v)) return false;
    return true;
  }

  Image& clamp_(double lo, double hi) {
    for (double& v : data) v = std::min(hi, std::max(lo, v));
    return *this;
  }
};

// Rec.601 luma weights, used for every brightness computation in the library.
inline constexpr double kLumaR = 0.299;
inline constexpr double kLumaG = 0.587;
inline constexpr double kLumaB = 0.114;

inline double pixel_luminance(const Image& img, int y, int x) {
  if (img.channels == 1) return img.at(y, x, 0);
  return kLumaR * img.at(y, x, 0) + kLumaG * img.at(y, x, 1) +
         kLumaB * img.at(y, x, 2);
}

inline Image luminance_plane(const Image& img) {
  Image out(img.height, img.width, 1);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) out.at(y, x, 0) = pixel_luminance(img, y, x);
  return out;
}

inline double mean_luminance(const Image& img) {
  double acc = 0.0;
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) acc += pixel_luminance(img, y, x);
  return acc / (static_cast<double>(img.height) * img.width);
}

inline double channel_mean(const Image& img, int c) {
  double acc = 0.0;
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) acc += img.at(y, x, c);
  return acc / (static_cast<double>(img.height) * img.width);
}

inline double mean_all(const Image& img) {
  double acc = 0.0;
  for (double v : img.data) acc += v;
  return acc / static_cast<double>(img.data.size());
}

// Bilinear resize to an explicit target size. Sample positions follow the
// align-corners=false convention; border samples clamp.
inline Image resize_bilinear(const Image& img, int out_h, int out_w) {
  assert(out_h >= 1 && out_w >= 1);
  Image out(out_h, out_w, img.channels);
  const double sy = static_cast<double>(img.height) / out_h;
  const double sx = static_cast<double>(img.width) / out_w;
  for (int y = 0; y < out_h; ++y) {
    double fy = (y + 0.5) * sy - 0.5;
    fy = std::min(std::max(fy, 0.0), static_cast<double>(img.height - 1));
    const int y0 = static_cast<int>(std::floor(fy));
    const int y1 = std::min(y0 + 1, img.height - 1);
    const double wy = fy - y0;
    for (int x = 0; x < out_w; ++x) {
      double fx = (x + 0.5) * sx - 0.5;
      fx = std::min(std::max(fx, 0.0), static_cast<double>(img.width - 1));
      const int x0 = static_cast<int>(std::floor(fx));
      const int x1 = std::min(x0 + 1, img.width - 1);
      const double wx = fx - x0;
      for (int c = 0; c < img.channels; ++c) {
        const double top = img.at(y0, x0, c) * (1.0 - wx) + img.at(y0, x1, c) * wx;
        const double bot = img.at(y1, x0, c) * (1.0 - wx) + img.at(y1, x1, c) * wx;
        out.at(y, x, c) = top * (1.0 - wy) + bot * wy;
      }
    }
  }
  return out;
}

inline Image concat_channels(const Image& a, const Image& b) {
  assert(a.height == b.height && a.width == b.width);
  Image out(a.height, a.width, a.channels + b.channels);
  for (int y = 0; y < a.height; ++y)
    for (int x = 0; x < a.width; ++x) {
      for (int c = 0; c < a.channels; ++c) out.at(y, x, c) = a.at(y, x, c);
      for (int c = 0; c < b.channels; ++c) out.at(y, x, a.channels + c) = b.at(y, x, c);
    }
  return out;
}

inline Image slice_channels(const Image& img, int first, int count) {
  assert(first >= 0 && first + count <= img.channels);
  Image out(img.height, img.width, count);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x)
      for (int c = 0; c < count; ++c) out.at(y, x, c) = img.at(y, x, first + c);
  return out;
}

}  // namespace zerotig
