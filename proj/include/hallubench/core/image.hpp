#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "hallubench/core/error.hpp"

namespace hallubench {

// Grayscale image, row-major float32, intensities normalized to [0, 1].
struct Image {
  int h = 0, w = 0;
  std::vector<float> px;

  Image() = default;
  Image(int h_, int w_, float fill = 0.0f) : h(h_), w(w_), px(size_t(h_) * w_, fill) {}

  float& at(int r, int c) { return px[size_t(r) * w + c]; }
  float at(int r, int c) const { return px[size_t(r) * w + c]; }
  size_t size() const { return px.size(); }

  void validate(const char* what = "image") const;
};

// Measurement-space image produced by a forward operator; dimensions are
// (H/k) x (W/k) of its source image.
struct Measurement {
  int h = 0, w = 0;
  std::vector<float> px;
  std::string operator_id;

  Measurement() = default;
  Measurement(int h_, int w_) : h(h_), w(w_), px(size_t(h_) * w_, 0.0f) {}

  float& at(int r, int c) { return px[size_t(r) * w + c]; }
  float at(int r, int c) const { return px[size_t(r) * w + c]; }
  size_t size() const { return px.size(); }

  void validate() const;
};

struct Patch {
  int row = 0, col = 0, size = 0;
  bool overlaps(const Patch& o) const {
    return row < o.row + o.size && o.row < row + size &&
           col < o.col + o.size && o.col < col + size;
  }
};

// Binary injection mask: a bitmap that is exactly the union of up to five
// non-overlapping axis-aligned square patches.
struct PatchMask {
  int h = 0, w = 0;
  std::vector<uint8_t> bitmap;
  std::vector<Patch> patches;

  PatchMask() = default;
  PatchMask(int h_, int w_) : h(h_), w(w_), bitmap(size_t(h_) * w_, 0) {}

  static PatchMask from_patches(int h, int w, const std::vector<Patch>& patches);

  bool empty() const { return patches.empty(); }
  uint8_t at(int r, int c) const { return bitmap[size_t(r) * w + c]; }
  size_t area() const;

  // Checks bitmap/patch-list equivalence, pairwise disjointness, bounds and
  // the patch-count limit. Empty masks are valid only when allow_empty.
  void validate(bool allow_empty = true) const;
};

// Plain measurement-space bitmap (no patch structure survives downsampling).
struct Bitmap {
  int h = 0, w = 0;
  std::vector<uint8_t> v;

  Bitmap() = default;
  Bitmap(int h_, int w_) : h(h_), w(w_), v(size_t(h_) * w_, 0) {}
  uint8_t at(int r, int c) const { return v[size_t(r) * w + c]; }
  size_t count() const;
};

// Double-precision working buffer for operator / guidance / metric math.
// Images are stored as float32; computation that feeds gradient checks or
// tight tolerances runs on Plane.
struct Plane {
  int h = 0, w = 0;
  std::vector<double> v;

  Plane() = default;
  Plane(int h_, int w_, double fill = 0.0) : h(h_), w(w_), v(size_t(h_) * w_, fill) {}

  double& at(int r, int c) { return v[size_t(r) * w + c]; }
  double at(int r, int c) const { return v[size_t(r) * w + c]; }
  size_t size() const { return v.size(); }
};

Plane to_plane(const Image& img);
Plane to_plane(const Measurement& m);
Image to_image(const Plane& p, bool clamp01 = false);

inline float clampf01(float v) { return v < 0.0f ? 0.0f : (v > 1.0f ? 1.0f : v); }

}  // namespace hallubench
