#pragma once

#include <cstdint>
#include <vector>

namespace mscrnn {

/// Sentinel for pixels that carry no reference label.
inline constexpr int32_t kUnlabeled = -1;

/// Per-pixel class ids over an H x W patch, row-major.
struct LabelMap {
  int h = 0, w = 0;
  std::vector<int32_t> v;

  LabelMap() = default;
  LabelMap(int h_, int w_, int32_t fill = kUnlabeled) : h(h_), w(w_), v(size_t(h_) * w_, fill) {}

  int32_t& at(int y, int x) { return v[size_t(y) * w + x]; }
  int32_t at(int y, int x) const { return v[size_t(y) * w + x]; }
  size_t size() const { return v.size(); }

  friend bool operator==(const LabelMap&, const LabelMap&) = default;
};

/// Per-pixel validity mask (nonzero = labeled).
struct PixelMask {
  int h = 0, w = 0;
  std::vector<uint8_t> v;

  PixelMask() = default;
  PixelMask(int h_, int w_, bool fill = false) : h(h_), w(w_), v(size_t(h_) * w_, fill ? 1 : 0) {}

  bool at(int y, int x) const { return v[size_t(y) * w + x] != 0; }
  void set(int y, int x, bool on) { v[size_t(y) * w + x] = on ? 1 : 0; }
  size_t count() const {
    size_t n = 0;
    for (uint8_t b : v) n += b != 0;
    return n;
  }

  friend bool operator==(const PixelMask&, const PixelMask&) = default;
};

/// Per-pixel field polygon ids; 0 means "no field".
struct FieldMap {
  int h = 0, w = 0;
  std::vector<uint32_t> v;

  FieldMap() = default;
  FieldMap(int h_, int w_) : h(h_), w(w_), v(size_t(h_) * w_, 0) {}

  uint32_t& at(int y, int x) { return v[size_t(y) * w + x]; }
  uint32_t at(int y, int x) const { return v[size_t(y) * w + x]; }

  friend bool operator==(const FieldMap&, const FieldMap&) = default;
};

}  // namespace mscrnn
