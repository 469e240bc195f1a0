#include "cardiac4d/grid.hpp"

#include <cmath>
#include <limits>

namespace cardiac4d {

void Spacing::validate() const {
  for (double v : {dx, dy, dz}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DataError("spacing components must be strictly positive and finite");
    }
  }
}

void GridShape::validate() const {
  if (nx < 1 || ny < 1 || nz < 1) {
    throw DataError("grid shape counts must all be >= 1");
  }
  const auto max = std::numeric_limits<std::size_t>::max();
  std::size_t total = static_cast<std::size_t>(nx);
  if (total > max / static_cast<std::size_t>(ny)) throw DataError("grid voxel count overflows");
  total *= static_cast<std::size_t>(ny);
  if (total > max / static_cast<std::size_t>(nz)) throw DataError("grid voxel count overflows");
}

namespace {

constexpr std::array<std::string_view, kClassCount> kNames = {
    "background", "LV_myo", "LV", "RV", "LA", "RA", "aorta", "pulmonary_artery",
};

}  // namespace

std::string_view structure_name(Structure s) {
  return kNames[static_cast<std::size_t>(s)];
}

Structure structure_from_name(std::string_view name) {
  for (int c = 0; c < kClassCount; ++c) {
    if (kNames[static_cast<std::size_t>(c)] == name) return static_cast<Structure>(c);
  }
  throw DataError("unknown structure name: " + std::string(name));
}

Structure structure_from_code(int code) {
  if (code < 0 || code >= kClassCount) {
    throw LabelRangeError("structure code out of range [0,7]: " + std::to_string(code));
  }
  return static_cast<Structure>(code);
}

void ScalarVolume::validate() const {
  shape.validate();
  spacing.validate();
  if (values.size() != shape.voxel_count()) {
    throw DataError("scalar volume length does not match its shape");
  }
  for (float v : values) {
    if (!std::isfinite(v)) throw DataError("scalar volume contains non-finite intensity");
  }
}

void LabelVolume::validate() const {
  shape.validate();
  spacing.validate();
  if (labels.size() != shape.voxel_count()) {
    throw DataError("label volume length does not match its shape");
  }
  for (std::uint8_t v : labels) {
    if (v >= kClassCount) {
      throw LabelRangeError("label value out of range [0,7]: " + std::to_string(int(v)));
    }
  }
}

std::size_t linear_index(const GridShape& shape, int x, int y, int z) {
  if (x < 0 || x >= shape.nx || y < 0 || y >= shape.ny || z < 0 || z >= shape.nz) {
    throw DataError("voxel coordinate out of bounds");
  }
  return (static_cast<std::size_t>(z) * shape.ny + static_cast<std::size_t>(y)) * shape.nx +
         static_cast<std::size_t>(x);
}

std::array<int, 3> delinearize(const GridShape& shape, std::size_t index) {
  if (index >= shape.voxel_count()) throw DataError("linear index out of bounds");
  const std::size_t plane = static_cast<std::size_t>(shape.nx) * shape.ny;
  const int z = static_cast<int>(index / plane);
  const std::size_t rem = index % plane;
  const int y = static_cast<int>(rem / shape.nx);
  const int x = static_cast<int>(rem % shape.nx);
  return {x, y, z};
}

Mask foreground_mask(const LabelVolume& vol, Structure s) {
  const std::uint8_t code = static_cast<std::uint8_t>(s);
  Mask mask(vol.labels.size(), 0);
  for (std::size_t i = 0; i < vol.labels.size(); ++i) {
    mask[i] = vol.labels[i] == code ? 1 : 0;
  }
  return mask;
}

void CineStudy::validate() const {
  if (frames.empty()) throw DataError("study must contain at least one frame");
  const GridShape& shape = frames.front().image.shape;
  const Spacing& spacing = frames.front().image.spacing;
  for (const Frame& f : frames) {
    f.image.validate();
    f.labels.validate();
    if (!(f.image.shape == shape) || !(f.labels.shape == shape)) {
      throw DataError("all frames of a study must share one shape");
    }
    if (!(f.image.spacing == spacing) || !(f.labels.spacing == spacing)) {
      throw DataError("all frames of a study must share one spacing");
    }
  }
}

}  // namespace cardiac4d
