#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cardiac4d/errors.hpp"

namespace cardiac4d {

// Voxel edge lengths in mm.
struct Spacing {
  double dx = 1.0;
  double dy = 1.0;
  double dz = 1.0;

  double voxel_volume_mm3() const { return dx * dy * dz; }
  void validate() const;  // strictly positive and finite
  bool operator==(const Spacing&) const = default;
};

struct GridShape {
  int nx = 0;
  int ny = 0;
  int nz = 0;

  std::size_t voxel_count() const {
    return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) *
           static_cast<std::size_t>(nz);
  }
  void validate() const;
  bool operator==(const GridShape&) const = default;
};

// Canonical structure codes. External label conventions (for example a
// foundation model's own IDs) are remapped to these at the I/O boundary.
enum class Structure : std::uint8_t {
  background = 0,
  lv_myo = 1,
  lv = 2,
  rv = 3,
  la = 4,
  ra = 5,
  aorta = 6,
  pulmonary_artery = 7,
};

inline constexpr int kClassCount = 8;  // background + 7 structures

inline constexpr std::array<Structure, 7> kForegroundStructures = {
    Structure::lv_myo, Structure::lv,    Structure::rv,   Structure::la,
    Structure::ra,     Structure::aorta, Structure::pulmonary_artery,
};

std::string_view structure_name(Structure s);
Structure structure_from_name(std::string_view name);  // throws DataError
Structure structure_from_code(int code);               // throws LabelRangeError
inline int structure_code(Structure s) { return static_cast<int>(s); }

// Dense boolean mask, one byte per voxel, row-major like everything else.
using Mask = std::vector<std::uint8_t>;

// One 3D intensity frame. Values are HU-like reals; NaN/Inf on ingestion is
// an error, never clamped.
struct ScalarVolume {
  GridShape shape;
  Spacing spacing;
  std::vector<float> values;

  void validate() const;
};

// One 3D label map over the canonical structure set.
struct LabelVolume {
  GridShape shape;
  Spacing spacing;
  std::vector<std::uint8_t> labels;

  void validate() const;
};

// Row-major, x fastest. Out-of-bounds coordinates are rejected.
std::size_t linear_index(const GridShape& shape, int x, int y, int z);
std::array<int, 3> delinearize(const GridShape& shape, std::size_t index);

// mask[i] is true iff labels[i] == code(s).
Mask foreground_mask(const LabelVolume& vol, Structure s);

struct Frame {
  ScalarVolume image;
  LabelVolume labels;
};

// A subject's 4D sequence: T paired frames sharing one grid. Studies marked
// is_manual carry fixed ground-truth labels that the self-training
// orchestrator never overwrites.
struct CineStudy {
  std::string subject_id;
  std::vector<Frame> frames;
  bool is_manual = false;

  int frame_count() const { return static_cast<int>(frames.size()); }
  void validate() const;
};

}  // namespace cardiac4d
