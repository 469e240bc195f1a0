#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "cardiac4d/grid.hpp"

namespace cardiac4d {

struct StructureStats {
  Structure structure = Structure::background;
  double volume_mm3 = 0.0;
  double surface_mm2 = 0.0;
  std::size_t component_count = 0;
};

// Per-structure cohort volume statistics over all frames of the current
// iteration's dataset, indexed by structure code (index 0 unused).
struct CohortVolumeStats {
  std::array<double, kClassCount> mean_mm3{};
  std::array<double, kClassCount> std_mm3{};
  std::size_t frame_count = 0;
};

struct FlagResult {
  Structure structure = Structure::background;
  bool volume_outlier = false;
  bool multi_component = false;

  bool flagged() const { return volume_outlier || multi_component; }
  std::string reasons() const;  // "volume_outlier|multi_component", "" when clean
};

using FrameStats = std::array<StructureStats, 7>;
using FrameFlags = std::array<FlagResult, 7>;

// Thin vessel structures easily split into several components and are easy to
// correct post hoc, so they are exempt from the multi-component rule.
bool multi_component_exempt(Structure s);

// One entry per structure code 1..7, including empty structures.
FrameStats collect_stats(const LabelVolume& vol);

// Population mean/std per structure; requires at least two frames.
CohortVolumeStats cohort_volume_stats(const std::vector<FrameStats>& frames);

// volume_outlier iff |v - mean| > 2*std (a zero-std cohort flags any v != mean);
// multi_component iff component_count > 1 and the structure is not exempt.
FrameFlags flag_frame(const FrameStats& stats, const CohortVolumeStats& cohort);

// Per-structure fraction of frames flagged, indexed by structure code.
std::array<double, kClassCount> flagged_fraction(const std::vector<FrameFlags>& frames);

}  // namespace cardiac4d
