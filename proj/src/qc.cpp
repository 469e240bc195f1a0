#include "cardiac4d/qc.hpp"

#include <cmath>

#include "cardiac4d/metrics.hpp"
#include "cardiac4d/stats.hpp"

namespace cardiac4d {

std::string FlagResult::reasons() const {
  std::string r;
  if (volume_outlier) r = "volume_outlier";
  if (multi_component) {
    if (!r.empty()) r += "|";
    r += "multi_component";
  }
  return r;
}

bool multi_component_exempt(Structure s) {
  return s == Structure::aorta || s == Structure::pulmonary_artery;
}

FrameStats collect_stats(const LabelVolume& vol) {
  FrameStats stats;
  for (std::size_t i = 0; i < kForegroundStructures.size(); ++i) {
    const Structure s = kForegroundStructures[i];
    StructureStats& entry = stats[i];
    entry.structure = s;
    entry.volume_mm3 = structure_volume_mm3(vol, s);
    entry.surface_mm2 = structure_surface_area_mm2(vol, s);
    entry.component_count = connected_components(vol, s).component_count;
  }
  return stats;
}

CohortVolumeStats cohort_volume_stats(const std::vector<FrameStats>& frames) {
  if (frames.size() < 2) {
    throw DataError("cohort volume statistics require at least two frames");
  }
  CohortVolumeStats cohort;
  cohort.frame_count = frames.size();
  std::vector<double> values(frames.size());
  for (std::size_t i = 0; i < kForegroundStructures.size(); ++i) {
    for (std::size_t f = 0; f < frames.size(); ++f) values[f] = frames[f][i].volume_mm3;
    const int code = structure_code(kForegroundStructures[i]);
    cohort.mean_mm3[code] = mean_of(values);
    cohort.std_mm3[code] = population_std(values);
  }
  return cohort;
}

FrameFlags flag_frame(const FrameStats& stats, const CohortVolumeStats& cohort) {
  FrameFlags flags;
  for (std::size_t i = 0; i < stats.size(); ++i) {
    const Structure s = stats[i].structure;
    const int code = structure_code(s);
    FlagResult& r = flags[i];
    r.structure = s;
    r.volume_outlier =
        std::abs(stats[i].volume_mm3 - cohort.mean_mm3[code]) > 2.0 * cohort.std_mm3[code];
    r.multi_component = stats[i].component_count > 1 && !multi_component_exempt(s);
  }
  return flags;
}

std::array<double, kClassCount> flagged_fraction(const std::vector<FrameFlags>& frames) {
  if (frames.empty()) throw DataError("flagged_fraction requires at least one frame");
  std::array<double, kClassCount> fraction{};
  for (const FrameFlags& frame : frames) {
    for (const FlagResult& r : frame) {
      if (r.flagged()) fraction[structure_code(r.structure)] += 1.0;
    }
  }
  for (double& f : fraction) f /= static_cast<double>(frames.size());
  return fraction;
}

}  // namespace cardiac4d
