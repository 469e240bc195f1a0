#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "cardiac4d/grid.hpp"

namespace cardiac4d {

struct OverlapCounts {
  std::size_t intersection = 0;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
};

// Directed surface-to-surface distances in mm, one entry per boundary voxel
// of the respective mask.
struct SurfaceDistanceSet {
  std::vector<double> a_to_b;
  std::vector<double> b_to_a;
};

struct ComponentReport {
  std::size_t component_count = 0;
  std::vector<std::size_t> component_sizes;  // sorted descending
};

OverlapCounts overlap_counts(const LabelVolume& a, const LabelVolume& b, Structure s);

// 2|A∩B| / (|A|+|B|). Returns nullopt when both masks are empty; silently
// scoring 1.0 or 0.0 there would bias per-structure means.
std::optional<double> dice(const LabelVolume& a, const LabelVolume& b, Structure s);

// A voxel is boundary iff it is foreground and at least one of its 6
// face-neighbors is background or outside the grid.
std::vector<std::array<int, 3>> extract_surface(const Mask& mask, const GridShape& shape);

// Exact Euclidean distance (mm, center-to-center, anisotropic spacing) to the
// nearest foreground voxel. All +inf when the mask is empty. Separable
// lower-envelope scan per axis over squared distances; exactness is checked
// against a brute-force oracle in the test suite.
std::vector<double> euclidean_distance_transform(const Mask& mask, const GridShape& shape,
                                                 const Spacing& spacing);

// Distances between the boundary-voxel point sets of the two masks, both
// directions. nullopt when either surface is empty.
std::optional<SurfaceDistanceSet> surface_distances(const LabelVolume& a, const LabelVolume& b,
                                                    Structure s);

// 95th percentile (nearest-rank) over the concatenation of both directed
// lists.
double hd95(const SurfaceDistanceSet& sd);

// Mean over the concatenation of both directed lists.
double assd(const SurfaceDistanceSet& sd);

double structure_volume_mm3(const LabelVolume& vol, Structure s);

// Exposed-face counting over the 6-neighborhood.
double structure_surface_area_mm2(const LabelVolume& vol, Structure s);

// 26-connectivity.
ComponentReport connected_components(const LabelVolume& vol, Structure s);

// Voxels of s outside its largest 26-connected component are relabeled to
// background. Size ties keep the component discovered first in raster order.
LabelVolume keep_largest_component(const LabelVolume& vol, Structure s);

// Shared internals, reused by the foundation simulator's morphology.
namespace detail {
// Component id per voxel (-1 for background) plus sizes in discovery order.
struct ComponentLabels {
  std::vector<std::int32_t> ids;
  std::vector<std::size_t> sizes;
};
ComponentLabels label_components_26(const Mask& mask, const GridShape& shape);
}  // namespace detail

}  // namespace cardiac4d
