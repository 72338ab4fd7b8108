#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "napgeo/napoleon.hpp"

namespace napgeo::svg {

// Which figure layers to draw; each set includes the previous one.
//   config   - base triangle, outward flanks, cevians; labels A B C A1 B1 C1 J
//   napoleon - + inward apexes, flank centroids, both Napoleon triangles, K1..K3
//   grunbaum - + side midpoints, apex midpoints, second-level centroid triangles
enum class LayerSet { kConfig, kNapoleon, kGrunbaum };

std::optional<LayerSet> parse_layer_set(std::string_view name);

struct Segment {
  double x1, y1, x2, y2;
  std::string style;
};

struct Disc {
  double cx, cy, r;
  std::string style;
};

struct Label {
  double x, y;
  std::string text;
};

using Drawable = std::variant<Segment, Disc, Label>;

// Screen-space scene (y grows downward). The view box encloses every
// primitive with a margin of at least 5% of its larger extent on each side.
struct SvgScene {
  std::array<double, 4> viewbox{};  // min-x, min-y, width, height
  std::vector<Drawable> layers;
};

// Float conversion of the exact bundle happens here and only here.
SvgScene build_scene(const NapoleonBundle& bundle, LayerSet layers);

// SVG 1.1 document text.
std::string render(const SvgScene& scene);

// Labels drawn for a given layer set, in drawing order.
std::vector<std::string> labels_for(LayerSet layers);

}  // namespace napgeo::svg
