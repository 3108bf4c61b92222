#pragma once

#include <string>

#include "pathmorph/bijections.hpp"
#include "pathmorph/path.hpp"

namespace pathmorph {

/// Styling for the paired-path SVG panels. One lattice unit maps to `unit`
/// pixels on both axes; every emitted coordinate is an integer, so paths can
/// be read back from the document exactly.
struct RenderSpec {
  int cell_width = 240;
  int cell_height = 240;
  int columns = 2;
  std::string original_color = "blue";
  std::string image_color = "red";
  bool show_grid = true;
  bool show_axis = true;
  int unit = 24;
  int margin = 24;
};

/// One panel with both polylines: p in original_color, q in image_color.
/// Throws LengthMismatch when the paths differ in length. Byte-identical
/// output for identical inputs.
std::string render_pair(const Path& p, const Path& q, const RenderSpec& spec = {});

/// One panel per (input, image) pair of the bijection's domain at size n, in
/// canonical enumeration order, spec.columns panels per row.
std::string render_gallery(int n, BijectionId bijection, const RenderSpec& spec = {},
                           int limit = kDefaultExhaustiveLimit);

}  // namespace pathmorph
