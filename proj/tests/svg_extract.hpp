#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathmorph/path.hpp"

namespace testsupport {

struct ExtractedPanel {
  pathmorph::Path original;
  pathmorph::Path image;
};

namespace svgdetail {

inline int int_attr(const std::string& doc, std::size_t from, const std::string& name) {
  const std::string key = name + "=\"";
  const std::size_t at = doc.find(key, from);
  if (at == std::string::npos) throw std::runtime_error("missing attribute " + name);
  return std::stoi(doc.substr(at + key.size()));
}

inline std::vector<int> decode_points(const std::string& pts, int x0, int y0, int unit) {
  std::vector<int> values;
  std::size_t i = 0;
  int expected_l = 0;
  while (i < pts.size()) {
    std::size_t comma = pts.find(',', i);
    std::size_t space = pts.find(' ', comma);
    if (space == std::string::npos) space = pts.size();
    const int x = std::stoi(pts.substr(i, comma - i));
    const int y = std::stoi(pts.substr(comma + 1, space - comma - 1));
    if ((x - x0) % unit != 0 || (y0 - y) % unit != 0) {
      throw std::runtime_error("vertex off the lattice grid");
    }
    if ((x - x0) / unit != expected_l) throw std::runtime_error("non-consecutive time coordinate");
    ++expected_l;
    values.push_back((y0 - y) / unit);
    i = space + (space < pts.size() ? 1 : 0);
  }
  return values;
}

inline pathmorph::Path polyline_path(const std::string& doc, std::size_t panel_at,
                                     const char* role, int x0, int y0, int unit) {
  const std::string marker = std::string("<polyline class=\"") + role + "\"";
  const std::size_t at = doc.find(marker, panel_at);
  if (at == std::string::npos) throw std::runtime_error("polyline not found");
  const std::string key = "points=\"";
  const std::size_t pts_at = doc.find(key, at) + key.size();
  const std::size_t pts_end = doc.find('"', pts_at);
  return pathmorph::validate(
      decode_points(doc.substr(pts_at, pts_end - pts_at), x0, y0, unit));
}

}  // namespace svgdetail

/// Recovers every (original, image) pair from a rendered document by
/// inverting the panel's affine pixel transform; throws on any defect.
inline std::vector<ExtractedPanel> extract_panels(const std::string& doc) {
  std::vector<ExtractedPanel> out;
  std::size_t cursor = 0;
  while (true) {
    const std::size_t panel_at = doc.find("<g class=\"panel\"", cursor);
    if (panel_at == std::string::npos) break;
    const int x0 = svgdetail::int_attr(doc, panel_at, "data-x0");
    const int y0 = svgdetail::int_attr(doc, panel_at, "data-y0");
    const int unit = svgdetail::int_attr(doc, panel_at, "data-unit");
    out.push_back(ExtractedPanel{
        svgdetail::polyline_path(doc, panel_at, "original", x0, y0, unit),
        svgdetail::polyline_path(doc, panel_at, "image", x0, y0, unit)});
    cursor = panel_at + 1;
  }
  return out;
}

}  // namespace testsupport
