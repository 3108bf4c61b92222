#include "pathmorph/render.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace pathmorph {

namespace {

void check_spec(const RenderSpec& spec) {
  if (spec.cell_width < 1 || spec.cell_height < 1 || spec.columns < 1 || spec.unit < 1 ||
      spec.margin < 0) {
    raise(Errc::InvalidArgument, "render spec dimensions must be positive");
  }
}

struct Frame {
  int vmin = 0;  // lowest lattice value drawn (including the zero axis)
  int vmax = 0;
  int steps = 0;       // 2n
  int panel_w = 0;     // pixel pitch per panel
  int panel_h = 0;
  int x0 = 0;          // pixel x of time 0
  int y0 = 0;          // pixel y of value 0
};

Frame make_frame(const RenderSpec& spec, int vmin, int vmax, int steps) {
  Frame f;
  f.vmin = std::min(vmin, 0);
  f.vmax = std::max(vmax, 0);
  f.steps = steps;
  const int content_w = 2 * spec.margin + spec.unit * steps;
  const int content_h = 2 * spec.margin + spec.unit * (f.vmax - f.vmin);
  f.panel_w = std::max(spec.cell_width, content_w);
  f.panel_h = std::max(spec.cell_height, content_h);
  f.x0 = spec.margin;
  f.y0 = spec.margin + spec.unit * f.vmax;  // y grows downward; larger values sit higher
  return f;
}

std::string polyline(const Path& p, const Frame& f, const RenderSpec& spec,
                     const std::string& color, const char* role) {
  std::string pts;
  const auto& pos = p.positions();
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (i) pts += ' ';
    pts += std::to_string(f.x0 + spec.unit * static_cast<int>(i));
    pts += ',';
    pts += std::to_string(f.y0 - spec.unit * pos[i]);
  }
  return std::string("<polyline class=\"") + role + "\" fill=\"none\" stroke=\"" + color +
         "\" stroke-width=\"2\" points=\"" + pts + "\"/>";
}

std::string panel(const Path& p, const Path& q, const Frame& f, const RenderSpec& spec,
                  int tx, int ty) {
  std::string out = "<g class=\"panel\" transform=\"translate(" + std::to_string(tx) + "," +
                    std::to_string(ty) + ")\" data-x0=\"" + std::to_string(f.x0) +
                    "\" data-y0=\"" + std::to_string(f.y0) + "\" data-unit=\"" +
                    std::to_string(spec.unit) + "\">\n";
  if (spec.show_grid) {
    for (int v = f.vmin; v <= f.vmax; ++v) {
      const int y = f.y0 - spec.unit * v;
      out += "<line stroke=\"#dddddd\" stroke-width=\"1\" x1=\"" + std::to_string(f.x0) +
             "\" y1=\"" + std::to_string(y) + "\" x2=\"" +
             std::to_string(f.x0 + spec.unit * f.steps) + "\" y2=\"" + std::to_string(y) +
             "\"/>\n";
    }
    for (int l = 0; l <= f.steps; ++l) {
      const int x = f.x0 + spec.unit * l;
      out += "<line stroke=\"#dddddd\" stroke-width=\"1\" x1=\"" + std::to_string(x) +
             "\" y1=\"" + std::to_string(f.y0 - spec.unit * f.vmax) + "\" x2=\"" +
             std::to_string(x) + "\" y2=\"" + std::to_string(f.y0 - spec.unit * f.vmin) +
             "\"/>\n";
    }
  }
  if (spec.show_axis) {
    out += "<line class=\"axis\" stroke=\"#888888\" stroke-width=\"1\" x1=\"" +
           std::to_string(f.x0) + "\" y1=\"" + std::to_string(f.y0) + "\" x2=\"" +
           std::to_string(f.x0 + spec.unit * f.steps) + "\" y2=\"" + std::to_string(f.y0) +
           "\"/>\n";
  }
  out += polyline(p, f, spec, spec.original_color, "original") + "\n";
  out += polyline(q, f, spec, spec.image_color, "image") + "\n";
  out += "</g>\n";
  return out;
}

std::string document(const std::vector<std::pair<Path, Path>>& pairs, const RenderSpec& spec) {
  int vmin = 0, vmax = 0, steps = 0;
  for (const auto& [p, q] : pairs) {
    vmin = std::min({vmin, p.min_value(), q.min_value()});
    vmax = std::max({vmax, p.max_value(), q.max_value()});
    steps = std::max(steps, p.num_steps());
  }
  const Frame f = make_frame(spec, vmin, vmax, steps);

  const int count = static_cast<int>(pairs.size());
  const int cols = std::min(spec.columns, std::max(count, 1));
  const int rows = count == 0 ? 0 : (count + cols - 1) / cols;
  const int width = std::max(1, cols * f.panel_w);
  const int height = std::max(1, rows * f.panel_h);

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\">\n";
  out += "<rect width=\"" + std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" fill=\"white\"/>\n";
  for (int i = 0; i < count; ++i) {
    const int tx = (i % cols) * f.panel_w;
    const int ty = (i / cols) * f.panel_h;
    out += panel(pairs[static_cast<std::size_t>(i)].first, pairs[static_cast<std::size_t>(i)].second,
                 f, spec, tx, ty);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace

std::string render_pair(const Path& p, const Path& q, const RenderSpec& spec) {
  check_spec(spec);
  if (p.num_steps() != q.num_steps()) {
    raise(Errc::LengthMismatch, "paths of length " + std::to_string(p.num_steps()) + " and " +
                                    std::to_string(q.num_steps()) + " cannot be paired");
  }
  return document({{p, q}}, spec);
}

std::string render_gallery(int n, BijectionId bijection, const RenderSpec& spec, int limit) {
  check_spec(spec);
  if ((bijection == BijectionId::Phi2) && n < 2) {
    raise(Errc::NTooSmall, "phi2 gallery needs n >= 2");
  }
  std::vector<std::pair<Path, Path>> pairs;
  for_each_member(
      n, domain_of(bijection),
      [&](const Path& p) { pairs.emplace_back(p, detail::apply_unchecked(bijection, p)); },
      limit);
  return document(pairs, spec);
}

}  // namespace pathmorph
