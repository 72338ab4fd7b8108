#include "napgeo/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

namespace napgeo::svg {

namespace {

struct Screen {
  double x, y;
};

Screen to_screen(const Point& p) { return {p.x.to_double(), -p.y.to_double()}; }

class SceneBuilder {
 public:
  explicit SceneBuilder(const NapoleonBundle& b) {
    for_each_point(b, [&](const std::string& label, const Point& p) {
      points_.emplace(label, to_screen(p));
    });
  }

  void segment(const std::string& p, const std::string& q, const std::string& style) {
    const Screen a = points_.at(p);
    const Screen c = points_.at(q);
    scene_.layers.push_back(Segment{a.x, a.y, c.x, c.y, style});
  }

  void triangle(const std::string& p, const std::string& q, const std::string& r,
                const std::string& style) {
    segment(p, q, style);
    segment(q, r, style);
    segment(r, p, style);
  }

  void circle(const Circle& k) {
    const Screen c = to_screen(k.center);
    scene_.layers.push_back(Disc{c.x, c.y, std::sqrt(k.r2.to_double()), "circle"});
  }

  void label(const std::string& name) {
    const Screen s = points_.at(name);
    scene_.layers.push_back(Label{s.x, s.y, name});
  }

  SvgScene finish() {
    double lo_x = std::numeric_limits<double>::infinity();
    double lo_y = lo_x;
    double hi_x = -lo_x;
    double hi_y = -lo_x;
    auto grow = [&](double x, double y) {
      lo_x = std::min(lo_x, x);
      hi_x = std::max(hi_x, x);
      lo_y = std::min(lo_y, y);
      hi_y = std::max(hi_y, y);
    };
    for (const auto& d : scene_.layers) {
      if (const auto* s = std::get_if<Segment>(&d)) {
        grow(s->x1, s->y1);
        grow(s->x2, s->y2);
      } else if (const auto* c = std::get_if<Disc>(&d)) {
        grow(c->cx - c->r, c->cy - c->r);
        grow(c->cx + c->r, c->cy + c->r);
      } else if (const auto* l = std::get_if<Label>(&d)) {
        grow(l->x, l->y);
      }
    }
    const double extent = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    const double margin = 0.08 * extent;
    scene_.viewbox = {lo_x - margin, lo_y - margin, hi_x - lo_x + 2 * margin,
                      hi_y - lo_y + 2 * margin};
    return std::move(scene_);
  }

 private:
  std::map<std::string, Screen> points_;
  SvgScene scene_;
};

}  // namespace

std::optional<LayerSet> parse_layer_set(std::string_view name) {
  if (name == "config") return LayerSet::kConfig;
  if (name == "napoleon") return LayerSet::kNapoleon;
  if (name == "grunbaum") return LayerSet::kGrunbaum;
  return std::nullopt;
}

std::vector<std::string> labels_for(LayerSet layers) {
  std::vector<std::string> out = {"A", "B", "C", "A1", "B1", "C1", "J"};
  if (layers == LayerSet::kConfig) return out;
  for (const char* s : {"A1p", "B1p", "C1p", "G1", "G2", "G3", "G1p", "G2p", "G3p", "G"}) {
    out.emplace_back(s);
  }
  if (layers == LayerSet::kNapoleon) return out;
  for (const char* s : {"M1", "M2", "M3", "A2", "B2", "C2", "A2p", "B2p", "C2p", "Astar",
                        "Bstar", "Cstar", "Astarstar", "Bstarstar", "Cstarstar"}) {
    out.emplace_back(s);
  }
  return out;
}

SvgScene build_scene(const NapoleonBundle& b, LayerSet layers) {
  SceneBuilder sb(b);
  sb.triangle("A", "B", "C", "base");
  sb.triangle("A1", "B", "C", "flank");
  sb.triangle("A", "B1", "C", "flank");
  sb.triangle("A", "B", "C1", "flank");
  sb.segment("A", "A1", "flank");
  sb.segment("B", "B1", "flank");
  sb.segment("C", "C1", "flank");
  if (layers != LayerSet::kConfig) {
    sb.triangle("A1p", "B", "C", "flank");
    sb.triangle("A", "B1p", "C", "flank");
    sb.triangle("A", "B", "C1p", "flank");
    sb.triangle("G1", "G2", "G3", "napoleon");
    sb.triangle("G1p", "G2p", "G3p", "napoleon");
    for (const Circle& k : b.flank_circles) sb.circle(k);
  }
  if (layers == LayerSet::kGrunbaum) {
    sb.triangle("A2", "B2", "C2", "flank");
    sb.triangle("A2p", "B2p", "C2p", "flank");
    sb.triangle("Astar", "Bstar", "Cstar", "napoleon");
    sb.triangle("Astarstar", "Bstarstar", "Cstarstar", "napoleon");
  }
  for (const auto& name : labels_for(layers)) sb.label(name);
  return sb.finish();
}

std::string render(const SvgScene& scene) {
  const auto& vb = scene.viewbox;
  const double unit = std::max(vb[2], vb[3]) / 400.0;
  std::ostringstream out;
  out << std::setprecision(10);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << vb[0] << ' '
      << vb[1] << ' ' << vb[2] << ' ' << vb[3] << "\">\n"
      << "<style>\n"
      << ".base { stroke: #000; stroke-width: " << 2 * unit << "; fill: none; }\n"
      << ".flank { stroke: #1f5fa8; stroke-width: " << unit << "; fill: none; }\n"
      << ".napoleon { stroke: #b3261e; stroke-width: " << 1.5 * unit << "; fill: none; }\n"
      << ".circle { stroke: #6a6a6a; stroke-width: " << 0.75 * unit
      << "; fill: none; stroke-dasharray: " << 4 * unit << "; }\n"
      << ".label { font-family: sans-serif; font-size: " << 12 * unit << "px; fill: #000; }\n"
      << "</style>\n";
  for (const auto& d : scene.layers) {
    if (const auto* s = std::get_if<Segment>(&d)) {
      out << "<line class=\"" << s->style << "\" x1=\"" << s->x1 << "\" y1=\"" << s->y1
          << "\" x2=\"" << s->x2 << "\" y2=\"" << s->y2 << "\"/>\n";
    } else if (const auto* c = std::get_if<Disc>(&d)) {
      out << "<circle class=\"" << c->style << "\" cx=\"" << c->cx << "\" cy=\"" << c->cy
          << "\" r=\"" << c->r << "\"/>\n";
    } else if (const auto* l = std::get_if<Label>(&d)) {
      out << "<g class=\"label\"><circle cx=\"" << l->x << "\" cy=\"" << l->y << "\" r=\""
          << 2 * unit << "\"/><text x=\"" << l->x + 3 * unit << "\" y=\"" << l->y - 3 * unit
          << "\">" << l->text << "</text></g>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace napgeo::svg
