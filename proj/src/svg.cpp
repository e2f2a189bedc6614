#include "kmmtc/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "kmmtc/grid.hpp"

namespace kmmtc {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

struct Frame {
  double min_x, min_y, max_x, max_y;
  double sx(double x) const { return x - min_x; }
  double sy(double y) const { return max_y - y; }
  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
  void include(const Point& p, double pad) {
    min_x = std::min(min_x, p.x - pad);
    min_y = std::min(min_y, p.y - pad);
    max_x = std::max(max_x, p.x + pad);
    max_y = std::max(max_y, p.y + pad);
  }
};

}  // namespace

std::string render_svg(const Instance& instance, const std::optional<SolutionFile>& solution) {
  const double r = instance.r;
  const Point first = !instance.targets.empty() ? instance.targets[0] : instance.stations.at(0);
  Frame frame{first.x, first.y, first.x, first.y};
  for (const auto& t : instance.targets) frame.include(t, 1.2 * r);
  for (const auto& p : instance.stations) frame.include(p, 0.5 * r);
  if (solution) {
    for (const auto& pl : solution->placements) frame.include(pl.position, 0.5 * r);
  }
  const double marker = 0.08 * r;
  const double stroke = 0.02 * r;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 "
      << num(frame.width()) << ' ' << num(frame.height()) << "\" width=\"800\" height=\""
      << num(800.0 * frame.height() / std::max(frame.width(), 1e-12)) << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << num(frame.width()) << "\" height=\""
      << num(frame.height()) << "\" fill=\"white\"/>\n";

  if (solution && solution->m > 0 && !instance.targets.empty() && solution->shift_round >= 0 &&
      solution->shift_round < solution->m) {
    const Grid grid = bounding_box(instance, solution->m);
    svg << "<g class=\"cells\" fill=\"none\" stroke=\"#999999\" stroke-width=\"" << num(stroke)
        << "\">\n";
    for (const auto& cell : cells_for_shift(grid, instance.targets, solution->shift_round)) {
      const auto& ll = cell.lower_left;
      svg << "<rect x=\"" << num(frame.sx(ll.x)) << "\" y=\"" << num(frame.sy(ll.y + cell.side))
          << "\" width=\"" << num(cell.side) << "\" height=\"" << num(cell.side) << "\"/>\n";
      for (int s = 1; s < solution->m; ++s) {
        const double x = frame.sx(ll.x + s * grid.strip_width());
        svg << "<line class=\"strip\" x1=\"" << num(x) << "\" y1=\"" << num(frame.sy(ll.y))
            << "\" x2=\"" << num(x) << "\" y2=\"" << num(frame.sy(ll.y + cell.side))
            << "\" stroke-dasharray=\"" << num(4 * stroke) << "\"/>\n";
      }
    }
    svg << "</g>\n";
  }

  svg << "<g class=\"detection\" fill=\"none\" stroke=\"#3366cc\" stroke-width=\"" << num(stroke)
      << "\">\n";
  for (const auto& t : instance.targets) {
    svg << "<circle cx=\"" << num(frame.sx(t.x)) << "\" cy=\"" << num(frame.sy(t.y)) << "\" r=\""
        << num(r) << "\"/>\n";
  }
  svg << "</g>\n";

  svg << "<g class=\"targets\" stroke=\"black\" stroke-width=\"" << num(stroke) << "\">\n";
  for (const auto& t : instance.targets) {
    const double x = frame.sx(t.x), y = frame.sy(t.y);
    svg << "<path d=\"M " << num(x - marker) << ' ' << num(y) << " L " << num(x + marker) << ' '
        << num(y) << " M " << num(x) << ' ' << num(y - marker) << " L " << num(x) << ' '
        << num(y + marker) << "\"/>\n";
  }
  svg << "</g>\n";

  svg << "<g class=\"stations\" fill=\"#cc3333\">\n";
  for (const auto& p : instance.stations) {
    svg << "<rect x=\"" << num(frame.sx(p.x) - marker) << "\" y=\"" << num(frame.sy(p.y) - marker)
        << "\" width=\"" << num(2 * marker) << "\" height=\"" << num(2 * marker) << "\"/>\n";
  }
  svg << "</g>\n";

  if (solution) {
    svg << "<g class=\"placements\" stroke=\"#228833\" fill=\"#228833\" stroke-width=\""
        << num(stroke) << "\">\n";
    for (const auto& pl : solution->placements) {
      const double x = frame.sx(pl.position.x), y = frame.sy(pl.position.y);
      if (pl.station < instance.stations.size()) {
        const auto& p = instance.stations[pl.station];
        svg << "<line class=\"move\" x1=\"" << num(frame.sx(p.x)) << "\" y1=\"" << num(frame.sy(p.y))
            << "\" x2=\"" << num(x) << "\" y2=\"" << num(y) << "\"/>\n";
      }
      svg << "<path class=\"sensor\" d=\"M " << num(x) << ' ' << num(y - marker) << " L "
          << num(x + marker) << ' ' << num(y) << " L " << num(x) << ' ' << num(y + marker) << " L "
          << num(x - marker) << ' ' << num(y) << " Z\"/>\n";
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace kmmtc
