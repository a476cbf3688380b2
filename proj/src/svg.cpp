#include "tubes/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "tubes/error.hpp"
#include "tubes/intersections.hpp"

namespace tubes {

namespace {

constexpr const char* kPositive = "#d62728";
constexpr const char* kNegative = "#1f77b4";
constexpr const char* kFirstArc = "#2ca02c";
constexpr const char* kSecondArc = "#9467bd";
constexpr const char* kInk = "#000000";

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

struct Scene {
  std::int64_t n = 1;
  std::vector<PLArc> arcs;             // drawn curves
  std::vector<const char*> colors;     // one per curve
  std::vector<CrossingRecord> crossings;
  std::int64_t x_min = 0;
  std::int64_t x_max = 0;
};

PLArc tent(const ArcU& lift) {
  return PLArc{{Point{lift.a(), 0}, Point{Rational(lift.a() + lift.b(), 2), Rational(1, 2)}, Point{lift.b(), 0}}};
}

Scene build_scene(const std::vector<ArcAnn>& arcs, const DrawOptions& options) {
  if (arcs.empty() || arcs.size() > 2) throw TubeError(ErrorKind::InvalidArgument, "draw takes one or two arcs");
  Scene scene;
  scene.n = arcs.front().n();
  const char* first = options.monochrome ? kInk : kFirstArc;
  const char* second = options.monochrome ? kInk : kSecondArc;
  if (arcs.size() == 1) {
    const ArcU lift = canonical_lift(arcs.front());
    scene.arcs.push_back(tent(lift));
    scene.colors.push_back(first);
    scene.x_min = std::min<std::int64_t>(0, lift.a()) - 1;
    scene.x_max = std::max(lift.b(), scene.n) + 1;
    return scene;
  }
  const ArcAnn& alpha = arcs[0];
  const ArcAnn& beta = arcs[1];
  if (alpha.n() != beta.n()) throw TubeError(ErrorKind::RankMismatch, "arcs live in different annuli");
  const bool alpha_short = alpha.len() < beta.len() || (alpha.len() == beta.len() && alpha.a() <= beta.a());
  const ArcAnn& shorter = alpha_short ? alpha : beta;
  const ArcAnn& longer = alpha_short ? beta : alpha;
  const PLRealization pl = pl_realization(scene.n, shorter, longer, Rational(1, 2));
  const CrossingReport report = cover_count(scene.n, alpha, beta, true);
  scene.crossings = *report.points;
  scene.arcs.push_back(pl.gamma);
  scene.colors.push_back(alpha_short ? first : second);

  const std::int64_t gmin = floor_div(pl.gamma.min_x().num(), pl.gamma.min_x().den());
  const std::int64_t gmax = -floor_div(-pl.gamma.max_x().num(), pl.gamma.max_x().den());
  scene.x_min = gmin - 1;
  scene.x_max = gmax + 1;
  if (options.view == View::Annulus) {
    scene.arcs.push_back(pl.delta);
    scene.colors.push_back(alpha_short ? second : first);
  } else {
    for (std::int64_t m = floor_div(gmin - pl.delta_lift.b(), scene.n);
         m * scene.n + pl.delta_lift.a() <= gmax; ++m) {
      if (pl.delta_lift.b() + m * scene.n < gmin) continue;
      scene.arcs.push_back(pl.delta.translated(Rational(m * scene.n)));
      scene.colors.push_back(alpha_short ? second : first);
      scene.x_min = std::min(scene.x_min, pl.delta_lift.a() + m * scene.n - 1);
      scene.x_max = std::max(scene.x_max, pl.delta_lift.b() + m * scene.n + 1);
    }
  }
  return scene;
}

void marker(std::ostringstream& os, const std::string& px, const std::string& py, int sign, bool monochrome) {
  const char* fill = monochrome ? kInk : (sign > 0 ? kPositive : kNegative);
  if (sign > 0) {
    os << "  <circle class=\"crossing positive\" cx=\"" << px << "\" cy=\"" << py << "\" r=\"5\" fill=\"" << fill
       << "\"/>\n";
  } else {
    os << "  <rect class=\"crossing negative\" x=\"" << px << "\" y=\"" << py
       << "\" width=\"9\" height=\"9\" transform=\"translate(-4.5,-4.5)\" fill=\"" << fill << "\"/>\n";
  }
}

std::string render_cover(const Scene& scene, const DrawOptions& options) {
  const Rational unit(40);
  const Rational height(160);
  const Rational margin(20);
  auto px = [&](const Rational& x) { return (margin + (x - Rational(scene.x_min)) * unit).to_decimal(6); };
  auto py = [&](const Rational& y) { return (margin + (Rational(1) - y) * height).to_decimal(6); };
  const std::int64_t width = 40 + (scene.x_max - scene.x_min) * 40;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"220\" viewBox=\"0 0 "
     << width << " 220\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"220\" fill=\"#ffffff\"/>\n";
  os << "  <line x1=\"" << px(Rational(scene.x_min)) << "\" y1=\"" << py(0) << "\" x2=\"" << px(Rational(scene.x_max))
     << "\" y2=\"" << py(0) << "\" stroke=\"" << kInk << "\"/>\n";
  os << "  <line x1=\"" << px(Rational(scene.x_min)) << "\" y1=\"" << py(1) << "\" x2=\"" << px(Rational(scene.x_max))
     << "\" y2=\"" << py(1) << "\" stroke=\"" << kInk << "\"/>\n";
  for (std::int64_t x = scene.x_min; x <= scene.x_max; ++x) {
    os << "  <circle class=\"marked-point\" cx=\"" << px(Rational(x)) << "\" cy=\"" << py(0)
       << "\" r=\"2.5\" fill=\"" << kInk << "\"/>\n";
    os << "  <text x=\"" << px(Rational(x)) << "\" y=\"" << (margin + height + Rational(16)).to_decimal(6)
       << "\" font-size=\"11\" text-anchor=\"middle\">" << mod_floor(x, scene.n) << "</text>\n";
  }
  for (std::size_t i = 0; i < scene.arcs.size(); ++i) {
    os << "  <polyline class=\"arc\" fill=\"none\" stroke=\"" << scene.colors[i] << "\" stroke-width=\"1.5\" points=\"";
    const auto& vs = scene.arcs[i].vertices;
    for (std::size_t k = 0; k < vs.size(); ++k) os << (k ? " " : "") << px(vs[k].x) << "," << py(vs[k].y);
    os << "\"/>\n";
  }
  for (const CrossingRecord& c : scene.crossings) marker(os, px(c.x), py(c.y), c.sign, options.monochrome);
  os << "</svg>\n";
  return os.str();
}

std::string render_annulus(const Scene& scene, const DrawOptions& options) {
  const double center = 200.0;
  const double radius = 160.0;
  const double n = static_cast<double>(scene.n);
  auto map = [&](double x, double y) {
    const double theta = 2.0 * std::numbers::pi * x / n;
    const double r = radius * (1.0 - 0.6 * y);
    return std::pair{center + r * std::cos(theta), center - r * std::sin(theta)};
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"400\" height=\"400\" fill=\"#ffffff\"/>\n";
  os << "  <circle cx=\"" << fmt(center) << "\" cy=\"" << fmt(center) << "\" r=\"" << fmt(radius)
     << "\" fill=\"none\" stroke=\"" << kInk << "\"/>\n";
  os << "  <circle cx=\"" << fmt(center) << "\" cy=\"" << fmt(center) << "\" r=\"" << fmt(radius * 0.4)
     << "\" fill=\"none\" stroke=\"" << kInk << "\"/>\n";
  for (std::int64_t i = 0; i < scene.n; ++i) {
    const auto [x, y] = map(static_cast<double>(i), 0.0);
    const auto [lx, ly] = map(static_cast<double>(i), -0.12);
    os << "  <circle class=\"marked-point\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"3\" fill=\"" << kInk
       << "\"/>\n";
    os << "  <text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly) << "\" font-size=\"11\" text-anchor=\"middle\">" << i
       << "</text>\n";
  }
  for (std::size_t i = 0; i < scene.arcs.size(); ++i) {
    os << "  <polyline class=\"arc\" fill=\"none\" stroke=\"" << scene.colors[i] << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const Segment& seg : scene.arcs[i].segments()) {
      const double x0 = seg.from.x.to_double(), y0 = seg.from.y.to_double();
      const double x1 = seg.to.x.to_double(), y1 = seg.to.y.to_double();
      const int steps = std::max(8, static_cast<int>(std::ceil(16.0 * std::abs(x1 - x0))));
      for (int k = first ? 0 : 1; k <= steps; ++k) {
        const double t = static_cast<double>(k) / steps;
        const auto [sx, sy] = map(x0 + (x1 - x0) * t, y0 + (y1 - y0) * t);
        os << (first ? "" : " ") << fmt(sx) << "," << fmt(sy);
        first = false;
      }
    }
    os << "\"/>\n";
  }
  for (const CrossingRecord& c : scene.crossings) {
    const auto [x, y] = map(c.x.to_double(), c.y.to_double());
    marker(os, fmt(x), fmt(y), c.sign, options.monochrome);
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string draw_svg(const std::vector<ArcAnn>& arcs, const DrawOptions& options) {
  const Scene scene = build_scene(arcs, options);
  return options.view == View::Cover ? render_cover(scene, options) : render_annulus(scene, options);
}

}  // namespace tubes
