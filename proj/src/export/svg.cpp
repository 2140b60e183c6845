#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "mixcurve/export/commands.hpp"

namespace mixcurve::cli {

namespace {

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string fixed(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (std::abs(v) < 0.005 ? 0.0 : v);
  return os.str();
}

// World-to-viewport map with equal axis scaling, so lightlike directions
// render at 45 degrees.
class Canvas {
 public:
  explicit Canvas(Rect world) : w_(world) {
    const double span = std::max(world.x1 - world.x0, world.y1 - world.y0);
    scale_ = kMaxSide / span;
    width_ = (world.x1 - world.x0) * scale_ + 2 * kPad;
    height_ = (world.y1 - world.y0) * scale_ + 2 * kPad;
  }

  double sx(double x) const { return (x - w_.x0) * scale_ + kPad; }
  double sy(double y) const { return (w_.y1 - y) * scale_ + kPad; }
  bool inside(MVec2 p) const { return p.x1 >= w_.x0 && p.x1 <= w_.x1 && p.x2 >= w_.y0 && p.x2 <= w_.y1; }
  double diagonal() const { return std::hypot(w_.x1 - w_.x0, w_.y1 - w_.y0); }
  const Rect& world() const { return w_; }
  double width() const { return width_; }
  double height() const { return height_; }

  std::string point(MVec2 p) const { return fixed(sx(p.x1)) + "," + fixed(sy(p.x2)); }

 private:
  static constexpr double kMaxSide = 720.0;
  static constexpr double kPad = 20.0;
  Rect w_;
  double scale_ = 1.0;
  double width_ = 0.0;
  double height_ = 0.0;
};

struct Style {
  std::string stroke;
  std::string dash;  // empty for solid
  double width = 1.5;
};

std::string style_attrs(const Style& s) {
  std::string a = "fill=\"none\" stroke=\"" + s.stroke + "\" stroke-width=\"" + fixed(s.width) + "\"";
  if (!s.dash.empty()) a += " stroke-dasharray=\"" + s.dash + "\"";
  return a;
}

// Polylines of the drawable runs of a sampled trace. Runs break at missing
// points, points outside the window, and jumps across an asymptote.
void emit_trace(std::ostream& os, const Canvas& cv, const std::vector<std::optional<MVec2>>& pts,
                const Style& style, std::string_view id) {
  const double max_jump = 0.5 * cv.diagonal();
  std::vector<MVec2> run;
  int part = 0;
  auto flush = [&] {
    if (run.size() >= 2) {
      os << "  <polyline id=\"" << id << '-' << part++ << "\" " << style_attrs(style) << " points=\"";
      for (std::size_t i = 0; i < run.size(); ++i) os << (i ? " " : "") << cv.point(run[i]);
      os << "\"/>\n";
    }
    run.clear();
  };
  for (const auto& p : pts) {
    if (!p || !cv.inside(*p)) {
      flush();
      continue;
    }
    if (!run.empty() && euclid_norm(*p - run.back()) > max_jump) flush();
    run.push_back(*p);
  }
  flush();
}

// Liang-Barsky clip of the line base + s·dir against the window.
std::optional<std::pair<MVec2, MVec2>> clip_line(const Rect& r, MVec2 base, MVec2 dir) {
  double lo = -1e300, hi = 1e300;
  const std::array<double, 2> p0{base.x1, base.x2}, d{dir.x1, dir.x2};
  const std::array<double, 2> mn{r.x0, r.y0}, mx{r.x1, r.y1};
  for (int k = 0; k < 2; ++k) {
    if (d[k] == 0.0) {
      if (p0[k] < mn[k] || p0[k] > mx[k]) return std::nullopt;
      continue;
    }
    double a = (mn[k] - p0[k]) / d[k], b = (mx[k] - p0[k]) / d[k];
    if (a > b) std::swap(a, b);
    lo = std::max(lo, a);
    hi = std::min(hi, b);
  }
  if (lo > hi) return std::nullopt;
  return std::make_pair(base + lo * dir, base + hi * dir);
}

void emit_marker(std::ostream& os, const Canvas& cv, MVec2 p, std::string_view label,
                 std::string_view color, bool cross) {
  if (!cv.inside(p)) return;
  const double x = cv.sx(p.x1), y = cv.sy(p.x2);
  if (cross) {
    os << "  <path d=\"M" << fixed(x - 4) << ',' << fixed(y - 4) << " L" << fixed(x + 4) << ','
       << fixed(y + 4) << " M" << fixed(x - 4) << ',' << fixed(y + 4) << " L" << fixed(x + 4) << ','
       << fixed(y - 4) << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
  } else {
    os << "  <circle cx=\"" << fixed(x) << "\" cy=\"" << fixed(y) << "\" r=\"3\" fill=\"" << color
       << "\"/>\n";
  }
  os << "  <text x=\"" << fixed(x + 5) << "\" y=\"" << fixed(y - 5)
     << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << color << "\">"
     << xml_escape(label) << "</text>\n";
}

Rect auto_window(const std::vector<std::optional<MVec2>>& base, const std::vector<MVec2>& qs) {
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  auto grow = [&](MVec2 p) {
    x0 = std::min(x0, p.x1);
    x1 = std::max(x1, p.x1);
    y0 = std::min(y0, p.x2);
    y1 = std::max(y1, p.x2);
  };
  for (const auto& p : base)
    if (p) grow(*p);
  for (MVec2 q : qs) grow(q);
  const double cx = 0.5 * (x0 + x1), cy = 0.5 * (y0 + y1);
  const double half = std::max({0.5 * (x1 - x0), 0.5 * (y1 - y0), 0.5}) * 1.8;
  return {cx - half, cy - half, cx + half, cy + half};
}

const std::array<std::string, 5> kTraceColors{"green", "darkorange", "red", "purple", "saddlebrown"};

}  // namespace

CommandOutput cmd_plot(const RunConfig& cfg) {
  if (cfg.format && *cfg.format != Format::Svg) throw ConfigError("plot writes svg");
  const CurveDef curve = resolve_curve(cfg);
  const auto ts = uniform_parameters(curve.domain(), cfg.samples.value_or(kDefaultPlotSamples));
  const auto events = find_events(curve, cfg.grid);

  std::vector<std::optional<MVec2>> base(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) base[i] = curve.position(ts[i]);
  const Canvas cv(cfg.clip.value_or(auto_window(base, cfg.qs)));
  const Rect& win = cv.world();

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(cv.width()) << "\" height=\""
     << fixed(cv.height()) << "\" viewBox=\"0 0 " << fixed(cv.width()) << ' ' << fixed(cv.height())
     << "\">\n"
     << "  <title>" << xml_escape(curve.name()) << "</title>\n"
     << "  <rect x=\"0\" y=\"0\" width=\"" << fixed(cv.width()) << "\" height=\"" << fixed(cv.height())
     << "\" fill=\"white\"/>\n";

  // coordinate axes
  if (win.y0 <= 0.0 && win.y1 >= 0.0)
    os << "  <line x1=\"" << fixed(cv.sx(win.x0)) << "\" y1=\"" << fixed(cv.sy(0)) << "\" x2=\""
       << fixed(cv.sx(win.x1)) << "\" y2=\"" << fixed(cv.sy(0)) << "\" stroke=\"#cccccc\"/>\n";
  if (win.x0 <= 0.0 && win.x1 >= 0.0)
    os << "  <line x1=\"" << fixed(cv.sx(0)) << "\" y1=\"" << fixed(cv.sy(win.y0)) << "\" x2=\""
       << fixed(cv.sx(0)) << "\" y2=\"" << fixed(cv.sy(win.y1)) << "\" stroke=\"#cccccc\"/>\n";

  emit_trace(os, cv, base, {"blue", "", 2.0}, "base");
  if (cfg.show_evolute)
    emit_trace(os, cv, sample_positions(curve, Associated::Evolute, {}, ts), {"gray", "1,3", 1.2},
               "evolute");

  for (std::size_t i = 0; i < cfg.qs.size(); ++i) {
    const MVec2 q = cfg.qs[i];
    const std::string& color = kTraceColors[i % kTraceColors.size()];
    const std::string tag = std::to_string(i + 1);
    emit_trace(os, cv, sample_positions(curve, Associated::Contrapedal, q, ts),
               {color, i == 0 ? "" : "6,4", 1.5}, "contrapedal-" + tag);
    if (cfg.show_pedal)
      emit_trace(os, cv, sample_positions(curve, Associated::Pedal, q, ts),
                 {kTraceColors[(i + 2) % kTraceColors.size()], "5,3", 1.5}, "pedal-" + tag);

    for (const ParamEvent& e : events) {
      if (e.branch == Branch::NotApplicable) continue;
      const EvaluatedPoint cp = contrapedal(curve, q, e.t);
      if (cp.status == PointStatus::Asymptotic && cp.asymptote) {
        // The escape is along the lightlike tangent line of the base point.
        const MVec2 g = curve.position(e.t);
        if (auto seg = clip_line(win, g, direction_vector(cp.asymptote->direction))) {
          os << "  <line x1=\"" << fixed(cv.sx(seg->first.x1)) << "\" y1=\""
             << fixed(cv.sy(seg->first.x2)) << "\" x2=\"" << fixed(cv.sx(seg->second.x1))
             << "\" y2=\"" << fixed(cv.sy(seg->second.x2)) << "\" stroke=\"" << color
             << "\" stroke-width=\"1\" stroke-dasharray=\"3,3\"/>\n";
        }
      } else if (cp.position && q_incidence(curve, q, e.t) == QIncidence::OnTangentLine) {
        emit_marker(os, cv, *cp.position, "P" + tag, color, false);
      }
    }
    emit_marker(os, cv, q, "Q" + tag, color, true);
  }

  for (const ParamEvent& e : events) {
    const std::string label = e.kind == EventKind::LightlikePoint ? "lightlike" : std::string(to_string(e.kind));
    emit_marker(os, cv, curve.position(e.t), label, "black", false);
  }
  os << "</svg>\n";
  return {os.str()};
}

}  // namespace mixcurve::cli
