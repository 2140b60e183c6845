#include "mixcurve/export/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "mixcurve/expr.hpp"

namespace mixcurve::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto p = s.find(sep, start);
    parts.push_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
    if (p == std::string_view::npos) return parts;
    start = p + 1;
  }
}

bool references_t(const Expr& e) {
  if (e.op() == Op::Variable) return true;
  for (int i = 0; i < e.size(); ++i)
    if (references_t(e.arg(i))) return true;
  return false;
}

bool parse_bool(std::string_view v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw ConfigError("expected a boolean, got '" + std::string(v) + "'");
}

int parse_int(std::string_view v, std::string_view what) {
  int n = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
  if (ec != std::errc() || p != v.data() + v.size())
    throw ConfigError(std::string(what) + ": expected an integer, got '" + std::string(v) + "'");
  return n;
}

}  // namespace

std::vector<Setting> parse_config_text(std::string_view text) {
  std::vector<Setting> out;
  int line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
    std::string key(trim(line.substr(0, eq)));
    if (key.empty()) throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    out.emplace_back(std::move(key), std::string(trim(line.substr(eq + 1))));
  }
  return out;
}

std::vector<Setting> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

double parse_scalar(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ConfigError("empty number");
  try {
    const Expr e = parse(text);
    if (references_t(e)) throw ConfigError("constant expected, '" + std::string(text) + "' uses t");
    const double v = eval<0>(e, 0.0).value();
    if (!std::isfinite(v)) throw ConfigError("non-finite value '" + std::string(text) + "'");
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError("bad number '" + std::string(text) + "': " + e.what());
  }
}

MVec2 parse_vec2(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw ConfigError("expected x,y but got '" + std::string(text) + "'");
  return {parse_scalar(parts[0]), parse_scalar(parts[1])};
}

Interval parse_interval(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw ConfigError("expected a:b but got '" + std::string(text) + "'");
  const Interval d{parse_scalar(parts[0]), parse_scalar(parts[1])};
  if (!(d.lo < d.hi)) throw ConfigError("domain needs a < b");
  return d;
}

Rect parse_rect(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4)
    throw ConfigError("expected x0,y0,x1,y1 but got '" + std::string(text) + "'");
  Rect r{parse_scalar(parts[0]), parse_scalar(parts[1]), parse_scalar(parts[2]),
         parse_scalar(parts[3])};
  if (r.x0 > r.x1) std::swap(r.x0, r.x1);
  if (r.y0 > r.y1) std::swap(r.y0, r.y1);
  if (!(r.x0 < r.x1) || !(r.y0 < r.y1)) throw ConfigError("clip window is degenerate");
  return r;
}

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::Csv;
  if (text == "svg") return Format::Svg;
  if (text == "json") return Format::Json;
  throw ConfigError("unknown format '" + std::string(text) + "' (csv|svg|json)");
}

void apply_settings(RunConfig& cfg, const std::vector<Setting>& settings) {
  bool q_replaced = false;
  for (const auto& [key, value] : settings) {
    if (key == "builtin") {
      cfg.builtin = value;
    } else if (key == "curve-x") {
      cfg.curve_x = value;
    } else if (key == "curve-y") {
      cfg.curve_y = value;
    } else if (key == "domain") {
      cfg.domain = parse_interval(value);
    } else if (key == "q") {
      if (!q_replaced) {
        cfg.qs.clear();
        q_replaced = true;
      }
      cfg.qs.push_back(parse_vec2(value));
    } else if (key == "samples") {
      const int n = parse_int(value, "samples");
      if (n < 2) throw ConfigError("samples must be at least 2");
      cfg.samples = n;
    } else if (key == "out") {
      cfg.out = value;
    } else if (key == "format") {
      cfg.format = parse_format(value);
    } else if (key == "clip") {
      cfg.clip = parse_rect(value);
    } else if (key == "grid") {
      const int n = parse_int(value, "grid");
      if (n < 16) throw ConfigError("grid must be at least 16");
      cfg.grid = n;
    } else if (key == "pedal") {
      cfg.show_pedal = parse_bool(value);
    } else if (key == "evolute") {
      cfg.show_evolute = parse_bool(value);
    } else {
      throw ConfigError("unknown setting '" + key + "'");
    }
  }
}

CurveDef resolve_curve(const RunConfig& cfg) {
  const bool dsl = cfg.curve_x || cfg.curve_y;
  if (cfg.builtin && dsl) throw ConfigError("give either --builtin or --curve-x/--curve-y, not both");
  if (cfg.builtin) {
    try {
      CurveDef c = builtin(*cfg.builtin);
      return cfg.domain ? c.with_domain(*cfg.domain) : c;
    } catch (const UnknownCurve& e) {
      throw ConfigError(e.what());
    }
  }
  if (!cfg.curve_x || !cfg.curve_y) throw ConfigError("a curve needs both --curve-x and --curve-y");
  return CurveDef::parse(*cfg.curve_x, *cfg.curve_y, cfg.domain.value_or(Interval{-1.0, 1.0}));
}

}  // namespace mixcurve::cli
