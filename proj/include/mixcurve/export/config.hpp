#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mixcurve/curve.hpp"
#include "mixcurve/errors.hpp"
#include "mixcurve/mink.hpp"

namespace mixcurve::cli {

/// Malformed flag, config entry or value. Maps to exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class Format { Csv, Svg, Json };

struct Rect {
  double x0, y0, x1, y1;
};

struct RunConfig {
  std::optional<std::string> builtin;
  std::optional<std::string> curve_x;
  std::optional<std::string> curve_y;
  std::optional<Interval> domain;
  std::vector<MVec2> qs{MVec2{0.0, 0.0}};
  std::optional<int> samples;
  std::optional<std::string> out;
  std::optional<Format> format;
  std::optional<Rect> clip;
  int grid = 2048;
  bool show_pedal = false;
  bool show_evolute = false;
};

using Setting = std::pair<std::string, std::string>;

/// key=value lines; blank lines and lines starting with '#' are ignored.
std::vector<Setting> parse_config_text(std::string_view text);
std::vector<Setting> read_config_file(const std::string& path);

/// Apply settings in order. Within one call the first "q" replaces the
/// current list and later ones append, so a later layer (command-line
/// flags over a config file) overrides every Q of an earlier one.
void apply_settings(RunConfig& cfg, const std::vector<Setting>& settings);

/// Scalars accept constant DSL expressions such as "2*sqrt(3)/3" or "-pi".
double parse_scalar(std::string_view text);
MVec2 parse_vec2(std::string_view text);
Interval parse_interval(std::string_view text);
Rect parse_rect(std::string_view text);
Format parse_format(std::string_view text);

/// Builtin or DSL curve, with the domain override applied.
CurveDef resolve_curve(const RunConfig& cfg);

}  // namespace mixcurve::cli
