#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "mixcurve/export/commands.hpp"

using namespace mixcurve;
using namespace mixcurve::cli;

namespace {

struct Flags {
  std::string builtin, curve_x, curve_y, domain, samples, out, format, clip, config, grid;
  std::vector<std::string> qs;
  bool pedal = false, evolute = false;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--builtin", f.builtin, "example curve: ellipse-ex1, parabola-ex2, cubic-ex3");
  sub->add_option("--curve-x", f.curve_x, "x(t) expression");
  sub->add_option("--curve-y", f.curve_y, "y(t) expression");
  sub->add_option("--domain", f.domain, "parameter interval a:b");
  sub->add_option("--q", f.qs, "pedal point x,y (repeatable)")->allow_extra_args(false);
  sub->add_option("--samples", f.samples, "number of samples");
  sub->add_option("--out", f.out, "output path (default stdout)");
  sub->add_option("--format", f.format, "csv|svg|json");
  sub->add_option("--clip", f.clip, "plot window x0,y0,x1,y1");
  sub->add_option("--config", f.config, "key=value settings file; flags override it");
  sub->add_option("--grid", f.grid, "event search grid cells");
  sub->add_flag("--pedal", f.pedal, "plot: also draw pedal curves");
  sub->add_flag("--evolute", f.evolute, "plot: also draw the evolute");
}

std::vector<Setting> flag_settings(const Flags& f) {
  std::vector<Setting> s;
  auto put = [&](const char* key, const std::string& v) {
    if (!v.empty()) s.emplace_back(key, v);
  };
  put("builtin", f.builtin);
  put("curve-x", f.curve_x);
  put("curve-y", f.curve_y);
  put("domain", f.domain);
  for (const auto& q : f.qs) s.emplace_back("q", q);
  put("samples", f.samples);
  put("out", f.out);
  put("format", f.format);
  put("clip", f.clip);
  put("grid", f.grid);
  if (f.pedal) s.emplace_back("pedal", "true");
  if (f.evolute) s.emplace_back("evolute", "true");
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pedal, contrapedal and evolute curves in the Minkowski plane"};
  app.require_subcommand(1);
  Flags flags;
  using Cmd = CommandOutput (*)(const RunConfig&);
  const std::pair<const char*, Cmd> commands[] = {
      {"classify", cmd_classify}, {"plot", cmd_plot}, {"verify", cmd_verify}, {"events", cmd_events}};
  const char* blurbs[] = {"sample table with causal classes", "SVG drawing", "JSON check report",
                          "lightlike points and inflections"};
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    subs.push_back(app.add_subcommand(commands[i].first, blurbs[i]));
    add_common(subs.back(), flags);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    RunConfig cfg;
    if (!flags.config.empty()) apply_settings(cfg, read_config_file(flags.config));
    apply_settings(cfg, flag_settings(flags));

    Cmd run = nullptr;
    for (std::size_t i = 0; i < subs.size(); ++i)
      if (subs[i]->parsed()) run = commands[i].second;
    const CommandOutput result = run(cfg);

    if (cfg.out) {
      std::ofstream os(*cfg.out, std::ios::binary);
      if (!os || !(os << result.text) || !os.flush()) {
        std::cerr << "error: cannot write '" << *cfg.out << "'\n";
        return kExitUsage;
      }
    } else {
      std::cout << result.text;
    }
    return result.exit_code;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.span().begin << ": " << e.what() << '\n';
  } catch (const LexError& e) {
    std::cerr << "lex error at " << e.position() << ": " << e.what() << '\n';
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}
