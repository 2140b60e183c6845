#include <charconv>
#include <sstream>

#include "json.hpp"
#include "mixcurve/export/commands.hpp"

namespace mixcurve::cli {

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

namespace {

void put_position(std::ostream& os, const std::optional<MVec2>& p) {
  if (p)
    os << format_number(p->x1) << ',' << format_number(p->x2);
  else
    os << ',';
}

std::string causal_text(const std::optional<CausalType>& c) {
  return c ? std::string(to_string(*c)) : std::string("unclassified");
}

nlohmann::json point_json(const std::optional<MVec2>& p) {
  if (!p) return nullptr;
  return nlohmann::json::array({p->x1, p->x2});
}

nlohmann::json event_json(const ParamEvent& e) {
  return {{"kind", to_string(e.kind)}, {"t", e.t}, {"branch", to_string(e.branch)}};
}

}  // namespace

std::string classify_csv(const std::vector<SampleRow>& rows, const std::vector<ParamEvent>& events) {
  std::ostringstream os;
  os << kClassifyHeader << '\n';
  for (const SampleRow& r : rows) {
    os << format_number(r.t) << ',' << format_number(r.base.x1) << ',' << format_number(r.base.x2)
       << ',' << to_string(r.base_class) << ',';
    put_position(os, r.cpe.position);
    os << ',' << to_string(r.cpe.status) << ',';
    if (r.cpe.status != PointStatus::Asymptotic) os << causal_text(r.cpe.causal);
    os << ',';
    put_position(os, r.pe.position);
    os << ',' << to_string(r.pe.status) << ',';
    put_position(os, r.ev);
    os << ',' << (r.ev ? 1 : 0) << '\n';
  }
  for (const ParamEvent& e : events)
    os << "# event," << to_string(e.kind) << ',' << format_number(e.t) << ',' << to_string(e.branch)
       << '\n';
  return os.str();
}

std::string events_csv(const std::vector<ParamEvent>& events) {
  std::ostringstream os;
  os << "kind,t,branch\n";
  for (const ParamEvent& e : events)
    os << to_string(e.kind) << ',' << format_number(e.t) << ',' << to_string(e.branch) << '\n';
  return os.str();
}

CommandOutput cmd_classify(const RunConfig& cfg) {
  const CurveDef curve = resolve_curve(cfg);
  const MVec2 q = cfg.qs.empty() ? MVec2{} : cfg.qs.front();
  const auto ts = uniform_parameters(curve.domain(), cfg.samples.value_or(kDefaultClassifySamples));
  const auto rows = sample_rows(curve, q, ts);
  const auto events = find_events(curve, cfg.grid);
  const Format fmt = cfg.format.value_or(Format::Csv);
  if (fmt == Format::Csv) return {classify_csv(rows, events)};
  if (fmt != Format::Json) throw ConfigError("classify writes csv or json");

  nlohmann::json j;
  j["curve"] = curve.name();
  j["q"] = {q.x1, q.x2};
  auto& jr = j["rows"] = nlohmann::json::array();
  for (const SampleRow& r : rows) {
    nlohmann::json cpe_class = nullptr;
    if (r.cpe.status != PointStatus::Asymptotic) cpe_class = causal_text(r.cpe.causal);
    jr.push_back({{"t", r.t},
                  {"base", point_json(r.base)},
                  {"class", to_string(r.base_class)},
                  {"cpe", point_json(r.cpe.position)},
                  {"cpe_status", to_string(r.cpe.status)},
                  {"cpe_class", cpe_class},
                  {"pe", point_json(r.pe.position)},
                  {"pe_status", to_string(r.pe.status)},
                  {"ev", point_json(r.ev)}});
  }
  auto& je = j["events"] = nlohmann::json::array();
  for (const ParamEvent& e : events) je.push_back(event_json(e));
  return {j.dump(2) + "\n"};
}

CommandOutput cmd_events(const RunConfig& cfg) {
  const CurveDef curve = resolve_curve(cfg);
  const auto events = find_events(curve, cfg.grid);
  const Format fmt = cfg.format.value_or(Format::Csv);
  if (fmt == Format::Csv) return {events_csv(events)};
  if (fmt != Format::Json) throw ConfigError("events writes csv or json");
  nlohmann::json j = nlohmann::json::array();
  for (const ParamEvent& e : events) j.push_back(event_json(e));
  return {j.dump(2) + "\n"};
}

}  // namespace mixcurve::cli
