#include "mixcurve/sampling.hpp"

#include "mixcurve/errors.hpp"

namespace mixcurve {

std::vector<double> uniform_parameters(Interval domain, int n) {
  if (n < 2) throw InputError("at least two samples are required");
  std::vector<double> ts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    ts[static_cast<std::size_t>(i)] =
        i == n - 1 ? domain.hi : domain.lo + domain.length() * static_cast<double>(i) / (n - 1);
  return ts;
}

SampleRow sample_row(const ParametricCurve& c, MVec2 q, double t) {
  const TangentialData td = tangential_data(c, t);
  SampleRow row;
  row.t = t;
  row.base = td.gamma;
  row.base_class = causal_type(td.dgamma);
  row.cpe = contrapedal(c, q, t);
  row.pe = pedal(c, q, t);
  if (evolute_defined(td)) row.ev = evolute(c, t).position;
  return row;
}

std::vector<SampleRow> sample_rows(const ParametricCurve& c, MVec2 q, std::span<const double> ts,
                                   Execution exec) {
  return index_map<SampleRow>(ts.size(), [&](std::size_t i) { return sample_row(c, q, ts[i]); }, exec);
}

std::vector<std::optional<MVec2>> sample_positions(const ParametricCurve& c, Associated which, MVec2 q,
                                                   std::span<const double> ts, Execution exec) {
  return index_map<std::optional<MVec2>>(
      ts.size(),
      [&](std::size_t i) -> std::optional<MVec2> {
        const double t = ts[i];
        switch (which) {
          case Associated::Contrapedal:
            return contrapedal(c, q, t).position;
          case Associated::Pedal:
            return pedal(c, q, t).position;
          case Associated::Evolute:
            if (!evolute_defined(tangential_data(c, t))) return std::nullopt;
            return evolute(c, t).position;
        }
        return std::nullopt;
      },
      exec);
}

}  // namespace mixcurve
