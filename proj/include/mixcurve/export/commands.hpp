#pragma once

#include <string>
#include <vector>

#include "mixcurve/analysis.hpp"
#include "mixcurve/export/config.hpp"
#include "mixcurve/sampling.hpp"

namespace mixcurve::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommandOutput {
  std::string text;
  int exit_code = kExitOk;
};

/// Shortest decimal that round-trips to the same double; -0 prints as 0.
std::string format_number(double v);

inline constexpr const char* kClassifyHeader =
    "t,x,y,class,cpe_x,cpe_y,cpe_status,cpe_class,pe_x,pe_y,pe_status,ev_x,ev_y,ev_defined";

/// Sample table followed by one "# event,<kind>,<t>,<branch>" line per event.
std::string classify_csv(const std::vector<SampleRow>& rows, const std::vector<ParamEvent>& events);
std::string events_csv(const std::vector<ParamEvent>& events);

CommandOutput cmd_classify(const RunConfig& cfg);
CommandOutput cmd_events(const RunConfig& cfg);
CommandOutput cmd_plot(const RunConfig& cfg);
CommandOutput cmd_verify(const RunConfig& cfg);

inline constexpr int kDefaultClassifySamples = 101;
inline constexpr int kDefaultPlotSamples = 1200;
inline constexpr int kDefaultVerifySamples = 201;

}  // namespace mixcurve::cli
