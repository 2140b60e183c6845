#include "mixcurve/mink.hpp"

#include <string>

#include "mixcurve/errors.hpp"
#include "mixcurve/tolerance.hpp"

namespace mixcurve {

std::string_view to_string(CausalType c) {
  switch (c) {
    case CausalType::Spacelike:
      return "spacelike";
    case CausalType::Timelike:
      return "timelike";
    case CausalType::Lightlike:
      return "lightlike";
  }
  return "?";
}

void require_finite(MVec2 u, std::string_view what) {
  if (!std::isfinite(u.x1) || !std::isfinite(u.x2)) {
    throw InputError(std::string(what) + ": non-finite component");
  }
}

CausalType causal_type(MVec2 u, double scale) {
  require_finite(u, "causal_type");
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw InputError("causal_type: scale must be positive and finite");
  }
  const double self = pseudo_dot(u, u);
  const double band = tol::kLightlike * scale * scale;
  if (self > band) return CausalType::Spacelike;
  if (self < -band) return CausalType::Timelike;
  return CausalType::Lightlike;
}

CausalType causal_type(MVec2 u) {
  const double n = euclid_norm(u);
  if (n == 0.0) return CausalType::Lightlike;
  return causal_type(u, n);
}

}  // namespace mixcurve
