#pragma once

#include <cmath>
#include <string_view>

namespace mixcurve {

/// Point or vector of the Minkowski plane, metric signature (-,+).
struct MVec2 {
  double x1 = 0.0;
  double x2 = 0.0;

  friend constexpr MVec2 operator+(MVec2 a, MVec2 b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
  friend constexpr MVec2 operator-(MVec2 a, MVec2 b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
  friend constexpr MVec2 operator-(MVec2 a) { return {-a.x1, -a.x2}; }
  friend constexpr MVec2 operator*(double s, MVec2 a) { return {s * a.x1, s * a.x2}; }
  friend constexpr MVec2 operator*(MVec2 a, double s) { return {s * a.x1, s * a.x2}; }
  friend constexpr bool operator==(MVec2, MVec2) = default;
};

enum class CausalType { Spacelike, Timelike, Lightlike };

std::string_view to_string(CausalType c);

/// Coefficients in the lightcone frame: u = a·L⁺ + b·L⁻.
struct LightconeCoords {
  double a = 0.0;
  double b = 0.0;
};

inline constexpr MVec2 kLPlus{1.0, 1.0};
inline constexpr MVec2 kLMinus{1.0, -1.0};

/// Throws InputError if a component is NaN or infinite.
void require_finite(MVec2 u, std::string_view what);

constexpr double pseudo_dot(MVec2 u, MVec2 v) { return -u.x1 * v.x1 + u.x2 * v.x2; }

inline double mink_norm(MVec2 u) { return std::sqrt(std::abs(pseudo_dot(u, u))); }

constexpr MVec2 perp(MVec2 u) { return {u.x2, u.x1}; }

/// Euclidean length, used only as an auxiliary magnitude for tolerances.
inline double euclid_norm(MVec2 u) { return std::hypot(u.x1, u.x2); }

/// Euclidean cross product u1·v2 − u2·v1 (zero iff u, v are parallel).
constexpr double cross(MVec2 u, MVec2 v) { return u.x1 * v.x2 - u.x2 * v.x1; }

/// Spacelike if <u,u> > ε·scale², timelike if < −ε·scale², lightlike otherwise.
CausalType causal_type(MVec2 u, double scale);

/// causal_type with scale = |u| (Euclidean); the zero vector is reported lightlike.
CausalType causal_type(MVec2 u);

constexpr LightconeCoords to_lightcone(MVec2 u) {
  return {(u.x1 + u.x2) / 2.0, (u.x1 - u.x2) / 2.0};
}

constexpr MVec2 from_lightcone(LightconeCoords c) { return {c.a + c.b, c.a - c.b}; }

}  // namespace mixcurve
