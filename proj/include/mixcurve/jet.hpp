#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "mixcurve/errors.hpp"

namespace mixcurve {

namespace detail {
constexpr double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}
}  // namespace detail

/// Truncated Taylor expansion of order N at a fixed parameter t0.
///
/// Stored as normalized coefficients c_k = f^(k)(t0)/k!, so products are
/// plain Cauchy products truncated at N. Arithmetic follows the Leibniz
/// rules up to order N; the jet of the variable t at t0 is (t0, 1, 0, ...).
template <int N>
class Jet {
  static_assert(N >= 0, "jet order must be non-negative");

 public:
  static constexpr int order = N;

  constexpr Jet() = default;
  constexpr explicit Jet(double constant) { c_[0] = constant; }

  static constexpr Jet variable(double t0) {
    Jet j(t0);
    if constexpr (N >= 1) j.c_[1] = 1.0;
    return j;
  }

  /// Build from derivative values d[k] = f^(k)(t0).
  static constexpr Jet from_derivatives(const std::array<double, N + 1>& d) {
    Jet j;
    for (int k = 0; k <= N; ++k) j.c_[k] = d[k] / detail::factorial(k);
    return j;
  }

  constexpr double value() const { return c_[0]; }
  /// k-th derivative f^(k)(t0), 0 <= k <= N.
  constexpr double d(int k) const { return c_[k] * detail::factorial(k); }
  constexpr double coeff(int k) const { return c_[k]; }
  constexpr double& coeff(int k) { return c_[k]; }

  /// Jet of f' at t0, one order lower.
  constexpr Jet<(N > 0 ? N - 1 : 0)> derivative() const
    requires(N > 0)
  {
    Jet<N - 1> out;
    for (int k = 0; k < N; ++k) out.coeff(k) = c_[k + 1] * (k + 1);
    return out;
  }

  template <int M>
  constexpr Jet<M> truncate() const
    requires(M <= N)
  {
    Jet<M> out;
    for (int k = 0; k <= M; ++k) out.coeff(k) = c_[k];
    return out;
  }

  /// True when every coefficient above the constant term is zero.
  constexpr bool is_constant() const {
    for (int k = 1; k <= N; ++k)
      if (c_[k] != 0.0) return false;
    return true;
  }

  constexpr Jet operator-() const {
    Jet r;
    for (int k = 0; k <= N; ++k) r.c_[k] = -c_[k];
    return r;
  }
  constexpr Jet& operator+=(const Jet& o) {
    for (int k = 0; k <= N; ++k) c_[k] += o.c_[k];
    return *this;
  }
  constexpr Jet& operator-=(const Jet& o) {
    for (int k = 0; k <= N; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  constexpr Jet& operator*=(double s) {
    for (auto& c : c_) c *= s;
    return *this;
  }

  friend constexpr Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend constexpr Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend constexpr Jet operator*(Jet a, double s) { return a *= s; }
  friend constexpr Jet operator*(double s, Jet a) { return a *= s; }
  friend constexpr Jet operator+(Jet a, double s) {
    a.c_[0] += s;
    return a;
  }
  friend constexpr Jet operator+(double s, Jet a) { return a + s; }
  friend constexpr Jet operator-(Jet a, double s) {
    a.c_[0] -= s;
    return a;
  }
  friend constexpr Jet operator-(double s, const Jet& a) { return (-a) + s; }

  friend constexpr Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (int k = 0; k <= N; ++k) {
      double s = 0.0;
      for (int j = 0; j <= k; ++j) s += a.c_[j] * b.c_[k - j];
      r.c_[k] = s;
    }
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) {
    if (b.c_[0] == 0.0) throw DomainError("division by zero");
    Jet r;
    for (int k = 0; k <= N; ++k) {
      double s = a.c_[k];
      for (int j = 1; j <= k; ++j) s -= b.c_[j] * r.c_[k - j];
      r.c_[k] = s / b.c_[0];
    }
    return r;
  }
  friend Jet operator/(const Jet& a, double s) {
    if (s == 0.0) throw DomainError("division by zero");
    return a * (1.0 / s);
  }
  friend Jet operator/(double s, const Jet& b) { return Jet(s) / b; }

  /// f(a) for a scalar function with derivatives f^(k)(a0) given in `derivs`.
  static constexpr Jet compose(const Jet& a, const std::array<double, N + 1>& derivs) {
    Jet h = a;
    h.c_[0] = 0.0;
    Jet power(1.0);
    Jet r;
    for (int k = 0; k <= N; ++k) {
      r += power * (derivs[k] / detail::factorial(k));
      power = power * h;
    }
    return r;
  }

 private:
  std::array<double, N + 1> c_{};
};

using Jet3 = Jet<3>;

template <int N>
Jet<N> sin(const Jet<N>& a) {
  std::array<double, N + 1> d{};
  const double s = std::sin(a.value()), c = std::cos(a.value());
  const double cycle[4] = {s, c, -s, -c};
  for (int k = 0; k <= N; ++k) d[k] = cycle[k % 4];
  return Jet<N>::compose(a, d);
}

template <int N>
Jet<N> cos(const Jet<N>& a) {
  std::array<double, N + 1> d{};
  const double s = std::sin(a.value()), c = std::cos(a.value());
  const double cycle[4] = {c, -s, -c, s};
  for (int k = 0; k <= N; ++k) d[k] = cycle[k % 4];
  return Jet<N>::compose(a, d);
}

template <int N>
Jet<N> exp(const Jet<N>& a) {
  std::array<double, N + 1> d{};
  d.fill(std::exp(a.value()));
  return Jet<N>::compose(a, d);
}

template <int N>
Jet<N> log(const Jet<N>& a) {
  const double x = a.value();
  if (!(x > 0.0)) throw DomainError("ln of a non-positive value");
  std::array<double, N + 1> d{};
  d[0] = std::log(x);
  // d^k/dx^k ln x = (-1)^(k-1) (k-1)! / x^k
  double inv_pow = 1.0;
  double sign = 1.0;
  for (int k = 1; k <= N; ++k) {
    inv_pow /= x;
    d[k] = sign * detail::factorial(k - 1) * inv_pow;
    sign = -sign;
  }
  return Jet<N>::compose(a, d);
}

template <int N>
Jet<N> sqrt(const Jet<N>& a) {
  const double x = a.value();
  if (x < 0.0) throw DomainError("sqrt of a negative value");
  if (x == 0.0) {
    if (a.is_constant()) return Jet<N>(0.0);
    throw DomainError("sqrt at zero has no derivative");
  }
  std::array<double, N + 1> d{};
  // d^k/dx^k x^(1/2) = (1/2)(1/2 - 1)...(1/2 - k + 1) x^(1/2 - k)
  double falling = 1.0;
  const double root = std::sqrt(x);
  double scale = root;
  for (int k = 0; k <= N; ++k) {
    d[k] = falling * scale;
    falling *= 0.5 - k;
    scale /= x;
  }
  return Jet<N>::compose(a, d);
}

template <int N>
Jet<N> ipow(const Jet<N>& a, long n) {
  if (n < 0) return Jet<N>(1.0) / ipow(a, -n);
  Jet<N> r(1.0);
  for (long i = 0; i < n; ++i) r = r * a;
  return r;
}

/// a^b = exp(b·ln a), requires a > 0.
template <int N>
Jet<N> pow(const Jet<N>& a, const Jet<N>& b) {
  if (!(a.value() > 0.0)) throw DomainError("real power of a non-positive base");
  return exp(b * log(a));
}

}  // namespace mixcurve
