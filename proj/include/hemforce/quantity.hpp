#pragma once

// Unit-carrying scalars. Every value is stored in SI (m, kg, s, N, N·m, rad);
// millimeters and degrees exist only as construction/readout helpers so that
// the mm -> m conversion happens exactly once, at the boundary.

#include <cmath>
#include <compare>
#include <limits>
#include <numbers>
#include <string>

#include "hemforce/error.hpp"

namespace hemforce {

namespace detail {

constexpr bool is_finite(double v) noexcept {
  return v == v && v != std::numeric_limits<double>::infinity() &&
         v != -std::numeric_limits<double>::infinity();
}

constexpr double checked(double v) {
  if (!is_finite(v)) throw Error(ErrorCode::NonFinite, "quantity value is not finite");
  return v;
}

}  // namespace detail

/// Exponents of length, mass and time.
template <int L, int M, int T>
struct Dim {
  static constexpr int length = L;
  static constexpr int mass = M;
  static constexpr int time = T;
};

template <class D>
class Quantity {
 public:
  constexpr Quantity() noexcept = default;

  static constexpr Quantity from_si(double v) { return Quantity(detail::checked(v)); }

  constexpr double si() const noexcept { return value_; }

  constexpr Quantity operator-() const { return from_si(-value_); }
  constexpr Quantity& operator+=(Quantity o) { return *this = *this + o; }
  constexpr Quantity& operator-=(Quantity o) { return *this = *this - o; }

  friend constexpr Quantity operator+(Quantity a, Quantity b) { return from_si(a.value_ + b.value_); }
  friend constexpr Quantity operator-(Quantity a, Quantity b) { return from_si(a.value_ - b.value_); }
  friend constexpr Quantity operator*(double k, Quantity q) { return from_si(k * q.value_); }
  friend constexpr Quantity operator*(Quantity q, double k) { return from_si(q.value_ * k); }
  friend constexpr Quantity operator/(Quantity q, double k) { return from_si(q.value_ / k); }

  friend constexpr auto operator<=>(Quantity, Quantity) = default;

 private:
  constexpr explicit Quantity(double v) noexcept : value_(v) {}
  double value_ = 0.0;
};

template <int L1, int M1, int T1, int L2, int M2, int T2>
constexpr auto operator*(Quantity<Dim<L1, M1, T1>> a, Quantity<Dim<L2, M2, T2>> b) {
  return Quantity<Dim<L1 + L2, M1 + M2, T1 + T2>>::from_si(a.si() * b.si());
}

template <int L1, int M1, int T1, int L2, int M2, int T2>
constexpr auto operator/(Quantity<Dim<L1, M1, T1>> a, Quantity<Dim<L2, M2, T2>> b) {
  return Quantity<Dim<L1 - L2, M1 - M2, T1 - T2>>::from_si(a.si() / b.si());
}

using Dimensionless = Quantity<Dim<0, 0, 0>>;
using Length = Quantity<Dim<1, 0, 0>>;
using Mass = Quantity<Dim<0, 1, 0>>;
using Time = Quantity<Dim<0, 0, 1>>;
using Acceleration = Quantity<Dim<1, 0, -2>>;
using Force = Quantity<Dim<1, 1, -2>>;
using Torque = Quantity<Dim<2, 1, -2>>;

/// Plane angle in radians. Kept apart from Dimensionless so a coefficient can
/// never be passed where an angle is expected.
class Angle {
 public:
  constexpr Angle() noexcept = default;
  static constexpr Angle from_radians(double v) { return Angle(detail::checked(v)); }
  constexpr double radians() const noexcept { return value_; }
  friend constexpr auto operator<=>(Angle, Angle) = default;

 private:
  constexpr explicit Angle(double v) noexcept : value_(v) {}
  double value_ = 0.0;
};

constexpr Dimensionless dimensionless(double v) { return Dimensionless::from_si(v); }
constexpr Length meters(double v) { return Length::from_si(v); }
constexpr Length millimeters(double v) { return Length::from_si(detail::checked(v) / 1000.0); }
constexpr Mass kilograms(double v) { return Mass::from_si(v); }
constexpr Time seconds(double v) { return Time::from_si(v); }
constexpr Force newtons(double v) { return Force::from_si(v); }
constexpr Torque newton_meters(double v) { return Torque::from_si(v); }
constexpr Acceleration meters_per_second_squared(double v) { return Acceleration::from_si(v); }
constexpr Angle radians(double v) { return Angle::from_radians(v); }
constexpr Angle degrees(double v) {
  return Angle::from_radians(detail::checked(v) * (std::numbers::pi / 180.0));
}

constexpr double to_millimeters(Length l) noexcept { return l.si() * 1000.0; }
constexpr double to_degrees(Angle a) noexcept { return a.radians() * (180.0 / std::numbers::pi); }

inline double cos(Angle a) { return std::cos(a.radians()); }
inline double sin(Angle a) { return std::sin(a.radians()); }

namespace literals {

constexpr Force operator""_N(long double v) { return newtons(static_cast<double>(v)); }
constexpr Force operator""_N(unsigned long long v) { return newtons(static_cast<double>(v)); }
constexpr Torque operator""_Nm(long double v) { return newton_meters(static_cast<double>(v)); }
constexpr Torque operator""_Nm(unsigned long long v) { return newton_meters(static_cast<double>(v)); }
constexpr Length operator""_m(long double v) { return meters(static_cast<double>(v)); }
constexpr Length operator""_mm(long double v) { return millimeters(static_cast<double>(v)); }
constexpr Length operator""_mm(unsigned long long v) { return millimeters(static_cast<double>(v)); }
constexpr Mass operator""_kg(long double v) { return kilograms(static_cast<double>(v)); }
constexpr Mass operator""_kg(unsigned long long v) { return kilograms(static_cast<double>(v)); }
constexpr Angle operator""_deg(long double v) { return degrees(static_cast<double>(v)); }
constexpr Angle operator""_deg(unsigned long long v) { return degrees(static_cast<double>(v)); }
constexpr Angle operator""_rad(long double v) { return radians(static_cast<double>(v)); }

}  // namespace literals

}  // namespace hemforce
