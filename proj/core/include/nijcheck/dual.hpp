#pragma once

#include <cmath>
#include <ostream>
#include <type_traits>

namespace nijcheck {

/// First-order dual number a + b*eps with eps^2 = 0.
///
/// Propagating a seed direction through a computation written against a
/// generic scalar type yields the exact directional derivative (up to
/// rounding) alongside the value.
template <class T>
struct Dual {
  T value{};
  T deriv{};

  constexpr Dual() = default;
  constexpr Dual(T v) : value(v) {}  // NOLINT: implicit lift of constants
  constexpr Dual(T v, T d) : value(v), deriv(d) {}

  constexpr Dual& operator+=(const Dual& o) {
    value += o.value;
    deriv += o.deriv;
    return *this;
  }
  constexpr Dual& operator-=(const Dual& o) {
    value -= o.value;
    deriv -= o.deriv;
    return *this;
  }
  constexpr Dual& operator*=(const Dual& o) {
    deriv = value * o.deriv + deriv * o.value;
    value *= o.value;
    return *this;
  }
  constexpr Dual& operator/=(const Dual& o) {
    deriv = (deriv * o.value - value * o.deriv) / (o.value * o.value);
    value /= o.value;
    return *this;
  }

  constexpr Dual operator-() const { return {-value, -deriv}; }
  constexpr Dual operator+() const { return *this; }
};

template <class T>
constexpr Dual<T> operator+(Dual<T> a, const Dual<T>& b) { return a += b; }
template <class T>
constexpr Dual<T> operator-(Dual<T> a, const Dual<T>& b) { return a -= b; }
template <class T>
constexpr Dual<T> operator*(Dual<T> a, const Dual<T>& b) { return a *= b; }
template <class T>
constexpr Dual<T> operator/(Dual<T> a, const Dual<T>& b) { return a /= b; }

template <class T>
constexpr Dual<T> operator+(Dual<T> a, T b) { return {a.value + b, a.deriv}; }
template <class T>
constexpr Dual<T> operator+(T a, Dual<T> b) { return {a + b.value, b.deriv}; }
template <class T>
constexpr Dual<T> operator-(Dual<T> a, T b) { return {a.value - b, a.deriv}; }
template <class T>
constexpr Dual<T> operator-(T a, Dual<T> b) { return {a - b.value, -b.deriv}; }
template <class T>
constexpr Dual<T> operator*(Dual<T> a, T b) { return {a.value * b, a.deriv * b}; }
template <class T>
constexpr Dual<T> operator*(T a, Dual<T> b) { return {a * b.value, a * b.deriv}; }
template <class T>
constexpr Dual<T> operator/(Dual<T> a, T b) { return {a.value / b, a.deriv / b}; }
template <class T>
constexpr Dual<T> operator/(T a, const Dual<T>& b) {
  return {a / b.value, -a * b.deriv / (b.value * b.value)};
}

// Comparisons look at the value part only.
template <class T>
constexpr bool operator<(const Dual<T>& a, const Dual<T>& b) { return a.value < b.value; }
template <class T>
constexpr bool operator>(const Dual<T>& a, const Dual<T>& b) { return a.value > b.value; }

template <class T>
Dual<T> sqrt(const Dual<T>& a) {
  using std::sqrt;
  const T s = sqrt(a.value);
  return {s, a.deriv / (T(2) * s)};
}

template <class T>
Dual<T> abs(const Dual<T>& a) {
  return a.value < T(0) ? -a : a;
}

template <class T>
bool isfinite(const Dual<T>& a) {
  using std::isfinite;
  return isfinite(a.value) && isfinite(a.deriv);
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Dual<T>& a) {
  return os << a.value << " + " << a.deriv << "eps";
}

template <class T>
struct is_dual : std::false_type {};
template <class T>
struct is_dual<Dual<T>> : std::true_type {};

/// Value part of a scalar, recursing through nested duals.
template <class T>
constexpr double value_of(const T& a) {
  if constexpr (is_dual<T>::value) {
    return value_of(a.value);
  } else {
    return static_cast<double>(a);
  }
}

using Dual1 = Dual<double>;

}  // namespace nijcheck
