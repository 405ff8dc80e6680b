// Scalar types, tolerance-aware comparison and the symbolic +infinity
// used throughout the FDH library.
#ifndef FDH_NUMERIC_HPP_
#define FDH_NUMERIC_HPP_

#include <algorithm>
#include <cmath>
#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

namespace fdh {

// Exact rational arithmetic. Expression templates are disabled so that
// `auto` locals hold values, not lazily evaluated expressions.
using Rational = boost::multiprecision::number<
    boost::multiprecision::cpp_rational_backend,
    boost::multiprecision::et_off>;

template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

template <Scalar T>
inline constexpr bool is_exact_v = std::same_as<T, Rational>;

// Threshold used by every classification that compares floating values.
// Exact scalars ignore it.
class Tolerance {
 public:
  static constexpr double kDefault = 1e-9;

  Tolerance() = default;
  explicit Tolerance(double eps);

  double eps() const { return eps_; }

 private:
  double eps_ = kDefault;
};

// Three-way comparison; for doubles, values within eps * max(1, |a|, |b|)
// compare equal.
template <Scalar T>
std::strong_ordering compare(const T& a, const T& b, const Tolerance& tol) {
  if constexpr (is_exact_v<T>) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  } else {
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    if (std::fabs(a - b) <= tol.eps() * scale) return std::strong_ordering::equal;
    return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
  }
}

template <Scalar T>
bool less(const T& a, const T& b, const Tolerance& tol) {
  return compare(a, b, tol) == std::strong_ordering::less;
}
template <Scalar T>
bool greater(const T& a, const T& b, const Tolerance& tol) {
  return compare(a, b, tol) == std::strong_ordering::greater;
}
template <Scalar T>
bool equal(const T& a, const T& b, const Tolerance& tol) {
  return compare(a, b, tol) == std::strong_ordering::equal;
}

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

template <Scalar To>
To scalar_cast(const Rational& v) {
  if constexpr (is_exact_v<To>) {
    return v;
  } else {
    return to_double(v);
  }
}

// Parses "13/4", "-2", "0.125", "1.5e3" exactly. Throws fdh::Error
// (ParseError) on malformed input.
Rational parse_rational(std::string_view text);

// Canonical text: "p/q" or "p" for rationals, shortest round-trip for doubles.
std::string to_string(const Rational& v);
std::string to_string(double v);

// A value that may be the symbolic +infinity. Never converts infinity
// into a floating-point inf implicitly.
template <Scalar T>
class Extended {
 public:
  static Extended infinity() { return Extended(); }
  static Extended finite(T v) { return Extended(std::move(v)); }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  // Precondition: is_finite().
  const T& value() const { return value_; }

  // Infinity compares greater than every finite value and equal to itself.
  std::strong_ordering compare_to(const T& other, const Tolerance& tol) const {
    if (infinite_) return std::strong_ordering::greater;
    return fdh::compare(value_, other, tol);
  }

  double as_double() const {
    return infinite_ ? HUGE_VAL : to_double(value_);
  }

  friend bool operator==(const Extended&, const Extended&) = default;

 private:
  Extended() : infinite_(true), value_(0) {}
  explicit Extended(T v) : infinite_(false), value_(std::move(v)) {}

  bool infinite_;
  T value_;
};

template <Scalar T>
std::ostream& operator<<(std::ostream& os, const Extended<T>& v) {
  if (v.is_infinite()) return os << "inf";
  return os << to_string(v.value());
}

}  // namespace fdh

#endif  // FDH_NUMERIC_HPP_
