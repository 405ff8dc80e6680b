#include "fdh/numeric.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "fdh/error.hpp"

namespace fdh {

namespace {

using boost::multiprecision::cpp_int;

[[noreturn]] void fail(std::string_view text, std::string_view why) {
  throw Error(ErrorCode::kParseError,
              "cannot parse '" + std::string(text) + "' as a number: " + std::string(why));
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Rational pow10(long exponent) {
  cpp_int p = 1;
  for (long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) p *= 10;
  return exponent < 0 ? Rational(cpp_int(1), p) : Rational(p);
}

// [sign] digits [. digits] [e [sign] digits]
Rational parse_decimal(std::string_view text, std::string_view original) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    text = text.substr(0, e);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 4) fail(original, "bad exponent");
    std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      fail(original, "bad decimal literal");
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(text)) fail(original, "bad integer literal");
    digits = std::string(text);
  }
  Rational value = Rational(cpp_int(digits)) * pow10(exponent);
  return negative ? Rational(-value) : value;
}

}  // namespace

Tolerance::Tolerance(double eps) : eps_(eps) {
  if (!(eps > 0.0 && eps < 1e-3)) {
    throw Error(ErrorCode::kInvalidArgument,
                "tolerance must satisfy 0 < eps < 1e-3, got " + std::to_string(eps));
  }
}

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) fail(original, "empty field");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(text.substr(0, slash), original);
    Rational den = parse_decimal(text.substr(slash + 1), original);
    if (den == 0) fail(original, "zero denominator");
    return num / den;
  }
  return parse_decimal(text, original);
}

std::string to_string(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

std::string to_string(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

}  // namespace fdh
