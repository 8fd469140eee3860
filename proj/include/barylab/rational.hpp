#pragma once

// Exact rational scalars and dense rational vectors.

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace barylab {

/// Arbitrary-precision rational; GMP keeps it canonical (gcd 1, positive denominator).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Point of Q^d.
using RationalVector = std::vector<Rational>;

/// Malformed input: bad dimensions, unparsable numbers, empty lists.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition does not hold (e.g. the point is not in M).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested object does not exist (e.g. no witness for a boundary point).
class CharacterizationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw InputError("rational with zero denominator");
  return Rational(num) / Rational(den);
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  return Rational(num, den);
}

/// 2^-n exactly.
inline Rational dyadic(unsigned n) {
  Integer den = 1;
  den <<= n;
  return Rational(Integer(1), den);
}

namespace detail {

inline Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw InputError("not an integer: '" + std::string(text) + "'");
  std::string normalized(text);
  if (normalized.front() == '+') normalized.erase(0, 1);
  return Integer(normalized);
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses "p", "p/q" or a finite decimal "-1.25" into an exact rational.
inline Rational parse_rational(std::string_view text) {
  text = detail::trim(text);
  if (text.empty()) throw InputError("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = detail::parse_integer(detail::trim(text.substr(0, slash)));
    Integer den = detail::parse_integer(detail::trim(text.substr(slash + 1)));
    return make_rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string whole(text.substr(0, dot));
    std::string frac(text.substr(dot + 1));
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    if (frac.front() == '-' || frac.front() == '+') throw InputError("bad decimal: '" + std::string(text) + "'");
    Integer num = detail::parse_integer(whole) * scale + detail::parse_integer(frac);
    return make_rational(negative ? Integer(-num) : num, scale);
  }
  return Rational(detail::parse_integer(text));
}

/// Parses a comma-separated list such as "1/3,2/3".
inline RationalVector parse_rational_list(std::string_view text) {
  RationalVector out;
  while (true) {
    auto comma = text.find(',');
    out.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

inline std::string to_string(const Rational& q) { return q.str(); }

// Vector arithmetic. Dimensions are checked by callers at module boundaries.

inline RationalVector add(const RationalVector& x, const RationalVector& y) {
  RationalVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

inline RationalVector subtract(const RationalVector& x, const RationalVector& y) {
  RationalVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

inline RationalVector scale(const Rational& s, const RationalVector& x) {
  RationalVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = s * x[i];
  return out;
}

inline Rational dot(std::span<const Rational> x, std::span<const Rational> y) {
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

inline Rational squared_distance(std::span<const Rational> x, std::span<const Rational> y) {
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rational d = x[i] - y[i];
    acc += d * d;
  }
  return acc;
}

inline std::vector<double> to_doubles(std::span<const Rational> x) {
  std::vector<double> out;
  out.reserve(x.size());
  for (const auto& q : x) out.push_back(to_double(q));
  return out;
}

inline RationalVector zeros(std::size_t d) { return RationalVector(d, Rational(0)); }

/// (1 - t) x + t y.
inline RationalVector lerp(const RationalVector& x, const RationalVector& y, const Rational& t) {
  RationalVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + t * (y[i] - x[i]);
  return out;
}

}  // namespace barylab
