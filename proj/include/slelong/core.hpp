#pragma once

// Basic scalar/vector types shared across the library: dense double vectors,
// exact rationals (vertex coordinates, lattice arithmetic), multi-indices,
// and the string forms used by the JSON/CLI layer ("p/q", decimals).

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace slelong {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using Vec = std::vector<double>;
using RVec = std::vector<Rational>;
using MultiIndex = std::vector<long>;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user-supplied data (files, CLI args, constraint violations). The CLI
// maps this to exit code 2.
struct input_error : error {
  using error::error;
};

constexpr double pi = 3.14159265358979323846;
constexpr double inf = std::numeric_limits<double>::infinity();

inline double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }

inline double norm_inf(const Vec& a) {
  double s = 0;
  for (double v : a) s = std::max(s, std::abs(v));
  return s;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec scaled(const Vec& a, double t) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * t;
  return r;
}

inline Vec normalized(const Vec& a) {
  double n = norm(a);
  if (n == 0) throw error("cannot normalize zero vector");
  return scaled(a, 1.0 / n);
}

inline Vec ones(int n) { return Vec(static_cast<std::size_t>(n), 1.0); }

inline Vec unit(int n, int axis) {
  Vec r(static_cast<std::size_t>(n), 0.0);
  r[static_cast<std::size_t>(axis)] = 1.0;
  return r;
}

inline Rational rdot(const RVec& a, const RVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec to_double(const RVec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<double>(a[i]);
  return r;
}

inline RVec to_rational(const Vec& a) {
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!std::isfinite(a[i])) throw error("non-finite coordinate");
    r[i] = Rational(a[i]);
  }
  return r;
}

inline RVec to_rational(const MultiIndex& a) {
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  return r;
}

inline Vec to_double(const MultiIndex& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<double>(a[i]);
  return r;
}

// Accepts "p/q", integers, and decimal/scientific literals; all parsed
// exactly ("0.1" becomes 1/10, not the nearest double).
inline Rational parse_rational(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw input_error("empty number");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string ps = s.substr(0, slash), qs = s.substr(slash + 1);
    if (ps.empty() || qs.empty()) throw input_error("malformed fraction: " + text);
    try {
      BigInt p(ps), q(qs);
      if (q == 0) throw input_error("zero denominator: " + text);
      return Rational(p, q);
    } catch (const std::runtime_error&) {
      throw input_error("malformed fraction: " + text);
    }
  }

  bool neg = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');

  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  long exponent = 0;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      digits += c;
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.') {
      if (seen_dot) throw input_error("malformed number: " + text);
      seen_dot = true;
    } else if (c == 'e' || c == 'E') {
      std::string es = s.substr(i + 1);
      if (es.empty()) throw input_error("malformed number: " + text);
      std::size_t pos = 0;
      try {
        exponent = std::stol(es, &pos);
      } catch (const std::exception&) {
        throw input_error("malformed number: " + text);
      }
      if (pos != es.size()) throw input_error("malformed number: " + text);
      break;
    } else {
      throw input_error("malformed number: " + text);
    }
  }
  if (!seen_digit) throw input_error("malformed number: " + text);

  BigInt num(digits.empty() ? "0" : digits);
  if (neg) num = -num;
  long e10 = exponent - frac_digits;
  Rational r(num);
  if (e10 > 0)
    r *= Rational(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(e10)));
  else if (e10 < 0)
    r /= Rational(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-e10)));
  return r;
}

inline std::string format_rational(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1)
    return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

// Shortest round-trip decimal form; keeps report files byte-stable.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (v == inf) return "inf";
  if (v == -inf) return "-inf";
  char buf[48];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string format_vec(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_double(v[i]);
  }
  return s + ")";
}

inline std::string format_multi_index(const MultiIndex& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

inline long abs_sum(const MultiIndex& a) {
  long s = 0;
  for (long v : a) s += std::abs(v);
  return s;
}

}  // namespace slelong
