#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecf {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Extended-precision float for ratios, logs and statistics (113-bit mantissa,
// comfortably above the 64-bit minimum the exact/real boundary requires).
using Real = boost::multiprecision::cpp_bin_float_quad;

struct PrecisionExhausted : std::runtime_error {
  explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};
struct InsufficientDigits : std::runtime_error {
  explicit InsufficientDigits(const std::string& what) : std::runtime_error(what) {}
};
struct UnboundedPrefix : std::runtime_error {
  explicit UnboundedPrefix(const std::string& what) : std::runtime_error(what) {}
};
struct WindowUnderflow : std::runtime_error {
  explicit WindowUnderflow(const std::string& what) : std::runtime_error(what) {}
};
struct EmptyCylinder : std::runtime_error {
  explicit EmptyCylinder(const std::string& what) : std::runtime_error(what) {}
};

// One digit (k, xi) of an even-partial-quotient continued fraction:
// the partial quotient is 2k, the sign connecting it to the next level is xi.
struct EcfDigit {
  Integer k;
  int xi = 1;

  EcfDigit() = default;
  EcfDigit(Integer kk, int sign) : k(std::move(kk)), xi(sign) {
    if (k < 1) throw std::domain_error("EcfDigit: k must be >= 1");
    if (xi != 1 && xi != -1) throw std::domain_error("EcfDigit: xi must be +-1");
  }
  EcfDigit(long kk, int sign) : EcfDigit(Integer(kk), sign) {}

  bool operator==(const EcfDigit& o) const { return k == o.k && xi == o.xi; }
  bool is_bar() const { return xi == -1 && k == 1; }  // the symbol (1,-1)
};

inline EcfDigit bar_digit() { return EcfDigit(1, -1); }

// Re-blocked symbol h·m^sign: h copies of (1,-1) followed by (m, sign).
// (m, sign) = (1, -1) is structurally excluded.
struct SigmaSymbol {
  long h = 0;
  Integer m;
  int sign = 1;

  SigmaSymbol() : m(1) {}
  SigmaSymbol(long hh, Integer mm, int s) : h(hh), m(std::move(mm)), sign(s) {
    if (h < 0) throw std::domain_error("SigmaSymbol: h must be >= 0");
    if (m < 1) throw std::domain_error("SigmaSymbol: m must be >= 1");
    if (sign != 1 && sign != -1) throw std::domain_error("SigmaSymbol: sign must be +-1");
    if (m == 1 && sign == -1)
      throw std::domain_error("SigmaSymbol: h*1^- is not a valid symbol");
  }
  SigmaSymbol(long hh, long mm, int s) : SigmaSymbol(hh, Integer(mm), s) {}

  bool operator==(const SigmaSymbol& o) const {
    return h == o.h && m == o.m && sign == o.sign;
  }

  long block_length() const { return h + 1; }
  EcfDigit closing_digit() const { return EcfDigit(m, sign); }
};

using OmegaWord = std::vector<EcfDigit>;
using SigmaWord = std::vector<SigmaSymbol>;

// Closed rational interval certified to contain an (irrational) value.
struct RatInterval {
  Rational lo, hi;

  RatInterval() = default;
  RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) std::swap(lo, hi);
  }
  static RatInterval point(Rational v) { return RatInterval(v, v); }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }

  RatInterval intersect(const RatInterval& o) const {
    Rational l = lo > o.lo ? lo : o.lo;
    Rational h = hi < o.hi ? hi : o.hi;
    if (l > h) throw std::domain_error("RatInterval: empty intersection");
    return RatInterval(std::move(l), std::move(h));
  }
};

// x' = sign/(2k + x), the one-digit backward Moebius step. Monotone, so the
// image of an interval is the interval of the endpoint images.
inline RatInterval mobius_digit_step(const RatInterval& x, const EcfDigit& d) {
  Rational a = 2 * Rational(d.k) + x.lo;
  Rational b = 2 * Rational(d.k) + x.hi;
  // 2k + x >= 2 - 3/5 stays away from zero for every value reachable here
  if (d.xi == 1) return RatInterval(1 / b, 1 / a);
  return RatInterval(-1 / a, -1 / b);
}

inline Real to_real(const Rational& q) { return Real(q); }

}  // namespace ecf
