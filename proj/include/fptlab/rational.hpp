#ifndef FPTLAB_RATIONAL_HPP
#define FPTLAB_RATIONAL_HPP

#include <cstdint>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "fptlab/errors.hpp"

namespace fptlab {

// All rational arithmetic in the library is exact; no floating point
// anywhere. cpp_rational keeps values reduced with a positive denominator,
// which is exactly the canonical form we need.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline BigInt pow_bigint(const BigInt& base, std::uint64_t exp) {
  BigInt r = 1, b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

// floor(scale * r) for scale >= 0.
inline BigInt floor_scaled(const Rational& r, const BigInt& scale) {
  BigInt n = num(r) * scale;
  BigInt d = den(r);
  if (n >= 0) return n / d;
  return -((-n + d - 1) / d);
}

// ceil(scale * r) for scale >= 0.
inline BigInt ceil_scaled(const Rational& r, const BigInt& scale) {
  BigInt n = num(r) * scale;
  BigInt d = den(r);
  if (n >= 0) return (n + d - 1) / d;
  return -((-n) / d);
}

inline bool is_integer(const Rational& r) { return den(r) == 1; }

// True iff the reduced denominator is a power of p (p^0 = 1 counts).
inline bool has_p_power_denominator(const Rational& r, std::uint64_t p) {
  BigInt d = den(r);
  while (d % p == 0) d /= p;
  return d == 1;
}

inline std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << num(r) << '/' << den(r);
  return os.str();
}

// Accepts "a/b" or a bare integer "a".
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt n(text.substr(0, slash));
    BigInt d(text.substr(slash + 1));
    if (d == 0) throw parse_error("rational with zero denominator: " + text);
    return Rational(n, d);
  } catch (const std::runtime_error&) {
    throw parse_error("malformed rational: " + text);
  }
}

} // namespace fptlab

#endif
