#ifndef FPTLAB_DIGITS_HPP
#define FPTLAB_DIGITS_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "fptlab/errors.hpp"
#include "fptlab/rational.hpp"

namespace fptlab {

// Index into a digit expansion that may be infinite. nullopt means infinity.
using ExtIndex = std::optional<std::uint64_t>;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Eventually-periodic non-terminating base-p expansion of a rational in
// (0,1]. Digits are indexed from 1; digit e lives in preperiod[e-1] when
// e <= |preperiod| and cycles through `period` afterwards. The period is
// never all-zero, so the expansion always has infinitely many nonzero
// digits (the value 1 expands as .(p-1)(p-1)..., not as 1.000...).
struct DigitStream {
  std::uint32_t prime = 0;
  std::vector<std::uint32_t> preperiod;
  std::vector<std::uint32_t> period;
  Rational value;
};

// The digit recurrence uses digit = ceil(p*s) - 1 rather than floor(p*s):
// it keeps the running state in (0,1], which forces the non-terminating
// expansion directly (states that would terminate map to trailing p-1s).
inline DigitStream expand(const Rational& alpha, std::uint32_t p) {
  if (!is_prime(p)) throw domain_error("expand: p must be prime");
  if (!(alpha > 0 && alpha <= 1)) throw domain_error("expand: alpha must lie in (0,1]");

  std::map<Rational, std::size_t> seen;
  std::vector<std::uint32_t> digits;
  Rational s = alpha;
  while (!seen.count(s)) {
    seen.emplace(s, digits.size());
    Rational ps = s * p;
    BigInt d = ceil_scaled(s, BigInt(p)) - 1;
    digits.push_back(static_cast<std::uint32_t>(d));
    s = ps - Rational(d);
  }
  std::size_t cycle_start = seen.at(s);
  DigitStream out;
  out.prime = p;
  out.preperiod.assign(digits.begin(), digits.begin() + cycle_start);
  out.period.assign(digits.begin() + cycle_start, digits.end());
  out.value = alpha;
  return out;
}

// e-th digit, e >= 1.
inline std::uint32_t digit_at(const DigitStream& s, std::uint64_t e) {
  if (e == 0) throw domain_error("digit index starts at 1");
  if (e <= s.preperiod.size()) return s.preperiod[e - 1];
  return s.period[(e - 1 - s.preperiod.size()) % s.period.size()];
}

// e-th truncation <alpha>_e = sum_{i<=e} digit_i / p^i, exact.
inline Rational truncate_expansion(const DigitStream& s, std::uint64_t e) {
  BigInt n = 0;
  for (std::uint64_t i = 1; i <= e; ++i) n = n * s.prime + digit_at(s, i);
  return Rational(n, pow_bigint(BigInt(s.prime), e));
}

// Truncation at a possibly-infinite index; <alpha>_inf = alpha.
inline Rational truncate_expansion(const DigitStream& s, const ExtIndex& e) {
  if (!e) return s.value;
  return truncate_expansion(s, *e);
}

// Digit pairs are exactly periodic beyond the longer preperiod, with
// period lcm of the two periods; scanning one full joint window decides
// every digitwise question about the pair.
inline std::uint64_t joint_scan_bound(const DigitStream& a, const DigitStream& b) {
  std::uint64_t pre = std::max(a.preperiod.size(), b.preperiod.size());
  std::uint64_t l = std::lcm<std::uint64_t>(a.period.size(), b.period.size());
  return pre + l;
}

inline bool adds_without_carrying(const DigitStream& a, const DigitStream& b) {
  if (a.prime != b.prime) throw domain_error("adds_without_carrying: mismatched primes");
  std::uint64_t bound = joint_scan_bound(a, b);
  for (std::uint64_t e = 1; e <= bound; ++e)
    if (digit_at(a, e) + digit_at(b, e) > a.prime - 1) return false;
  return true;
}

// L = sup{ N | digit sums <= p-1 for all e <= N },
// d = sup{ e <= L | digit sum at e <= p-2 }.
// Digits are indexed from 1, so both suprema are over e >= 1; an empty set
// gives 0. Infinity is detected via the joint periodic window.
struct CarryProfile {
  ExtIndex L;
  ExtIndex d;
};

inline CarryProfile carry_profile(const Rational& a1, const Rational& a2, std::uint32_t p) {
  DigitStream s1 = expand(a1, p);
  DigitStream s2 = expand(a2, p);
  std::uint64_t bound = joint_scan_bound(s1, s2);

  ExtIndex L;
  std::uint64_t finite_L = bound;
  for (std::uint64_t e = 1; e <= bound; ++e) {
    if (digit_at(s1, e) + digit_at(s2, e) > p - 1) {
      finite_L = e - 1;
      L = finite_L;
      break;
    }
  }

  std::uint64_t d_scan_end = L ? *L : bound;
  std::uint64_t last_small = 0;
  for (std::uint64_t e = 1; e <= d_scan_end; ++e)
    if (digit_at(s1, e) + digit_at(s2, e) + 1 <= p - 1) last_small = e;

  ExtIndex d;
  if (L) {
    d = last_small;
  } else {
    // L is infinite: a digit sum <= p-2 inside the periodic window recurs
    // forever, otherwise every sum beyond the preperiods equals p-1.
    std::uint64_t pre = std::max(s1.preperiod.size(), s2.preperiod.size());
    if (last_small > pre)
      d = std::nullopt;
    else
      d = last_small;
  }
  return CarryProfile{L, d};
}

// C(N, k) mod p by Lucas' theorem: the product of digitwise binomials.
// Zero exactly when k and N-k carry in base p.
inline std::uint32_t lucas_binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) throw domain_error("lucas_binomial_mod_p: k > N");
  auto small_binom_mod = [p](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
    // a, b < p; no factor of p appears, so plain modular arithmetic works.
    if (b > a) return 0;
    b = std::min(b, a - b);
    std::uint64_t numer = 1, denom = 1;
    for (std::uint64_t i = 0; i < b; ++i) {
      numer = numer * ((a - i) % p) % p;
      denom = denom * ((i + 1) % p) % p;
    }
    // denom^(p-2) mod p
    std::uint64_t inv = 1, base = denom, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return numer * inv % p;
  };
  std::uint64_t r = 1;
  while (n > 0 || k > 0) {
    r = r * small_binom_mod(n % p, k % p) % p;
    if (r == 0) return 0;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(r);
}

} // namespace fptlab

#endif
