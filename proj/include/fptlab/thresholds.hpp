#ifndef FPTLAB_THRESHOLDS_HPP
#define FPTLAB_THRESHOLDS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "fptlab/digits.hpp"
#include "fptlab/polynomial.hpp"

namespace fptlab {

enum class FptClass {
  EqualsOne,
  PPowerDenominator,
  Generic,
};

// An F-threshold value together with how its denominator relates to p
// (the case split that drives the test-ideal formula) and, when it was
// produced by the Thom-Sebastiani formula, the carry profile it used.
struct FptValue {
  Rational value;
  FptClass classification = FptClass::Generic;
  std::optional<CarryProfile> profile;
};

inline FptClass classify_fpt(const Rational& value, std::uint32_t p) {
  if (value == 1) return FptClass::EqualsOne;
  if (has_p_power_denominator(value, p)) return FptClass::PPowerDenominator;
  return FptClass::Generic;
}

// F-threshold of g1 + g2 with respect to I1 + I2, from the component
// thresholds a1, a2: the sum when the expansions never carry (L infinite),
// otherwise <a1>_L + <a2>_L + p^-L.
inline FptValue ts_fthreshold(const Rational& a1, const Rational& a2, std::uint32_t p) {
  if (!(a1 > 0 && a1 <= 1) || !(a2 > 0 && a2 <= 1))
    throw domain_error("ts_fthreshold: component thresholds must lie in (0,1]");
  if (a1 + a2 > 1) throw domain_error("theorem inapplicable: a1+a2 > 1");
  CarryProfile cp = carry_profile(a1, a2, p);
  Rational value;
  if (!cp.L) {
    value = a1 + a2;
  } else {
    DigitStream s1 = expand(a1, p), s2 = expand(a2, p);
    value = truncate_expansion(s1, *cp.L) + truncate_expansion(s2, *cp.L) +
            Rational(1, pow_bigint(BigInt(p), *cp.L));
  }
  return FptValue{value, classify_fpt(value, p), cp};
}

// F-pure threshold of a monomial: 1 / max exponent.
inline Rational fpt_monomial(const std::vector<std::uint64_t>& exponents) {
  if (exponents.empty()) throw domain_error("fpt_monomial: empty exponent list");
  for (auto b : exponents)
    if (b < 1) throw domain_error("fpt_monomial: exponents must be >= 1");
  return Rational(1, *std::max_element(exponents.begin(), exponents.end()));
}

// Iterated Thom-Sebastiani fold over a diagonal x1^d1 + ... + xk^dk. Each
// partial sum is itself Thom-Sebastiani with known threshold, so the fold
// is exact; nullopt reports that some fold violates a1+a2 <= 1.
inline std::optional<FptValue> fpt_diagonal_fold(const std::vector<std::uint64_t>& degrees,
                                                 std::uint32_t p) {
  if (degrees.empty()) throw domain_error("fpt_diagonal_fold: empty degree list");
  for (auto d : degrees)
    if (d < 1) throw domain_error("fpt_diagonal_fold: degrees must be >= 1");
  FptValue acc{Rational(1, degrees[0]), classify_fpt(Rational(1, degrees[0]), p), std::nullopt};
  for (std::size_t i = 1; i < degrees.size(); ++i) {
    Rational next(1, degrees[i]);
    if (acc.value + next > 1) return std::nullopt;
    acc = ts_fthreshold(acc.value, next, p);
  }
  return acc;
}

// fpt of f^n from fpt of f.
inline Rational fpt_power(const FptValue& c, std::uint64_t n) {
  if (n == 0) throw domain_error("fpt_power: n must be >= 1");
  return c.value / n;
}

// fpt of a product in disjoint variables: min of the component values.
inline Rational fpt_disjoint_product(const Rational& c1, const Rational& c2) {
  if (!(c1 > 0 && c1 <= 1) || !(c2 > 0 && c2 <= 1))
    throw domain_error("fpt_disjoint_product: thresholds must lie in (0,1]");
  return std::min(c1, c2);
}

// Closed-form F-pure threshold of a component polynomial with respect to
// its maximal ideal, when one exists here: a single monomial (1/max
// exponent) or a diagonal (sum of pairwise disjoint monomials, folded).
// nullopt when this library has no closed form and the threshold must be
// supplied by the caller.
inline std::optional<FptValue> component_threshold(const Polynomial& g, std::uint32_t p);

// One component threshold a = c^{tau(g^lambda)}(g) measured or imported at
// exponent lambda.
struct JumpingInput {
  Rational lambda;
  Rational a;
};

// Lower-bound set of F-jumping numbers of g1+g2: every applicable pairwise
// Thom-Sebastiani threshold, deduplicated and sorted. Not claimed complete.
inline std::vector<Rational> jumping_candidates(const std::vector<JumpingInput>& list1,
                                                const std::vector<JumpingInput>& list2,
                                                std::uint32_t p) {
  std::vector<Rational> out;
  for (const auto& u : list1)
    for (const auto& v : list2) {
      if (u.a + v.a > 1) continue;
      out.push_back(ts_fthreshold(u.a, v.a, p).value);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::optional<FptValue> component_threshold(const Polynomial& g, std::uint32_t p) {
  if (g.is_zero()) return std::nullopt;
  // terms must have pairwise disjoint supports (monomial or diagonal shape)
  std::vector<std::uint64_t> maxima;
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < g.nterms(); ++i) {
    auto e = g.exps_view(i);
    std::uint64_t mx = 0;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] <= 0) continue;
      if (seen.count(v)) return std::nullopt;
      seen.insert(v);
      mx = std::max<std::uint64_t>(mx, static_cast<std::uint64_t>(e[v]));
    }
    if (mx == 0) return std::nullopt; // constant term: not in the maximal ideal
    maxima.push_back(mx);
  }
  FptValue acc{Rational(1, maxima[0]), classify_fpt(Rational(1, maxima[0]), p), std::nullopt};
  for (std::size_t i = 1; i < maxima.size(); ++i) {
    Rational next(1, maxima[i]);
    if (acc.value + next > 1) return std::nullopt;
    acc = ts_fthreshold(acc.value, next, p);
  }
  return acc;
}

} // namespace fptlab

#endif
