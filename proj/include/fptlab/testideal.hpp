#ifndef FPTLAB_TESTIDEAL_HPP
#define FPTLAB_TESTIDEAL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "fptlab/ideal.hpp"
#include "fptlab/thresholds.hpp"

namespace fptlab {

enum class CaseTag {
  Unit,     // c^m(f) = 1
  NotPAdic, // c^m(f) has denominator with a factor other than p
  PAdic,    // c^m(f) in Z[1/p], c != 1
};

inline const char* case_tag_name(CaseTag t) {
  switch (t) {
    case CaseTag::Unit: return "UNIT";
    case CaseTag::NotPAdic: return "NOT_P_ADIC";
    case CaseTag::PAdic: return "P_ADIC";
  }
  return "?";
}

struct TestIdealResult {
  Ideal ideal;
  Rational exponent;
  std::uint32_t stabilized_at_e = 0;
  std::optional<CaseTag> case_tag;
};

// tau(f^{r/p^e}) = (f^r)^[1/p^e].
inline Ideal test_ideal_p_power(const Polynomial& f, std::uint64_t r, std::uint32_t e) {
  return frobenius_root(Ideal({poly_pow(f, r)}), e);
}

namespace detail {

inline std::uint64_t ceil_c_pe(const Rational& c, std::uint32_t p, std::uint32_t e) {
  BigInt r = ceil_scaled(c, pow_bigint(BigInt(p), e));
  if (r > (BigInt(1) << 62)) throw domain_error("test_ideal: exponent ceil(c*p^e) too large");
  return static_cast<std::uint64_t>(r);
}

} // namespace detail

// Definitional test ideal: the stabilizing union of J_e = (f^{ceil(c p^e)})^[1/p^e].
//
// When c = r/p^d exactly, ceil(c p^e) = r p^{e-d} for e >= d, so J_e = J_d
// for all later e and the union IS J_d: no search is needed.
//
// Otherwise the chain is scanned. A step J_e = J_{e+1} ends the search only
// when it is informative, i.e. ceil(c p^{e+1}) != p * ceil(c p^e): when the
// digit of c at index e+1 is p-1 the two roots coincide by construction and
// witness nothing (the chain can still jump later). stabilized_at_e reports
// where the scan stopped so callers can extend the evidence window.
inline TestIdealResult test_ideal(const Polynomial& f, const Rational& c, std::uint32_t e_max = 6) {
  if (!(c > 0)) throw domain_error("test_ideal: exponent must be positive");
  if (e_max < 2) throw domain_error("test_ideal: e_max must be >= 2");
  if (f.is_zero()) throw domain_error("test_ideal: f must be nonzero");
  const std::uint32_t p = f.prime();

  if (has_p_power_denominator(c, p)) {
    std::uint32_t d = 0;
    for (BigInt q = den(c); q > 1; q /= p) ++d;
    std::uint32_t e0 = std::max<std::uint32_t>(d, 1);
    Ideal j = frobenius_root(Ideal({poly_pow(f, detail::ceil_c_pe(c, p, e0))}), e0);
    return TestIdealResult{j, c, e0, std::nullopt};
  }

  Ideal prev = frobenius_root(Ideal({poly_pow(f, detail::ceil_c_pe(c, p, 1))}), 1);
  for (std::uint32_t e = 1; e < e_max; ++e) {
    std::uint64_t r_prev = detail::ceil_c_pe(c, p, e);
    std::uint64_t r_next = detail::ceil_c_pe(c, p, e + 1);
    Ideal next = frobenius_root(Ideal({poly_pow(f, r_next)}), e + 1);
    if (!next.contains_ideal(prev))
      throw std::logic_error("test_ideal: ascending chain violated (implementation bug)");
    bool informative = r_next != p * r_prev;
    if (informative && ideal_equal(prev, next)) return TestIdealResult{prev, c, e, std::nullopt};
    prev = next;
  }
  throw domain_error("test_ideal: no stabilization within e_max = " + std::to_string(e_max) +
                     "; raise e_max");
}

namespace detail {

struct TsPair {
  Polynomial g1, g2; // restricted to their own supports
  VarContext joint;
  Polynomial f; // g1 + g2 in the joint context
};

inline TsPair make_ts_pair(const Polynomial& g1, const Polynomial& g2) {
  if (g1.prime() != g2.prime()) throw domain_error("prime mismatch");
  if (g1.is_zero() || g2.is_zero()) throw domain_error("summands must be nonzero");
  VarContext joint;
  if (g1.context() == g2.context()) {
    auto s1 = variable_support(g1);
    for (auto v : variable_support(g2))
      if (s1.count(v)) throw domain_error("variable supports overlap");
    joint = g1.context();
  } else {
    if (!contexts_disjoint(g1.context(), g2.context()))
      throw domain_error("variable names overlap");
    joint = merge_contexts(g1.context(), g2.context());
  }
  TsPair out;
  out.g1 = restrict_to_support(g1);
  out.g2 = restrict_to_support(g2);
  out.joint = joint;
  out.f = add(in_context(g1, joint), in_context(g2, joint));
  return out;
}

inline Ideal extend_ideal(const Ideal& i, const VarContext& joint) {
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators()) gens.push_back(in_context(g, joint));
  if (gens.empty()) gens.push_back(Polynomial::zero(i.prime(), joint));
  return Ideal(std::move(gens));
}

} // namespace detail

// First test ideal of a Thom-Sebastiani polynomial f = g1 + g2 at its
// F-pure threshold, via the three-way case split on c = c^m(f):
//   c = 1          -> (f)
//   c not in Z[1/p] -> tau(g1^{a1}) + tau(g2^{a2})
//   c in Z[1/p]    -> (g1^{ceil(p^d a1)})^[1/p^d] + (g2^{ceil(p^d a2)})^[1/p^d]
inline TestIdealResult ts_test_ideal(const Polynomial& g1, const Polynomial& g2,
                                     const Rational& a1, const Rational& a2,
                                     std::uint32_t e_max = 6) {
  detail::TsPair pair = detail::make_ts_pair(g1, g2);
  const std::uint32_t p = pair.f.prime();
  FptValue c = ts_fthreshold(a1, a2, p);
  const CarryProfile& cp = *c.profile;

  if (c.classification == FptClass::EqualsOne) {
    return TestIdealResult{Ideal({pair.f}), c.value, 1, CaseTag::Unit};
  }

  if (c.classification == FptClass::PPowerDenominator) {
    if (!cp.d)
      throw std::logic_error("ts_test_ideal: d infinite in the p-adic case (inconsistency)");
    std::uint32_t d = static_cast<std::uint32_t>(*cp.d);
    if (d == 0)
      throw std::logic_error("ts_test_ideal: d = 0 with c != 1 (inconsistency)");
    BigInt pd = pow_bigint(BigInt(p), d);
    auto exponent_for = [&](const Rational& a) {
      BigInt r = ceil_scaled(a, pd);
      // Lemma 2.4(2): the ceiling must equal p^d <a>_d + 1.
      BigInt via_trunc = floor_scaled(truncate_expansion(expand(a, p), d), pd) + 1;
      if (r != via_trunc)
        throw std::logic_error("ts_test_ideal: ceiling/truncation cross-check failed");
      if (r > (BigInt(1) << 62)) throw domain_error("ts_test_ideal: exponent too large");
      return static_cast<std::uint64_t>(r);
    };
    Ideal t1 = test_ideal_p_power(pair.g1, exponent_for(a1), d);
    Ideal t2 = test_ideal_p_power(pair.g2, exponent_for(a2), d);
    Ideal sum = ideal_sum(detail::extend_ideal(t1, pair.joint),
                          detail::extend_ideal(t2, pair.joint));
    return TestIdealResult{sum, c.value, d, CaseTag::PAdic};
  }

  // NOT_P_ADIC: component test ideals by definitional stabilization. The
  // proof picks a single index e with digit sums <= p-2; stabilized values
  // coincide with that single-index value, and we assert the coincidence
  // whenever the index is within computational reach.
  TestIdealResult t1 = test_ideal(pair.g1, a1, e_max);
  TestIdealResult t2 = test_ideal(pair.g2, a2, e_max);
  // Coincidence check: at any index e past both stabilization points with
  // digit sums <= p-2, the single-index values (g_i^{ceil(p^e a_i)})^[1/p^e]
  // must reproduce the stabilized test ideals.
  DigitStream s1 = expand(a1, p), s2 = expand(a2, p);
  std::uint64_t start = std::max(t1.stabilized_at_e, t2.stabilized_at_e);
  std::uint64_t scan = start + joint_scan_bound(s1, s2);
  for (std::uint64_t e = start; e <= scan; ++e) {
    if (e == 0 || digit_at(s1, e) + digit_at(s2, e) + 1 > p - 1) continue;
    BigInt r1 = ceil_scaled(a1, pow_bigint(BigInt(p), e));
    BigInt r2 = ceil_scaled(a2, pow_bigint(BigInt(p), e));
    if (r1 > 500000 || r2 > 500000) break; // single-index check out of reach
    Ideal single1 = test_ideal_p_power(pair.g1, static_cast<std::uint64_t>(r1),
                                       static_cast<std::uint32_t>(e));
    Ideal single2 = test_ideal_p_power(pair.g2, static_cast<std::uint64_t>(r2),
                                       static_cast<std::uint32_t>(e));
    if (!ideal_equal(single1, t1.ideal) || !ideal_equal(single2, t2.ideal))
      throw std::logic_error("ts_test_ideal: stabilized value disagrees with single-index value");
    break;
  }
  Ideal sum = ideal_sum(detail::extend_ideal(t1.ideal, pair.joint),
                        detail::extend_ideal(t2.ideal, pair.joint));
  return TestIdealResult{sum, c.value, std::max(t1.stabilized_at_e, t2.stabilized_at_e),
                         CaseTag::NotPAdic};
}

// Executable form of the Frobenius-root splitting lemma: at any index e <= L
// with digit sums <= p-2,
//   (f^{p^e(<a1>_e + <a2>_e) + 1})^[1/p^e]
//     = (g1^{ceil(p^e a1)})^[1/p^e] + (g2^{ceil(p^e a2)})^[1/p^e].
// Computes both sides independently and reports whether they agree.
inline bool lemma53_split_check(const Polynomial& g1, const Polynomial& g2, const Rational& a1,
                                const Rational& a2, std::uint32_t e) {
  detail::TsPair pair = detail::make_ts_pair(g1, g2);
  const std::uint32_t p = pair.f.prime();
  DigitStream s1 = expand(a1, p), s2 = expand(a2, p);
  if (digit_at(s1, e) + digit_at(s2, e) + 1 > p - 1)
    throw domain_error("lemma53_split_check: digit sums at e exceed p-2");
  CarryProfile cp = carry_profile(a1, a2, p);
  if (cp.L && e > *cp.L) throw domain_error("lemma53_split_check: e exceeds L");

  BigInt pe = pow_bigint(BigInt(p), e);
  std::uint64_t t1 = static_cast<std::uint64_t>(floor_scaled(truncate_expansion(s1, e), pe));
  std::uint64_t t2 = static_cast<std::uint64_t>(floor_scaled(truncate_expansion(s2, e), pe));

  Ideal lhs = frobenius_root(Ideal({poly_pow(pair.f, t1 + t2 + 1)}), e);
  Ideal rhs = ideal_sum(
      detail::extend_ideal(frobenius_root(Ideal({poly_pow(pair.g1, t1 + 1)}), e), pair.joint),
      detail::extend_ideal(frobenius_root(Ideal({poly_pow(pair.g2, t2 + 1)}), e), pair.joint));
  return ideal_equal(lhs, rhs);
}

} // namespace fptlab

#endif
