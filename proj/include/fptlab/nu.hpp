#ifndef FPTLAB_NU_HPP
#define FPTLAB_NU_HPP

#include <cstdint>
#include <utility>

#include "fptlab/digits.hpp"
#include "fptlab/ideal.hpp"

namespace fptlab {

// nu_f^J(p^e) = max{ l | f^l not in J^[p^e] } together with its truncation
// nu/p^e, which by Mustata-Takagi-Watanabe is the e-th truncation of the
// F-threshold c^J(f).
struct NuRecord {
  Polynomial f;
  Ideal j;
  std::uint32_t e = 0;
  std::uint64_t nu = 0;
  Rational truncation;
};

// Least M <= cap with f^M in J. Supports the f in sqrt(J) precondition of
// the F-threshold; callers may raise the cap when the search fails.
inline std::uint64_t radical_exponent(const Polynomial& f, const Ideal& j, std::uint64_t cap = 64) {
  if (cap < 1) throw domain_error("radical_exponent: cap must be >= 1");
  Polynomial g = f;
  for (std::uint64_t m = 1; m <= cap; ++m) {
    if (j.contains(g)) return m;
    g = mul(g, f);
  }
  throw domain_error("radical membership not detected within cap " + std::to_string(cap));
}

namespace detail {

// Incremental scan in R / J^[p^e] for monomial J: multiply by f, discard
// terms inside the bracket power, and stop when nothing survives. The
// remainder shrinks monotonically, and the full expansion of f^l never
// needs to exist.
inline std::uint64_t nu_monomial_scan(const Polynomial& f, const Ideal& j, std::uint32_t e,
                                      std::uint64_t bound) {
  const std::uint32_t p = f.prime();
  BigInt pe_big = pow_bigint(BigInt(p), e);
  std::vector<Exponents> cutoffs; // p^e * gen exponents; terms >= some cutoff die
  bool any_reachable = false;
  for (const auto& g : j.monomial_generators()) {
    auto ge = g.leading_exps();
    Exponents cut(ge.size());
    bool reachable = true;
    for (std::size_t v = 0; v < ge.size(); ++v) {
      BigInt c = pe_big * ge[v];
      if (c > (BigInt(1) << 62)) {
        reachable = false;
        break;
      }
      cut[v] = static_cast<std::int64_t>(c);
    }
    if (reachable) {
      cutoffs.push_back(std::move(cut));
      any_reachable = true;
    }
  }
  auto survives = [&](ExpView t, std::uint64_t) {
    for (const auto& cut : cutoffs) {
      bool dominated = true;
      for (std::size_t v = 0; v < cut.size() && dominated; ++v)
        if (t[v] < cut[v]) dominated = false;
      if (dominated) return false;
    }
    return true;
  };
  if (!any_reachable) return bound; // no power of f can enter J^[p^e] below the bound
  Polynomial cur = f.filtered(survives);
  if (cur.is_zero()) return 0;
  for (std::uint64_t l = 2; l <= bound; ++l) {
    cur = mul(cur, f).filtered(survives);
    if (cur.is_zero()) return l - 1;
  }
  return bound;
}

} // namespace detail

inline NuRecord nu(const Polynomial& f, const Ideal& j, std::uint32_t e,
                   std::uint64_t radical_cap = 64) {
  if (f.is_zero()) throw domain_error("nu: f must be nonzero");
  if (!j.is_proper()) throw domain_error("nu: J must be a proper ideal");
  const std::uint32_t p = f.prime();
  std::uint64_t m = radical_exponent(f, j, radical_cap);
  BigInt bound_big = BigInt(m) * pow_bigint(BigInt(p), e);
  if (bound_big > 100'000'000) throw domain_error("nu: search bound M*p^e too large");
  std::uint64_t bound = static_cast<std::uint64_t>(bound_big);

  std::uint64_t value;
  if (j.is_monomial()) {
    value = detail::nu_monomial_scan(f, j, e, bound);
    if (value == bound)
      throw domain_error("nu: upper bound reached; internal inconsistency");
  } else {
    // binary search on the monotone membership l -> f^l in J^[p^e]
    std::uint64_t lo = 0, hi = bound; // f^0 = 1 outside, f^bound inside
    while (hi - lo > 1) {
      std::uint64_t mid = lo + (hi - lo) / 2;
      if (bracket_membership(poly_pow(f, mid), j, e)) hi = mid;
      else lo = mid;
    }
    value = lo;
  }
  NuRecord rec;
  rec.f = f;
  rec.j = j;
  rec.e = e;
  rec.nu = value;
  rec.truncation = Rational(value, pow_bigint(BigInt(p), e));
  return rec;
}

// (nu/p^e, nu/p^e + 1/p^e]: the half-open interval containing c^J(f), since
// the threshold's e-th truncation equals nu/p^e.
inline std::pair<Rational, Rational> fpt_bracket(const Polynomial& f, const Ideal& j,
                                                 std::uint32_t e) {
  NuRecord r = nu(f, j, e);
  Rational step(1, pow_bigint(BigInt(f.prime()), e));
  return {r.truncation, r.truncation + step};
}

// Thom-Sebastiani membership (Lemma on powers and terms): with g1, g2 in
// disjoint variables, f^theta lies in I1^[p^e]R + I2^[p^e]R iff for every j
// either C(theta,j) = 0 mod p, g1^j is in I1^[p^e], or g2^{theta-j} is in
// I2^[p^e]. Component memberships are monotone in j, so the two nu values
// delimit the only window where all three can fail.
inline bool ts_membership(const Polynomial& g1, const Polynomial& g2, const Ideal& i1,
                          const Ideal& i2, std::uint64_t theta, std::uint32_t e) {
  if (g1.prime() != g2.prime()) throw domain_error("ts_membership: prime mismatch");
  if (g1.context() == g2.context()) {
    auto s1 = variable_support(g1);
    for (auto v : variable_support(g2))
      if (s1.count(v)) throw domain_error("ts_membership: supports overlap");
  } else if (!contexts_disjoint(g1.context(), g2.context())) {
    throw domain_error("ts_membership: variable names overlap");
  }
  std::uint64_t nu1 = nu(g1, i1, e).nu;
  std::uint64_t nu2 = nu(g2, i2, e).nu;
  std::uint64_t jlo = theta > nu2 ? theta - nu2 : 0;
  std::uint64_t jhi = std::min(theta, nu1);
  for (std::uint64_t j = jlo; j <= jhi && j <= theta; ++j)
    if (lucas_binomial_mod_p(theta, j, g1.prime()) != 0) return false;
  return true;
}

} // namespace fptlab

#endif
