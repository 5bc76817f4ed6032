#ifndef FPTLAB_IDEAL_HPP
#define FPTLAB_IDEAL_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <tuple>
#include <vector>

#include "fptlab/polynomial.hpp"

namespace fptlab {

inline bool monomial_divides(ExpView a, ExpView b) {
  // x^a | x^b
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponents monomial_lcm(ExpView a, ExpView b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline Exponents monomial_quotient(ExpView a, ExpView b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// Full normal form of f modulo `basis` (leading and tail terms reduced).
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  const std::uint32_t p = f.prime();
  Polynomial h = f;
  Polynomial r = Polynomial::zero(p, f.context());
  while (!h.is_zero()) {
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (monomial_divides(g.leading_exps(), h.leading_exps())) {
        std::uint64_t c = mul_mod(h.leading_coeff(), inv_mod(g.leading_coeff(), p), p);
        Exponents q = monomial_quotient(h.leading_exps(), g.leading_exps());
        h = sub(h, mul_term(g, ExpView(q), c));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      Exponents e(h.leading_exps().begin(), h.leading_exps().end());
      r = add(r, Polynomial::term(p, f.context(), std::move(e), h.leading_coeff()));
      h = sub(h, Polynomial::term(p, f.context(),
                                  Exponents(h.leading_exps().begin(), h.leading_exps().end()),
                                  h.leading_coeff()));
    }
  }
  return r;
}

namespace detail {

inline Polynomial make_monic(const Polynomial& f) {
  if (f.is_zero() || f.leading_coeff() == 1) return f;
  Exponents zero_exp(f.var_count(), 0);
  return mul_term(f, ExpView(zero_exp), inv_mod(f.leading_coeff(), f.prime()));
}

// Buchberger with the normal selection strategy and the coprime-lead
// criterion; S-pairs are processed by (lcm degree, pair index) so the run
// is deterministic.
inline std::vector<Polynomial> buchberger(std::vector<Polynomial> gens) {
  std::vector<Polynomial> g;
  for (auto& f : gens)
    if (!f.is_zero()) g.push_back(make_monic(f));
  if (g.empty()) return {};
  std::sort(g.begin(), g.end(), Polynomial::canonical_less);
  g.erase(std::unique(g.begin(), g.end()), g.end());

  // Cheap interreduction pre-pass: collapses highly redundant generator
  // lists (Frobenius-root buckets) before any S-pairs are formed.
  std::vector<Polynomial> kept;
  for (const auto& f : g) {
    Polynomial nf = normal_form(f, kept);
    if (!nf.is_zero()) kept.push_back(make_monic(nf));
  }
  g = std::move(kept);

  using Pair = std::tuple<std::int64_t, std::size_t, std::size_t>;
  std::set<Pair> pairs;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Exponents l = monomial_lcm(g[i].leading_exps(), g[j].leading_exps());
      pairs.emplace(total_degree(ExpView(l)), i, j);
    }
  };
  for (std::size_t j = 1; j < g.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    Exponents l = monomial_lcm(g[i].leading_exps(), g[j].leading_exps());
    // coprime leading monomials: S-polynomial reduces to zero
    if (total_degree(ExpView(l)) ==
        total_degree(g[i].leading_exps()) + total_degree(g[j].leading_exps()))
      continue;
    Exponents qi = monomial_quotient(ExpView(l), g[i].leading_exps());
    Exponents qj = monomial_quotient(ExpView(l), g[j].leading_exps());
    Polynomial s = sub(mul_term(g[i], ExpView(qi), 1), mul_term(g[j], ExpView(qj), 1));
    Polynomial nf = normal_form(s, g);
    if (!nf.is_zero()) {
      g.push_back(make_monic(nf));
      push_pairs(g.size() - 1);
    }
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      if (monomial_divides(g[j].leading_exps(), g[i].leading_exps())) {
        if (exps_equal(g[j].leading_exps(), g[i].leading_exps()) && j > i) continue;
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g[i]);
  }

  // Reduce tails against the rest: the result is the reduced basis, which
  // is unique for the ideal and the term order.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial nf = normal_form(minimal[i], others);
    if (!nf.is_zero()) reduced.push_back(make_monic(nf));
  }
  std::sort(reduced.begin(), reduced.end(), Polynomial::canonical_less);
  return reduced;
}

} // namespace detail

// Ideal of the polynomial ring, a logically immutable value. The reduced
// Groebner basis is memoized; call_once publishes it so concurrent readers
// see either no cache or the complete basis.
class Ideal {
public:
  Ideal() = default;

  explicit Ideal(std::vector<Polynomial> gens) {
    if (gens.empty()) throw domain_error("ideal requires at least one generator");
    auto impl = std::make_shared<Impl>();
    impl->prime = gens.front().prime();
    impl->ctx = gens.front().context();
    for (const auto& g : gens) {
      if (g.prime() != impl->prime) throw domain_error("ideal generators: prime mismatch");
      if (g.context() != impl->ctx) throw domain_error("ideal generators: context mismatch");
      if (!g.is_zero()) impl->gens.push_back(g);
    }
    impl->monomial =
        !impl->gens.empty() &&
        std::all_of(impl->gens.begin(), impl->gens.end(), [](const Polynomial& g) { return g.is_term(); });
    if (impl->monomial) {
      // minimal monomial generators under divisibility
      std::vector<Polynomial> m = impl->gens;
      std::sort(m.begin(), m.end(), Polynomial::canonical_less);
      m.erase(std::unique(m.begin(), m.end()), m.end());
      for (std::size_t i = 0; i < m.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < m.size() && !redundant; ++j)
          if (i != j && monomial_divides(m[j].leading_exps(), m[i].leading_exps()) &&
              !exps_equal(m[j].leading_exps(), m[i].leading_exps()))
            redundant = true;
        if (!redundant) impl->mono_min.push_back(detail::make_monic(m[i]));
      }
    }
    impl_ = std::move(impl);
  }

  std::uint32_t prime() const { return impl_->prime; }
  const VarContext& context() const { return impl_->ctx; }
  const std::vector<Polynomial>& generators() const { return impl_->gens; }
  bool is_zero() const { return impl_->gens.empty(); }
  bool is_monomial() const { return impl_->monomial; }
  const std::vector<Polynomial>& monomial_generators() const { return impl_->mono_min; }

  const std::vector<Polynomial>& groebner() const {
    std::call_once(impl_->gb_once, [this] { impl_->gb = detail::buchberger(impl_->gens); });
    return impl_->gb;
  }

  bool contains(const Polynomial& f) const {
    if (f.prime() != prime()) throw domain_error("contains: prime mismatch");
    if (f.context() != context()) throw domain_error("contains: context mismatch");
    if (f.is_zero()) return true;
    if (is_zero()) return false;
    if (impl_->monomial) {
      for (std::size_t i = 0; i < f.nterms(); ++i) {
        bool covered = false;
        for (const auto& g : impl_->mono_min)
          if (monomial_divides(g.leading_exps(), f.exps_view(i))) {
            covered = true;
            break;
          }
        if (!covered) return false;
      }
      return true;
    }
    return normal_form(f, groebner()).is_zero();
  }

  bool contains_ideal(const Ideal& other) const {
    for (const auto& g : other.generators())
      if (!contains(g)) return false;
    return true;
  }

  bool is_proper() const {
    if (is_zero()) return true;
    return !contains(Polynomial::constant(prime(), context(), 1));
  }

private:
  struct Impl {
    std::uint32_t prime = 0;
    VarContext ctx;
    std::vector<Polynomial> gens;
    bool monomial = false;
    std::vector<Polynomial> mono_min;
    mutable std::once_flag gb_once;
    mutable std::vector<Polynomial> gb;
  };
  std::shared_ptr<const Impl> impl_;
};

// (x_1, ..., x_n): the homogeneous maximal ideal of the context.
inline Ideal maximal_ideal(const VarContext& ctx, std::uint32_t p) {
  if (ctx.size() == 0) throw domain_error("maximal_ideal: empty context");
  std::vector<Polynomial> gens;
  for (std::size_t v = 0; v < ctx.size(); ++v) {
    Exponents e(ctx.size(), 0);
    e[v] = 1;
    gens.push_back(Polynomial::term(p, ctx, std::move(e), 1));
  }
  return Ideal(std::move(gens));
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (a.prime() != b.prime()) throw domain_error("ideal_sum: prime mismatch");
  if (a.context() != b.context()) throw domain_error("ideal_sum: context mismatch");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  if (gens.empty()) gens.push_back(Polynomial::zero(a.prime(), a.context()));
  return Ideal(std::move(gens));
}

inline bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (a.prime() != b.prime()) throw domain_error("ideal_equal: prime mismatch");
  if (a.context() != b.context()) throw domain_error("ideal_equal: context mismatch");
  // reduced Groebner bases are canonical
  return a.groebner() == b.groebner();
}

// I^[p^e]: the ideal generated by the p^e-th powers of the generators.
inline Ideal frobenius_power(const Ideal& ideal, std::uint32_t e) {
  if (e == 0) return ideal;
  if (ideal.is_zero()) return ideal;
  BigInt pe = pow_bigint(BigInt(ideal.prime()), e);
  if (pe > (BigInt(1) << 62)) throw domain_error("frobenius_power: p^e too large");
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators())
    gens.push_back(poly_pow(g, static_cast<std::uint64_t>(pe)));
  return Ideal(std::move(gens));
}

// Drops generators that lie in the ideal of the remaining ones. Assumes the
// list is already deduplicated.
inline std::vector<Polynomial> prune_redundant_generators(std::vector<Polynomial> gens) {
  std::sort(gens.begin(), gens.end(), Polynomial::canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (std::size_t i = gens.size(); i-- > 0;) {
    if (gens.size() == 1) break;
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (Ideal(others).contains(gens[i])) gens.erase(gens.begin() + i);
  }
  return gens;
}

// I^[1/p^e] via the free-basis decomposition: each term c*x^a splits as
// a = p^e*q + r, and for every residue monomial x^r the coefficients
// sum c*x^q (coefficient p-th roots are the identity over F_p) generate
// the root.
inline Ideal frobenius_root(const Ideal& ideal, std::uint32_t e) {
  if (e == 0) return ideal;
  if (ideal.is_zero()) return ideal;
  const std::uint32_t p = ideal.prime();
  const VarContext& ctx = ideal.context();
  const std::size_t nv = ctx.size();
  BigInt pe_big = pow_bigint(BigInt(p), e);
  bool huge = pe_big > (BigInt(1) << 62);
  std::int64_t pe = huge ? 0 : static_cast<std::int64_t>(pe_big);

  std::vector<Polynomial> collected;
  for (const auto& g : ideal.generators()) {
    std::map<Exponents, std::vector<std::pair<Exponents, std::uint64_t>>> buckets;
    for (std::size_t i = 0; i < g.nterms(); ++i) {
      auto a = g.exps_view(i);
      Exponents q(nv), r(nv);
      for (std::size_t v = 0; v < nv; ++v) {
        if (huge) {
          q[v] = 0;
          r[v] = a[v];
        } else {
          q[v] = a[v] / pe;
          r[v] = a[v] % pe;
        }
      }
      buckets[std::move(r)].emplace_back(std::move(q), g.coeff(i));
    }
    for (auto& [r, terms] : buckets)
      collected.push_back(Polynomial::from_terms(p, ctx, std::move(terms)));
  }
  std::vector<Polynomial> minimal = prune_redundant_generators(std::move(collected));
  if (minimal.empty()) minimal.push_back(Polynomial::zero(p, ctx));
  return Ideal(std::move(minimal));
}

// f in J^[p^e]? By minimality of the Frobenius root this is equivalent to
// (f)^[1/p^e] being contained in J; monomial J gets a direct divisibility
// check on p^e-scaled generators.
inline bool bracket_membership(const Polynomial& f, const Ideal& j, std::uint32_t e) {
  if (f.prime() != j.prime()) throw domain_error("bracket_membership: prime mismatch");
  if (f.context() != j.context()) throw domain_error("bracket_membership: context mismatch");
  if (f.is_zero()) return true;
  if (j.is_zero()) return false;
  if (e == 0) return j.contains(f);
  if (j.is_monomial()) {
    BigInt pe = pow_bigint(BigInt(j.prime()), e);
    for (std::size_t i = 0; i < f.nterms(); ++i) {
      auto t = f.exps_view(i);
      bool covered = false;
      for (const auto& g : j.monomial_generators()) {
        auto ge = g.leading_exps();
        bool ok = true;
        for (std::size_t v = 0; v < t.size() && ok; ++v)
          if (BigInt(t[v]) < pe * ge[v]) ok = false;
        if (ok) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
    return true;
  }
  Ideal root = frobenius_root(Ideal({f}), e);
  return j.contains_ideal(root);
}

} // namespace fptlab

#endif
