#ifndef FPTLAB_POLYNOMIAL_HPP
#define FPTLAB_POLYNOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fptlab/context.hpp"
#include "fptlab/digits.hpp"
#include "fptlab/errors.hpp"
#include "fptlab/modp.hpp"
#include "fptlab/rational.hpp"

namespace fptlab {

using Exponents = std::vector<std::int64_t>;
using ExpView = std::span<const std::int64_t>;

inline std::int64_t total_degree(ExpView e) {
  return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

// Graded reverse lexicographic: higher total degree wins; on ties the
// monomial whose last differing exponent is smaller wins.
inline bool grevlex_less(ExpView a, ExpView b) {
  std::int64_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

inline bool exps_equal(ExpView a, ExpView b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

// Sparse multivariate polynomial over F_p. Terms are stored as a flat
// row-major exponent matrix plus a parallel coefficient array, sorted by
// descending grevlex (leading term first). Coefficients are the least
// nonnegative residues and never zero. Values are immutable once built.
class Polynomial {
public:
  Polynomial() = default;

  static Polynomial zero(std::uint32_t p, VarContext ctx) {
    Polynomial f;
    f.prime_ = p;
    f.ctx_ = std::move(ctx);
    return f;
  }

  static Polynomial constant(std::uint32_t p, VarContext ctx, std::uint64_t c) {
    Polynomial f = zero(p, std::move(ctx));
    c %= p;
    if (c != 0) {
      f.exps_.assign(f.ctx_.size(), 0);
      f.coeffs_.push_back(c);
    }
    return f;
  }

  static Polynomial term(std::uint32_t p, VarContext ctx, Exponents exps, std::uint64_t c) {
    Polynomial f = zero(p, std::move(ctx));
    if (exps.size() != f.ctx_.size()) throw domain_error("exponent arity mismatch");
    c %= p;
    if (c != 0) {
      f.exps_ = std::move(exps);
      f.coeffs_.push_back(c);
    }
    return f;
  }

  // Builds from an unsorted term list: sorts, merges equal monomials mod p,
  // drops zeros.
  static Polynomial from_terms(std::uint32_t p, VarContext ctx,
                               std::vector<std::pair<Exponents, std::uint64_t>> terms) {
    Polynomial f = zero(p, std::move(ctx));
    const std::size_t nv = f.ctx_.size();
    for (auto& [e, c] : terms) {
      if (e.size() != nv) throw domain_error("exponent arity mismatch");
      (void)c;
    }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
      return grevlex_less(ExpView(b.first), ExpView(a.first));
    });
    for (auto& [e, c] : terms) {
      c %= p;
      if (c == 0) continue;
      if (!f.coeffs_.empty() && exps_equal(f.exps_view(f.nterms() - 1), ExpView(e))) {
        std::uint64_t merged = add_mod(f.coeffs_.back(), c, p);
        if (merged == 0) {
          f.coeffs_.pop_back();
          f.exps_.resize(f.exps_.size() - nv);
        } else {
          f.coeffs_.back() = merged;
        }
      } else {
        f.exps_.insert(f.exps_.end(), e.begin(), e.end());
        f.coeffs_.push_back(c);
      }
    }
    return f;
  }

  std::uint32_t prime() const { return prime_; }
  const VarContext& context() const { return ctx_; }
  std::size_t var_count() const { return ctx_.size(); }
  std::size_t nterms() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_term() const { return coeffs_.size() == 1; }

  ExpView exps_view(std::size_t i) const {
    return ExpView(exps_.data() + i * ctx_.size(), ctx_.size());
  }
  std::uint64_t coeff(std::size_t i) const { return coeffs_[i]; }

  // Copy of this polynomial keeping only terms where keep(exps, coeff)
  // holds; a subsequence of sorted rows stays sorted.
  template <typename Pred>
  Polynomial filtered(Pred keep) const {
    Polynomial r = zero(prime_, ctx_);
    const std::size_t nv = ctx_.size();
    for (std::size_t i = 0; i < nterms(); ++i) {
      if (!keep(exps_view(i), coeffs_[i])) continue;
      auto e = exps_view(i);
      r.exps_.insert(r.exps_.end(), e.begin(), e.end());
      r.coeffs_.push_back(coeffs_[i]);
    }
    (void)nv;
    return r;
  }

  ExpView leading_exps() const { return exps_view(0); }
  std::uint64_t leading_coeff() const { return coeffs_[0]; }

  std::int64_t degree() const {
    std::int64_t d = -1;
    for (std::size_t i = 0; i < nterms(); ++i) d = std::max(d, total_degree(exps_view(i)));
    return d;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.prime_ == b.prime_ && a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_ &&
           a.exps_ == b.exps_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Total order on polynomials (same prime/context) for canonical sorting.
  static bool canonical_less(const Polynomial& a, const Polynomial& b) {
    std::size_t n = std::min(a.nterms(), b.nterms());
    for (std::size_t i = 0; i < n; ++i) {
      if (!exps_equal(a.exps_view(i), b.exps_view(i)))
        return grevlex_less(a.exps_view(i), b.exps_view(i));
      if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    }
    return a.nterms() < b.nterms();
  }

private:
  std::uint32_t prime_ = 0;
  VarContext ctx_;
  std::vector<std::int64_t> exps_; // nterms x nvars, descending grevlex
  std::vector<std::uint64_t> coeffs_;

  void require_compatible(const Polynomial& o) const {
    if (prime_ != o.prime_) throw domain_error("prime mismatch");
    if (ctx_ != o.ctx_) throw domain_error("variable context mismatch");
  }

  friend Polynomial add(const Polynomial&, const Polynomial&);
  friend Polynomial neg(const Polynomial&);
  friend Polynomial mul(const Polynomial&, const Polynomial&);
  friend Polynomial mul_term(const Polynomial&, ExpView, std::uint64_t);
  friend Polynomial scale_exponents(const Polynomial&, std::int64_t);
};

inline Polynomial neg(const Polynomial& a) {
  Polynomial r = a;
  for (auto& c : r.coeffs_) c = a.prime_ - c;
  return r;
}

inline Polynomial add(const Polynomial& a, const Polynomial& b) {
  a.require_compatible(b);
  const std::uint32_t p = a.prime();
  const std::size_t nv = a.var_count();
  Polynomial r = Polynomial::zero(p, a.context());
  r.exps_.reserve(a.exps_.size() + b.exps_.size());
  r.coeffs_.reserve(a.nterms() + b.nterms());
  std::size_t i = 0, j = 0;
  while (i < a.nterms() || j < b.nterms()) {
    int take; // 0: a, 1: b, 2: both
    if (i == a.nterms()) take = 1;
    else if (j == b.nterms()) take = 0;
    else if (exps_equal(a.exps_view(i), b.exps_view(j))) take = 2;
    else take = grevlex_less(a.exps_view(i), b.exps_view(j)) ? 1 : 0;
    if (take == 0) {
      auto e = a.exps_view(i);
      r.exps_.insert(r.exps_.end(), e.begin(), e.end());
      r.coeffs_.push_back(a.coeff(i));
      ++i;
    } else if (take == 1) {
      auto e = b.exps_view(j);
      r.exps_.insert(r.exps_.end(), e.begin(), e.end());
      r.coeffs_.push_back(b.coeff(j));
      ++j;
    } else {
      std::uint64_t c = add_mod(a.coeff(i), b.coeff(j), p);
      if (c != 0) {
        auto e = a.exps_view(i);
        r.exps_.insert(r.exps_.end(), e.begin(), e.end());
        r.coeffs_.push_back(c);
      }
      ++i;
      ++j;
    }
  }
  (void)nv;
  return r;
}

inline Polynomial sub(const Polynomial& a, const Polynomial& b) { return add(a, neg(b)); }

// a * (c * x^e); multiplying by a single term preserves the term order.
inline Polynomial mul_term(const Polynomial& a, ExpView e, std::uint64_t c) {
  const std::uint32_t p = a.prime();
  c %= p;
  Polynomial r = Polynomial::zero(p, a.context());
  if (c == 0 || a.is_zero()) return r;
  const std::size_t nv = a.var_count();
  r.exps_.resize(a.exps_.size());
  r.coeffs_.resize(a.nterms());
  for (std::size_t i = 0; i < a.nterms(); ++i) {
    for (std::size_t v = 0; v < nv; ++v) r.exps_[i * nv + v] = a.exps_view(i)[v] + e[v];
    r.coeffs_[i] = mul_mod(a.coeff(i), c, p);
  }
  return r;
}

inline Polynomial mul(const Polynomial& a, const Polynomial& b) {
  a.require_compatible(b);
  const std::uint32_t p = a.prime();
  if (a.is_zero() || b.is_zero()) return Polynomial::zero(p, a.context());
  const Polynomial& big = a.nterms() >= b.nterms() ? a : b;
  const Polynomial& small = a.nterms() >= b.nterms() ? b : a;

  if (small.nterms() <= 8) {
    Polynomial r = Polynomial::zero(p, a.context());
    for (std::size_t j = 0; j < small.nterms(); ++j)
      r = add(r, mul_term(big, small.exps_view(j), small.coeff(j)));
    return r;
  }

  std::vector<std::pair<Exponents, std::uint64_t>> products;
  products.reserve(a.nterms() * b.nterms());
  const std::size_t nv = a.var_count();
  for (std::size_t i = 0; i < big.nterms(); ++i) {
    for (std::size_t j = 0; j < small.nterms(); ++j) {
      Exponents e(nv);
      for (std::size_t v = 0; v < nv; ++v) e[v] = big.exps_view(i)[v] + small.exps_view(j)[v];
      products.emplace_back(std::move(e), mul_mod(big.coeff(i), small.coeff(j), p));
    }
  }
  return Polynomial::from_terms(p, a.context(), std::move(products));
}

// Multiplies every exponent by k (the Frobenius step f -> f^{p^s} acts on
// monomials only; coefficients in F_p are fixed).
inline Polynomial scale_exponents(const Polynomial& a, std::int64_t k) {
  Polynomial r = a;
  for (auto& e : r.exps_) {
    if (e != 0 && k > (std::int64_t{1} << 62) / e)
      throw domain_error("exponent overflow in Frobenius power");
    e *= k;
  }
  return r;
}

namespace detail {

inline Polynomial pow_iterative(const Polynomial& f, std::uint64_t k) {
  Polynomial r = Polynomial::constant(f.prime(), f.context(), 1);
  for (std::uint64_t i = 0; i < k; ++i) r = mul(r, f);
  return r;
}

// (c1 x^e1 + c2 x^e2)^k expanded with Lucas-theorem binomials; only the
// surviving residues are materialized, which keeps Frobenius-scale powers
// of binomials linear in k.
inline Polynomial pow_binomial(const Polynomial& f, std::uint64_t k) {
  const std::uint32_t p = f.prime();
  const std::size_t nv = f.var_count();
  auto e1 = f.exps_view(0);
  auto e2 = f.exps_view(1);
  std::uint64_t c1 = f.coeff(0), c2 = f.coeff(1);
  std::vector<std::pair<Exponents, std::uint64_t>> terms;
  terms.reserve(k + 1);
  std::uint64_t pw1 = 1; // c1^j
  std::vector<std::uint64_t> pw2(k + 1);
  pw2[0] = 1;
  for (std::uint64_t j = 1; j <= k; ++j) pw2[j] = mul_mod(pw2[j - 1], c2, p);
  for (std::uint64_t j = 0; j <= k; ++j) {
    std::uint64_t c = lucas_binomial_mod_p(k, j, p);
    if (j > 0) pw1 = mul_mod(pw1, c1, p);
    if (c != 0) {
      c = mul_mod(mul_mod(c, pw1, p), pw2[k - j], p);
      Exponents e(nv);
      for (std::size_t v = 0; v < nv; ++v)
        e[v] = static_cast<std::int64_t>(j) * e1[v] + static_cast<std::int64_t>(k - j) * e2[v];
      terms.emplace_back(std::move(e), c);
    }
  }
  return Polynomial::from_terms(p, f.context(), std::move(terms));
}

// Multinomial expansion of f^k for few-term f. Compositions whose running
// Lucas factor vanishes mod p are pruned with their whole subtree, so only
// surviving terms are ever materialized.
inline Polynomial pow_multinomial(const Polynomial& f, std::uint64_t k) {
  const std::uint32_t p = f.prime();
  const std::size_t nv = f.var_count();
  const std::size_t t = f.nterms();
  std::vector<std::pair<Exponents, std::uint64_t>> terms;
  Exponents acc(nv, 0);
  std::function<void(std::size_t, std::uint64_t, std::uint64_t)> rec =
      [&](std::size_t i, std::uint64_t rem, std::uint64_t coeff) {
        if (i == t - 1) {
          std::uint64_t c = mul_mod(coeff, pow_mod(f.coeff(i), rem, p), p);
          Exponents e(nv);
          auto ei = f.exps_view(i);
          for (std::size_t v = 0; v < nv; ++v)
            e[v] = acc[v] + static_cast<std::int64_t>(rem) * ei[v];
          terms.emplace_back(std::move(e), c);
          if (terms.size() > 60'000'000)
            throw domain_error("poly_pow: expansion exceeds the term budget");
          return;
        }
        auto ei = f.exps_view(i);
        std::uint64_t ci_pow = 1;
        for (std::uint64_t j = 0; j <= rem; ++j) {
          if (j > 0) {
            ci_pow = mul_mod(ci_pow, f.coeff(i), p);
            for (std::size_t v = 0; v < nv; ++v) acc[v] += ei[v];
          }
          std::uint64_t factor = lucas_binomial_mod_p(rem, j, p);
          if (factor != 0) rec(i + 1, rem - j, mul_mod(mul_mod(coeff, factor, p), ci_pow, p));
        }
        for (std::size_t v = 0; v < nv; ++v) acc[v] -= static_cast<std::int64_t>(rem) * ei[v];
      };
  rec(0, k, 1);
  return Polynomial::from_terms(p, f.context(), std::move(terms));
}

} // namespace detail

// f^n, factoring n = p^s * k with p not dividing k: computes f^k and then
// scales all exponents by p^s. Valid because coefficients in F_p are fixed
// by Frobenius, so f^{p} has the same coefficients on p-scaled monomials.
inline Polynomial poly_pow(const Polynomial& f, std::uint64_t n) {
  const std::uint32_t p = f.prime();
  if (n == 0) return Polynomial::constant(p, f.context(), 1);
  if (f.is_zero()) return f;
  std::uint64_t k = n;
  std::int64_t ps = 1;
  while (k % p == 0) {
    k /= p;
    if (ps > (std::int64_t{1} << 62) / p) throw domain_error("exponent overflow in poly_pow");
    ps *= p;
  }
  Polynomial base;
  if (f.is_term()) {
    Polynomial scaled = scale_exponents(f, static_cast<std::int64_t>(k));
    base = Polynomial::term(p, f.context(),
                            Exponents(scaled.exps_view(0).begin(), scaled.exps_view(0).end()),
                            pow_mod(f.coeff(0), k, p));
  } else if (f.nterms() == 2) {
    base = detail::pow_binomial(f, k);
  } else if (k <= 8) {
    base = detail::pow_iterative(f, k);
  } else {
    base = detail::pow_multinomial(f, k);
  }
  return ps == 1 ? base : scale_exponents(base, ps);
}

inline std::set<std::size_t> variable_support(const Polynomial& f) {
  std::set<std::size_t> s;
  for (std::size_t i = 0; i < f.nterms(); ++i) {
    auto e = f.exps_view(i);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] > 0) s.insert(v);
  }
  return s;
}

// Reinterprets f in a context that contains (by name) every variable f uses.
// The term order may change, so rows are rebuilt and re-sorted.
inline Polynomial in_context(const Polynomial& f, const VarContext& target) {
  std::vector<std::size_t> map(f.var_count());
  for (std::size_t v = 0; v < f.var_count(); ++v) {
    map[v] = target.index_of(f.context().name(v));
  }
  std::vector<std::pair<Exponents, std::uint64_t>> terms;
  terms.reserve(f.nterms());
  for (std::size_t i = 0; i < f.nterms(); ++i) {
    Exponents e(target.size(), 0);
    auto src = f.exps_view(i);
    for (std::size_t v = 0; v < f.var_count(); ++v) {
      if (src[v] == 0) continue;
      if (map[v] == VarContext::npos)
        throw domain_error("variable " + f.context().name(v) + " missing from target context");
      e[map[v]] = src[v];
    }
    terms.emplace_back(std::move(e), f.coeff(i));
  }
  return Polynomial::from_terms(f.prime(), target, std::move(terms));
}

// Context holding only the variables f actually uses, in original order.
inline Polynomial restrict_to_support(const Polynomial& f) {
  auto s = variable_support(f);
  std::vector<std::string> names;
  for (std::size_t v = 0; v < f.var_count(); ++v)
    if (s.count(v)) names.push_back(f.context().name(v));
  return in_context(f, VarContext(std::move(names)));
}

// Splits f into two summands with disjoint variable supports when the
// term/variable incidence graph is disconnected: the block containing the
// lowest-indexed variable versus everything else.
inline std::optional<std::pair<Polynomial, Polynomial>> ts_split(const Polynomial& f) {
  if (f.is_zero()) throw domain_error("ts_split: zero polynomial");
  const std::size_t nv = f.var_count();
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < f.nterms(); ++i) {
    auto e = f.exps_view(i);
    std::size_t first = nv;
    for (std::size_t v = 0; v < nv; ++v) {
      if (e[v] <= 0) continue;
      if (first == nv) first = v;
      else parent[find(v)] = find(first);
    }
  }
  std::set<std::size_t> support = variable_support(f);
  if (support.empty()) return std::nullopt;
  std::set<std::size_t> roots;
  for (auto v : support) roots.insert(find(v));
  if (roots.size() < 2) return std::nullopt;
  std::size_t head = find(*support.begin());
  std::vector<std::pair<Exponents, std::uint64_t>> t1, t2;
  for (std::size_t i = 0; i < f.nterms(); ++i) {
    auto e = f.exps_view(i);
    bool in_head = false;
    for (std::size_t v = 0; v < nv; ++v)
      if (e[v] > 0 && find(v) == head) in_head = true;
    auto& dst = in_head ? t1 : t2;
    dst.emplace_back(Exponents(e.begin(), e.end()), f.coeff(i));
  }
  return std::make_pair(Polynomial::from_terms(f.prime(), f.context(), std::move(t1)),
                        Polynomial::from_terms(f.prime(), f.context(), std::move(t2)));
}

inline std::string format(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.nterms(); ++i) {
    if (i) out += " + ";
    auto e = f.exps_view(i);
    bool has_var = std::any_of(e.begin(), e.end(), [](std::int64_t x) { return x > 0; });
    bool wrote = false;
    if (f.coeff(i) != 1 || !has_var) {
      out += std::to_string(f.coeff(i));
      wrote = true;
    }
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (wrote) out += "*";
      out += f.context().name(v);
      if (e[v] != 1) out += "^" + std::to_string(e[v]);
      wrote = true;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser. Grammar (whitespace insignificant):
//   expr   := term (('+'|'-') term)*
//   term   := coeff ('*'? factor) ('*' factor)* | coeff | factor ('*' factor)*
//   factor := ident ('^' nat)?
// '*' is optional between the coefficient and the first variable.
// ---------------------------------------------------------------------------
namespace detail {

struct PolyParser {
  const std::string& text;
  std::size_t pos = 0;
  const std::optional<VarContext>& fixed_ctx;
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;

  PolyParser(const std::string& t, const std::optional<VarContext>& c) : text(t), fixed_ctx(c) {
    if (fixed_ctx) {
      names = fixed_ctx->names();
      for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = i;
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error("syntax error at position " + std::to_string(pos) + ": " + msg);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  BigInt parse_nat() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return BigInt(text.substr(start, pos - start));
  }

  std::size_t parse_var() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= text.size() ||
        !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      fail("expected a variable name");
    ++pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    std::string name = text.substr(start, pos - start);
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    if (fixed_ctx) {
      pos = start;
      fail("unknown variable " + name);
    }
    names.push_back(name);
    index[name] = names.size() - 1;
    return names.size() - 1;
  }

  // factor := ident ('^' nat)?
  std::pair<std::size_t, std::int64_t> parse_factor() {
    std::size_t v = parse_var();
    std::int64_t e = 1;
    if (peek() == '^') {
      ++pos;
      BigInt n = parse_nat();
      if (n > (BigInt(1) << 62)) fail("exponent too large");
      e = static_cast<std::int64_t>(n);
    }
    return {v, e};
  }

  struct RawTerm {
    std::map<std::size_t, std::int64_t> exps;
    BigInt coeff = 1;
  };

  RawTerm parse_term() {
    RawTerm t;
    bool saw_factor = false;
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.coeff = parse_nat();
      // optional '*' (or juxtaposed variable) after the coefficient
      if (peek() == '*') {
        ++pos;
        auto [v, e] = parse_factor();
        t.exps[v] += e;
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        auto [v, e] = parse_factor();
        t.exps[v] += e;
        saw_factor = true;
      }
    } else {
      auto [v, e] = parse_factor();
      t.exps[v] += e;
      saw_factor = true;
    }
    while (saw_factor && peek() == '*') {
      ++pos;
      auto [v, e] = parse_factor();
      t.exps[v] += e;
    }
    return t;
  }

  std::vector<std::pair<RawTerm, bool>> parse_expr() {
    std::vector<std::pair<RawTerm, bool>> terms;
    terms.emplace_back(parse_term(), false);
    while (true) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos;
        terms.emplace_back(parse_term(), c == '-');
      } else {
        break;
      }
    }
    skip_ws();
    if (pos != text.size()) fail("unexpected trailing input");
    return terms;
  }
};

} // namespace detail

inline Polynomial parse_polynomial(const std::string& text, std::uint32_t p,
                                   const std::optional<VarContext>& ctx = std::nullopt) {
  if (!is_prime(p)) throw domain_error("parse_polynomial: p must be prime");
  detail::PolyParser parser(text, ctx);
  auto raw = parser.parse_expr();
  VarContext result_ctx = ctx ? *ctx : VarContext(parser.names);
  std::vector<std::pair<Exponents, std::uint64_t>> terms;
  for (auto& [t, negative] : raw) {
    BigInt c = t.coeff % p;
    if (negative) c = (p - c) % p;
    Exponents e(result_ctx.size(), 0);
    for (auto& [v, exp] : t.exps) e[v] = exp;
    terms.emplace_back(std::move(e), static_cast<std::uint64_t>(c));
  }
  return Polynomial::from_terms(p, result_ctx, std::move(terms));
}

} // namespace fptlab

#endif
