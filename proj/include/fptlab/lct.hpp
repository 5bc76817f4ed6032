#ifndef FPTLAB_LCT_HPP
#define FPTLAB_LCT_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fptlab/thresholds.hpp"

namespace fptlab {

// Congruence condition p = residue (mod modulus).
struct Congruence {
  std::uint64_t residue = 0;
  std::uint64_t modulus = 1;

  bool satisfied_by(std::uint64_t p) const { return p % modulus == residue % modulus; }
  std::string text() const {
    return std::to_string(residue) + " mod " + std::to_string(modulus);
  }
};

// Accepts "r mod m" or "r:m".
inline Congruence parse_congruence(const std::string& s) {
  std::size_t sep = s.find(" mod ");
  std::size_t skip = 5;
  if (sep == std::string::npos) {
    sep = s.find(':');
    skip = 1;
  }
  if (sep == std::string::npos) throw parse_error("malformed congruence: " + s);
  try {
    Congruence c;
    c.residue = std::stoull(s.substr(0, sep));
    c.modulus = std::stoull(s.substr(sep + skip));
    if (c.modulus == 0) throw parse_error("congruence with modulus 0");
    return c;
  } catch (const std::logic_error&) {
    throw parse_error("malformed congruence: " + s);
  }
}

// An imported component threshold (e.g. a binomial with no closed form
// here): the exact value plus the congruence class of primes on which the
// value is claimed, recorded for provenance.
struct ImportSpec {
  Rational a;
  std::optional<Congruence> primes;
};

using ImportTable = std::map<std::string, ImportSpec>;

// Composition AST for polynomials whose lct and fpt are evaluated by
// structural rules: monomial and diagonal leaves, disjoint sums and
// products, powers, and imported leaves carrying supplied thresholds.
class Expr {
public:
  enum class Kind { Monomial, Diagonal, Sum, Product, Power, Import };

  static Expr monomial(std::vector<std::uint64_t> exps) {
    require_positive(exps, "monomial exponents");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Monomial;
    n->numbers = std::move(exps);
    return Expr(std::move(n));
  }
  static Expr diagonal(std::vector<std::uint64_t> degs) {
    require_positive(degs, "diagonal degrees");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Diagonal;
    n->numbers = std::move(degs);
    return Expr(std::move(n));
  }
  static Expr sum(Expr l, Expr r) { return binary(Kind::Sum, std::move(l), std::move(r)); }
  static Expr product(Expr l, Expr r) { return binary(Kind::Product, std::move(l), std::move(r)); }
  static Expr power(Expr inner, std::uint64_t n) {
    if (n < 1) throw domain_error("power exponent must be >= 1");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Power;
    node->n = n;
    node->left = inner.node_;
    return Expr(std::move(node));
  }
  static Expr imported(std::string id) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Import;
    n->id = std::move(id);
    return Expr(std::move(n));
  }

  Kind kind() const { return node_->kind; }
  const std::vector<std::uint64_t>& numbers() const { return node_->numbers; }
  std::uint64_t power_exponent() const { return node_->n; }
  const std::string& import_id() const { return node_->id; }
  Expr left() const { return Expr(node_->left); }
  Expr right() const { return Expr(node_->right); }

private:
  struct Node {
    Kind kind = Kind::Monomial;
    std::vector<std::uint64_t> numbers;
    std::uint64_t n = 0;
    std::string id;
    std::shared_ptr<const Node> left, right;
  };

  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static void require_positive(const std::vector<std::uint64_t>& v, const char* what) {
    if (v.empty()) throw domain_error(std::string(what) + ": empty list");
    for (auto x : v)
      if (x < 1) throw domain_error(std::string(what) + ": entries must be >= 1");
  }
  static Expr binary(Kind k, Expr l, Expr r) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->left = l.node_;
    n->right = r.node_;
    return Expr(std::move(n));
  }

  std::shared_ptr<const Node> node_;
};

inline const ImportSpec& lookup_import(const ImportTable& imports, const std::string& id) {
  auto it = imports.find(id);
  if (it == imports.end()) throw domain_error("missing import: " + id);
  return it->second;
}

// Log canonical threshold at the origin by the composition rules:
// monomial 1/max, diagonal min(1, sum 1/d_i), disjoint sum min(1, l+r),
// power division, disjoint product min. Imported leaves use the supplied
// value.
inline Rational lct(const Expr& e, const ImportTable& imports = {}) {
  switch (e.kind()) {
    case Expr::Kind::Monomial:
      return fpt_monomial(e.numbers());
    case Expr::Kind::Diagonal: {
      Rational s = 0;
      for (auto d : e.numbers()) s += Rational(1, d);
      return std::min(s, Rational(1));
    }
    case Expr::Kind::Sum:
      return std::min(lct(e.left(), imports) + lct(e.right(), imports), Rational(1));
    case Expr::Kind::Product:
      return std::min(lct(e.left(), imports), lct(e.right(), imports));
    case Expr::Kind::Power:
      return lct(e.left(), imports) / e.power_exponent();
    case Expr::Kind::Import:
      return lookup_import(imports, e.import_id()).a;
  }
  throw std::logic_error("unreachable");
}

// F-pure threshold of the composition at prime p. nullopt means the
// Thom-Sebastiani hypothesis a1 + a2 <= 1 failed at some node, or an
// imported value is not claimed at this prime.
inline std::optional<Rational> fpt_of_expr(const Expr& e, std::uint32_t p,
                                           const ImportTable& imports = {}) {
  switch (e.kind()) {
    case Expr::Kind::Monomial:
      return fpt_monomial(e.numbers());
    case Expr::Kind::Diagonal: {
      auto v = fpt_diagonal_fold(e.numbers(), p);
      if (!v) return std::nullopt;
      return v->value;
    }
    case Expr::Kind::Sum: {
      auto l = fpt_of_expr(e.left(), p, imports);
      auto r = fpt_of_expr(e.right(), p, imports);
      if (!l || !r || *l + *r > 1) return std::nullopt;
      return ts_fthreshold(*l, *r, p).value;
    }
    case Expr::Kind::Product: {
      auto l = fpt_of_expr(e.left(), p, imports);
      auto r = fpt_of_expr(e.right(), p, imports);
      if (!l || !r) return std::nullopt;
      return fpt_disjoint_product(*l, *r);
    }
    case Expr::Kind::Power: {
      auto v = fpt_of_expr(e.left(), p, imports);
      if (!v) return std::nullopt;
      return *v / e.power_exponent();
    }
    case Expr::Kind::Import: {
      const ImportSpec& spec = lookup_import(imports, e.import_id());
      if (spec.primes && !spec.primes->satisfied_by(p)) return std::nullopt;
      return spec.a;
    }
  }
  throw std::logic_error("unreachable");
}

inline std::vector<std::uint32_t> sieve_primes(std::uint32_t bound) {
  std::vector<std::uint32_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint32_t n = 2; n <= bound; ++n) {
    if (composite[n]) continue;
    out.push_back(n);
    for (std::uint64_t m = static_cast<std::uint64_t>(n) * n; m <= bound; m += n)
      composite[static_cast<std::uint32_t>(m)] = true;
  }
  return out;
}

struct ScanReport {
  std::uint32_t prime = 0;
  Rational lct;
  std::optional<Rational> fpt; // nullopt: Thom-Sebastiani hypothesis or import inapplicable
  bool match = false;
  std::vector<std::string> congruence_notes;
};

// Max deviation lct - fpt over applicable primes in [lo, hi).
struct TrendBand {
  std::uint64_t lo = 0, hi = 0;
  std::optional<Rational> max_deviation;
  int applicable = 0;
};

struct ScanResult {
  Rational lct;
  std::vector<ScanReport> reports;
  std::vector<TrendBand> bands;
  bool deviation_non_increasing = true;
  int matches = 0;
};

// Evaluates lct once and fpt per scanned prime; reports are assembled in
// prime order. fpt <= lct is a hard invariant for applicable primes. The
// dyadic-band deviation trend is reported, not asserted: a finite scan can
// exhibit matches but never confirm the conjectured infinitude.
inline ScanResult mtw_scan(const Expr& expr, const ImportTable& imports, std::uint32_t bound,
                           const std::vector<Congruence>& filters = {}) {
  ScanResult result;
  result.lct = lct(expr, imports);
  for (std::uint32_t p : sieve_primes(bound)) {
    bool keep = true;
    for (const auto& f : filters)
      if (!f.satisfied_by(p)) keep = false;
    if (!keep) continue;
    ScanReport rep;
    rep.prime = p;
    rep.lct = result.lct;
    rep.fpt = fpt_of_expr(expr, p, imports);
    for (const auto& f : filters) rep.congruence_notes.push_back("p = " + f.text());
    for (const auto& [id, spec] : imports) {
      if (!spec.primes) continue;
      rep.congruence_notes.push_back("import " + id + (spec.primes->satisfied_by(p)
                                                           ? " valid (p = " + spec.primes->text() + ")"
                                                           : " not claimed at this prime"));
    }
    if (rep.fpt) {
      if (*rep.fpt > result.lct)
        throw std::logic_error("mtw_scan: fpt exceeds lct at p = " + std::to_string(p));
      rep.match = (*rep.fpt == result.lct);
      if (rep.match) ++result.matches;
    }
    result.reports.push_back(std::move(rep));
  }

  // dyadic bands [2^k, 2^{k+1})
  std::uint64_t lo = 2;
  while (lo <= bound) {
    TrendBand band;
    band.lo = lo;
    band.hi = lo * 2;
    for (const auto& rep : result.reports) {
      if (rep.prime < band.lo || rep.prime >= band.hi || !rep.fpt) continue;
      Rational dev = result.lct - *rep.fpt;
      ++band.applicable;
      if (!band.max_deviation || dev > *band.max_deviation) band.max_deviation = dev;
    }
    result.bands.push_back(band);
    lo *= 2;
  }
  std::optional<Rational> prev;
  for (const auto& band : result.bands) {
    if (!band.max_deviation) continue;
    if (prev && *band.max_deviation > *prev) result.deviation_non_increasing = false;
    prev = band.max_deviation;
  }
  return result;
}

} // namespace fptlab

#endif
