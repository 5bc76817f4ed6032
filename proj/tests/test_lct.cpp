#include <gtest/gtest.h>

#include "fptlab/lct.hpp"
#include "oracles.hpp"

using namespace fptlab;

namespace {

Rational Q(long long n, long long d) { return Rational(n, d); }

Expr family_13_16() {
  // (x^4 + y^4) + (binomial with imported threshold 3/16) + v^2 u^3 t^8
  return Expr::sum(Expr::diagonal({4, 4}),
                   Expr::sum(Expr::imported("g2"), Expr::monomial({2, 3, 8})));
}

ImportTable imports_13_16() {
  ImportTable t;
  t["g2"] = ImportSpec{Q(3, 16), Congruence{1, 32}};
  return t;
}

Expr family_9_154() {
  return Expr::power(Expr::sum(Expr::monomial({3, 7}), Expr::monomial({2, 1, 6, 11})), 4);
}

TEST(Lct, SpecValues) {
  EXPECT_EQ(lct(family_9_154()), Q(9, 154));
  EXPECT_EQ(lct(family_13_16(), imports_13_16()), Q(13, 16));
  EXPECT_EQ(lct(Expr::monomial({1})), Rational(1));
  // diagonal lct caps at 1
  EXPECT_EQ(lct(Expr::diagonal({2, 2, 2})), Rational(1));
  EXPECT_EQ(lct(Expr::product(Expr::diagonal({2, 3}), Expr::monomial({4}))), Q(1, 4));
  EXPECT_THROW(lct(Expr::imported("missing")), domain_error);
}

TEST(FptOfExpr, SpecValues) {
  EXPECT_EQ(fpt_of_expr(family_13_16(), 97, imports_13_16()), Q(13, 16));
  EXPECT_EQ(fpt_of_expr(Expr::diagonal({2, 3}), 5), Q(4, 5));
  EXPECT_NE(fpt_of_expr(Expr::diagonal({2, 3}), 5), lct(Expr::diagonal({2, 3})));
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    EXPECT_EQ(fpt_of_expr(Expr::monomial({2, 3, 8}), p), Q(1, 8));
  }
  // import not claimed off its congruence class
  EXPECT_FALSE(fpt_of_expr(Expr::imported("g2"), 5, imports_13_16()).has_value());
}

TEST(FptOfExpr, InapplicableFoldPropagates) {
  // [2,2,2] at p=3: the first fold reaches 1, the second violates <= 1
  EXPECT_FALSE(fpt_of_expr(Expr::diagonal({2, 2, 2}), 3).has_value());
  EXPECT_FALSE(fpt_of_expr(Expr::sum(Expr::diagonal({2, 2}), Expr::monomial({2})), 3).has_value());
}

TEST(Sieve, SmallPrimes) {
  EXPECT_EQ(sieve_primes(20),
            (std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19}));
  EXPECT_TRUE(sieve_primes(1).empty());
}

TEST(MtwScan, DiagonalCuspFilter1Mod6) {
  ScanResult r = mtw_scan(Expr::diagonal({2, 3}), {}, 100, {Congruence{1, 6}});
  EXPECT_EQ(r.lct, Q(5, 6));
  std::vector<std::uint32_t> matched;
  for (const auto& rep : r.reports) {
    ASSERT_TRUE(rep.fpt.has_value());
    if (rep.match) matched.push_back(rep.prime);
  }
  EXPECT_EQ(matched,
            (std::vector<std::uint32_t>{7, 13, 19, 31, 37, 43, 61, 67, 73, 79, 97}));
  EXPECT_EQ(r.matches, 11);
}

TEST(MtwScan, Family1316Matches97And193) {
  ScanResult r = mtw_scan(family_13_16(), imports_13_16(), 200, {Congruence{1, 32}});
  ASSERT_EQ(r.reports.size(), 2u);
  EXPECT_EQ(r.reports[0].prime, 97u);
  EXPECT_EQ(r.reports[1].prime, 193u);
  for (const auto& rep : r.reports) {
    ASSERT_TRUE(rep.fpt.has_value());
    EXPECT_EQ(*rep.fpt, Q(13, 16));
    EXPECT_TRUE(rep.match);
  }
}

TEST(MtwScan, MonomialMatchesEverywhere) {
  ScanResult r = mtw_scan(Expr::monomial({2, 3, 8}), {}, 50);
  EXPECT_EQ(r.reports.size(), sieve_primes(50).size());
  for (const auto& rep : r.reports) {
    EXPECT_TRUE(rep.match);
    EXPECT_EQ(*rep.fpt, Q(1, 8));
  }
}

TEST(MtwScan, SandwichHoldsOnScans) {
  // fpt <= lct for every applicable prime; violation would throw.
  for (auto expr : {Expr::diagonal({2, 3}), Expr::diagonal({3, 4, 5}),
                    Expr::power(Expr::diagonal({2, 5}), 3),
                    Expr::product(Expr::diagonal({2, 3}), Expr::diagonal({3, 3}))}) {
    ScanResult r = mtw_scan(expr, {}, 60);
    for (const auto& rep : r.reports)
      if (rep.fpt) EXPECT_LE(*rep.fpt, r.lct);
  }
}

TEST(MtwScan, CongruenceSufficiencyForDiagonals) {
  // If (p-1)/d_i is integral for all i and the lct is at most 1, the
  // single-digit expansions cannot carry, so the scan must report a match.
  std::vector<std::vector<std::uint64_t>> diags = {{2, 3}, {2, 4}, {3, 4, 5}, {2, 3, 7}};
  for (const auto& degs : diags) {
    Rational sum = 0;
    std::uint64_t l = 1;
    for (auto d : degs) {
      sum += Rational(1, d);
      l = std::lcm(l, d);
    }
    if (sum > 1) continue;
    ScanResult r = mtw_scan(Expr::diagonal(degs), {}, 400, {Congruence{1, l}});
    ASSERT_FALSE(r.reports.empty());
    for (const auto& rep : r.reports) {
      ASSERT_TRUE(rep.fpt.has_value());
      EXPECT_TRUE(rep.match) << "p=" << rep.prime;
      // carry profile confirms: digits never carry at these primes
      Rational acc(1, degs[0]);
      for (std::size_t i = 1; i < degs.size(); ++i) {
        CarryProfile cp = carry_profile(acc, Rational(1, degs[i]), rep.prime);
        EXPECT_FALSE(cp.L.has_value());
        acc += Rational(1, degs[i]);
      }
    }
  }
}

TEST(MtwScan, TrendBandsReported) {
  ScanResult r = mtw_scan(Expr::diagonal({2, 3}), {}, 128);
  ASSERT_FALSE(r.bands.empty());
  int with_data = 0;
  for (const auto& b : r.bands)
    if (b.max_deviation) ++with_data;
  EXPECT_GE(with_data, 4);
}

TEST(ParseCongruence, Forms) {
  Congruence a = parse_congruence("1 mod 32");
  EXPECT_EQ(a.residue, 1u);
  EXPECT_EQ(a.modulus, 32u);
  Congruence b = parse_congruence("2:77");
  EXPECT_EQ(b.residue, 2u);
  EXPECT_EQ(b.modulus, 77u);
  EXPECT_THROW(parse_congruence("banana"), parse_error);
}

} // namespace
