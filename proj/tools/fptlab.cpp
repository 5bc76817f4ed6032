// fptlab command line: exact F-thresholds, nu-invariants, Frobenius roots,
// test ideals, and lct/fpt coincidence scans over prime fields.
//
// Exit codes: 0 success, 2 domain error (theorem inapplicable, precondition
// or verification failure), 3 input/parse error.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fptlab/fptlab.hpp"
#include "fptlab/json_io.hpp"

using namespace fptlab;
using nlohmann::json;

namespace {

struct Options {
  bool json_out = false;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::uint32_t emax = 6;
};

Options g_opts;

void emit(const json& payload, const std::string& human) {
  if (g_opts.json_out)
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << human << "\n";
}

std::string ext_text(const ExtIndex& e) { return e ? std::to_string(*e) : "inf"; }

std::vector<Polynomial> display_generators(const Ideal& i) {
  if (i.is_zero()) return {};
  return prune_redundant_generators(i.groebner());
}

std::string ideal_text(const Ideal& i) {
  std::string out = "(";
  auto gens = display_generators(i);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k) out += ", ";
    out += format(gens[k]);
  }
  return out + ")";
}

json ideal_display_json(const Ideal& i) {
  json gens = json::array();
  for (const auto& g : display_generators(i)) gens.push_back(polynomial_json(g));
  json out;
  out["vars"] = i.context().names();
  out["generators"] = gens;
  out["pretty"] = ideal_text(i);
  return out;
}

std::vector<std::string> split_generators(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ';')) {
    if (cur.find_first_not_of(" \t") != std::string::npos) out.push_back(cur);
  }
  if (out.empty()) throw parse_error("empty generator list");
  return out;
}

// Parses a polynomial and ideal generators in one shared variable context
// (inferred across all of them, first appearance order).
std::pair<Polynomial, Ideal> parse_poly_and_ideal(const std::string& poly_text,
                                                  const std::string& ideal_text,
                                                  std::uint32_t p) {
  std::vector<std::string> gen_texts = split_generators(ideal_text);
  std::vector<std::string> names = parse_polynomial(poly_text, p).context().names();
  for (const auto& t : gen_texts) {
    Polynomial probe = parse_polynomial(t, p);
    for (const auto& n : probe.context().names())
      if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  }
  VarContext ctx(names);
  Polynomial f = parse_polynomial(poly_text, p, ctx);
  std::vector<Polynomial> gens;
  for (const auto& t : gen_texts) gens.push_back(parse_polynomial(t, p, ctx));
  return {f, Ideal(std::move(gens))};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw parse_error("malformed JSON in " + path + ": " + e.what());
  }
}

// Component threshold claim a for g: nu truncation identity at e = 1..depth.
void verify_component_claim(const Polynomial& g, const Rational& a, std::uint32_t depth,
                            const std::string& label) {
  const std::uint32_t p = g.prime();
  Polynomial gr = restrict_to_support(g);
  Ideal m = maximal_ideal(gr.context(), p);
  DigitStream s = expand(a, p);
  for (std::uint32_t e = 1; e <= depth; ++e) {
    BigInt pe = pow_bigint(BigInt(p), e);
    BigInt want = floor_scaled(truncate_expansion(s, e), pe);
    std::uint64_t got = nu(gr, m, e).nu;
    if (BigInt(got) != want)
      throw domain_error(label + ": threshold claim " + rational_to_string(a) +
                         " fails nu check at e=" + std::to_string(e) + " (nu=" +
                         std::to_string(got) + ", expected " + want.str() + ")");
  }
}

// ---------------------------------------------------------------------------
// verify-corpus
// ---------------------------------------------------------------------------

Rational resolve_threshold(const json& spec, const Polynomial& g, std::uint32_t p,
                           const std::string& label) {
  if (spec.is_string() && spec.get<std::string>() == "auto") {
    auto v = component_threshold(restrict_to_support(g), p);
    if (!v) throw parse_error(label + ": no closed form; supply an explicit threshold");
    return v->value;
  }
  return rational_from_json(spec);
}

struct CorpusStats {
  int cases = 0;
  int failures = 0;
  std::map<std::string, int> branch_counts;
};

CorpusStats run_corpus(const json& corpus, std::ostream& log) {
  CorpusStats stats;
  if (!corpus.contains("cases") || corpus.at("cases").empty()) {
    log << "warning: corpus is empty; nothing verified\n";
    return stats;
  }
  for (const auto& c : corpus.at("cases")) {
    ++stats.cases;
    std::string name = c.value("name", "case" + std::to_string(stats.cases));
    try {
      std::uint32_t p = c.at("prime").get<std::uint32_t>();
      Polynomial g1 = parse_polynomial(c.at("g1").get<std::string>(), p);
      Polynomial g2 = parse_polynomial(c.at("g2").get<std::string>(), p);
      Rational a1 = resolve_threshold(c.at("a1"), g1, p, name + "/a1");
      Rational a2 = resolve_threshold(c.at("a2"), g2, p, name + "/a2");
      std::vector<std::uint32_t> nu_e = c.value("nu_e", std::vector<std::uint32_t>{1, 2});

      for (std::uint32_t e : nu_e) {
        verify_component_claim(g1, a1, e, name + "/g1");
        verify_component_claim(g2, a2, e, name + "/g2");
      }

      FptValue cval = ts_fthreshold(a1, a2, p);
      if (c.contains("expect_fpt")) {
        Rational want = rational_from_json(c.at("expect_fpt"));
        if (cval.value != want)
          throw domain_error(name + ": fpt " + rational_to_string(cval.value) +
                             " != expected " + rational_to_string(want));
      }

      VarContext joint = merge_contexts(g1.context(), g2.context());
      Polynomial f = add(in_context(g1, joint), in_context(g2, joint));
      Ideal m = maximal_ideal(joint, p);
      DigitStream cs = expand(cval.value, p);
      for (std::uint32_t e : nu_e) {
        BigInt pe = pow_bigint(BigInt(p), e);
        BigInt want = floor_scaled(truncate_expansion(cs, e), pe);
        std::uint64_t got = nu(f, m, e).nu;
        if (BigInt(got) != want)
          throw domain_error(name + ": joint nu mismatch at e=" + std::to_string(e) + " (nu=" +
                             std::to_string(got) + ", formula truncation " + want.str() + ")");
      }

      std::uint32_t ti_emax = c.value("testideal_emax", 0u);
      if (ti_emax > 0) {
        TestIdealResult ts = ts_test_ideal(g1, g2, a1, a2, g_opts.emax);
        stats.branch_counts[case_tag_name(*ts.case_tag)]++;
        TestIdealResult def = test_ideal(f, cval.value, ti_emax);
        if (!ideal_equal(ts.ideal, def.ideal))
          throw domain_error(name + ": formula tau " + ideal_text(ts.ideal) +
                             " != definitional tau " + ideal_text(def.ideal));
        if (c.contains("expect_case")) {
          std::string want = c.at("expect_case").get<std::string>();
          if (want != case_tag_name(*ts.case_tag))
            throw domain_error(name + ": case " + case_tag_name(*ts.case_tag) +
                               " != expected " + want);
        }
        if (c.contains("expect_tau")) {
          std::vector<Polynomial> gens;
          for (const auto& t : c.at("expect_tau"))
            gens.push_back(parse_polynomial(t.get<std::string>(), p, joint));
          if (!ideal_equal(ts.ideal, Ideal(gens)))
            throw domain_error(name + ": tau " + ideal_text(ts.ideal) + " != expected ideal");
        }
      }
      log << "[ ok ] " << name << "\n";
    } catch (const std::exception& e) {
      ++stats.failures;
      log << "[FAIL] " << name << ": " << e.what() << "\n";
    }
  }
  return stats;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact F-thresholds and test ideals of Thom-Sebastiani polynomials over F_p"};
  app.require_subcommand(0, 1);
  app.add_flag("--json", g_opts.json_out, "machine-readable JSON output");
  app.add_option("--threads", g_opts.threads, "worker threads (scans evaluate sequentially)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g_opts.seed, "seed for randomized property suites (no effect on results)");
  if (const char* env = std::getenv("FPTLAB_EMAX")) {
    g_opts.emax = static_cast<std::uint32_t>(std::strtoul(env, nullptr, 10));
    if (g_opts.emax < 2) g_opts.emax = 2;
  }

  std::function<void()> action;

  // ---- nu ----
  auto* nu_cmd = app.add_subcommand("nu", "nu-invariant nu_f^J(p^e)");
  {
    auto prime = std::make_shared<std::uint32_t>(0);
    auto e = std::make_shared<std::uint32_t>(1);
    auto poly = std::make_shared<std::string>();
    auto ideal = std::make_shared<std::string>();
    nu_cmd->add_option("--prime", *prime, "prime p")->required();
    nu_cmd->add_option("--e", *e, "Frobenius exponent e")->required();
    nu_cmd->add_option("--poly", *poly, "polynomial f")->required();
    nu_cmd->add_option("--ideal", *ideal, "ideal generators, ';' separated")->required();
    nu_cmd->callback([=] {
      auto [f, j] = parse_poly_and_ideal(*poly, *ideal, *prime);
      NuRecord r = nu(f, j, *e);
      emit(nu_record_json(r), "nu = " + std::to_string(r.nu) + "  (p = " + std::to_string(*prime) +
                                  ", e = " + std::to_string(*e) + ", truncation " +
                                  rational_to_string(r.truncation) + ")");
    });
  }

  // ---- fpt ----
  auto* fpt_cmd = app.add_subcommand("fpt", "closed-form F-pure thresholds");
  fpt_cmd->require_subcommand(1);
  {
    auto* ts = fpt_cmd->add_subcommand("ts", "Thom-Sebastiani sum from component thresholds");
    auto prime = std::make_shared<std::uint32_t>(0);
    auto a1 = std::make_shared<std::string>();
    auto a2 = std::make_shared<std::string>();
    auto verify = std::make_shared<std::vector<std::string>>();
    auto verify_e = std::make_shared<std::uint32_t>(2);
    ts->add_option("--prime", *prime, "prime p")->required();
    ts->add_option("--a1", *a1, "threshold of g1 as num/den")->required();
    ts->add_option("--a2", *a2, "threshold of g2 as num/den")->required();
    ts->add_option("--verify", *verify, "two polynomial JSON files to check the claims against")
        ->expected(2);
    ts->add_option("--verify-e", *verify_e, "nu-check depth for --verify (default 2)");
    ts->callback([=] {
      Rational r1 = parse_rational(*a1);
      Rational r2 = parse_rational(*a2);
      if (!verify->empty()) {
        Polynomial g1 = polynomial_from_json(load_json_file((*verify)[0]));
        Polynomial g2 = polynomial_from_json(load_json_file((*verify)[1]));
        if (g1.prime() != *prime || g2.prime() != *prime)
          throw domain_error("--verify polynomials use a different prime");
        verify_component_claim(g1, r1, *verify_e, "g1");
        verify_component_claim(g2, r2, *verify_e, "g2");
      }
      FptValue v = ts_fthreshold(r1, r2, *prime);
      emit(fpt_value_json(v), "fpt = " + rational_to_string(v.value) + "  (" +
                                  fpt_class_name(v.classification) + ", L = " +
                                  ext_text(v.profile->L) + ", d = " + ext_text(v.profile->d) + ")");
    });
  }
  {
    auto* mono = fpt_cmd->add_subcommand("monomial", "monomial threshold 1/max exponent");
    auto exps = std::make_shared<std::vector<std::uint64_t>>();
    mono->add_option("--exps", *exps, "exponents")->required()->delimiter(',');
    mono->callback([=] {
      Rational v = fpt_monomial(*exps);
      emit(json{{"value", rational_json(v)}}, "fpt = " + rational_to_string(v));
    });
  }
  {
    auto* diag = fpt_cmd->add_subcommand("diagonal", "iterated Thom-Sebastiani fold of a diagonal");
    auto degs = std::make_shared<std::vector<std::uint64_t>>();
    auto prime = std::make_shared<std::uint32_t>(0);
    diag->add_option("--degs", *degs, "degrees")->required()->delimiter(',');
    diag->add_option("--prime", *prime, "prime p")->required();
    diag->callback([=] {
      auto v = fpt_diagonal_fold(*degs, *prime);
      if (!v) {
        emit(json{{"value", nullptr}, {"inapplicable", true}},
             "inapplicable: some fold violates a1+a2 <= 1");
        return;
      }
      json out = fpt_value_json(*v);
      out["inapplicable"] = false;
      emit(out, "fpt = " + rational_to_string(v->value) + "  (" +
                    fpt_class_name(v->classification) + ")");
    });
  }

  // ---- frobenius-root ----
  auto* root_cmd = app.add_subcommand("frobenius-root", "I^[1/p^e] of an ideal");
  {
    auto prime = std::make_shared<std::uint32_t>(0);
    auto e = std::make_shared<std::uint32_t>(1);
    auto ideal = std::make_shared<std::string>();
    root_cmd->add_option("--prime", *prime, "prime p")->required();
    root_cmd->add_option("--e", *e, "root exponent e")->required();
    root_cmd->add_option("--ideal", *ideal, "ideal generators, ';' separated")->required();
    root_cmd->callback([=] {
      auto gen_texts = split_generators(*ideal);
      std::vector<std::string> names;
      for (const auto& t : gen_texts) {
        Polynomial probe = parse_polynomial(t, *prime);
        for (const auto& n : probe.context().names())
          if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
      }
      VarContext ctx(names);
      std::vector<Polynomial> gens;
      for (const auto& t : gen_texts) gens.push_back(parse_polynomial(t, *prime, ctx));
      Ideal r = frobenius_root(Ideal(std::move(gens)), *e);
      emit(ideal_display_json(r), "root = " + ideal_text(r));
    });
  }

  // ---- test-ideal ----
  auto* ti_cmd = app.add_subcommand("test-ideal", "test ideals tau(f^c)");
  ti_cmd->require_subcommand(1);
  {
    auto* ts = ti_cmd->add_subcommand("ts", "Thom-Sebastiani test ideal at the F-pure threshold");
    auto prime = std::make_shared<std::uint32_t>(0);
    auto g1t = std::make_shared<std::string>();
    auto g2t = std::make_shared<std::string>();
    auto a1 = std::make_shared<std::string>();
    auto a2 = std::make_shared<std::string>();
    auto bfc = std::make_shared<std::uint32_t>(0);
    ts->add_option("--prime", *prime, "prime p")->required();
    ts->add_option("--g1", *g1t, "first summand")->required();
    ts->add_option("--g2", *g2t, "second summand")->required();
    ts->add_option("--a1", *a1, "threshold of g1")->required();
    ts->add_option("--a2", *a2, "threshold of g2")->required();
    ts->add_option("--brute-force-check", *bfc,
                   "also run the definitional stabilization to this window and compare");
    ts->callback([=] {
      Polynomial g1 = parse_polynomial(*g1t, *prime);
      Polynomial g2 = parse_polynomial(*g2t, *prime);
      Rational r1 = parse_rational(*a1);
      Rational r2 = parse_rational(*a2);
      TestIdealResult r = ts_test_ideal(g1, g2, r1, r2, g_opts.emax);
      std::string checked = "not run";
      if (*bfc > 0) {
        VarContext joint = r.ideal.context();
        Polynomial f = add(in_context(g1, joint), in_context(g2, joint));
        TestIdealResult def = test_ideal(f, r.exponent, *bfc);
        if (!ideal_equal(r.ideal, def.ideal))
          throw domain_error("brute-force check failed: formula " + ideal_text(r.ideal) +
                             " != definitional " + ideal_text(def.ideal));
        checked = "passed";
      }
      FptValue c = ts_fthreshold(r1, r2, *prime);
      json out = ideal_display_json(r.ideal);
      out["case"] = case_tag_name(*r.case_tag);
      out["fpt"] = rational_json(r.exponent);
      out["L"] = ext_index_json(c.profile->L);
      out["d"] = ext_index_json(c.profile->d);
      out["stabilized_at_e"] = r.stabilized_at_e;
      out["brute_force_check"] = checked;
      emit(out, "tau = " + ideal_text(r.ideal) + "  case " + case_tag_name(*r.case_tag) +
                    ", fpt = " + rational_to_string(r.exponent) + ", L = " +
                    ext_text(c.profile->L) + ", d = " + ext_text(c.profile->d) +
                    ", brute-force check " + checked);
    });
  }
  {
    auto* def = ti_cmd->add_subcommand("def", "definitional test ideal tau(f^c)");
    auto prime = std::make_shared<std::uint32_t>(0);
    auto poly = std::make_shared<std::string>();
    auto cexp = std::make_shared<std::string>();
    auto emax = std::make_shared<std::uint32_t>(0);
    def->add_option("--prime", *prime, "prime p")->required();
    def->add_option("--poly", *poly, "polynomial f")->required();
    def->add_option("--c", *cexp, "exponent c as num/den")->required();
    def->add_option("--emax", *emax, "stabilization window (default FPTLAB_EMAX or 6)");
    def->callback([=] {
      Polynomial f = parse_polynomial(*poly, *prime);
      std::uint32_t window = *emax > 0 ? *emax : g_opts.emax;
      TestIdealResult r = test_ideal(f, parse_rational(*cexp), window);
      json out = ideal_display_json(r.ideal);
      out["exponent"] = rational_json(r.exponent);
      out["stabilized_at_e"] = r.stabilized_at_e;
      emit(out, "tau = " + ideal_text(r.ideal) + "  (stabilized at e = " +
                    std::to_string(r.stabilized_at_e) + ")");
    });
  }

  // ---- mtw-scan ----
  auto* scan_cmd = app.add_subcommand("mtw-scan", "lct vs fpt coincidence scan over primes");
  {
    auto expr_file = std::make_shared<std::string>();
    auto bound = std::make_shared<std::uint32_t>(0);
    auto filters = std::make_shared<std::vector<std::string>>();
    scan_cmd->add_option("--expr", *expr_file, "composition expression JSON file")->required();
    scan_cmd->add_option("--bound", *bound, "scan primes up to this bound")->required();
    scan_cmd->add_option("--filter", *filters, "congruence filter r:m or 'r mod m' (repeatable)");
    scan_cmd->callback([=] {
      ImportTable imports;
      Expr expr = expr_from_json(load_json_file(*expr_file), imports);
      std::vector<Congruence> cs;
      for (const auto& f : *filters) cs.push_back(parse_congruence(f));
      ScanResult r = mtw_scan(expr, imports, *bound, cs);
      std::ostringstream human;
      human << "lct = " << rational_to_string(r.lct) << "\n";
      for (const auto& rep : r.reports) {
        human << "p = " << rep.prime << "  fpt = "
              << (rep.fpt ? rational_to_string(*rep.fpt) : std::string("inapplicable"))
              << (rep.match ? "  MATCH" : "") << "\n";
      }
      human << r.matches << " matches among " << r.reports.size() << " scanned primes";
      emit(scan_result_json(r), human.str());
    });
  }

  // ---- verify-corpus ----
  auto* vc_cmd = app.add_subcommand("verify-corpus", "oracle-equivalence suite over a corpus file");
  {
    auto corpus_file = std::make_shared<std::string>();
    vc_cmd->add_option("--corpus", *corpus_file, "corpus JSON file")->required();
    vc_cmd->callback([=] {
      json corpus = load_json_file(*corpus_file);
      std::ostringstream log;
      CorpusStats stats = run_corpus(corpus, log);
      if (g_opts.json_out) {
        json out{{"cases", stats.cases},
                 {"failures", stats.failures},
                 {"branches", stats.branch_counts},
                 {"log", log.str()}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << log.str();
        std::cout << stats.cases << " cases, " << stats.failures << " failures\n";
      }
      if (stats.failures > 0) throw domain_error("corpus verification failed");
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  } catch (const parse_error& e) {
    if (g_opts.json_out)
      std::cout << json{{"error", {{"kind", "parse"}, {"message", e.what()}}}}.dump(2) << "\n";
    else
      std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const domain_error& e) {
    if (g_opts.json_out)
      std::cout << json{{"error", {{"kind", "domain"}, {"message", e.what()}}}}.dump(2) << "\n";
    else
      std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
