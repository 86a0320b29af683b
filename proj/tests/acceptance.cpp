// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "dgenv/analysis.hpp"
#include "dgenv/cli.hpp"
#include "dgenv/format.hpp"
#include "dgenv/parse.hpp"
#include "dgenv/presets.hpp"
#include "dgenv/verify.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace dgenv;

namespace {

struct Outcome {
  bool ok = true;
  std::string summary;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
};

EnvelopingAlgebra build(const Presentation& p, int bound) {
  return EnvelopingAlgebra::build(ValidatedPresentation::from(p), bound);
}

Word parse_word(const Signature& sig, const std::string& text) {
  const NCPolynomial p = parse_nc_polynomial(sig, text);
  return p.leading_word();
}

Outcome ordering() {
  Outcome o;
  const Signature sig({{"x1", 1}, {"x2", 1}, {"x3", 1}});
  const Word v = parse_word(sig, "x3*x2'*x1*x1");
  const Word u = parse_word(sig, "x2*x3*x3'*x3'*x1'");
  const Word w = parse_word(sig, "x2*x3'*x3*x2'*x1'");
  o.require(bidegree(v) == Bidegree{3, 1} && bidegree(u) == Bidegree{2, 3} && bidegree(w) == Bidegree{2, 3},
            "bidegrees of v, u, w");
  o.require(precedes(v, u) && precedes(u, w) && precedes(v, w), "v < u < w");
  o.require(!precedes(u, v) && !precedes(w, u), "asymmetry on v, u, w");

  Rng rng(7);
  const FreeAlgebra fa(sig);
  auto word = [&](int max_len) {
    Word x;
    const int len = std::uniform_int_distribution<int>(0, max_len)(rng);
    for (int k = 0; k < len; ++k) {
      const auto g = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
      x.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? Letter::x(g) : Letter::y(g));
    }
    return x;
  };
  std::size_t triples = 0, failures = 0;
  while (triples < 20000) {
    Word a = word(4), b = word(4), p = word(5), q = word(5);
    if (p == q) continue;
    if (precedes(q, p)) std::swap(p, q);
    ++triples;
    if (!precedes(p, q) || precedes(q, p) || !precedes(concat(a, p, b), concat(a, q, b))) ++failures;
  }
  o.require(failures == 0, std::to_string(failures) + " monomial-order violations");
  o.summary = "v < u < w as stated; " + std::to_string(triples) + " random triples, " + std::to_string(failures) +
              " violations";
  return o;
}

Outcome pbw_random() {
  Outcome o;
  std::size_t valid = 0, tried = 0, rows = 0, with_d = 0;
  for (std::uint64_t seed = 1; valid < 24 && seed < 2000; ++seed) {
    Rng rng(seed);
    const Presentation p = random_presentation(rng, 3);
    ++tried;
    // Abelian draws say nothing about the bracket relations.
    if (p.bracket_table().entries.empty() || !validate(p).ok()) continue;
    ++valid;
    if (std::any_of(p.differential_table().begin(), p.differential_table().end(),
                    [](const Polynomial& f) { return !f.is_zero(); }))
      ++with_d;
    const RuleSystem base = base_rules(p);
    const CompositionReport rep = base.compositions();
    o.require(rep.closed(), "base rules closed for seed " + std::to_string(seed));
    const EnvelopingAlgebra env = build(p, 12);
    o.require(env.completion().added.empty(), "completion adds nothing for seed " + std::to_string(seed));
    QuotientOracle oracle = QuotientOracle::enveloping(p);
    for (const auto& r : dimension_table(env, oracle, 12)) {
      ++rows;
      o.require(r.ok(), "degree " + std::to_string(r.degree) + " for seed " + std::to_string(seed) + ": oracle " +
                            std::to_string(r.oracle) + ", standard " + std::to_string(r.standard));
    }
  }
  o.require(valid >= 20, "at least 20 valid presentations");
  o.summary = std::to_string(valid) + " valid non-abelian presentations of " + std::to_string(tried) + " drawn (" +
              std::to_string(with_d) + " with a differential); " + std::to_string(rows) +
              " degree rows up to 12 match the oracle";
  return o;
}

Outcome identities() {
  Outcome o;
  std::vector<Presentation> pres = {builtin("poly2"), builtin("ex313")};
  for (std::uint64_t seed = 1; pres.size() < 5; ++seed) {
    Rng rng(1000 + seed);
    Presentation p = random_presentation(rng, 3);
    if (!p.bracket_table().entries.empty() && validate(p).ok()) pres.push_back(std::move(p));
  }
  SuiteOptions opt;
  opt.cases = 1000;
  opt.max_degree = 8;
  std::map<std::string, std::size_t> cases;
  std::size_t failures = 0;
  for (std::size_t k = 0; k < pres.size(); ++k) {
    opt.seed = 11 + k;
    const EnvelopingAlgebra env = build(pres[k], opt.max_degree + 2);
    auto take = [&](const SuiteResult& r) {
      cases[r.name] += r.cases;
      failures += r.failures;
      o.require(r.ok(), r.name + " on presentation " + std::to_string(k) + ": " + r.first_failure);
    };
    for (const auto& r : ring_suites(pres[k], opt)) take(r);
    for (const auto& r : enveloping_suites(env, opt)) take(r);
  }
  std::size_t least = SIZE_MAX;
  for (const auto& [name, c] : cases) {
    least = std::min(least, c);
    o.require(c >= 1000, name + " ran only " + std::to_string(c) + " cases");
  }
  o.summary = std::to_string(cases.size()) + " identity suites over " + std::to_string(pres.size()) +
              " presentations, at least " + std::to_string(least) + " inputs each, " + std::to_string(failures) +
              " failures";
  return o;
}

Outcome closed_form() {
  Outcome o;
  std::size_t vectors = 0, beyond_caps = 0;
  for (const std::string name : {"poly2", "ex313"}) {
    const Presentation p = builtin(name);
    // |h(f)| = |f| + bracket degree, so reduction must be exact one degree higher.
    const EnvelopingAlgebra env = build(p, 12 + std::max(0, p.bracket_degree()));
    const SuiteResult r = closed_form_suite(env, 12);
    vectors += r.cases;
    o.require(r.ok(), name + ": " + r.first_failure);
    // Exponent vectors the suite covers that violate the odd caps.
    for (std::size_t i = 0; i < p.rank(); ++i)
      if (p.signature().odd(i))
        for (int e = 2; e * p.signature().degree(i) <= 12; ++e) ++beyond_caps;
  }
  std::size_t vanishing = 0;
  for (unsigned k = 1; k <= 6; ++k)
    for (int deg : {1, 3, 5}) {
      o.require(delta_coefficient(2 * k, deg) == 0, "Delta(" + std::to_string(2 * k) + ") on odd degree");
      ++vanishing;
    }
  o.require(beyond_caps > 0, "some exponent vectors beyond the odd caps");
  o.summary = std::to_string(vectors) + " exponent vectors up to degree 12 agree (including " +
              std::to_string(beyond_caps) + " pure odd powers beyond the caps); Delta(2k) = 0 on odd degrees in " +
              std::to_string(vanishing) + " cases";
  return o;
}

Outcome right_forms() {
  Outcome o;
  SuiteOptions opt;
  opt.cases = 1000;
  opt.max_degree = 12;
  std::size_t round_trips = 0, units = 0;
  for (const std::string name : {"poly2", "ex313"}) {
    const Presentation p = builtin(name);
    const EnvelopingAlgebra env = build(p, 12 + std::max(0, p.bracket_degree()));
    for (const auto& r : right_form_suites(env, opt)) {
      (r.name == "right-round-trip" ? round_trips : units) += r.cases;
      o.require(r.ok(), name + " " + r.name + ": " + r.first_failure);
    }
  }
  o.require(round_trips >= 1000, "at least 1000 round trips");
  o.summary = std::to_string(round_trips) + " left/right round trips; " + std::to_string(units) +
              " pairs (Y, f) with zero coefficient of 1";
  return o;
}

Outcome ideals() {
  Outcome o;
  // Two even generators of degree 2 with {x1, x2} = L = a x1 + b x2.
  std::size_t instances = 0, rows = 0;
  Rng rng(31);
  for (int attempt = 0; attempt < 40 && instances < 8; ++attempt) {
    const Signature sig({{"x1", 2}, {"x2", 2}});
    const GradedRing ring(sig);
    Scalar a = random_scalar(rng), b = std::uniform_int_distribution<int>(0, 2)(rng) == 0 ? Scalar(0) : random_scalar(rng);
    const Polynomial lin = ring.gen(0) * a + ring.gen(1) * b;
    BracketTable table;
    table.entries[{0, 1}] = lin;
    const Presentation base(sig, table, {Polynomial{}, Polynomial{}});
    std::vector<Polynomial> ideal;
    const int k = std::uniform_int_distribution<int>(1, 3)(rng);
    if (attempt % 2 == 0) {
      Polynomial pw = Polynomial::constant(2, 1);
      for (int e = 0; e < k; ++e) pw = ring.mul(pw, lin);
      ideal.push_back(pw);
    } else {
      for (const auto& m : ring.monomials_of_degree(2 * std::min(k, 2))) ideal.push_back(Polynomial::monomial(m));
    }
    const Presentation p = base.with_ideal(ideal);
    if (!validate(p).ok()) continue;
    ++instances;
    for (const auto& r : left_ideal_intersection(p, 10)) {
      ++rows;
      o.require(r.ok(), "intersection at degree " + std::to_string(r.degree) + " for {x1,x2} = " +
                            to_string(sig, lin));
    }
  }
  o.require(instances >= 5, "at least 5 Poisson ideals");

  const Presentation ex = builtin("ex313");
  const GradedRing& ring = ex.ring();
  const UnitExclusion u = unit_exclusion(ex, {ring.gen(0), ring.gen(1)}, {ring.mul(ring.gen(0), ring.gen(1))}, 6);
  o.require(u.ok(), "unit excluded for M = (x1, x2), Q = (x1*x2)");
  o.summary = std::to_string(instances) + " Poisson ideals, " + std::to_string(rows) +
              " degree rows of the left-ideal intersection agree; degree-0 span for M = (x1, x2), Q = (x1*x2) has "
              "dimension " + std::to_string(u.span_dims.empty() ? 0 : u.span_dims[0]);
  return o;
}

Outcome adjudication() {
  Outcome o;
  const Presentation p = builtin("ex313");
  const Signature& sig = p.signature();
  const FreeAlgebra fa(sig);
  const EnvelopingAlgebra env = build(p, 13);
  const Adjudication a = adjudicate(env, 12);
  std::istringstream table(to_text(sig, a));
  for (std::string line; std::getline(table, line);) o.notes.push_back(line);
  o.require(a.agrees(), "completed standard monomials agree with the oracle up to degree 12");

  // The basis with the claimed conditions i1*i2 = 0 and i2*j1 = 0.
  std::set<Word> claimed, computed;
  for (int i1 = 0; 2 * i1 <= 12; ++i1)
    for (int i2 = 0; i2 <= 1; ++i2)
      for (int j1 = 0; 3 * j1 <= 12; ++j1)
        for (int j2 = 0; j2 <= 1; ++j2) {
          if (i1 * i2 != 0 || i2 * j1 != 0) continue;
          Word w;
          w.insert(w.end(), i1, Letter::x(0));
          w.insert(w.end(), i2, Letter::x(1));
          w.insert(w.end(), j1, Letter::y(0));
          w.insert(w.end(), j2, Letter::y(1));
          if (fa.degree(w) <= 12) claimed.insert(w);
        }
  for (const Word& w : env.rules().standard_monomials(12)) computed.insert(w);
  std::vector<Word> only_claimed;
  for (const Word& w : claimed)
    if (!computed.count(w)) only_claimed.push_back(w);
  std::string list;
  for (const Word& w : only_claimed) list += " " + to_string(sig, w);
  o.notes.push_back("claimed condition set i1*i2 = 0, i2*j1 = 0 lists " + std::to_string(only_claimed.size()) +
                    " words that vanish in the quotient:" + list);

  const NCPolynomial x1 = NCPolynomial::word({Letter::x(0)}), y1 = NCPolynomial::word({Letter::y(0)});
  const Polynomial x1x2 = p.ring().mul(p.ring().gen(0), p.ring().gen(1));
  const NCPolynomial witness = x1 * psi_hat(p, x1x2) - fa.embed(x1x2) * y1;
  const Word x1x1y2 = {Letter::x(0), Letter::x(0), Letter::y(1)};
  QuotientOracle oracle = QuotientOracle::enveloping(p);
  o.require(witness == NCPolynomial::word(x1x1y2), "x1*psi(x1*x2) - (x1*x2)*y1 equals x1*x1*y2 in the free algebra");
  o.require(oracle.in_ideal(NCPolynomial::word(x1x1y2)), "x1*x1*y2 lies in J");
  o.require(claimed.count(x1x1y2) && !computed.count(x1x1y2), "x1*x1*y2 is claimed but not standard");
  o.notes.push_back("witness: " + to_string(sig, NCPolynomial::word(x1x1y2)) + " = x1*psi(x1*x2) - (x1*x2)*x1' = " +
                    to_string(sig, witness) + ", in J by the oracle");
  const std::size_t open = std::count_if(a.naive_compositions.entries.begin(), a.naive_compositions.entries.end(),
                                         [](const CompositionEntry& e) { return !e.reduced.is_zero(); });
  o.summary = "uncompleted rules not closed (" + std::to_string(open) + " nonzero compositions); completed basis " +
              (a.agrees() ? "agrees" : "disagrees") + " with the oracle to degree 12; claimed basis has " +
              std::to_string(only_claimed.size()) + " extra words";
  return o;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream f(path);
  std::vector<std::string> out;
  for (std::string line; std::getline(f, line);) out.push_back(line);
  return out;
}

Outcome cli_contract() {
  Outcome o;
  namespace fs = std::filesystem;
  std::size_t goldens = 0;
  std::set<std::string> commands;
  std::vector<fs::path> cases;
  for (const auto& entry : fs::directory_iterator(DGENV_GOLDEN_DIR))
    if (entry.path().extension() == ".args") cases.push_back(entry.path());
  std::sort(cases.begin(), cases.end());
  for (const auto& path : cases) {
    std::vector<std::string> args = read_lines(path);
    for (auto& a : args)
      if (auto at = a.find("@DIR@"); at != std::string::npos) a.replace(at, 5, DGENV_GOLDEN_DIR);
    fs::path expected_out = path, expected_code = path;
    expected_out.replace_extension(".out");
    expected_code.replace_extension(".code");
    std::ifstream ef(expected_out);
    std::stringstream want;
    want << ef.rdbuf();
    const auto code_lines = read_lines(expected_code);
    const int want_code = code_lines.empty() ? 0 : std::stoi(code_lines[0]);
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    ++goldens;
    if (!args.empty()) commands.insert(args[0]);
    o.require(code == want_code && out.str() == want.str(), "golden " + path.stem().string());
  }
  o.require(goldens > 0, "golden cases present");
  for (const char* c : {"validate", "psi", "bracket", "diff", "nf", "closure", "basis", "verify"})
    o.require(commands.count(c) > 0, std::string("golden coverage of ") + c);

  // Print/parse round trip on random commutative and free expressions.
  std::size_t trips = 0, failures = 0;
  Rng rng(99);
  for (const std::string name : {"poly2", "ex313"}) {
    const Presentation p = builtin(name);
    const Signature& sig = p.signature();
    const FreeAlgebra fa(sig);
    for (int k = 0; k < 5000; ++k) {
      Polynomial f;
      NCPolynomial g;
      const int parts = std::uniform_int_distribution<int>(0, 3)(rng);
      for (int part = 0; part < parts; ++part) {
        const int d = std::uniform_int_distribution<int>(0, 8)(rng);
        f += random_homogeneous(p.ring(), d, rng, 3);
        g += random_nc_homogeneous(fa, d, rng, 3);
      }
      trips += 2;
      if (parse_polynomial(sig, to_string(sig, f)) != f) ++failures;
      if (parse_nc_polynomial(sig, to_string(sig, g)) != g) ++failures;
    }
  }
  o.require(failures == 0, std::to_string(failures) + " round-trip failures");
  o.summary = std::to_string(goldens) + " golden CLI cases over " + std::to_string(commands.size()) +
              " subcommands; " + std::to_string(trips) + " print/parse round trips, " + std::to_string(failures) +
              " failures";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"ordering", ordering},
      {"pbw-random", pbw_random},
      {"identities", identities},
      {"closed-form-h", closed_form},
      {"right-forms", right_forms},
      {"ideals", ideals},
      {"ex313-adjudication", adjudication},
      {"cli-contract", cli_contract},
  };
  bool all = true;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.summary = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << index << " " << c.name << ": " << o.summary << " ("
              << std::fixed << std::setprecision(1) << secs << "s)" << std::endl;
    for (const auto& n : o.notes) std::cout << "      " << n << '\n';
  }
  return all ? 0 : 1;
}
