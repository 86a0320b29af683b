#include "dgenv/cli.hpp"

#include "dgenv/analysis.hpp"
#include "dgenv/format.hpp"
#include "dgenv/parse.hpp"
#include "dgenv/presets.hpp"
#include "dgenv/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace dgenv {

namespace {

// Thrown to leave a command with a given exit code after a diagnostic.
struct Exit {
  int code;
};

struct Input {
  std::string file;
  std::string builtin;
};

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("file", in.file, "presentation file");
  cmd->add_option("--builtin", in.builtin, "use a built-in presentation")
      ->check(CLI::IsMember(builtin_names()));
}

class Session {
 public:
  Session(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

  Presentation load(const Input& in) {
    if (!in.builtin.empty() && !in.file.empty()) fail(kExitParse, "give either a file or --builtin, not both");
    if (in.builtin.empty() && in.file.empty()) fail(kExitParse, "no presentation: give a file or --builtin");
    std::string text, origin;
    if (!in.builtin.empty()) {
      text = builtin_text(in.builtin);
      origin = in.builtin;
    } else {
      std::ifstream f(in.file);
      if (!f) fail(kExitParse, "cannot read " + in.file);
      std::ostringstream ss;
      ss << f.rdbuf();
      text = ss.str();
      origin = in.file;
    }
    try {
      return parse_presentation(text);
    } catch (const ParseError& e) {
      fail(kExitParse, origin + ": " + e.what());
    }
  }

  ValidatedPresentation validated(const Presentation& pres) {
    try {
      return ValidatedPresentation::from(pres);
    } catch (const ValidationError& e) {
      for (const auto& o : e.report().failures()) err_ << "invalid: " << describe(o) << '\n';
      throw Exit{kExitFailed};
    }
  }

  EnvelopingAlgebra envelope(const Presentation& pres, int bound) {
    EnvelopingAlgebra env = EnvelopingAlgebra::build(validated(pres), bound);
    for (const auto& w : env.warnings()) err_ << "warning: " << w << '\n';
    return env;
  }

  template <class Parse>
  auto expression(const std::string& what, Parse parse) -> decltype(parse()) {
    try {
      return parse();
    } catch (const ParseError& e) {
      fail(kExitParse, what + ": column " + std::to_string(e.column()) + ": " + e.message());
    }
  }

  [[noreturn]] void fail(int code, const std::string& message) {
    err_ << "error: " << message << '\n';
    throw Exit{code};
  }

  static std::string describe(const CheckOutcome& o) {
    std::string s = o.check;
    if (!o.witness.empty()) s += " " + o.witness;
    if (!o.detail.empty()) s += ": " + o.detail;
    return s;
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
};

std::size_t generator_index(Session& s, const Signature& sig, const std::string& name) {
  auto i = sig.find(name);
  if (!i) s.fail(kExitParse, "unknown generator '" + name + "'");
  return *i;
}

int cmd_validate(Session& s, const Input& in) {
  const Presentation pres = s.load(in);
  const ValidationReport report = validate(pres);
  for (const auto& o : report.outcomes) s.out() << to_string(o.status) << '\t' << Session::describe(o) << '\n';
  s.out() << (report.ok() ? "valid" : "invalid") << '\n';
  return report.ok() ? kExitOk : kExitFailed;
}

int cmd_psi(Session& s, const Input& in, const std::string& gen, const std::string& expr) {
  const Presentation pres = s.load(in);
  const Signature& sig = pres.signature();
  const std::size_t alpha = generator_index(s, sig, gen);
  const Polynomial f = s.expression("--expr", [&] { return parse_polynomial(sig, expr); });
  s.out() << to_string(sig, pres.anti_differential(alpha, f)) << '\n';
  return kExitOk;
}

int cmd_bracket(Session& s, const Input& in, const std::string& left, const std::string& right) {
  const Presentation pres = s.load(in);
  const Signature& sig = pres.signature();
  const Polynomial f = s.expression("--left", [&] { return parse_polynomial(sig, left); });
  const Polynomial g = s.expression("--right", [&] { return parse_polynomial(sig, right); });
  s.out() << to_string(sig, pres.bracket(f, g)) << '\n';
  return kExitOk;
}

int cmd_diff(Session& s, const Input& in, const std::string& expr, bool enveloping, int bound) {
  const Presentation pres = s.load(in);
  const Signature& sig = pres.signature();
  if (!enveloping && expr.find('\'') == std::string::npos) {
    const Polynomial f = s.expression("--expr", [&] { return parse_polynomial(sig, expr); });
    s.out() << to_string(sig, pres.differential(f)) << '\n';
    return kExitOk;
  }
  const NCPolynomial p = s.expression("--expr", [&] { return parse_nc_polynomial(sig, expr); });
  const EnvelopingAlgebra env = s.envelope(pres, bound);
  s.out() << to_string(sig, env.partial(p)) << '\n';
  return kExitOk;
}

int cmd_nf(Session& s, const Input& in, const std::string& expr, const std::string& side, bool trace, int bound) {
  const Presentation pres = s.load(in);
  const Signature& sig = pres.signature();
  const NCPolynomial p = s.expression("--expr", [&] { return parse_nc_polynomial(sig, expr); });
  if (trace && side == "right") s.fail(kExitParse, "--trace applies to the left normal form");
  const EnvelopingAlgebra env = s.envelope(pres, bound);
  if (side == "right") {
    s.out() << to_string(sig, env.right_normal_form(p)) << '\n';
  } else if (trace) {
    ReductionTrace t;
    const NCPolynomial r = env.rules().normal_form(p, Strategy::LeftmostSmallest, &t);
    s.out() << t.to_text(sig) << "= " << to_string(sig, r) << '\n';
  } else {
    s.out() << to_string(sig, env.nf(p)) << '\n';
  }
  return kExitOk;
}

int cmd_closure(Session& s, const Input& in, bool complete, std::optional<int> bound) {
  const Presentation pres = s.load(in);
  const Signature& sig = pres.signature();
  const ValidatedPresentation vp = s.validated(pres);
  RuleSystem rules = quotient_rules(*vp);
  if (!complete) {
    const CompositionReport rep = rules.compositions();
    s.out() << rep.to_text(sig);
    return rep.closed() ? kExitOk : kExitNotClosed;
  }
  if (!bound) s.fail(kExitParse, "--complete needs --max-degree");
  CompletionReport done;
  try {
    done = rules.complete(*bound);
  } catch (const std::exception& e) {
    s.fail(kExitFailed, e.what());
  }
  s.out() << "completion to degree " << *bound << ": " << done.rounds << " rounds, " << done.added.size()
          << " rules added\n";
  for (const Word& lead : done.added) {
    const RewriteRule* r = rules.rule_for(lead);
    s.out() << "  " << to_string(sig, r->lead) << " -> " << to_string(sig, r->tail) << '\n';
  }
  if (done.new_rules_at_cap > 0)
    s.err() << "warning: " << done.new_rules_at_cap << " rules added at the degree bound " << *bound << '\n';
  const CompositionReport rep = rules.compositions(*bound);
  s.out() << rep.to_text(sig);
  if (rep.skipped_above_bound > 0) s.out() << rep.skipped_above_bound << " compositions above the bound not examined\n";
  return rep.closed() ? kExitOk : kExitNotClosed;
}

int cmd_basis(Session& s, const Input& in, int bound) {
  const Presentation pres = s.load(in);
  const Signature& sig = pres.signature();
  if (!sig.positively_graded() || bound < 0) s.fail(kExitFailed, "basis enumeration needs positive generator degrees");
  const EnvelopingAlgebra env = s.envelope(pres, bound);
  if (!env.algebra().positively_graded()) s.fail(kExitFailed, "basis enumeration needs positive letter degrees");
  std::map<int, std::vector<Word>> by_degree;
  for (const Word& w : env.rules().standard_monomials(bound)) by_degree[env.algebra().degree(w)].push_back(w);
  for (int d = 0; d <= bound; ++d) {
    const auto& ws = by_degree[d];
    s.out() << d << '\t' << ws.size();
    for (std::size_t k = 0; k < ws.size(); ++k) s.out() << (k == 0 ? '\t' : ' ') << to_string(sig, ws[k]);
    s.out() << '\n';
  }
  return kExitOk;
}

int cmd_verify(Session& s, const Input& in, int bound, const std::string& suite, const SuiteOptions& base) {
  const Presentation pres = s.load(in);
  const EnvelopingAlgebra env = s.envelope(pres, bound);
  SuiteOptions opt = base;
  opt.max_degree = bound;
  bool ok = true;
  auto report = [&](const SuiteResult& r) {
    ok = ok && r.ok();
    s.out() << r.name << '\t' << r.cases << '\t' << r.failures << '\t' << (r.ok() ? "OK" : "FAIL") << '\n';
    if (!r.ok()) s.err() << r.name << ": " << r.first_failure << '\n';
  };
  if (suite == "all" || suite == "lemmas") {
    for (const auto& r : ring_suites(pres, opt)) report(r);
    for (const auto& r : enveloping_suites(env, opt)) report(r);
    if (env.algebra().positively_graded()) report(closed_form_suite(env, bound));
    for (const auto& r : right_form_suites(env, opt)) report(r);
  }
  if (suite == "all" || suite == "oracle") {
    if (!env.algebra().positively_graded()) {
      s.err() << "warning: oracle unavailable for this grading; rewriting checks only\n";
    } else {
      QuotientOracle oracle = QuotientOracle::enveloping(pres);
      const auto rows = dimension_table(env, oracle, bound);
      s.out() << to_text(rows);
      for (const auto& r : rows) ok = ok && r.ok();
    }
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_adjudicate(Session& s, const Input& in, int bound) {
  const Presentation pres = s.load(in);
  const EnvelopingAlgebra env = s.envelope(pres, bound);
  if (!env.algebra().positively_graded()) s.fail(kExitFailed, "oracle unavailable for this grading");
  const Adjudication a = adjudicate(env, bound);
  s.out() << to_text(pres.signature(), a);
  return a.agrees() ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enveloping algebras of DG Poisson algebras: presentations, normal forms, bases", "dgenv"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Input in;
  std::string gen, expr, left, right, side = "left", suite = "all";
  bool trace = false, complete = false, enveloping = false;
  int bound = 12;
  std::optional<int> closure_bound;
  SuiteOptions opt;

  auto* validate_cmd = app.add_subcommand("validate", "check the axioms of a presentation");
  add_input(validate_cmd, in);

  auto* psi_cmd = app.add_subcommand("psi", "apply psi_alpha to a polynomial");
  add_input(psi_cmd, in);
  psi_cmd->add_option("--gen", gen, "generator name")->required();
  psi_cmd->add_option("--expr", expr, "polynomial")->required();

  auto* bracket_cmd = app.add_subcommand("bracket", "extended bracket of two polynomials");
  add_input(bracket_cmd, in);
  bracket_cmd->add_option("--left", left)->required();
  bracket_cmd->add_option("--right", right)->required();

  auto* diff_cmd = app.add_subcommand("diff", "differential in R, or in the enveloping algebra for primed input");
  add_input(diff_cmd, in);
  diff_cmd->add_option("--expr", expr)->required();
  diff_cmd->add_flag("--enveloping", enveloping, "treat the expression as an enveloping-algebra element");
  diff_cmd->add_option("--max-degree", bound, "completion bound")->capture_default_str();

  auto* nf_cmd = app.add_subcommand("nf", "normal form in the enveloping algebra");
  add_input(nf_cmd, in);
  nf_cmd->add_option("--expr", expr)->required();
  nf_cmd->add_option("--side", side)->check(CLI::IsMember({"left", "right"}))->capture_default_str();
  nf_cmd->add_flag("--trace", trace, "print every rewriting step");
  nf_cmd->add_option("--max-degree", bound, "completion bound")->capture_default_str();

  auto* closure_cmd = app.add_subcommand("closure", "compositions of the quotient rules");
  add_input(closure_cmd, in);
  closure_cmd->add_flag("--complete", complete, "complete the rules first");
  closure_cmd->add_option("--max-degree", closure_bound, "completion bound");

  auto* basis_cmd = app.add_subcommand("basis", "standard monomials per degree");
  add_input(basis_cmd, in);
  basis_cmd->add_option("--max-degree", bound)->required();

  auto* verify_cmd = app.add_subcommand("verify", "identity suites and the oracle comparison");
  add_input(verify_cmd, in);
  verify_cmd->add_option("--max-degree", bound)->capture_default_str();
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"all", "lemmas", "oracle"}))->capture_default_str();
  verify_cmd->add_option("--cases", opt.cases, "random cases per suite")->capture_default_str();
  verify_cmd->add_option("--seed", opt.seed)->capture_default_str();

  auto* adjudicate_cmd = app.add_subcommand("adjudicate", "uncompleted rules, completed rules and oracle side by side");
  add_input(adjudicate_cmd, in);
  adjudicate_cmd->add_option("--max-degree", bound)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help, diag;
    const int code = app.exit(e, help, diag);
    out << help.str();
    err << diag.str();
    return code == 0 ? kExitOk : kExitParse;
  }

  std::ostringstream result;
  Session s(result, err);
  int code = kExitOk;
  try {
    if (*validate_cmd) code = cmd_validate(s, in);
    else if (*psi_cmd) code = cmd_psi(s, in, gen, expr);
    else if (*bracket_cmd) code = cmd_bracket(s, in, left, right);
    else if (*diff_cmd) code = cmd_diff(s, in, expr, enveloping, bound);
    else if (*nf_cmd) code = cmd_nf(s, in, expr, side, trace, bound);
    else if (*closure_cmd) code = cmd_closure(s, in, complete, closure_bound);
    else if (*basis_cmd) code = cmd_basis(s, in, bound);
    else if (*verify_cmd) code = cmd_verify(s, in, bound, suite, opt);
    else if (*adjudicate_cmd) code = cmd_adjudicate(s, in, bound);
  } catch (const Exit& e) {
    code = e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    code = kExitFailed;
  }
  if (code != kExitParse) out << result.str();
  return code;
}

}  // namespace dgenv
