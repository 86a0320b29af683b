#include "common.hpp"

#include "dgenv/rewriting.hpp"

using namespace dgenv;
using namespace dgenv::test;

namespace {

const RewriteRule& rule(const RuleSystem& s, const Word& lead) {
  const RewriteRule* r = s.rule_for(lead);
  REQUIRE(r != nullptr);
  return *r;
}

std::size_t count_at(const RuleSystem& s, const std::vector<Word>& words, int degree) {
  std::size_t n = 0;
  for (const Word& w : words) n += s.algebra().degree(w) == degree;
  return n;
}

}  // namespace

TEST_CASE("base rules", "[rewriting]") {
  const Presentation p2 = builtin("poly2");
  const RuleSystem b2 = base_rules(p2);
  CHECK(show(p2, rule(b2, word({Y(2), X(1)})).tail) == "x1*x2' - x1");
  CHECK(rule(b2, word({X(2), X(1)})).tail == nc(p2, "x1*x2"));

  const Presentation ex = builtin("ex313");
  const RuleSystem be = base_rules(ex);
  CHECK(rule(be, word({Y(1), X(2)})).tail == nc(ex, "x2*x1'"));
  CHECK(rule(be, word({X(2), X(1)})).tail == nc(ex, "x1*x2"));
  CHECK(rule(be, word({X(2), X(2)})).tail.is_zero());
}

TEST_CASE("quotient rules", "[rewriting]") {
  const Presentation ex = builtin("ex313");
  const RuleSystem q = quotient_rules(ex);
  CHECK(rule(q, word({X(1), X(2)})).tail.is_zero());
  CHECK(rule(q, word({X(2), Y(1)})).origin == RuleOrigin::PsiIdeal);
  CHECK(rule(q, word({X(2), Y(1)})).tail == nc(ex, "-x1*x2'"));

  const Presentation p2 = builtin("poly2");
  const RuleSystem q2 = quotient_rules(p2.with_ideal({poly(p2, "x1")}));
  CHECK(rule(q2, word({X(1)})).tail.is_zero());
  CHECK(rule(q2, word({Y(1)})).tail.is_zero());
  CHECK(quotient_rules(p2).size() == base_rules(p2).size());
}

TEST_CASE("normal forms", "[rewriting]") {
  const Presentation ex = builtin("ex313");
  CHECK(base_rules(ex).normal_form(nc(ex, "x1'*x2")) == nc(ex, "x2*x1'"));
  const Presentation p2 = builtin("poly2");
  const RuleSystem b2 = base_rules(p2);
  CHECK(b2.normal_form(nc(p2, "x2'*x1'")) == nc(p2, "x1'*x2' - x1'"));
  CHECK(b2.normal_form(NCPolynomial::one()) == NCPolynomial::one());
  const NCPolynomial p = nc(p2, "x2'*x1'*x2*x1 - 3*x1'*x2'*x1");
  CHECK(b2.normal_form(p) == b2.normal_form(p, Strategy::RightmostFirst));
}

TEST_CASE("trace records each step", "[rewriting]") {
  const Presentation p2 = builtin("poly2");
  ReductionTrace t;
  const NCPolynomial r = base_rules(p2).normal_form(nc(p2, "x1'*x2"), Strategy::LeftmostSmallest, &t);
  REQUIRE(t.steps.size() == 1);
  CHECK(t.steps[0].origin == RuleOrigin::BaseZ);
  CHECK(t.steps[0].position == 0);
  CHECK(r == nc(p2, "x2*x1' + x1"));
  CHECK(t.to_text(p2.signature()).find("base-z") != std::string::npos);
}

TEST_CASE("compositions", "[rewriting]") {
  const Presentation ex = builtin("ex313");
  const CompositionReport rep = quotient_rules(ex).compositions();
  CHECK_FALSE(rep.closed());
  bool found = false;
  for (const auto& e : rep.entries) {
    if (e.p == word({X(1), X(2)}) && e.q == word({X(2), Y(1)}) && e.w == word({X(1), X(2), Y(1)})) {
      found = true;
      CHECK(e.value == nc(ex, "-x1^2*x2'"));
      CHECK_FALSE(e.reduced.is_zero());
    }
  }
  CHECK(found);

  for (const auto& name : builtin_names()) CHECK(base_rules(builtin(name)).is_closed());
  const Presentation p2 = builtin("poly2");
  CHECK(quotient_rules(p2.with_ideal({poly(p2, "x1")})).is_closed());

  RuleSystem singletons{FreeAlgebra(p2.signature())};
  singletons.add({word({X(1)}), NCPolynomial(), RuleOrigin::Ideal, std::nullopt});
  singletons.add({word({Y(1)}), NCPolynomial(), RuleOrigin::PsiIdeal, std::nullopt});
  CHECK(singletons.compositions().entries.empty());
}

TEST_CASE("completion", "[rewriting]") {
  const Presentation ex = builtin("ex313");
  RuleSystem q = quotient_rules(ex);
  const CompletionReport done = q.complete(12);
  CHECK(std::find(done.added.begin(), done.added.end(), word({X(1), X(1), Y(2)})) != done.added.end());
  // Closed up to the bound; compositions above it are not examined.
  CHECK(q.compositions(12).closed());
  const RewriteRule& r = rule(q, word({X(1), X(1), Y(2)}));
  CHECK(r.origin == RuleOrigin::Completion);
  REQUIRE(r.provenance);

  RuleSystem b2 = base_rules(builtin("poly2"));
  const std::size_t before = b2.size();
  CHECK(b2.complete(10).added.empty());
  CHECK(b2.size() == before);
}

TEST_CASE("standard monomials", "[rewriting]") {
  const Presentation p2 = builtin("poly2");
  const RuleSystem b2 = base_rules(p2);
  const auto s2 = b2.standard_monomials(4);
  CHECK(s2.size() == 15);
  CHECK(count_at(b2, s2, 4) == 10);

  const Presentation ex = builtin("ex313");
  const RuleSystem q = quotient_rules(ex);
  const auto se = q.standard_monomials(5);
  const std::vector<Word> want = {{}, word({X(1)}), word({X(2)}), word({Y(1)}), word({X(1), X(1)}), word({Y(2)}),
                                  word({X(1), Y(1)})};
  CHECK(std::is_permutation(se.begin(), se.end(), want.begin(), want.end()));

  CHECK(RuleSystem(FreeAlgebra(p2.signature())).standard_monomials(0) == std::vector<Word>{Word{}});
}
