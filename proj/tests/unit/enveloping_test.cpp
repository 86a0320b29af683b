#include "common.hpp"

#include "dgenv/analysis.hpp"
#include "dgenv/enveloping.hpp"
#include "dgenv/verify.hpp"

using namespace dgenv;
using namespace dgenv::test;

namespace {

EnvelopingAlgebra envelope(const std::string& name, int bound = 12) {
  return EnvelopingAlgebra::build(ValidatedPresentation::from(builtin(name)), bound);
}

}  // namespace

TEST_CASE("build", "[enveloping]") {
  const EnvelopingAlgebra p2 = envelope("poly2");
  CHECK(p2.completion().added.empty());
  CHECK(p2.rules().size() == base_rules(p2.presentation()).size());

  const EnvelopingAlgebra ex = envelope("ex313");
  CHECK(ex.rules().rule_for(word({X(1), X(2)})) != nullptr);
  CHECK(ex.rules().rule_for(word({X(2), Y(1)})) != nullptr);
  CHECK(ex.rules().rule_for(word({X(1), X(1), Y(2)})) != nullptr);
  CHECK(ex.rules().compositions(12).closed());
}

TEST_CASE("m and h", "[enveloping]") {
  const EnvelopingAlgebra ex = envelope("ex313");
  const Presentation& pe = ex.presentation();
  CHECK(ex.h(poly(pe, "x1*x2")).is_zero());
  CHECK(ex.h(poly(pe, "1")).is_zero());
  CHECK(ex.h(poly(pe, "x1")) == nc(pe, "x1'"));

  const EnvelopingAlgebra p2 = envelope("poly2");
  const Presentation& pp = p2.presentation();
  CHECK(p2.m(poly(pp, "x2*x1")) == nc(pp, "x1*x2"));
  CHECK(p2.h(poly(pp, "x1^2")) == nc(pp, "2*x1*x1'"));
}

TEST_CASE("differential on the enveloping algebra", "[enveloping]") {
  const EnvelopingAlgebra ex = envelope("ex313");
  const Presentation& pe = ex.presentation();
  CHECK(ex.partial(nc(pe, "x1")) == nc(pe, "x2"));
  CHECK(ex.partial(nc(pe, "x1'")) == nc(pe, "x2'"));
  CHECK(ex.partial(ex.partial(nc(pe, "x1*x1'"))).is_zero());
}

TEST_CASE("closed form of h", "[enveloping]") {
  CHECK(delta_coefficient(2, 2) == 2);
  CHECK(delta_coefficient(2, 3) == 0);
  CHECK(delta_coefficient(1, 2) == 1);
  CHECK(delta_coefficient(1, 3) == 1);
  CHECK(delta_coefficient(4, 1) == 0);
  CHECK(delta_coefficient(3, 1) == 1);

  const EnvelopingAlgebra p2 = envelope("poly2");
  const Presentation& pp = p2.presentation();
  CHECK(p2.h_closed_form({2, 0}) == nc(pp, "2*x1'*x1"));
  CHECK(p2.h_closed_form({1, 1}) == nc(pp, "x1'*x2 + x2'*x1"));
  CHECK(p2.h_closed_form({0, 0}).is_zero());
  CHECK(p2.nf(p2.h_closed_form({2, 3})) == p2.h(poly(pp, "x1^2*x2^3")));

  const EnvelopingAlgebra ex = envelope("ex313");
  CHECK_THROWS(ex.h_closed_form({0, 2}));
  CHECK(ex.nf(ex.h_closed_form_raw({0, 2})).is_zero());
}

TEST_CASE("right normal forms", "[enveloping]") {
  const EnvelopingAlgebra p2 = envelope("poly2");
  const Presentation& pp = p2.presentation();
  const RightForm r = p2.right_normal_form(nc(pp, "x1*x2'"));
  CHECK(r.terms.size() == 2);
  CHECK(r.coefficient(word({Y(2)})) == poly(pp, "x1"));
  CHECK(r.coefficient(Word{}) == poly(pp, "x1"));
  CHECK(to_string(pp.signature(), r) == "x2'*(x1) + (x1)");

  const RightForm s = p2.right_normal_form(nc(pp, "x1"));
  CHECK(s.terms.size() == 1);
  CHECK(s.coefficient(Word{}) == poly(pp, "x1"));

  const RightForm t = p2.right_normal_form(nc(pp, "x1*x1'"));
  CHECK(t.terms.size() == 1);
  CHECK(t.coefficient(word({Y(1)})) == poly(pp, "x1"));

  const NCPolynomial e = nc(pp, "x2'*x1'*x2 - 2*x1*x2'*x2'");
  CHECK(p2.nf(p2.from_right_form(p2.right_normal_form(e))) == p2.nf(e));
}

TEST_CASE("quotient oracle", "[enveloping][oracle]") {
  QuotientOracle p2 = QuotientOracle::enveloping(builtin("poly2"));
  CHECK(p2.filtered());
  CHECK(p2.dimension(0) == 1);
  CHECK(p2.dimension(4) == 10);
  CHECK(p2.piece_dimension(4) == 15);

  QuotientOracle ex = QuotientOracle::enveloping(builtin("ex313"));
  CHECK_FALSE(ex.filtered());
  CHECK(ex.dimension(0) == 1);
  CHECK(ex.dimension(5) == 1);
  const Presentation pe = builtin("ex313");
  CHECK(ex.in_ideal(nc(pe, "x1^2*x2'")));
  CHECK(ex.in_ideal(nc(pe, "x1*x2 - x2*x1")));
  CHECK_FALSE(ex.in_ideal(nc(pe, "x1*x1'")));
}

TEST_CASE("oracle agrees with the standard monomials", "[enveloping][oracle]") {
  for (const auto& name : builtin_names()) {
    INFO(name);
    const EnvelopingAlgebra env = envelope(name);
    QuotientOracle oracle = QuotientOracle::enveloping(env.presentation());
    for (const auto& row : dimension_table(env, oracle, 10)) {
      INFO("degree " << row.degree);
      CHECK(row.ok());
    }
  }
}

TEST_CASE("left ideal intersection", "[enveloping][analysis]") {
  const Presentation p2 = builtin("poly2");
  const auto rows = left_ideal_intersection(p2.with_ideal({poly(p2, "x1")}), 8);
  CHECK(rows.size() == 9);
  for (const auto& r : rows) {
    INFO("degree " << r.degree);
    CHECK(r.ok());
  }
  for (const auto& r : left_ideal_intersection(p2, 6)) CHECK(r.intersection_dim == 0);
}

TEST_CASE("unit exclusion", "[enveloping][analysis]") {
  const Presentation ex = builtin("ex313");
  const GradedRing& ring = ex.ring();
  const UnitExclusion u = unit_exclusion(ex, {ring.gen(0), ring.gen(1)}, {ring.mul(ring.gen(0), ring.gen(1))}, 4);
  CHECK(u.ok());
  CHECK(u.span_dims.at(0) == 0);
}

TEST_CASE("two routes to the quotient", "[enveloping][analysis]") {
  for (const auto& r : two_route_dimensions(builtin("ex313"), 9)) {
    INFO("degree " << r.degree);
    CHECK(r.ok());
  }
}

TEST_CASE("adjudication of the degree-1 example", "[enveloping][analysis]") {
  const EnvelopingAlgebra env = envelope("ex313", 13);
  const Adjudication a = adjudicate(env, 12);
  CHECK(a.agrees());
  CHECK_FALSE(a.naive_compositions.closed());
  CHECK(std::find(a.spurious.begin(), a.spurious.end(), word({X(1), X(1), Y(2)})) != a.spurious.end());
}

TEST_CASE("identity suites", "[enveloping][verify]") {
  SuiteOptions opt;
  opt.cases = 60;
  opt.max_degree = 7;
  for (const auto& name : builtin_names()) {
    INFO(name);
    const EnvelopingAlgebra env = envelope(name);
    for (const auto& s : ring_suites(env.presentation(), opt)) CHECK(s.ok());
    for (const auto& s : enveloping_suites(env, opt)) CHECK(s.ok());
    for (const auto& s : right_form_suites(env, opt)) CHECK(s.ok());
    CHECK(closed_form_suite(env, 10).ok());
  }
}
