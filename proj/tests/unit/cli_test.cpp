#include "common.hpp"

#include "dgenv/cli.hpp"
#include "dgenv/random.hpp"

#include <sstream>

using namespace dgenv;
using namespace dgenv::test;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("expression parsing", "[cli][parse]") {
  const Presentation p2 = builtin("poly2");
  CHECK(poly(p2, "x1^2*x2 - 1/2*x1 + 3") == poly(p2, "3 + (-1/2*x1) + x2*x1*x1"));
  CHECK(show(p2, poly(p2, "x2*x1 + x1*x2")) == "2*x1*x2");
  CHECK(show(p2, nc(p2, "(x1 + x1')*(x2 - 2)")) == "x1'*x2 - 2*x1' + x1*x2 - 2*x1");
  CHECK(show(p2, nc(p2, "0")) == "0");
  CHECK(show(p2, nc(p2, "1")) == "1");
  CHECK_THROWS_AS(poly(p2, "x1'"), ParseError);
  CHECK_THROWS_AS(poly(p2, "x3"), ParseError);
  CHECK_THROWS_AS(nc(p2, "x1*(x2"), ParseError);
  CHECK_THROWS_AS(nc(p2, "x1 +"), ParseError);
  CHECK_THROWS_AS(nc(p2, "1/0"), ParseError);
}

TEST_CASE("parse errors carry a position", "[cli][parse]") {
  const Presentation p2 = builtin("poly2");
  try {
    poly(p2, "x1 + * x2");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 6);
  }
}

TEST_CASE("presentation files", "[cli][parse]") {
  for (const auto& name : builtin_names()) {
    const Presentation p = builtin(name);
    const Presentation q = parse_presentation(write_presentation(p));
    CHECK(q.signature() == p.signature());
    CHECK(q.ideal() == p.ideal());
    CHECK(q.differential_table() == p.differential_table());
    CHECK(q.bracket_table().entries == p.bracket_table().entries);
  }
  const Presentation ex = builtin("ex313");
  CHECK(ex.bracket_degree() == 1);
  CHECK(ex.ideal().size() == 1);
  CHECK_THROWS_AS(parse_presentation(""), ParseError);
  CHECK_THROWS_AS(parse_presentation("gen x1 : 2\nbracket {x1, x1} = x1\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gen x1 : 2\ngen x2 : 3\nbracket {x1, x2} = x1\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gen x1 : 2\nideal = [x1']\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gen x1 : 2\ngen x1 : 4\n"), ParseError);
}

TEST_CASE("print and parse round trip", "[cli][parse][property]") {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const Presentation p = random_presentation(rng);
    const FreeAlgebra fa(p.signature());
    for (int d = 0; d <= 8; ++d) {
      const Polynomial f = random_homogeneous(p.ring(), d, rng, 4) * Scalar(1, 3);
      CHECK(parse_polynomial(p.signature(), to_string(p.signature(), f)) == f);
      const NCPolynomial g = random_nc_homogeneous(fa, d, rng, 4) - NCPolynomial::one() * Scalar(5, 2);
      CHECK(parse_nc_polynomial(p.signature(), to_string(p.signature(), g)) == g);
    }
  }
}

TEST_CASE("command line", "[cli]") {
  const Run nf = run({"nf", "--builtin", "poly2", "--expr", "x1'*x2"});
  CHECK(nf.code == kExitOk);
  CHECK(nf.out == "x2*x1' + x1\n");

  const Run v = run({"validate", "--builtin", "ex313"});
  CHECK(v.code == kExitOk);
  CHECK(v.out.find("valid\n") != std::string::npos);

  const Run c = run({"closure", "--builtin", "ex313"});
  CHECK(c.code == kExitNotClosed);

  const Run basis = run({"basis", "--builtin", "ex313", "--max-degree", "5"});
  CHECK(basis.code == kExitOk);
  std::istringstream lines(basis.out);
  std::vector<std::string> counts;
  for (std::string line; std::getline(lines, line);) counts.push_back(line.substr(0, line.find('\t', line.find('\t') + 1)));
  CHECK(counts == std::vector<std::string>{"0\t1", "1\t0", "2\t1", "3\t2", "4\t2", "5\t1"});

  const Run bad = run({"nf", "--builtin", "poly2", "--expr", "x1*(x2"});
  CHECK(bad.code == kExitParse);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());

  CHECK(run({"psi", "--builtin", "nope", "--gen", "x1", "--expr", "x1"}).code == kExitParse);
  CHECK(run({}).code == kExitParse);
}
