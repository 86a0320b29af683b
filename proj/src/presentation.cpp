#include "dgenv/presentation.hpp"

#include "dgenv/format.hpp"
#include "dgenv/free_algebra.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <tuple>
#include <sstream>

namespace dgenv {

namespace {

// Splits a non-unit monomial as x_first * rest, where first is the
// smallest generator present.  The product in that order is exactly u.
std::pair<std::size_t, CMonomial> split_first(const CMonomial& u) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > 0) {
      CMonomial rest = u;
      --rest.exponents[i];
      return {i, rest};
    }
  throw std::logic_error("split_first on the unit monomial");
}

std::string pair_witness(const Signature& sig, std::size_t i, std::size_t j) {
  return "(" + sig[i].name + "," + sig[j].name + ")";
}

std::string triple_witness(const Signature& sig, std::size_t i, std::size_t j, std::size_t k) {
  return "(" + sig[i].name + "," + sig[j].name + "," + sig[k].name + ")";
}

}  // namespace

Presentation::Presentation(Signature sig, BracketTable bracket, std::vector<Polynomial> differential,
                           std::vector<Polynomial> ideal)
    : ring_(std::move(sig)), bracket_(std::move(bracket)), differential_(std::move(differential)) {
  const std::size_t n = rank();
  if (differential_.empty()) differential_.resize(n);
  if (differential_.size() != n)
    throw std::invalid_argument("differential table must have one entry per generator");

  auto check_shape = [&](const Polynomial& p, const std::string& what) {
    for (const auto& [m, c] : p.terms())
      if (!ring_.admissible(m)) throw std::invalid_argument(what + " has a malformed monomial");
  };

  for (auto it = bracket_.entries.begin(); it != bracket_.entries.end();) {
    const auto [i, j] = it->first;
    if (i > j || j >= n) throw std::invalid_argument("bracket entries are indexed by i <= j < n");
    check_shape(it->second, "bracket entry");
    if (i == j && !signature().odd(i) && !it->second.is_zero())
      throw std::invalid_argument("bracket {" + signature()[i].name + "," + signature()[i].name +
                                  "} must vanish for an even generator");
    if (it->second.is_zero())
      it = bracket_.entries.erase(it);
    else
      ++it;
  }
  for (const auto& d : differential_) check_shape(d, "differential entry");

  const FreeAlgebra fa(signature());
  for (auto& s : ideal) {
    check_shape(s, "ideal generator");
    if (s.is_zero()) throw std::invalid_argument("ideal generator is zero");
    const Scalar lead = fa.embed(s).leading_coefficient();
    ideal_.push_back(s * Scalar(1 / lead));
  }
}

bool bracket_degree_fits(int got, int expected) { return got <= expected && (expected - got) % 2 == 0; }

bool Presentation::graded() const {
  const Signature& sig = signature();
  for (const auto& [key, f] : bracket_.entries) {
    auto d = ring_.internal_degree(f);
    if (!d || *d != sig.degree(key.first) + sig.degree(key.second) + sig.bracket_degree()) return false;
  }
  return true;
}

Presentation Presentation::without_ideal() const { return with_ideal({}); }

Presentation Presentation::with_ideal(std::vector<Polynomial> ideal) const {
  return Presentation(signature(), bracket_, differential_, std::move(ideal));
}

Polynomial Presentation::generator_bracket(std::size_t i, std::size_t j) const {
  if (i <= j) {
    auto it = bracket_.entries.find({i, j});
    return it == bracket_.entries.end() ? Polynomial{} : it->second;
  }
  Polynomial f = generator_bracket(j, i);
  return f * Scalar(-koszul_sign(signature().degree(i), signature().degree(j)));
}

Polynomial Presentation::bracket_monomials(const CMonomial& u, const CMonomial& v) const {
  if (u.is_unit() || v.is_unit()) return {};
  if (v.length() > 1) {
    // {u, x_j v'} = {u, x_j} v' + (-1)^{|u||x_j|} x_j {u, v'}
    auto [j, rest] = split_first(v);
    const CMonomial xj = CMonomial::generator(rank(), j);
    Polynomial r = ring_.mul(bracket_monomials(u, xj), Polynomial::monomial(rest));
    Polynomial tail = ring_.mul(Polynomial::monomial(xj), bracket_monomials(u, rest));
    tail *= Scalar(koszul_sign(ring_.degree(u), signature().degree(j)));
    return r + tail;
  }
  auto [j, none] = split_first(v);
  if (u.length() == 1) {
    auto [i, unit] = split_first(u);
    return generator_bracket(i, j);
  }
  // {x_i u', c} = x_i {u', c} + (-1)^{|u'||c|} {x_i, c} u'
  auto [i, rest] = split_first(u);
  const CMonomial xi = CMonomial::generator(rank(), i);
  Polynomial r = ring_.mul(Polynomial::monomial(xi), bracket_monomials(rest, v));
  Polynomial tail = ring_.mul(generator_bracket(i, j), Polynomial::monomial(rest));
  tail *= Scalar(koszul_sign(ring_.degree(rest), signature().degree(j)));
  return r + tail;
}

Polynomial Presentation::bracket(const Polynomial& f, const Polynomial& g) const {
  Polynomial r;
  for (const auto& [u, a] : f.terms())
    for (const auto& [v, b] : g.terms()) r += bracket_monomials(u, v) * (a * b);
  return r;
}

Polynomial Presentation::differential_monomial(const CMonomial& u) const {
  if (u.is_unit()) return {};
  // d(x_i u') = d(x_i) u' + (-1)^{|x_i|} x_i d(u')
  auto [i, rest] = split_first(u);
  Polynomial r = ring_.mul(differential_[i], Polynomial::monomial(rest));
  Polynomial tail = ring_.mul(ring_.gen(i), differential_monomial(rest));
  if (signature().odd(i)) tail = -tail;
  return r + tail;
}

Polynomial Presentation::differential(const Polynomial& f) const {
  Polynomial r;
  for (const auto& [u, a] : f.terms()) r += differential_monomial(u) * a;
  return r;
}

Polynomial Presentation::anti_differential_monomial(std::size_t alpha, const CMonomial& u) const {
  if (u.is_unit()) return {};
  // psi(x_i u') = x_i psi(u') + (-1)^{|x_i||u'|} u' psi(x_i)
  auto [i, rest] = split_first(u);
  Polynomial r = ring_.mul(ring_.gen(i), anti_differential_monomial(alpha, rest));
  if (i == alpha) {
    Polynomial tail = Polynomial::monomial(rest);
    tail *= Scalar(koszul_sign(signature().degree(i), ring_.degree(rest)));
    r += tail;
  }
  return r;
}

Polynomial Presentation::anti_differential(std::size_t alpha, const Polynomial& f) const {
  if (alpha >= rank()) throw std::out_of_range("anti_differential: generator index out of range");
  Polynomial r;
  for (const auto& [u, a] : f.terms()) r += anti_differential_monomial(alpha, u) * a;
  return r;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Warn: return "WARN";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

bool ValidationReport::ok() const {
  return std::none_of(outcomes.begin(), outcomes.end(),
                      [](const CheckOutcome& o) { return o.status == CheckStatus::Fail; });
}

std::vector<CheckOutcome> ValidationReport::failures() const {
  std::vector<CheckOutcome> r;
  for (const auto& o : outcomes)
    if (o.status == CheckStatus::Fail) r.push_back(o);
  return r;
}

const CheckOutcome* ValidationReport::failure(std::string_view check) const {
  for (const auto& o : outcomes)
    if (o.status == CheckStatus::Fail && o.check == check) return &o;
  return nullptr;
}

namespace {

class ReportBuilder {
 public:
  void fail(std::string check, std::string witness, std::string detail) {
    failed_.insert(check);
    out_.push_back({std::move(check), CheckStatus::Fail, std::move(witness), std::move(detail)});
  }
  void note(std::string check, CheckStatus status, std::string witness, std::string detail) {
    out_.push_back({std::move(check), status, std::move(witness), std::move(detail)});
  }
  void ran(const std::string& check) { ran_.insert(check); }

  ValidationReport finish() {
    for (const auto& c : ran_)
      if (!failed_.count(c)) out_.push_back({c, CheckStatus::Pass, "", ""});
    std::stable_sort(out_.begin(), out_.end(), [](const CheckOutcome& a, const CheckOutcome& b) {
      return std::tie(a.check, a.witness) < std::tie(b.check, b.witness);
    });
    return {std::move(out_)};
  }

 private:
  std::vector<CheckOutcome> out_;
  std::set<std::string> ran_, failed_;
};

}  // namespace

ValidationReport validate(const Presentation& pres) {
  const Signature& sig = pres.signature();
  const GradedRing& ring = pres.ring();
  const std::size_t n = pres.rank();
  const int bdeg = pres.bracket_degree();
  ReportBuilder rb;

  if (n == 0) {
    rb.fail("generators", "", "no generators declared");
    return rb.finish();
  }

  // (a) homogeneity of the tables
  rb.ran("homogeneity");
  auto expect_degree = [&](const Polynomial& p, int want, const std::string& witness, bool filtered = false) {
    if (p.is_zero()) return;
    if (!ring.is_homogeneous(p)) {
      rb.fail("homogeneity", witness, "inhomogeneous entry " + to_string(sig, p));
      return;
    }
    const int got = *ring.internal_degree(p);
    if (got != want && !(filtered && bracket_degree_fits(got, want)))
      rb.fail("homogeneity", witness,
              "degree " + std::to_string(got) + " but expected " + std::to_string(want));
  };
  for (const auto& [key, f] : pres.bracket_table().entries)
    expect_degree(f, sig.degree(key.first) + sig.degree(key.second) + bdeg,
                  "bracket" + pair_witness(sig, key.first, key.second), true);
  for (std::size_t i = 0; i < n; ++i)
    expect_degree(pres.differential_table()[i], sig.degree(i) + 1, "d(" + sig[i].name + ")");
  bool ideal_homogeneous = true;
  for (const auto& s : pres.ideal())
    if (!ring.is_homogeneous(s)) {
      ideal_homogeneous = false;
      rb.fail("homogeneity", "ideal " + to_string(sig, s), "ideal generators must be homogeneous");
    }

  // (b) graded Jacobi identity on generator triples
  rb.ran("jacobi");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        const Polynomial xi = ring.gen(i), xj = ring.gen(j), xk = ring.gen(k);
        Polynomial lhs = pres.bracket(xi, pres.bracket(xj, xk));
        Polynomial rhs = pres.bracket(pres.bracket(xi, xj), xk) +
                         pres.bracket(xj, pres.bracket(xi, xk)) *
                             Scalar(koszul_sign(sig.degree(i), sig.degree(j)));
        if (lhs != rhs)
          rb.fail("jacobi", triple_witness(sig, i, j, k),
                  "defect " + to_string(sig, lhs - rhs));
      }

  // Random monomial triples, only meaningful for a degree-0 bracket.
  if (bdeg == 0 && sig.positively_graded()) {
    rb.ran("jacobi-monomials");
    std::mt19937_64 rng(0x5eed);
    std::vector<CMonomial> pool;
    for (int d = 1; d <= 2 * std::max(1, sig.degree(0)) + 4 && pool.size() < 40; ++d)
      for (auto& m : ring.monomials_of_degree(d)) pool.push_back(m);
    for (int t = 0; t < 12 && !pool.empty(); ++t) {
      const CMonomial& a = pool[rng() % pool.size()];
      const CMonomial& b = pool[rng() % pool.size()];
      const CMonomial& c = pool[rng() % pool.size()];
      const Polynomial pa = Polynomial::monomial(a), pb = Polynomial::monomial(b),
                       pc = Polynomial::monomial(c);
      Polynomial lhs = pres.bracket(pa, pres.bracket(pb, pc));
      Polynomial rhs = pres.bracket(pres.bracket(pa, pb), pc) +
                       pres.bracket(pb, pres.bracket(pa, pc)) *
                           Scalar(koszul_sign(ring.degree(a), ring.degree(b)));
      if (lhs != rhs)
        rb.fail("jacobi-monomials",
                "(" + to_string(sig, a) + "," + to_string(sig, b) + "," + to_string(sig, c) + ")",
                "defect " + to_string(sig, lhs - rhs));
    }
  }

  // (c) d o d = 0
  rb.ran("d-squared");
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial dd = pres.differential(pres.differential_table()[i]);
    if (!dd.is_zero()) rb.fail("d-squared", "(" + sig[i].name + ")", "d(d(x)) = " + to_string(sig, dd));
  }

  // (d) d{x_i,x_j} = {d x_i, x_j} + (-1)^{|x_i|} {x_i, d x_j}
  rb.ran("compatibility");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Polynomial xi = ring.gen(i), xj = ring.gen(j);
      Polynomial lhs = pres.differential(pres.generator_bracket(i, j));
      Polynomial rhs = pres.bracket(pres.differential_table()[i], xj);
      Polynomial second = pres.bracket(xi, pres.differential_table()[j]);
      if (sig.odd(i)) second = -second;
      rhs += second;
      if (lhs != rhs)
        rb.fail("compatibility", pair_witness(sig, i, j), "defect " + to_string(sig, lhs - rhs));
    }

  // (e) d(I) and {x_i, I} inside I
  if (!pres.ideal().empty()) {
    if (!sig.positively_graded() || !ideal_homogeneous) {
      rb.note("ideal-stability", CheckStatus::Skip, "",
              "membership oracle needs positive degrees and a homogeneous ideal");
    } else {
      rb.ran("ideal-stability");
      TruncatedIdeal ideal(ring, pres.ideal());
      for (const auto& s : pres.ideal()) {
        const std::string name = to_string(sig, s);
        Polynomial ds = pres.differential(s);
        if (!ideal.contains(ds))
          rb.fail("ideal-stability", "d(" + name + ")", to_string(sig, ds) + " is not in I");
        for (std::size_t i = 0; i < n; ++i) {
          Polynomial b = pres.bracket(ring.gen(i), s);
          if (!ideal.contains(b))
            rb.fail("ideal-stability", "{" + sig[i].name + "," + name + "}",
                    to_string(sig, b) + " is not in I");
        }
      }
    }
  }

  // Sign formulas are the degree-0 ones; flag where that matters.
  if (bdeg != 0)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (sig.odd(i) && sig.odd(j))
          rb.note("sign-convention", CheckStatus::Warn, pair_witness(sig, i, j),
                  "bracket degree " + std::to_string(bdeg) +
                      " with an odd crossing product; degree-0 signs are used");

  return rb.finish();
}

namespace {

std::string summarize(const ValidationReport& r) {
  std::ostringstream os;
  os << "presentation failed validation:";
  for (const auto& o : r.failures()) os << " [" << o.check << " " << o.witness << ": " << o.detail << "]";
  return os.str();
}

}  // namespace

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error(summarize(report)), report_(std::move(report)) {}

ValidatedPresentation ValidatedPresentation::from(Presentation pres) {
  ValidationReport report = validate(pres);
  if (!report.ok()) throw ValidationError(std::move(report));
  return ValidatedPresentation(std::make_shared<const Presentation>(std::move(pres)), std::move(report));
}

TruncatedIdeal::TruncatedIdeal(GradedRing ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  if (!ring_.signature().positively_graded())
    throw std::domain_error("truncated ideal membership needs strictly positive generator degrees");
  for (const auto& g : generators_)
    if (!g.is_zero() && !ring_.is_homogeneous(g))
      throw std::domain_error("truncated ideal membership needs homogeneous generators");
}

EchelonBasis<CMonomial>& TruncatedIdeal::component(int degree) {
  auto it = components_.find(degree);
  if (it != components_.end()) return it->second;
  EchelonBasis<CMonomial> basis;
  for (const auto& g : generators_) {
    if (g.is_zero()) continue;
    const int dg = *ring_.internal_degree(g);
    if (dg > degree) continue;
    for (const auto& m : ring_.monomials_of_degree(degree - dg))
      basis.insert(ring_.mul(Polynomial::monomial(m), g).terms());
  }
  return components_.emplace(degree, std::move(basis)).first->second;
}

bool TruncatedIdeal::contains(const Polynomial& p) {
  if (p.is_zero()) return true;
  if (!ring_.is_homogeneous(p)) {
    // Homogeneous ideals contain a polynomial iff they contain each component.
    std::map<int, Polynomial> parts;
    for (const auto& [m, c] : p.terms()) parts[ring_.degree(m)].add_term(m, c);
    for (auto& [d, part] : parts)
      if (!contains(part)) return false;
    return true;
  }
  return component(*ring_.internal_degree(p)).contains(p.terms());
}

std::size_t TruncatedIdeal::dimension(int degree) { return component(degree).rank(); }

}  // namespace dgenv
