#include "dgenv/analysis.hpp"

#include "dgenv/format.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dgenv {

namespace {

using Span = EchelonBasis<Word, WordOrder>;

// Adds the classes of b*p for every basis word b (left ideal generators).
void add_left_multiples(QuotientOracle& oracle, const NCPolynomial& p, int degree, Span& span,
                        std::vector<QuotientOracle::Coords>* keep = nullptr) {
  const int dp = oracle.top_degree(p);
  if (dp > degree) return;
  const NCPolynomial ph = oracle.homogenize(p, dp);
  for (const Word& b : oracle.basis(degree - dp)) {
    auto v = oracle.coords(left_multiply(b, ph));
    if (keep) keep->push_back(v);
    span.insert(std::move(v));
  }
}

// Adds the classes of a*p*c for basis words a, c.
void add_two_sided_multiples(QuotientOracle& oracle, const NCPolynomial& p, int degree, Span& span) {
  const int dp = oracle.top_degree(p);
  const NCPolynomial ph = oracle.homogenize(p, dp);
  for (int da = 0; da + dp <= degree; ++da)
    for (const Word& a : oracle.basis(da))
      for (const Word& c : oracle.basis(degree - dp - da)) span.insert(oracle.coords(sandwich(a, ph, c)));
}

// Monomials of R living in the degree-D piece: one degree, or all lower
// ones too when the oracle is filtered.
std::vector<CMonomial> piece_monomials(const GradedRing& ring, const QuotientOracle& oracle, int degree) {
  if (!oracle.filtered()) return ring.monomials_of_degree(degree);
  std::vector<CMonomial> out;
  for (int d = 0; d <= degree; ++d)
    for (auto& m : ring.monomials_of_degree(d)) out.push_back(std::move(m));
  return out;
}

}  // namespace

std::vector<IntersectionRow> left_ideal_intersection(const Presentation& pres, int max_degree) {
  const Presentation base = pres.without_ideal();
  QuotientOracle oracle = QuotientOracle::enveloping(base);
  const FreeAlgebra& fa = oracle.algebra();
  const GradedRing& ring = pres.ring();
  TruncatedIdeal ideal(ring, pres.ideal());

  std::vector<IntersectionRow> rows;
  std::size_t ideal_below = 0;
  for (int d = 0; d <= max_degree; ++d) {
    Span left, xs, sum;
    std::vector<QuotientOracle::Coords> left_vectors;
    for (const auto& s : pres.ideal()) add_left_multiples(oracle, fa.embed(s), d, left, &left_vectors);
    for (const auto& m : piece_monomials(ring, oracle, d)) {
      auto v = oracle.coords(NCPolynomial::word(fa.embed(m)), d);
      xs.insert(v);
      sum.insert(std::move(v));
    }
    for (auto& v : left_vectors) sum.insert(std::move(v));

    bool contains = true;
    for (const auto& s : pres.ideal()) {
      const int ds = *ring.internal_degree(s);
      if (ds > d) continue;
      for (const auto& m : piece_monomials(ring, oracle, d - ds))
        if (!left.contains(oracle.coords(fa.embed(ring.mul(Polynomial::monomial(m), s)), d))) contains = false;
    }
    // The filtered piece of I is everything up to degree d.
    std::size_t ideal_dim = ideal.dimension(d);
    if (oracle.filtered()) ideal_dim = ideal_below += ideal_dim;
    rows.push_back({d, ideal_dim, left.rank(), left.rank() + xs.rank() - sum.rank(), contains});
  }
  return rows;
}

UnitExclusion unit_exclusion(const Presentation& base, const std::vector<Polynomial>& m,
                             const std::vector<Polynomial>& q, int max_degree) {
  const Presentation r = base.without_ideal();
  QuotientOracle oracle = QuotientOracle::enveloping(r);
  const FreeAlgebra& fa = oracle.algebra();
  UnitExclusion out;
  for (int d = 0; d <= max_degree; ++d) {
    Span span;
    for (const auto& g : m)
      if (!g.is_zero()) add_left_multiples(oracle, fa.embed(g), d, span);
    for (const auto& g : q) {
      const NCPolynomial hg = psi_hat(r, g);
      if (!hg.is_zero()) add_two_sided_multiples(oracle, hg, d, span);
    }
    out.span_dims.push_back(span.rank());
    if (d == 0) out.unit_in_span = span.contains(oracle.coords(NCPolynomial::one(), 0));
  }
  return out;
}

std::vector<RouteRow> two_route_dimensions(const Presentation& pres, int max_degree) {
  QuotientOracle direct = QuotientOracle::enveloping(pres);
  const Presentation base = pres.without_ideal();
  QuotientOracle oracle = QuotientOracle::enveloping(base);
  const FreeAlgebra& fa = oracle.algebra();
  std::vector<RouteRow> rows;
  for (int d = 0; d <= max_degree; ++d) {
    Span span;
    for (const auto& s : pres.ideal()) {
      add_left_multiples(oracle, fa.embed(s), d, span);
      const NCPolynomial hs = psi_hat(base, s);
      if (!hs.is_zero()) add_two_sided_multiples(oracle, hs, d, span);
    }
    rows.push_back({d, direct.piece_dimension(d), oracle.piece_dimension(d) - span.rank()});
  }
  return rows;
}

bool Adjudication::agrees() const {
  return witnesses_in_ideal &&
         std::all_of(rows.begin(), rows.end(), [](const AdjudicationRow& r) { return r.ok(); });
}

Adjudication adjudicate(const EnvelopingAlgebra& env, int max_degree) {
  const Presentation& pres = env.presentation();
  const Signature& sig = pres.signature();
  const FreeAlgebra& fa = env.algebra();
  Adjudication out;

  const RuleSystem naive = quotient_rules(pres);
  out.naive_compositions = naive.compositions();
  QuotientOracle oracle = QuotientOracle::enveloping(pres);

  const auto naive_words = naive.standard_monomials(max_degree);
  const auto completed_words = env.rules().standard_monomials(max_degree);
  std::map<int, std::vector<NCPolynomial>> completed_by_degree;
  std::map<int, std::size_t> naive_count;
  for (const auto& w : completed_words) completed_by_degree[fa.degree(w)].push_back(NCPolynomial::word(w));
  for (const auto& w : naive_words) ++naive_count[fa.degree(w)];
  std::vector<NCPolynomial> lower;
  for (int d = 0; d <= max_degree; ++d) {
    const auto& ws = completed_by_degree[d];
    std::vector<NCPolynomial> piece = ws;
    if (oracle.filtered()) {
      lower.insert(lower.end(), ws.begin(), ws.end());
      piece = lower;
    }
    out.rows.push_back({d, oracle.dimension(d), naive_count[d], ws.size(), oracle.rank(piece, d) == piece.size()});
  }
  const std::set<Word> completed_set(completed_words.begin(), completed_words.end());
  for (const auto& w : naive_words)
    if (!completed_set.count(w)) out.spurious.push_back(w);

  for (const auto& r : env.rules().rules()) {
    if (r.origin != RuleOrigin::Completion || !r.provenance) continue;
    const Provenance& pv = *r.provenance;
    const RewriteRule* p = env.rules().rule_for(pv.p);
    const RewriteRule* q = env.rules().rule_for(pv.q);
    std::ostringstream os;
    os << to_string(sig, r.lead) << " -> " << to_string(sig, r.tail) << "  from " << to_string(pv.kind)
       << " at " << to_string(sig, pv.w) << ": ";
    auto paren = [&](const NCPolynomial& x) { return "(" + to_string(sig, x) + ")"; };
    auto word_or_empty = [&](const Word& w, bool left) {
      return w.empty() ? std::string{} : left ? to_string(sig, w) + "*" : "*" + to_string(sig, w);
    };
    if (p && q) {
      NCPolynomial value;
      if (pv.kind == CompositionKind::Intersection) {
        value = right_multiply(p->relation(), pv.b) - left_multiply(pv.a, q->relation());
        os << paren(p->relation()) << word_or_empty(pv.b, false) << " - " << word_or_empty(pv.a, true)
           << paren(q->relation());
      } else {
        value = p->relation() - sandwich(pv.a, q->relation(), pv.b);
        os << paren(p->relation()) << " - " << word_or_empty(pv.a, true) << paren(q->relation())
           << word_or_empty(pv.b, false);
      }
      os << " = " << to_string(sig, value);
    }
    bool member = true;
    if (fa.degree(r.lead) <= max_degree) member = oracle.in_ideal(r.relation());
    if (!member) out.witnesses_in_ideal = false;
    os << (member ? "" : "  [not in J]");
    out.witnesses.push_back(os.str());
  }
  return out;
}

std::string to_text(const Signature& sig, const Adjudication& a) {
  std::ostringstream os;
  std::size_t open = 0;
  for (const auto& e : a.naive_compositions.entries)
    if (!e.reduced.is_zero()) ++open;
  os << "uncompleted rules: " << (open == 0 ? "closed" : "not closed") << ", " << open << " of "
     << a.naive_compositions.entries.size() << " compositions nonzero\n";
  for (const auto& e : a.naive_compositions.entries)
    if (!e.reduced.is_zero())
      os << "  " << to_string(e.kind) << " (" << to_string(sig, e.p) << ", " << to_string(sig, e.q) << ") at "
         << to_string(sig, e.w) << " => " << to_string(sig, e.reduced) << '\n';
  os << "degree\toracle\tnaive\tcompleted\tverdict\n";
  for (const auto& r : a.rows)
    os << r.degree << '\t' << r.oracle << '\t' << r.naive << '\t' << r.completed << '\t'
       << (r.ok() ? "OK" : "MISMATCH") << '\n';
  os << "completion rules:" << (a.witnesses.empty() ? " none" : "") << '\n';
  for (const auto& w : a.witnesses) os << "  " << w << '\n';
  os << "standard before completion but zero in the quotient:";
  if (a.spurious.empty()) os << " none";
  for (const auto& w : a.spurious) os << ' ' << to_string(sig, w);
  os << '\n';
  os << "verdict: " << (a.agrees() ? "completed basis agrees with the oracle" : "DISAGREEMENT") << '\n';
  return os.str();
}

}  // namespace dgenv
