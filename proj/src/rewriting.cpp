#include "dgenv/rewriting.hpp"

#include "dgenv/format.hpp"
#include "dgenv/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace dgenv {

const char* to_string(RuleOrigin o) {
  switch (o) {
    case RuleOrigin::BaseX: return "base-x";
    case RuleOrigin::BaseY: return "base-y";
    case RuleOrigin::BaseZ: return "base-z";
    case RuleOrigin::Ideal: return "ideal";
    case RuleOrigin::PsiIdeal: return "psi-ideal";
    case RuleOrigin::Completion: return "completion";
  }
  return "?";
}

const char* to_string(CompositionKind k) {
  return k == CompositionKind::Intersection ? "intersection" : "inclusion";
}

std::string ReductionTrace::to_text(const Signature& sig) const {
  std::ostringstream os;
  for (const auto& s : steps) {
    os << to_string(s.origin) << " at " << s.position << ": " << to_string(sig, s.rewritten) << " by "
       << to_string(sig, s.lead) << " -> ";
    os << (s.result_lead ? to_string(sig, *s.result_lead) : std::string("0")) << '\n';
  }
  return os.str();
}

bool CompositionReport::closed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const CompositionEntry& e) { return e.reduced.is_zero(); });
}

std::string CompositionReport::to_text(const Signature& sig) const {
  std::ostringstream os;
  std::size_t open = 0;
  for (const auto& e : entries) {
    os << to_string(e.kind) << " (" << to_string(sig, e.p) << ", " << to_string(sig, e.q) << ") at "
       << to_string(sig, e.w) << ": " << to_string(sig, e.value) << " => " << to_string(sig, e.reduced)
       << '\n';
    if (!e.reduced.is_zero()) ++open;
  }
  os << entries.size() << " compositions, " << open << " nonzero";
  if (skipped_above_bound) os << ", " << skipped_above_bound << " above the degree bound";
  os << '\n' << (open == 0 ? "closed" : "not closed") << '\n';
  return os.str();
}

RuleSystem::RuleSystem(const RuleSystem& o)
    : fa_(o.fa_), rules_(o.rules_), index_(o.index_), max_lead_length_(o.max_lead_length_) {}

RuleSystem& RuleSystem::operator=(const RuleSystem& o) {
  if (this == &o) return *this;
  fa_ = o.fa_;
  rules_ = o.rules_;
  index_ = o.index_;
  max_lead_length_ = o.max_lead_length_;
  std::lock_guard lock(cache_mutex_);
  cache_.clear();
  return *this;
}

const RewriteRule* RuleSystem::rule_for(const Word& lead) const {
  for (const auto& r : rules_)
    if (r.lead == lead) return &r;
  return nullptr;
}

void RuleSystem::add(RewriteRule rule) {
  if (rule.lead.empty()) throw std::logic_error("rewrite rule with an empty lead");
  if (rule_for(rule.lead))
    throw std::logic_error("duplicate rule lead " + to_string(signature(), rule.lead));
  for (const auto& [w, c] : rule.tail.terms())
    if (!precedes(w, rule.lead))
      throw std::logic_error("tail term " + to_string(signature(), w) + " is not below lead " +
                             to_string(signature(), rule.lead));
  rules_.push_back(std::move(rule));
  std::stable_sort(rules_.begin(), rules_.end(), [](const RewriteRule& a, const RewriteRule& b) {
    if (a.origin != b.origin) return a.origin < b.origin;
    return precedes(a.lead, b.lead);
  });
  rebuild_index();
}

bool RuleSystem::add_relation(const NCPolynomial& p, RuleOrigin origin, std::optional<Provenance> provenance) {
  NCPolynomial r = normal_form(p);
  if (r.is_zero()) return false;
  r = r.make_monic();
  Word lead = r.leading_word();
  NCPolynomial tail = NCPolynomial::word(lead) - r;
  add({std::move(lead), std::move(tail), origin, std::move(provenance)});
  return true;
}

void RuleSystem::rebuild_index() {
  index_.clear();
  max_lead_length_ = 0;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    index_[rules_[i].lead.front()].push_back(i);
    max_lead_length_ = std::max(max_lead_length_, rules_[i].lead.size());
  }
  std::lock_guard lock(cache_mutex_);
  cache_.clear();
}

std::optional<RuleSystem::Match> RuleSystem::find_match(std::span<const Letter> w, Strategy strategy) const {
  std::optional<Match> best;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    auto it = index_.find(w[pos]);
    if (it == index_.end()) continue;
    for (std::size_t idx : it->second) {
      const Word& lead = rules_[idx].lead;
      if (pos + lead.size() > w.size()) continue;
      if (!std::equal(lead.begin(), lead.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) continue;
      const Match m{&rules_[idx], pos};
      if (!best) {
        best = m;
        continue;
      }
      if (strategy == Strategy::LeftmostSmallest) {
        // Positions are visited left to right, so only a smaller lead wins.
        if (precedes(lead, best->rule->lead)) best = m;
      } else {
        if (pos > best->position || (pos == best->position && precedes(lead, best->rule->lead))) best = m;
      }
    }
  }
  return best;
}

bool RuleSystem::is_reducible(std::span<const Letter> w) const {
  return find_match(w, Strategy::LeftmostSmallest).has_value();
}

NCPolynomial RuleSystem::cached_normal_form(const Word& w) const {
  {
    std::lock_guard lock(cache_mutex_);
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
  }
  NCPolynomial r;
  if (auto m = find_match(w, Strategy::LeftmostSmallest)) {
    const Word a(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(m->position));
    const Word b(w.begin() + static_cast<std::ptrdiff_t>(m->position + m->rule->lead.size()), w.end());
    for (const auto& [t, c] : m->rule->tail.terms()) {
      NCPolynomial sub = cached_normal_form(concat(a, t, b));
      sub *= c;
      r += sub;
    }
  } else {
    r = NCPolynomial::word(w);
  }
  std::lock_guard lock(cache_mutex_);
  cache_.emplace(w, r);
  return r;
}

NCPolynomial RuleSystem::normal_form(const Word& w) const { return cached_normal_form(w); }

NCPolynomial RuleSystem::normal_form(const NCPolynomial& p, Strategy strategy, ReductionTrace* trace) const {
  if (strategy == Strategy::LeftmostSmallest && trace == nullptr) {
    NCPolynomial r;
    for (const auto& [w, c] : p.terms()) {
      NCPolynomial sub = cached_normal_form(w);
      sub *= c;
      r += sub;
    }
    return r;
  }
  // Worklist reduction: always rewrite the largest remaining word.
  NCPolynomial work = p, done;
  while (!work.is_zero()) {
    const Word w = work.leading_word();
    const Scalar c = work.leading_coefficient();
    work.add_term(w, -c);
    auto m = find_match(w, strategy);
    if (!m) {
      done.add_term(w, c);
      continue;
    }
    const Word a(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(m->position));
    const Word b(w.begin() + static_cast<std::ptrdiff_t>(m->position + m->rule->lead.size()), w.end());
    work += sandwich(a, m->rule->tail, b) * c;
    if (trace) {
      std::optional<Word> lead;
      NCPolynomial whole = work + done;
      if (!whole.is_zero()) lead = whole.leading_word();
      trace->steps.push_back({m->rule->origin, w, m->rule->lead, m->position, std::move(lead)});
    }
  }
  return done;
}

CompositionReport RuleSystem::compositions(std::optional<int> max_degree) const {
  CompositionReport report;
  std::set<std::tuple<Word, Word, Word, CompositionKind>> seen;
  auto record = [&](const RewriteRule& p, const RewriteRule& q, Word w, Word a, Word b, CompositionKind kind) {
    const Word& lo = precedes(p.lead, q.lead) ? p.lead : q.lead;
    const Word& hi = precedes(p.lead, q.lead) ? q.lead : p.lead;
    if (!seen.emplace(lo, hi, w, kind).second) return;
    if (max_degree && fa_.degree(w) > *max_degree) {
      ++report.skipped_above_bound;
      return;
    }
    NCPolynomial value = kind == CompositionKind::Intersection
                             ? right_multiply(p.relation(), b) - left_multiply(a, q.relation())
                             : p.relation() - sandwich(a, q.relation(), b);
    NCPolynomial reduced = normal_form(value);
    report.entries.push_back(
        {p.lead, q.lead, std::move(w), std::move(a), std::move(b), kind, std::move(value), std::move(reduced)});
  };

  for (const auto& p : rules_)
    for (const auto& q : rules_) {
      const Word& lp = p.lead;
      const Word& lq = q.lead;
      // Intersections: a proper suffix of lead(p) is a proper prefix of lead(q).
      for (std::size_t k = 1; k < std::min(lp.size(), lq.size()); ++k) {
        if (!std::equal(lp.end() - static_cast<std::ptrdiff_t>(k), lp.end(), lq.begin())) continue;
        Word a(lp.begin(), lp.end() - static_cast<std::ptrdiff_t>(k));
        Word b(lq.begin() + static_cast<std::ptrdiff_t>(k), lq.end());
        Word w = concat(lp, b);
        record(p, q, std::move(w), std::move(a), std::move(b), CompositionKind::Intersection);
      }
      // Inclusions: lead(q) sits inside lead(p).
      if (&p == &q) continue;
      for (auto pos = find_subword(lp, lq); pos; pos = find_subword(lp, lq, *pos + 1)) {
        Word a(lp.begin(), lp.begin() + static_cast<std::ptrdiff_t>(*pos));
        Word b(lp.begin() + static_cast<std::ptrdiff_t>(*pos + lq.size()), lp.end());
        record(p, q, lp, std::move(a), std::move(b), CompositionKind::Inclusion);
      }
    }
  return report;
}

bool RuleSystem::is_closed(CompositionReport* report) const {
  CompositionReport r = compositions();
  const bool ok = r.closed();
  if (report) *report = std::move(r);
  return ok;
}

CompletionReport RuleSystem::complete(int bound) {
  if (!fa_.positively_graded())
    throw std::domain_error("completion needs strictly positive letter degrees");
  for (const auto& r : rules_)
    if (fa_.degree(r.lead) > bound)
      throw std::invalid_argument("completion bound " + std::to_string(bound) + " is below the degree of lead " +
                                  to_string(signature(), r.lead));
  CompletionReport out;
  out.bound = bound;
  for (;;) {
    CompositionReport rep = compositions(bound);
    ++out.rounds;
    out.skipped_above_bound = rep.skipped_above_bound;
    bool grew = false;
    for (auto& e : rep.entries) {
      if (e.reduced.is_zero()) continue;
      Provenance prov{e.p, e.q, e.w, e.a, e.b, e.kind};
      if (add_relation(e.reduced, RuleOrigin::Completion, std::move(prov))) grew = true;
    }
    if (!grew) break;
  }
  for (const auto& r : rules_)
    if (r.origin == RuleOrigin::Completion) {
      out.added.push_back(r.lead);
      if (fa_.degree(r.lead) == bound) ++out.new_rules_at_cap;
    }
  return out;
}

std::vector<Word> RuleSystem::standard_monomials(int bound) const {
  if (!fa_.positively_graded())
    throw std::domain_error("standard monomial enumeration needs strictly positive letter degrees");
  const std::size_t n = fa_.rank();
  std::vector<Letter> alphabet;
  for (std::size_t i = 0; i < n; ++i) alphabet.push_back(Letter::x(i));
  for (std::size_t i = 0; i < n; ++i) alphabet.push_back(Letter::y(i));

  std::vector<Word> out;
  Word cur;
  auto rec = [&](auto&& self, std::size_t k, int budget) -> void {
    if (k == alphabet.size()) {
      if (!is_reducible(cur)) out.push_back(cur);
      return;
    }
    const Letter l = alphabet[k];
    const int d = fa_.letter_degree(l);
    const int cap = signature().odd(l.gen) ? 1 : budget / d;
    const std::size_t mark = cur.size();
    for (int e = 0; e <= cap && e * d <= budget; ++e) {
      if (e > 0) cur.push_back(l);
      // Prune as soon as a prefix is reducible; leads never shrink again.
      if (e > 0 && find_match(cur, Strategy::LeftmostSmallest)) break;
      self(self, k + 1, budget - e * d);
    }
    cur.resize(mark);
  };
  rec(rec, 0, bound);
  std::sort(out.begin(), out.end(), WordOrder{});
  return out;
}

RuleSystem base_rules(const Presentation& pres) {
  const Signature& sig = pres.signature();
  const FreeAlgebra fa(sig);
  RuleSystem rs(fa);
  const std::size_t n = pres.rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar s = koszul_sign(sig.degree(i), sig.degree(j));
      const Polynomial f = pres.generator_bracket(i, j);
      if (i > j) {
        rs.add({{Letter::x(i), Letter::x(j)}, NCPolynomial::word({Letter::x(j), Letter::x(i)}, s),
                RuleOrigin::BaseX, std::nullopt});
        rs.add({{Letter::y(i), Letter::y(j)},
                NCPolynomial::word({Letter::y(j), Letter::y(i)}, s) + psi_hat(pres, f), RuleOrigin::BaseY,
                std::nullopt});
      } else if (i == j && sig.odd(i)) {
        rs.add({{Letter::x(i), Letter::x(i)}, {}, RuleOrigin::BaseX, std::nullopt});
        rs.add({{Letter::y(i), Letter::y(i)}, psi_hat(pres, f) * Scalar(1, 2), RuleOrigin::BaseY,
                std::nullopt});
      }
      rs.add({{Letter::y(i), Letter::x(j)}, NCPolynomial::word({Letter::x(j), Letter::y(i)}, s) + fa.embed(f),
              RuleOrigin::BaseZ, std::nullopt});
    }
  return rs;
}

RuleSystem quotient_rules(const Presentation& pres) {
  RuleSystem rs = base_rules(pres);
  const FreeAlgebra& fa = rs.algebra();
  for (const auto& s : pres.ideal()) {
    rs.add_relation(fa.embed(s), RuleOrigin::Ideal);
    rs.add_relation(psi_hat(pres, s), RuleOrigin::PsiIdeal);
  }
  return rs;
}

}  // namespace dgenv
