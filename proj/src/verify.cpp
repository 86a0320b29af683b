#include "dgenv/verify.hpp"

#include "dgenv/format.hpp"

#include <functional>
#include <sstream>

namespace dgenv {

namespace {

int uniform(Rng& rng, int lo, int hi) {
  if (hi < lo) return lo;
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Scalar sign_of(long d) { return Scalar(d % 2 != 0 ? -1 : 1); }

// Returned by a case body when no input of the required shape was drawn.
const std::string kSkip = "\x1f";

// Runs `body` until `cases` inputs were checked (or 4x that many attempts).
// The body returns an empty string on success, kSkip, or a description of
// the mismatch.
SuiteResult run_suite(std::string name, std::size_t cases, const std::function<std::string(std::size_t)>& body) {
  SuiteResult r{std::move(name), 0, 0, {}};
  for (std::size_t attempt = 0; r.cases < cases && attempt < 4 * cases; ++attempt) {
    std::string msg = body(attempt);
    if (msg == kSkip) continue;
    ++r.cases;
    if (msg.empty()) continue;
    if (r.failures++ == 0) r.first_failure = std::move(msg);
  }
  return r;
}

// A nonzero random homogeneous polynomial with degree in [lo, hi].
std::optional<std::pair<Polynomial, int>> draw(const GradedRing& ring, int lo, int hi, Rng& rng,
                                                bool monomial = false) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    const int d = uniform(rng, std::max(lo, 1), hi);
    if (d < 1 || d > hi) return std::nullopt;
    if (monomial) {
      if (auto m = random_monomial(ring, d, rng)) return std::make_pair(Polynomial::monomial(*m), d);
      continue;
    }
    Polynomial p = random_homogeneous(ring, d, rng);
    if (!p.is_zero()) return std::make_pair(std::move(p), d);
  }
  return std::nullopt;
}

std::string mismatch(const Signature& sig, const Polynomial& input, const std::string& what) {
  return "f = " + to_string(sig, input) + ": " + what;
}

}  // namespace

std::vector<SuiteResult> ring_suites(const Presentation& pres, const SuiteOptions& opt) {
  const Signature& sig = pres.signature();
  const GradedRing& ring = pres.ring();
  const std::size_t n = pres.rank();
  Rng rng(opt.seed);
  std::vector<SuiteResult> out;

  out.push_back(run_suite("psi-d-commutator", opt.cases, [&](std::size_t) -> std::string {
    auto f = draw(ring, 1, opt.max_degree, rng);
    if (!f) return kSkip;
    const std::size_t a = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
    Polynomial lhs = pres.anti_differential(a, pres.differential(f->first)) -
                     pres.differential(pres.anti_differential(a, f->first));
    for (std::size_t b = 0; b < n; ++b) {
      const Polynomial pb = pres.anti_differential(b, f->first);
      lhs -= ring.mul(pb, pres.anti_differential(a, pres.differential_table()[b])) *
             sign_of(f->second - sig.degree(b));
    }
    return lhs.is_zero() ? std::string{} : mismatch(sig, f->first, "defect " + to_string(sig, lhs));
  }));

  out.push_back(run_suite("bracket-psi-expansion", opt.cases, [&](std::size_t) -> std::string {
    auto f = draw(ring, 1, std::max(1, opt.max_degree / 2), rng);
    auto g = draw(ring, 1, std::max(1, opt.max_degree / 2), rng);
    if (!f || !g) return kSkip;
    Polynomial rhs;
    for (std::size_t a = 0; a < n; ++a)
      rhs += ring.mul(pres.anti_differential(a, f->first), pres.bracket(ring.gen(a), g->first));
    const Polynomial lhs = pres.bracket(f->first, g->first);
    return lhs == rhs ? std::string{}
                      : mismatch(sig, f->first, "g = " + to_string(sig, g->first) + ", defect " +
                                                    to_string(sig, lhs - rhs));
  }));

  if (pres.bracket_degree() == 0)
    out.push_back(run_suite("antisymmetry", opt.cases, [&](std::size_t) -> std::string {
      auto f = draw(ring, 1, std::max(1, opt.max_degree / 2), rng);
      auto g = draw(ring, 1, std::max(1, opt.max_degree / 2), rng);
      if (!f || !g) return kSkip;
      const Polynomial lhs = pres.bracket(f->first, g->first);
      const Polynomial rhs = pres.bracket(g->first, f->first) * Scalar(-koszul_sign(f->second, g->second));
      return lhs == rhs ? std::string{} : mismatch(sig, f->first, "g = " + to_string(sig, g->first));
    }));

  out.push_back(run_suite("psi-swap", opt.cases, [&](std::size_t) -> std::string {
    auto f = draw(ring, 1, opt.max_degree, rng, true);
    if (!f) return kSkip;
    const std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
    for (std::size_t s = 0; s < n; ++s) {
      Polynomial lhs, rhs;
      for (std::size_t t = 0; t < n; ++t) {
        const Polynomial fit = pres.generator_bracket(i, t);
        lhs += ring.mul(pres.anti_differential(s, pres.anti_differential(t, f->first)), fit) *
               Scalar(koszul_sign(sig.degree(s), sig.degree(t)));
        rhs += ring.mul(pres.anti_differential(t, pres.anti_differential(s, f->first)), fit);
      }
      if (lhs != rhs) return mismatch(sig, f->first, "coefficient of " + sig[s].name + "' differs");
    }
    return {};
  }));
  return out;
}

std::vector<SuiteResult> enveloping_suites(const EnvelopingAlgebra& env, const SuiteOptions& opt) {
  const Presentation& pres = env.presentation();
  const Signature& sig = pres.signature();
  const GradedRing& ring = pres.ring();
  const FreeAlgebra& fa = env.algebra();
  const std::size_t n = pres.rank();
  const int bd = pres.bracket_degree();
  Rng rng(opt.seed + 1);
  std::vector<SuiteResult> out;

  auto nf = [&](const NCPolynomial& p) { return env.nf(p); };
  auto Y = [&](std::size_t i) { return NCPolynomial::word({Letter::y(i)}); };
  auto X = [&](std::size_t i) { return NCPolynomial::word({Letter::x(i)}); };
  auto pick = [&]() { return static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1)); };
  auto report = [&](const Polynomial& f, const NCPolynomial& lhs, const NCPolynomial& rhs) {
    return lhs == rhs ? std::string{}
                      : mismatch(sig, f, to_string(sig, lhs) + " != " + to_string(sig, rhs));
  };

  out.push_back(run_suite("y-past-f", opt.cases, [&](std::size_t) -> std::string {
    const std::size_t i = pick();
    auto f = draw(ring, 1, opt.max_degree - sig.degree(i) - bd, rng, true);
    if (!f) return kSkip;
    const NCPolynomial ef = fa.embed(f->first);
    const NCPolynomial lhs = nf(Y(i) * ef);
    const NCPolynomial rhs = nf(ef * Y(i)) * Scalar(koszul_sign(sig.degree(i), f->second)) +
                             nf(fa.embed(pres.bracket(ring.gen(i), f->first)));
    return report(f->first, lhs, rhs);
  }));

  out.push_back(run_suite("psi-past-x", opt.cases, [&](std::size_t) -> std::string {
    const std::size_t i = pick();
    auto f = draw(ring, 1, opt.max_degree - sig.degree(i) - bd, rng, true);
    if (!f) return kSkip;
    const NCPolynomial pf = psi_hat(pres, f->first);
    const NCPolynomial lhs = nf(pf * X(i));
    const NCPolynomial rhs = nf(X(i) * pf) * Scalar(koszul_sign(sig.degree(i), f->second)) +
                             nf(fa.embed(pres.bracket(f->first, ring.gen(i))));
    return report(f->first, lhs, rhs);
  }));

  out.push_back(run_suite("y-past-psi", opt.cases, [&](std::size_t) -> std::string {
    const std::size_t i = pick();
    auto f = draw(ring, 1, opt.max_degree - sig.degree(i) - 2 * bd, rng, true);
    if (!f) return kSkip;
    const NCPolynomial pf = psi_hat(pres, f->first);
    const NCPolynomial lhs = nf(Y(i) * pf);
    const NCPolynomial rhs = nf(pf * Y(i)) * Scalar(koszul_sign(sig.degree(i), f->second)) +
                             nf(psi_hat(pres, pres.bracket(ring.gen(i), f->first)));
    return report(f->first, lhs, rhs);
  }));

  // The same commutation written out as the two double sums.
  out.push_back(run_suite("y-past-psi-expanded", opt.cases, [&](std::size_t) -> std::string {
    const std::size_t i = pick();
    auto f = draw(ring, 1, opt.max_degree - sig.degree(i) - 2 * bd, rng, true);
    if (!f) return kSkip;
    const NCPolynomial pf = psi_hat(pres, f->first);
    NCPolynomial rhs = pf * Y(i) * Scalar(koszul_sign(sig.degree(i), f->second));
    for (std::size_t s = 0; s < n; ++s) {
      const Polynomial ps = pres.anti_differential(s, f->first);
      const int dps = f->second - sig.degree(s);
      for (std::size_t t = 0; t < n; ++t) {
        const Polynomial first =
            ring.mul(ps, pres.anti_differential(t, pres.generator_bracket(i, s))) *
            Scalar(koszul_sign(sig.degree(i), dps));
        rhs += fa.embed(first) * Y(t);
        const Polynomial pts = pres.anti_differential(t, ps);
        const Polynomial second = ring.mul(pts, pres.generator_bracket(i, t)) *
                                  Scalar(koszul_sign(sig.degree(i), dps - sig.degree(t)));
        rhs += fa.embed(second) * Y(s);
      }
    }
    return report(f->first, nf(Y(i) * pf), nf(rhs));
  }));

  auto pair_draw = [&](int extra) -> std::optional<std::pair<std::pair<Polynomial, int>, std::pair<Polynomial, int>>> {
    const int budget = opt.max_degree - extra;
    if (budget < 2) return std::nullopt;
    auto f = draw(ring, 1, budget - 1, rng);
    if (!f) return std::nullopt;
    auto g = draw(ring, 1, budget - f->second, rng);
    if (!g) return std::nullopt;
    return std::make_pair(*f, *g);
  };

  out.push_back(run_suite("m-h-structure", opt.cases, [&](std::size_t) -> std::string {
    auto fg = pair_draw(2 * bd);
    if (!fg) return kSkip;
    const auto& [f, df] = fg->first;
    const auto& [g, dg] = fg->second;
    const Scalar s = koszul_sign(df, dg);
    const NCPolynomial mf = env.m(f), mg = env.m(g), hf = env.h(f), hg = env.h(g);
    if (auto e = report(f, env.m(pres.bracket(f, g)), nf(hf * mg - (mg * hf) * s)); !e.empty())
      return "bracket via m: " + e;
    if (auto e = report(f, env.h(ring.mul(f, g)), nf(mf * hg + (mg * hf) * s)); !e.empty())
      return "product via h: " + e;
    if (auto e = report(f, env.h(pres.bracket(f, g)), nf(hf * hg - (hg * hf) * s)); !e.empty())
      return "bracket via h: " + e;
    return {};
  }));

  out.push_back(run_suite("m-h-swapped", opt.cases, [&](std::size_t) -> std::string {
    auto fg = pair_draw(2 * bd);
    if (!fg) return kSkip;
    const auto& [f, df] = fg->first;
    const auto& [g, dg] = fg->second;
    const Scalar s = koszul_sign(df, dg);
    const NCPolynomial mf = env.m(f), mg = env.m(g), hf = env.h(f), hg = env.h(g);
    if (auto e = report(f, env.m(pres.bracket(f, g)), nf(mf * hg - (hg * mf) * s)); !e.empty())
      return "bracket via m: " + e;
    if (auto e = report(f, env.h(ring.mul(f, g)), nf(hf * mg + (hg * mf) * s)); !e.empty())
      return "product via h: " + e;
    return {};
  }));

  {
    // Every standard word gets differentiated twice, then random elements.
    const int top = opt.max_degree - 2;
    std::vector<Word> words;
    if (top >= 0 && fa.positively_graded()) words = env.rules().standard_monomials(top);
    out.push_back(run_suite("partial-squared", words.size() + opt.cases, [&](std::size_t c) -> std::string {
      NCPolynomial p;
      if (c < words.size()) {
        p = NCPolynomial::word(words[c]);
      } else {
        if (top < 1) return kSkip;
        p = random_nc_homogeneous(fa, uniform(rng, 1, top), rng);
        if (p.is_zero()) return kSkip;
      }
      const NCPolynomial dd = env.partial(env.partial(p));
      return dd.is_zero() ? std::string{} : to_string(sig, p) + ": " + to_string(sig, dd);
    }));
  }

  out.push_back(run_suite("partial-m-h", opt.cases, [&](std::size_t) -> std::string {
    auto f = draw(ring, 1, opt.max_degree - 1 - bd, rng);
    if (!f) return kSkip;
    const Polynomial df = pres.differential(f->first);
    if (auto e = report(f->first, env.partial(env.m(f->first)), env.m(df)); !e.empty()) return "m: " + e;
    if (auto e = report(f->first, env.partial(env.h(f->first)), env.h(df)); !e.empty()) return "h: " + e;
    return {};
  }));

  out.push_back(run_suite("confluence", opt.cases, [&](std::size_t) -> std::string {
    const int d = uniform(rng, 1, opt.max_degree);
    const NCPolynomial p = random_nc_homogeneous(fa, d, rng);
    const NCPolynomial a = env.rules().normal_form(p, Strategy::LeftmostSmallest);
    const NCPolynomial b = env.rules().normal_form(p, Strategy::RightmostFirst);
    return a == b ? std::string{} : to_string(sig, p) + ": " + to_string(sig, a) + " vs " + to_string(sig, b);
  }));
  return out;
}

SuiteResult closed_form_suite(const EnvelopingAlgebra& env, int max_degree) {
  const Presentation& pres = env.presentation();
  const Signature& sig = pres.signature();
  const std::size_t n = pres.rank();
  std::vector<std::vector<std::uint32_t>> vectors;
  std::vector<std::uint32_t> e(n, 0);
  auto rec = [&](auto&& self, std::size_t k, int left) -> void {
    if (k == n) {
      vectors.push_back(e);
      return;
    }
    for (std::uint32_t x = 0; static_cast<int>(x) * sig.degree(k) <= left; ++x) {
      e[k] = x;
      self(self, k + 1, left - static_cast<int>(x) * sig.degree(k));
    }
    e[k] = 0;
  };
  if (!sig.positively_graded()) return {"closed-form-h", 0, 1, "generator degrees must be positive"};
  rec(rec, 0, max_degree);
  std::size_t k = 0;
  return run_suite("closed-form-h", vectors.size(), [&](std::size_t) -> std::string {
    const auto& v = vectors[k++];
    const CMonomial mono(v);
    const NCPolynomial direct = pres.ring().admissible(mono) ? env.h(Polynomial::monomial(mono)) : NCPolynomial{};
    const NCPolynomial closed = env.nf(env.h_closed_form_raw(v));
    return direct == closed ? std::string{}
                            : to_string(sig, mono) + ": " + to_string(sig, closed) + " != " + to_string(sig, direct);
  });
}

std::vector<SuiteResult> right_form_suites(const EnvelopingAlgebra& env, const SuiteOptions& opt) {
  const Presentation& pres = env.presentation();
  const Signature& sig = pres.signature();
  const FreeAlgebra& fa = env.algebra();
  const std::size_t n = pres.rank();
  Rng rng(opt.seed + 2);
  std::vector<SuiteResult> out;

  auto canonical = [&](const Word& y) {
    for (std::size_t k = 0; k < y.size(); ++k) {
      if (!y[k].is_y()) return false;
      if (k > 0 && (y[k].gen < y[k - 1].gen || (y[k].gen == y[k - 1].gen && sig.odd(y[k].gen)))) return false;
    }
    return true;
  };

  out.push_back(run_suite("right-round-trip", opt.cases, [&](std::size_t) -> std::string {
    const int d = uniform(rng, 1, opt.max_degree);
    const NCPolynomial p = random_nc_homogeneous(fa, d, rng);
    const RightForm r = env.right_normal_form(p);
    for (const auto& [y, a] : r.terms)
      if (!canonical(y)) return to_string(sig, p) + ": non-canonical y-word " + to_string(sig, y);
    const NCPolynomial back = env.nf(env.from_right_form(r));
    const NCPolynomial direct = env.nf(p);
    return back == direct ? std::string{}
                          : to_string(sig, p) + ": " + to_string(sig, back) + " != " + to_string(sig, direct);
  }));

  // Every y-word Y and admissible monomial f with |Y| + |h(f)| <= bound.
  std::vector<std::pair<Word, std::vector<std::uint32_t>>> cases;
  if (sig.positively_graded()) {
    std::vector<Word> ywords;
    std::vector<int> ye(n, 0);
    auto ywalk = [&](auto&& self, std::size_t k, int left) -> void {
      if (k == n) {
        Word w;
        for (std::size_t i = 0; i < n; ++i)
          for (int c = 0; c < ye[i]; ++c) w.push_back(Letter::y(i));
        ywords.push_back(std::move(w));
        return;
      }
      const int d = fa.letter_degree(Letter::y(k));
      const int cap = sig.odd(k) ? 1 : left / d;
      for (int e = 0; e <= cap && e * d <= left; ++e) {
        ye[k] = e;
        self(self, k + 1, left - e * d);
      }
      ye[k] = 0;
    };
    ywalk(ywalk, 0, opt.max_degree);
    for (const Word& y : ywords) {
      const int budget = opt.max_degree - fa.degree(y) - pres.bracket_degree();
      for (int d = 1; d <= budget; ++d)
        for (const auto& m : pres.ring().monomials_of_degree(d)) cases.emplace_back(y, m.exponents);
    }
  }
  std::size_t k = 0;
  out.push_back(run_suite("unit-coefficient", cases.size(), [&](std::size_t) -> std::string {
    const auto& [y, e] = cases[k++];
    const RightForm r = env.right_normal_form(NCPolynomial::word(y) * env.h_closed_form(e));
    const Polynomial c = r.coefficient({});
    return c.is_zero() ? std::string{}
                       : to_string(sig, y) + " * h(" + to_string(sig, CMonomial(e)) + "): coefficient of 1 is " +
                             to_string(sig, c);
  }));
  return out;
}

std::vector<DimensionRow> dimension_table(const EnvelopingAlgebra& env, QuotientOracle& oracle, int max_degree) {
  const FreeAlgebra& fa = env.algebra();
  std::map<int, std::vector<NCPolynomial>> by_degree;
  for (const Word& w : env.rules().standard_monomials(max_degree))
    by_degree[fa.degree(w)].push_back(NCPolynomial::word(w));
  std::vector<DimensionRow> rows;
  std::vector<NCPolynomial> lower;  // filtered pieces contain every lower degree
  for (int d = 0; d <= max_degree; ++d) {
    const auto& words = by_degree[d];
    std::vector<NCPolynomial> piece = words;
    if (oracle.filtered()) {
      lower.insert(lower.end(), words.begin(), words.end());
      piece = lower;
    }
    rows.push_back({d, oracle.dimension(d), words.size(), oracle.rank(piece, d) == piece.size()});
  }
  return rows;
}

std::string to_text(const std::vector<DimensionRow>& rows) {
  std::ostringstream os;
  for (const auto& r : rows)
    os << r.degree << '\t' << r.oracle << '\t' << r.standard << '\t' << (r.ok() ? "OK" : "MISMATCH") << '\n';
  return os.str();
}

}  // namespace dgenv
