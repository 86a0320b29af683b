#include "dgenv/enveloping.hpp"

#include "dgenv/format.hpp"

#include <algorithm>
#include <mutex>

namespace dgenv {

Polynomial RightForm::coefficient(const Word& y) const {
  auto it = terms.find(y);
  return it == terms.end() ? Polynomial{} : it->second;
}

void RightForm::add(const Word& y, const Polynomial& a) {
  if (a.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(y, a);
  if (inserted) return;
  it->second += a;
  if (it->second.is_zero()) terms.erase(it);
}

std::string to_string(const Signature& sig, const RightForm& r) {
  if (r.is_zero()) return "0";
  std::string out;
  for (auto it = r.terms.rbegin(); it != r.terms.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (!it->first.empty()) out += to_string(sig, it->first) + "*";
    out += "(" + to_string(sig, it->second) + ")";
  }
  return out;
}

Scalar delta_coefficient(unsigned n, int gen_degree) {
  const long k = n / 2;
  const long sign = gen_degree % 2 != 0 ? -1 : 1;  // (-1)^{(2k-1)d^2}
  return Scalar(n % 2 == 0 ? k + k * sign : k + 1 + k * sign);
}

struct EnvelopingAlgebra::RightCache {
  std::mutex mutex;
  std::map<std::pair<std::size_t, Word>, RightForm> x, y;
};

EnvelopingAlgebra EnvelopingAlgebra::build(const ValidatedPresentation& pres, int complete_to) {
  auto p = std::make_shared<const Presentation>(pres.get());
  EnvelopingAlgebra env(p, quotient_rules(*p));
  env.right_cache_ = std::make_shared<RightCache>();
  const FreeAlgebra& fa = env.algebra();

  if (fa.positively_graded()) {
    for (const auto& r : env.rules_.rules()) complete_to = std::max(complete_to, fa.degree(r.lead));
    env.completion_ = env.rules_.complete(complete_to);
    if (env.completion_.new_rules_at_cap > 0)
      env.warnings_.push_back("completion produced " + std::to_string(env.completion_.new_rules_at_cap) +
                              " rules at the degree bound " + std::to_string(complete_to) +
                              "; higher degrees may need more");
  } else {
    env.warnings_.push_back("completion skipped: some letter has non-positive degree");
  }

  // J must be stable under the differential.
  for (const auto& r : env.rules_.rules()) {
    const NCPolynomial d = env.partial(r.relation());
    if (d.is_zero()) continue;
    const std::string msg = "differential of rule " + to_string(p->signature(), r.lead) +
                            " does not reduce to zero: " + to_string(p->signature(), d);
    if (!fa.positively_graded() || fa.degree(r.lead) + 1 > complete_to)
      env.warnings_.push_back(msg + " (above the completion bound)");
    else
      throw std::logic_error(msg);
  }
  return env;
}

NCPolynomial EnvelopingAlgebra::m(const Polynomial& f) const { return nf(algebra().embed(f)); }

NCPolynomial EnvelopingAlgebra::h(const Polynomial& f) const { return nf(psi_hat(*pres_, f)); }

NCPolynomial EnvelopingAlgebra::partial_raw(const NCPolynomial& p) const {
  const FreeAlgebra& fa = algebra();
  std::vector<NCPolynomial> table_x, table_y;
  for (std::size_t i = 0; i < pres_->rank(); ++i) {
    const Polynomial& d = pres_->differential_table()[i];
    table_x.push_back(fa.embed(d));
    table_y.push_back(psi_hat(*pres_, d));
  }
  NCPolynomial out;
  for (const auto& [w, c] : p.terms()) {
    int prefix_degree = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      const NCPolynomial& dl = w[k].is_x() ? table_x[w[k].gen] : table_y[w[k].gen];
      const Word a(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
      const Word b(w.begin() + static_cast<std::ptrdiff_t>(k + 1), w.end());
      out += sandwich(a, dl, b) * (c * (prefix_degree % 2 != 0 ? -1 : 1));
      prefix_degree += fa.sign_degree(w[k]);
    }
  }
  return out;
}

RightForm EnvelopingAlgebra::times_right(const RightForm& r, const Polynomial& a) const {
  RightForm out;
  for (const auto& [y, b] : r.terms) out.add(y, pres_->ring().mul(b, a));
  return out;
}

RightForm EnvelopingAlgebra::left_times(Letter l, const RightForm& r) const {
  RightForm out;
  for (const auto& [y, a] : r.terms) {
    const RightForm& lp = l.is_x() ? times_x(l.gen, y) : times_y(l.gen, y);
    for (const auto& [y2, b] : times_right(lp, a).terms) out.add(y2, b);
  }
  return out;
}

RightForm EnvelopingAlgebra::left_times(const NCPolynomial& p, const RightForm& r) const {
  RightForm out;
  for (const auto& [w, c] : p.terms()) {
    RightForm acc = r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = left_times(*it, acc);
    for (auto& [y, a] : acc.terms) out.add(y, a * c);
  }
  return out;
}

const RightForm& EnvelopingAlgebra::times_x(std::size_t j, const Word& y) const {
  RightCache& cache = *right_cache_;
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.x.find({j, y}); it != cache.x.end()) return it->second;
  }
  const Signature& sig = signature();
  RightForm out;
  if (y.empty()) {
    out.add({}, pres_->ring().gen(j));
  } else {
    // x_j y_i = s (y_i x_j - f_ij)
    const std::size_t i = y.front().gen;
    const Word rest(y.begin() + 1, y.end());
    const Scalar s = koszul_sign(sig.degree(i), sig.degree(j));
    RightForm unit;
    unit.add(rest, pres_->ring().one());
    for (const auto& [w, a] : left_times(y.front(), times_x(j, rest)).terms) out.add(w, a * s);
    const NCPolynomial f = algebra().embed(pres_->generator_bracket(i, j));
    for (const auto& [w, a] : left_times(f, unit).terms) out.add(w, a * Scalar(-s));
  }
  std::lock_guard lock(cache.mutex);
  return cache.x.emplace(std::make_pair(j, y), std::move(out)).first->second;
}

const RightForm& EnvelopingAlgebra::times_y(std::size_t i, const Word& y) const {
  RightCache& cache = *right_cache_;
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.y.find({i, y}); it != cache.y.end()) return it->second;
  }
  const Signature& sig = signature();
  RightForm out;
  const std::size_t k = y.empty() ? 0 : y.front().gen;
  if (y.empty() || i < k || (i == k && !sig.odd(i))) {
    Word w{Letter::y(i)};
    w.insert(w.end(), y.begin(), y.end());
    out.add(w, pres_->ring().one());
  } else {
    const Word rest(y.begin() + 1, y.end());
    RightForm unit;
    unit.add(rest, pres_->ring().one());
    if (i == k) {
      // y_i y_i = psi(f_ii) / 2 for odd x_i
      out = left_times(psi_hat(*pres_, pres_->generator_bracket(i, i)) * Scalar(1, 2), unit);
    } else {
      // y_i y_k = s y_k y_i + psi(f_ik)
      const Scalar s = koszul_sign(sig.degree(i), sig.degree(k));
      for (const auto& [w, a] : left_times(y.front(), times_y(i, rest)).terms) out.add(w, a * s);
      for (const auto& [w, a] : left_times(psi_hat(*pres_, pres_->generator_bracket(i, k)), unit).terms)
        out.add(w, a);
    }
  }
  std::lock_guard lock(cache.mutex);
  return cache.y.emplace(std::make_pair(i, y), std::move(out)).first->second;
}

RightForm EnvelopingAlgebra::right_normal_form(const NCPolynomial& p) const {
  RightForm unit;
  unit.add({}, pres_->ring().one());
  return left_times(p, unit);
}

NCPolynomial EnvelopingAlgebra::from_right_form(const RightForm& r) const {
  NCPolynomial out;
  for (const auto& [y, a] : r.terms) out += left_multiply(y, algebra().embed(a));
  return out;
}

NCPolynomial EnvelopingAlgebra::h_closed_form(const std::vector<std::uint32_t>& exponents) const {
  if (exponents.size() != pres_->rank()) throw std::invalid_argument("exponent vector has the wrong length");
  if (!pres_->ring().admissible(CMonomial(exponents)))
    throw std::invalid_argument("exponent vector violates the odd-generator caps");
  return h_closed_form_raw(exponents);
}

NCPolynomial EnvelopingAlgebra::h_closed_form_raw(const std::vector<std::uint32_t>& exponents) const {
  const Signature& sig = signature();
  if (exponents.size() != sig.size()) throw std::invalid_argument("exponent vector has the wrong length");
  NCPolynomial out;
  long prefix_degree = 0;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] == 0) continue;
    const Scalar coeff = delta_coefficient(exponents[k], sig.degree(k)) *
                         koszul_sign(prefix_degree, sig.degree(k));
    prefix_degree += static_cast<long>(exponents[k]) * sig.degree(k);
    if (coeff == 0) continue;
    std::vector<std::uint32_t> rest = exponents;
    --rest[k];
    Word w{Letter::y(k)};
    const Word tail = algebra().embed(CMonomial(rest));
    w.insert(w.end(), tail.begin(), tail.end());
    out.add_term(w, coeff);
  }
  return out;
}

}  // namespace dgenv
