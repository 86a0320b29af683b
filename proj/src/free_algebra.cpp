#include "dgenv/free_algebra.hpp"

#include "dgenv/presentation.hpp"

#include <algorithm>

namespace dgenv {

Bidegree bidegree(std::span<const Letter> w) {
  Bidegree b;
  for (Letter l : w) (l.is_x() ? b.x : b.y) += 1;
  return b;
}

bool precedes(std::span<const Letter> u, std::span<const Letter> v) {
  const Bidegree bu = bidegree(u);
  const Bidegree bv = bidegree(v);
  if (bu.y != bv.y) return bu.y < bv.y;
  if (bu.x != bv.x) return bu.x < bv.x;
  // Equal bidegree implies equal length.
  return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Letter l : w) {
    h ^= (static_cast<std::size_t>(l.kind) << 16) | l.gen;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Word concat(const Word& a, const Word& b) {
  Word r;
  r.reserve(a.size() + b.size());
  r.insert(r.end(), a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Word concat(const Word& a, const Word& b, const Word& c) {
  Word r;
  r.reserve(a.size() + b.size() + c.size());
  r.insert(r.end(), a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  r.insert(r.end(), c.begin(), c.end());
  return r;
}

std::optional<std::size_t> find_subword(std::span<const Letter> hay, std::span<const Letter> needle,
                                        std::size_t from) {
  if (needle.size() > hay.size()) return std::nullopt;
  for (std::size_t i = from; i + needle.size() <= hay.size(); ++i)
    if (std::equal(needle.begin(), needle.end(), hay.begin() + static_cast<std::ptrdiff_t>(i)))
      return i;
  return std::nullopt;
}

NCPolynomial NCPolynomial::word(Word w, const Scalar& c) {
  NCPolynomial p;
  p.add_term(w, c);
  return p;
}

Scalar NCPolynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void NCPolynomial::add_term(const Word& w, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

const Word& NCPolynomial::leading_word() const {
  if (terms_.empty()) throw std::domain_error("leading word of the zero polynomial");
  return terms_.rbegin()->first;
}

const Scalar& NCPolynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

NCPolynomial NCPolynomial::make_monic() const {
  const Scalar inv = 1 / leading_coefficient();
  NCPolynomial r = *this;
  r *= inv;
  return r;
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPolynomial& NCPolynomial::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NCPolynomial NCPolynomial::operator-() const {
  NCPolynomial r = *this;
  for (auto& [w, v] : r.terms_) v = -v;
  return r;
}

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
  NCPolynomial r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(concat(wa, wb), ca * cb);
  return r;
}

NCPolynomial left_multiply(const Word& a, const NCPolynomial& p) {
  return sandwich(a, p, {});
}

NCPolynomial right_multiply(const NCPolynomial& p, const Word& b) {
  return sandwich({}, p, b);
}

NCPolynomial sandwich(const Word& a, const NCPolynomial& p, const Word& b) {
  NCPolynomial r;
  for (const auto& [w, c] : p.terms()) r.add_term(concat(a, w, b), c);
  return r;
}

int FreeAlgebra::letter_degree(Letter l) const {
  const int d = sig_.degree(l.gen);
  return l.is_x() ? d : d + sig_.bracket_degree();
}

int FreeAlgebra::degree(std::span<const Letter> w) const {
  int d = 0;
  for (Letter l : w) d += letter_degree(l);
  return d;
}

int FreeAlgebra::sign_degree(std::span<const Letter> w) const {
  int d = 0;
  for (Letter l : w) d += sign_degree(l);
  return d;
}

bool FreeAlgebra::is_homogeneous(const NCPolynomial& p) const {
  std::optional<int> seen;
  for (const auto& [w, c] : p.terms()) {
    const int d = degree(w);
    if (seen && *seen != d) return false;
    seen = d;
  }
  return true;
}

std::optional<int> FreeAlgebra::internal_degree(const NCPolynomial& p) const {
  if (p.is_zero()) return std::nullopt;
  if (!is_homogeneous(p)) throw std::domain_error("noncommutative polynomial is not homogeneous");
  return degree(p.terms().begin()->first);
}

bool FreeAlgebra::positively_graded() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (letter_degree(Letter::x(i)) <= 0 || letter_degree(Letter::y(i)) <= 0) return false;
  return true;
}

Word FreeAlgebra::embed(const CMonomial& m) const {
  Word w;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::uint32_t k = 0; k < m[i]; ++k) w.push_back(Letter::x(i));
  return w;
}

NCPolynomial FreeAlgebra::embed(const Polynomial& f) const {
  NCPolynomial r;
  for (const auto& [m, c] : f.terms()) r.add_term(embed(m), c);
  return r;
}

std::optional<SignedMonomial> FreeAlgebra::collapse(std::span<const Letter> xword) const {
  const GradedRing ring(sig_);
  SignedMonomial acc{1, CMonomial::unit(rank())};
  for (Letter l : xword) {
    if (!l.is_x()) throw std::invalid_argument("collapse expects an x-only word");
    auto prod = ring.mono_mul(acc.monomial, CMonomial::generator(rank(), l.gen));
    if (!prod) return std::nullopt;
    acc.sign *= prod->sign;
    acc.monomial = std::move(prod->monomial);
  }
  return acc;
}

NCPolynomial psi_hat(const Presentation& pres, const Polynomial& f) {
  const FreeAlgebra fa(pres.signature());
  NCPolynomial r;
  for (std::size_t a = 0; a < pres.rank(); ++a) {
    const Polynomial coeff = pres.anti_differential(a, f);
    r += right_multiply(fa.embed(coeff), Word{Letter::y(a)});
  }
  return r;
}

}  // namespace dgenv
