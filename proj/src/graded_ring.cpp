#include "dgenv/graded_ring.hpp"

#include <numeric>
#include <set>

namespace dgenv {

int koszul_sign(long d1, long d2) {
  return ((d1 & 1L) && (d2 & 1L)) ? -1 : 1;
}

Signature::Signature(std::vector<Generator> generators, int bracket_degree)
    : generators_(std::move(generators)), bracket_degree_(bracket_degree) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.name.empty()) throw std::invalid_argument("generator with empty name");
    if (!seen.insert(g.name).second)
      throw std::invalid_argument("duplicate generator name '" + g.name + "'");
  }
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  return std::nullopt;
}

bool Signature::positively_graded() const {
  for (const auto& g : generators_)
    if (g.degree <= 0) return false;
  return true;
}

CMonomial CMonomial::generator(std::size_t n, std::size_t i) {
  CMonomial m = unit(n);
  m.exponents.at(i) = 1;
  return m;
}

std::uint32_t CMonomial::length() const {
  return std::accumulate(exponents.begin(), exponents.end(), std::uint32_t{0});
}

Polynomial Polynomial::constant(std::size_t n, const Scalar& c) {
  Polynomial p;
  p.add_term(CMonomial::unit(n), c);
  return p;
}

Polynomial Polynomial::generator(std::size_t n, std::size_t i) {
  Polynomial p;
  p.add_term(CMonomial::generator(n, i), 1);
  return p;
}

Polynomial Polynomial::monomial(const CMonomial& m, const Scalar& c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

Scalar Polynomial::coefficient(const CMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::add_term(const CMonomial& m, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

std::optional<SignedMonomial> GradedRing::mono_mul(const CMonomial& a, const CMonomial& b) const {
  const std::size_t n = rank();
  CMonomial out = CMonomial::unit(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.exponents[i] = a[i] + b[i];
    if (sig_.odd(i) && out.exponents[i] > 1) return std::nullopt;
  }
  // Moving each odd factor of b left past the odd factors of a with a
  // larger index costs one sign per crossing.
  unsigned long crossings = 0;
  unsigned long odd_in_a_above = 0;
  for (std::size_t j = n; j-- > 0;) {
    if (!sig_.odd(j)) continue;
    crossings += static_cast<unsigned long>(b[j]) * odd_in_a_above;
    odd_in_a_above += a[j];
  }
  return SignedMonomial{(crossings & 1UL) ? -1 : 1, std::move(out)};
}

Polynomial GradedRing::mul(const Polynomial& a, const Polynomial& b) const {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      auto prod = mono_mul(ma, mb);
      if (!prod) continue;
      Scalar c = ca * cb;
      if (prod->sign < 0) c = -c;
      r.add_term(prod->monomial, c);
    }
  return r;
}

Polynomial GradedRing::pow(const Polynomial& a, unsigned e) const {
  Polynomial r = one();
  for (unsigned k = 0; k < e; ++k) r = mul(r, a);
  return r;
}

int GradedRing::degree(const CMonomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<int>(m[i]) * sig_.degree(i);
  return d;
}

bool GradedRing::is_homogeneous(const Polynomial& p) const {
  std::optional<int> seen;
  for (const auto& [m, c] : p.terms()) {
    int d = degree(m);
    if (seen && *seen != d) return false;
    seen = d;
  }
  return true;
}

std::optional<int> GradedRing::internal_degree(const Polynomial& p) const {
  if (p.is_zero()) return std::nullopt;
  if (!is_homogeneous(p)) throw std::domain_error("polynomial is not homogeneous");
  return degree(p.terms().begin()->first);
}

bool GradedRing::admissible(const CMonomial& m) const {
  if (m.size() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (sig_.odd(i) && m[i] > 1) return false;
  return true;
}

namespace {

void enumerate_monomials(const Signature& sig, std::size_t i, int remaining, CMonomial& cur,
                         std::vector<CMonomial>& out) {
  if (i == sig.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const int d = sig.degree(i);
  const std::uint32_t cap = sig.odd(i) ? 1u : static_cast<std::uint32_t>(remaining / d);
  for (std::uint32_t e = 0; e <= cap && static_cast<int>(e) * d <= remaining; ++e) {
    cur.exponents[i] = e;
    enumerate_monomials(sig, i + 1, remaining - static_cast<int>(e) * d, cur, out);
  }
  cur.exponents[i] = 0;
}

}  // namespace

std::vector<CMonomial> GradedRing::monomials_of_degree(int degree) const {
  if (!sig_.positively_graded())
    throw std::domain_error("monomial enumeration needs strictly positive generator degrees");
  std::vector<CMonomial> out;
  if (degree < 0) return out;
  CMonomial cur = CMonomial::unit(rank());
  enumerate_monomials(sig_, 0, degree, cur, out);
  return out;
}

}  // namespace dgenv
