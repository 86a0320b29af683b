#include "dgenv/format.hpp"

#include <algorithm>
#include <sstream>

namespace dgenv {

namespace {

// Appends one signed term; `body` is empty for a bare scalar.
void append_term(std::string& out, const Scalar& c, const std::string& body) {
  const bool negative = sgn(c) < 0;
  const Scalar mag = abs(c);
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (body.empty()) {
    out += mag.get_str();
  } else if (mag == 1) {
    out += body;
  } else {
    out += mag.get_str();
    out += "*";
    out += body;
  }
}

}  // namespace

std::string to_string(const Scalar& c) { return c.get_str(); }

std::string to_string(const Signature& sig, const CMonomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += sig[i].name;
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Signature& sig, const Polynomial& p) {
  if (p.is_zero()) return "0";
  const GradedRing ring(sig);
  std::vector<std::pair<const CMonomial*, const Scalar*>> terms;
  for (const auto& [m, c] : p.terms()) terms.emplace_back(&m, &c);
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    const int da = ring.degree(*a.first);
    const int db = ring.degree(*b.first);
    if (da != db) return da > db;
    return *b.first < *a.first;
  });
  std::string out;
  for (const auto& [m, c] : terms)
    append_term(out, *c, m->is_unit() ? std::string{} : to_string(sig, *m));
  return out;
}

std::string to_string(const Signature& sig, Letter l) {
  std::string s = sig[l.gen].name;
  if (l.is_y()) s += "'";
  return s;
}

std::string to_string(const Signature& sig, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += to_string(sig, w[i]);
  }
  return out;
}

std::string to_string(const Signature& sig, const NCPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    append_term(out, it->second, it->first.empty() ? std::string{} : to_string(sig, it->first));
  return out;
}

}  // namespace dgenv
