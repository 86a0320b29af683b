#include "dgenv/oracle.hpp"

#include "dgenv/presentation.hpp"

#include <algorithm>

namespace dgenv {

QuotientOracle::QuotientOracle(FreeAlgebra fa, std::vector<NCPolynomial> relations)
    : fa_(std::move(fa)), ext_(fa_) {
  if (!fa_.positively_graded()) throw std::domain_error("oracle unavailable: letter degrees must be positive");
  for (auto& r : relations)
    if (!r.is_zero() && !fa_.is_homogeneous(r)) filtered_ = true;
  const std::size_t n = fa_.rank();
  for (std::size_t i = 0; i < n; ++i) letters_.push_back(Letter::x(i));
  for (std::size_t i = 0; i < n; ++i) letters_.push_back(Letter::y(i));
  if (filtered_) {
    auto gens = fa_.signature().generators();
    gens.push_back({"t", 1});
    ext_ = FreeAlgebra(Signature(gens, fa_.signature().bracket_degree()));
    const Letter t = Letter::x(n);
    for (Letter l : letters_) relations.push_back(NCPolynomial::word({t, l}) - NCPolynomial::word({l, t}));
    letters_.push_back(t);
  }
  for (auto& r : relations) {
    if (r.is_zero()) continue;
    const int top = top_degree(r);
    relations_.push_back(filtered_ ? homogenize(r, top) : std::move(r));
    relation_degrees_.push_back(top);
  }
}

int QuotientOracle::top_degree(const NCPolynomial& p) const {
  int top = 0;
  for (const auto& [w, c] : p.terms()) top = std::max(top, ext_.degree(w));
  return top;
}

NCPolynomial QuotientOracle::homogenize(const NCPolynomial& p, int degree) const {
  NCPolynomial out;
  for (const auto& [w, c] : p.terms()) {
    const int d = ext_.degree(w);
    if (d == degree) {
      out.add_term(w, c);
      continue;
    }
    if (!filtered_ || d > degree)
      throw std::invalid_argument("term of degree " + std::to_string(d) + " in the degree-" +
                                  std::to_string(degree) + " piece");
    Word padded = w;
    padded.insert(padded.end(), static_cast<std::size_t>(degree - d), Letter::x(fa_.rank()));
    out.add_term(padded, c);
  }
  return out;
}

std::vector<NCPolynomial> QuotientOracle::defining_relations(const Presentation& pres) {
  const Signature& sig = pres.signature();
  const FreeAlgebra fa(sig);
  std::vector<NCPolynomial> out;
  auto push = [&](NCPolynomial p) {
    if (!p.is_zero()) out.push_back(std::move(p));
  };
  for (std::size_t i = 0; i < pres.rank(); ++i)
    for (std::size_t j = 0; j < pres.rank(); ++j) {
      const Scalar s = koszul_sign(sig.degree(i), sig.degree(j));
      const Polynomial f = pres.generator_bracket(i, j);
      const Letter xi = Letter::x(i), xj = Letter::x(j), yi = Letter::y(i), yj = Letter::y(j);
      push(NCPolynomial::word({xi, xj}) - NCPolynomial::word({xj, xi}, s));
      push(NCPolynomial::word({yi, yj}) - NCPolynomial::word({yj, yi}, s) - psi_hat(pres, f));
      push(NCPolynomial::word({yi, xj}) - NCPolynomial::word({xj, yi}, s) - fa.embed(f));
    }
  for (const auto& g : pres.ideal()) {
    push(fa.embed(g));
    push(psi_hat(pres, g));
  }
  return out;
}

QuotientOracle QuotientOracle::enveloping(const Presentation& pres) {
  return QuotientOracle(FreeAlgebra(pres.signature()), defining_relations(pres));
}

QuotientOracle::Coords QuotientOracle::lift(const Word& w) {
  Coords v;
  const Word rest(w.begin() + 1, w.end());
  for (const auto& [u, c] : coords(rest)) {
    Word key;
    key.reserve(u.size() + 1);
    key.push_back(w.front());
    key.insert(key.end(), u.begin(), u.end());
    v.emplace(std::move(key), c);
  }
  return v;
}

QuotientOracle::Component& QuotientOracle::component(int degree) {
  if (auto it = components_.find(degree); it != components_.end()) return it->second;
  Component comp;
  if (degree == 0) {
    comp.basis.push_back({});
    return components_.emplace(degree, std::move(comp)).first->second;
  }
  if (degree < 0) return components_.emplace(degree, std::move(comp)).first->second;

  std::vector<Word> columns;
  for (Letter l : letters_) {
    const int d = ext_.letter_degree(l);
    if (d > degree) continue;
    for (const Word& b : component(degree - d).basis) {
      Word col{l};
      col.insert(col.end(), b.begin(), b.end());
      columns.push_back(std::move(col));
    }
  }
  for (std::size_t r = 0; r < relations_.size(); ++r) {
    const int ds = relation_degrees_[r];
    if (ds > degree) continue;
    const std::vector<Word> lower = component(degree - ds).basis;
    for (const Word& b : lower) {
      Coords row;
      for (const auto& [t, c] : relations_[r].terms())
        for (const auto& [k, v] : lift(concat(t, b))) {
          auto [slot, inserted] = row.try_emplace(k, 0);
          slot->second += c * v;
          if (slot->second == 0) row.erase(slot);
        }
      comp.rows.insert(std::move(row));
    }
  }
  for (auto& col : columns)
    if (!comp.rows.is_pivot(col)) comp.basis.push_back(std::move(col));
  std::sort(comp.basis.begin(), comp.basis.end(), WordOrder{});
  return components_.emplace(degree, std::move(comp)).first->second;
}

std::size_t QuotientOracle::piece_dimension(int degree) { return component(degree).basis.size(); }

std::size_t QuotientOracle::dimension(int degree) {
  if (!filtered_ || degree <= 0) return piece_dimension(degree);
  return piece_dimension(degree) - piece_dimension(degree - 1);
}

std::vector<Word> QuotientOracle::basis(int degree) { return component(degree).basis; }

const QuotientOracle::Coords& QuotientOracle::coords(const Word& w) {
  if (auto it = coords_.find(w); it != coords_.end()) return it->second;
  Coords v;
  if (w.empty()) {
    v.emplace(Word{}, 1);
  } else {
    const Component& comp = component(ext_.degree(w));
    v = comp.rows.reduce(lift(w));
  }
  return coords_.emplace(w, std::move(v)).first->second;
}

QuotientOracle::Coords QuotientOracle::coords(const NCPolynomial& p) {
  Coords v;
  for (const auto& [w, c] : p.terms())
    for (const auto& [k, x] : coords(w)) {
      auto [slot, inserted] = v.try_emplace(k, 0);
      slot->second += c * x;
      if (slot->second == 0) v.erase(slot);
    }
  return v;
}

std::size_t QuotientOracle::rank(const std::vector<NCPolynomial>& elements, int degree) {
  EchelonBasis<Word, WordOrder> span;
  for (const auto& e : elements) span.insert(coords(e, degree));
  return span.rank();
}

}  // namespace dgenv
