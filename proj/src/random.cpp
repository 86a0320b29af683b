#include "dgenv/random.hpp"

namespace dgenv {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Scalar random_scalar(Rng& rng) {
  int num = 0;
  while (num == 0) num = uniform(rng, -4, 4);
  const int den = uniform(rng, 0, 4) == 0 ? uniform(rng, 2, 3) : 1;
  Scalar r(num, den);
  r.canonicalize();
  return r;
}

namespace {

// Degree components are infinite without positive degrees; sample
// exponents of at most 3 and keep the first hit.
std::vector<CMonomial> sample_monomials(const GradedRing& ring, int degree, Rng& rng) {
  const Signature& sig = ring.signature();
  std::vector<CMonomial> hits;
  for (int attempt = 0; attempt < 256 && hits.empty(); ++attempt) {
    CMonomial m = CMonomial::unit(ring.rank());
    for (std::size_t i = 0; i < ring.rank(); ++i) m.exponents[i] = uniform(rng, 0, sig.odd(i) ? 1 : 3);
    if (ring.degree(m) == degree) hits.push_back(std::move(m));
  }
  return hits;
}

std::vector<CMonomial> candidates(const GradedRing& ring, int degree, Rng& rng) {
  if (ring.signature().positively_graded()) return ring.monomials_of_degree(degree);
  return sample_monomials(ring, degree, rng);
}

}  // namespace

std::optional<CMonomial> random_monomial(const GradedRing& ring, int degree, Rng& rng) {
  const auto all = candidates(ring, degree, rng);
  if (all.empty()) return std::nullopt;
  return all[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(all.size()) - 1))];
}

Polynomial random_homogeneous(const GradedRing& ring, int degree, Rng& rng, int max_terms) {
  Polynomial p;
  const int terms = uniform(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t)
    if (auto m = random_monomial(ring, degree, rng)) p.add_term(*m, random_scalar(rng));
  return p;
}

std::optional<Word> random_word(const FreeAlgebra& fa, int degree, Rng& rng) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < fa.rank(); ++i) {
    letters.push_back(Letter::x(i));
    letters.push_back(Letter::y(i));
  }
  for (int attempt = 0; attempt < 32; ++attempt) {
    Word w;
    int left = degree;
    while (left > 0) {
      std::vector<Letter> fit;
      for (Letter l : letters) {
        const int d = fa.letter_degree(l);
        if (d > 0 && d <= left) fit.push_back(l);
      }
      if (fit.empty()) break;
      const Letter l = fit[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(fit.size()) - 1))];
      w.push_back(l);
      left -= fa.letter_degree(l);
    }
    if (left == 0) return w;
  }
  return std::nullopt;
}

NCPolynomial random_nc_homogeneous(const FreeAlgebra& fa, int degree, Rng& rng, int max_terms) {
  NCPolynomial p;
  const int terms = uniform(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t)
    if (auto w = random_word(fa, degree, rng)) p.add_term(*w, random_scalar(rng));
  return p;
}

Presentation random_presentation(Rng& rng, std::size_t max_gens) {
  const std::size_t n = static_cast<std::size_t>(uniform(rng, std::min<int>(2, static_cast<int>(max_gens)),
                                                         static_cast<int>(max_gens)));
  const int family = uniform(rng, 0, 3);
  std::vector<int> deg(n);
  for (auto& d : deg) d = uniform(rng, 1, 4);
  if (family == 0 && n >= 2) {
    // The last generator is central; make |x1| + |x2| a multiple of it.
    const int c = uniform(rng, 1, 2);
    deg[n - 1] = c;
    do deg[1] = uniform(rng, 1, 4);
    while ((deg[0] + deg[1]) % c != 0);
  }
  if (family == 3 && n >= 2) {
    deg[0] = 2;
    deg[1] = 3;
  }
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back({"x" + std::to_string(i + 1), deg[i]});
  const Signature sig(gens, 0);
  const GradedRing ring(sig);

  BracketTable table;
  std::vector<Polynomial> d(n);
  if (family == 0) {
    // Brackets land in the polynomial ring of the central generator, so
    // every double bracket vanishes.
    const std::size_t z = n - 1;
    for (std::size_t i = 0; i < z; ++i)
      for (std::size_t j = i; j < z; ++j) {
        if (i == j && !sig.odd(i)) continue;
        const int want = deg[i] + deg[j];
        if (want % deg[z] != 0 || uniform(rng, 0, 3) == 0) continue;
        Polynomial f = ring.gen(z);
        for (int k = 1; k < want / deg[z]; ++k) f = ring.mul(f, ring.gen(z));
        if (!f.is_zero()) table.entries[{i, j}] = f * random_scalar(rng);
      }
  } else if (family == 1 || family == 3) {
    // Log-canonical: {x_i, x_j} = q_ij x_i x_j.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (uniform(rng, 0, 3) != 0 || (i == 0 && j == 1))
          table.entries[{i, j}] = ring.mul(ring.gen(i), ring.gen(j)) * random_scalar(rng);
    // d(x1) = c x2 with x1 even and x2 odd keeps d compatible: both sides
    // of the Leibniz rule reduce to multiples of x2^2 = 0.
    // For k > 2 compatibility on (x1, xk) needs q_1k = q_2k.
    if (family == 3 && n >= 2) {
      d[0] = ring.gen(1) * random_scalar(rng);
      for (std::size_t k = 2; k < n; ++k) {
        table.entries.erase({0, k});
        if (auto it = table.entries.find({1, k}); it != table.entries.end())
          table.entries[{0, k}] = ring.mul(ring.gen(0), ring.gen(k)) * it->second.terms().begin()->second;
      }
    }
  } else {
    // Linear brackets where the degrees allow them.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        if (i == j && !sig.odd(i)) continue;
        Polynomial f = random_homogeneous(ring, deg[i] + deg[j], rng, 2);
        Polynomial linear;
        for (const auto& [m, c] : f.terms())
          if (m.length() == 1) linear.add_term(m, c);
        if (!linear.is_zero() && uniform(rng, 0, 2) != 0) table.entries[{i, j}] = linear;
      }
  }
  return Presentation(sig, std::move(table), std::move(d));
}

}  // namespace dgenv
