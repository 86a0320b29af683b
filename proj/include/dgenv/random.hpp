#pragma once

// Seeded generators of random test data.

#include "dgenv/free_algebra.hpp"
#include "dgenv/presentation.hpp"

#include <optional>
#include <random>

namespace dgenv {

using Rng = std::mt19937_64;

/// A small nonzero rational, mostly integers.
Scalar random_scalar(Rng& rng);

/// A random admissible monomial of the given degree, if one exists.
std::optional<CMonomial> random_monomial(const GradedRing& ring, int degree, Rng& rng);
/// A random combination of up to max_terms monomials of the given degree
/// (zero if the degree is empty).
Polynomial random_homogeneous(const GradedRing& ring, int degree, Rng& rng, int max_terms = 3);

/// A random word of exactly the given degree, if the walk finds one.
std::optional<Word> random_word(const FreeAlgebra& fa, int degree, Rng& rng);
NCPolynomial random_nc_homogeneous(const FreeAlgebra& fa, int degree, Rng& rng, int max_terms = 3);

/// A random presentation with at most max_gens generators of degree
/// 1..4 and bracket degree 0.  It is drawn from families where the
/// axioms often hold; callers still have to validate it.
Presentation random_presentation(Rng& rng, std::size_t max_gens = 3);

}  // namespace dgenv
