#pragma once

// Randomized identity suites and the oracle comparison table.

#include "dgenv/enveloping.hpp"
#include "dgenv/random.hpp"

#include <string>
#include <vector>

namespace dgenv {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
};

struct SuiteOptions {
  std::size_t cases = 200;
  /// Inputs are drawn with internal degree up to this bound.
  int max_degree = 8;
  std::uint64_t seed = 1;
};

/// Identities on R: the psi/d commutator, the psi expansion of the
/// bracket, graded antisymmetry and the double-sum swap.
std::vector<SuiteResult> ring_suites(const Presentation& pres, const SuiteOptions& opt);
/// Normal-form identities in the enveloping algebra, the m/h structure
/// identities, the differential, and strategy independence.
std::vector<SuiteResult> enveloping_suites(const EnvelopingAlgebra& env, const SuiteOptions& opt);
/// Closed form of h against the recursive h for every exponent vector up
/// to the bound, including vectors beyond the odd caps.
SuiteResult closed_form_suite(const EnvelopingAlgebra& env, int max_degree);
/// Left/right round trip and the vanishing unit coefficient.
std::vector<SuiteResult> right_form_suites(const EnvelopingAlgebra& env, const SuiteOptions& opt);

struct DimensionRow {
  int degree;
  std::size_t oracle;
  std::size_t standard;
  /// Standard words independent in the oracle quotient.
  bool independent;
  bool ok() const { return oracle == standard && independent; }
};

/// Standard monomials of the algebra's rules against the oracle.
std::vector<DimensionRow> dimension_table(const EnvelopingAlgebra& env, QuotientOracle& oracle, int max_degree);
std::string to_text(const std::vector<DimensionRow>& rows);

}  // namespace dgenv
