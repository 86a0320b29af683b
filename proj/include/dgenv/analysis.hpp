#pragma once

// Truncated ideal-theoretic checks decided by the quotient oracle, and the
// naive/completed/oracle comparison for a quotient presentation.

#include "dgenv/enveloping.hpp"

#include <string>
#include <vector>

namespace dgenv {

struct IntersectionRow {
  int degree;
  std::size_t ideal_dim;         // dim I_D in R
  std::size_t left_dim;          // dim of (R^e I)_D
  std::size_t intersection_dim;  // dim of (R^e I)_D meet the x-only words
  bool contains_ideal;
  bool ok() const { return contains_ideal && intersection_dim == ideal_dim; }
};

/// For each degree, the left ideal generated by I in the enveloping algebra
/// of R, intersected with R, against I itself.
std::vector<IntersectionRow> left_ideal_intersection(const Presentation& pres, int max_degree);

struct UnitExclusion {
  /// Dimension of R^e M + R^e h(Q) R^e per degree.
  std::vector<std::size_t> span_dims;
  bool unit_in_span = false;
  bool ok() const { return !span_dims.empty() && span_dims[0] == 0 && !unit_in_span; }
};

/// 1 is not in R^e M + R^e h(Q) R^e, decided in degree 0.
UnitExclusion unit_exclusion(const Presentation& base, const std::vector<Polynomial>& m,
                             const std::vector<Polynomial>& q, int max_degree);

struct RouteRow {
  int degree;
  std::size_t direct;    // oracle of the quotient presentation
  std::size_t via_base;  // R^e modulo R^e I + R^e h(I) R^e
  bool ok() const { return direct == via_base; }
};

std::vector<RouteRow> two_route_dimensions(const Presentation& pres, int max_degree);

struct AdjudicationRow {
  int degree;
  std::size_t oracle;
  std::size_t naive;
  std::size_t completed;
  bool completed_independent;
  bool ok() const { return oracle == completed && completed_independent; }
};

struct Adjudication {
  CompositionReport naive_compositions;
  std::vector<AdjudicationRow> rows;
  /// Words standard for the uncompleted rules but reducible after completion.
  std::vector<Word> spurious;
  /// One line per completion rule: the rule as a combination of older ones.
  std::vector<std::string> witnesses;
  /// Whether each completion relation lies in J according to the oracle.
  bool witnesses_in_ideal = true;

  bool agrees() const;
};

Adjudication adjudicate(const EnvelopingAlgebra& env, int max_degree);
std::string to_text(const Signature& sig, const Adjudication& a);

}  // namespace dgenv
