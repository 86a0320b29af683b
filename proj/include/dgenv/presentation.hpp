#pragma once

// A DG Poisson algebra A = R/I given by data: generator degrees, the
// bracket on generator pairs, the differential on generators, and the
// generators of a homogeneous ideal I.

#include "dgenv/graded_ring.hpp"
#include "dgenv/linear_algebra.hpp"

#include <memory>
#include <string>
#include <vector>

namespace dgenv {

/// Bracket values f_ij = {x_i, x_j} stored for i <= j only.
struct BracketTable {
  std::map<std::pair<std::size_t, std::size_t>, Polynomial> entries;
};

/// A bracket entry of degree `got` fits the slot of degree `expected` when
/// it matches exactly or sits lower by an even amount.  The lower case makes
/// the presentation filtered rather than graded (linear brackets such as
/// {x1, x2} = x1 on even generators); Koszul signs only see parity, so the
/// sign formulas are unaffected.
bool bracket_degree_fits(int got, int expected);

class Presentation {
 public:
  /// Ideal generators are scaled to be monic with respect to the word
  /// order of their image in F(R); zero generators are rejected.
  Presentation(Signature sig, BracketTable bracket, std::vector<Polynomial> differential,
               std::vector<Polynomial> ideal = {});

  const Signature& signature() const { return ring_.signature(); }
  const GradedRing& ring() const { return ring_; }
  std::size_t rank() const { return ring_.rank(); }
  int bracket_degree() const { return signature().bracket_degree(); }
  const BracketTable& bracket_table() const { return bracket_; }
  const std::vector<Polynomial>& differential_table() const { return differential_; }
  const std::vector<Polynomial>& ideal() const { return ideal_; }
  /// Every bracket entry has exactly the degree of its slot.
  bool graded() const;

  /// The same data without the ideal, i.e. the presentation of R itself.
  Presentation without_ideal() const;
  Presentation with_ideal(std::vector<Polynomial> ideal) const;

  /// {x_i, x_j}; entries with i > j come from graded antisymmetry.
  Polynomial generator_bracket(std::size_t i, std::size_t j) const;

  /// The biderivation extension of the generator table.
  Polynomial bracket(const Polynomial& f, const Polynomial& g) const;
  /// The graded-Leibniz extension of the differential table.
  Polynomial differential(const Polynomial& f) const;
  /// psi_alpha(f), with psi_alpha(x_beta) = delta and the twisted product rule.
  Polynomial anti_differential(std::size_t alpha, const Polynomial& f) const;

 private:
  Polynomial bracket_monomials(const CMonomial& u, const CMonomial& v) const;
  Polynomial differential_monomial(const CMonomial& u) const;
  Polynomial anti_differential_monomial(std::size_t alpha, const CMonomial& u) const;

  GradedRing ring_;
  BracketTable bracket_;
  std::vector<Polynomial> differential_;
  std::vector<Polynomial> ideal_;
};

enum class CheckStatus { Pass, Fail, Warn, Skip };
const char* to_string(CheckStatus s);

struct CheckOutcome {
  std::string check;    // e.g. "jacobi"
  CheckStatus status = CheckStatus::Pass;
  std::string witness;  // e.g. "(x1,x2,x3)"
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckOutcome> outcomes;

  bool ok() const;
  std::vector<CheckOutcome> failures() const;
  /// First failing outcome of a named check, if any.
  const CheckOutcome* failure(std::string_view check) const;
};

/// Runs every axiom check.  Outcomes are sorted by check name then witness.
ValidationReport validate(const Presentation& pres);

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// A presentation that passed validate().  Downstream constructions only
/// accept this type.
class ValidatedPresentation {
 public:
  /// Throws ValidationError when any check fails.
  static ValidatedPresentation from(Presentation pres);

  const Presentation& operator*() const { return *pres_; }
  const Presentation* operator->() const { return pres_.get(); }
  const Presentation& get() const { return *pres_; }
  const ValidationReport& report() const { return report_; }

 private:
  ValidatedPresentation(std::shared_ptr<const Presentation> p, ValidationReport r)
      : pres_(std::move(p)), report_(std::move(r)) {}

  std::shared_ptr<const Presentation> pres_;
  ValidationReport report_;
};

/// Degree-by-degree span of an ideal of R generated by homogeneous
/// polynomials.  Exact for every degree up to the bound.
class TruncatedIdeal {
 public:
  TruncatedIdeal(GradedRing ring, std::vector<Polynomial> generators);

  /// Whether a homogeneous polynomial lies in the ideal.
  bool contains(const Polynomial& p);
  std::size_t dimension(int degree);

 private:
  EchelonBasis<CMonomial>& component(int degree);

  GradedRing ring_;
  std::vector<Polynomial> generators_;
  std::map<int, EchelonBasis<CMonomial>> components_;
};

}  // namespace dgenv
