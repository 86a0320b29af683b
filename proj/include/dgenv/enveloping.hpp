#pragma once

// The enveloping algebra A^e = F(R)/J with its maps m, h and the
// differential, plus left and right normal forms.

#include "dgenv/oracle.hpp"
#include "dgenv/presentation.hpp"
#include "dgenv/rewriting.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace dgenv {

/// sum_i Y_i a_i with y-only words Y_i and right coefficients a_i in R.
struct RightForm {
  std::map<Word, Polynomial, WordOrder> terms;

  bool is_zero() const { return terms.empty(); }
  Polynomial coefficient(const Word& y) const;
  void add(const Word& y, const Polynomial& a);
  friend bool operator==(const RightForm&, const RightForm&) = default;
};

std::string to_string(const Signature& sig, const RightForm& r);

/// The coefficient Delta(n) of y_i x_i^{n-1} in h(x_i^n).
Scalar delta_coefficient(unsigned n, int gen_degree);

class EnvelopingAlgebra {
 public:
  /// Quotient rules completed up to the bound (raised to the largest lead
  /// degree if needed); checks that J is a DG ideal.
  /// Without positive degrees the completion step is skipped with a warning.
  static EnvelopingAlgebra build(const ValidatedPresentation& pres, int complete_to);

  const Presentation& presentation() const { return *pres_; }
  const Signature& signature() const { return pres_->signature(); }
  const FreeAlgebra& algebra() const { return rules_.algebra(); }
  const RuleSystem& rules() const { return rules_; }
  const CompletionReport& completion() const { return completion_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  NCPolynomial nf(const NCPolynomial& p) const { return rules_.normal_form(p); }
  NCPolynomial m(const Polynomial& f) const;
  NCPolynomial h(const Polynomial& f) const;

  /// Graded Leibniz extension of the generator table, unreduced.
  NCPolynomial partial_raw(const NCPolynomial& p) const;
  NCPolynomial partial(const NCPolynomial& p) const { return nf(partial_raw(p)); }

  RightForm right_normal_form(const NCPolynomial& p) const;
  /// sum_i Y_i * embed(a_i), unreduced.
  NCPolynomial from_right_form(const RightForm& r) const;

  /// The closed form of h on a monomial, unreduced.  Exponents must respect
  /// the odd caps.
  NCPolynomial h_closed_form(const std::vector<std::uint32_t>& exponents) const;
  /// Same sum without the cap check; an inadmissible monomial yields words
  /// that reduce to zero.
  NCPolynomial h_closed_form_raw(const std::vector<std::uint32_t>& exponents) const;

 private:
  EnvelopingAlgebra(std::shared_ptr<const Presentation> pres, RuleSystem rules)
      : pres_(std::move(pres)), rules_(std::move(rules)) {}

  struct RightCache;
  const RightForm& times_x(std::size_t j, const Word& y) const;
  const RightForm& times_y(std::size_t i, const Word& y) const;
  RightForm left_times(Letter l, const RightForm& r) const;
  RightForm left_times(const NCPolynomial& xpoly, const RightForm& r) const;
  RightForm times_right(const RightForm& r, const Polynomial& a) const;

  std::shared_ptr<const Presentation> pres_;
  RuleSystem rules_;
  CompletionReport completion_;
  std::vector<std::string> warnings_;
  std::shared_ptr<RightCache> right_cache_;
};

}  // namespace dgenv
