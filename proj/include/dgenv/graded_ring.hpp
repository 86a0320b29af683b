#pragma once

// Graded-commutative polynomial arithmetic over the rationals.
//
// A polynomial lives in R = Q[x_1..x_n] with the Koszul rule
// x_i x_j = (-1)^{|x_i||x_j|} x_j x_i.  Monomials are stored as exponent
// vectors in generator order; odd generators never exceed exponent 1
// because 2 x^2 = 0 forces x^2 = 0 in characteristic zero.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dgenv {

using Scalar = mpq_class;

/// (-1)^{d1*d2} as +1 or -1.
int koszul_sign(long d1, long d2);

struct Generator {
  std::string name;
  int degree = 0;

  bool odd() const { return degree % 2 != 0; }
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Generator list plus the degree of the Poisson bracket.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Generator> generators, int bracket_degree = 0);

  std::size_t size() const { return generators_.size(); }
  const Generator& operator[](std::size_t i) const { return generators_[i]; }
  const std::vector<Generator>& generators() const { return generators_; }
  int bracket_degree() const { return bracket_degree_; }
  int degree(std::size_t i) const { return generators_[i].degree; }
  bool odd(std::size_t i) const { return generators_[i].odd(); }

  std::optional<std::size_t> find(std::string_view name) const;

  /// True when every generator degree is strictly positive.
  bool positively_graded() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<Generator> generators_;
  int bracket_degree_ = 0;
};

/// x_1^{e_1} ... x_n^{e_n}, always written in generator order.
struct CMonomial {
  std::vector<std::uint32_t> exponents;

  CMonomial() = default;
  explicit CMonomial(std::vector<std::uint32_t> e) : exponents(std::move(e)) {}
  static CMonomial unit(std::size_t n) { return CMonomial(std::vector<std::uint32_t>(n, 0)); }
  static CMonomial generator(std::size_t n, std::size_t i);

  std::size_t size() const { return exponents.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents[i]; }
  std::uint32_t length() const;
  bool is_unit() const { return length() == 0; }

  auto operator<=>(const CMonomial&) const = default;
};

class Polynomial {
 public:
  using Terms = std::map<CMonomial, Scalar>;

  Polynomial() = default;
  static Polynomial constant(std::size_t n, const Scalar& c);
  static Polynomial generator(std::size_t n, std::size_t i);
  static Polynomial monomial(const CMonomial& m, const Scalar& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Scalar coefficient(const CMonomial& m) const;

  /// Adds c*m, dropping the entry when the coefficient cancels.
  void add_term(const CMonomial& m, const Scalar& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Terms terms_;
};

/// Signed product of two monomials; nullopt when an odd generator repeats.
struct SignedMonomial {
  int sign;
  CMonomial monomial;
};

/// The base ring R attached to a signature.
class GradedRing {
 public:
  GradedRing() = default;
  explicit GradedRing(Signature sig) : sig_(std::move(sig)) {}

  const Signature& signature() const { return sig_; }
  std::size_t rank() const { return sig_.size(); }

  std::optional<SignedMonomial> mono_mul(const CMonomial& a, const CMonomial& b) const;

  Polynomial mul(const Polynomial& a, const Polynomial& b) const;
  Polynomial pow(const Polynomial& a, unsigned e) const;
  Polynomial one() const { return Polynomial::constant(rank(), 1); }
  Polynomial gen(std::size_t i) const { return Polynomial::generator(rank(), i); }

  int degree(const CMonomial& m) const;
  bool is_homogeneous(const Polynomial& p) const;
  /// Degree of a homogeneous polynomial, nullopt for zero.
  /// Throws std::domain_error on inhomogeneous input.
  std::optional<int> internal_degree(const Polynomial& p) const;

  /// Whether a monomial respects the odd-exponent cap.
  bool admissible(const CMonomial& m) const;

  /// All admissible monomials of exactly the given degree.
  /// Requires a positively graded signature.
  std::vector<CMonomial> monomials_of_degree(int degree) const;

 private:
  Signature sig_;
};

}  // namespace dgenv
