#pragma once

// Words and noncommutative polynomials over {x_1..x_n, y_1..y_n}.
//
// Words are ordered by bidegree first (number of y letters dominates, then
// number of x letters) and then letter by letter with
// x_1 < ... < x_n < y_1 < ... < y_n.  This is a monomial well-order on each
// bidegree, so the maximum of a finite support is the leading word.

#include "dgenv/graded_ring.hpp"

#include <functional>
#include <map>
#include <span>
#include <vector>

namespace dgenv {

class Presentation;

enum class LetterKind : std::uint8_t { X = 0, Y = 1 };

struct Letter {
  LetterKind kind = LetterKind::X;
  std::uint16_t gen = 0;

  static Letter x(std::size_t i) { return {LetterKind::X, static_cast<std::uint16_t>(i)}; }
  static Letter y(std::size_t i) { return {LetterKind::Y, static_cast<std::uint16_t>(i)}; }
  bool is_x() const { return kind == LetterKind::X; }
  bool is_y() const { return kind == LetterKind::Y; }

  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

struct Bidegree {
  int x = 0;
  int y = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

Bidegree bidegree(std::span<const Letter> w);

/// Strict order u < v on words.
bool precedes(std::span<const Letter> u, std::span<const Letter> v);

struct WordOrder {
  bool operator()(const Word& u, const Word& v) const { return precedes(u, v); }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

Word concat(const Word& a, const Word& b);
Word concat(const Word& a, const Word& b, const Word& c);
/// Position of the first occurrence of `needle` in `hay` at or after `from`.
std::optional<std::size_t> find_subword(std::span<const Letter> hay, std::span<const Letter> needle,
                                        std::size_t from = 0);

class NCPolynomial {
 public:
  using Terms = std::map<Word, Scalar, WordOrder>;

  NCPolynomial() = default;
  static NCPolynomial word(Word w, const Scalar& c = 1);
  static NCPolynomial one() { return word({}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Scalar coefficient(const Word& w) const;

  void add_term(const Word& w, const Scalar& c);

  /// The largest word of the support.  Throws std::domain_error on zero.
  const Word& leading_word() const;
  const Scalar& leading_coefficient() const;
  NCPolynomial make_monic() const;

  NCPolynomial& operator+=(const NCPolynomial& o);
  NCPolynomial& operator-=(const NCPolynomial& o);
  NCPolynomial& operator*=(const Scalar& c);
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  friend NCPolynomial operator*(NCPolynomial a, const Scalar& c) { return a *= c; }
  friend NCPolynomial operator*(const Scalar& c, NCPolynomial a) { return a *= c; }
  NCPolynomial operator-() const;

  /// Concatenation product.
  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);

  friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

NCPolynomial left_multiply(const Word& a, const NCPolynomial& p);
NCPolynomial right_multiply(const NCPolynomial& p, const Word& b);
NCPolynomial sandwich(const Word& a, const NCPolynomial& p, const Word& b);

/// Degree bookkeeping for the free extension F(R).
///
/// Internal degree of y_i is |x_i| + bracket_degree, which makes every
/// defining relation homogeneous.  Koszul signs always use |x_i| for both
/// x_i and y_i.
class FreeAlgebra {
 public:
  FreeAlgebra() = default;
  explicit FreeAlgebra(Signature sig) : sig_(std::move(sig)) {}

  const Signature& signature() const { return sig_; }
  std::size_t rank() const { return sig_.size(); }

  int letter_degree(Letter l) const;
  int sign_degree(Letter l) const { return sig_.degree(l.gen); }
  int degree(std::span<const Letter> w) const;
  int sign_degree(std::span<const Letter> w) const;

  bool is_homogeneous(const NCPolynomial& p) const;
  std::optional<int> internal_degree(const NCPolynomial& p) const;

  /// Every letter of positive internal degree.
  bool positively_graded() const;

  /// Sorted x-word of a commutative monomial.
  Word embed(const CMonomial& m) const;
  NCPolynomial embed(const Polynomial& f) const;

  /// Inverse of embed on x-only words; the Koszul sign of the reordering
  /// is returned with the monomial, nullopt when the word vanishes in R.
  std::optional<SignedMonomial> collapse(std::span<const Letter> xword) const;

 private:
  Signature sig_;
};

/// psi(f) = sum_a psi_a(f) y_a.
NCPolynomial psi_hat(const Presentation& pres, const Polynomial& f);

}  // namespace dgenv
