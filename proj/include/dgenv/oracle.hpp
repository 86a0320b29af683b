#pragma once

// Rewriting-free quotient F/J for a set of relations, built degree by
// degree with exact row reduction.
//
// With Q_D the degree-D quotient, F_D = sum over letters l of l*F_{D-|l|}
// and J_D = sum_l l*J_{D-|l|} + span{s*b}.  So Q_D is the quotient of
// E_D = sum_l l (x) Q_{D-|l|} by the images of s*b for every relation s and
// every basis word b of Q_{D-|s|}.  Nothing from the rewriting module is
// used.
//
// Inhomogeneous relations (filtered presentations) are homogenized with a
// central letter t of degree 1: s becomes sum_w c_w w t^(top(s)-|w|).  The
// degree-D piece of that graded algebra maps onto the filtered piece
// F_{<=D}/(J meet F_{<=D}) and is isomorphic to it when t is not a zero
// divisor, which is what a PBW basis guarantees.  dimension() then reports
// the associated graded dimension.

#include "dgenv/free_algebra.hpp"
#include "dgenv/linear_algebra.hpp"

#include <unordered_map>
#include <vector>

namespace dgenv {

class Presentation;

class QuotientOracle {
 public:
  using Coords = EchelonBasis<Word, WordOrder>::Vector;

  /// Letter degrees must be positive.
  QuotientOracle(FreeAlgebra fa, std::vector<NCPolynomial> relations);

  /// The unoriented relations x_ij, y_ij, z_ij plus I and psi(I).
  static std::vector<NCPolynomial> defining_relations(const Presentation& pres);
  static QuotientOracle enveloping(const Presentation& pres);

  const FreeAlgebra& algebra() const { return fa_; }
  bool filtered() const { return filtered_; }

  /// Dimension of the degree-D part of the (associated) graded quotient.
  std::size_t dimension(int degree);
  /// Dimension of the degree-D piece: F_D/J_D, or the filtered piece.
  std::size_t piece_dimension(int degree);
  /// Words whose classes form a basis of the degree-D piece, increasing.
  /// In filtered mode they may contain the letter t.
  std::vector<Word> basis(int degree);

  /// The element p in the degree-D piece: every term is padded with t on
  /// the right.  Terms must have degree D, or at most D when filtered.
  NCPolynomial homogenize(const NCPolynomial& p, int degree) const;
  /// Largest term degree.
  int top_degree(const NCPolynomial& p) const;

  /// Coordinates of a homogeneous element of the piece (words may use t).
  const Coords& coords(const Word& w);
  Coords coords(const NCPolynomial& p);
  /// Coordinates of p in the degree-D piece.
  Coords coords(const NCPolynomial& p, int degree) { return coords(homogenize(p, degree)); }
  bool in_ideal(const NCPolynomial& p) { return p.is_zero() || coords(p, top_degree(p)).empty(); }

  /// Rank of a family of elements in the degree-D piece.
  std::size_t rank(const std::vector<NCPolynomial>& elements, int degree);

 private:
  struct Component {
    EchelonBasis<Word, WordOrder> rows;
    std::vector<Word> basis;
  };

  Component& component(int degree);
  /// Image of a word in E_D before the degree-D relations are applied.
  Coords lift(const Word& w);

  FreeAlgebra fa_;
  FreeAlgebra ext_;  // fa_ plus the letter t in filtered mode
  bool filtered_ = false;
  std::vector<NCPolynomial> relations_;
  std::vector<int> relation_degrees_;
  std::vector<Letter> letters_;
  std::map<int, Component> components_;
  std::unordered_map<Word, Coords, WordHash> coords_;
};

}  // namespace dgenv
