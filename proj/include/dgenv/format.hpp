#pragma once

// Canonical text forms.  Everything printed here parses back to the same
// value with the expression parser.

#include "dgenv/free_algebra.hpp"

#include <string>

namespace dgenv {

std::string to_string(const Scalar& c);
std::string to_string(const Signature& sig, const CMonomial& m);
/// Terms by descending internal degree, then descending exponent vector.
std::string to_string(const Signature& sig, const Polynomial& p);
std::string to_string(const Signature& sig, Letter l);
/// Letters joined by '*', y_i printed as the name of x_i with an apostrophe.
std::string to_string(const Signature& sig, const Word& w);
/// Terms in descending word order.
std::string to_string(const Signature& sig, const NCPolynomial& p);

}  // namespace dgenv
