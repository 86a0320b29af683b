#pragma once

// Expression grammar and the presentation file format.
//
//   poly     := ['+'|'-'] term {('+'|'-') term}
//   term     := [rational] {'*' atom | atom}
//   atom     := ident ['^' nat] | '(' poly ')'
//   rational := int ['/' nat]
//
// An identifier followed by an apostrophe names the partner y_i of x_i and
// is only accepted in enveloping-algebra expressions.

#include "dgenv/free_algebra.hpp"
#include "dgenv/presentation.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace dgenv {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  int line_, column_;
};

Polynomial parse_polynomial(const Signature& sig, std::string_view text);
NCPolynomial parse_nc_polynomial(const Signature& sig, std::string_view text);

/// Parses a presentation file.  Table entries are checked for degree; the
/// axioms are left to validate().
Presentation parse_presentation(std::string_view text);
/// The file text of a presentation; parses back to an equal presentation.
std::string write_presentation(const Presentation& pres);

}  // namespace dgenv
