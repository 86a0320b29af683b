#pragma once

#include "dgenv/format.hpp"
#include "dgenv/parse.hpp"
#include "dgenv/presets.hpp"

#include <catch2/catch_amalgamated.hpp>

namespace dgenv::test {

inline Polynomial poly(const Presentation& p, const char* text) { return parse_polynomial(p.signature(), text); }
inline NCPolynomial nc(const Presentation& p, const char* text) { return parse_nc_polynomial(p.signature(), text); }
inline std::string show(const Presentation& p, const Polynomial& f) { return to_string(p.signature(), f); }
inline std::string show(const Presentation& p, const NCPolynomial& f) { return to_string(p.signature(), f); }

inline Word word(std::initializer_list<Letter> ls) { return Word(ls); }
inline Letter X(std::size_t i) { return Letter::x(i - 1); }
inline Letter Y(std::size_t i) { return Letter::y(i - 1); }

}  // namespace dgenv::test
