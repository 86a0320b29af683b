#include "dgenv/presets.hpp"

#include "dgenv/parse.hpp"

#include <map>

namespace dgenv {

namespace {

const std::map<std::string, std::string>& table() {
  static const std::map<std::string, std::string> t = {
      {"ex313",
       "# degree-1 bracket on Q[x1, x2] modulo (x1*x2)\n"
       "bracket_degree = 1\n"
       "gen x1 : 2\n"
       "gen x2 : 3\n"
       "bracket {x1, x2} = x2^2\n"
       "diff d(x1) = x2\n"
       "diff d(x2) = 0\n"
       "ideal = [x1*x2]\n"},
      {"poly2",
       "# two even generators with {x1, x2} = x1\n"
       "gen x1 : 2\n"
       "gen x2 : 2\n"
       "bracket {x1, x2} = x1\n"},
  };
  return t;
}

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : table()) out.push_back(k);
  return out;
}

const std::string& builtin_text(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) throw std::out_of_range("unknown built-in presentation '" + name + "'");
  return it->second;
}

Presentation builtin(const std::string& name) { return parse_presentation(builtin_text(name)); }

}  // namespace dgenv
