#include "dgenv/parse.hpp"

#include "dgenv/format.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace dgenv {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Character cursor over one line of text with absolute positions.
class Cursor {
 public:
  Cursor(std::string_view text, int line, int column0) : text_(text), line_(line), col0_(column0) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }
  std::string ident() {
    skip_space();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected an identifier");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  // An apostrophe directly after an identifier.
  bool prime() {
    if (pos_ < text_.size() && text_[pos_] == '\'') {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return std::string(text_.substr(start, pos_ - start));
  }
  std::string_view rest() {
    skip_space();
    return text_.substr(pos_);
  }
  int column() const { return col0_ + static_cast<int>(pos_); }
  int line() const { return line_; }
  std::size_t offset() const { return pos_; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column()); }
  [[noreturn]] void fail_at(const std::string& msg, int column) const { throw ParseError(msg, line_, column); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_, col0_;
};

struct CommutativeOps {
  const Signature& sig;
  GradedRing ring;
  using Value = Polynomial;

  Value constant(const Scalar& c) const { return Polynomial::constant(sig.size(), c); }
  Value atom(const std::string& name, bool primed, Cursor& cur, int column) const {
    if (primed) cur.fail_at("apostrophe names are only valid in enveloping-algebra expressions", column);
    auto i = sig.find(name);
    if (!i) cur.fail_at("unknown generator '" + name + "'", column);
    return ring.gen(*i);
  }
  Value mul(const Value& a, const Value& b) const { return ring.mul(a, b); }
};

struct FreeOps {
  const Signature& sig;
  using Value = NCPolynomial;

  Value constant(const Scalar& c) const { return NCPolynomial::word({}, c); }
  Value atom(const std::string& name, bool primed, Cursor& cur, int column) const {
    auto i = sig.find(name);
    if (!i) cur.fail_at("unknown generator '" + name + "'", column);
    return NCPolynomial::word({primed ? Letter::y(*i) : Letter::x(*i)});
  }
  Value mul(const Value& a, const Value& b) const { return a * b; }
};

template <class Ops>
class ExprParser {
 public:
  using Value = typename Ops::Value;
  ExprParser(const Ops& ops, Cursor& cur) : ops_(ops), cur_(cur) {}

  Value poly() {
    Value acc;
    bool negate = false;
    if (cur_.accept('-'))
      negate = true;
    else
      cur_.accept('+');
    for (;;) {
      Value t = term();
      if (negate) t = -t;
      acc += t;
      if (cur_.accept('+'))
        negate = false;
      else if (cur_.accept('-'))
        negate = true;
      else
        return acc;
    }
  }

 private:
  bool atom_start() {
    const char c = cur_.peek();
    return ident_start(c) || c == '(';
  }

  Value term() {
    std::optional<Value> acc;
    if (digit(cur_.peek())) acc = ops_.constant(rational());
    for (;;) {
      cur_.skip_space();
      const int star = cur_.column();
      if (cur_.accept('*')) {
        if (!acc) cur_.fail_at("'*' needs a left operand", star);
        if (!atom_start()) cur_.fail("expected a factor after '*'");
      } else if (!atom_start()) {
        break;
      }
      Value a = atom();
      acc = acc ? ops_.mul(*acc, a) : a;
    }
    if (!acc) cur_.fail("expected a term");
    return *acc;
  }

  Scalar rational() {
    const int column = cur_.column();
    const std::string num = cur_.digits("a number");
    std::string den = "1";
    if (cur_.accept('/')) den = cur_.digits("a denominator");
    Scalar q;
    if (q.get_num().set_str(num, 10) != 0 || q.get_den().set_str(den, 10) != 0 || q.get_den() == 0)
      cur_.fail_at("malformed rational " + num + "/" + den, column);
    q.canonicalize();
    return q;
  }

  Value atom() {
    Value base;
    if (cur_.accept('(')) {
      base = poly();
      cur_.expect(')', "')'");
    } else {
      cur_.skip_space();
      const int start = cur_.column();
      const std::string name = cur_.ident();
      const bool primed = cur_.prime();
      base = ops_.atom(name, primed, cur_, start);
    }
    if (cur_.accept('^')) {
      const std::string e = cur_.digits("an exponent");
      if (e.size() > 4) cur_.fail("exponent too large");
      Value r = ops_.constant(1);
      for (int k = std::stoi(e); k > 0; --k) r = ops_.mul(r, base);
      return r;
    }
    return base;
  }

  const Ops& ops_;
  Cursor& cur_;
};

template <class Ops>
typename Ops::Value parse_expr(const Ops& ops, std::string_view text, int line, int column0) {
  Cursor cur(text, line, column0);
  ExprParser<Ops> p(ops, cur);
  auto v = p.poly();
  if (!cur.at_end()) cur.fail(std::string("unexpected '") + cur.peek() + "'");
  return v;
}

Polynomial parse_poly_at(const Signature& sig, std::string_view text, int line, int column0) {
  return parse_expr(CommutativeOps{sig, GradedRing(sig)}, text, line, column0);
}

}  // namespace

Polynomial parse_polynomial(const Signature& sig, std::string_view text) {
  return parse_poly_at(sig, text, 1, 1);
}

NCPolynomial parse_nc_polynomial(const Signature& sig, std::string_view text) {
  return parse_expr(FreeOps{sig}, text, 1, 1);
}

namespace {

bool starts_with_word(std::string_view s, std::string_view w) {
  return s.substr(0, w.size()) == w && (s.size() == w.size() || !ident_char(s[w.size()]));
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::vector<Generator> gens;
  std::optional<int> bracket_degree;
  // Expressions are parsed once every generator is known.
  struct Pending {
    enum Kind { Bracket, Diff, Ideal } kind;
    std::size_t i = 0, j = 0;
    std::string expr;
    int line, column;
    std::size_t known = 0;  // generators declared so far
  };
  std::vector<Pending> pending;
  std::set<std::pair<std::size_t, std::size_t>> seen_brackets;
  std::set<std::size_t> seen_diffs;
  bool seen_ideal = false;

  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    lines.push_back(cur);
  }

  auto find_gen = [&](Cursor& cur, const std::string& name, int column) {
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (gens[k].name == name) return k;
    cur.fail_at("unknown generator '" + name + "'", column);
  };

  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string line = lines[ln];
    const int lineno = static_cast<int>(ln) + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    Cursor cur(line, lineno, 1);
    if (cur.at_end()) continue;
    const std::string_view rest = cur.rest();
    const int kw_col = cur.column();

    if (starts_with_word(rest, "bracket_degree")) {
      cur.ident();
      cur.expect('=', "'='");
      const bool neg = cur.accept('-');
      const std::string v = cur.digits("an integer");
      if (!cur.at_end()) cur.fail("unexpected text after bracket_degree");
      if (bracket_degree) cur.fail_at("bracket_degree given twice", kw_col);
      bracket_degree = (neg ? -1 : 1) * std::stoi(v);
    } else if (starts_with_word(rest, "gen")) {
      cur.ident();
      const int col = cur.column();
      cur.skip_space();
      const std::string name = cur.ident();
      if (cur.prime()) cur.fail("generator names cannot carry an apostrophe");
      cur.expect(':', "':'");
      const bool neg = cur.accept('-');
      const std::string v = cur.digits("a degree");
      if (!cur.at_end()) cur.fail("unexpected text after generator degree");
      for (const auto& g : gens)
        if (g.name == name) cur.fail_at("generator '" + name + "' declared twice", col);
      gens.push_back({name, (neg ? -1 : 1) * std::stoi(v)});
    } else if (starts_with_word(rest, "bracket")) {
      cur.ident();
      cur.expect('{', "'{'");
      cur.skip_space();
      const int ca = cur.column();
      const std::string a = cur.ident();
      if (cur.prime()) cur.fail("apostrophe names are only valid in enveloping-algebra expressions");
      cur.expect(',', "','");
      cur.skip_space();
      const int cb = cur.column();
      const std::string b = cur.ident();
      if (cur.prime()) cur.fail("apostrophe names are only valid in enveloping-algebra expressions");
      cur.expect('}', "'}'");
      cur.expect('=', "'='");
      const std::size_t i = find_gen(cur, a, ca), j = find_gen(cur, b, cb);
      if (i > j) cur.fail_at("bracket entries are written {x_i, x_j} with x_i declared first", ca);
      if (i == j && !gens[i].odd())
        cur.fail_at("diagonal bracket {" + a + ", " + a + "} is forced to vanish for an even generator", ca);
      if (!seen_brackets.insert({i, j}).second) cur.fail_at("duplicate bracket entry", ca);
      const int col = cur.column();
      pending.push_back({Pending::Bracket, i, j, std::string(cur.rest()), lineno, col, gens.size()});
    } else if (starts_with_word(rest, "diff")) {
      cur.ident();
      cur.skip_space();
      const int cd = cur.column();
      if (cur.ident() != "d") cur.fail_at("expected d(<name>)", cd);
      cur.expect('(', "'('");
      cur.skip_space();
      const int ca = cur.column();
      const std::string a = cur.ident();
      if (cur.prime()) cur.fail("apostrophe names are only valid in enveloping-algebra expressions");
      cur.expect(')', "')'");
      cur.expect('=', "'='");
      const std::size_t i = find_gen(cur, a, ca);
      if (!seen_diffs.insert(i).second) cur.fail_at("duplicate differential entry", ca);
      const int col = cur.column();
      pending.push_back({Pending::Diff, i, 0, std::string(cur.rest()), lineno, col, gens.size()});
    } else if (starts_with_word(rest, "ideal")) {
      cur.ident();
      cur.expect('=', "'='");
      cur.expect('[', "'['");
      if (seen_ideal) cur.fail_at("ideal given twice", kw_col);
      seen_ideal = true;
      // Split the bracketed list on top-level commas.
      std::string body(cur.rest());
      int col = cur.column();
      const auto close = body.rfind(']');
      if (close == std::string::npos) cur.fail_at("expected ']'", col + static_cast<int>(body.size()));
      {
        std::string tail = body.substr(close + 1);
        if (tail.find_first_not_of(" \t\r") != std::string::npos)
          cur.fail_at("unexpected text after ']'", col + static_cast<int>(close) + 1);
      }
      body.resize(close);
      int depth = 0;
      std::size_t start = 0;
      for (std::size_t k = 0; k <= body.size(); ++k) {
        if (k < body.size() && body[k] == '(') ++depth;
        if (k < body.size() && body[k] == ')') --depth;
        if (k == body.size() || (body[k] == ',' && depth == 0)) {
          std::string item = body.substr(start, k - start);
          if (item.find_first_not_of(" \t\r") != std::string::npos)
            pending.push_back({Pending::Ideal, 0, 0, item, lineno, col + static_cast<int>(start), gens.size()});
          else if (k < body.size() || start > 0)
            cur.fail_at("empty ideal generator", col + static_cast<int>(start));
          start = k + 1;
        }
      }
    } else {
      cur.fail("unknown declaration");
    }
  }

  if (gens.empty()) throw ParseError("no generators declared", 1, 1);
  const Signature sig(gens, bracket_degree.value_or(0));
  const GradedRing ring(sig);
  BracketTable table;
  std::vector<Polynomial> diff(gens.size());
  std::vector<Polynomial> ideal;
  for (const auto& p : pending) {
    Polynomial v = parse_poly_at(sig, p.expr, p.line, p.column);
    for (const auto& [m, c] : v.terms())
      for (std::size_t k = p.known; k < m.size(); ++k)
        if (m[k] > 0) throw ParseError("generator '" + gens[k].name + "' used before its declaration", p.line, p.column);
    auto expect_degree = [&](int want, bool filtered) {
      if (v.is_zero()) return;
      if (!ring.is_homogeneous(v)) throw ParseError("inhomogeneous table entry", p.line, p.column);
      const int got = *ring.internal_degree(v);
      if (got != want && !(filtered && bracket_degree_fits(got, want)))
        throw ParseError("degree mismatch: expected " + std::to_string(want) + ", got " + std::to_string(got),
                         p.line, p.column);
    };
    switch (p.kind) {
      case Pending::Bracket:
        expect_degree(sig.degree(p.i) + sig.degree(p.j) + sig.bracket_degree(), true);
        if (!v.is_zero()) table.entries[{p.i, p.j}] = std::move(v);
        break;
      case Pending::Diff:
        expect_degree(sig.degree(p.i) + 1, false);
        diff[p.i] = std::move(v);
        break;
      case Pending::Ideal:
        if (v.is_zero()) throw ParseError("ideal generator is zero", p.line, p.column);
        if (!ring.is_homogeneous(v)) throw ParseError("ideal generators must be homogeneous", p.line, p.column);
        ideal.push_back(std::move(v));
        break;
    }
  }
  return Presentation(sig, std::move(table), std::move(diff), std::move(ideal));
}

std::string write_presentation(const Presentation& pres) {
  const Signature& sig = pres.signature();
  std::ostringstream os;
  if (sig.bracket_degree() != 0) os << "bracket_degree = " << sig.bracket_degree() << '\n';
  for (const auto& g : sig.generators()) os << "gen " << g.name << " : " << g.degree << '\n';
  for (const auto& [key, f] : pres.bracket_table().entries)
    os << "bracket {" << sig[key.first].name << ", " << sig[key.second].name << "} = " << to_string(sig, f) << '\n';
  for (std::size_t i = 0; i < sig.size(); ++i)
    if (!pres.differential_table()[i].is_zero())
      os << "diff d(" << sig[i].name << ") = " << to_string(sig, pres.differential_table()[i]) << '\n';
  if (!pres.ideal().empty()) {
    os << "ideal = [";
    for (std::size_t k = 0; k < pres.ideal().size(); ++k)
      os << (k ? ", " : "") << to_string(sig, pres.ideal()[k]);
    os << "]\n";
  }
  return os.str();
}

}  // namespace dgenv
