#include "proofid/parse.hpp"

#include <cctype>
#include <vector>

#include "proofid/error.hpp"

namespace proofid {

namespace {

bool ident_start(char c) { return c >= 'a' && c <= 'z'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  std::size_t pos() const { return pos_; }
  void reset(std::size_t p) { pos_ = p; }

  bool peek(std::string_view token) {
    skip_space();
    return text_.substr(pos_, token.size()) == token;
  }
  bool accept(std::string_view token) {
    if (!peek(token)) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  bool peek_ident() {
    skip_space();
    return pos_ < text_.size() && ident_start(text_[pos_]);
  }
  std::string ident() {
    skip_space();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected identifier");
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  // Uppercase constant T or F standing alone.
  bool accept_constant(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c &&
        (pos_ + 1 >= text_.size() || !ident_char(text_[pos_ + 1]))) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& message) {
    skip_space();
    throw SyntaxError(message, pos_);
  }

  void require_input() {
    if (at_end()) throw SyntaxError("empty input", 0);
  }
  void require_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// ---- formulas -------------------------------------------------------------

Formula formula(Cursor& c);

Formula formula_atom(Cursor& c) {
  if (c.accept("(")) {
    Formula f = formula(c);
    c.expect(")");
    return f;
  }
  if (c.accept_constant('T')) return Formula::top();
  if (c.accept_constant('F')) return Formula::bot();
  if (c.peek_ident()) return Formula::letter(c.ident());
  c.fail("expected a letter, T, F or '('");
}

Formula formula_conj(Cursor& c) {
  Formula f = formula_atom(c);
  while (c.accept("&")) f = Formula::conj(f, formula_atom(c));
  return f;
}

Formula formula_disj(Cursor& c) {
  Formula f = formula_conj(c);
  while (c.accept("|")) f = Formula::disj(f, formula_conj(c));
  return f;
}

Formula formula(Cursor& c) {
  Formula f = formula_disj(c);
  if (c.accept("->")) return Formula::impl(f, formula(c));
  return f;
}

// ---- arrows ---------------------------------------------------------------

ArrowTerm arrow(Cursor& c) {
  std::size_t start = c.pos();
  std::string head = c.ident();
  auto one_formula = [&] {
    c.expect("[");
    Formula a = formula(c);
    c.expect("]");
    return a;
  };
  auto two_formulas = [&] {
    c.expect("[");
    Formula a = formula(c);
    c.expect(",");
    Formula b = formula(c);
    c.expect("]");
    return std::pair{a, b};
  };
  auto two_arrows = [&] {
    c.expect("(");
    ArrowTerm x = arrow(c);
    c.expect(",");
    ArrowTerm y = arrow(c);
    c.expect(")");
    return std::pair{x, y};
  };
  if (head == "id") return ArrowTerm::id(one_formula());
  if (head == "bang") return ArrowTerm::bang(one_formula());
  if (head == "p1") { auto [a, b] = two_formulas(); return ArrowTerm::proj1(a, b); }
  if (head == "p2") { auto [a, b] = two_formulas(); return ArrowTerm::proj2(a, b); }
  if (head == "i1") { auto [a, b] = two_formulas(); return ArrowTerm::inj1(a, b); }
  if (head == "i2") { auto [a, b] = two_formulas(); return ArrowTerm::inj2(a, b); }
  if (head == "eval") { auto [a, b] = two_formulas(); return ArrowTerm::eval(a, b); }
  if (head == "zero") { auto [a, b] = two_formulas(); return ArrowTerm::zero(a, b); }
  if (head == "pair") { auto [x, y] = two_arrows(); return ArrowTerm::pair(x, y); }
  if (head == "case") { auto [x, y] = two_arrows(); return ArrowTerm::copair(x, y); }
  if (head == "sum") { auto [x, y] = two_arrows(); return ArrowTerm::sum(x, y); }
  if (head == "comp") { auto [x, y] = two_arrows(); return ArrowTerm::comp(x, y); }
  if (head == "curry") {
    c.expect("(");
    ArrowTerm x = arrow(c);
    c.expect(")");
    return ArrowTerm::curry(x);
  }
  c.reset(start);
  c.fail("unknown arrow constructor '" + head + "'");
}

// ---- lambda terms ---------------------------------------------------------

class LambdaParser {
 public:
  LambdaParser(Cursor& c, const LambdaParseOptions& options) : c_(c), options_(options) {}

  LambdaTerm term() {
    if (c_.accept("\\")) {
      std::string name = variable_name();
      Formula type = placeholder();
      if (c_.accept(":")) {
        type = formula(c_);
      } else if (!options_.allow_untyped_binders) {
        c_.fail("binder type required");
      }
      c_.expect(".");
      scope_.emplace_back(name, type);
      LambdaTerm body = term();
      scope_.pop_back();
      return LambdaTerm::abs(name, type, body);
    }
    LambdaTerm t = prim();
    while (true) {
      if (c_.peek("\\")) return LambdaTerm::app(t, term());
      if (!starts_prim()) return t;
      t = LambdaTerm::app(t, prim());
    }
  }

 private:
  bool starts_prim() { return c_.peek("(") || c_.peek_ident(); }

  Formula placeholder() {
    if (!options_.allow_untyped_binders) return Formula::top();
    return Formula::letter("t" + std::to_string(untyped_++));
  }

  std::string variable_name() {
    std::size_t at = c_.pos();
    std::string name = c_.ident();
    if (name == "fst" || name == "snd" || name == "unit") {
      c_.reset(at);
      c_.fail("reserved word '" + name + "' used as variable");
    }
    return name;
  }

  LambdaTerm prim() {
    std::size_t at = c_.pos();
    if (c_.peek_ident()) {
      std::string word = c_.ident();
      if (word == "fst") return LambdaTerm::fst(atom());
      if (word == "snd") return LambdaTerm::snd(atom());
      c_.reset(at);
    }
    return atom();
  }

  LambdaTerm atom() {
    if (c_.accept("(")) {
      std::size_t at = c_.pos();
      if (c_.peek_ident()) {
        std::string name = c_.ident();
        if (name != "fst" && name != "snd" && name != "unit" && c_.accept(":")) {
          Formula type = formula(c_);
          c_.expect(")");
          return LambdaTerm::var(name, type);
        }
        c_.reset(at);
      }
      LambdaTerm first = term();
      if (c_.accept(",")) {
        LambdaTerm second = term();
        c_.expect(")");
        return LambdaTerm::mk_pair(first, second);
      }
      c_.expect(")");
      return first;
    }
    std::size_t at = c_.pos();
    std::string name = c_.ident();
    if (name == "unit") return LambdaTerm::unit();
    if (name == "fst" || name == "snd") {
      c_.reset(at);
      c_.fail("'" + name + "' needs an operand");
    }
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == name) return LambdaTerm::var(name, it->second);
    }
    if (auto it = options_.free_types.find(name); it != options_.free_types.end()) {
      return LambdaTerm::var(name, it->second);
    }
    c_.reset(at);
    c_.fail("free variable '" + name + "' has no type; annotate it as (" + name + ":A)");
  }

  Cursor& c_;
  const LambdaParseOptions& options_;
  std::vector<std::pair<std::string, Formula>> scope_;
  int untyped_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  Cursor c(text);
  c.require_input();
  Formula f = formula(c);
  c.require_end();
  return f;
}

ArrowTerm parse_arrow_untyped(std::string_view text) {
  Cursor c(text);
  c.require_input();
  ArrowTerm t = arrow(c);
  c.require_end();
  return t;
}

ArrowTerm parse_arrow(std::string_view text, std::optional<Fragment> fragment) {
  ArrowTerm t = parse_arrow_untyped(text);
  infer_type(t);
  if (fragment) {
    check_fragment(t, *fragment);
  } else {
    smallest_fragment(t);
  }
  return t;
}

LambdaTerm parse_lambda(std::string_view text, const LambdaParseOptions& options) {
  Cursor c(text);
  c.require_input();
  LambdaParser p(c, options);
  LambdaTerm t = p.term();
  c.require_end();
  if (!options.allow_untyped_binders) type_of(t);
  return t;
}

}  // namespace proofid
