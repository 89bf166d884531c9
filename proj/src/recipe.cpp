#include "ocb/recipe.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "ocb/errors.hpp"
#include "ocb/qseries.hpp"

namespace ocb {

namespace recipe {

namespace {

Recipe make(RecipeNode::Kind kind, long a = 0, long b = 0, std::vector<Recipe> args = {}, Rational value = Rational(0)) {
  auto n = std::make_shared<RecipeNode>();
  n->kind = kind;
  n->a = a;
  n->b = b;
  n->args = std::move(args);
  n->value = std::move(value);
  return n;
}

}  // namespace

Recipe constant(const Rational& c) { return make(RecipeNode::Kind::Constant, 0, 0, {}, c); }
Recipe qpow(long k) { return make(RecipeNode::Kind::QPower, k); }
Recipe euler(long delta, long e) {
  if (delta < 1) throw EvaluationError("euler product needs delta >= 1");
  return make(RecipeNode::Kind::EulerProduct, delta, e);
}
Recipe e4() { return make(RecipeNode::Kind::E4); }
Recipe delta() { return make(RecipeNode::Kind::Delta); }
Recipe klein_j() { return make(RecipeNode::Kind::KleinJ); }
Recipe partition_slice(long a, long b) { return make(RecipeNode::Kind::PartitionSlice, a, b); }
Recipe derivative(Recipe r) { return make(RecipeNode::Kind::Derivative, 0, 0, {std::move(r)}); }
Recipe sum(std::vector<Recipe> terms) { return make(RecipeNode::Kind::Sum, 0, 0, std::move(terms)); }
Recipe difference(Recipe a, Recipe b) { return make(RecipeNode::Kind::Difference, 0, 0, {std::move(a), std::move(b)}); }
Recipe negate(Recipe a) { return make(RecipeNode::Kind::Difference, 0, 0, {std::move(a)}); }
Recipe product(std::vector<Recipe> factors) { return make(RecipeNode::Kind::Product, 0, 0, std::move(factors)); }
Recipe quotient(Recipe a, Recipe b) { return make(RecipeNode::Kind::Quotient, 0, 0, {std::move(a), std::move(b)}); }
Recipe power(Recipe r, long e) { return make(RecipeNode::Kind::Power, e, 0, {std::move(r)}); }

}  // namespace recipe

namespace {

struct Token {
  enum class Type { Open, Close, Atom, End } type;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    if (pos_ >= src_.size()) return {Token::Type::End, "", line_, col_};
    const int line = line_, col = col_;
    char c = src_[pos_];
    if (c == '(' || c == ')') {
      advance();
      return {c == '(' ? Token::Type::Open : Token::Type::Close, std::string(1, c), line, col};
    }
    std::string atom;
    while (pos_ < src_.size()) {
      c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ';') break;
      atom += c;
      advance();
    }
    return {Token::Type::Atom, atom, line, col};
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ';') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

bool looks_numeric(const std::string& s) {
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { shift(); }

  Recipe file() {
    Recipe result;
    while (true) {
      if (tok_.type == Token::Type::End) {
        if (!result) throw error("empty recipe");
        return result;
      }
      if (result) throw error("unexpected input after the recipe expression");
      if (tok_.type == Token::Type::Open) {
        Token open = tok_;
        shift();
        if (tok_.type == Token::Type::Atom && tok_.text == "let") {
          shift();
          if (tok_.type != Token::Type::Atom || looks_numeric(tok_.text)) throw error("expected a name after 'let'");
          std::string name = tok_.text;
          shift();
          Recipe value = expr();
          expect_close();
          bindings_[name] = value;
          continue;
        }
        result = form(open);
      } else {
        result = expr();
      }
    }
  }

 private:
  ParseError error(const std::string& msg) const { return ParseError(msg, tok_.line, tok_.column); }

  void shift() { tok_ = lex_.next(); }

  void expect_close() {
    if (tok_.type != Token::Type::Close) throw error("expected ')'");
    shift();
  }

  long integer() {
    if (tok_.type != Token::Type::Atom || !looks_numeric(tok_.text)) throw error("expected an integer");
    Rational v;
    try {
      v = parse_rational(tok_.text);
    } catch (const ParseError&) {
      throw error("malformed integer '" + tok_.text + "'");
    }
    if (!is_integer(v) || !v.get_num().fits_slong_p()) throw error("expected a machine-size integer, got '" + tok_.text + "'");
    shift();
    return v.get_num().get_si();
  }

  Recipe expr() {
    if (tok_.type == Token::Type::Open) {
      Token open = tok_;
      shift();
      return form(open);
    }
    if (tok_.type != Token::Type::Atom) throw error(tok_.type == Token::Type::End ? "unexpected end of input" : "unexpected ')'");
    if (looks_numeric(tok_.text)) {
      Rational v;
      try {
        v = parse_rational(tok_.text);
      } catch (const ParseError&) {
        throw error("malformed number '" + tok_.text + "'");
      }
      shift();
      return recipe::constant(v);
    }
    auto it = bindings_.find(tok_.text);
    if (it == bindings_.end()) throw error("unknown name '" + tok_.text + "'");
    shift();
    return it->second;
  }

  std::vector<Recipe> rest() {
    std::vector<Recipe> args;
    while (tok_.type != Token::Type::Close) {
      if (tok_.type == Token::Type::End) throw error("unexpected end of input, missing ')'");
      args.push_back(expr());
    }
    shift();
    return args;
  }

  // Called after '('.
  Recipe form(const Token& open) {
    if (tok_.type != Token::Type::Atom) throw error("expected an operator after '('");
    const std::string op = tok_.text;
    const Token at = tok_;
    shift();
    auto arity = [&](const std::vector<Recipe>& args, size_t lo, size_t hi) {
      if (args.size() < lo || args.size() > hi)
        throw ParseError("wrong number of arguments to '" + op + "'", at.line, at.column);
    };
    Recipe r;
    if (op == "q") {
      r = recipe::qpow(integer());
      expect_close();
    } else if (op == "euler") {
      const Token arg = tok_;
      long d = integer();
      long e = integer();
      if (d < 1) throw ParseError("euler needs delta >= 1", arg.line, arg.column);
      r = recipe::euler(d, e);
      expect_close();
    } else if (op == "E4") {
      expect_close();
      r = recipe::e4();
    } else if (op == "Delta") {
      expect_close();
      r = recipe::delta();
    } else if (op == "J") {
      expect_close();
      r = recipe::klein_j();
    } else if (op == "pslice") {
      long a = integer();
      long b = integer();
      r = recipe::partition_slice(a, b);
      expect_close();
    } else if (op == "d/dq") {
      auto args = rest();
      arity(args, 1, 1);
      r = recipe::derivative(args[0]);
    } else if (op == "+") {
      auto args = rest();
      arity(args, 1, SIZE_MAX);
      r = recipe::sum(std::move(args));
    } else if (op == "-") {
      auto args = rest();
      arity(args, 1, 2);
      r = args.size() == 1 ? recipe::negate(args[0]) : recipe::difference(args[0], args[1]);
    } else if (op == "*") {
      auto args = rest();
      arity(args, 1, SIZE_MAX);
      r = recipe::product(std::move(args));
    } else if (op == "/") {
      auto args = rest();
      arity(args, 2, 2);
      r = recipe::quotient(args[0], args[1]);
    } else if (op == "^") {
      Recipe base = expr();
      long e = integer();
      expect_close();
      r = recipe::power(base, e);
    } else {
      throw ParseError("unknown operator '" + op + "'", at.line, at.column);
    }
    (void)open;
    return r;
  }

  Lexer lex_;
  Token tok_{Token::Type::End, "", 1, 1};
  std::map<std::string, Recipe> bindings_;
};

std::string render(const RecipeNode& n) {
  using K = RecipeNode::Kind;
  auto join = [](const std::string& op, const std::vector<Recipe>& args) {
    std::string s = "(" + op;
    for (const auto& a : args) s += " " + render(*a);
    return s + ")";
  };
  switch (n.kind) {
    case K::Constant: return to_string(n.value);
    case K::QPower: return "(q " + std::to_string(n.a) + ")";
    case K::EulerProduct: return "(euler " + std::to_string(n.a) + " " + std::to_string(n.b) + ")";
    case K::E4: return "(E4)";
    case K::Delta: return "(Delta)";
    case K::KleinJ: return "(J)";
    case K::PartitionSlice: return "(pslice " + std::to_string(n.a) + " " + std::to_string(n.b) + ")";
    case K::Derivative: return join("d/dq", n.args);
    case K::Sum: return join("+", n.args);
    case K::Difference: return join("-", n.args);
    case K::Product: return join("*", n.args);
    case K::Quotient: return join("/", n.args);
    case K::Power: return "(^ " + render(*n.args[0]) + " " + std::to_string(n.a) + ")";
  }
  return "";
}

class Evaluator {
 public:
  explicit Evaluator(int working) : w_(working) {}

  LaurentSeries eval(const RecipeNode& n) {
    auto it = memo_.find(&n);
    if (it != memo_.end()) return it->second;
    LaurentSeries s = compute(n);
    memo_.emplace(&n, s);
    return s;
  }

 private:
  static int as_int(long v) { return static_cast<int>(v); }

  LaurentSeries compute(const RecipeNode& n) {
    using K = RecipeNode::Kind;
    switch (n.kind) {
      case K::Constant: return LaurentSeries::constant(n.value, w_);
      case K::QPower: return LaurentSeries::monomial(Rational(1), as_int(n.a), std::max(w_, as_int(n.a) + 1));
      case K::EulerProduct: return euler_product(as_int(n.a), as_int(n.b), w_);
      case K::E4: return eisenstein_e4(w_);
      case K::Delta: return modular_discriminant(w_);
      case K::KleinJ: return klein_j(w_);
      case K::PartitionSlice:
        if (n.a <= 0) throw EvaluationError("pslice needs a >= 1");
        return partition_slice(as_int(n.a), as_int(n.b), w_);
      case K::Derivative: return series_derivative(eval(*n.args[0]));
      case K::Sum: {
        LaurentSeries acc = eval(*n.args[0]);
        for (size_t i = 1; i < n.args.size(); ++i) acc += eval(*n.args[i]);
        return acc;
      }
      case K::Difference:
        if (n.args.size() == 1) return -eval(*n.args[0]);
        return eval(*n.args[0]) - eval(*n.args[1]);
      case K::Product: {
        LaurentSeries acc = eval(*n.args[0]);
        for (size_t i = 1; i < n.args.size(); ++i) acc = acc * eval(*n.args[i]);
        return acc;
      }
      case K::Quotient: {
        LaurentSeries den = eval(*n.args[1]);
        if (den.is_zero()) throw EvaluationError("division by a series that is zero to O(q^" + std::to_string(den.trunc()) + ")");
        return series_div(eval(*n.args[0]), den);
      }
      case K::Power: {
        LaurentSeries base = eval(*n.args[0]);
        if (n.a < 0 && base.is_zero()) throw EvaluationError("negative power of a series that is zero to O(q^" + std::to_string(base.trunc()) + ")");
        return series_pow(base, n.a);
      }
    }
    throw InternalContractViolation("unknown recipe node");
  }

  int w_;
  std::unordered_map<const RecipeNode*, LaurentSeries> memo_;
};

}  // namespace

Recipe parse_recipe(std::string_view text) { return Parser(text).file(); }

Recipe load_recipe(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open recipe file '" + path + "'", 0, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_recipe(ss.str());
}

std::string to_string(const Recipe& r) { return render(*r); }

LaurentSeries evaluate_recipe(const Recipe& r, int trunc) {
  int working = std::max(trunc, 1);
  for (int attempt = 0; attempt < 32; ++attempt) {
    LaurentSeries s = Evaluator(working).eval(*r);
    if (s.trunc() >= trunc) return s.truncated(trunc);
    // Every leaf gains the same precision, so the output gains at least as much.
    working += trunc - s.trunc();
  }
  throw EvaluationError("could not reach O(q^" + std::to_string(trunc) + ") by raising the working precision");
}

}  // namespace ocb
