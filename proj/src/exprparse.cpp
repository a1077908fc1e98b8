#include "rlag/exprparse.hpp"

#include <cctype>
#include <vector>

namespace rlag::expr {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position)
{
}

EvalError::EvalError(const std::string& message, std::size_t position)
    : std::runtime_error("evaluation error at position " + std::to_string(position) + ": " + message),
      position_(position)
{
}

namespace {

enum class Tok { number, decimal, ident, op, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s)
{
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
      Tok kind = Tok::number;
      if (i < s.size() && s[i] == '.') {
        kind = Tok::decimal;
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          ++i;
      }
      out.push_back({kind, std::string(s.substr(start, i - start)), start});
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i])))
        ++i;
      out.push_back({Tok::ident, std::string(s.substr(start, i - start)), start});
    } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
      out.push_back({Tok::op, std::string(1, c), start});
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::lparen, "(", start});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::rparen, ")", start});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  NodePtr parse_all()
  {
    NodePtr e = expr();
    if (peek().kind == Tok::rparen)
      throw ParseError("unbalanced ')'", peek().pos);
    if (peek().kind != Tok::end)
      throw ParseError("unexpected token '" + peek().text + "'", peek().pos);
    return e;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool at_op(char op) const { return peek().kind == Tok::op && peek().text[0] == op; }

  static NodePtr make(decltype(Node::kind) kind, std::size_t position)
  {
    return std::make_shared<const Node>(Node{std::move(kind), position});
  }

  NodePtr expr()
  {
    NodePtr lhs = term();
    while (at_op('+') || at_op('-')) {
      const char op = next().text[0];
      NodePtr rhs = term();
      const std::size_t p = lhs->position;
      lhs = make(Binary{op, std::move(lhs), std::move(rhs)}, p);
    }
    return lhs;
  }

  NodePtr term()
  {
    NodePtr lhs = factor();
    while (at_op('*') || at_op('/')) {
      const char op = next().text[0];
      NodePtr rhs = factor();
      const std::size_t p = lhs->position;
      lhs = make(Binary{op, std::move(lhs), std::move(rhs)}, p);
    }
    return lhs;
  }

  NodePtr factor()
  {
    NodePtr base = atom();
    if (!at_op('^'))
      return base;
    next();
    const Token& e = peek();
    if (e.kind == Tok::decimal || e.kind == Tok::ident || (e.kind == Tok::op && e.text == "-"))
      throw ParseError("non-integer exponent '" + e.text + "'", e.pos);
    if (e.kind != Tok::number)
      throw ParseError(e.kind == Tok::end ? "missing exponent" : "unexpected token '" + e.text + "'", e.pos);
    next();
    unsigned long v = 0;
    try {
      v = std::stoul(e.text);
    } catch (const std::out_of_range&) {
      throw ParseError("exponent too large", e.pos);
    }
    if (v > 100000)
      throw ParseError("exponent too large", e.pos);
    const std::size_t p = base->position;
    return make(Power{std::move(base), static_cast<unsigned>(v)}, p);
  }

  NodePtr atom()
  {
    const Token& tok = peek();
    switch (tok.kind) {
    case Tok::number:
      next();
      return make(Literal{Rational(Integer(tok.text, 10))}, tok.pos);
    case Tok::decimal:
      throw ParseError("decimal literal '" + tok.text + "' is not exact; write a fraction", tok.pos);
    case Tok::ident:
      next();
      if (tok.text == "t" || tok.text == "x" || tok.text == "y")
        return make(Symbol{tok.text[0]}, tok.pos);
      if (tok.text == "exp") {
        if (peek().kind != Tok::lparen)
          throw ParseError("expected '(' after exp", peek().pos);
        const std::size_t open = next().pos;
        NodePtr arg = expr();
        expect_close(open);
        return make(ExpCall{std::move(arg)}, tok.pos);
      }
      throw ParseError("unknown identifier '" + tok.text + "'", tok.pos);
    case Tok::lparen: {
      next();
      NodePtr inner = expr();
      expect_close(tok.pos);
      return inner;
    }
    case Tok::op:
      if (tok.text == "-") {
        next();
        NodePtr operand = atom();
        return make(Negate{std::move(operand)}, tok.pos);
      }
      throw ParseError("unexpected token '" + tok.text + "'", tok.pos);
    case Tok::rparen:
      throw ParseError("unbalanced ')'", tok.pos);
    case Tok::end:
      throw ParseError("unexpected end of input", tok.pos);
    }
    throw ParseError("unexpected token", tok.pos);
  }

  void expect_close(std::size_t open_pos)
  {
    if (peek().kind == Tok::rparen) {
      next();
      return;
    }
    if (peek().kind == Tok::end)
      throw ParseError("unbalanced '(' opened here", open_pos);
    throw ParseError("expected ')' but found '" + peek().text + "'", peek().pos);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

bool is_atomic(const Node& n)
{
  return std::holds_alternative<Literal>(n.kind) || std::holds_alternative<Symbol>(n.kind) ||
         std::holds_alternative<ExpCall>(n.kind) || std::holds_alternative<Negate>(n.kind);
}

std::string render_atom(const Node& n)
{
  // Non-integer or negative literals only arise programmatically; wrap them so
  // they reparse as a single operand.
  if (const auto* lit = std::get_if<Literal>(&n.kind); lit && (!lit->value.is_integer() || lit->value.sign() < 0))
    return "(" + render(n) + ")";
  return is_atomic(n) ? render(n) : "(" + render(n) + ")";
}

struct Evaluator {
  unsigned order;

  static std::string excerpt(const Node& n) { return render(n); }

  Series<Polynomial> operator()(const Node& n) const
  {
    return std::visit([&](const auto& k) { return eval(k, n); }, n.kind);
  }

  Series<Polynomial> eval(const Literal& l, const Node&) const
  {
    return Series<Polynomial>::constant(Polynomial(l.value), order);
  }

  Series<Polynomial> eval(const Symbol& s, const Node&) const
  {
    if (s.name == 't')
      return Series<Polynomial>::t(order);
    return Series<Polynomial>::constant(s.name == 'x' ? Polynomial::x() : Polynomial::y(), order);
  }

  Series<Polynomial> eval(const Negate& u, const Node&) const { return -(*this)(*u.operand); }

  Series<Polynomial> eval(const Binary& b, const Node&) const
  {
    auto lhs = (*this)(*b.lhs);
    auto rhs = (*this)(*b.rhs);
    switch (b.op) {
    case '+': return lhs + rhs;
    case '-': return lhs - rhs;
    case '*': return lhs * rhs;
    default:
      try {
        return lhs * rhs.reciprocal();
      } catch (const NonUnitError&) {
        throw EvalError("denominator '" + excerpt(*b.rhs) + "' has constant term " +
                            rhs.coeff(0).str() + ", which is not a nonzero rational",
                        b.rhs->position);
      }
    }
  }

  Series<Polynomial> eval(const Power& p, const Node&) const { return (*this)(*p.base).pow(p.exponent); }

  Series<Polynomial> eval(const ExpCall& e, const Node& n) const
  {
    auto arg = (*this)(*e.argument);
    if (!arg.coeff(0).is_zero())
      throw EvalError("exp argument '" + excerpt(*e.argument) + "' has nonzero constant term " +
                          arg.coeff(0).str(),
                      n.position);
    return exp(arg);
  }
};

} // namespace

SeriesExpr parse(std::string_view text)
{
  Parser p(text);
  return SeriesExpr{p.parse_all(), std::string(text)};
}

std::string render(const Node& node)
{
  struct Visitor {
    std::string operator()(const Literal& l) const { return l.value.str(); }
    std::string operator()(const Symbol& s) const { return std::string(1, s.name); }
    std::string operator()(const Negate& u) const { return "-" + render_atom(*u.operand); }
    std::string operator()(const Binary& b) const
    {
      // Left operand never needs parentheses at equal precedence (left
      // association); the right one always does unless it is atomic.
      const bool additive = b.op == '+' || b.op == '-';
      auto lhs_text = [&] {
        if (const auto* inner = std::get_if<Binary>(&b.lhs->kind)) {
          const bool inner_additive = inner->op == '+' || inner->op == '-';
          return !additive && inner_additive ? "(" + render(*b.lhs) + ")" : render(*b.lhs);
        }
        if (std::holds_alternative<Power>(b.lhs->kind))
          return render(*b.lhs);
        return render_atom(*b.lhs);
      };
      auto rhs_text = [&] {
        if (std::holds_alternative<Binary>(b.rhs->kind))
          return "(" + render(*b.rhs) + ")";
        if (std::holds_alternative<Power>(b.rhs->kind))
          return render(*b.rhs);
        return render_atom(*b.rhs);
      };
      return lhs_text() + " " + b.op + " " + rhs_text();
    }
    std::string operator()(const Power& p) const
    {
      return render_atom(*p.base) + "^" + std::to_string(p.exponent);
    }
    std::string operator()(const ExpCall& e) const { return "exp(" + render(*e.argument) + ")"; }
  };
  return std::visit(Visitor{}, node.kind);
}

bool structurally_equal(const Node& a, const Node& b)
{
  if (a.kind.index() != b.kind.index())
    return false;
  struct Visitor {
    const Node& other;
    bool operator()(const Literal& l) const { return l.value == std::get<Literal>(other.kind).value; }
    bool operator()(const Symbol& s) const { return s.name == std::get<Symbol>(other.kind).name; }
    bool operator()(const Negate& u) const
    {
      return structurally_equal(*u.operand, *std::get<Negate>(other.kind).operand);
    }
    bool operator()(const Binary& x) const
    {
      const auto& y = std::get<Binary>(other.kind);
      return x.op == y.op && structurally_equal(*x.lhs, *y.lhs) && structurally_equal(*x.rhs, *y.rhs);
    }
    bool operator()(const Power& x) const
    {
      const auto& y = std::get<Power>(other.kind);
      return x.exponent == y.exponent && structurally_equal(*x.base, *y.base);
    }
    bool operator()(const ExpCall& e) const
    {
      return structurally_equal(*e.argument, *std::get<ExpCall>(other.kind).argument);
    }
  };
  return std::visit(Visitor{b}, a.kind);
}

Series<Polynomial> eval_expr(const SeriesExpr& e, unsigned order)
{
  return Evaluator{order}(*e.root);
}

} // namespace rlag::expr
