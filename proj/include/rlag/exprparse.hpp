#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "rlag/series.hpp"

namespace rlag::expr {

// Grammar (whitespace-insensitive, ASCII operators):
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := atom ('^' uint)?
//   atom   := uint | 't' | 'x' | 'y' | '(' expr ')' | 'exp' '(' expr ')' | '-' atom
//
// '^' binds tightest and takes a literal non-negative integer exponent, so
// "-t^2" is (-t)^2. Binary operators associate to the left.

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Literal {
  Rational value;
};
struct Symbol {
  char name; // 't', 'x' or 'y'
};
struct Negate {
  NodePtr operand;
};
struct Binary {
  char op; // + - * /
  NodePtr lhs;
  NodePtr rhs;
};
struct Power {
  NodePtr base;
  unsigned exponent;
};
struct ExpCall {
  NodePtr argument;
};

struct Node {
  std::variant<Literal, Symbol, Negate, Binary, Power, ExpCall> kind;
  std::size_t position = 0; // offset of the node's first character in the source
};

/// Parsed expression together with its source text.
struct SeriesExpr {
  NodePtr root;
  std::string source;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

class EvalError : public std::runtime_error {
public:
  EvalError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

SeriesExpr parse(std::string_view text);

/// Text that parses back to a structurally identical tree.
std::string render(const Node& node);

/// Equality of tree shape and payloads; source positions are ignored.
bool structurally_equal(const Node& a, const Node& b);

/// Exact truncated expansion in t with coefficients in Q[x, y]. Throws EvalError
/// for a division by a series without unit constant term and for exp of a
/// series with nonzero constant term.
Series<Polynomial> eval_expr(const SeriesExpr& e, unsigned order);

} // namespace rlag::expr
