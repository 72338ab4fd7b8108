#pragma once

// Construction scripts: straight-line, single-assignment programs that build
// points, lines and circles exactly and assert geometric relations between
// them.
//
//   # 3-4-5 triangle
//   point A = (0, 0)
//   point B = (4, 0)
//   point C = (0, 3)
//   point C1 = apex_out(A, B, C)
//   assert coincide(C1, (2, 0 + -2 r3))
//   assert area_eq(area(A, B, C) == 6)
//
// Literals are rationals optionally extended by "+ q r3" where r3 is sqrt 3.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "napgeo/geom.hpp"

namespace napgeo::scenario {

enum class Type { kPoint, kLine, kCircle, kScalar };

std::string_view type_name(Type t);

struct Expr {
  enum class Kind { kName, kPointLiteral, kScalarLiteral, kCall };

  Kind kind = Kind::kName;
  Type type = Type::kScalar;
  std::string name;  // identifier or function name
  Point point;       // kPointLiteral
  F3 scalar;         // kScalarLiteral
  std::vector<Expr> args;

  friend bool operator==(const Expr&, const Expr&) = default;
};

// sum of coeff * atom terms plus a constant, as used by area_eq.
struct LinearExpr {
  struct Term {
    Rat coeff;
    Expr atom;  // scalar-typed name or call
    friend bool operator==(const Term&, const Term&) = default;
  };
  std::vector<Term> terms;
  F3 constant;

  friend bool operator==(const LinearExpr&, const LinearExpr&) = default;
};

struct Stmt {
  enum class Kind { kBinding, kAssertion };

  Kind kind = Kind::kBinding;
  Type type = Type::kPoint;  // binding keyword
  std::string name;          // bound name, or predicate name
  Expr value;                // binding
  std::vector<Expr> args;    // assertion (all predicates but area_eq)
  LinearExpr lhs, rhs;       // area_eq
  int line = 0;              // source line; not part of equality

  friend bool operator==(const Stmt& x, const Stmt& y) {
    return x.kind == y.kind && x.type == y.type && x.name == y.name && x.value == y.value &&
           x.args == y.args && x.lhs == y.lhs && x.rhs == y.rhs;
  }
};

struct Program {
  std::vector<Stmt> statements;
  friend bool operator==(const Program&, const Program&) = default;
};

// kind is one of "lexical", "syntax", "arity", "type", "unbound-name",
// "rebinding".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string kind, int line, int column, const std::string& message);
  const std::string& kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string kind_;
  int line_;
  int column_;
};

class EvalError : public std::runtime_error {
 public:
  EvalError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

using Value = std::variant<Point, LineCoeffs, Circle, F3>;

struct AssertionOutcome {
  int line = 0;
  std::string text;  // pretty-printed assertion
  bool passed = false;
  std::string details;
};

struct EvalOutcome {
  std::map<std::string, Value> bindings;
  std::vector<AssertionOutcome> assertions;
  bool all_passed() const;
};

// Signature of a constructor or predicate. Trailing `optional` parameters
// may be omitted.
struct Signature {
  std::string_view name;
  std::vector<Type> params;
  std::size_t optional = 0;
  Type result = Type::kPoint;  // unused for predicates
};

const std::vector<Signature>& functions();
const std::vector<Signature>& predicates();  // area_eq has an empty param list

Program parse(std::string_view source);
EvalOutcome eval(const Program& program);
std::string pretty_print(const Program& program);
std::string pretty_print(const Stmt& stmt);
std::string pretty_print(const Expr& expr);

struct ScriptRun {
  std::optional<EvalOutcome> outcome;  // empty on parse error
  int status = 0;                      // 0 all pass, 1 failure, 2 parse error
  std::vector<std::string> diagnostics;
};

ScriptRun run_script(std::string_view source);

namespace detail {

enum class Tok { kIdent, kInt, kLParen, kRParen, kComma, kAssign, kEq, kPlus, kMinus,
                 kStar, kSlash, kNewline, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> lex(std::string_view source);

}  // namespace detail

}  // namespace napgeo::scenario
