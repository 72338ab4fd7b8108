#include <algorithm>
#include <set>

#include "napgeo/scenario.hpp"

namespace napgeo::scenario {

namespace {

using detail::Tok;
using detail::Token;

constexpr Type P = Type::kPoint;
constexpr Type L = Type::kLine;
constexpr Type K = Type::kCircle;
constexpr Type S = Type::kScalar;

const std::set<std::string, std::less<>> kKeywords = {"point", "line", "circle", "scalar",
                                                       "assert", "r3"};

const Signature* find(const std::vector<Signature>& table, std::string_view name) {
  auto it = std::find_if(table.begin(), table.end(),
                         [&](const Signature& s) { return s.name == name; });
  return it == table.end() ? nullptr : &*it;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Program program() {
    Program prog;
    while (true) {
      while (peek().kind == Tok::kNewline) ++pos_;
      if (peek().kind == Tok::kEnd) break;
      prog.statements.push_back(statement());
      if (peek().kind != Tok::kNewline && peek().kind != Tok::kEnd) {
        fail("syntax", peek(), "expected end of line, found " + describe(peek()));
      }
    }
    return prog;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] static void fail(const std::string& kind, const Token& at, const std::string& msg) {
    throw ParseError(kind, at.line, at.column, msg);
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::kNewline: return "end of line";
      case Tok::kEnd: return "end of input";
      default: return "'" + t.text + "'";
    }
  }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail("syntax", peek(), "expected " + what + ", found " + describe(peek()));
    return next();
  }

  Stmt statement() {
    const Token& head = peek();
    if (head.kind != Tok::kIdent) fail("syntax", head, "expected a statement, found " + describe(head));
    if (head.text == "assert") return assertion();
    static const std::map<std::string, Type, std::less<>> kBindingKinds = {
        {"point", P}, {"line", L}, {"circle", K}, {"scalar", S}};
    auto kind = kBindingKinds.find(head.text);
    if (kind == kBindingKinds.end()) {
      fail("syntax", head, "expected 'point', 'line', 'circle', 'scalar' or 'assert', found " +
                               describe(head));
    }
    next();
    Stmt st;
    st.kind = Stmt::Kind::kBinding;
    st.type = kind->second;
    st.line = head.line;
    const Token& name = expect(Tok::kIdent, "a name");
    if (kKeywords.count(name.text) || find(functions(), name.text) || find(predicates(), name.text)) {
      fail("syntax", name, "'" + name.text + "' is reserved");
    }
    if (symbols_.count(name.text)) {
      fail("rebinding", name, "'" + name.text + "' is already bound");
    }
    st.name = name.text;
    expect(Tok::kAssign, "'='");
    const Token& at = peek();
    st.value = expr();
    if (st.value.type != st.type) {
      fail("type", at, std::string(type_name(st.type)) + " binding '" + st.name + "' given a " +
                           std::string(type_name(st.value.type)) + " expression");
    }
    symbols_[st.name] = st.type;
    return st;
  }

  Stmt assertion() {
    Stmt st;
    st.kind = Stmt::Kind::kAssertion;
    st.line = next().line;
    const Token& pred = expect(Tok::kIdent, "a predicate name");
    const Signature* sig = find(predicates(), pred.text);
    if (!sig) fail("syntax", pred, "unknown predicate '" + pred.text + "'");
    st.name = pred.text;
    expect(Tok::kLParen, "'('");
    if (st.name == "area_eq") {
      st.lhs = sum();
      expect(Tok::kEq, "'=='");
      st.rhs = sum();
    } else {
      st.args = arguments(*sig, pred);
    }
    expect(Tok::kRParen, "')'");
    return st;
  }

  // Arguments after '(' up to (not including) ')', checked against sig.
  std::vector<Expr> arguments(const Signature& sig, const Token& callee) {
    std::vector<Expr> args;
    std::vector<Token> starts;
    if (peek().kind != Tok::kRParen) {
      while (true) {
        starts.push_back(peek());
        args.push_back(expr());
        if (peek().kind != Tok::kComma) break;
        next();
      }
    }
    const std::size_t max = sig.params.size();
    const std::size_t min = max - sig.optional;
    if (args.size() < min || args.size() > max) {
      const std::string expected =
          min == max ? std::to_string(max) : std::to_string(min) + " to " + std::to_string(max);
      fail("arity", callee, "'" + callee.text + "' takes " + expected + " arguments, got " +
                                std::to_string(args.size()));
    }
    // Segments come in endpoint pairs.
    if (callee.text == "equal_dist" && args.size() % 2 != 0) {
      fail("arity", callee, "'equal_dist' takes 4 or 6 arguments, got " +
                                std::to_string(args.size()));
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i].type != sig.params[i]) {
        fail("type", starts[i], "argument " + std::to_string(i + 1) + " of '" + callee.text +
                                    "' must be a " + std::string(type_name(sig.params[i])) +
                                    ", got a " + std::string(type_name(args[i].type)));
      }
    }
    return args;
  }

  Expr expr() {
    const Token& t = peek();
    if (t.kind == Tok::kLParen) return point_literal();
    if (t.kind == Tok::kInt || t.kind == Tok::kMinus) {
      Expr e;
      e.kind = Expr::Kind::kScalarLiteral;
      e.type = S;
      e.scalar = scalar_literal();
      return e;
    }
    if (t.kind != Tok::kIdent) fail("syntax", t, "expected an expression, found " + describe(t));
    if (peek(1).kind == Tok::kLParen) return call();
    return name_ref();
  }

  Expr name_ref() {
    const Token& t = next();
    if (kKeywords.count(t.text)) fail("syntax", t, "unexpected keyword '" + t.text + "'");
    auto it = symbols_.find(t.text);
    if (it == symbols_.end()) fail("unbound-name", t, "'" + t.text + "' is not bound");
    Expr e;
    e.kind = Expr::Kind::kName;
    e.name = t.text;
    e.type = it->second;
    return e;
  }

  Expr call() {
    const Token& fn = next();
    const Signature* sig = find(functions(), fn.text);
    if (!sig) {
      if (find(predicates(), fn.text)) fail("syntax", fn, "predicate '" + fn.text + "' used as a value");
      fail("syntax", fn, "unknown function '" + fn.text + "'");
    }
    expect(Tok::kLParen, "'('");
    Expr e;
    e.kind = Expr::Kind::kCall;
    e.name = fn.text;
    e.type = sig->result;
    e.args = arguments(*sig, fn);
    expect(Tok::kRParen, "')'");
    return e;
  }

  Expr point_literal() {
    next();
    Expr e;
    e.kind = Expr::Kind::kPointLiteral;
    e.type = P;
    e.point.x = scalar_literal();
    expect(Tok::kComma, "','");
    e.point.y = scalar_literal();
    expect(Tok::kRParen, "')'");
    return e;
  }

  Rat rat() {
    bool negative = false;
    if (peek().kind == Tok::kMinus) {
      next();
      negative = true;
    }
    const Token& n = expect(Tok::kInt, "an integer");
    mpz_class num(n.text, 10);
    mpz_class den(1);
    if (peek().kind == Tok::kSlash) {
      next();
      const Token& d = expect(Tok::kInt, "a denominator");
      den = mpz_class(d.text, 10);
      if (den == 0) fail("syntax", d, "zero denominator");
    }
    if (negative) num = -num;
    return Rat::normalize(std::move(num), std::move(den));
  }

  bool at_r3() const { return peek().kind == Tok::kIdent && peek().text == "r3"; }

  // rat ["+"|"-" rat "r3"] | rat "r3"
  F3 scalar_literal() {
    Rat a = rat();
    if (at_r3()) {
      next();
      return F3(Rat(0), a);
    }
    if (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      const bool minus = next().kind == Tok::kMinus;
      Rat b = rat();
      if (!at_r3()) fail("syntax", peek(), "expected 'r3' after the irrational part");
      next();
      return F3(std::move(a), minus ? -b : b);
    }
    return F3(std::move(a));
  }

  LinearExpr sum() {
    LinearExpr out;
    bool negate = false;
    while (true) {
      term(out, negate);
      if (peek().kind == Tok::kPlus) {
        negate = false;
      } else if (peek().kind == Tok::kMinus) {
        negate = true;
      } else {
        break;
      }
      next();
    }
    return out;
  }

  // rat ["*" atom | "r3"] | ["-"] atom
  void term(LinearExpr& out, bool negate) {
    const Rat sign(negate ? -1 : 1);
    const bool numeric = peek().kind == Tok::kInt ||
                         (peek().kind == Tok::kMinus && peek(1).kind == Tok::kInt);
    if (numeric) {
      Rat c = rat() * sign;
      if (at_r3()) {
        next();
        out.constant += F3(Rat(0), c);
      } else if (peek().kind == Tok::kStar) {
        next();
        out.terms.push_back({std::move(c), scalar_atom()});
      } else {
        out.constant += F3(c);
      }
      return;
    }
    Rat c = sign;
    if (peek().kind == Tok::kMinus) {
      next();
      c = -c;
    }
    out.terms.push_back({std::move(c), scalar_atom()});
  }

  Expr scalar_atom() {
    const Token& at = peek();
    if (at.kind != Tok::kIdent) fail("syntax", at, "expected a scalar term, found " + describe(at));
    Expr e = peek(1).kind == Tok::kLParen ? call() : name_ref();
    if (e.type != S) {
      fail("type", at, "area_eq terms must be scalars, got a " + std::string(type_name(e.type)));
    }
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, Type, std::less<>> symbols_;
};

}  // namespace

const std::vector<Signature>& functions() {
  static const std::vector<Signature> table = {
      {"midpoint", {P, P}, 0, P},
      {"centroid", {P, P, P}, 0, P},
      {"apex_left", {P, P}, 0, P},
      {"apex_right", {P, P}, 0, P},
      {"apex_out", {P, P, P}, 0, P},
      {"apex_in", {P, P, P}, 0, P},
      {"rot60", {P, P, S}, 1, P},
      {"rot120", {P, P, S}, 1, P},
      {"line", {P, P}, 0, L},
      {"intersect", {L, L}, 0, P},
      {"circumcircle", {P, P, P}, 0, K},
      {"reflect", {P, L}, 0, P},
      {"homothety", {P, S, P}, 0, P},
      {"area", {P, P, P}, 0, S},
      {"dist2", {P, P}, 0, S},
      {"fermat", {P, P, P}, 0, P},
  };
  return table;
}

const std::vector<Signature>& predicates() {
  static const std::vector<Signature> table = {
      {"coincide", {P, P}, 0, P},
      {"equal_dist", {P, P, P, P, P, P}, 2, P},
      {"collinear", {P, P, P}, 0, P},
      {"concurrent", {L, L, L}, 0, P},
      {"on_circle", {P, K}, 0, P},
      {"equilateral", {P, P, P}, 0, P},
      {"angle120", {P, P, P}, 0, P},
      {"midpoint_of", {P, P, P}, 0, P},
      {"parallelogram", {P, P, P, P}, 0, P},
      {"concyclic", {P, P, P, P}, 0, P},
      {"area_eq", {}, 0, P},
  };
  return table;
}

Program parse(std::string_view source) { return Parser(detail::lex(source)).program(); }

}  // namespace napgeo::scenario
