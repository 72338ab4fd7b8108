#include "napgeo/scenario.hpp"

namespace napgeo::scenario {

namespace {

std::string join(const std::vector<Expr>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += pretty_print(args[i]);
  }
  return out;
}

std::string print_sum(const LinearExpr& e) {
  std::string out;
  for (const auto& t : e.terms) {
    if (!out.empty()) out += " + ";
    if (t.coeff != Rat(1)) out += t.coeff.str() + "*";
    out += pretty_print(t.atom);
  }
  if (!e.constant.is_zero() || e.terms.empty()) {
    if (!out.empty()) out += " + ";
    out += e.constant.str();
  }
  return out;
}

}  // namespace

std::string pretty_print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kName: return e.name;
    case Expr::Kind::kScalarLiteral: return e.scalar.str();
    case Expr::Kind::kPointLiteral: return e.point.str();
    case Expr::Kind::kCall: return e.name + "(" + join(e.args) + ")";
  }
  return {};
}

std::string pretty_print(const Stmt& st) {
  if (st.kind == Stmt::Kind::kBinding) {
    return std::string(type_name(st.type)) + " " + st.name + " = " + pretty_print(st.value);
  }
  if (st.name == "area_eq") {
    return "assert area_eq(" + print_sum(st.lhs) + " == " + print_sum(st.rhs) + ")";
  }
  return "assert " + st.name + "(" + join(st.args) + ")";
}

std::string pretty_print(const Program& program) {
  std::string out;
  for (const auto& st : program.statements) out += pretty_print(st) + "\n";
  return out;
}

}  // namespace napgeo::scenario
