#include <sstream>

#include "napgeo/errors.hpp"
#include "napgeo/napoleon.hpp"
#include "napgeo/scenario.hpp"

namespace napgeo::scenario {

namespace {

std::string show(const Value& v) {
  return std::visit([](const auto& x) { return x.str(); }, v);
}

int rotation_direction(const F3& s) {
  if (s == F3(1)) return 1;
  if (s == F3(-1)) return -1;
  throw GeometryError("rotation direction must be 1 or -1");
}

// Apex on segment p-q on the side of ref (toward) or away from it.
Point apex_relative(const Point& p, const Point& q, const Point& ref, bool toward) {
  const int side = signed_area(p, q, ref).sign();
  if (side == 0) throw GeometryError("degenerate triangle");
  return equilateral_apex(p, q, (side > 0) == toward ? Side::kLeft : Side::kRight);
}

class Evaluator {
 public:
  EvalOutcome run(const Program& program) {
    for (const Stmt& st : program.statements) {
      try {
        if (st.kind == Stmt::Kind::kBinding) {
          out_.bindings.insert_or_assign(st.name, value(st.value));
        } else {
          out_.assertions.push_back(assertion(st));
        }
      } catch (const GeometryError& e) {
        throw EvalError(st.line, e.what());
      }
    }
    return std::move(out_);
  }

 private:
  const Point& point(const Value& v) { return std::get<Point>(v); }
  const F3& scalar(const Value& v) { return std::get<F3>(v); }

  Value value(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::kName: return out_.bindings.at(e.name);
      case Expr::Kind::kPointLiteral: return e.point;
      case Expr::Kind::kScalarLiteral: return e.scalar;
      case Expr::Kind::kCall: break;
    }
    std::vector<Value> a;
    a.reserve(e.args.size());
    for (const Expr& arg : e.args) a.push_back(value(arg));
    const std::string& f = e.name;
    auto P = [&](std::size_t i) -> const Point& { return point(a[i]); };

    if (f == "midpoint") return midpoint(P(0), P(1));
    if (f == "centroid") return centroid3(P(0), P(1), P(2));
    if (f == "apex_left") return equilateral_apex(P(0), P(1), Side::kLeft);
    if (f == "apex_right") return equilateral_apex(P(0), P(1), Side::kRight);
    if (f == "apex_out") return apex_relative(P(0), P(1), P(2), false);
    if (f == "apex_in") return apex_relative(P(0), P(1), P(2), true);
    if (f == "rot60" || f == "rot120") {
      const int dir = a.size() == 3 ? rotation_direction(scalar(a[2])) : 1;
      return rotate60k(P(0), P(1), (f == "rot60" ? 1 : 2) * dir);
    }
    if (f == "line") return line_through(P(0), P(1));
    if (f == "intersect") return intersect_lines(std::get<LineCoeffs>(a[0]), std::get<LineCoeffs>(a[1]));
    if (f == "circumcircle") return circumcircle(P(0), P(1), P(2));
    if (f == "reflect") return reflect_over_line(P(0), std::get<LineCoeffs>(a[1]));
    if (f == "homothety") return homothety(P(0), scalar(a[1]), P(2));
    if (f == "area") return signed_area(P(0), P(1), P(2));
    if (f == "dist2") return dist2(P(0), P(1));
    if (f == "fermat") {
      const Triple apexes = build_outward_apexes(P(0), P(1), P(2));
      return fermat_point(P(0), P(1), P(2), apexes[0], apexes[1]);
    }
    throw GeometryError("unknown function '" + f + "'");
  }

  F3 linear(const LinearExpr& e) {
    F3 total = e.constant;
    for (const auto& t : e.terms) total += F3(t.coeff) * scalar(value(t.atom));
    return total;
  }

  AssertionOutcome assertion(const Stmt& st) {
    AssertionOutcome o;
    o.line = st.line;
    o.text = pretty_print(st);
    if (st.name == "area_eq") {
      const F3 lhs = linear(st.lhs);
      const F3 rhs = linear(st.rhs);
      o.passed = lhs == rhs;
      o.details = "lhs = " + lhs.str() + ", rhs = " + rhs.str();
      return o;
    }
    std::vector<Value> a;
    for (const Expr& arg : st.args) a.push_back(value(arg));
    // A predicate that is undefined on its (already constructed) arguments
    // records a failure instead of aborting the script.
    try {
      predicate(st.name, a, o);
    } catch (const GeometryError& e) {
      o.passed = false;
      o.details = std::string("error: ") + e.what();
    }
    return o;
  }

  void predicate(const std::string& name, const std::vector<Value>& a, AssertionOutcome& o) {
    auto P = [&](std::size_t i) -> const Point& { return point(a[i]); };
    std::ostringstream d;
    if (name == "coincide") {
      o.passed = P(0) == P(1);
      d << show(a[0]) << (o.passed ? " == " : " != ") << show(a[1]);
    } else if (name == "equal_dist") {
      const F3 first = dist2(P(0), P(1));
      o.passed = true;
      d << "dist2 values:";
      for (std::size_t i = 0; i + 1 < a.size(); i += 2) {
        const F3 v = dist2(P(i), P(i + 1));
        o.passed = o.passed && v == first;
        d << " " << v.str() << (i + 3 < a.size() ? "," : "");
      }
    } else if (name == "collinear") {
      const F3 s = signed_area(P(0), P(1), P(2));
      o.passed = s.is_zero();
      d << "signed area " << s.str();
    } else if (name == "concurrent") {
      const auto& l1 = std::get<LineCoeffs>(a[0]);
      const Point p12 = intersect_lines(l1, std::get<LineCoeffs>(a[1]));
      const Point p13 = intersect_lines(l1, std::get<LineCoeffs>(a[2]));
      o.passed = p12 == p13;
      d << "meets " << p12.str() << (o.passed ? " == " : " != ") << p13.str();
    } else if (name == "on_circle") {
      const auto& k = std::get<Circle>(a[1]);
      const F3 r2 = dist2(P(0), k.center);
      o.passed = r2 == k.r2;
      d << "dist2 to center " << r2.str() << " vs r2 " << k.r2.str();
    } else if (name == "equilateral") {
      o.passed = is_equilateral(P(0), P(1), P(2));
      d << "sides^2 " << dist2(P(0), P(1)).str() << ", " << dist2(P(1), P(2)).str() << ", "
        << dist2(P(2), P(0)).str();
    } else if (name == "angle120") {
      o.passed = angle_eq_120(P(0), P(1), P(2));
      d << "angle at " << P(1).str() << (o.passed ? " is" : " is not") << " 120 degrees";
    } else if (name == "midpoint_of") {
      const Point m = midpoint(P(1), P(2));
      o.passed = P(0) == m;
      d << show(a[0]) << (o.passed ? " == " : " != ") << m.str();
    } else if (name == "parallelogram") {
      o.passed = diagonals_bisect(P(0), P(1), P(2), P(3));
      d << "diagonal midpoints " << midpoint(P(0), P(2)).str() << ", "
        << midpoint(P(1), P(3)).str();
    } else if (name == "concyclic") {
      o.passed = concyclic4(P(0), P(1), P(2), P(3));
      d << (o.passed ? "lifting determinant vanishes" : "lifting determinant is nonzero");
    } else {
      throw GeometryError("unknown predicate '" + name + "'");
    }
    o.details = d.str();
  }

  EvalOutcome out_;
};

}  // namespace

bool EvalOutcome::all_passed() const {
  for (const auto& a : assertions) {
    if (!a.passed) return false;
  }
  return true;
}

EvalOutcome eval(const Program& program) { return Evaluator().run(program); }

ScriptRun run_script(std::string_view source) {
  ScriptRun run;
  Program program;
  try {
    program = parse(source);
  } catch (const ParseError& e) {
    run.status = 2;
    run.diagnostics.push_back(e.what());
    return run;
  }
  try {
    run.outcome = eval(program);
  } catch (const EvalError& e) {
    run.status = 1;
    run.diagnostics.push_back(std::string("evaluation error: ") + e.what());
    return run;
  }
  run.status = run.outcome->all_passed() ? 0 : 1;
  return run;
}

}  // namespace napgeo::scenario
