#include "napgeo/geom.hpp"

#include <array>
#include <ostream>
#include <utility>

#include "napgeo/errors.hpp"

namespace napgeo {

namespace {

const Rat kHalf = Rat::normalize(1, 2);

// (cos, sin) of k*60 degrees, k in [0, 6).
std::pair<F3, F3> unit_turn(int k) {
  const F3 half(kHalf);
  const F3 h3(Rat(0), kHalf);  // sqrt(3)/2
  switch (((k % 6) + 6) % 6) {
    case 0: return {F3(1), F3(0)};
    case 1: return {half, h3};
    case 2: return {-half, h3};
    case 3: return {F3(-1), F3(0)};
    case 4: return {-half, -h3};
    default: return {half, -h3};
  }
}

Point turn(const Point& v, int k) {
  auto [c, s] = unit_turn(k);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

}  // namespace

std::string Point::str() const { return "(" + x.str() + ", " + y.str() + ")"; }

std::ostream& operator<<(std::ostream& os, const Point& p) { return os << p.str(); }

LineCoeffs::LineCoeffs(F3 a, F3 b, F3 c) {
  if (a.is_zero() && b.is_zero()) throw GeometryError("degenerate line");
  const F3 lead = a.is_zero() ? b : a;
  a_ = a / lead;
  b_ = b / lead;
  c_ = c / lead;
}

std::string LineCoeffs::str() const {
  return "[" + a_.str() + ", " + b_.str() + ", " + c_.str() + "]";
}

std::string Circle::str() const { return "circle(" + center.str() + ", r2 = " + r2.str() + ")"; }

F3 dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
F3 cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

Point midpoint(const Point& p, const Point& q) {
  const F3 half(kHalf);
  return {half * (p.x + q.x), half * (p.y + q.y)};
}

Point centroid3(const Point& p, const Point& q, const Point& r) {
  const F3 third(Rat::normalize(1, 3));
  return {third * (p.x + q.x + r.x), third * (p.y + q.y + r.y)};
}

Point rotate60k(const Point& center, const Point& p, int k) {
  return center + turn(p - center, k);
}

Point equilateral_apex(const Point& p, const Point& q, Side side) {
  if (p == q) throw GeometryError("degenerate segment");
  return rotate60k(p, q, side == Side::kLeft ? 1 : -1);
}

F3 signed_area(const Point& p, const Point& q, const Point& r) {
  return F3(kHalf) * cross(q - p, r - p);
}

F3 dist2(const Point& p, const Point& q) {
  const Point d = q - p;
  return dot(d, d);
}

LineCoeffs line_through(const Point& p, const Point& q) {
  if (p == q) throw GeometryError("degenerate segment");
  // Normal (dy, -dx) to the direction q - p.
  const F3 a = q.y - p.y;
  const F3 b = p.x - q.x;
  const F3 c = -(a * p.x + b * p.y);
  return LineCoeffs(a, b, c);
}

Point intersect_lines(const LineCoeffs& l1, const LineCoeffs& l2) {
  const F3 det = l1.a() * l2.b() - l2.a() * l1.b();
  if (det.is_zero()) {
    throw GeometryError(l1 == l2 ? "coincident lines" : "parallel lines");
  }
  return {(l1.b() * l2.c() - l2.b() * l1.c()) / det,
          (l1.c() * l2.a() - l2.c() * l1.a()) / det};
}

Circle circumcircle(const Point& p, const Point& q, const Point& r) {
  const Point b = q - p;
  const Point c = r - p;
  const F3 d = F3(2) * cross(b, c);
  if (d.is_zero()) throw GeometryError("collinear points");
  const F3 bb = dot(b, b);
  const F3 cc = dot(c, c);
  const Point offset{(c.y * bb - b.y * cc) / d, (b.x * cc - c.x * bb) / d};
  return Circle{p + offset, dot(offset, offset)};
}

bool on_circle(const Point& p, const Circle& k) { return dist2(p, k.center) == k.r2; }

bool concyclic4(const Point& p, const Point& q, const Point& r, const Point& s) {
  // Lifting determinant, translated so that s sits at the origin.
  std::array<Point, 3> rows{p - s, q - s, r - s};
  std::array<F3, 3> lift;
  for (std::size_t i = 0; i < rows.size(); ++i) lift[i] = dot(rows[i], rows[i]);
  const F3 det = rows[0].x * (rows[1].y * lift[2] - lift[1] * rows[2].y) -
                 rows[0].y * (rows[1].x * lift[2] - lift[1] * rows[2].x) +
                 lift[0] * (rows[1].x * rows[2].y - rows[1].y * rows[2].x);
  return det.is_zero();
}

bool collinear(const Point& p, const Point& q, const Point& r) {
  return cross(q - p, r - p).is_zero();
}

bool angle_eq_120(const Point& a, const Point& v, const Point& b) {
  if (a == v || b == v) throw GeometryError("undefined angle");
  const Point u = a - v;
  const Point w = b - v;
  for (int k : {2, -2}) {
    const Point ru = turn(u, k);
    if (cross(ru, w).is_zero() && dot(ru, w).sign() > 0) return true;
  }
  return false;
}

bool angle_lt_120(const Point& a, const Point& v, const Point& b) {
  if (a == v || b == v) throw GeometryError("undefined angle");
  const Point u = a - v;
  const Point w = b - v;
  const F3 d = dot(u, w);
  if (d.sign() >= 0) return true;
  // cos > -1/2 with u.w < 0  <=>  4 (u.w)^2 < |u|^2 |w|^2.
  return (F3(4) * d * d - dot(u, u) * dot(w, w)).sign() < 0;
}

bool on_segment(const Point& p, const Point& s, const Point& t) {
  if (!collinear(s, t, p)) return false;
  return dot(p - s, t - p).sign() >= 0;
}

Point reflect_over_line(const Point& p, const LineCoeffs& l) {
  const F3 scale = F3(2) * l.eval(p) / (l.a() * l.a() + l.b() * l.b());
  return {p.x - scale * l.a(), p.y - scale * l.b()};
}

Point homothety(const Point& center, const F3& ratio, const Point& p) {
  return center + ratio * (p - center);
}

bool is_equilateral(const Point& p, const Point& q, const Point& r) {
  const F3 d = dist2(p, q);
  return !d.is_zero() && d == dist2(q, r) && d == dist2(r, p);
}

bool diagonals_bisect(const Point& p, const Point& q, const Point& r, const Point& s) {
  return p + r == q + s;
}

}  // namespace napgeo
