#pragma once

#include <iosfwd>
#include <string>

#include "napgeo/qsqrt3.hpp"

namespace napgeo {

struct Point {
  F3 x;
  F3 y;

  friend bool operator==(const Point&, const Point&) = default;
  friend Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
  friend Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
  friend Point operator*(const F3& k, const Point& p) { return {k * p.x, k * p.y}; }

  std::string str() const;  // "(x, y)" in F3 text form
};

std::ostream& operator<<(std::ostream& os, const Point& p);

// Locus a*x + b*y + c = 0. Canonical: the first nonzero of (a, b) is 1, so
// two LineCoeffs describe the same line iff they compare equal.
class LineCoeffs {
 public:
  // Scales to canonical form. GeometryError("degenerate line") if a = b = 0.
  LineCoeffs(F3 a, F3 b, F3 c);

  const F3& a() const { return a_; }
  const F3& b() const { return b_; }
  const F3& c() const { return c_; }

  // Value of a*x + b*y + c at p; zero iff p lies on the line.
  F3 eval(const Point& p) const { return a_ * p.x + b_ * p.y + c_; }

  friend bool operator==(const LineCoeffs&, const LineCoeffs&) = default;
  std::string str() const;

 private:
  F3 a_, b_, c_;
};

struct Circle {
  Point center;
  F3 r2;  // squared radius, strictly positive

  friend bool operator==(const Circle&, const Circle&) = default;
  std::string str() const;
};

enum class Side { kLeft, kRight };

F3 dot(const Point& u, const Point& v);
F3 cross(const Point& u, const Point& v);

Point midpoint(const Point& p, const Point& q);
Point centroid3(const Point& p, const Point& q, const Point& r);

// Rotation of p about center by k*60 degrees counterclockwise. Accepts any
// integer k; the value is reduced mod 6.
Point rotate60k(const Point& center, const Point& p, int k);

// Third vertex of the equilateral triangle on p->q, on the requested side of
// the directed line. GeometryError("degenerate segment") when p == q.
Point equilateral_apex(const Point& p, const Point& q, Side side);

// Half the cross product of (q - p, r - p); positive for counterclockwise.
F3 signed_area(const Point& p, const Point& q, const Point& r);
F3 dist2(const Point& p, const Point& q);

LineCoeffs line_through(const Point& p, const Point& q);
Point intersect_lines(const LineCoeffs& l1, const LineCoeffs& l2);

Circle circumcircle(const Point& p, const Point& q, const Point& r);
bool on_circle(const Point& p, const Circle& k);
bool concyclic4(const Point& p, const Point& q, const Point& r, const Point& s);
bool collinear(const Point& p, const Point& q, const Point& r);

// Unsigned angle at v between rays v->a and v->b is exactly 120 degrees.
// Throws GeometryError("undefined angle") if a == v or b == v.
bool angle_eq_120(const Point& a, const Point& v, const Point& b);

// Unsigned angle at v is strictly below 120 degrees. Same error contract.
bool angle_lt_120(const Point& a, const Point& v, const Point& b);

// p lies on the closed segment [s, t].
bool on_segment(const Point& p, const Point& s, const Point& t);

Point reflect_over_line(const Point& p, const LineCoeffs& l);
Point homothety(const Point& center, const F3& ratio, const Point& p);

bool is_equilateral(const Point& p, const Point& q, const Point& r);

// Parallelogram criterion: midpoint(p, r) == midpoint(q, s).
bool diagonals_bisect(const Point& p, const Point& q, const Point& r, const Point& s);

}  // namespace napgeo
