#include "napgeo/napoleon.hpp"

#include "napgeo/errors.hpp"

namespace napgeo {

namespace {

void require_nondegenerate(const Point& A, const Point& B, const Point& C) {
  if (signed_area(A, B, C).is_zero()) throw GeometryError("degenerate triangle");
}

// Equilateral apex on segment p-q, on the side of `ref` (toward) or the
// opposite side (away).
Point apex_relative_to(const Point& p, const Point& q, const Point& ref, bool toward) {
  const bool ref_left = signed_area(p, q, ref).sign() > 0;
  return equilateral_apex(p, q, ref_left == toward ? Side::kLeft : Side::kRight);
}

Triple apexes(const Point& A, const Point& B, const Point& C, bool toward) {
  require_nondegenerate(A, B, C);
  return {apex_relative_to(B, C, A, toward), apex_relative_to(C, A, B, toward),
          apex_relative_to(A, B, C, toward)};
}

Triple opposite_midpoints(const Triple& t) {
  return {midpoint(t[1], t[2]), midpoint(t[2], t[0]), midpoint(t[0], t[1])};
}

// Centroids of (X, Y, Z) with vertex i of the base swapped in for vertex i of t.
Triple flank_centroids(const Triple& base, const Triple& t) {
  return {centroid3(t[0], base[1], base[2]), centroid3(base[0], t[1], base[2]),
          centroid3(base[0], base[1], t[2])};
}

F3 abs(const F3& x) { return x.sign() < 0 ? -x : x; }

}  // namespace

Triple build_outward_apexes(const Point& A, const Point& B, const Point& C) {
  return apexes(A, B, C, false);
}

Triple build_inward_apexes(const Point& A, const Point& B, const Point& C) {
  return apexes(A, B, C, true);
}

Point fermat_point(const Point& A, const Point& B, const Point& /*C*/, const Point& A1,
                   const Point& B1) {
  if (A == A1 || B == B1) throw GeometryError("degenerate cevian");
  try {
    return intersect_lines(line_through(A, A1), line_through(B, B1));
  } catch (const GeometryError&) {
    throw GeometryError("no intersection");
  }
}

NapoleonBundle build_bundle(const Point& A, const Point& B, const Point& C) {
  require_nondegenerate(A, B, C);
  NapoleonBundle b;
  b.base = {A, B, C};
  b.side_midpoints = opposite_midpoints(b.base);
  b.outward_apexes = build_outward_apexes(A, B, C);
  b.inward_apexes = build_inward_apexes(A, B, C);
  b.apex_midpoints_out = opposite_midpoints(b.outward_apexes);
  b.apex_midpoints_in = opposite_midpoints(b.inward_apexes);
  b.flank_centroids_out = flank_centroids(b.base, b.outward_apexes);
  b.flank_centroids_in = flank_centroids(b.base, b.inward_apexes);
  // A* is the centroid of A B2 C2: base vertex i with the other two
  // second-level midpoints, i.e. the same substitution pattern as flanks.
  b.second_centroids_out = flank_centroids(b.apex_midpoints_out, b.base);
  b.second_centroids_in = flank_centroids(b.apex_midpoints_in, b.base);
  const auto& [A1, B1, C1] = b.outward_apexes;
  b.fermat = fermat_point(A, B, C, A1, B1);
  b.flank_circles = {circumcircle(A1, B, C), circumcircle(A, B1, C), circumcircle(A, B, C1)};
  b.centroid = centroid3(A, B, C);
  return b;
}

AreaLedger area_ledger(const NapoleonBundle& b) {
  const auto& [A, B, C] = b.base;
  const auto& [A1, B1, C1] = b.outward_apexes;
  const auto area = [](const Triple& t) { return signed_area(t[0], t[1], t[2]); };
  AreaLedger l;
  l.S = area(b.base);
  l.flank_sum = abs(signed_area(A1, B, C)) + abs(signed_area(A, B1, C)) +
                abs(signed_area(A, B, C1));
  l.outer_napoleon = area(b.flank_centroids_out);
  l.inner_napoleon = area(b.flank_centroids_in);
  l.second_outer = area(b.second_centroids_out);
  l.second_inner = area(b.second_centroids_in);
  return l;
}

}  // namespace napgeo
