#pragma once

#include <array>
#include <string>
#include <string_view>

#include "napgeo/geom.hpp"

namespace napgeo {

using Triple = std::array<Point, 3>;

// Every point, circle and area named for the two-level Napoleon
// configuration of one base triangle ABC.
//
// Index i of every triple follows the base vertex it is "opposite to" or
// "attached to": A1 is erected on BC, G1 is the centroid of A1BC, A2 is the
// midpoint of B1C1, A* the centroid of A B2 C2, and so on. The suffix "p"
// used in serialized names marks the overlapping (inward) family, "star" and
// "starstar" the second-level centroids.
struct NapoleonBundle {
  Triple base;            // A, B, C
  Triple side_midpoints;  // M1, M2, M3 of BC, CA, AB
  Triple outward_apexes;  // A1, B1, C1
  Triple inward_apexes;   // A1', B1', C1'
  Triple apex_midpoints_out;     // A2, B2, C2
  Triple apex_midpoints_in;      // A2', B2', C2'
  Triple flank_centroids_out;    // G1, G2, G3
  Triple flank_centroids_in;     // G1', G2', G3'
  Triple second_centroids_out;   // A*, B*, C*
  Triple second_centroids_in;    // A**, B**, C**
  Point fermat;                  // J
  std::array<Circle, 3> flank_circles;  // K1, K2, K3 around A1BC, AB1C, ABC1
  Point centroid;                // G
};

struct AreaLedger {
  F3 S;               // signed area of ABC
  F3 flank_sum;       // unsigned areas of A1BC, AB1C, ABC1 summed
  F3 outer_napoleon;  // signed (G1, G2, G3)
  F3 inner_napoleon;  // signed (G1', G2', G3')
  F3 second_outer;    // signed (A*, B*, C*)
  F3 second_inner;    // signed (A**, B**, C**)
};

// Outward / inward equilateral apexes on BC, CA, AB. Side selection is by
// half-plane relative to the remaining vertex, so either orientation of the
// base works. GeometryError("degenerate triangle") on collinear input.
Triple build_outward_apexes(const Point& A, const Point& B, const Point& C);
Triple build_inward_apexes(const Point& A, const Point& B, const Point& C);

// Meet of lines A A1 and B B1.
Point fermat_point(const Point& A, const Point& B, const Point& C, const Point& A1,
                   const Point& B1);

NapoleonBundle build_bundle(const Point& A, const Point& B, const Point& C);
AreaLedger area_ledger(const NapoleonBundle& bundle);

// Visits every named point with its serialized label, in a fixed order:
// A B C M1 M2 M3 A1 B1 C1 A1p B1p C1p A2 B2 C2 A2p B2p C2p G1 G2 G3
// G1p G2p G3p Astar Bstar Cstar Astarstar Bstarstar Cstarstar J G.
template <typename Bundle, typename Fn>
void for_each_point(Bundle& b, Fn&& fn) {
  static constexpr std::string_view kVertex[3] = {"A", "B", "C"};
  static constexpr std::string_view kIndex[3] = {"1", "2", "3"};
  auto each = [&](auto& triple, auto label_of) {
    for (int i = 0; i < 3; ++i) fn(label_of(i), triple[i]);
  };
  using S = std::string;
  each(b.base, [&](int i) { return S(kVertex[i]); });
  each(b.side_midpoints, [&](int i) { return "M" + S(kIndex[i]); });
  each(b.outward_apexes, [&](int i) { return S(kVertex[i]) + "1"; });
  each(b.inward_apexes, [&](int i) { return S(kVertex[i]) + "1p"; });
  each(b.apex_midpoints_out, [&](int i) { return S(kVertex[i]) + "2"; });
  each(b.apex_midpoints_in, [&](int i) { return S(kVertex[i]) + "2p"; });
  each(b.flank_centroids_out, [&](int i) { return "G" + S(kIndex[i]); });
  each(b.flank_centroids_in, [&](int i) { return "G" + S(kIndex[i]) + "p"; });
  each(b.second_centroids_out, [&](int i) { return S(kVertex[i]) + "star"; });
  each(b.second_centroids_in, [&](int i) { return S(kVertex[i]) + "starstar"; });
  fn(S("J"), b.fermat);
  fn(S("G"), b.centroid);
}

}  // namespace napgeo
