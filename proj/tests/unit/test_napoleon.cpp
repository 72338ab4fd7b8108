#include <doctest.h>

#include <algorithm>

#include "napgeo/errors.hpp"
#include "napgeo/napoleon.hpp"
#include "support/float_oracle.hpp"
#include "support/random_inputs.hpp"

using namespace napgeo;

namespace {

Rat q(long n, long d = 1) { return Rat::normalize(n, d); }
F3 f(Rat a, Rat b = Rat(0)) { return F3(std::move(a), std::move(b)); }
Point pt(long x, long y) { return {F3(x), F3(y)}; }

const Point kA = pt(0, 0), kB = pt(4, 0), kC = pt(0, 3);
const Point kE = {F3(q(1, 2)), f(Rat(0), q(1, 2))};  // apex of the unit equilateral

Point translate(const Point& p, const Point& t) { return p + t; }
Point scale(const Point& p, const F3& k) { return k * p; }

template <typename Fn>
bool bundles_related(const NapoleonBundle& lhs, const NapoleonBundle& rhs, Fn map) {
  std::vector<Point> left, right;
  for_each_point(lhs, [&](const std::string&, const Point& p) { left.push_back(map(p)); });
  for_each_point(rhs, [&](const std::string&, const Point& p) { right.push_back(p); });
  return left == right;
}

}  // namespace

TEST_CASE("outward apexes of the 3-4-5 triangle") {
  const Triple out = build_outward_apexes(kA, kB, kC);
  CHECK(out[2] == Point{F3(2), f(Rat(0), Rat(-2))});
  CHECK(out[1] == Point{f(Rat(0), q(-3, 2)), F3(q(3, 2))});
  CHECK(out[0] == Point{f(Rat(2), q(3, 2)), f(q(3, 2), Rat(2))});

  const auto fl = oracle::build(kA, kB, kC);
  for (int i = 0; i < 3; ++i) CHECK(oracle::near(fl.out[i], out[i]));
}

TEST_CASE("inward apexes of the 3-4-5 triangle") {
  const Triple in = build_inward_apexes(kA, kB, kC);
  CHECK(in[2] == Point{F3(2), f(Rat(0), Rat(2))});
  const auto fl = oracle::build(kA, kB, kC);
  for (int i = 0; i < 3; ++i) CHECK(oracle::near(fl.in[i], in[i]));
}

TEST_CASE("apexes of the unit equilateral triangle") {
  const Point B = pt(1, 0);
  const Triple out = build_outward_apexes(kA, B, kE);
  CHECK(out[0] == B + kE - kA);
  CHECK(out[1] == kE + kA - B);
  CHECK(out[2] == kA + B - kE);
  const Triple in = build_inward_apexes(kA, B, kE);
  CHECK(in == Triple{kA, B, kE});
}

TEST_CASE("collinear bases are rejected") {
  const Point B = pt(1, 0), C = pt(2, 0);
  CHECK_THROWS_WITH_AS(build_outward_apexes(kA, B, C), "degenerate triangle", GeometryError);
  CHECK_THROWS_WITH_AS(build_inward_apexes(kA, B, C), "degenerate triangle", GeometryError);
  CHECK_THROWS_WITH_AS(build_bundle(kA, B, C), "degenerate triangle", GeometryError);
  CHECK_THROWS_AS(build_bundle(kA, kA, B), GeometryError);
}

TEST_CASE("fermat_point") {
  const Point B = pt(1, 0);
  const Triple out = build_outward_apexes(kA, B, kE);
  const Point G = centroid3(kA, B, kE);
  CHECK(fermat_point(kA, B, kE, out[0], out[1]) == G);

  const Point t = pt(5, 7);
  const Triple moved = build_outward_apexes(kA + t, B + t, kE + t);
  CHECK(fermat_point(kA + t, B + t, kE + t, moved[0], moved[1]) == G + t);

  const Triple o345 = build_outward_apexes(kA, kB, kC);
  const Point J = fermat_point(kA, kB, kC, o345[0], o345[1]);
  CHECK(oracle::near(oracle::build(kA, kB, kC).J, J));
  CHECK(collinear(kC, o345[2], J));

  CHECK_THROWS_WITH_AS(fermat_point(kA, kB, kC, kA, o345[1]), "degenerate cevian", GeometryError);
  CHECK_THROWS_WITH_AS(fermat_point(kA, kB, kC, o345[0], kB), "degenerate cevian", GeometryError);
  // AA1 parallel to BB1.
  CHECK_THROWS_WITH_AS(fermat_point(kA, kB, kC, pt(0, 1), pt(4, 1)), "no intersection",
                       GeometryError);
}

TEST_CASE("bundle of the 3-4-5 triangle") {
  const NapoleonBundle b = build_bundle(kA, kB, kC);
  CHECK(b.centroid == Point{F3(q(4, 3)), F3(1)});
  const F3 cevian(Rat(25), Rat(12));
  for (int i = 0; i < 3; ++i) CHECK(dist2(b.base[i], b.outward_apexes[i]) == cevian);
  CHECK(cevian.to_double() == doctest::Approx(45.78).epsilon(1e-3));

  CHECK(centroid3(b.outward_apexes[0], b.outward_apexes[1], b.outward_apexes[2]) == b.centroid);
  CHECK(centroid3(b.apex_midpoints_out[0], b.apex_midpoints_out[1], b.apex_midpoints_out[2]) ==
        b.centroid);
  CHECK(b.apex_midpoints_out[2] == Point{F3(1), f(q(3, 2), Rat(1))});
  CHECK(b.second_centroids_out[2] == Point{F3(1), f(q(3, 2), q(-1, 3))});
  CHECK(b.flank_centroids_in[2] == Point{F3(2), f(Rat(0), q(2, 3))});

  for (int i = 0; i < 3; ++i) {
    CHECK(on_circle(b.fermat, b.flank_circles[i]));
    CHECK(collinear(b.base[i], b.outward_apexes[i], b.fermat));
  }
}

TEST_CASE("bundle of the unit equilateral collapses the inner layer") {
  const NapoleonBundle b = build_bundle(kA, pt(1, 0), kE);
  for (int i = 0; i < 3; ++i) {
    CHECK(b.flank_centroids_in[i] == b.centroid);
    CHECK(b.inward_apexes[i] == b.base[i]);
    CHECK(b.apex_midpoints_out[i] == b.base[i]);
  }
  CHECK(b.fermat == b.centroid);
}

TEST_CASE("area ledger examples") {
  const AreaLedger l = area_ledger(build_bundle(kA, kB, kC));
  CHECK(l.S == F3(6));
  CHECK(l.flank_sum == f(Rat(0), q(25, 2)));
  CHECK(l.outer_napoleon == f(Rat(3), q(25, 12)));
  CHECK(l.inner_napoleon == f(Rat(3), q(-25, 12)));
  CHECK(l.inner_napoleon.to_double() == doctest::Approx(-0.608).epsilon(1e-3));
  CHECK(l.outer_napoleon + l.inner_napoleon == l.S);
  CHECK(F3(4) * (l.second_outer + l.second_inner) == l.S);

  const auto fl = oracle::build(kA, kB, kC);
  CHECK(oracle::near(fl.outer, l.outer_napoleon.to_double()));
  CHECK(oracle::near(fl.inner, l.inner_napoleon.to_double()));
  CHECK(oracle::near(fl.second_outer, l.second_outer.to_double()));
  CHECK(oracle::near(fl.second_inner, l.second_inner.to_double()));

  const AreaLedger e = area_ledger(build_bundle(kA, pt(1, 0), kE));
  CHECK(e.S == f(Rat(0), q(1, 4)));
  CHECK(e.outer_napoleon == e.S);
  CHECK(e.inner_napoleon.is_zero());
}

TEST_CASE("bundle invariants on random triangles, both orientations") {
  testing::Gen gen(314);
  for (int trial = 0; trial < 60; ++trial) {
    auto t = gen.triangle(40);
    const NapoleonBundle b = build_bundle(t[0], t[1], t[2]);
    const AreaLedger l = area_ledger(b);
    const int orient = l.S.sign();
    REQUIRE(orient != 0);

    for (int i = 0; i < 3; ++i) {
      const Point& p = b.base[(i + 1) % 3];
      const Point& r = b.base[(i + 2) % 3];
      // Outward apexes are strictly across the side; inward ones on the same side.
      CHECK(signed_area(p, r, b.outward_apexes[i]).sign() == -orient);
      CHECK(signed_area(p, r, b.inward_apexes[i]).sign() == orient);
      CHECK(is_equilateral(p, r, b.outward_apexes[i]));
      CHECK(is_equilateral(p, r, b.inward_apexes[i]));
      CHECK(collinear(b.base[i], b.outward_apexes[i], b.fermat));
      CHECK(on_circle(b.fermat, b.flank_circles[i]));
      CHECK(dist2(b.base[i], b.outward_apexes[i]) == dist2(b.base[0], b.outward_apexes[0]));
      CHECK(b.apex_midpoints_out[i] == midpoint(b.base[i], b.inward_apexes[i]));
      CHECK(b.apex_midpoints_in[i] == midpoint(b.base[i], b.outward_apexes[i]));
    }
    // Rhombus A C1 B C1'.
    const F3 side = dist2(b.base[0], b.outward_apexes[2]);
    CHECK(dist2(b.outward_apexes[2], b.base[1]) == side);
    CHECK(dist2(b.base[1], b.inward_apexes[2]) == side);
    CHECK(dist2(b.inward_apexes[2], b.base[0]) == side);

    const F3 half(q(1, 2));
    const F3 sixth(q(1, 6));
    CHECK(l.outer_napoleon == half * l.S + F3(orient) * sixth * l.flank_sum);
    CHECK(l.inner_napoleon == half * l.S - F3(orient) * sixth * l.flank_sum);
    CHECK(l.outer_napoleon + l.inner_napoleon == l.S);
    CHECK(F3(4) * (l.second_outer + l.second_inner) == l.S);

    const auto fl = oracle::build(t[0], t[1], t[2]);
    CHECK(oracle::near(fl.J, b.fermat));
    CHECK(oracle::near(fl.cevian2, dist2(b.base[0], b.outward_apexes[0]).to_double()));
    for (int i = 0; i < 3; ++i) {
      CHECK(oracle::near(fl.star[i], b.second_centroids_out[i]));
      CHECK(oracle::near(fl.starstar[i], b.second_centroids_in[i]));
      CHECK(oracle::near(fl.g_in[i], b.flank_centroids_in[i]));
    }
  }
}

TEST_CASE("bundle construction is translation and scaling equivariant") {
  testing::Gen gen(2718);
  for (int trial = 0; trial < 25; ++trial) {
    auto t = gen.triangle(30);
    const NapoleonBundle b = build_bundle(t[0], t[1], t[2]);

    const Point shift = gen.rational_point(20);
    const NapoleonBundle moved =
        build_bundle(translate(t[0], shift), translate(t[1], shift), translate(t[2], shift));
    CHECK(bundles_related(b, moved, [&](const Point& p) { return translate(p, shift); }));

    F3 k;
    do {
      k = F3(gen.rat(9));
    } while (k.sign() <= 0);
    const NapoleonBundle scaled = build_bundle(scale(t[0], k), scale(t[1], k), scale(t[2], k));
    CHECK(bundles_related(b, scaled, [&](const Point& p) { return scale(p, k); }));
    for (int i = 0; i < 3; ++i) {
      CHECK(scaled.flank_circles[i].r2 == k * k * b.flank_circles[i].r2);
    }
  }
}

TEST_CASE("for_each_point visits 32 distinct labels") {
  const NapoleonBundle b = build_bundle(kA, kB, kC);
  std::vector<std::string> labels;
  for_each_point(b, [&](const std::string& label, const Point&) { labels.push_back(label); });
  CHECK(labels.size() == 32);
  CHECK(labels.front() == "A");
  CHECK(labels[9] == "A1p");
  CHECK(labels[29] == "Cstarstar");
  CHECK(labels.back() == "G");
  std::sort(labels.begin(), labels.end());
  CHECK(std::adjacent_find(labels.begin(), labels.end()) == labels.end());
}
