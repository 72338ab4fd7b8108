#include "napgeo/theorems.hpp"

#include <functional>
#include <sstream>

#include "napgeo/errors.hpp"

namespace napgeo {

namespace {

const F3 kMinusHalf(Rat::normalize(-1, 2));
const F3 kThird(Rat::normalize(1, 3));

// Accumulates sub-claims of one check. Every item is evaluated and listed,
// so a failing check names all violated equalities.
class Audit {
 public:
  explicit Audit(std::string name) : name_(std::move(name)) {}

  void equal(const std::string& what, const F3& lhs, const F3& rhs) {
    record(lhs == rhs, what, lhs.str() + (lhs == rhs ? " == " : " != ") + rhs.str());
  }

  void equal(const std::string& what, const Point& lhs, const Point& rhs) {
    record(lhs == rhs, what, lhs.str() + (lhs == rhs ? " == " : " != ") + rhs.str());
  }

  void holds(const std::string& what, bool ok, const std::string& info = {}) {
    record(ok, what, info);
  }

  // Runs a sub-claim whose construction may throw; a throw is a failure.
  void guarded(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const GeometryError& e) {
      record(false, what, std::string("error: ") + e.what());
    }
  }

  void note(const std::string& text) { out_ << "note: " << text << '\n'; }

  CheckResult finish() {
    std::string details = out_.str();
    if (!details.empty()) details.pop_back();
    return CheckResult{name_, passed_, std::move(details)};
  }

 private:
  void record(bool ok, const std::string& what, const std::string& info) {
    passed_ = passed_ && ok;
    out_ << (ok ? "ok: " : "FAIL: ") << what;
    if (!info.empty()) out_ << ": " << info;
    out_ << '\n';
  }

  std::string name_;
  bool passed_ = true;
  std::ostringstream out_;
};

constexpr const char* kV[3] = {"A", "B", "C"};

std::string tri(const std::string& p, const std::string& q, const std::string& r) {
  return p + q + r;
}

std::string d2(const Point& p, const Point& q) { return dist2(p, q).str(); }

// Equilateral, or all three vertices coincide with `center`.
void equilateral_or_collapsed(Audit& audit, const std::string& what, const Triple& t,
                              const Point& center, const std::string& center_name = "G") {
  const bool collapsed = t[0] == center && t[1] == center && t[2] == center;
  const bool equi = is_equilateral(t[0], t[1], t[2]);
  audit.holds(what + " equilateral" + (collapsed ? " (collapsed to " + center_name + ")" : ""),
              equi || collapsed,
              "sides^2 " + d2(t[0], t[1]) + ", " + d2(t[1], t[2]) + ", " + d2(t[2], t[0]));
}

}  // namespace

bool all_angles_below_120(const Point& A, const Point& B, const Point& C) {
  return angle_lt_120(B, A, C) && angle_lt_120(C, B, A) && angle_lt_120(A, C, B);
}

CheckResult check_basic_lemma(const NapoleonBundle& b) {
  Audit audit(claim::kBasicLemma);
  const Triple& base = b.base;
  const Triple& out = b.outward_apexes;
  const Point& J = b.fermat;

  const F3 da = dist2(base[0], out[0]);
  audit.equal("AA1^2 = BB1^2", da, dist2(base[1], out[1]));
  audit.equal("AA1^2 = CC1^2", da, dist2(base[2], out[2]));

  for (int i = 0; i < 3; ++i) {
    const std::string cevian = std::string(kV[i]) + kV[i] + "1";
    audit.holds("J on line " + cevian, collinear(base[i], out[i], J));
  }

  for (int i = 0; i < 3; ++i) {
    const std::string k = "K" + std::to_string(i + 1);
    const Circle& circle = b.flank_circles[i];
    Triple flank = base;
    flank[i] = out[i];
    bool through = true;
    for (const Point& p : flank) through = through && on_circle(p, circle);
    audit.holds(k + " circumscribes its flank triangle", through, circle.str());
    audit.holds("J on " + k, on_circle(J, circle),
                "dist2 " + dist2(J, circle.center).str() + " vs r2 " + circle.r2.str());
  }

  audit.guarded("angle regime", [&] {
    if (!all_angles_below_120(base[0], base[1], base[2])) {
      audit.note("a base angle is >= 120 degrees; segment and 120-degree claims skipped");
      return;
    }
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3;
      audit.guarded("angle " + tri(kV[i], "J", kV[j]) + " = 120", [&] {
        audit.holds("angle " + tri(kV[i], "J", kV[j]) + " = 120",
                    angle_eq_120(base[i], J, base[j]));
      });
    }
    for (int i = 0; i < 3; ++i) {
      audit.holds(std::string("J on segment ") + kV[i] + kV[i] + "1",
                  on_segment(J, base[i], out[i]));
    }
  });
  return audit.finish();
}

CheckResult check_napoleon(const NapoleonBundle& b) {
  Audit audit(claim::kNapoleon);
  const Triple& base = b.base;
  const Point& G = b.centroid;
  const AreaLedger ledger = area_ledger(b);

  audit.equal("G = centroid(ABC)", G, centroid3(base[0], base[1], base[2]));

  const Triple& go = b.flank_centroids_out;
  audit.holds("G1G2G3 equilateral", is_equilateral(go[0], go[1], go[2]),
              "sides^2 " + d2(go[0], go[1]) + ", " + d2(go[1], go[2]) + ", " + d2(go[2], go[0]));
  audit.equal("centroid(G1G2G3) = G", centroid3(go[0], go[1], go[2]), G);

  const Triple& gi = b.flank_centroids_in;
  equilateral_or_collapsed(audit, "G1'G2'G3'", gi, G);
  audit.equal("centroid(G1'G2'G3') = G", centroid3(gi[0], gi[1], gi[2]), G);

  // Intercept-theorem device: G_i sits a third of the way from M_i toward
  // the apex, G a third of the way toward the vertex, so G G_i = (X X_1) / 3.
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    const std::string idx = std::to_string(i + 1);
    audit.equal("M" + idx + " = midpoint", b.side_midpoints[i],
                midpoint(base[j], base[k]));
    audit.equal("G = M" + idx + " + (" + kV[i] + " - M" + idx + ")/3",
                homothety(b.side_midpoints[i], kThird, base[i]), G);
    audit.equal("G" + idx + " = M" + idx + " + (" + kV[i] + "1 - M" + idx + ")/3",
                homothety(b.side_midpoints[i], kThird, b.outward_apexes[i]), go[i]);
    audit.equal("G" + idx + "' = M" + idx + " + (" + kV[i] + "1' - M" + idx + ")/3",
                homothety(b.side_midpoints[i], kThird, b.inward_apexes[i]), gi[i]);
  }

  audit.equal("outer + inner = S", ledger.outer_napoleon + ledger.inner_napoleon, ledger.S);
  audit.note("outer area " + ledger.outer_napoleon.str() + ", inner area " +
             ledger.inner_napoleon.str() + ", S " + ledger.S.str());
  return audit.finish();
}

CheckResult check_reflection_device(const NapoleonBundle& b) {
  Audit audit(claim::kReflectionDevice);
  const auto& [A, B, C] = b.base;
  const auto& [G1, G2, G3] = b.flank_centroids_out;

  audit.holds("precondition G1G2G3 equilateral", is_equilateral(G1, G2, G3));
  audit.guarded("reflections", [&] {
    const Point P = reflect_over_line(C, line_through(G1, G2));
    audit.equal("reflect(A, G2G3) = P", reflect_over_line(A, line_through(G2, G3)), P);
    audit.equal("reflect(B, G3G1) = P", reflect_over_line(B, line_through(G3, G1)), P);
    audit.equal("G1P^2 = G1B^2", dist2(G1, P), dist2(G1, B));
    audit.equal("G2P^2 = G2C^2", dist2(G2, P), dist2(G2, C));
    audit.equal("G3P^2 = G3A^2", dist2(G3, P), dist2(G3, A));
    audit.equal("P = J", P, b.fermat);
  });

  // Area identities the reflection argument establishes.
  const AreaLedger ledger = area_ledger(b);
  const F3 half(Rat::normalize(1, 2));
  const F3 sixth(Rat::normalize(1, 6));
  const F3 oriented_flank = F3(ledger.S.sign()) * ledger.flank_sum;
  audit.equal("outer = S/2 + flanks/6", ledger.outer_napoleon,
              half * ledger.S + sixth * oriented_flank);
  audit.equal("inner = S/2 - flanks/6", ledger.inner_napoleon,
              half * ledger.S - sixth * oriented_flank);
  audit.equal("outer = G1CG2 + G2AG3 + G3BG1", ledger.outer_napoleon,
              signed_area(G1, C, G2) + signed_area(G2, A, G3) + signed_area(G3, B, G1));
  const F3 sides2 = dist2(B, C) + dist2(C, A) + dist2(A, B);
  audit.equal("flanks = (r3/4)(a^2 + b^2 + c^2)", ledger.flank_sum,
              F3(Rat(0), Rat::normalize(1, 4)) * sides2);
  return audit.finish();
}

CheckResult check_midpoints_and_centroids(const NapoleonBundle& b) {
  Audit audit(claim::kMidpointsCentroids);
  const Triple& base = b.base;
  const Triple& out = b.outward_apexes;
  const Triple& in = b.inward_apexes;
  const Point& G = b.centroid;

  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    const std::string v = kV[i];
    audit.equal(v + "2 = midpoint(" + kV[j] + "1, " + kV[k] + "1)", b.apex_midpoints_out[i],
                midpoint(out[j], out[k]));
    audit.equal(v + "2' = midpoint(" + kV[j] + "1', " + kV[k] + "1')", b.apex_midpoints_in[i],
                midpoint(in[j], in[k]));
    audit.equal(v + "2 = midpoint(" + v + ", " + v + "1')", b.apex_midpoints_out[i],
                midpoint(base[i], in[i]));
    audit.equal(v + "2' = midpoint(" + v + ", " + v + "1)", b.apex_midpoints_in[i],
                midpoint(base[i], out[i]));

    // Rhombus on the side opposite vertex i: (X_j, X_i1, X_k, X_i1').
    const F3 s = dist2(base[j], out[i]);
    const bool rhombus = s == dist2(out[i], base[k]) && s == dist2(base[k], in[i]) &&
                         s == dist2(in[i], base[j]);
    audit.holds("rhombus " + std::string(kV[j]) + v + "1" + kV[k] + v + "1'", rhombus,
                "sides^2 " + s.str() + ", " + d2(out[i], base[k]) + ", " + d2(base[k], in[i]) +
                    ", " + d2(in[i], base[j]));
  }

  const auto c3 = [](const Triple& t) { return centroid3(t[0], t[1], t[2]); };
  audit.equal("centroid(A1B1C1) = G", c3(out), G);
  audit.equal("centroid(A2B2C2) = G", c3(b.apex_midpoints_out), G);
  audit.equal("centroid(A1'B1'C1') = G", c3(in), G);
  audit.equal("centroid(A2'B2'C2') = G", c3(b.apex_midpoints_in), G);
  return audit.finish();
}

CheckResult check_grunbaum(const NapoleonBundle& b) {
  Audit audit(claim::kGrunbaum);
  audit.note("labeling: A* is the centroid of A B2 C2, B* of A2 B C2, C* of A2 B2 C");
  const Triple& base = b.base;
  const Point& G = b.centroid;
  const AreaLedger ledger = area_ledger(b);

  // Statements 1 and 3: flank triangles of the second-level triangles.
  const auto flanks = [&](const Triple& mids, const std::string& tag) {
    for (int i = 0; i < 3; ++i) {
      Triple t = mids;
      t[i] = base[i];
      std::string name;
      for (int m = 0; m < 3; ++m) name += m == i ? std::string(kV[m]) : kV[m] + ("2" + tag);
      // A base angle of exactly 120 degrees shrinks a primed one to its vertex.
      equilateral_or_collapsed(audit, "(1/3) " + name, t, base[i], kV[i]);
    }
  };
  flanks(b.apex_midpoints_out, "");
  flanks(b.apex_midpoints_in, "'");

  // A, B, C are the overlapping apexes for A2B2C2.
  const Triple& m = b.apex_midpoints_out;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    const int here = signed_area(m[j], m[k], base[i]).sign();
    const int ref = signed_area(m[j], m[k], m[i]).sign();
    audit.holds(std::string(kV[i]) + " overlaps A2B2C2 on side " + kV[j] + "2" + kV[k] + "2",
                here != 0 && here == ref);
  }

  // Rotation device about each vertex X_i (k matches base orientation):
  // R(X_prev1) = X_next, R(X_prev) = X_next1, and with X_i1* = R(X_i1) the
  // quadrilateral X_next X_next1 X_i1* X_i1 is a parallelogram.
  const int k = ledger.S.sign();
  for (int i = 0; i < 3; ++i) {
    const int next = (i + 1) % 3;
    const int prev = (i + 2) % 3;
    const Point& pivot = base[i];
    const std::string r = std::string("R_") + kV[i];
    const std::string vi = kV[i];
    const std::string vn = kV[next];
    const std::string vp = kV[prev];
    audit.equal(r + "(" + vp + "1) = " + vn, rotate60k(pivot, b.outward_apexes[prev], k),
                base[next]);
    audit.equal(r + "(" + vp + ") = " + vn + "1", rotate60k(pivot, base[prev], k),
                b.outward_apexes[next]);
    const Point image = rotate60k(pivot, b.outward_apexes[i], k);
    audit.holds("parallelogram " + vn + " " + vn + "1 " + vi + "1* " + vi + "1",
                diagonals_bisect(base[next], b.outward_apexes[next], image,
                                 b.outward_apexes[i]),
                vi + "1* = " + image.str());
  }

  equilateral_or_collapsed(audit, "(2) A*B*C*", b.second_centroids_out, G);
  const auto c3 = [](const Triple& t) { return centroid3(t[0], t[1], t[2]); };
  audit.equal("(2) centroid(A*B*C*) = G", c3(b.second_centroids_out), G);
  equilateral_or_collapsed(audit, "(4) A**B**C**", b.second_centroids_in, G);
  audit.equal("(4) centroid(A**B**C**) = G", c3(b.second_centroids_in), G);

  for (int i = 0; i < 3; ++i) {
    const std::string v = kV[i];
    const std::string idx = std::to_string(i + 1);
    audit.equal("(5) " + v + "* = H(G, -1/2)(G" + idx + "')", b.second_centroids_out[i],
                homothety(G, kMinusHalf, b.flank_centroids_in[i]));
    audit.equal("(6) " + v + "** = H(G, -1/2)(G" + idx + ")", b.second_centroids_in[i],
                homothety(G, kMinusHalf, b.flank_centroids_out[i]));
    audit.equal("H(G, -1/2)(" + v + ") = M" + idx, homothety(G, kMinusHalf, base[i]),
                b.side_midpoints[i]);
  }

  audit.equal("(7) S = 4 (A*B*C* + A**B**C**)", ledger.S,
              F3(4) * (ledger.second_outer + ledger.second_inner));
  return audit.finish();
}

std::vector<CheckResult> run_checks(const NapoleonBundle& b) {
  return {check_basic_lemma(b), check_napoleon(b), check_reflection_device(b),
          check_midpoints_and_centroids(b), check_grunbaum(b)};
}

Report run_all(const Point& A, const Point& B, const Point& C) {
  Report report;
  report.input = {A, B, C};
  try {
    report.bundle = build_bundle(A, B, C);
  } catch (const GeometryError& e) {
    report.results.push_back({claim::kConstruction, false, e.what()});
    report.all_passed = false;
    return report;
  }
  report.ledger = area_ledger(*report.bundle);
  report.results = run_checks(*report.bundle);
  report.all_passed = true;
  for (const auto& r : report.results) report.all_passed = report.all_passed && r.passed;
  return report;
}

}  // namespace napgeo
