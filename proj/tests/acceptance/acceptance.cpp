// Acceptance suite: one PASS/FAIL line per criterion. Exit status is 0 only
// when every criterion passes.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "napgeo/fuzz.hpp"
#include "napgeo/json_io.hpp"
#include "napgeo/theorems.hpp"
#include "support/float_oracle.hpp"

using namespace napgeo;

namespace {

// Pinned tolerances and limits.
constexpr double kOracleRelTol = 1e-9;
constexpr double kCanonicalSeconds = 1.0;
constexpr double kEquilateralSeconds = 1.0;
constexpr double kFuzzSeconds = 30.0;
constexpr double kCorpusSeconds = 2.0;
constexpr double kNearTieMagnitude = 1e-12;

struct Verdict {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli_run(std::vector<std::string> args) {
  args.insert(args.begin(), "napgeo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Rat q(long n, long d = 1) { return Rat::normalize(n, d); }
Point pt(long x, long y) { return {F3(x), F3(y)}; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(3);
  o << std::fixed << s << " s";
  return o.str();
}

Verdict criterion_canonical() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const CliRun run = cli_run({"verify", "--triangle", "0,0 4,0 0,3"});
  v.require(run.code == 0, "verify exit code " + std::to_string(run.code));
  const auto j = nlohmann::json::parse(run.out);
  v.require(j.at("all_passed") == true, "all_passed is false");
  v.require(j.at("results").size() == 5, "expected five checks");
  for (const auto& r : j.at("results")) {
    v.require(r.at("passed") == true, "check " + r.at("name").get<std::string>() + " failed");
  }
  const auto& l = j.at("ledger");
  const F3 S = f3_from_json(l.at("S"));
  const F3 outer = f3_from_json(l.at("outer_napoleon"));
  const F3 inner = f3_from_json(l.at("inner_napoleon"));
  const F3 cevian = f3_from_json(l.at("cevian_length2"));
  const F3 four = f3_from_json(l.at("four_second_sum"));
  v.require(S == F3(6), "S = " + S.str());
  v.require(outer == F3(q(3), q(25, 12)), "outer = " + outer.str());
  v.require(inner == F3(q(3), q(-25, 12)), "inner = " + inner.str());
  v.require(cevian == F3(q(25), q(12)), "cevian length^2 = " + cevian.str());
  v.require(four == F3(6), "4 (second_outer + second_inner) = " + four.str());
  const double elapsed = seconds_since(t0);

  const auto fl = oracle::build(pt(0, 0), pt(4, 0), pt(0, 3));
  const double second_sum = 4 * (fl.second_outer + fl.second_inner);
  const std::pair<double, double> pairs[] = {{fl.S, S.to_double()},
                                             {fl.outer, outer.to_double()},
                                             {fl.inner, inner.to_double()},
                                             {fl.cevian2, cevian.to_double()},
                                             {second_sum, four.to_double()}};
  double worst = 0;
  for (const auto& [approx, exact] : pairs) {
    worst = std::max(worst, std::abs(approx - exact) / std::max(1.0, std::abs(exact)));
  }
  v.require(worst <= kOracleRelTol, "float oracle disagrees");
  v.require(elapsed < kCanonicalSeconds, "too slow");
  std::ostringstream note;
  note << "3-4-5 ledger exact, oracle rel err " << worst << ", " << fmt_seconds(elapsed);
  if (v.ok) v.note = note.str();
  return v;
}

Verdict criterion_equilateral() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const Point C{F3(q(1, 2)), F3(Rat(0), q(1, 2))};
  const Report r = run_all(pt(0, 0), pt(1, 0), C);
  const double elapsed = seconds_since(t0);
  v.require(r.all_passed, "not all checks passed");
  v.require(r.ledger.has_value(), "no ledger");
  if (r.ledger) {
    v.require(r.ledger->inner_napoleon.is_zero(), "inner = " + r.ledger->inner_napoleon.str());
    v.require(r.ledger->outer_napoleon == F3(Rat(0), q(1, 4)),
              "outer = " + r.ledger->outer_napoleon.str());
  }
  v.require(elapsed < kEquilateralSeconds, "too slow");
  if (v.ok) v.note = "inner 0, outer 1/4 r3, " + fmt_seconds(elapsed);
  return v;
}

Verdict criterion_fuzz() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const CliRun run = cli_run({"fuzz", "--trials", "1000", "--seed", "42", "--bound", "50"});
  const double elapsed = seconds_since(t0);
  v.require(run.code == 0, "exit code " + std::to_string(run.code));
  v.require(run.out == "1000/1000 passed\n", "output: " + run.out.substr(0, 200));
  v.require(elapsed < kFuzzSeconds, "too slow: " + fmt_seconds(elapsed));
  if (v.ok) v.note = "1000/1000 passed, " + fmt_seconds(elapsed);
  return v;
}

Verdict criterion_homothety() {
  Verdict v;
  const F3 k(q(-1, 2));
  const F3 quarter(q(1, 4));
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    const Triple t = fuzz::random_triangle(2024, trial, 50);
    const NapoleonBundle b = build_bundle(t[0], t[1], t[2]);
    const std::string tag = "trial " + std::to_string(trial);
    for (int i = 0; i < 3; ++i) {
      const Point star = homothety(b.centroid, k, b.flank_centroids_in[i]);
      const Point starstar = homothety(b.centroid, k, b.flank_centroids_out[i]);
      v.require(star.x == b.second_centroids_out[i].x && star.y == b.second_centroids_out[i].y,
                tag + ": star " + std::to_string(i));
      v.require(starstar.x == b.second_centroids_in[i].x &&
                    starstar.y == b.second_centroids_in[i].y,
                tag + ": starstar " + std::to_string(i));
    }
    const auto& s = b.second_centroids_out;
    const auto& ss = b.second_centroids_in;
    const auto& gi = b.flank_centroids_in;
    const auto& go = b.flank_centroids_out;
    v.require(signed_area(s[0], s[1], s[2]) == quarter * signed_area(gi[0], gi[1], gi[2]),
              tag + ": area A*B*C*");
    v.require(signed_area(ss[0], ss[1], ss[2]) == quarter * signed_area(go[0], go[1], go[2]),
              tag + ": area A**B**C**");
  }
  if (v.ok) v.note = "100 triangles, component-exact images and 1/4 area scaling";
  return v;
}

Verdict criterion_exactness() {
  namespace mp = boost::multiprecision;
  using Big = mp::number<mp::cpp_bin_float<256>>;
  Verdict v;
  const F3 x(Rat(97), Rat(-56));
  v.require(field_sign(x) == 1, "sign(97 - 56 r3)");
  v.require(field_sign(-x) == -1, "sign(-97 + 56 r3)");
  const double approx = 97 - 56 * std::sqrt(3.0);
  v.require(std::abs(approx - 5.2e-3) < 1e-4, "double value of 97 - 56 r3 off");

  // Walk Pell solutions p^2 - 3 q^2 = 1 until p - q r3 = 1 / (p + q r3)
  // drops below the target magnitude; also the -2 family for negative ties.
  mp::cpp_int p = 2, qq = 1, r = 5, s = 3;
  int decided = 0;
  double smallest = 1;
  const Big sqrt3 = mp::sqrt(Big(3));
  for (int step = 0; step < 60; ++step) {
    const int oracle_pos = mp::sign(p * p - 3 * qq * qq);  // p, q > 0
    const int oracle_neg = mp::sign(r * r - 3 * s * s);
    const F3 pos(Rat(mpz_class(p.str())), -Rat(mpz_class(qq.str())));
    const F3 neg(Rat(mpz_class(r.str())), -Rat(mpz_class(s.str())));
    const Big magnitude = mp::abs(Big(p) - Big(qq) * sqrt3);
    if (magnitude < kNearTieMagnitude) {
      ++decided;
      smallest = std::min(smallest, static_cast<double>(magnitude));
      v.require(field_sign(pos) == oracle_pos, "pell + step " + std::to_string(step));
      v.require(field_sign(-pos) == -oracle_pos, "pell - step " + std::to_string(step));
      v.require(field_sign(neg) == oracle_neg, "pell(-2) step " + std::to_string(step));
    }
    mp::cpp_int np = 2 * p + 3 * qq, nq = p + 2 * qq;
    mp::cpp_int nr = 2 * r + 3 * s, ns = r + 2 * s;
    p = np, qq = nq, r = nr, s = ns;
  }
  v.require(decided > 0, "no near-tie below the target magnitude");
  std::ostringstream note;
  note << "97 - 56 r3 ~ " << approx << " decided, " << decided
       << " Pell near-ties down to " << smallest << " decided";
  if (v.ok) v.note = note.str();
  return v;
}

Verdict criterion_corpus() {
  Verdict v;
  const std::vector<std::string> claims = {
      "lemma_basic", "napoleon_1", "napoleon_3_area", "reflection_p", "lemma1_equilateral",
      "lemma_midpoint", "common_centroid", "proof_config", "homothetic", "main_5_6", "main_7"};
  const std::filesystem::path dir = NAPGEO_CORPUS_DIR;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& name : claims) {
    const CliRun run = cli_run({"run", (dir / (name + ".geo")).string()});
    v.require(run.code == 0, name + ".geo exit " + std::to_string(run.code));
  }
  const CliRun neg = cli_run({"run", (dir / "negative.geo").string()});
  v.require(neg.code == 1, "negative.geo exit " + std::to_string(neg.code));
  v.require(neg.out.find("line 10: FAIL") != std::string::npos,
            "negative.geo does not name line 10");
  const std::filesystem::path fixture =
      std::filesystem::path(NAPGEO_FIXTURE_DIR) / "syntax_error.geo";
  const CliRun syntax = cli_run({"run", fixture.string()});
  v.require(syntax.code == 2, "syntax fixture exit " + std::to_string(syntax.code));
  v.require(syntax.err.find("line 3, column 14") != std::string::npos,
            "syntax fixture diagnostic lacks line/column: " + syntax.err);
  const double elapsed = seconds_since(t0);
  v.require(elapsed < kCorpusSeconds, "too slow: " + fmt_seconds(elapsed));
  if (v.ok) v.note = "11 scripts exit 0, negative exit 1 at line 10, syntax exit 2 at 3:14, " +
                     fmt_seconds(elapsed);
  return v;
}

bool any_failed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return true;
  }
  return false;
}

Verdict criterion_tamper() {
  Verdict v;
  const Point nudge{F3(q(1, 7)), F3(0)};
  std::vector<Triple> bases = {{pt(0, 0), pt(4, 0), pt(0, 3)},
                               {pt(0, 0), pt(10, 0), pt(5, 1)},  // obtuse, angle > 120
                               {pt(0, 0), pt(0, 3), pt(4, 0)}};  // clockwise
  for (std::uint64_t trial = 0; trial < 10; ++trial) bases.push_back(fuzz::random_triangle(77, trial, 50));

  int perturbations = 0;
  for (const Triple& t : bases) {
    const NapoleonBundle good = build_bundle(t[0], t[1], t[2]);
    v.require(!any_failed(run_checks(good)), "untampered bundle fails");
    std::vector<std::string> labels;
    for_each_point(good, [&](const std::string& label, const Point&) { labels.push_back(label); });
    for (std::size_t k = 0; k < labels.size(); ++k) {
      NapoleonBundle b = good;
      std::size_t idx = 0;
      for_each_point(b, [&](const std::string&, Point& p) {
        if (idx++ == k) p = p + nudge;
      });
      ++perturbations;
      v.require(any_failed(run_checks(b)), "vacuous pass when moving " + labels[k]);
    }
  }
  if (v.ok) {
    v.note = std::to_string(perturbations) + " perturbations (32 points x " +
             std::to_string(bases.size()) + " triangles), each caught";
  }
  return v;
}

std::vector<std::pair<std::string, bool>> verdicts(const Report& r) {
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& c : r.results) out.emplace_back(c.name, c.passed);
  out.emplace_back("all", r.all_passed);
  return out;
}

Verdict criterion_symmetry() {
  Verdict v;
  const std::vector<std::pair<std::string, std::function<Triple(const Triple&)>>> transforms = {
      {"cyclic relabel", [](const Triple& t) { return Triple{t[1], t[2], t[0]}; }},
      {"orientation swap", [](const Triple& t) { return Triple{t[0], t[2], t[1]}; }},
      {"translation",
       [](const Triple& t) {
         const Point d{F3(q(-13, 5)), F3(q(22, 7))};
         return Triple{t[0] + d, t[1] + d, t[2] + d};
       }},
      {"scaling",
       [](const Triple& t) {
         const F3 k(q(7, 3));
         return Triple{k * t[0], k * t[1], k * t[2]};
       }},
  };
  int comparisons = 0;
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    const Triple t = fuzz::random_triangle(8, trial, 50);
    const auto base = verdicts(run_all(t[0], t[1], t[2]));
    for (const auto& [name, f] : transforms) {
      const Triple u = f(t);
      ++comparisons;
      v.require(verdicts(run_all(u[0], u[1], u[2])) == base,
                name + " changes verdicts on trial " + std::to_string(trial));
    }
  }
  if (v.ok) v.note = std::to_string(comparisons) + " transformed runs, verdicts invariant";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Verdict()>>> criteria = {
      {1, criterion_canonical}, {2, criterion_equilateral}, {3, criterion_fuzz},
      {4, criterion_homothety}, {5, criterion_exactness},   {6, criterion_corpus},
      {7, criterion_tamper},    {8, criterion_symmetry},
  };
  int failed = 0;
  for (const auto& [id, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.note = std::string("exception: ") + e.what();
    }
    std::cout << (v.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << v.note << std::endl;
    failed += v.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
