#include <doctest.h>

#include "napgeo/fuzz.hpp"

using namespace napgeo;
using namespace napgeo::fuzz;

namespace {

bool within(const Rat& r, std::int64_t bound) {
  const mpz_class b = bound;
  return abs(r.num()) <= b && r.den() <= b;
}

}  // namespace

TEST_CASE("random_triangle is a pure function of seed, trial and bound") {
  CHECK(random_triangle(42, 0, 50) == random_triangle(42, 0, 50));
  CHECK(random_triangle(42, 17, 50) == random_triangle(42, 17, 50));
  CHECK(random_triangle(42, 0, 50) != random_triangle(42, 1, 50));
  CHECK(random_triangle(42, 0, 50) != random_triangle(43, 0, 50));
}

TEST_CASE("random triangles are non-degenerate and respect the bound") {
  for (std::int64_t bound : {1, 2, 7, 50}) {
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
      const Triple t = random_triangle(9, trial, bound);
      CHECK_FALSE(signed_area(t[0], t[1], t[2]).is_zero());
      for (const Point& p : t) {
        CHECK(p.x.b().is_zero());
        CHECK(p.y.b().is_zero());
        CHECK(within(p.x.a(), bound));
        CHECK(within(p.y.a(), bound));
      }
    }
  }
}

TEST_CASE("tiny grid still passes") {
  const FuzzSummary s = run_fuzz({1, 7, 1, 1});
  CHECK(s.trials == 1);
  CHECK(s.passed == 1);
  CHECK(s.failures.empty());
  CHECK(format_summary(s) == "1/1 passed\n");
}

TEST_CASE("output is identical across runs and thread counts") {
  const std::string one = format_summary(run_fuzz({60, 123, 20, 1}));
  CHECK(one == format_summary(run_fuzz({60, 123, 20, 1})));
  CHECK(one == format_summary(run_fuzz({60, 123, 20, 4})));
  CHECK(one == format_summary(run_fuzz({60, 123, 20, 64})));
  CHECK(one == "60/60 passed\n");
}

TEST_CASE("invalid configurations are rejected") {
  CHECK_THROWS_AS(run_fuzz({0, 1, 5, 1}), std::invalid_argument);
  CHECK_THROWS_AS(run_fuzz({1, 1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(run_fuzz({1, 1, -3, 1}), std::invalid_argument);
}

TEST_CASE("failure blocks carry the exact triangle and claim names") {
  FuzzSummary s;
  s.trials = 2;
  s.passed = 1;
  s.failures.push_back({1,
                        {Point{F3(Rat::normalize(-1, 2)), F3(0)}, Point{F3(3), F3(0)},
                         Point{F3(0), F3(Rat::normalize(7, 3))}},
                        {"napoleon", "grunbaum"}});
  const std::string text = format_summary(s);
  CHECK(text.rfind("1/2 passed\n", 0) == 0);
  CHECK(text.find("trial 1: --triangle \"-1/2,0 3,0 0,7/3\"") != std::string::npos);
  CHECK(text.find("napoleon") != std::string::npos);
  CHECK(text.find("grunbaum") != std::string::npos);
}
