#include "napgeo/fuzz.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "napgeo/theorems.hpp"

namespace napgeo::fuzz {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in [0, n). Rejection keeps the mapping identical on every
// standard library, unlike std::uniform_int_distribution.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

Rat random_rat(std::mt19937_64& rng, std::int64_t bound) {
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  const long num = static_cast<long>(below(rng, span)) - static_cast<long>(bound);
  const long den = static_cast<long>(below(rng, static_cast<std::uint64_t>(bound))) + 1;
  return Rat::normalize(num, den);
}

}  // namespace

Triple random_triangle(std::uint64_t seed, std::uint64_t trial, std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(trial)));
  while (true) {
    Triple t;
    for (Point& p : t) {
      p.x = F3(random_rat(rng, bound));
      p.y = F3(random_rat(rng, bound));
    }
    if (!signed_area(t[0], t[1], t[2]).is_zero()) return t;
  }
}

FuzzSummary run_fuzz(const FuzzConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (config.bound < 1) throw std::invalid_argument("bound must be at least 1");

  struct Outcome {
    bool passed = false;
    TrialFailure failure;
  };
  std::vector<Outcome> outcomes(config.trials);
  auto work = [&](std::uint64_t first, std::uint64_t stride) {
    for (std::uint64_t i = first; i < config.trials; i += stride) {
      const Triple t = random_triangle(config.seed, i, config.bound);
      const Report report = run_all(t[0], t[1], t[2]);
      outcomes[i].passed = report.all_passed;
      if (!report.all_passed) {
        outcomes[i].failure.trial = i;
        outcomes[i].failure.triangle = t;
        for (const auto& r : report.results) {
          if (!r.passed) outcomes[i].failure.failed_claims.push_back(r.name);
        }
      }
    }
  };

  const unsigned jobs = static_cast<unsigned>(
      std::clamp<std::uint64_t>(config.jobs, 1, config.trials));
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j, jobs);
    for (auto& th : pool) th.join();
  }

  FuzzSummary summary;
  summary.trials = config.trials;
  for (auto& o : outcomes) {
    if (o.passed) {
      ++summary.passed;
    } else {
      summary.failures.push_back(std::move(o.failure));
    }
  }
  return summary;
}

std::string format_summary(const FuzzSummary& s) {
  std::ostringstream out;
  out << s.passed << "/" << s.trials << " passed\n";
  for (const auto& f : s.failures) {
    out << "trial " << f.trial << ": --triangle \"";
    for (std::size_t i = 0; i < f.triangle.size(); ++i) {
      out << (i ? " " : "") << f.triangle[i].x.str() << "," << f.triangle[i].y.str();
    }
    out << "\"\n  failed:";
    for (const auto& c : f.failed_claims) out << " " << c;
    out << "\n";
  }
  return out.str();
}

}  // namespace napgeo::fuzz
