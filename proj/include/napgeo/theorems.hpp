#pragma once

#include <optional>
#include <string>
#include <vector>

#include "napgeo/napoleon.hpp"

namespace napgeo {

// Stable claim identifiers used in reports and by the fuzz harness.
namespace claim {
inline constexpr const char* kConstruction = "construction";
inline constexpr const char* kBasicLemma = "basic_lemma";
inline constexpr const char* kNapoleon = "napoleon";
inline constexpr const char* kReflectionDevice = "reflection_device";
inline constexpr const char* kMidpointsCentroids = "midpoints_centroids";
inline constexpr const char* kGrunbaum = "grunbaum";
}  // namespace claim

struct CheckResult {
  std::string name;
  bool passed = false;
  // One line per compared quantity, "ok:" or "FAIL:" prefixed, with the
  // exact values involved. Every sub-failure is listed, not just the first.
  std::string details;
};

struct Report {
  Triple input;
  std::vector<CheckResult> results;
  bool all_passed = false;
  // Present whenever construction succeeded.
  std::optional<NapoleonBundle> bundle;
  std::optional<AreaLedger> ledger;
};

// Each check is total over any bundle, including tampered ones: a
// construction that throws while checking is recorded as a failed item.
CheckResult check_basic_lemma(const NapoleonBundle& b);
CheckResult check_napoleon(const NapoleonBundle& b);
CheckResult check_reflection_device(const NapoleonBundle& b);
CheckResult check_midpoints_and_centroids(const NapoleonBundle& b);
CheckResult check_grunbaum(const NapoleonBundle& b);

// The five checks above, in that order, on a bundle built elsewhere.
std::vector<CheckResult> run_checks(const NapoleonBundle& b);

Report run_all(const Point& A, const Point& B, const Point& C);

// True when every interior angle of the triangle is below 120 degrees; the
// cevian-segment and 120-degree claims at J are only asserted then.
bool all_angles_below_120(const Point& A, const Point& B, const Point& C);

}  // namespace napgeo
