// Acceptance gate: ten criteria, each printed as one PASS/FAIL line.
// Usage: exsplash_acceptance [N]   (N = 1..10; no argument runs all ten)
//
// Each criterion names the verification checks it depends on, per order q.
// A criterion passes when every named check passes and the summed check
// runtimes stay inside the stated budget.

#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exsplash/verification.hpp"

using exsplash::CheckResult;
using exsplash::VerifyOptions;

namespace {

std::map<unsigned, std::vector<CheckResult>> cache;

const std::vector<CheckResult>& suite(unsigned q) {
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  VerifyOptions opt;
  opt.q = q;
  opt.jobs = 4;
  return cache.emplace(q, exsplash::run_verification(opt)).first->second;
}

const CheckResult* find_check(unsigned q, const std::string& name) {
  for (const auto& r : suite(q))
    if (r.name == name) return &r;
  return nullptr;
}

struct Need {
  unsigned q;
  const char* check;
};

struct Criterion {
  int id;
  const char* title;
  std::vector<Need> asserted;
  std::vector<Need> reported; // informational, never affects the verdict
  double budget_seconds;      // 0 = no budget stated
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> cs = {
      {1,
       "field arithmetic: primitive tau, norm/trace laws, fiber partition",
       {{2, "field-tau-primitive"},
        {3, "field-tau-primitive"},
        {4, "field-tau-primitive"},
        {5, "field-tau-primitive"},
        {2, "field-norm-trace-laws"},
        {3, "field-norm-trace-laws"},
        {4, "field-norm-trace-laws"},
        {5, "field-norm-trace-laws"},
        {2, "field-norm-fibers-partition"},
        {3, "field-norm-fibers-partition"},
        {4, "field-norm-fibers-partition"},
        {5, "field-norm-fibers-partition"}},
       {},
       1.0},
      {2,
       "canonical splash fixture: exterior line, theta set, carriers, regular cyclic group",
       {{2, "canonical-line-exterior"},
        {3, "canonical-line-exterior"},
        {4, "canonical-line-exterior"},
        {5, "canonical-line-exterior"},
        {2, "canonical-splash-theta-set"},
        {3, "canonical-splash-theta-set"},
        {4, "canonical-splash-theta-set"},
        {5, "canonical-splash-theta-set"},
        {2, "canonical-carrier-triple"},
        {3, "canonical-carrier-triple"},
        {4, "canonical-carrier-triple"},
        {5, "canonical-carrier-triple"},
        {2, "singer-group-regular"},
        {3, "singer-group-regular"},
        {4, "singer-group-regular"},
        {5, "singer-group-regular"}},
       {},
       10.0},
      {3,
       "model equivalences: cover, Sherk surface and scattered linear set",
       {{2, "model-cover-equivalence"},
        {3, "model-cover-equivalence"},
        {4, "model-cover-equivalence"},
        {5, "model-cover-equivalence"},
        {2, "model-sherk-equivalence"},
        {3, "model-sherk-equivalence"},
        {4, "model-sherk-equivalence"},
        {5, "model-sherk-equivalence"},
        {2, "model-linear-set-equivalence"},
        {3, "model-linear-set-equivalence"},
        {4, "model-linear-set-equivalence"},
        {5, "model-linear-set-equivalence"},
        {2, "sherk-size-census-matches-covers"}},
       {},
       30.0},
      {4,
       "all class members share carriers; q-1 disjoint splashes per carrier pair",
       {{2, "exterior-census-counts"},
        {2, "disjoint-splash-family"},
        {3, "disjoint-splash-family"},
        {4, "disjoint-splash-family"}},
       {},
       0.0},
      {5,
       "subline families: counts, partition, witness separation, conic bundles",
       {{3, "splash-subline-count"},
        {4, "splash-subline-count"},
        {3, "subline-families-partition"},
        {4, "subline-families-partition"},
        {3, "pencil-iff-concurrent-witnesses"},
        {4, "pencil-iff-concurrent-witnesses"},
        {3, "special-conic-bundles"},
        {4, "special-conic-bundles"}},
       {},
       120.0},
      {6,
       "family swap involution: splash fixed, second subplane, families exchanged",
       {{3, "subline-family-swap"}},
       {},
       0.0},
      {7,
       "third-conjugate projection equals the splash exactly in even order",
       {{2, "projection-third-conjugate-parity"},
        {3, "projection-third-conjugate-parity"},
        {4, "projection-third-conjugate-parity"},
        {5, "projection-third-conjugate-parity"}},
       {},
       0.0},
      {8,
       "projection census: tangent and exterior strata with orbit constraints",
       {{2, "projection-census-structure"}},
       {{2, "projection-census-conjecture"}},
       60.0},
      {9,
       "unique subline projection point; tangent splash is never a projection",
       {{2, "subline-projection-unique"}, {2, "tangent-splash-not-projection"}},
       {},
       0.0},
      {10,
       "common-splash census: exhaustive class counts and intersection profile",
       {{2, "exterior-census-counts"},
        {2, "intersection-profile-exhaustive"},
        {2, "two-subplanes-per-subline"},
        {3, "splash-count-identity"},
        {3, "two-subplanes-per-subline"},
        {3, "intersection-profile-sampled"}},
       {},
       300.0},
  };
  return cs;
}

bool run_criterion(const Criterion& c) {
  bool pass = true;
  double seconds = 0;
  std::vector<std::string> failures;
  for (const auto& need : c.asserted) {
    const CheckResult* r = find_check(need.q, need.check);
    if (!r) {
      pass = false;
      failures.push_back(std::string(need.check) + "@q=" + std::to_string(need.q) + " missing");
      continue;
    }
    seconds += r->seconds;
    if (!r->pass) {
      pass = false;
      failures.push_back(std::string(need.check) + "@q=" + std::to_string(need.q) + ": " +
                         r->details);
    }
  }
  std::string reported;
  for (const auto& need : c.reported) {
    const CheckResult* r = find_check(need.q, need.check);
    if (!r) continue;
    seconds += r->seconds;
    if (!reported.empty()) reported += ", ";
    reported += std::string(need.check) + "@q=" + std::to_string(need.q) +
                (r->pass ? " holds" : " fails") + " (report-only)";
  }
  if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
    pass = false;
    failures.push_back("budget exceeded: " + std::to_string(seconds) + "s > " +
                       std::to_string(c.budget_seconds) + "s");
  }

  std::printf("%s  criterion %2d  %s", pass ? "PASS" : "FAIL", c.id, c.title);
  if (c.budget_seconds > 0)
    std::printf("  (%.2fs of %.0fs)", seconds, c.budget_seconds);
  else
    std::printf("  (%.2fs)", seconds);
  std::printf("\n");
  for (const auto& f : failures) std::printf("      failed: %s\n", f.c_str());
  if (!reported.empty()) std::printf("      reported: %s\n", reported.c_str());
  return pass;
}

} // namespace

int main(int argc, char** argv) {
  std::optional<int> only;
  if (argc > 1) {
    int id = std::atoi(argv[1]);
    if (id < 1 || id > 10) {
      std::fprintf(stderr, "usage: %s [criterion 1..10]\n", argv[0]);
      return 2;
    }
    only = id;
  }
  bool all = true;
  for (const auto& c : criteria()) {
    if (only && c.id != *only) continue;
    if (!run_criterion(c)) all = false;
  }
  return all ? 0 : 1;
}
