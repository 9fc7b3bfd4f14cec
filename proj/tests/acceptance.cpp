// Acceptance harness: one line per criterion, [PASS]/[FAIL], exit 0 iff all
// pass.  Every check is exact (string or integer equality); the only
// tolerance is the per-criterion wall-clock budget printed on each line.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "dm1/campaigns.hpp"
#include "dm1/newton.hpp"
#include "dm1/specialization.hpp"
#include "dm1/word.hpp"

namespace {

using dm1::Report;

int g_failures = 0;

struct Outcome {
  bool pass = false;
  std::string detail;
  std::vector<std::string> notes;
};

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (out.pass && secs > budget_seconds) {
    out.pass = false;
    out.notes.push_back("over budget");
  }
  if (!out.pass) ++g_failures;
  std::printf("[%s] criterion %d: %s (%s%.2f s, budget %.0f s)\n", out.pass ? "PASS" : "FAIL",
              number, name.c_str(), out.detail.empty() ? "" : (out.detail + ", ").c_str(), secs,
              budget_seconds);
  for (const std::string& note : out.notes) std::printf("       %s\n", note.c_str());
  std::fflush(stdout);
}

Outcome from_report(const Report& r) {
  Outcome out;
  out.pass = r.ok();
  out.detail = std::to_string(r.instances) + " instances";
  for (const std::string& cx : r.counterexamples) out.notes.push_back(cx);
  if (r.suppressed > 0) {
    out.notes.push_back("counterexamples suppressed: " + std::to_string(r.suppressed));
  }
  return out;
}

Outcome golden_examples() {
  using dm1::Word;
  Outcome out;
  out.pass = true;
  int checks = 0;
  const auto expect = [&](bool okay, const std::string& what) {
    ++checks;
    if (!okay) {
      out.pass = false;
      out.notes.push_back("mismatch: " + what);
    }
  };

  const Word a = dm1::minimal_word(dm1::parse_np("(3,5)+(3,2)"));
  expect(a == Word("1110011000100"), "minimal word of (3,5)+(3,2)");
  const Word a1 = dm1::minus(a);
  const Word a2 = dm1::minus(a1);
  expect(a1 == Word("1110101000100"), "first minus");
  expect(a2 == Word("1111001000100"), "second minus");
  const auto cyc_a = dm1::cycle_decomposition(a2);
  expect(cyc_a.size() == 2 && cyc_a[0].word == Word("11000") && cyc_a[1].word == Word("11010100"),
         "cycles of the second minus");

  const Word b = dm1::minimal_word(dm1::parse_np("(2,3)+(4,3)"));
  expect(b == Word("110111001000"), "minimal word of (2,3)+(4,3)");
  const auto cyc_b = dm1::cycle_decomposition(dm1::minus(dm1::minus(b)));
  expect(cyc_b.size() == 2 && cyc_b[0].word == Word("1110100100") && cyc_b[1].word == Word("10"),
         "cycles of the second minus of (2,3)+(4,3)");

  out.detail = std::to_string(checks) + " exact string checks";
  return out;
}

}  // namespace

int main() {
  criterion(1, "golden example words, minus steps and cycle splits", 1.0, golden_examples);
  criterion(2, "DM1 axioms and (F,V^-1) permutation for all words of length <= 10", 10.0, [] {
    const Report r = dm1::verify_axioms_campaign(10);
    Outcome out = from_report(r);
    if (r.instances != 2046) {
      out.pass = false;
      out.notes.push_back("expected 2046 words, saw " + std::to_string(r.instances));
    }
    return out;
  });
  criterion(3, "c(zeta, xi) = #segments(zeta) for saturated pairs, heights <= 14", 60.0,
            [] { return from_report(dm1::verify_prop4_campaign(14)); });
  criterion(4, "minus-squared and terminal decompositions for mixed xi, heights <= 14", 60.0,
            [] { return from_report(dm1::verify_props123_campaign(14)); });
  criterion(5, "verified specialization chains for all saturated pairs, heights <= 14", 120.0,
            [] { return from_report(dm1::verify_theorem_campaign(14)); });
  criterion(6, "ell(minimal word) equals the area term c(sigma, xi), heights <= 12", 30.0,
            [] { return from_report(dm1::verify_dimension_campaign(12)); });
  criterion(7, "move-graph reachability coincides with the polygon order, heights <= 9", 120.0,
            [] { return from_report(dm1::verify_order_campaign(9)); });
  criterion(8, "triangle emptiness iff cross product 1, coordinates <= 8", 10.0,
            [] { return from_report(dm1::verify_lemma42_campaign(8)); });
  criterion(9, "direct-sum algebra, round trips and duality", 30.0,
            [] { return from_report(dm1::verify_algebra_campaign(dm1::kAlgebraSeed)); });

  if (g_failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
