#pragma once

// Exhaustive desk-scale verification campaigns.  Each campaign sweeps a full
// finite family (every word up to a length, every Newton polygon class up to
// a height, every lattice vector in a box), re-checks the claimed identities
// instance by instance, and returns a Report whose counterexample list must
// come back empty.  Campaigns over polygon classes may fan out over (h,d)
// cells; reports merge deterministically in cell order.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dm1 {

// Hard ceilings and documented defaults: polygon campaigns run to height 14,
// whole-word-graph campaigns to length 10.
inline constexpr long long kPolygonHmax = 14;
inline constexpr long long kWordHmax = 10;
inline constexpr uint64_t kAlgebraSeed = 20250825;
inline constexpr int kCounterexampleCap = 25;

struct Report {
  std::string campaign;
  std::map<std::string, long long> params;
  long long instances = 0;
  long long failures = 0;
  std::map<std::string, long long> counts;
  std::vector<std::string> counterexamples;  // capped at kCounterexampleCap
  long long suppressed = 0;                  // counterexamples beyond the cap
  double wall_seconds = 0.0;

  long long passes() const { return instances - failures; }
  bool ok() const { return failures == 0 && instances > 0; }

  void fail(const std::string& reason);
};

std::string report_text(const Report& r);

// Worker count: explicit argument, else NEWTON_DM1_JOBS, else the hardware.
int default_jobs();

// Every word of length <= hmax is a DM1: the kernel/image axioms hold, the
// (F, V^-1) map is a permutation, and arrow labels match incoming-map types.
Report verify_axioms_campaign(long long hmax);

// For every two-segment xi of height <= hmax and every saturated zeta < xi:
// c_value(zeta, xi) equals the number of segments of zeta.
Report verify_prop4_campaign(long long hmax, int jobs = 0);

// For every mixed two-segment xi of height <= hmax: the six-case split, the
// Euclid condition on rho, and the minus-squared / terminal decompositions.
Report verify_props123_campaign(long long hmax);

// For every two-segment xi of height <= hmax and every saturated zeta < xi:
// the chain construction succeeds (constructively when slopes straddle 1/2),
// has exactly c_value(zeta, xi) steps, and passes verify_chain; plus the
// per-xi decomposition identities and ell(A_xi) = c(sigma, xi).
Report verify_theorem_campaign(long long hmax, int jobs = 0);

// For every polygon xi of height <= hmax: ell(minimal_word(xi)) equals
// c(sigma, xi) (two independent computations), with the extreme values 0 for
// sigma and (h-d)*d for the ordinary polygon.
Report verify_dimension_campaign(long long hmax);

// For every pair of polygons with equal endpoints and height <= hmax:
// reachability in the elementary-move graph coincides with precedes.
Report verify_order_campaign(long long hmax);

// For every pair of lattice vectors with coordinates in [-coord_max,
// coord_max] and positive cross product: triangle emptiness iff cross = 1.
Report verify_lemma42_campaign(long long coord_max);

// Direct-sum commutativity/associativity (exhaustive over simple words of
// total length <= 12 plus 1000 seeded random triples of length <= 15),
// cycle-decomposition round trips (length <= 10), and dual involution
// identities (length <= 12).
Report verify_algebra_campaign(uint64_t seed);

}  // namespace dm1
