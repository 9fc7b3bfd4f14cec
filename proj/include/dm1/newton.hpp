#pragma once

// Newton polygons with endpoints (0,0) and (h,d): multisets of coprime
// segments (m,n), drawn in ascending slope order so the graph is the lower
// convex function through the breakpoints.  Canonical storage is descending
// slope (steepest first), matching the block order of the minimal words.
// The partial order is zeta <= xi iff the graph of zeta lies on or above the
// graph of xi pointwise ("zeta is more special"); the straight line sigma is
// the minimum of its (h,d) class and the ordinary polygon chi the maximum.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "dm1/word.hpp"

namespace dm1 {

using Rational = boost::rational<long long>;
using LatticePoint = std::pair<long long, long long>;

// A segment with m horizontal unit steps and n vertical unit steps,
// gcd(m, n) = 1; its slope in the (height, dim) normalization is n/(m+n).
struct Segment {
  long long m = 0;
  long long n = 0;
  friend bool operator==(const Segment&, const Segment&) = default;
};

Rational segment_slope(const Segment& s);
// Strictly steeper; distinct coprime segments never tie.
bool steeper(const Segment& a, const Segment& b);

class NewtonPolygon {
 public:
  NewtonPolygon() = default;

  // Validates every segment (coprime, nonnegative, nonzero) and sorts into
  // canonical descending-slope order.
  static NewtonPolygon normalize(std::vector<Segment> segs);

  const std::vector<Segment>& segments() const { return segs_; }
  bool empty() const { return segs_.empty(); }
  long long height() const { return h_; }
  long long dim() const { return d_; }

  // Breakpoints in ascending x from (0,0) to (h,d); all x are integers.
  std::vector<LatticePoint> vertices() const;

  // Value of the graph at x in [0, h].
  Rational eval(const Rational& x) const;

  bool contains(const Segment& s) const;
  NewtonPolygon without(const Segment& s) const;  // removes one copy
  NewtonPolygon plus(const NewtonPolygon& other) const;

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

 private:
  std::vector<Segment> segs_;  // descending slope
  long long h_ = 0;
  long long d_ = 0;
};

// zeta <= xi: same endpoints and zeta's graph is >= xi's graph pointwise.
// Both graphs are piecewise linear with integer breakpoint x's, so checking
// x = 0..h is exact.
bool precedes(const NewtonPolygon& zeta, const NewtonPolygon& xi);

// Values of the graph at x = 0..h in one pass; precedes is a pointwise
// comparison of these tables, worth precomputing over whole (h,d) classes.
std::vector<Rational> value_table(const NewtonPolygon& np);

// c(zeta, xi) = 2 * sum_{i=1..h} (zeta(i) - xi(i)); an integer >= 0 whenever
// zeta <= xi (precondition).  Additive along intermediate polygons.
long long c_value(const NewtonPolygon& zeta, const NewtonPolygon& xi);

// All Newton polygons from (0,0) to (h,d), each a canonical multiset of
// coprime segments; deterministic order.
std::vector<NewtonPolygon> enumerate_nps(long long h, long long d);

// zeta < xi with no polygon strictly between.
bool is_saturated(const NewtonPolygon& zeta, const NewtonPolygon& xi);

// Minimal word of the class: merge of the simple words of the segments.
Word minimal_word(const NewtonPolygon& xi);

// Closed form of the minimal word for two segments with slopes straddling
// 1/2 (n1 > m1 and n2 < m2): 1^m1 0^(n1-m1) 1^n2 0^m1 1^(m2-n2) 0^n2.
Word two_segment_closed_form(long long m1, long long n1, long long m2, long long n2);

long long cross(const LatticePoint& a, const LatticePoint& b);

// No lattice point in the triangle (0,0), a, b other than its three
// vertices (edge points count as inhabitants: a point strictly inside an
// edge already forces cross(a, b) > 1).  Precondition: cross(a, b) > 0.
bool lattice_interior_empty(const LatticePoint& a, const LatticePoint& b);

// sigma: the polygon whose graph is the chord from (0,0) to (h,d), i.e.
// g copies of the primitive segment ((h-d)/g, d/g) with g = gcd(h-d, d).
NewtonPolygon straight_line_polygon(long long h, long long d);

// chi: d copies of (0,1) and h-d copies of (1,0); the maximum of the class.
NewtonPolygon ordinary_polygon(long long h, long long d);

// c(sigma, xi) computed against the chord y = (d/h) x directly.
long long c_line(const NewtonPolygon& xi);

// Text format: "(m,n)" terms joined by '+', repeats grouped as "k(m,n)".
NewtonPolygon parse_np(std::string_view text);
std::string format_np(const NewtonPolygon& np);

}  // namespace dm1
