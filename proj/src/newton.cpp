#include "dm1/newton.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace dm1 {

Rational segment_slope(const Segment& s) { return Rational(s.n, s.m + s.n); }

bool steeper(const Segment& a, const Segment& b) {
  // n_a/(m_a+n_a) > n_b/(m_b+n_b)  <=>  n_a*m_b > n_b*m_a  (all nonnegative)
  return a.n * b.m > b.n * a.m;
}

NewtonPolygon NewtonPolygon::normalize(std::vector<Segment> segs) {
  for (const Segment& s : segs) {
    if (s.m < 0 || s.n < 0 || (s.m == 0 && s.n == 0)) {
      throw precondition_error("segment (" + std::to_string(s.m) + "," + std::to_string(s.n) +
                               ") must be nonzero with nonnegative entries");
    }
    if (std::gcd(s.m, s.n) != 1) {
      throw precondition_error("segment (" + std::to_string(s.m) + "," + std::to_string(s.n) +
                               ") is not coprime");
    }
  }
  std::sort(segs.begin(), segs.end(), steeper);
  NewtonPolygon np;
  np.segs_ = std::move(segs);
  for (const Segment& s : np.segs_) {
    np.h_ += s.m + s.n;
    np.d_ += s.n;
  }
  return np;
}

std::vector<LatticePoint> NewtonPolygon::vertices() const {
  std::vector<LatticePoint> out{{0, 0}};
  // Ascending slope: traverse canonical storage in reverse.
  for (auto it = segs_.rbegin(); it != segs_.rend(); ++it) {
    const auto& [x, y] = out.back();
    out.emplace_back(x + it->m + it->n, y + it->n);
  }
  return out;
}

Rational NewtonPolygon::eval(const Rational& x) const {
  if (x < Rational(0) || x > Rational(h_)) {
    throw precondition_error("eval: x outside [0, h]");
  }
  if (x == Rational(h_)) return Rational(d_);
  const std::vector<LatticePoint> vs = vertices();
  for (size_t k = 0; k + 1 < vs.size(); ++k) {
    const Rational x0(vs[k].first), x1(vs[k + 1].first);
    if (x0 <= x && x < x1) {
      const Rational y0(vs[k].second), y1(vs[k + 1].second);
      return y0 + (x - x0) * (y1 - y0) / (x1 - x0);
    }
  }
  throw invariant_error("eval: point not covered by any piece");
}

bool NewtonPolygon::contains(const Segment& s) const {
  return std::find(segs_.begin(), segs_.end(), s) != segs_.end();
}

NewtonPolygon NewtonPolygon::without(const Segment& s) const {
  std::vector<Segment> segs = segs_;
  auto it = std::find(segs.begin(), segs.end(), s);
  if (it == segs.end()) {
    throw precondition_error("without: segment not present in polygon");
  }
  segs.erase(it);
  return normalize(std::move(segs));
}

NewtonPolygon NewtonPolygon::plus(const NewtonPolygon& other) const {
  std::vector<Segment> segs = segs_;
  segs.insert(segs.end(), other.segs_.begin(), other.segs_.end());
  return normalize(std::move(segs));
}

bool precedes(const NewtonPolygon& zeta, const NewtonPolygon& xi) {
  if (zeta.height() != xi.height() || zeta.dim() != xi.dim()) {
    throw precondition_error("precedes: polygons have different endpoints");
  }
  for (long long x = 0; x <= zeta.height(); ++x) {
    if (zeta.eval(Rational(x)) < xi.eval(Rational(x))) return false;
  }
  return true;
}

std::vector<Rational> value_table(const NewtonPolygon& np) {
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(np.height()) + 1);
  const std::vector<LatticePoint> vs = np.vertices();
  out.emplace_back(0);
  for (size_t k = 0; k + 1 < vs.size(); ++k) {
    const Rational x0(vs[k].first), y0(vs[k].second);
    const Rational dx(vs[k + 1].first - vs[k].first), dy(vs[k + 1].second - vs[k].second);
    for (long long x = vs[k].first + 1; x <= vs[k + 1].first; ++x) {
      out.push_back(y0 + (Rational(x) - x0) * dy / dx);
    }
  }
  if (out.size() != static_cast<size_t>(np.height()) + 1) {
    throw invariant_error("value_table: vertex walk did not cover 0..h");
  }
  return out;
}

long long c_value(const NewtonPolygon& zeta, const NewtonPolygon& xi) {
  if (!precedes(zeta, xi)) {
    throw precondition_error("c_value: zeta does not precede xi");
  }
  Rational sum(0);
  for (long long i = 1; i <= zeta.height(); ++i) {
    sum += zeta.eval(Rational(i)) - xi.eval(Rational(i));
  }
  const Rational c = Rational(2) * sum;
  if (c.denominator() != 1 || c.numerator() < 0) {
    throw invariant_error("c_value: 2 * area is not a nonnegative integer");
  }
  return c.numerator();
}

namespace {

void enumerate_rec(const std::vector<Segment>& cands, size_t idx, long long rem_m,
                   long long rem_n, std::vector<Segment>& acc,
                   std::vector<NewtonPolygon>& out) {
  if (rem_m == 0 && rem_n == 0) {
    out.push_back(NewtonPolygon::normalize(acc));
    return;
  }
  for (size_t k = idx; k < cands.size(); ++k) {
    const Segment& s = cands[k];
    if (s.m > rem_m || s.n > rem_n) continue;
    acc.push_back(s);
    enumerate_rec(cands, k, rem_m - s.m, rem_n - s.n, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<NewtonPolygon> enumerate_nps(long long h, long long d) {
  if (h < 0 || d < 0 || d > h) {
    throw precondition_error("enumerate_nps: need 0 <= d <= h");
  }
  std::vector<Segment> cands;
  for (long long m = 0; m <= h - d; ++m) {
    for (long long n = 0; n <= d; ++n) {
      if ((m == 0 && n == 0) || std::gcd(m, n) != 1) continue;
      cands.push_back(Segment{m, n});
    }
  }
  std::sort(cands.begin(), cands.end(), steeper);
  std::vector<NewtonPolygon> out;
  std::vector<Segment> acc;
  enumerate_rec(cands, 0, h - d, d, acc, out);
  return out;
}

bool is_saturated(const NewtonPolygon& zeta, const NewtonPolygon& xi) {
  if (zeta == xi || !precedes(zeta, xi)) {
    throw precondition_error("is_saturated: need zeta strictly preceding xi");
  }
  for (const NewtonPolygon& eta : enumerate_nps(xi.height(), xi.dim())) {
    if (eta == zeta || eta == xi) continue;
    if (precedes(zeta, eta) && precedes(eta, xi)) return false;
  }
  return true;
}

Word minimal_word(const NewtonPolygon& xi) {
  Word acc;
  for (const Segment& s : xi.segments()) {
    acc = direct_sum(acc, simple_word(s.m, s.n));
  }
  return acc;
}

Word two_segment_closed_form(long long m1, long long n1, long long m2, long long n2) {
  if (m1 < 0 || n1 < 0 || m2 < 0 || n2 < 0 || std::gcd(m1, n1) != 1 || std::gcd(m2, n2) != 1) {
    throw precondition_error("two_segment_closed_form: segments must be coprime");
  }
  if (n1 <= m1 || n2 >= m2) {
    throw precondition_error("two_segment_closed_form: slopes must straddle 1/2");
  }
  std::string bits;
  bits.append(static_cast<size_t>(m1), '1');
  bits.append(static_cast<size_t>(n1 - m1), '0');
  bits.append(static_cast<size_t>(n2), '1');
  bits.append(static_cast<size_t>(m1), '0');
  bits.append(static_cast<size_t>(m2 - n2), '1');
  bits.append(static_cast<size_t>(n2), '0');
  return Word(std::move(bits));
}

long long cross(const LatticePoint& a, const LatticePoint& b) {
  return a.first * b.second - a.second * b.first;
}

bool lattice_interior_empty(const LatticePoint& a, const LatticePoint& b) {
  const long long v = cross(a, b);
  if (v <= 0) {
    throw precondition_error("lattice_interior_empty: need cross(a, b) > 0");
  }
  const long long lo_x = std::min({0LL, a.first, b.first});
  const long long hi_x = std::max({0LL, a.first, b.first});
  const long long lo_y = std::min({0LL, a.second, b.second});
  const long long hi_y = std::max({0LL, a.second, b.second});
  for (long long x = lo_x; x <= hi_x; ++x) {
    for (long long y = lo_y; y <= hi_y; ++y) {
      const LatticePoint p{x, y};
      if (p == LatticePoint{0, 0} || p == a || p == b) continue;
      // p = alpha*a + beta*b with alpha = cross(p,b)/v, beta = cross(a,p)/v;
      // the triangle (minus its vertices) is alpha >= 0, beta >= 0,
      // alpha + beta <= 1.  Edge points count: a lattice point strictly
      // inside an edge already witnesses cross(a, b) > 1.
      const long long s = cross(a, p), t = cross(p, b);
      if (s >= 0 && t >= 0 && s + t <= v) return false;
    }
  }
  return true;
}

NewtonPolygon straight_line_polygon(long long h, long long d) {
  if (h < 0 || d < 0 || d > h) {
    throw precondition_error("straight_line_polygon: need 0 <= d <= h");
  }
  if (h == 0) return NewtonPolygon();
  const long long g = std::gcd(h - d, d);
  std::vector<Segment> segs(static_cast<size_t>(g), Segment{(h - d) / g, d / g});
  return NewtonPolygon::normalize(std::move(segs));
}

NewtonPolygon ordinary_polygon(long long h, long long d) {
  if (h < 0 || d < 0 || d > h) {
    throw precondition_error("ordinary_polygon: need 0 <= d <= h");
  }
  std::vector<Segment> segs;
  segs.insert(segs.end(), static_cast<size_t>(d), Segment{0, 1});
  segs.insert(segs.end(), static_cast<size_t>(h - d), Segment{1, 0});
  return NewtonPolygon::normalize(std::move(segs));
}

long long c_line(const NewtonPolygon& xi) {
  const long long h = xi.height(), d = xi.dim();
  if (h == 0) return 0;
  Rational sum(0);
  for (long long i = 1; i <= h; ++i) {
    sum += Rational(d * i, h) - xi.eval(Rational(i));
  }
  const Rational c = Rational(2) * sum;
  if (c.denominator() != 1 || c.numerator() < 0) {
    throw invariant_error("c_line: 2 * area is not a nonnegative integer");
  }
  return c.numerator();
}

namespace {

void skip_ws(std::string_view& s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
}

long long parse_ll(std::string_view& s, const char* what) {
  skip_ws(s);
  size_t k = 0;
  while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
  if (k == 0) throw parse_error(std::string("expected ") + what + " in polygon expression");
  long long value = 0;
  for (size_t i = 0; i < k; ++i) value = value * 10 + (s[i] - '0');
  s.remove_prefix(k);
  return value;
}

void expect(std::string_view& s, char c) {
  skip_ws(s);
  if (s.empty() || s.front() != c) {
    throw parse_error(std::string("expected '") + c + "' in polygon expression");
  }
  s.remove_prefix(1);
}

}  // namespace

NewtonPolygon parse_np(std::string_view text) {
  std::string_view s = text;
  std::vector<Segment> segs;
  while (true) {
    skip_ws(s);
    long long mult = 1;
    if (!s.empty() && std::isdigit(static_cast<unsigned char>(s.front()))) {
      mult = parse_ll(s, "multiplicity");
      if (mult < 1) throw parse_error("multiplicity must be positive");
    }
    expect(s, '(');
    const long long m = parse_ll(s, "m");
    expect(s, ',');
    const long long n = parse_ll(s, "n");
    expect(s, ')');
    segs.insert(segs.end(), static_cast<size_t>(mult), Segment{m, n});
    skip_ws(s);
    if (s.empty()) break;
    expect(s, '+');
  }
  return NewtonPolygon::normalize(std::move(segs));
}

std::string format_np(const NewtonPolygon& np) {
  std::ostringstream out;
  const auto& segs = np.segments();
  for (size_t i = 0; i < segs.size();) {
    size_t j = i;
    while (j < segs.size() && segs[j] == segs[i]) ++j;
    if (i > 0) out << "+";
    if (j - i > 1) out << (j - i);
    out << "(" << segs[i].m << "," << segs[i].n << ")";
    i = j;
  }
  return out.str();
}

}  // namespace dm1
