#include "dm1/campaigns.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "dm1/moves.hpp"
#include "dm1/newton.hpp"
#include "dm1/specialization.hpp"
#include "dm1/word.hpp"

namespace dm1 {

void Report::fail(const std::string& reason) {
  ++failures;
  if (static_cast<long long>(counterexamples.size()) < kCounterexampleCap) {
    counterexamples.push_back(reason);
  } else {
    ++suppressed;
  }
}

std::string report_text(const Report& r) {
  std::ostringstream out;
  out << "campaign " << r.campaign << "\n";
  for (const auto& [k, v] : r.params) out << "param " << k << " = " << v << "\n";
  out << "instances " << r.instances << "\n";
  out << "passes " << r.passes() << "\n";
  out << "failures " << r.failures << "\n";
  for (const auto& [k, v] : r.counts) out << "count " << k << " = " << v << "\n";
  for (const std::string& ce : r.counterexamples) out << "counterexample " << ce << "\n";
  if (r.suppressed > 0) out << "counterexamples_suppressed " << r.suppressed << "\n";
  out << "wall_seconds " << r.wall_seconds << "\n";
  out << "result " << (r.ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

int default_jobs() {
  if (const char* env = std::getenv("NEWTON_DM1_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0 && v < 1024) return static_cast<int>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void merge_into(Report& total, const Report& part) {
  total.instances += part.instances;
  total.failures += part.failures;
  for (const auto& [k, v] : part.counts) total.counts[k] += v;
  total.suppressed += part.suppressed;
  for (const std::string& ce : part.counterexamples) {
    if (static_cast<long long>(total.counterexamples.size()) < kCounterexampleCap) {
      total.counterexamples.push_back(ce);
    } else {
      ++total.suppressed;
    }
  }
}

// Runs fn(0..n-1), fanning out over worker threads when jobs > 1.  fn must
// not throw (each cell catches into its own report).
template <typename Fn>
void run_cells(size_t n, int jobs, Fn&& fn) {
  if (jobs <= 0) jobs = default_jobs();
  if (jobs <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> workers;
  const size_t nw = std::min<size_t>(static_cast<size_t>(jobs), n);
  workers.reserve(nw);
  for (size_t w = 0; w < nw; ++w) {
    workers.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  }
  for (std::thread& t : workers) t.join();
}

struct Cell {
  long long h = 0;
  long long d = 0;
};

std::vector<Cell> polygon_cells(long long hmin, long long hmax) {
  std::vector<Cell> cells;
  for (long long h = hmin; h <= hmax; ++h) {
    for (long long d = 0; d <= h; ++d) cells.push_back(Cell{h, d});
  }
  return cells;
}

long long scale_for(long long h) {
  long long s = 1;
  for (long long k = 2; k <= h; ++k) s = std::lcm(s, k);
  return s;
}

// One (h,d) class with integer-scaled value tables and the full precedence
// matrix; everything downstream of the matrix is integer comparisons.
struct CellClass {
  long long h = 0;
  long long d = 0;
  std::vector<NewtonPolygon> polys;
  std::vector<std::vector<long long>> tables;  // eval values scaled by lcm(1..h)
  std::vector<std::vector<char>> prec;         // prec[i][j] <=> polys[i] precedes polys[j]

  std::vector<size_t> two_segment() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < polys.size(); ++i) {
      if (polys[i].segments().size() == 2) out.push_back(i);
    }
    return out;
  }

  // Indices of all zeta with (zeta, polys[x]) saturated.
  std::vector<size_t> saturated_below(size_t x) const {
    std::vector<size_t> below;
    for (size_t i = 0; i < polys.size(); ++i) {
      if (i != x && prec[i][x]) below.push_back(i);
    }
    std::vector<size_t> out;
    for (size_t z : below) {
      bool covered = true;
      for (size_t e : below) {
        if (e != z && prec[z][e]) {
          covered = false;
          break;
        }
      }
      if (covered) out.push_back(z);
    }
    return out;
  }
};

CellClass build_cell(long long h, long long d) {
  CellClass cc;
  cc.h = h;
  cc.d = d;
  cc.polys = enumerate_nps(h, d);
  const long long scale = scale_for(h);
  const size_t n = cc.polys.size();
  cc.tables.reserve(n);
  for (const NewtonPolygon& np : cc.polys) {
    std::vector<long long> t;
    t.reserve(static_cast<size_t>(h) + 1);
    for (const Rational& r : value_table(np)) {
      t.push_back(r.numerator() * (scale / r.denominator()));
    }
    cc.tables.push_back(std::move(t));
  }
  cc.prec.assign(n, std::vector<char>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      bool ge = true;
      for (size_t x = 0; x <= static_cast<size_t>(h); ++x) {
        if (cc.tables[i][x] < cc.tables[j][x]) {
          ge = false;
          break;
        }
      }
      cc.prec[i][j] = ge;
    }
  }
  return cc;
}

std::string pair_label(const CellClass& cc, size_t zi, size_t xi) {
  return "(h=" + std::to_string(cc.h) + ",d=" + std::to_string(cc.d) + ") zeta=" +
         format_np(cc.polys[zi]) + " xi=" + format_np(cc.polys[xi]);
}

}  // namespace

Report verify_axioms_campaign(long long hmax) {
  const auto t0 = Clock::now();
  Report r;
  r.campaign = "axioms";
  r.params["hmax"] = hmax;
  for (long long len = 1; len <= hmax; ++len) {
    for (uint64_t mask = 0; mask < (uint64_t{1} << len); ++mask) {
      std::string bits(static_cast<size_t>(len), '0');
      for (long long i = 0; i < len; ++i) {
        if ((mask >> i) & 1) bits[static_cast<size_t>(i)] = '1';
      }
      const Word w(bits);
      ++r.instances;
      try {
        const FVStructure s = fv_structure(w);
        if (!check_dm1_axioms(s)) {
          r.fail("word " + bits + ": kernel/image axioms fail");
          continue;
        }
        const FVPermutation p = fv_permutation(w);
        std::vector<char> hit(static_cast<size_t>(len), 0);
        bool bijective = true;
        for (long long i = 0; i < len; ++i) {
          const int t = p.succ[static_cast<size_t>(i)];
          if (t < 0 || t >= len || hit[static_cast<size_t>(t)]) {
            bijective = false;
            break;
          }
          hit[static_cast<size_t>(t)] = 1;
        }
        if (!bijective) {
          r.fail("word " + bits + ": (F, V^-1) map is not a permutation");
          continue;
        }
        bool labels_ok = true;
        for (long long i = 0; i < len; ++i) {
          const ArrowLabel want = w.one_at(static_cast<int>(i)) ? ArrowLabel::Vinv : ArrowLabel::F;
          if (p.into[static_cast<size_t>(p.succ[static_cast<size_t>(i)])] != want) {
            labels_ok = false;
            break;
          }
        }
        if (!labels_ok) {
          r.fail("word " + bits + ": arrow labels disagree with incoming maps");
        }
      } catch (const std::exception& e) {
        r.fail("word " + bits + ": " + e.what());
      }
    }
  }
  r.counts["words"] = r.instances;
  r.wall_seconds = seconds_since(t0);
  return r;
}

Report verify_prop4_campaign(long long hmax, int jobs) {
  const auto t0 = Clock::now();
  Report total;
  total.campaign = "prop4";
  total.params["hmax"] = hmax;
  const std::vector<Cell> cells = polygon_cells(2, hmax);
  std::vector<Report> parts(cells.size());
  run_cells(cells.size(), jobs, [&](size_t ci) {
    Report& r = parts[ci];
    try {
      const CellClass cc = build_cell(cells[ci].h, cells[ci].d);
      for (size_t xi : cc.two_segment()) {
        for (size_t zi : cc.saturated_below(xi)) {
          ++r.instances;
          try {
            const long long c = c_value(cc.polys[zi], cc.polys[xi]);
            const long long nsegs = static_cast<long long>(cc.polys[zi].segments().size());
            if (c != nsegs) {
              r.fail(pair_label(cc, zi, xi) + ": c = " + std::to_string(c) +
                     " but zeta has " + std::to_string(nsegs) + " segments");
            }
          } catch (const std::exception& e) {
            r.fail(pair_label(cc, zi, xi) + ": " + e.what());
          }
        }
      }
    } catch (const std::exception& e) {
      r.fail("cell (" + std::to_string(cells[ci].h) + "," + std::to_string(cells[ci].d) +
             "): " + e.what());
    }
  });
  for (const Report& p : parts) merge_into(total, p);
  total.counts["saturated pairs"] = total.instances;
  total.wall_seconds = seconds_since(t0);
  return total;
}

namespace {

// Shared by props123 and the theorem campaign: every identity the
// decomposition of one mixed two-segment xi claims.
void check_decomposition(Report& r, const NewtonPolygon& xi) {
  const CaseTag tag = classify_case(xi);
  r.counts["case " + std::string(case_name(tag))]++;
  switch (tag) {
    case CaseTag::I:
    case CaseTag::II:
    case CaseTag::III: {
      const DecompositionResult dec = minus_square_decompose(xi);
      const auto& segs = xi.segments();
      if (dec.rho.m * segs[0].n - dec.rho.n * segs[0].m != 1) {
        r.fail("xi=" + format_np(xi) + ": rho fails a*n1 - b*m1 = 1");
      }
      if (!mixed_two_segment(dec.xi_prime)) {
        r.fail("xi=" + format_np(xi) + ": xi' = " + format_np(dec.xi_prime) +
               " left the mixed-slope regime");
      }
      break;
    }
    case CaseTag::IV: {
      const DecompositionResult dec = minus_square_decompose(xi);
      const auto& segs = xi.segments();
      if (dec.rho.n * segs[1].m - dec.rho.m * segs[1].n != 1) {
        r.fail("xi=" + format_np(xi) + ": rho fails b*m2 - a*n2 = 1");
      }
      if (!mixed_two_segment(dec.xi_prime)) {
        r.fail("xi=" + format_np(xi) + ": xi' = " + format_np(dec.xi_prime) +
               " left the mixed-slope regime");
      }
      break;
    }
    case CaseTag::V:
    case CaseTag::VI:
    case CaseTag::BaseH2:
      prop3_decompose(xi);  // throws on any violated identity
      break;
  }
}

}  // namespace

Report verify_props123_campaign(long long hmax) {
  const auto t0 = Clock::now();
  Report r;
  r.campaign = "props123";
  r.params["hmax"] = hmax;
  for (const Cell& cell : polygon_cells(2, hmax)) {
    for (const NewtonPolygon& xi : enumerate_nps(cell.h, cell.d)) {
      if (xi.segments().size() != 2 || !mixed_two_segment(xi)) continue;
      ++r.instances;
      try {
        check_decomposition(r, xi);
      } catch (const std::exception& e) {
        r.fail("xi=" + format_np(xi) + ": " + e.what());
      }
    }
  }
  r.counts["mixed two-segment xi"] = r.instances;
  r.wall_seconds = seconds_since(t0);
  return r;
}

Report verify_theorem_campaign(long long hmax, int jobs) {
  const auto t0 = Clock::now();
  Report total;
  total.campaign = "theorem";
  total.params["hmax"] = hmax;
  const std::vector<Cell> cells = polygon_cells(2, hmax);
  std::vector<Report> parts(cells.size());
  run_cells(cells.size(), jobs, [&](size_t ci) {
    Report& r = parts[ci];
    try {
      const CellClass cc = build_cell(cells[ci].h, cells[ci].d);
      MoveCache cache;
      for (size_t xi : cc.two_segment()) {
        const NewtonPolygon& xipoly = cc.polys[xi];
        const bool mixed = mixed_two_segment(xipoly);
        r.counts["two-segment xi"]++;
        try {
          if (length_ell(minimal_word(xipoly)) != c_line(xipoly)) {
            r.fail("xi=" + format_np(xipoly) + ": ell(A_xi) != c(sigma, xi)");
          }
          if (mixed) check_decomposition(r, xipoly);
        } catch (const std::exception& e) {
          r.fail("xi=" + format_np(xipoly) + ": " + e.what());
        }
        for (size_t zi : cc.saturated_below(xi)) {
          ++r.instances;
          const std::string label = pair_label(cc, zi, xi);
          try {
            const Chain ch = chain_saturated_two_segment(cc.polys[zi], xipoly, cache);
            if (mixed && ch.method != ChainMethod::Constructive) {
              r.fail(label + ": mixed pair fell back to search");
            }
            r.counts[method_name(ch.method)]++;
            const long long c = c_value(cc.polys[zi], xipoly);
            if (static_cast<long long>(ch.steps.size()) != c) {
              r.fail(label + ": " + std::to_string(ch.steps.size()) + " steps, c = " +
                     std::to_string(c));
            }
            if (c != static_cast<long long>(cc.polys[zi].segments().size())) {
              r.fail(label + ": c != #segments(zeta)");
            }
            const CheckResult vc = verify_chain(ch);
            if (!vc.ok) r.fail(label + ": " + vc.reason);
          } catch (const std::exception& e) {
            r.fail(label + ": " + e.what());
          }
        }
      }
    } catch (const std::exception& e) {
      r.fail("cell (" + std::to_string(cells[ci].h) + "," + std::to_string(cells[ci].d) +
             "): " + e.what());
    }
  });
  for (const Report& p : parts) merge_into(total, p);
  total.counts["saturated pairs"] = total.instances;
  total.wall_seconds = seconds_since(t0);
  return total;
}

Report verify_dimension_campaign(long long hmax) {
  const auto t0 = Clock::now();
  Report r;
  r.campaign = "dimension";
  r.params["hmax"] = hmax;
  for (const Cell& cell : polygon_cells(0, hmax)) {
    const NewtonPolygon sigma = straight_line_polygon(cell.h, cell.d);
    const NewtonPolygon chi = ordinary_polygon(cell.h, cell.d);
    for (const NewtonPolygon& xi : enumerate_nps(cell.h, cell.d)) {
      ++r.instances;
      try {
        const long long ell = length_ell(minimal_word(xi));
        const long long c_sigma = c_value(sigma, xi);
        const long long via_line = c_line(xi);
        if (ell != c_sigma || c_sigma != via_line) {
          r.fail("xi=" + format_np(xi) + ": ell=" + std::to_string(ell) + " c(sigma,xi)=" +
                 std::to_string(c_sigma) + " chord-sum=" + std::to_string(via_line));
        }
      } catch (const std::exception& e) {
        r.fail("xi=" + format_np(xi) + ": " + e.what());
      }
    }
    ++r.instances;
    if (length_ell(minimal_word(sigma)) != 0) {
      r.fail("(h=" + std::to_string(cell.h) + ",d=" + std::to_string(cell.d) +
             "): ell(A_sigma) != 0");
    }
    ++r.instances;
    if (length_ell(minimal_word(chi)) != (cell.h - cell.d) * cell.d) {
      r.fail("(h=" + std::to_string(cell.h) + ",d=" + std::to_string(cell.d) +
             "): ell(A_chi) != (h-d)d");
    }
    r.counts["polygons"] += static_cast<long long>(enumerate_nps(cell.h, cell.d).size());
  }
  r.wall_seconds = seconds_since(t0);
  return r;
}

Report verify_order_campaign(long long hmax) {
  const auto t0 = Clock::now();
  Report r;
  r.campaign = "order";
  r.params["hmax"] = hmax;
  for (const Cell& cell : polygon_cells(1, hmax)) {
    const CellClass cc = build_cell(cell.h, cell.d);
    std::vector<Word> words;
    words.reserve(cc.polys.size());
    for (const NewtonPolygon& np : cc.polys) words.push_back(minimal_word(np));
    MoveCache cache;
    for (size_t i = 0; i < cc.polys.size(); ++i) {
      for (size_t j = 0; j < cc.polys.size(); ++j) {
        ++r.instances;
        try {
          const bool reach = leq_oracle(words[i], words[j], cache);
          if (reach != static_cast<bool>(cc.prec[i][j])) {
            r.fail(pair_label(cc, i, j) + ": moves say " + (reach ? "reachable" : "unreachable") +
                   ", precedes says " + (cc.prec[i][j] ? "yes" : "no"));
          }
        } catch (const std::exception& e) {
          r.fail(pair_label(cc, i, j) + ": " + e.what());
        }
      }
    }
  }
  r.counts["ordered pairs"] = r.instances;
  r.wall_seconds = seconds_since(t0);
  return r;
}

Report verify_lemma42_campaign(long long coord_max) {
  const auto t0 = Clock::now();
  Report r;
  r.campaign = "lemma42";
  r.params["coord_max"] = coord_max;
  for (long long ax = -coord_max; ax <= coord_max; ++ax) {
    for (long long ay = -coord_max; ay <= coord_max; ++ay) {
      for (long long bx = -coord_max; bx <= coord_max; ++bx) {
        for (long long by = -coord_max; by <= coord_max; ++by) {
          const LatticePoint a{ax, ay}, b{bx, by};
          const long long v = cross(a, b);
          if (v <= 0) continue;
          ++r.instances;
          try {
            const bool empty = lattice_interior_empty(a, b);
            if (empty != (v == 1)) {
              r.fail("a=(" + std::to_string(ax) + "," + std::to_string(ay) + ") b=(" +
                     std::to_string(bx) + "," + std::to_string(by) + "): emptiness " +
                     (empty ? "true" : "false") + " but cross = " + std::to_string(v));
            }
          } catch (const std::exception& e) {
            r.fail("a=(" + std::to_string(ax) + "," + std::to_string(ay) + ") b=(" +
                   std::to_string(bx) + "," + std::to_string(by) + "): " + e.what());
          }
        }
      }
    }
  }
  r.counts["positive-cross pairs"] = r.instances;
  r.wall_seconds = seconds_since(t0);
  return r;
}

namespace {

Word random_word(std::mt19937_64& rng, int max_len) {
  const int len = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_len));
  std::string bits(static_cast<size_t>(len), '0');
  for (char& c : bits) c = (rng() & 1) ? '1' : '0';
  return Word(std::move(bits));
}

}  // namespace

Report verify_algebra_campaign(uint64_t seed) {
  const auto t0 = Clock::now();
  Report r;
  r.campaign = "algebra";
  r.params["seed"] = static_cast<long long>(seed);

  std::vector<Word> simples;
  std::vector<std::pair<long long, long long>> simple_mn;
  for (long long m = 0; m <= 12; ++m) {
    for (long long n = 0; n <= 12 - m; ++n) {
      if ((m == 0 && n == 0) || std::gcd(m, n) != 1) continue;
      simples.push_back(simple_word(m, n));
      simple_mn.emplace_back(m, n);
    }
  }

  for (size_t i = 0; i < simples.size(); ++i) {
    for (size_t j = 0; j < simples.size(); ++j) {
      if (simples[i].size() + simples[j].size() > 12) continue;
      ++r.instances;
      r.counts["commutativity pairs"]++;
      if (direct_sum(simples[i], simples[j]) != direct_sum(simples[j], simples[i])) {
        r.fail("sum " + simples[i].str() + " + " + simples[j].str() + " is not commutative");
      }
    }
  }

  for (size_t i = 0; i < simples.size(); ++i) {
    for (size_t j = 0; j < simples.size(); ++j) {
      for (size_t k = 0; k < simples.size(); ++k) {
        if (simples[i].size() + simples[j].size() + simples[k].size() > 12) continue;
        ++r.instances;
        r.counts["associativity triples"]++;
        const Word left = direct_sum(direct_sum(simples[i], simples[j]), simples[k]);
        const Word right = direct_sum(simples[i], direct_sum(simples[j], simples[k]));
        if (left != right) {
          r.fail("sum " + simples[i].str() + " + " + simples[j].str() + " + " +
                 simples[k].str() + " is not associative");
        }
      }
    }
  }

  std::mt19937_64 rng(seed);
  for (int t = 0; t < 1000; ++t) {
    const Word a = random_word(rng, 15), b = random_word(rng, 15), c = random_word(rng, 15);
    ++r.instances;
    r.counts["random triples"]++;
    if (direct_sum(a, b) != direct_sum(b, a)) {
      r.fail("random sum " + a.str() + " + " + b.str() + " is not commutative");
      continue;
    }
    if (direct_sum(direct_sum(a, b), c) != direct_sum(a, direct_sum(b, c))) {
      r.fail("random sum " + a.str() + " + " + b.str() + " + " + c.str() +
             " is not associative");
    }
  }

  for (long long len = 1; len <= 10; ++len) {
    for (uint64_t mask = 0; mask < (uint64_t{1} << len); ++mask) {
      std::string bits(static_cast<size_t>(len), '0');
      for (long long i = 0; i < len; ++i) {
        if ((mask >> i) & 1) bits[static_cast<size_t>(i)] = '1';
      }
      const Word w(bits);
      ++r.instances;
      r.counts["round trips"]++;
      try {
        std::vector<Word> parts;
        for (const CyclicWord& c : cycle_decomposition(w)) parts.push_back(c.word);
        if (direct_sum(parts) != w) {
          r.fail("word " + bits + ": merge of its cycles differs from the word");
        }
      } catch (const std::exception& e) {
        r.fail("word " + bits + ": " + e.what());
      }
    }
  }

  for (long long len = 1; len <= 12; ++len) {
    for (uint64_t mask = 0; mask < (uint64_t{1} << len); ++mask) {
      std::string bits(static_cast<size_t>(len), '0');
      for (long long i = 0; i < len; ++i) {
        if ((mask >> i) & 1) bits[static_cast<size_t>(i)] = '1';
      }
      const Word w(bits);
      ++r.instances;
      r.counts["dual involutions"]++;
      if (dual(dual(w)) != w) r.fail("word " + bits + ": dual is not an involution");
    }
  }

  for (size_t i = 0; i < simples.size(); ++i) {
    const auto [m, n] = simple_mn[i];
    if (m + n > 12) continue;
    ++r.instances;
    r.counts["dual simples"]++;
    if (dual(simples[i]) != simple_word(n, m)) {
      r.fail("dual of the simple word for (" + std::to_string(m) + "," + std::to_string(n) +
             ") is not the simple word for the swapped pair");
    }
  }

  r.wall_seconds = seconds_since(t0);
  return r;
}

}  // namespace dm1
