#include "dm1/specialization.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace dm1 {

namespace {

// The recursion re-checks saturation at every level, which needs the full
// (h,d) class; memoize classes and their value tables across calls.
struct ClassData {
  std::vector<NewtonPolygon> polys;
  std::vector<std::vector<Rational>> tables;
};

const ClassData& class_data(long long h, long long d) {
  static std::mutex mu;
  static std::map<std::pair<long long, long long>, std::unique_ptr<const ClassData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{h, d}];
  if (!slot) {
    auto data = std::make_unique<ClassData>();
    data->polys = enumerate_nps(h, d);
    data->tables.reserve(data->polys.size());
    for (const NewtonPolygon& np : data->polys) data->tables.push_back(value_table(np));
    slot = std::move(data);
  }
  return *slot;
}

bool table_precedes(const std::vector<Rational>& upper, const std::vector<Rational>& lower) {
  for (size_t x = 0; x < upper.size(); ++x) {
    if (upper[x] < lower[x]) return false;
  }
  return true;
}

// is_saturated against the memoized class.
bool saturated_cached(const NewtonPolygon& zeta, const NewtonPolygon& xi) {
  if (zeta == xi || !precedes(zeta, xi)) {
    throw precondition_error("is_saturated: need zeta strictly preceding xi");
  }
  const ClassData& cd = class_data(xi.height(), xi.dim());
  const std::vector<Rational> tz = value_table(zeta), tx = value_table(xi);
  for (size_t k = 0; k < cd.polys.size(); ++k) {
    if (cd.polys[k] == zeta || cd.polys[k] == xi) continue;
    if (table_precedes(tz, cd.tables[k]) && table_precedes(cd.tables[k], tx)) return false;
  }
  return true;
}

}  // namespace

const char* case_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::I: return "I";
    case CaseTag::II: return "II";
    case CaseTag::III: return "III";
    case CaseTag::IV: return "IV";
    case CaseTag::V: return "V";
    case CaseTag::VI: return "VI";
    case CaseTag::BaseH2: return "BASE_H2";
  }
  return "?";
}

const char* method_name(ChainMethod m) {
  return m == ChainMethod::Constructive ? "constructive" : "search";
}

bool mixed_two_segment(const NewtonPolygon& xi) {
  const auto& segs = xi.segments();
  return segs.size() == 2 && segs[0].n > segs[0].m && segs[1].n < segs[1].m;
}

CaseTag classify_case(const NewtonPolygon& xi) {
  const auto& segs = xi.segments();
  if (segs.size() != 2) {
    throw precondition_error("classify_case: polygon must have exactly two segments");
  }
  const long long m1 = segs[0].m, n1 = segs[0].n;
  const long long m2 = segs[1].m, n2 = segs[1].n;
  if (n1 <= m1 || n2 >= m2) {
    throw precondition_error("classify_case: slopes must straddle 1/2 in " + format_np(xi));
  }
  if (xi.height() == 2) return CaseTag::BaseH2;
  const bool c1 = n1 - m1 > 1 && n2 > 0;
  const bool c2 = n1 - m1 == 1 && m1 > 0 && n2 == 1;
  const bool c3 = n2 == 0 && m1 > 1;
  const bool c4 = n1 - m1 == 1 && n2 > 1;
  const bool c5 = m1 == 0 && n2 == 1;
  const bool c6 = m1 == 1 && n2 == 0;
  if (c1 + c2 + c3 + c4 + c5 + c6 != 1) {
    throw invariant_error("classify_case: six-case split failed for " + format_np(xi));
  }
  if (c1) return CaseTag::I;
  if (c2) return CaseTag::II;
  if (c3) return CaseTag::III;
  if (c4) return CaseTag::IV;
  if (c5) return CaseTag::V;
  return CaseTag::VI;
}

Segment rho_segment(const NewtonPolygon& xi, CaseTag tag) {
  const auto& segs = xi.segments();
  const long long m1 = segs[0].m, n1 = segs[0].n;
  const long long m2 = segs[1].m, n2 = segs[1].n;
  Segment rho{-1, -1};
  int solutions = 0;
  switch (tag) {
    case CaseTag::I:
    case CaseTag::II:
    case CaseTag::III:
      for (long long a = 0; a <= m1; ++a) {
        const long long num = a * n1 - 1;
        if (num < 0 || m1 == 0 || num % m1 != 0) continue;
        const long long b = num / m1;
        if (b < 1 || b > n1) continue;
        rho = Segment{a, b};
        ++solutions;
      }
      break;
    case CaseTag::IV:
      for (long long b = 1; b <= n2; ++b) {
        const long long num = b * m2 - 1;
        if (num % n2 != 0) continue;
        const long long a = num / n2;
        if (a < 0 || a > m2) continue;
        rho = Segment{a, b};
        ++solutions;
      }
      break;
    default:
      throw precondition_error("rho_segment: case must be one of I-IV");
  }
  if (solutions != 1) {
    throw invariant_error("rho_segment: expected a unique (a,b) for " + format_np(xi) +
                          ", found " + std::to_string(solutions));
  }
  if (tag == CaseTag::II && rho != Segment{1, 1}) {
    throw invariant_error("rho_segment: case II must yield (1,1)");
  }
  return rho;
}

DecompositionResult minus_square_decompose(const NewtonPolygon& xi) {
  const CaseTag tag = classify_case(xi);
  if (tag != CaseTag::I && tag != CaseTag::II && tag != CaseTag::III && tag != CaseTag::IV) {
    throw precondition_error("minus_square_decompose: case must be one of I-IV");
  }
  const auto& segs = xi.segments();
  const Segment rho = rho_segment(xi, tag);
  const Word w2 = minus(minus(minimal_word(xi)));
  const std::vector<CyclicWord> cycles = cycle_decomposition(w2);
  if (cycles.size() != 2) {
    throw invariant_error("minus_square_decompose: minus^2 of " + format_np(xi) + " has " +
                          std::to_string(cycles.size()) + " cycles, expected 2");
  }
  const Word rho_word = simple_word(rho.m, rho.n);
  int rho_idx = -1;
  if (cycles[0].word == rho_word) {
    rho_idx = 0;
  } else if (cycles[1].word == rho_word) {
    rho_idx = 1;
  } else {
    throw invariant_error("minus_square_decompose: no cycle of minus^2 equals A_rho for " +
                          format_np(xi));
  }
  const Word left = cycles[static_cast<size_t>(1 - rho_idx)].word;

  std::vector<Segment> next;
  if (tag == CaseTag::IV) {
    next = {segs[0], Segment{segs[1].m - rho.m, segs[1].n - rho.n}};
  } else {
    next = {Segment{segs[0].m - rho.m, segs[0].n - rho.n}, segs[1]};
  }
  const NewtonPolygon xi_prime = NewtonPolygon::normalize(std::move(next));

  if (left != minus(minimal_word(xi_prime))) {
    throw invariant_error("minus_square_decompose: left cycle of " + format_np(xi) +
                          " is not minus(A_xi') for xi' = " + format_np(xi_prime));
  }
  if (direct_sum(left, rho_word) != w2) {
    throw invariant_error("minus_square_decompose: cycle merge does not recover minus^2");
  }
  return DecompositionResult{xi_prime, rho, left, rho_word, tag};
}

BaseDecomposition prop3_decompose(const NewtonPolygon& xi) {
  const CaseTag tag = classify_case(xi);
  const auto& segs = xi.segments();
  BaseDecomposition out;
  out.tag = tag;
  switch (tag) {
    case CaseTag::BaseH2:
      out.segments = {Segment{1, 1}};
      out.word = minus(minimal_word(xi));
      break;
    case CaseTag::V:
      out.segments = {Segment{1, 1}, Segment{segs[1].m - 1, 1}};
      out.word = minus(minus(minimal_word(xi)));
      break;
    case CaseTag::VI:
      out.segments = {Segment{1, segs[0].n - 1}, Segment{1, 1}};
      out.word = minus(minus(minimal_word(xi)));
      break;
    default:
      throw precondition_error("prop3_decompose: case must be V, VI or BASE_H2");
  }
  const NewtonPolygon claimed = NewtonPolygon::normalize(out.segments);
  out.segments = claimed.segments();
  if (minimal_word(claimed) != out.word) {
    throw invariant_error("prop3_decompose: merge of claimed segments does not equal the word for " +
                          format_np(xi));
  }
  return out;
}

namespace {

ChainStep single_move_step(const Word& upper) {
  return ChainStep{{whole_word_minus_witness(upper)}};
}

// Merge `extra` (a single-cycle word) into every word and witness.
void lift_by_cycle(std::vector<Word>& words, std::vector<ChainStep>& steps, const Word& extra) {
  for (Word& w : words) w = direct_sum(w, extra);
  for (ChainStep& st : steps) {
    for (MoveWitness& mw : st.moves) {
      mw.p_cycles.push_back(extra);
      mw.before = direct_sum(mw.before, extra);
      mw.after = direct_sum(mw.after, extra);
    }
  }
}

struct BuildOut {
  std::vector<Word> words;
  std::vector<ChainStep> steps;
  bool used_search = false;
};

BuildOut search_build(const NewtonPolygon& zeta, const NewtonPolygon& xi, MoveCache& cache) {
  const Word lo = minimal_word(zeta), hi = minimal_word(xi);
  const auto path = graded_move_path(lo, hi, cache);
  if (!path) {
    throw invariant_error("specialization search exhausted between " + format_np(zeta) +
                          " and " + format_np(xi));
  }
  BuildOut out;
  out.used_search = true;
  out.words.push_back(lo);
  for (auto it = path->rbegin(); it != path->rend(); ++it) {
    out.words.push_back(it->before);
    out.steps.push_back(ChainStep{{*it}});
  }
  return out;
}

BuildOut build_saturated(const NewtonPolygon& zeta, const NewtonPolygon& xi, MoveCache& cache) {
  if (!mixed_two_segment(xi)) return search_build(zeta, xi, cache);

  const CaseTag tag = classify_case(xi);
  const Word a_xi = minimal_word(xi);
  BuildOut out;
  switch (tag) {
    case CaseTag::BaseH2: {
      const NewtonPolygon expected = NewtonPolygon::normalize({Segment{1, 1}});
      if (zeta != expected) {
        throw invariant_error("saturation structure: zeta of the h=2 base must be (1,1), got " +
                              format_np(zeta));
      }
      out.words = {minus(a_xi), a_xi};
      out.steps = {single_move_step(a_xi)};
      return out;
    }
    case CaseTag::V:
    case CaseTag::VI: {
      const BaseDecomposition bd = prop3_decompose(xi);
      if (zeta.segments() != bd.segments) {
        throw invariant_error("saturation structure: zeta " + format_np(zeta) +
                              " does not match the terminal decomposition of " + format_np(xi));
      }
      const Word a_minus = minus(a_xi);
      out.words = {bd.word, a_minus, a_xi};
      out.steps = {single_move_step(a_minus), single_move_step(a_xi)};
      return out;
    }
    default: {
      const DecompositionResult dec = minus_square_decompose(xi);
      if (!zeta.contains(dec.rho)) {
        throw invariant_error("saturation structure: rho (" + std::to_string(dec.rho.m) + "," +
                              std::to_string(dec.rho.n) + ") is not a segment of zeta " +
                              format_np(zeta));
      }
      // rho sits at the steep end of zeta in cases I-III and at the shallow
      // end in case IV.
      const Segment expected_end =
          (dec.tag == CaseTag::IV) ? zeta.segments().back() : zeta.segments().front();
      if (expected_end != dec.rho) {
        throw invariant_error("saturation structure: rho is not the expected extreme segment of " +
                              format_np(zeta));
      }
      const NewtonPolygon zeta_prime = zeta.without(dec.rho);
      if (!precedes(zeta_prime, dec.xi_prime) || zeta_prime == dec.xi_prime ||
          !saturated_cached(zeta_prime, dec.xi_prime)) {
        throw invariant_error("recursion structure: (" + format_np(zeta_prime) + ", " +
                              format_np(dec.xi_prime) + ") is not a saturated pair");
      }
      BuildOut sub = build_saturated(zeta_prime, dec.xi_prime, cache);
      // The sub-chain ends ... < minus(A_xi') < A_xi'; keep everything up to
      // minus(A_xi') and merge A_rho into it.
      out.words.assign(sub.words.begin(), sub.words.end() - 1);
      out.steps.assign(sub.steps.begin(), sub.steps.end() - 1);
      out.used_search = sub.used_search;
      lift_by_cycle(out.words, out.steps, dec.rho_word);

      const Word a_minus = minus(a_xi);
      if (out.words.back() != minus(a_minus)) {
        throw invariant_error("recursion structure: lifted chain top is not minus^2(A_xi) for " +
                              format_np(xi));
      }
      out.words.push_back(a_minus);
      out.steps.push_back(single_move_step(a_minus));
      out.words.push_back(a_xi);
      out.steps.push_back(single_move_step(a_xi));
      return out;
    }
  }
}

Chain finish_chain(const NewtonPolygon& zeta, const NewtonPolygon& xi, BuildOut&& out) {
  if (out.words.front() != minimal_word(zeta) || out.words.back() != minimal_word(xi)) {
    throw invariant_error("chain endpoints do not match the minimal words");
  }
  if (static_cast<long long>(out.steps.size()) != c_value(zeta, xi)) {
    throw invariant_error("chain between " + format_np(zeta) + " and " + format_np(xi) +
                          " has " + std::to_string(out.steps.size()) + " steps, expected c = " +
                          std::to_string(c_value(zeta, xi)));
  }
  Chain ch;
  ch.zeta = zeta;
  ch.xi = xi;
  ch.words = std::move(out.words);
  ch.steps = std::move(out.steps);
  ch.method = out.used_search ? ChainMethod::Search : ChainMethod::Constructive;
  return ch;
}

}  // namespace

Chain chain_saturated_two_segment(const NewtonPolygon& zeta, const NewtonPolygon& xi,
                                  MoveCache& cache) {
  if (xi.segments().size() != 2) {
    throw precondition_error("chain_saturated_two_segment: xi must have exactly two segments");
  }
  if (zeta == xi || !precedes(zeta, xi) || !saturated_cached(zeta, xi)) {
    throw precondition_error("chain_saturated_two_segment: pair is not saturated");
  }
  return finish_chain(zeta, xi, build_saturated(zeta, xi, cache));
}

Chain chain_saturated_two_segment(const NewtonPolygon& zeta, const NewtonPolygon& xi) {
  MoveCache cache;
  return chain_saturated_two_segment(zeta, xi, cache);
}

namespace {

// Multiset intersection of two canonical (descending-slope) segment lists.
std::vector<Segment> common_segments(const std::vector<Segment>& a,
                                     const std::vector<Segment>& b) {
  std::vector<Segment> out;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      out.push_back(a[i]);
      ++i;
      ++j;
    } else if (steeper(a[i], b[j])) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

NewtonPolygon remove_segments(const NewtonPolygon& np, const std::vector<Segment>& drop) {
  NewtonPolygon out = np;
  for (const Segment& s : drop) out = out.without(s);
  return out;
}

}  // namespace

Chain chain_general(const NewtonPolygon& zeta, const NewtonPolygon& xi) {
  if (!precedes(zeta, xi)) {
    throw precondition_error("chain_general: zeta does not precede xi");
  }
  if (zeta == xi) {
    Chain ch;
    ch.zeta = zeta;
    ch.xi = xi;
    ch.words = {minimal_word(xi)};
    return ch;
  }

  // Saturated polygon chain from zeta to xi, found over the interval
  // [zeta, xi] of the precedence order.
  const ClassData& cd = class_data(xi.height(), xi.dim());
  const std::vector<Rational> tz = value_table(zeta), tx = value_table(xi);
  std::vector<const NewtonPolygon*> interval;
  for (size_t k = 0; k < cd.polys.size(); ++k) {
    if (table_precedes(tz, cd.tables[k]) && table_precedes(cd.tables[k], tx)) {
      interval.push_back(&cd.polys[k]);
    }
  }
  const size_t n = interval.size();
  size_t zi = n, xii = n;
  std::vector<std::vector<Rational>> tables(n);
  for (size_t i = 0; i < n; ++i) {
    if (*interval[i] == zeta) zi = i;
    if (*interval[i] == xi) xii = i;
    tables[i] = value_table(*interval[i]);
  }
  std::vector<std::vector<char>> prec(n, std::vector<char>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) prec[i][j] = table_precedes(tables[i], tables[j]);
  }
  auto covered_by = [&](size_t i, size_t j) {
    if (i == j || !prec[i][j]) return false;
    for (size_t k = 0; k < n; ++k) {
      if (k != i && k != j && prec[i][k] && prec[k][j]) return false;
    }
    return true;
  };
  // Prefer covers whose differing window has a two-segment upper polygon:
  // those steps run the constructive recursion instead of the search
  // fallback.
  auto preferred = [&](size_t i, size_t j) {
    const std::vector<Segment> common =
        common_segments(interval[i]->segments(), interval[j]->segments());
    return interval[j]->segments().size() - common.size() == 2;
  };
  std::vector<size_t> parent(n, n);
  std::vector<size_t> queue{zi};
  parent[zi] = zi;
  for (size_t qi = 0; qi < queue.size() && parent[xii] == n; ++qi) {
    const size_t cur = queue[qi];
    for (int pass = 0; pass < 2; ++pass) {
      for (size_t j = 0; j < n; ++j) {
        if (parent[j] == n && covered_by(cur, j) && preferred(cur, j) == (pass == 0)) {
          parent[j] = cur;
          queue.push_back(j);
        }
      }
    }
  }
  if (parent[xii] == n) {
    throw invariant_error("chain_general: no saturated chain found in the interval");
  }
  std::vector<size_t> hops{xii};
  while (hops.back() != zi) hops.push_back(parent[hops.back()]);
  std::reverse(hops.begin(), hops.end());

  MoveCache cache;
  std::vector<Word> words{minimal_word(zeta)};
  std::vector<ChainStep> steps;
  bool used_search = false;
  for (size_t t = 0; t + 1 < hops.size(); ++t) {
    const NewtonPolygon& cur = *interval[hops[t]];
    const NewtonPolygon& nxt = *interval[hops[t + 1]];
    const std::vector<Segment> common = common_segments(cur.segments(), nxt.segments());
    const NewtonPolygon zt = remove_segments(cur, common);
    const NewtonPolygon xt = remove_segments(nxt, common);

    BuildOut piece;
    if (xt.segments().size() == 2 && zt != xt && precedes(zt, xt) && saturated_cached(zt, xt)) {
      piece = build_saturated(zt, xt, cache);
      for (const Segment& s : common) {
        lift_by_cycle(piece.words, piece.steps, simple_word(s.m, s.n));
      }
      if (piece.words.front() != minimal_word(cur) || piece.words.back() != minimal_word(nxt)) {
        throw invariant_error("chain_general: lifted window chain misses the cover endpoints");
      }
    } else {
      // The differing window did not reduce to a saturated two-segment pair;
      // certify this cover step by direct graded search on the whole words.
      piece = search_build(cur, nxt, cache);
    }
    used_search = used_search || piece.used_search;
    words.insert(words.end(), piece.words.begin() + 1, piece.words.end());
    steps.insert(steps.end(), piece.steps.begin(), piece.steps.end());
  }

  BuildOut out;
  out.words = std::move(words);
  out.steps = std::move(steps);
  out.used_search = used_search;
  return finish_chain(zeta, xi, std::move(out));
}

CheckResult verify_chain(const Chain& ch) {
  if (ch.words.empty()) return {false, "chain has no words"};
  if (ch.zeta.height() != ch.xi.height() || ch.zeta.dim() != ch.xi.dim()) {
    return {false, "zeta and xi have different endpoints"};
  }
  if (!precedes(ch.zeta, ch.xi)) return {false, "zeta does not precede xi"};
  if (ch.words.front() != minimal_word(ch.zeta)) {
    return {false, "chain does not start at minimal_word(zeta)"};
  }
  if (ch.words.back() != minimal_word(ch.xi)) {
    return {false, "chain does not end at minimal_word(xi)"};
  }
  if (ch.steps.size() + 1 != ch.words.size()) {
    return {false, "step count does not match word count"};
  }
  for (size_t i = 0; i < ch.steps.size(); ++i) {
    const auto& moves = ch.steps[i].moves;
    const std::string at = "step " + std::to_string(i) + ": ";
    if (moves.empty()) return {false, at + "no moves"};
    if (moves.front().before != ch.words[i + 1]) {
      return {false, at + "first move does not start at the upper word"};
    }
    if (moves.back().after != ch.words[i]) {
      return {false, at + "last move does not end at the lower word"};
    }
    for (size_t k = 0; k < moves.size(); ++k) {
      if (k > 0 && moves[k].before != moves[k - 1].after) {
        return {false, at + "moves are not linked"};
      }
      const CheckResult wc = check_witness(moves[k]);
      if (!wc.ok) return {false, at + wc.reason};
      if (length_ell(moves[k].after) >= length_ell(moves[k].before)) {
        return {false, at + "move does not lower ell"};
      }
    }
  }
  if (ch.method == ChainMethod::Constructive && ch.words.size() > 1) {
    if (static_cast<long long>(ch.steps.size()) != c_value(ch.zeta, ch.xi)) {
      return {false, "constructive chain step count differs from c(zeta, xi)"};
    }
  }
  return {};
}

}  // namespace dm1
