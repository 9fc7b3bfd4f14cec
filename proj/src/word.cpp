#include "dm1/word.hpp"

#include <algorithm>
#include <numeric>

namespace dm1 {

namespace {

void validate_bits(std::string_view bits) {
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw parse_error("word must consist of characters '0' and '1', got \"" +
                        std::string(bits) + "\"");
    }
  }
}

}  // namespace

Word::Word(std::string bits) : bits_(std::move(bits)) { validate_bits(bits_); }

Word Word::parse(std::string_view text) { return Word(std::string(text)); }

int Word::ones() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), '1'));
}

FVStructure fv_structure(const Word& w) {
  const int h = w.size();
  FVStructure s{std::vector<int>(h, kNone), std::vector<int>(h, kNone)};
  std::vector<int> one_positions;
  int zeros_seen = 0;
  for (int i = 0; i < h; ++i) {
    if (w.one_at(i)) {
      one_positions.push_back(i);
    } else {
      ++zeros_seen;
      s.f_image[i] = zeros_seen - 1;
    }
  }
  const int v = zeros_seen;
  for (int j = v; j < h; ++j) s.v_image[j] = one_positions[j - v];
  return s;
}

bool check_dm1_axioms(const FVStructure& s) {
  const size_t h = s.f_image.size();
  if (s.v_image.size() != h) return false;
  std::vector<char> ker_f(h, 0), im_f(h, 0), ker_v(h, 0), im_v(h, 0);
  for (size_t i = 0; i < h; ++i) {
    const int fi = s.f_image[i];
    if (fi == kNone) {
      ker_f[i] = 1;
    } else {
      if (fi < 0 || static_cast<size_t>(fi) >= h) return false;
      im_f[static_cast<size_t>(fi)] = 1;
    }
    const int vi = s.v_image[i];
    if (vi == kNone) {
      ker_v[i] = 1;
    } else {
      if (vi < 0 || static_cast<size_t>(vi) >= h) return false;
      im_v[static_cast<size_t>(vi)] = 1;
    }
  }
  return ker_f == im_v && im_f == ker_v;
}

FVPermutation fv_permutation(const Word& w) {
  const FVStructure s = fv_structure(w);
  const int h = w.size();
  FVPermutation p{std::vector<int>(h, kNone), std::vector<ArrowLabel>(h, ArrowLabel::F)};
  // v_image[j] = i means the V^{-1} arrow leaves i and enters j.
  std::vector<int> vinv(h, kNone);
  for (int j = 0; j < h; ++j) {
    if (s.v_image[j] != kNone) {
      vinv[s.v_image[j]] = j;
      p.into[j] = ArrowLabel::Vinv;
    }
  }
  for (int i = 0; i < h; ++i) {
    p.succ[i] = w.one_at(i) ? vinv[i] : s.f_image[i];
    if (p.succ[i] == kNone) throw invariant_error("fv_permutation: succ not total");
  }
  return p;
}

std::vector<int> predecessors(const FVPermutation& p) {
  std::vector<int> pred(p.succ.size(), kNone);
  for (size_t i = 0; i < p.succ.size(); ++i) pred[static_cast<size_t>(p.succ[i])] = static_cast<int>(i);
  return pred;
}

std::vector<CyclicWord> cycle_decomposition(const Word& w) {
  const int h = w.size();
  std::vector<CyclicWord> cycles;
  if (h == 0) return cycles;
  const FVPermutation p = fv_permutation(w);
  std::vector<char> seen(h, 0);
  for (int start = 0; start < h; ++start) {
    if (seen[start]) continue;
    std::vector<int> positions;
    int cur = start;
    do {
      seen[cur] = 1;
      positions.push_back(cur);
      cur = p.succ[cur];
    } while (cur != start);
    std::sort(positions.begin(), positions.end());
    cycles.push_back(CyclicWord{subsequence(w, positions), positions});
  }
  return cycles;
}

PeriodicBinary::PeriodicBinary(std::string period) : period_(std::move(period)) {
  if (period_.empty()) throw precondition_error("periodic expansion needs a nonempty period");
  validate_bits(period_);
}

std::strong_ordering operator<=>(const PeriodicBinary& x, const PeriodicBinary& y) {
  const size_t lx = x.period_.size(), ly = y.period_.size();
  for (size_t t = 0; t < lx + ly; ++t) {
    const char bx = x.period_[t % lx], by = y.period_[t % ly];
    if (bx != by) return bx <=> by;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_b(const PeriodicBinary& x, const PeriodicBinary& y) {
  return x <=> y;
}

namespace {

PeriodicBinary b_expansion_from_pred(const Word& w, const std::vector<int>& pred, int pos) {
  std::string digits;
  int cur = pos;
  do {
    cur = pred[static_cast<size_t>(cur)];
    digits.push_back(w.one_at(cur) ? '1' : '0');
  } while (cur != pos);
  return PeriodicBinary(std::move(digits));
}

}  // namespace

PeriodicBinary b_expansion(const Word& w, int pos) {
  if (pos < 0 || pos >= w.size()) {
    throw precondition_error("b_expansion: position out of range");
  }
  return b_expansion_from_pred(w, predecessors(fv_permutation(w)), pos);
}

std::vector<PeriodicBinary> b_expansions(const Word& w) {
  std::vector<PeriodicBinary> out;
  if (w.empty()) return out;
  const std::vector<int> pred = predecessors(fv_permutation(w));
  out.reserve(static_cast<size_t>(w.size()));
  for (int i = 0; i < w.size(); ++i) out.push_back(b_expansion_from_pred(w, pred, i));
  return out;
}

Word direct_sum(const Word& a, const Word& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const std::vector<PeriodicBinary> ba = b_expansions(a), bb = b_expansions(b);
  std::string out;
  out.reserve(static_cast<size_t>(a.size() + b.size()));
  int i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if ((ba[static_cast<size_t>(i)] <=> bb[static_cast<size_t>(j)]) !=
        std::strong_ordering::greater) {
      out.push_back(a.str()[static_cast<size_t>(i)]);
      ++i;
    } else {
      out.push_back(b.str()[static_cast<size_t>(j)]);
      ++j;
    }
  }
  out.append(a.str(), static_cast<size_t>(i), std::string::npos);
  out.append(b.str(), static_cast<size_t>(j), std::string::npos);
  return Word(std::move(out));
}

Word direct_sum(const std::vector<Word>& parts) {
  Word acc;
  for (const Word& p : parts) acc = direct_sum(acc, p);
  return acc;
}

Word simple_word(long long m, long long n) {
  if (m < 0 || n < 0 || std::gcd(m, n) != 1) {
    throw precondition_error("simple_word: need coprime m, n >= 0, not both zero");
  }
  std::string bits;
  bits.append(static_cast<size_t>(m), '1');
  bits.append(static_cast<size_t>(n), '0');
  return Word(std::move(bits));
}

int length_ell(const Word& w) {
  int zeros_seen = 0, ell = 0;
  for (int i = 0; i < w.size(); ++i) {
    if (w.one_at(i)) {
      ell += zeros_seen;
    } else {
      ++zeros_seen;
    }
  }
  return ell;
}

int leftmost_zero_one(const Word& w) {
  for (int i = 0; i + 1 < w.size(); ++i) {
    if (!w.one_at(i) && w.one_at(i + 1)) return i;
  }
  return kNone;
}

Word minus(const Word& w) {
  const int i = leftmost_zero_one(w);
  if (i == kNone) throw precondition_error("minus: word has no \"01\" factor");
  std::string bits = w.str();
  bits[static_cast<size_t>(i)] = '1';
  bits[static_cast<size_t>(i) + 1] = '0';
  return Word(std::move(bits));
}

Word dual(const Word& w) {
  std::string bits(w.str().rbegin(), w.str().rend());
  for (char& c : bits) c = (c == '0') ? '1' : '0';
  return Word(std::move(bits));
}

Word subsequence(const Word& w, const std::vector<int>& positions) {
  std::string bits;
  bits.reserve(positions.size());
  for (int p : positions) bits.push_back(w.str()[static_cast<size_t>(p)]);
  return Word(std::move(bits));
}

}  // namespace dm1
