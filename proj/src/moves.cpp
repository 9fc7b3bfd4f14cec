#include "dm1/moves.hpp"

#include <algorithm>
#include <deque>

namespace dm1 {

MoveWitness whole_word_minus_witness(const Word& w) {
  const int s = leftmost_zero_one(w);
  if (s == kNone) throw precondition_error("whole_word_minus_witness: no \"01\" factor");
  const Word after = minus(w);
  return MoveWitness{w, after, {}, w, after, s};
}

namespace {

// Cycles grouped by their word; identical cycle words are interchangeable, so
// move enumeration ranges over multiplicity vectors instead of raw subsets.
struct CycleGroup {
  Word word;
  std::vector<std::vector<int>> copies;  // position lists of the copies
};

std::vector<CycleGroup> grouped_cycles(const Word& w) {
  std::map<std::string, CycleGroup> by_word;
  for (CyclicWord& c : cycle_decomposition(w)) {
    CycleGroup& g = by_word[c.word.str()];
    g.word = c.word;
    g.copies.push_back(std::move(c.positions));
  }
  std::vector<CycleGroup> out;
  out.reserve(by_word.size());
  for (auto& [_, g] : by_word) out.push_back(std::move(g));
  return out;
}

}  // namespace

std::vector<std::pair<Word, MoveWitness>> elementary_moves(const Word& w) {
  std::map<std::string, MoveWitness> found;
  const std::vector<CycleGroup> groups = grouped_cycles(w);
  const size_t ng = groups.size();
  if (ng == 0) return {};

  // Odometer over how many copies of each group go into Q.
  std::vector<size_t> take(ng, 0);
  while (true) {
    size_t g = 0;
    while (g < ng && take[g] == groups[g].copies.size()) take[g++] = 0;
    if (g == ng) break;
    ++take[g];

    std::vector<int> q_positions;
    std::vector<Word> p_cycles;
    for (size_t gi = 0; gi < ng; ++gi) {
      for (size_t c = 0; c < groups[gi].copies.size(); ++c) {
        if (c < take[gi]) {
          q_positions.insert(q_positions.end(), groups[gi].copies[c].begin(),
                             groups[gi].copies[c].end());
        } else {
          p_cycles.push_back(groups[gi].word);
        }
      }
    }
    std::sort(q_positions.begin(), q_positions.end());
    const Word q_word = subsequence(w, q_positions);

    std::vector<int> p_positions;
    {
      std::vector<char> in_q(static_cast<size_t>(w.size()), 0);
      for (int p : q_positions) in_q[static_cast<size_t>(p)] = 1;
      for (int i = 0; i < w.size(); ++i) {
        if (!in_q[static_cast<size_t>(i)]) p_positions.push_back(i);
      }
    }
    const Word p_word = subsequence(w, p_positions);

    for (int s = 0; s + 1 < q_word.size(); ++s) {
      if (q_word.one_at(s) || !q_word.one_at(s + 1)) continue;
      std::string swapped = q_word.str();
      swapped[static_cast<size_t>(s)] = '1';
      swapped[static_cast<size_t>(s) + 1] = '0';
      const Word q_after(std::move(swapped));
      Word result = direct_sum(p_word, q_after);
      MoveWitness mw{w, result, p_cycles, q_word, q_after, s};
      found.try_emplace(result.str(), std::move(mw));
    }
  }

  std::vector<std::pair<Word, MoveWitness>> out;
  out.reserve(found.size());
  for (auto& [word, mw] : found) out.emplace_back(Word(word), std::move(mw));
  return out;
}

CheckResult check_witness(const MoveWitness& mw) {
  const std::string& qb = mw.q_before.str();
  const std::string& qa = mw.q_after.str();
  if (qb.size() != qa.size()) return {false, "q_before and q_after differ in length"};
  const int s = mw.swap_index;
  if (s < 0 || s + 1 >= mw.q_before.size()) return {false, "swap_index out of range"};
  if (qb[static_cast<size_t>(s)] != '0' || qb[static_cast<size_t>(s) + 1] != '1') {
    return {false, "q_before has no \"01\" at swap_index"};
  }
  if (qa[static_cast<size_t>(s)] != '1' || qa[static_cast<size_t>(s) + 1] != '0') {
    return {false, "q_after does not swap \"01\" to \"10\" at swap_index"};
  }
  for (size_t t = 0; t < qb.size(); ++t) {
    if (t != static_cast<size_t>(s) && t != static_cast<size_t>(s) + 1 && qb[t] != qa[t]) {
      return {false, "q_before and q_after differ away from swap_index"};
    }
  }
  for (const Word& p : mw.p_cycles) {
    if (p.empty()) return {false, "empty word listed among p_cycles"};
    if (cycle_decomposition(p).size() != 1) {
      return {false, "p_cycles entry \"" + p.str() + "\" is not a single cycle"};
    }
  }
  Word merged_before = direct_sum(mw.p_cycles);
  merged_before = direct_sum(merged_before, mw.q_before);
  if (merged_before != mw.before) {
    return {false, "p_cycles + q_before do not merge to before"};
  }
  Word merged_after = direct_sum(mw.p_cycles);
  merged_after = direct_sum(merged_after, mw.q_after);
  if (merged_after != mw.after) {
    return {false, "p_cycles + q_after do not merge to after"};
  }
  return {};
}

const std::vector<Word>& MoveCache::successors(const Word& w) {
  auto it = cache_.find(w.str());
  if (it == cache_.end()) {
    std::vector<Word> next;
    for (auto& [word, _] : elementary_moves(w)) next.push_back(word);
    it = cache_.emplace(w.str(), std::move(next)).first;
  }
  return it->second;
}

namespace {

// BFS downward from hi; returns the predecessor map if lo was reached.
// Every move lowers ell by at least one, so depth is bounded by the ell gap.
// graded restricts the edge set to moves lowering ell by exactly one.
std::optional<std::map<std::string, std::string>> bfs_down(const Word& lo, const Word& hi,
                                                           MoveCache& cache, bool graded) {
  if (lo.size() != hi.size()) {
    throw precondition_error("specialization search: words must have equal length");
  }
  if (lo == hi) return std::map<std::string, std::string>{};
  const int ell_lo = length_ell(lo);
  if (length_ell(hi) <= ell_lo) return std::nullopt;
  std::map<std::string, std::string> parent;
  std::deque<Word> queue{hi};
  parent[hi.str()] = "";
  while (!queue.empty()) {
    const Word cur = std::move(queue.front());
    queue.pop_front();
    const int ell_cur = length_ell(cur);
    for (const Word& next : cache.successors(cur)) {
      const int ell_next = length_ell(next);
      if (ell_next < ell_lo) continue;
      if (graded && ell_next != ell_cur - 1) continue;
      if (!parent.emplace(next.str(), cur.str()).second) continue;
      if (next == lo) return parent;
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

std::optional<std::vector<MoveWitness>> path_from_parents(
    const std::optional<std::map<std::string, std::string>>& parent, const Word& lo,
    const Word& hi) {
  if (!parent) return std::nullopt;
  std::vector<Word> words{lo};  // lo up to hi
  while (words.back() != hi) {
    words.push_back(Word(parent->at(words.back().str())));
  }
  std::vector<MoveWitness> path;
  for (size_t k = words.size(); k-- > 1;) {
    const Word& from = words[k];
    const Word& to = words[k - 1];
    bool matched = false;
    for (auto& [word, mw] : elementary_moves(from)) {
      if (word == to) {
        path.push_back(mw);
        matched = true;
        break;
      }
    }
    if (!matched) throw invariant_error("move_path: recorded edge vanished on replay");
  }
  return path;
}

}  // namespace

bool leq_oracle(const Word& lo, const Word& hi, MoveCache& cache) {
  return bfs_down(lo, hi, cache, /*graded=*/false).has_value();
}

bool leq_oracle(const Word& lo, const Word& hi) {
  MoveCache cache;
  return leq_oracle(lo, hi, cache);
}

std::optional<std::vector<MoveWitness>> move_path(const Word& lo, const Word& hi,
                                                  MoveCache& cache) {
  return path_from_parents(bfs_down(lo, hi, cache, /*graded=*/false), lo, hi);
}

std::optional<std::vector<MoveWitness>> graded_move_path(const Word& lo, const Word& hi,
                                                         MoveCache& cache) {
  return path_from_parents(bfs_down(lo, hi, cache, /*graded=*/true), lo, hi);
}

}  // namespace dm1
