#pragma once

// Elementary specialization moves on words.  A move picks a subset Q of the
// cycles of w, swaps one adjacent "01" of the merged Q-word to "10", and
// re-merges with the untouched cycles P.  Each move strictly lowers ell(w)
// (usually by one, but the re-merge can cancel further cross-inversions); the
// reflexive-transitive closure is the specialization order on words.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dm1/word.hpp"

namespace dm1 {

struct MoveWitness {
  Word before;
  Word after;
  std::vector<Word> p_cycles;  // words of the untouched cycles
  Word q_before;               // merged word of the chosen cycles
  Word q_after;                // q_before with one "01" swapped to "10"
  int swap_index = 0;          // 0-based index of the swapped '0' in q_before
  friend bool operator==(const MoveWitness&, const MoveWitness&) = default;
};

// The move that swaps the leftmost "01" of w itself (Q = all cycles).
MoveWitness whole_word_minus_witness(const Word& w);

// All single moves out of w, deduplicated by resulting word (first witness in
// a fixed enumeration order wins) and sorted by resulting word.
std::vector<std::pair<Word, MoveWitness>> elementary_moves(const Word& w);

struct CheckResult {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

// Re-derives everything the witness claims: the swap shape, indecomposability
// of the P-cycles, and both merges.
CheckResult check_witness(const MoveWitness& mw);

// Memoized successor sets, shared across searches over one word length.
class MoveCache {
 public:
  const std::vector<Word>& successors(const Word& w);

 private:
  std::map<std::string, std::vector<Word>> cache_;
};

// True iff hi specializes to lo through elementary moves (reflexive).
bool leq_oracle(const Word& lo, const Word& hi);
bool leq_oracle(const Word& lo, const Word& hi, MoveCache& cache);

// Shortest move sequence from hi down to lo; witnesses ordered from the move
// leaving hi to the move arriving at lo.  nullopt if unreachable.
std::optional<std::vector<MoveWitness>> move_path(const Word& lo, const Word& hi,
                                                  MoveCache& cache);

// Same, but only along moves lowering ell by exactly one.  A single move may
// drop ell by more (the re-merge can cancel cross-inversions too), so
// restricting to graded edges is what makes every found path have exactly
// ell(hi) - ell(lo) moves.
std::optional<std::vector<MoveWitness>> graded_move_path(const Word& lo, const Word& hi,
                                                         MoveCache& cache);

}  // namespace dm1
