#pragma once

// 0/1 words of length h classify the F-V modules studied here: positions
// 1..h (0-based internally) carry bits delta_i, and the word induces maps
//
//   F e_i = e_{#{t <= i : delta_t = 0}}   if delta_i = 0,   F e_i = 0 otherwise,
//   V e_j = e_{i_{j-v}}                   if j > v,          V e_j = 0 otherwise,
//
// where v is the number of zeros and i_1 < ... < i_u are the positions of the
// ones.  Composing F with V^{-1} where defined yields a permutation of the
// positions; its cycles are the indecomposable direct summands, and the
// periodic binary expansion attached to each position drives the merge that
// realizes the direct sum on words.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dm1/errors.hpp"

namespace dm1 {

class Word {
 public:
  Word() = default;
  explicit Word(std::string bits);

  // Identical validation, named for use at the CLI/JSON boundary.
  static Word parse(std::string_view text);

  int size() const { return static_cast<int>(bits_.size()); }
  bool empty() const { return bits_.empty(); }
  bool one_at(int i) const { return bits_[static_cast<size_t>(i)] == '1'; }
  int ones() const;
  int zeros() const { return size() - ones(); }
  const std::string& str() const { return bits_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::string bits_;  // characters '0'/'1' only
};

constexpr int kNone = -1;

// f_image[i] / v_image[j] give the 0-based index of the image basis vector,
// or kNone where the map vanishes.
struct FVStructure {
  std::vector<int> f_image;
  std::vector<int> v_image;
};

FVStructure fv_structure(const Word& w);

// Ker F = Im V and Im F = Ker V, as index sets.
bool check_dm1_axioms(const FVStructure& s);

enum class ArrowLabel : uint8_t { F, Vinv };

// succ[i] is the target of the arrow leaving position i (F if delta_i = 0,
// V^{-1} if delta_i = 1); into[j] labels the unique arrow entering j.
struct FVPermutation {
  std::vector<int> succ;
  std::vector<ArrowLabel> into;
};

FVPermutation fv_permutation(const Word& w);
std::vector<int> predecessors(const FVPermutation& p);

// One cycle of the (F, V^{-1}) permutation.  `word` is the subsequence of the
// host word on `positions` (ascending); it equals the standalone word of the
// direct summand carried by the cycle.
struct CyclicWord {
  Word word;
  std::vector<int> positions;
  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
};

// Cycles ordered by smallest member position.
std::vector<CyclicWord> cycle_decomposition(const Word& w);

// Purely periodic binary expansion 0.(b_1 b_2 ... b_L) repeating.
class PeriodicBinary {
 public:
  explicit PeriodicBinary(std::string period);
  const std::string& period() const { return period_; }

  // Two purely periodic expansions with period lengths p, q agree iff their
  // first p+q digits agree, so the comparison below is exact.
  friend std::strong_ordering operator<=>(const PeriodicBinary& x, const PeriodicBinary& y);
  friend bool operator==(const PeriodicBinary& x, const PeriodicBinary& y) {
    return (x <=> y) == std::strong_ordering::equal;
  }

 private:
  std::string period_;
};

std::strong_ordering compare_b(const PeriodicBinary& x, const PeriodicBinary& y);

// b-expansion of position pos (0-based): digit l is the bit at the l-th
// predecessor of pos under the (F, V^{-1}) permutation; the period length is
// the cycle length of pos.
PeriodicBinary b_expansion(const Word& w, int pos);
std::vector<PeriodicBinary> b_expansions(const Word& w);

// Merge of the two words by ascending b-expansion, stable (ties take the left
// operand first).  Realizes the direct sum of the underlying modules.
Word direct_sum(const Word& a, const Word& b);
// Left fold; empty list gives the empty word.
Word direct_sum(const std::vector<Word>& parts);

// 1^m 0^n for coprime m, n >= 0 (not both zero): the word of the
// indecomposable module with m ones and n zeros.
Word simple_word(long long m, long long n);

// Number of inversions ell(w) = #{(i, j) : i < j, delta_i = 0, delta_j = 1}.
int length_ell(const Word& w);

// Index of the leftmost "01" factor, or kNone.
int leftmost_zero_one(const Word& w);

// Swap the leftmost "01" to "10"; precondition: such a factor exists.
Word minus(const Word& w);

// Reverse and flip all bits; an involution exchanging the roles of F and V.
Word dual(const Word& w);

// Subsequence of w on the given ascending 0-based positions.
Word subsequence(const Word& w, const std::vector<int>& positions);

}  // namespace dm1
