#include <doctest.h>

#include <string>
#include <vector>

#include "dm1/errors.hpp"
#include "dm1/moves.hpp"
#include "dm1/word.hpp"

using namespace dm1;

namespace {

std::vector<Word> all_words(int len) {
  std::vector<Word> out;
  for (int mask = 0; mask < (1 << len); ++mask) {
    std::string bits(static_cast<size_t>(len), '0');
    for (int i = 0; i < len; ++i)
      if (mask & (1 << i)) bits[static_cast<size_t>(i)] = '1';
    out.emplace_back(bits);
  }
  return out;
}

}  // namespace

TEST_CASE("whole word minus witness") {
  const MoveWitness mw = whole_word_minus_witness(Word("0101"));
  CHECK(mw.before == Word("0101"));
  CHECK(mw.after == Word("1001"));
  CHECK(mw.p_cycles.empty());
  CHECK(mw.q_before == Word("0101"));
  CHECK(mw.q_after == Word("1001"));
  CHECK(mw.swap_index == 0);
  CHECK(check_witness(mw));
  CHECK_THROWS_AS(whole_word_minus_witness(Word("1100")), precondition_error);
}

TEST_CASE("a single move may drop ell by more than one") {
  // Q = {0, 1} merges to "01"; the swap gives "10" and the re-merge with the
  // remaining cycle "10" lands on "1100": ell drops from 3 to 0 in one move.
  const auto moves = elementary_moves(Word("0101"));
  bool found = false;
  for (const auto& [to, mw] : moves) {
    CHECK(mw.before == Word("0101"));
    CHECK(mw.after == to);
    CHECK(check_witness(mw));
    CHECK(length_ell(to) < 3);
    if (to == Word("1100")) {
      found = true;
      CHECK(length_ell(to) == 0);
    }
  }
  CHECK(found);
}

TEST_CASE("moves preserve length and zero count and strictly lower ell") {
  for (int len = 1; len <= 6; ++len) {
    for (const Word& w : all_words(len)) {
      for (const auto& [to, mw] : elementary_moves(w)) {
        CHECK(to.size() == w.size());
        CHECK(to.zeros() == w.zeros());
        CHECK(length_ell(to) < length_ell(w));
        CHECK(check_witness(mw));
      }
    }
  }
}

TEST_CASE("check_witness rejects corrupted witnesses") {
  const auto moves = elementary_moves(Word("0101"));
  REQUIRE(!moves.empty());
  SUBCASE("tampered swap index") {
    MoveWitness mw = whole_word_minus_witness(Word("0101"));
    mw.swap_index = 1;  // "10" there, not "01"
    CHECK_FALSE(check_witness(mw));
  }
  SUBCASE("tampered result word") {
    MoveWitness mw = whole_word_minus_witness(Word("0101"));
    mw.after = Word("0110");
    CHECK_FALSE(check_witness(mw));
  }
  SUBCASE("tampered source word") {
    MoveWitness mw = whole_word_minus_witness(Word("0101"));
    mw.before = Word("0011");
    CHECK_FALSE(check_witness(mw));
  }
  SUBCASE("decomposable word passed off as one P-cycle") {
    MoveWitness mw;
    mw.p_cycles = {Word("1100")};  // two cycles, not one
    mw.q_before = Word("01");
    mw.q_after = Word("10");
    mw.swap_index = 0;
    mw.before = direct_sum(Word("1100"), Word("01"));
    mw.after = direct_sum(Word("1100"), Word("10"));
    CHECK_FALSE(check_witness(mw));
  }
}

TEST_CASE("leq oracle matches the move graph") {
  MoveCache cache;
  CHECK(leq_oracle(Word("1100"), Word("1100")));
  CHECK(leq_oracle(Word("1100"), Word("0101"), cache));
  CHECK(leq_oracle(Word("1100"), Word("0011"), cache));
  CHECK_FALSE(leq_oracle(Word("0011"), Word("1100"), cache));
  CHECK_FALSE(leq_oracle(Word("0101"), Word("1010"), cache));
  CHECK_THROWS_AS(leq_oracle(Word("10"), Word("1100"), cache), precondition_error);
}

TEST_CASE("move_path finds a shortest descent") {
  MoveCache cache;
  const auto path = move_path(Word("1100"), Word("0101"), cache);
  REQUIRE(path.has_value());
  CHECK(path->size() == 1);  // the big-drop move
  CHECK(path->front().before == Word("0101"));
  CHECK(path->front().after == Word("1100"));
  CHECK(!move_path(Word("0011"), Word("1100"), cache).has_value());
  const auto trivial = move_path(Word("0101"), Word("0101"), cache);
  REQUIRE(trivial.has_value());
  CHECK(trivial->empty());
}

TEST_CASE("graded_move_path descends by exactly one ell per move") {
  MoveCache cache;
  const auto path = graded_move_path(Word("1100"), Word("0101"), cache);
  REQUIRE(path.has_value());
  REQUIRE(path->size() == 3);
  CHECK(path->front().before == Word("0101"));
  CHECK(path->back().after == Word("1100"));
  for (size_t i = 0; i < path->size(); ++i) {
    const MoveWitness& mw = (*path)[i];
    CHECK(check_witness(mw));
    CHECK(length_ell(mw.before) - length_ell(mw.after) == 1);
    if (i + 1 < path->size()) CHECK(mw.after == (*path)[i + 1].before);
  }
}
