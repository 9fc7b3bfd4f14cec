#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "dm1/errors.hpp"
#include "dm1/word.hpp"

using namespace dm1;

TEST_CASE("word validation") {
  CHECK(Word("10100").str() == "10100");
  CHECK(Word("").empty());
  CHECK(Word("11000").ones() == 2);
  CHECK(Word("11000").zeros() == 3);
  CHECK_THROWS_AS(Word("10201"), parse_error);
  CHECK_THROWS_AS(Word("1 0"), parse_error);
  CHECK(Word::parse("01") == Word("01"));
}

TEST_CASE("fv structure of 11000") {
  // F e_3 = e_1, F e_4 = e_2, F e_5 = e_3; V e_4 = e_1, V e_5 = e_2.
  const FVStructure s = fv_structure(Word("11000"));
  CHECK(s.f_image == std::vector<int>{kNone, kNone, 0, 1, 2});
  CHECK(s.v_image == std::vector<int>{kNone, kNone, kNone, 0, 1});
  CHECK(check_dm1_axioms(s));
}

TEST_CASE("axioms hold for every small word") {
  for (int len = 1; len <= 8; ++len) {
    for (int mask = 0; mask < (1 << len); ++mask) {
      std::string bits(static_cast<size_t>(len), '0');
      for (int i = 0; i < len; ++i)
        if (mask & (1 << i)) bits[static_cast<size_t>(i)] = '1';
      CHECK(check_dm1_axioms(fv_structure(Word(bits))));
    }
  }
}

TEST_CASE("fv permutation of 11000") {
  // One cycle (1 4 2 5 3); arrows out of ones are V^{-1}, out of zeros F.
  const FVPermutation p = fv_permutation(Word("11000"));
  CHECK(p.succ == std::vector<int>{3, 4, 0, 1, 2});
  CHECK(p.into[0] == ArrowLabel::F);
  CHECK(p.into[3] == ArrowLabel::Vinv);
  CHECK(p.into[4] == ArrowLabel::Vinv);
  const std::vector<int> pred = predecessors(p);
  for (int i = 0; i < 5; ++i) CHECK(p.succ[static_cast<size_t>(pred[static_cast<size_t>(i)])] == i);
}

TEST_CASE("cycle decomposition") {
  SUBCASE("single cycle") {
    const auto cycles = cycle_decomposition(Word("11000"));
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].word == Word("11000"));
    CHECK(cycles[0].positions == std::vector<int>{0, 1, 2, 3, 4});
  }
  SUBCASE("two cycles, ordered by smallest position") {
    const auto cycles = cycle_decomposition(Word("1111001000100"));
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0].word == Word("11000"));
    CHECK(cycles[1].word == Word("11010100"));
  }
  SUBCASE("three cycles") {
    const auto cycles = cycle_decomposition(Word("0101"));
    REQUIRE(cycles.size() == 3);
    CHECK(cycles[0].word == Word("0"));
    CHECK(cycles[1].word == Word("10"));
    CHECK(cycles[1].positions == std::vector<int>{1, 2});
    CHECK(cycles[2].word == Word("1"));
  }
  SUBCASE("word is recovered on the positions") {
    const Word w("110111001000");
    for (const auto& c : cycle_decomposition(w)) CHECK(subsequence(w, c.positions) == c.word);
  }
}

TEST_CASE("periodic binary comparison") {
  // 0.(0) = 0 < 0.(01) = 1/3 < 0.(10) = 2/3 < 0.(1) = 1.
  CHECK(PeriodicBinary("0") < PeriodicBinary("01"));
  CHECK(PeriodicBinary("01") < PeriodicBinary("10"));
  CHECK(PeriodicBinary("10") < PeriodicBinary("1"));
  CHECK(PeriodicBinary("01") == PeriodicBinary("0101"));
  CHECK(PeriodicBinary("1") == PeriodicBinary("111"));
  CHECK(compare_b(PeriodicBinary("10"), PeriodicBinary("100")) == std::strong_ordering::greater);
  CHECK_THROWS_AS(PeriodicBinary(""), precondition_error);
}

TEST_CASE("b expansions have the cycle length as period") {
  const Word w("10100");
  const auto cycles = cycle_decomposition(w);
  const auto bs = b_expansions(w);
  REQUIRE(bs.size() == 5);
  for (const auto& c : cycles)
    for (int pos : c.positions)
      CHECK(bs[static_cast<size_t>(pos)].period().size() == c.positions.size());
  for (int pos = 0; pos < 5; ++pos) CHECK(b_expansion(w, pos) == bs[static_cast<size_t>(pos)]);
}

TEST_CASE("direct sum") {
  SUBCASE("golden merges") {
    CHECK(direct_sum(Word("11100000"), Word("11100")) == Word("1110011000100"));
    CHECK(direct_sum(Word("100"), Word("10")) == Word("10100"));
    CHECK(direct_sum(Word("10"), Word("10")) == Word("1100"));
    CHECK(direct_sum(Word("0"), Word("1")) == Word("01"));
  }
  SUBCASE("identity and commutativity") {
    CHECK(direct_sum(Word("1101"), Word("")) == Word("1101"));
    CHECK(direct_sum(Word(""), Word("1101")) == Word("1101"));
    CHECK(direct_sum(Word("11100000"), Word("11100")) ==
          direct_sum(Word("11100"), Word("11100000")));
  }
  SUBCASE("list fold") {
    CHECK(direct_sum(std::vector<Word>{}) == Word(""));
    CHECK(direct_sum(std::vector<Word>{Word("0"), Word("10"), Word("1")}) == Word("0101"));
  }
  SUBCASE("round trip through cycles") {
    for (const char* text : {"0101", "110111001000", "1110011000100", "1011"}) {
      const Word w(text);
      std::vector<Word> parts;
      for (const auto& c : cycle_decomposition(w)) parts.push_back(c.word);
      CHECK(direct_sum(parts) == w);
    }
  }
}

TEST_CASE("simple words") {
  CHECK(simple_word(1, 1) == Word("10"));
  CHECK(simple_word(2, 3) == Word("11000"));
  CHECK(simple_word(3, 5) == Word("11100000"));
  CHECK(simple_word(0, 1) == Word("0"));
  CHECK(simple_word(1, 0) == Word("1"));
  CHECK_THROWS_AS(simple_word(2, 2), precondition_error);
  CHECK_THROWS_AS(simple_word(0, 0), precondition_error);
  CHECK_THROWS_AS(simple_word(-1, 2), precondition_error);
}

TEST_CASE("inversion count ell") {
  CHECK(length_ell(Word("0101")) == 3);
  CHECK(length_ell(Word("1100")) == 0);
  CHECK(length_ell(Word("01")) == 1);
  CHECK(length_ell(Word("1110011000100")) == 9);
  CHECK(length_ell(Word("")) == 0);
}

TEST_CASE("minus swaps the leftmost 01") {
  CHECK(leftmost_zero_one(Word("0101")) == 0);
  CHECK(leftmost_zero_one(Word("1100")) == kNone);
  CHECK(minus(Word("01")) == Word("10"));
  CHECK(minus(Word("10001")) == Word("10010"));
  CHECK(minus(Word("10010")) == Word("10100"));
  CHECK(minus(minus(Word("1110011000100"))) == Word("1111001000100"));
  CHECK_THROWS_AS(minus(Word("1100")), precondition_error);
  CHECK_THROWS_AS(minus(Word("1")), precondition_error);
}

TEST_CASE("dual reverses and flips") {
  CHECK(dual(Word("100")) == Word("110"));
  CHECK(dual(Word("1100")) == Word("1100"));
  for (const char* text : {"0101", "110111001000", "1"}) {
    CHECK(dual(dual(Word(text))) == Word(text));
  }
  // dual(A_{m,n}) = A_{n,m}.
  CHECK(dual(simple_word(3, 5)) == simple_word(5, 3));
  CHECK(dual(simple_word(1, 0)) == simple_word(0, 1));
}

TEST_CASE("subsequence") {
  CHECK(subsequence(Word("10110"), {0, 2, 4}) == Word("110"));
  CHECK(subsequence(Word("10110"), {}) == Word(""));
}
