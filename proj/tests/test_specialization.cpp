#include <doctest.h>

#include <string>
#include <vector>

#include "dm1/errors.hpp"
#include "dm1/newton.hpp"
#include "dm1/specialization.hpp"

using namespace dm1;

TEST_CASE("mixed two segment predicate") {
  CHECK(mixed_two_segment(parse_np("(3,5)+(3,2)")));
  CHECK(mixed_two_segment(parse_np("(0,1)+(1,0)")));
  CHECK(mixed_two_segment(parse_np("(0,1)+(2,1)")));
  CHECK_FALSE(mixed_two_segment(parse_np("2(1,1)")));      // slopes do not straddle 1/2
  CHECK_FALSE(mixed_two_segment(parse_np("(1,1)")));       // one segment
  CHECK_FALSE(mixed_two_segment(parse_np("(1,2)+(1,1)")));  // shallow side not below 1/2
}

TEST_CASE("six case classification") {
  CHECK(classify_case(parse_np("(0,1)+(1,0)")) == CaseTag::BaseH2);
  CHECK(classify_case(parse_np("(3,5)+(3,2)")) == CaseTag::I);
  CHECK(classify_case(parse_np("(1,2)+(2,1)")) == CaseTag::II);
  CHECK(classify_case(parse_np("(2,3)+(1,0)")) == CaseTag::III);
  CHECK(classify_case(parse_np("(2,3)+(4,3)")) == CaseTag::IV);
  CHECK(classify_case(parse_np("(0,1)+(2,1)")) == CaseTag::V);
  CHECK(classify_case(parse_np("(1,3)+(1,0)")) == CaseTag::VI);
  CHECK_THROWS_AS(classify_case(parse_np("(1,1)")), precondition_error);
  CHECK_THROWS_AS(classify_case(parse_np("2(1,1)")), precondition_error);
  CHECK(std::string(case_name(CaseTag::I)) == "I");
  CHECK(std::string(case_name(CaseTag::BaseH2)) == "BASE_H2");
}

TEST_CASE("rho from the Euclid condition") {
  // Case I, xi = (3,5)+(3,2): a*5 - b*3 = 1 with (a,b) = (2,3).
  CHECK(rho_segment(parse_np("(3,5)+(3,2)"), CaseTag::I) == Segment{2, 3});
  // Case IV, xi = (2,3)+(4,3): b*4 - a*3 = 1 with (a,b) = (1,1).
  CHECK(rho_segment(parse_np("(2,3)+(4,3)"), CaseTag::IV) == Segment{1, 1});
  // Case II always splits off (1,1).
  CHECK(rho_segment(parse_np("(1,2)+(2,1)"), CaseTag::II) == Segment{1, 1});
}

TEST_CASE("minus squared decomposition, case I") {
  const DecompositionResult dec = minus_square_decompose(parse_np("(3,5)+(3,2)"));
  CHECK(dec.tag == CaseTag::I);
  CHECK(dec.rho == Segment{2, 3});
  CHECK(dec.xi_prime == parse_np("(1,2)+(3,2)"));
  CHECK(dec.rho_word == Word("11000"));
  CHECK(dec.left_word == Word("11010100"));
  CHECK(dec.left_word == minus(minimal_word(dec.xi_prime)));
  CHECK(direct_sum(dec.left_word, dec.rho_word) ==
        minus(minus(minimal_word(parse_np("(3,5)+(3,2)")))));
}

TEST_CASE("minus squared decomposition, case IV") {
  const DecompositionResult dec = minus_square_decompose(parse_np("(2,3)+(4,3)"));
  CHECK(dec.tag == CaseTag::IV);
  CHECK(dec.rho == Segment{1, 1});
  CHECK(dec.xi_prime == parse_np("(2,3)+(3,2)"));
  CHECK(dec.rho_word == Word("10"));
  CHECK(dec.left_word == Word("1110100100"));
  CHECK(direct_sum(dec.left_word, dec.rho_word) ==
        minus(minus(minimal_word(parse_np("(2,3)+(4,3)")))));
}

TEST_CASE("terminal decompositions") {
  SUBCASE("base h = 2") {
    const BaseDecomposition dec = prop3_decompose(parse_np("(0,1)+(1,0)"));
    CHECK(dec.tag == CaseTag::BaseH2);
    CHECK(dec.segments == std::vector<Segment>{{1, 1}});
    CHECK(dec.word == Word("10"));
    CHECK(dec.word == minus(minimal_word(parse_np("(0,1)+(1,0)"))));
  }
  SUBCASE("case V") {
    const BaseDecomposition dec = prop3_decompose(parse_np("(0,1)+(2,1)"));
    CHECK(dec.tag == CaseTag::V);
    CHECK(dec.segments == std::vector<Segment>{{1, 1}, {1, 1}});
    CHECK(dec.word == Word("1100"));
    CHECK(dec.word == minus(minus(minimal_word(parse_np("(0,1)+(2,1)")))));
  }
  SUBCASE("case VI") {
    const BaseDecomposition dec = prop3_decompose(parse_np("(1,3)+(1,0)"));
    CHECK(dec.tag == CaseTag::VI);
    CHECK(dec.segments == std::vector<Segment>{{1, 2}, {1, 1}});
    CHECK(dec.word == Word("10100"));
    CHECK(dec.word == minus(minus(minimal_word(parse_np("(1,3)+(1,0)")))));
  }
}

TEST_CASE("chain for the base pair") {
  const Chain ch = chain_saturated_two_segment(parse_np("(1,1)"), parse_np("(0,1)+(1,0)"));
  CHECK(ch.method == ChainMethod::Constructive);
  CHECK(ch.words == std::vector<Word>{Word("10"), Word("01")});
  REQUIRE(ch.steps.size() == 1);
  CHECK(ch.steps[0].moves.size() == 1);
  CHECK(verify_chain(ch));
}

TEST_CASE("constructive chain for the worked five step example") {
  const NewtonPolygon zeta = parse_np("(2,3)+4(1,1)");
  const NewtonPolygon xi = parse_np("(3,5)+(3,2)");
  REQUIRE(is_saturated(zeta, xi));
  const Chain ch = chain_saturated_two_segment(zeta, xi);
  CHECK(ch.method == ChainMethod::Constructive);
  CHECK(ch.words == std::vector<Word>{Word("1101111000000"), Word("1110110010000"),
                                      Word("1111010000100"), Word("1111001000100"),
                                      Word("1110101000100"), Word("1110011000100")});
  CHECK(ch.steps.size() == 5);
  CHECK(c_value(zeta, xi) == 5);
  CHECK(verify_chain(ch));
  SUBCASE("each step descends words[i+1] to words[i]") {
    for (size_t i = 0; i < ch.steps.size(); ++i) {
      REQUIRE(!ch.steps[i].moves.empty());
      CHECK(ch.steps[i].moves.front().before == ch.words[i + 1]);
      CHECK(ch.steps[i].moves.back().after == ch.words[i]);
    }
  }
}

TEST_CASE("constructive chain through a terminal case") {
  const Chain ch = chain_saturated_two_segment(parse_np("2(1,1)"), parse_np("(1,2)+(1,0)"));
  CHECK(ch.method == ChainMethod::Constructive);
  CHECK(ch.words == std::vector<Word>{Word("1100"), Word("1010"), Word("1001")});
  CHECK(ch.steps.size() == 2);
  CHECK(verify_chain(ch));
}

TEST_CASE("search chain for a non mixed two segment class") {
  // (1,2)+(1,1) has both slopes >= 1/2, outside the constructive recursion.
  const NewtonPolygon xi = parse_np("(1,2)+(1,1)");
  const NewtonPolygon zeta = straight_line_polygon(5, 3);
  REQUIRE(is_saturated(zeta, xi));
  const Chain ch = chain_saturated_two_segment(zeta, xi);
  CHECK(ch.method == ChainMethod::Search);
  CHECK(ch.steps.size() == static_cast<size_t>(c_value(zeta, xi)));
  CHECK(verify_chain(ch));
}

TEST_CASE("chain preconditions") {
  CHECK_THROWS_AS(chain_saturated_two_segment(parse_np("(6,7)"), parse_np("(3,5)+(3,2)")),
                  precondition_error);  // not saturated
  CHECK_THROWS_AS(chain_saturated_two_segment(parse_np("2(1,1)"), parse_np("2(0,1)+2(1,0)")),
                  precondition_error);  // xi not two-segment
  CHECK_THROWS_AS(chain_general(parse_np("(0,1)+(1,0)"), parse_np("(1,1)")),
                  precondition_error);  // order reversed
  CHECK_THROWS_AS(chain_general(parse_np("(1,1)"), parse_np("(2,1)")),
                  precondition_error);  // different endpoints
}

TEST_CASE("general chain splits off common segments") {
  const Chain ch = chain_general(parse_np("(1,1)+(1,0)"), parse_np("(0,1)+2(1,0)"));
  CHECK(ch.method == ChainMethod::Constructive);
  CHECK(ch.words == std::vector<Word>{Word("101"), Word("011")});
  CHECK(ch.steps.size() == 1);
  CHECK(verify_chain(ch));
}

TEST_CASE("general chain from the line to the ordinary polygon") {
  const Chain ch = chain_general(straight_line_polygon(4, 2), ordinary_polygon(4, 2));
  CHECK(ch.steps.size() == 4);  // (h-d)*d
  CHECK(ch.words.front() == Word("1100"));
  CHECK(ch.words.back() == Word("0011"));
  CHECK(verify_chain(ch));
}

TEST_CASE("general chain across an unsaturated gap") {
  const Chain ch = chain_general(parse_np("(6,7)"), parse_np("(3,5)+(3,2)"));
  CHECK(ch.steps.size() == 9);
  CHECK(ch.words.front() == minimal_word(parse_np("(6,7)")));
  CHECK(ch.words.back() == Word("1110011000100"));
  CHECK(verify_chain(ch));
}

TEST_CASE("zero step chain") {
  const Chain ch = chain_general(parse_np("2(1,1)"), parse_np("2(1,1)"));
  CHECK(ch.words == std::vector<Word>{Word("1100")});
  CHECK(ch.steps.empty());
  CHECK(verify_chain(ch));
}

TEST_CASE("verify_chain rejects corrupted chains") {
  const Chain good = chain_saturated_two_segment(parse_np("(2,3)+4(1,1)"), parse_np("(3,5)+(3,2)"));
  REQUIRE(verify_chain(good));
  SUBCASE("flipped word") {
    Chain bad = good;
    bad.words[2] = minus(bad.words[2]);
    CHECK_FALSE(verify_chain(bad));
  }
  SUBCASE("tampered swap index") {
    Chain bad = good;
    bad.steps[0].moves[0].swap_index += 1;
    CHECK_FALSE(verify_chain(bad));
  }
  SUBCASE("dropped step") {
    Chain bad = good;
    bad.steps.pop_back();
    CHECK_FALSE(verify_chain(bad));
  }
  SUBCASE("reordered steps") {
    Chain bad = good;
    std::swap(bad.steps[0], bad.steps[1]);
    CHECK_FALSE(verify_chain(bad));
  }
  SUBCASE("wrong endpoint polygon") {
    Chain bad = good;
    bad.zeta = straight_line_polygon(13, 7);
    CHECK_FALSE(verify_chain(bad));
  }
  SUBCASE("empty") {
    CHECK_FALSE(verify_chain(Chain{}));
  }
}
