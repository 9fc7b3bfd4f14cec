#include "dm1/json_io.hpp"

namespace dm1 {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw parse_error("json: " + what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& f = field(j, key);
  if (!f.is_string()) bad(std::string("field \"") + key + "\" must be a string");
  return f.get<std::string>();
}

Word word_field(const Json& f, const char* what) {
  if (!f.is_string()) bad(std::string(what) + " must be a 0/1 string");
  return Word::parse(f.get<std::string>());
}

}  // namespace

Json np_to_json(const NewtonPolygon& np) {
  Json j = Json::array();
  for (const Segment& s : np.segments()) j.push_back(Json::array({s.m, s.n}));
  return j;
}

NewtonPolygon np_from_json(const Json& j) {
  if (!j.is_array()) bad("polygon must be an array of [m,n] pairs");
  std::vector<Segment> segs;
  for (const Json& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      bad("polygon entry must be an integer pair [m,n]");
    }
    segs.push_back(Segment{e[0].get<long long>(), e[1].get<long long>()});
  }
  return NewtonPolygon::normalize(std::move(segs));
}

Json witness_to_json(const MoveWitness& mw) {
  Json p = Json::array();
  for (const Word& w : mw.p_cycles) p.push_back(w.str());
  return Json{{"after", mw.after.str()},
              {"before", mw.before.str()},
              {"p_cycles", std::move(p)},
              {"q_after", mw.q_after.str()},
              {"q_before", mw.q_before.str()},
              {"swap_index", mw.swap_index + 1}};
}

MoveWitness witness_from_json(const Json& j) {
  MoveWitness mw;
  mw.before = Word::parse(string_field(j, "before"));
  mw.after = Word::parse(string_field(j, "after"));
  const Json& p = field(j, "p_cycles");
  if (!p.is_array()) bad("p_cycles must be an array");
  for (const Json& e : p) mw.p_cycles.push_back(word_field(e, "p_cycles entry"));
  mw.q_before = Word::parse(string_field(j, "q_before"));
  mw.q_after = Word::parse(string_field(j, "q_after"));
  const Json& s = field(j, "swap_index");
  if (!s.is_number_integer() || s.get<long long>() < 1) {
    bad("swap_index must be a positive integer (1-based)");
  }
  mw.swap_index = static_cast<int>(s.get<long long>()) - 1;
  return mw;
}

Json chain_to_json(const Chain& ch) {
  Json words = Json::array();
  for (const Word& w : ch.words) words.push_back(w.str());
  Json steps = Json::array();
  for (const ChainStep& st : ch.steps) {
    Json moves = Json::array();
    for (const MoveWitness& mw : st.moves) moves.push_back(witness_to_json(mw));
    steps.push_back(std::move(moves));
  }
  return Json{{"zeta", np_to_json(ch.zeta)},
              {"xi", np_to_json(ch.xi)},
              {"c", c_value(ch.zeta, ch.xi)},
              {"method", method_name(ch.method)},
              {"words", std::move(words)},
              {"steps", std::move(steps)}};
}

Chain chain_from_json(const Json& j) {
  Chain ch;
  ch.zeta = np_from_json(field(j, "zeta"));
  ch.xi = np_from_json(field(j, "xi"));
  const std::string method = string_field(j, "method");
  if (method == "constructive") {
    ch.method = ChainMethod::Constructive;
  } else if (method == "search") {
    ch.method = ChainMethod::Search;
  } else {
    bad("method must be \"constructive\" or \"search\"");
  }
  const Json& words = field(j, "words");
  if (!words.is_array()) bad("words must be an array");
  for (const Json& e : words) ch.words.push_back(word_field(e, "words entry"));
  const Json& steps = field(j, "steps");
  if (!steps.is_array()) bad("steps must be an array");
  for (const Json& st : steps) {
    if (!st.is_array()) bad("each step must be an array of witnesses");
    ChainStep out;
    for (const Json& mw : st) out.moves.push_back(witness_from_json(mw));
    ch.steps.push_back(std::move(out));
  }
  const Json& c = field(j, "c");
  if (!c.is_number_integer()) bad("c must be an integer");
  if (ch.zeta.height() == ch.xi.height() && ch.zeta.dim() == ch.xi.dim() &&
      precedes(ch.zeta, ch.xi) && c.get<long long>() != c_value(ch.zeta, ch.xi)) {
    bad("stored c does not match the endpoints");
  }
  return ch;
}

Json report_to_json(const Report& r) {
  return Json{{"campaign", r.campaign},
              {"params", Json(r.params)},
              {"instances", r.instances},
              {"passes", r.passes()},
              {"failures", r.failures},
              {"counts", Json(r.counts)},
              {"counterexamples", Json(r.counterexamples)},
              {"suppressed", r.suppressed},
              {"wall_seconds", r.wall_seconds},
              {"ok", r.ok()}};
}

}  // namespace dm1
