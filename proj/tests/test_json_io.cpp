#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lefkit/error.hpp"
#include "lefkit/json_io.hpp"

using namespace lefkit;

namespace {

  PartialTable words(char const* system, std::vector<Word> const& ws) {
    std::vector<Word> parsed;
    for (auto const& w : ws) {
      parsed.push_back(parse_word(w));
    }
    return induce(presentation_by_name(system), parsed);
  }

  ErrorCode code_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::invalid_input;
  }

}  // namespace

TEST_CASE("tables round-trip") {
  for (auto const& t : enumerate_semigroups(3, EnumerationMode::up_to_isomorphism)) {
    CHECK(cayley_from_json(to_json(t)) == t);
  }
  auto bad = to_json(CayleyTable::make({{0, 0}, {1, 1}}));
  bad["table"][0][0] = 1;
  CHECK(code_of([&] { cayley_from_json(bad); }) == ErrorCode::corrupt_certificate);
  CHECK(code_of([] { cayley_from_json(json::parse(R"({"order": 2})")); }) == ErrorCode::corrupt_certificate);
}

TEST_CASE("partial tables round-trip") {
  for (auto const& pt : {words("B", {"1", "a", "b", "ba"}),
                         words("A", {"a", "b", "ab", "aba"}),
                         induce_from_table(chain_semilattice(3), {1}),
                         prob_pattern_set(2)}) {
    CHECK(partial_table_from_json(to_json(pt)) == pt);
  }
}

TEST_CASE("labels round-trip") {
  auto pt = words("B", {"1", "a"});
  for (auto const& l : {Label::in(1), Label::out("bb"), Label::bottom()}) {
    CHECK(label_from_json(to_json(pt, l)) == l);
  }
}

TEST_CASE("witnesses and wraps round-trip") {
  auto f3 = words("free", {"a", "b", "ab"});
  auto w  = *embed_search(f3, EmbedSpace{EmbedSpace::Kind::transformation_degree, 3}).witness;
  auto w2 = embedding_from_json(to_json(w));
  CHECK(w2.target == w.target);
  CHECK(w2.assignment == w.assignment);
  CHECK(w2.transformations == w.transformations);
  CHECK(verify_embedding(f3, w2));

  auto wi  = tighten(truncation_wrap(chain_semilattice(3), {2}));
  auto wi2 = wrap_from_json(to_json(wi));
  CHECK(wi2.d == wi.d);
  CHECK(wi2.h == wi.h);
  CHECK(wi2.labels == wi.labels);
}

TEST_CASE("certificates and reports round-trip") {
  auto a = words("A", {"a", "b", "ab", "aba"});
  for (auto const& c : detect_obstruction(a)) {
    auto c2 = obstruction_from_json(to_json(c));
    CHECK(c2.pattern == c.pattern);
    CHECK(c2.elements == c.elements);
    CHECK(verify_obstruction(a, c2));
  }

  auto r  = scan_law(law_by_id("ppq-commute"), 3, EnumerationMode::labeled, 1, 3);
  auto r2 = law_report_from_json(to_json(r));
  CHECK(r2.law == r.law);
  CHECK(r2.counterexample_count == r.counterexample_count);
  CHECK(r2.counterexamples.size() == r.counterexamples.size());
  CHECK(to_json(r2) == to_json(r));
}

TEST_CASE("inverse values round-trip") {
  auto f = PartialBijection(3, {2, -1, 0});
  CHECK(partial_bijection_from_json(to_json(f)) == f);
  auto j = to_json(f);
  j["map"]["1"] = 0;
  CHECK(code_of([&] { partial_bijection_from_json(j); }) == ErrorCode::corrupt_certificate);

  auto it  = make_inverse_table(brandt_b2().table);
  auto it2 = inverse_table_from_json(to_json(it));
  CHECK(it2.cayley == it.cayley);
  CHECK(it2.inv == it.inv);

  auto iw  = tighten_inverse(inverse_zero_wrap(it, with_idempotents(it, {1})));
  auto iw2 = inverse_wrap_from_json(to_json(iw));
  CHECK(iw2.d.cayley == iw.d.cayley);
  CHECK(iw2.k == iw.k);
  CHECK(iw2.label == iw.label);
  CHECK(to_json(check_hmin_lemmas(iw2)) == to_json(check_hmin_lemmas(iw)));
}

TEST_CASE("garbage is rejected") {
  CHECK(code_of([] { partial_table_from_json(json::parse("[1, 2]")); }) == ErrorCode::corrupt_certificate);
  CHECK(code_of([] { wrap_from_json(json::parse(R"({"d": 3})")); }) == ErrorCode::corrupt_certificate);
  CHECK(code_of([] { embedding_from_json(json::parse("null")); }) == ErrorCode::corrupt_certificate);
}
