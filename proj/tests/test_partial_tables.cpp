#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lefkit/error.hpp"
#include "lefkit/inverse.hpp"
#include "lefkit/partial_tables.hpp"

using namespace lefkit;

namespace {

  PartialTable words(char const* system, std::vector<Word> const& ws) {
    std::vector<Word> parsed;
    for (auto const& w : ws) {
      parsed.push_back(parse_word(w));
    }
    return induce(presentation_by_name(system), parsed);
  }

  std::optional<std::size_t> prod(PartialTable const& pt, char const* x, char const* y) {
    return pt.product(*pt.index_of(x), *pt.index_of(y));
  }

  // D = chain 0 < 1 < 2 under min around H = {identity} of the 2-element
  // semilattice; D-elements 1 and 2 are both labelled with it, 2 needlessly.
  WrapInstance junk_wrap() {
    auto h = induce_from_table(two_element_semilattice(), {0});
    return WrapInstance{chain_semilattice(3), h, {Label::out("s1"), Label::in(0), Label::in(0)}};
  }

}  // namespace

TEST_CASE("partial associativity") {
  CHECK_FALSE(check_partial_associativity(PartialTable({"x"}, {std::nullopt}, std::nullopt)).has_value());
  CHECK_FALSE(check_partial_associativity(words("B", {"1", "a", "b", "ba"})).has_value());

  // x y = p, y z = q, p z = r but x q = x.
  std::size_t const                       t = 6;
  std::vector<std::optional<std::size_t>> product(t * t);
  product[0 * t + 1] = 3;
  product[1 * t + 2] = 4;
  product[3 * t + 2] = 5;
  product[0 * t + 4] = 0;
  PartialTable bad({"x", "y", "z", "p", "q", "r"}, product, std::nullopt);
  auto         v = check_partial_associativity(bad);
  REQUIRE(v.has_value());
  CHECK(*v == PartialViolation{0, 1, 2});
}

TEST_CASE("induced tables") {
  auto b = words("B", {"1", "a", "b", "ba"});
  CHECK(b.names() == std::vector<std::string>{"1", "a", "b", "ba"});
  CHECK(prod(b, "a", "b") == b.index_of("1"));
  CHECK(prod(b, "b", "a") == b.index_of("ba"));
  CHECK(prod(b, "1", "ba") == b.index_of("ba"));
  CHECK(prod(b, "ba", "1") == b.index_of("ba"));
  CHECK(prod(b, "ba", "ba") == b.index_of("ba"));
  CHECK_FALSE(prod(b, "a", "a"));
  CHECK_FALSE(prod(b, "b", "b"));
  CHECK(b.ambient(*b.index_of("a"), *b.index_of("a")) == "aa");

  auto a = words("A", {"a", "b", "ab", "aba"});
  CHECK(prod(a, "a", "ab") == a.index_of("a"));
  CHECK(prod(a, "a", "b") == a.index_of("ab"));
  CHECK(prod(a, "ab", "a") == a.index_of("aba"));

  auto f = words("free", {"a", "b", "ab"});
  std::size_t defined = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      defined += f.product(i, j).has_value();
    }
  }
  CHECK(defined == 1);
  CHECK(prod(f, "a", "b") == f.index_of("ab"));

  CHECK_THROWS_AS(words("B", {"ab", "1"}), Error);
  try {
    words("B", {"ab", "1"});
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::duplicate_element);
  }
}

TEST_CASE("induce_from_table") {
  auto y2 = two_element_semilattice();
  auto pt = induce_from_table(y2, {0});
  CHECK(pt.names() == std::vector<std::string>{"s0"});
  CHECK(pt.outside() == OutsideKind::concrete);
  CHECK(pt.sink() == "s1");
  auto all = induce_from_table(y2, {0, 1});
  CHECK(all.outside() == OutsideKind::none);
}

TEST_CASE("embedding searches") {
  auto f3 = words("free", {"a", "b", "ab"});
  auto r  = embed_search(f3, EmbedSpace{EmbedSpace::Kind::orders, 5});
  REQUIRE(r.found());
  CHECK(verify_embedding(f3, *r.witness));

  auto td = embed_search(f3, EmbedSpace{EmbedSpace::Kind::transformation_degree, 3});
  REQUIRE(td.found());
  CHECK(td.witness->transformations.has_value());
  CHECK(verify_embedding(f3, *td.witness));

  for (auto const& pattern : {words("B", {"1", "a", "b", "ba"}), words("A", {"a", "b", "ab", "aba"})}) {
    auto o = embed_search(pattern, EmbedSpace{EmbedSpace::Kind::orders, 4});
    CHECK_FALSE(o.found());
    // Targets smaller than the set cannot hold an injective image.
    CHECK(o.candidates == 3492);
    CHECK_FALSE(embed_search(pattern, EmbedSpace{EmbedSpace::Kind::transformation_degree, 3}).found());
  }
  CHECK_THROWS_AS(embed_search(f3, EmbedSpace{EmbedSpace::Kind::orders, 6}), Error);
}

TEST_CASE("verify_embedding rejects bad witnesses") {
  auto f3 = words("free", {"a", "b", "ab"});
  auto w  = free_truncation_witness({"a", "b", "ab"}, 2);
  REQUIRE(verify_embedding(f3, w));
  auto same = w;
  same.assignment[1] = same.assignment[0];
  CHECK_FALSE(verify_embedding(f3, same));
  auto wrong = w;
  std::swap(wrong.assignment[0], wrong.assignment[1]);
  CHECK_FALSE(verify_embedding(f3, wrong));
}

TEST_CASE("free truncation witness") {
  auto one = free_truncation_witness({"a"}, 1);
  CHECK(one.target.order() == 2);
  CHECK(one.target(one.assignment[0], one.assignment[0]) != one.assignment[0]);

  auto w = free_truncation_witness({"a", "b", "ab"}, 2);
  CHECK(w.target.order() == 7);
  CHECK(w.target(w.assignment[0], w.assignment[1]) == w.assignment[2]);

  auto f4 = words("free", {"a", "b", "ab", "ba"});
  auto w4 = free_truncation_witness({"a", "b", "ab", "ba"}, 2);
  CHECK(w4.target.order() == 7);
  CHECK(verify_embedding(f4, w4));
}

TEST_CASE("wraps") {
  auto s  = CayleyTable::make({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}});
  auto wi = self_wrap(s, {0, 1, 2});
  CHECK(wrap_verify(wi));
  CHECK(is_accurate_tight(wi));

  auto broken      = wi;
  broken.labels[1] = Label::in(2);
  CHECK_FALSE(wrap_verify(broken));
  CHECK(wrap_violation(broken).has_value());

  for (auto const& t : enumerate_semigroups(3, EnumerationMode::up_to_isomorphism)) {
    for (unsigned mask = 1; mask < 8; ++mask) {
      std::vector<element_type> h;
      for (element_type x = 0; x < 3; ++x) {
        if (mask >> x & 1) {
          h.push_back(x);
        }
      }
      auto tw = truncation_wrap(t, h, EmbedSpace{EmbedSpace::Kind::orders, 3});
      CHECK(wrap_verify(tw));
      auto tt = tighten(tw);
      CHECK(wrap_verify(tt));
      CHECK(is_accurate_tight(tt));
      CHECK(tighten(tt).labels == tt.labels);
    }
  }
}

TEST_CASE("accurate sets and tightening") {
  auto j = junk_wrap();
  REQUIRE(wrap_verify(j));
  CHECK(default_designated(j) == std::vector<element_type>{1});
  CHECK(accurate_set(j, {1}) == std::vector<element_type>{1});
  CHECK_FALSE(is_accurate_tight(j));
  auto t = tighten(j);
  CHECK(t.labels[2] == Label::out("s1"));
  CHECK(t.labels[1] == Label::in(0));
  CHECK(wrap_verify(t));
  CHECK(tighten(t).labels == t.labels);

  auto s = self_wrap(two_element_semilattice(), {0, 1});
  CHECK(accurate_set(s, default_designated(s)) == s.set_preimages());
  CHECK(tighten(s).labels == s.labels);
}

TEST_CASE("wrap search") {
  auto y2 = induce_from_table(two_element_semilattice(), {0, 1});
  auto r  = wrap_search(y2, 2);
  REQUIRE(r.found());
  CHECK(wrap_verify(*r.witness));

  auto b4 = words("B", {"1", "a", "b", "ba"});
  CHECK_FALSE(wrap_search(b4, 4).found());
  auto a4 = words("A", {"a", "b", "ab", "aba"});
  CHECK_FALSE(wrap_search(a4, 4).found());
}
