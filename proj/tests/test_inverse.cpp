#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lefkit/error.hpp"
#include "lefkit/inverse.hpp"

using namespace lefkit;

namespace {

  // Independent criterion: regular, and the idempotents commute.
  bool inverse_by_idempotents(CayleyTable const& t) {
    auto const n = t.order();
    for (element_type x = 0; x < n; ++x) {
      bool regular = false;
      for (element_type y = 0; y < n && !regular; ++y) {
        regular = t(t(x, y), x) == x;
      }
      if (!regular) {
        return false;
      }
    }
    auto es = idempotents(t);
    for (auto e : es) {
      for (auto f : es) {
        if (t(e, f) != t(f, e)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<element_type> all_of(InverseTable const& it) {
    std::vector<element_type> k(it.order());
    for (element_type x = 0; x < it.order(); ++x) {
      k[x] = x;
    }
    return k;
  }

  InverseTable i2() {
    return make_inverse_table(symmetric_inverse_monoid(2).table);
  }

  PartialBijection pb(std::vector<int> m) {
    auto const n = m.size();
    return PartialBijection(n, std::move(m));
  }

}  // namespace

TEST_CASE("partial bijections") {
  auto f = pb({1, -1});
  auto g = pb({-1, 0});
  CHECK(compose_pb(f, g) == pb({0, -1}));
  auto empty = pb({-1, -1});
  CHECK(compose_pb(empty, f) == empty);
  CHECK(compose_pb(f, empty) == empty);
  CHECK(invert_pb(f) == pb({-1, 0}));
  CHECK(f.domain() == std::vector<element_type>{0});
  CHECK(f.range() == std::vector<element_type>{1});
  CHECK(f.rank() == 1);
  CHECK(PartialBijection::identity(2, {1}).is_idempotent());
  CHECK(leq_natural(pb({0, -1}), pb({0, 1})));
  CHECK_FALSE(leq_natural(pb({0, 1}), pb({0, -1})));
  CHECK_THROWS_AS(pb({1, 1}), Error);
  CHECK_THROWS_AS(pb({2, -1}), Error);
  CHECK_THROWS_AS(compose_pb(f, pb({0, 1, 2})), Error);
}

TEST_CASE("symmetric inverse monoids") {
  std::vector<std::size_t> const sizes{2, 7, 34, 209};
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(symmetric_inverse_monoid(n).elements.size() == sizes[n - 1]);
  }
  CHECK(brandt_b2().elements.size() == 5);
  CHECK(inverse_structure(brandt_b2().table).table.has_value());
  auto cl = inverse_closure({pb({1, -1, -1})}, 64);
  // f, f^-1, ff^-1, f^-1f and the empty map ff
  CHECK(cl.elements.size() == 5);
}

TEST_CASE("inverse_structure classifies every table of order <= 4") {
  std::vector<std::size_t> const up_to_iso{1, 2, 5, 16};
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t inverse = 0;
    for (auto const& t : enumerate_semigroups(n, EnumerationMode::labeled)) {
      auto r = inverse_structure(t);
      CHECK(r.table.has_value() == inverse_by_idempotents(t));
      if (r.table) {
        for (element_type x = 0; x < n; ++x) {
          auto y = r.table->inv[x];
          CHECK(t(t(x, y), x) == x);
          CHECK(t(t(y, x), y) == y);
        }
      }
    }
    for (auto const& t : enumerate_semigroups(n, EnumerationMode::up_to_isomorphism)) {
      inverse += inverse_structure(t).table.has_value();
    }
    CHECK(inverse == up_to_iso[n - 1]);
  }
  auto lz = inverse_structure(CayleyTable::make({{0, 0}, {1, 1}}));
  CHECK_FALSE(lz.table.has_value());
  CHECK(lz.partners == 2);
  CHECK_THROWS_AS(make_inverse_table(CayleyTable::make({{0, 0}, {1, 1}})), Error);

  auto z3 = make_inverse_table(cyclic_group(3));
  CHECK(z3.inv == std::vector<element_type>{0, 2, 1});
  auto c3 = make_inverse_table(chain_semilattice(3));
  CHECK(c3.inv == std::vector<element_type>{0, 1, 2});
}

TEST_CASE("natural order") {
  auto it = i2();
  auto const& el = symmetric_inverse_monoid(2).elements;
  for (element_type x = 0; x < it.order(); ++x) {
    CHECK(leq_natural(it, x, x));
    for (element_type y = 0; y < it.order(); ++y) {
      CHECK(leq_natural(it, x, y) == leq_natural(el[x], el[y]));
      if (x != y && leq_natural(it, x, y)) {
        CHECK_FALSE(leq_natural(it, y, x));
      }
      for (element_type z = 0; z < it.order(); ++z) {
        if (leq_natural(it, x, y) && leq_natural(it, y, z)) {
          CHECK(leq_natural(it, x, z));
        }
      }
    }
  }
}

TEST_CASE("Wagner-Preston") {
  auto y2 = wagner_preston(make_inverse_table(two_element_semilattice()));
  CHECK(y2.verified());
  CHECK(y2.images[0] == pb({0, 1}));
  CHECK(y2.images[1] == pb({-1, 1}));

  auto z2 = wagner_preston(make_inverse_table(cyclic_group(2)));
  CHECK(z2.verified());
  for (auto const& f : z2.images) {
    CHECK(f.rank() == 2);
  }

  CHECK(wagner_preston(i2()).verified());
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& t : enumerate_semigroups(n, EnumerationMode::labeled)) {
      if (auto r = inverse_structure(t); r.table) {
        CHECK(wagner_preston(*r.table).verified());
      }
    }
  }
}

TEST_CASE("symmetrised sets") {
  auto y2 = make_inverse_table(two_element_semilattice());
  CHECK(symmetrise(y2, {1}) == std::vector<element_type>{1});
  auto z3 = make_inverse_table(cyclic_group(3));
  CHECK(symmetrise(z3, {1}) == std::vector<element_type>{0, 1, 2});
  CHECK(is_symmetrised(z3, {0, 1, 2}));

  auto        it = i2();
  auto const& el = symmetric_inverse_monoid(2).elements;
  auto        f  = element_type(std::find(el.begin(), el.end(), pb({1, -1})) - el.begin());
  auto        k  = symmetrise(it, {f});
  CHECK(k.size() == 4);
  CHECK(is_symmetrised(it, k));
  // Setwise, f (f^-1)^-1 = ff is the empty map, which is missing.
  CHECK_FALSE(is_symmetrised(it, k, SymmetrisedReading::setwise));
  CHECK(symmetrised_closure(it, {f}, SymmetrisedReading::setwise, 16).size() == 5);
  CHECK(with_idempotents(it, {f}).size() == 2 + idempotents(it.cayley).size());
}

TEST_CASE("lift to partial bijections") {
  auto it  = i2();
  auto r   = ilef_lift(it, all_of(it));
  CHECK(r.verified());
  CHECK(r.failures.empty());
  for (std::size_t i = 0; i < r.k.size(); ++i) {
    if (it(r.k[i], r.k[i]) == r.k[i]) {
      CHECK(r.lift[i].is_idempotent());
    }
  }

  auto c3 = make_inverse_table(chain_semilattice(3));
  auto rc = ilef_lift(c3, all_of(c3));
  CHECK(rc.verified());
  for (std::size_t i = 0; i < rc.k.size(); ++i) {
    CHECK(rc.lift[i].is_idempotent());
    for (std::size_t j = 0; j < rc.k.size(); ++j) {
      CHECK(leq_natural(rc.lift[i], rc.lift[j]) == leq_natural(c3, rc.k[i], rc.k[j]));
    }
  }

  // A map that is not injective on K is rejected up front.
  std::vector<Transformation> constant(it.order(), Transformation({0, 0}));
  CHECK_THROWS_AS(ilef_lift(it, all_of(it), constant), Error);
}

TEST_CASE("wrap and inverse compatibility") {
  auto it = i2();
  auto sw = inverse_self_wrap(it, all_of(it));
  CHECK(inverse_wrap_valid(sw));
  CHECK(check_wrap_inverse_compat(sw).holds());
  CHECK(check_hmin_lemmas(sw).holds());

  auto z3     = make_inverse_table(cyclic_group(3));
  auto broken = inverse_self_wrap(z3, all_of(z3));
  broken.label = {0, 1, 1};
  CHECK_FALSE(check_wrap_inverse_compat(broken).holds());

  auto b2 = make_inverse_table(brandt_b2().table);
  for (element_type h = 0; h < b2.order(); ++h) {
    auto k  = with_idempotents(b2, {h});
    if (k.size() == b2.order()) {
      continue;  // no element outside K to absorb relabelled preimages
    }
    auto zw = tighten_inverse(inverse_zero_wrap(b2, k));
    CHECK(inverse_wrap_valid(zw));
    CHECK(check_wrap_inverse_compat(zw).holds());
    CHECK(check_hmin_lemmas(zw).holds());
  }
}

TEST_CASE("h-minimal elements") {
  auto it = i2();
  auto sw = inverse_self_wrap(it, all_of(it));
  for (element_type h = 0; h < it.order(); ++h) {
    auto m = h_minimal(sw, h);
    CHECK(m.element == h);
    CHECK(m.minimal);
  }

  // Chain 0 < 1 < 2 over K = {identity} of the 2-element semilattice: both 1
  // and 2 are idempotent preimages and the smaller one is chosen.
  InverseWrap chain{make_inverse_table(chain_semilattice(3)),
                    make_inverse_table(two_element_semilattice()),
                    {0},
                    {1, 0, 0}};
  REQUIRE(inverse_wrap_valid(chain));
  auto m = h_minimal(chain, 0);
  CHECK(m.element == 1);
  CHECK(m.minimal);
  CHECK_FALSE(check_hmin_lemmas(chain).holds());
  CHECK(check_hmin_lemmas(tighten_inverse(chain)).holds());
}

TEST_CASE("tightness matters for the unique idempotent preimage") {
  auto y2   = make_inverse_table(two_element_semilattice());
  auto wrap = inverse_product_wrap(y2, {0}, two_element_semilattice());
  REQUIRE(inverse_wrap_valid(wrap));
  auto loose = check_hmin_lemmas(wrap);
  CHECK_FALSE(loose.holds());
  auto tight = tighten_inverse(wrap);
  CHECK(inverse_wrap_valid(tight));
  CHECK(check_hmin_lemmas(tight).holds());
  CHECK(check_wrap_inverse_compat(tight).holds());
}

TEST_CASE("maps into the power semigroup") {
  auto b2 = make_inverse_table(brandt_b2().table);
  auto r  = ilef_from_wrap(inverse_self_wrap(b2, all_of(b2)));
  CHECK(r.verified());
  REQUIRE(r.power.has_value());
  for (std::size_t i = 0; i < r.h.size(); ++i) {
    for (std::size_t j = 0; j < r.h.size(); ++j) {
      auto p = b2(r.h[i], r.h[j]);
      auto it = std::find(r.h.begin(), r.h.end(), p);
      REQUIRE(it != r.h.end());
      auto lhs = (*r.power)(power_subset_element(r.images[i]), power_subset_element(r.images[j]));
      CHECK(lhs == power_subset_element(r.images[std::size_t(it - r.h.begin())]));
    }
  }

  auto c3 = make_inverse_table(chain_semilattice(3));
  CHECK(ilef_from_wrap(inverse_self_wrap(c3, all_of(c3))).verified());

  auto it = i2();
  auto h  = std::vector<element_type>{3, 5};
  auto k  = with_idempotents(it, h);
  auto rw = ilef_from_wrap(tighten_inverse(inverse_self_wrap(it, k)), h);
  CHECK(rw.verified());
  CHECK(rw.images.size() == 2);
}

TEST_CASE("constructions") {
  auto z2 = cyclic_group(2);
  auto z  = adjoin_zero(z2);
  CHECK(z.order() == 3);
  CHECK(z(2, 0) == 2);
  CHECK(z(1, 1) == 0);
  auto p = direct_product(z2, two_element_semilattice());
  CHECK(p.order() == 4);
  CHECK(inverse_structure(p).table.has_value());
  CHECK(p(1 + 2 * 1, 1 + 2 * 0) == 0 + 2 * 1);
}
