#include "lefkit/inverse.hpp"

#include <deque>
#include <map>

#include "lefkit/error.hpp"

namespace lefkit {

  ////////////////////////////////////////////////////////////////////////
  // PartialBijection
  ////////////////////////////////////////////////////////////////////////

  PartialBijection::PartialBijection(std::size_t universe, std::vector<int> map)
      : _map(std::move(map)) {
    if (_map.size() != universe) {
      fail(ErrorCode::invalid_input, "map size differs from the universe");
    }
    std::vector<bool> hit(universe, false);
    for (int y : _map) {
      if (y == undefined) {
        continue;
      }
      if (y < 0 || std::size_t(y) >= universe) {
        fail(ErrorCode::invalid_input, "image out of range");
      }
      if (hit[std::size_t(y)]) {
        fail(ErrorCode::invalid_input, "partial map is not injective");
      }
      hit[std::size_t(y)] = true;
    }
  }

  PartialBijection PartialBijection::identity(std::size_t universe,
                                              std::vector<element_type> const& domain) {
    std::vector<int> map(universe, undefined);
    for (auto x : domain) {
      map.at(x) = int(x);
    }
    return PartialBijection(universe, std::move(map));
  }

  std::vector<element_type> PartialBijection::domain() const {
    std::vector<element_type> result;
    for (std::size_t x = 0; x < _map.size(); ++x) {
      if (_map[x] != undefined) {
        result.push_back(element_type(x));
      }
    }
    return result;
  }

  std::vector<element_type> PartialBijection::range() const {
    std::vector<element_type> result;
    for (int y : _map) {
      if (y != undefined) {
        result.push_back(element_type(y));
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::size_t PartialBijection::rank() const {
    return std::size_t(std::count_if(_map.begin(), _map.end(), [](int y) { return y != undefined; }));
  }

  bool PartialBijection::is_idempotent() const {
    for (std::size_t x = 0; x < _map.size(); ++x) {
      if (_map[x] != undefined && _map[x] != int(x)) {
        return false;
      }
    }
    return true;
  }

  PartialBijection compose_pb(PartialBijection const& f, PartialBijection const& g) {
    if (f.universe() != g.universe()) {
      fail(ErrorCode::universe_mismatch, "partial bijections on different universes");
    }
    std::vector<int> map(f.universe(), PartialBijection::undefined);
    for (std::size_t x = 0; x < map.size(); ++x) {
      int y = f.map()[x];
      if (y != PartialBijection::undefined) {
        map[x] = g.map()[std::size_t(y)];
      }
    }
    return PartialBijection(f.universe(), std::move(map));
  }

  PartialBijection invert_pb(PartialBijection const& f) {
    std::vector<int> map(f.universe(), PartialBijection::undefined);
    for (std::size_t x = 0; x < map.size(); ++x) {
      int y = f.map()[x];
      if (y != PartialBijection::undefined) {
        map[std::size_t(y)] = int(x);
      }
    }
    return PartialBijection(f.universe(), std::move(map));
  }

  bool leq_natural(PartialBijection const& f, PartialBijection const& g) {
    if (f.universe() != g.universe()) {
      fail(ErrorCode::universe_mismatch, "partial bijections on different universes");
    }
    for (std::size_t x = 0; x < f.universe(); ++x) {
      if (f.map()[x] != PartialBijection::undefined && f.map()[x] != g.map()[x]) {
        return false;
      }
    }
    return true;
  }

  namespace {

    CayleyTable pb_table(std::vector<PartialBijection> const& elements) {
      std::map<PartialBijection, element_type> index;
      for (std::size_t i = 0; i < elements.size(); ++i) {
        index.emplace(elements[i], element_type(i));
      }
      std::size_t const         n = elements.size();
      std::vector<element_type> flat(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          auto it = index.find(compose_pb(elements[i], elements[j]));
          if (it == index.end()) {
            fail(ErrorCode::invalid_input, "partial bijections not closed under composition");
          }
          flat[i * n + j] = it->second;
        }
      }
      return CayleyTable::unchecked(n, std::move(flat));
    }

  }  // namespace

  PartialBijectionSemigroup symmetric_inverse_monoid(std::size_t universe) {
    if (universe == 0 || universe > 5) {
      fail(ErrorCode::bound_exceeded, "symmetric inverse monoids of degree 1..5 only");
    }
    std::vector<PartialBijection> elements;
    std::vector<int>              map(universe, PartialBijection::undefined);
    // odometer over {-1, 0, ..., N-1}^N
    while (true) {
      std::vector<bool> hit(universe, false);
      bool              injective = true;
      for (int y : map) {
        if (y != PartialBijection::undefined) {
          injective = injective && !hit[std::size_t(y)];
          hit[std::size_t(y)] = true;
        }
      }
      if (injective) {
        elements.emplace_back(universe, map);
      }
      std::size_t pos = 0;
      while (pos < universe && map[pos] == int(universe) - 1) {
        map[pos++] = PartialBijection::undefined;
      }
      if (pos == universe) {
        break;
      }
      ++map[pos];
    }
    std::sort(elements.begin(), elements.end(), [](auto const& a, auto const& b) {
      return std::make_pair(a.rank(), a.map()) < std::make_pair(b.rank(), b.map());
    });
    auto table = pb_table(elements);
    return {std::move(elements), std::move(table)};
  }

  PartialBijectionSemigroup inverse_closure(std::vector<PartialBijection> const& generators,
                                            std::size_t cap) {
    if (generators.empty()) {
      fail(ErrorCode::invalid_input, "no generators");
    }
    std::vector<PartialBijection> gens;
    for (auto const& g : generators) {
      gens.push_back(g);
      gens.push_back(invert_pb(g));
    }
    std::vector<PartialBijection>   elements;
    std::set<PartialBijection>      seen;
    std::deque<PartialBijection>    frontier;
    auto add = [&](PartialBijection const& x) {
      if (seen.insert(x).second) {
        if (elements.size() == cap) {
          fail(ErrorCode::cap_exceeded,
               "inverse closure exceeds " + std::to_string(cap) + " elements");
        }
        elements.push_back(x);
        frontier.push_back(x);
      }
    };
    for (auto const& g : gens) {
      add(g);
    }
    while (!frontier.empty()) {
      auto x = frontier.front();
      frontier.pop_front();
      for (auto const& g : gens) {
        add(compose_pb(x, g));
      }
    }
    auto table = pb_table(elements);
    return {std::move(elements), std::move(table)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Inverse tables
  ////////////////////////////////////////////////////////////////////////

  InverseStructure inverse_structure(CayleyTable const& t) {
    std::size_t const         n = t.order();
    std::vector<element_type> inv(n);
    for (element_type x = 0; x < n; ++x) {
      std::size_t partners = 0;
      for (element_type y = 0; y < n; ++y) {
        if (t(t(x, y), x) == x && t(t(y, x), y) == y) {
          ++partners;
          inv[x] = y;
        }
      }
      if (partners != 1) {
        return InverseStructure{std::nullopt, x, partners};
      }
    }
    return InverseStructure{InverseTable{t, std::move(inv)}, 0, 1};
  }

  InverseTable make_inverse_table(CayleyTable const& table) {
    auto r = inverse_structure(table);
    if (!r.table) {
      fail(ErrorCode::precondition_failed,
           "not an inverse semigroup: element " + std::to_string(r.witness) + " has "
               + std::to_string(r.partners) + " inverses");
    }
    return std::move(*r.table);
  }

  bool leq_natural(InverseTable const& it, element_type x, element_type y) {
    return x == it(it(x, it.inv[x]), y);
  }

  WagnerPreston wagner_preston(InverseTable const& it) {
    WagnerPreston     wp;
    std::size_t const n = it.order();
    for (element_type a = 0; a < n; ++a) {
      std::vector<int> map(n, PartialBijection::undefined);
      for (element_type x = 0; x < n; ++x) {
        if (it(it(x, a), it.inv[a]) == x) {
          map[x] = int(it(x, a));
        }
      }
      wp.images.emplace_back(n, std::move(map));
    }
    std::set<PartialBijection> distinct(wp.images.begin(), wp.images.end());
    wp.injective      = distinct.size() == n;
    wp.multiplicative = true;
    for (element_type a = 0; a < n && wp.multiplicative; ++a) {
      for (element_type b = 0; b < n; ++b) {
        if (compose_pb(wp.images[a], wp.images[b]) != wp.images[it(a, b)]) {
          wp.multiplicative = false;
          wp.failure        = std::make_pair(a, b);
          break;
        }
      }
    }
    return wp;
  }

  ////////////////////////////////////////////////////////////////////////
  // Symmetrised sets
  ////////////////////////////////////////////////////////////////////////

  namespace {

    void check_subset(InverseTable const& it, std::vector<element_type> const& h) {
      for (auto x : h) {
        if (x >= it.order()) {
          fail(ErrorCode::invalid_input, "element out of range");
        }
      }
    }

  }  // namespace

  std::vector<element_type> symmetrise(InverseTable const& it,
                                       std::vector<element_type> const& h,
                                       SymmetrisedReading reading) {
    check_subset(it, h);
    return symmetrise_generic(
        h,
        [&](element_type x, element_type y) { return it(x, y); },
        [&](element_type x) { return it.inv[x]; },
        reading);
  }

  bool is_symmetrised(InverseTable const& it,
                      std::vector<element_type> const& k,
                      SymmetrisedReading reading) {
    check_subset(it, k);
    return is_symmetrised_generic(
        k,
        [&](element_type x, element_type y) { return it(x, y); },
        [&](element_type x) { return it.inv[x]; },
        reading);
  }

  std::vector<element_type> symmetrised_closure(InverseTable const& it,
                                                std::vector<element_type> const& h,
                                                SymmetrisedReading reading,
                                                std::size_t cap) {
    auto k = symmetrise(it, h, reading);
    while (!is_symmetrised(it, k, reading)) {
      k = symmetrise(it, k, reading);
      if (k.size() > cap) {
        fail(ErrorCode::cap_exceeded, "symmetrised closure exceeds the cap");
      }
    }
    return k;
  }

  std::vector<element_type> with_idempotents(InverseTable const& it,
                                             std::vector<element_type> const& h) {
    check_subset(it, h);
    std::set<element_type> k(h.begin(), h.end());
    for (auto x : h) {
      k.insert(it.inv[x]);
    }
    for (auto e : idempotents(it.cayley)) {
      k.insert(e);
    }
    return {k.begin(), k.end()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Lift
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::vector<element_type> image_of(Transformation const& t) {
      std::vector<element_type> im(t.images());
      std::sort(im.begin(), im.end());
      im.erase(std::unique(im.begin(), im.end()), im.end());
      return im;
    }

  }  // namespace

  IlefLift ilef_lift(InverseTable const& it,
                     std::vector<element_type> const& k,
                     std::vector<Transformation> const& f) {
    check_subset(it, k);
    if (f.size() != it.order() || f.empty()) {
      fail(ErrorCode::invalid_input, "need one transformation per element");
    }
    std::size_t const degree = f.front().degree();
    for (auto const& t : f) {
      if (t.degree() != degree) {
        fail(ErrorCode::invalid_input, "transformations of different degrees");
      }
    }
    std::set<element_type> k3;
    for (auto x : k) {
      for (auto y : k) {
        for (auto z : k) {
          k3.insert(it(it(x, y), z));
        }
      }
    }
    std::set<Transformation> distinct;
    for (auto x : k3) {
      if (!distinct.insert(f[x]).second) {
        fail(ErrorCode::precondition_failed, "f is not injective on K^3");
      }
    }
    for (auto x : k3) {
      for (auto y : k3) {
        if (k3.count(it(x, y)) && f[x].then(f[y]) != f[it(x, y)]) {
          fail(ErrorCode::precondition_failed, "f is not multiplicative on K^3");
        }
      }
    }

    IlefLift r;
    r.k              = k;
    r.bijective      = true;
    r.idempotent_ids = true;
    for (auto x : k) {
      auto const        dom = image_of(f[it.inv[x]]);
      std::vector<int>  map(degree, PartialBijection::undefined);
      std::set<element_type> hit;
      for (auto p : dom) {
        auto q = f[x][p];
        if (hit.insert(q).second) {
          map[p] = int(q);
        } else {
          r.bijective = false;
          r.failures.push_back("lift of " + std::to_string(x) + " is not injective");
        }
      }
      if (std::vector<element_type>(hit.begin(), hit.end()) != image_of(f[x])) {
        r.bijective = false;
        r.failures.push_back("lift of " + std::to_string(x) + " misses part of Im(x f)");
      }
      r.lift.emplace_back(degree, std::move(map));
      if (it(x, x) == x && r.lift.back() != PartialBijection::identity(degree, image_of(f[x]))) {
        r.idempotent_ids = false;
        r.failures.push_back("idempotent " + std::to_string(x) + " is not a partial identity");
      }
    }
    std::map<element_type, std::size_t> pos;
    for (std::size_t i = 0; i < k.size(); ++i) {
      pos.emplace(k[i], i);
    }
    r.injective = std::set<PartialBijection>(r.lift.begin(), r.lift.end()).size() == pos.size();
    if (!r.injective) {
      r.failures.push_back("lift is not injective");
    }
    r.multiplicative = true;
    r.inverse_preserved = true;
    for (std::size_t i = 0; i < k.size(); ++i) {
      for (std::size_t j = 0; j < k.size(); ++j) {
        auto xy = pos.find(it(k[i], k[j]));
        if (xy != pos.end() && compose_pb(r.lift[i], r.lift[j]) != r.lift[xy->second]) {
          r.multiplicative = false;
          r.failures.push_back("lift not multiplicative at " + std::to_string(k[i]) + ", "
                               + std::to_string(k[j]));
        }
      }
      auto xi = pos.find(it.inv[k[i]]);
      if (xi != pos.end() && r.lift[xi->second] != invert_pb(r.lift[i])) {
        r.inverse_preserved = false;
        r.failures.push_back("lift does not preserve the inverse of " + std::to_string(k[i]));
      }
    }
    return r;
  }

  IlefLift ilef_lift(InverseTable const& it, std::vector<element_type> const& k) {
    return ilef_lift(it, k, regular_representation(it.cayley).elements());
  }

  ////////////////////////////////////////////////////////////////////////
  // Inverse wraps
  ////////////////////////////////////////////////////////////////////////

  std::vector<element_type> InverseWrap::preimages(element_type s) const {
    std::vector<element_type> result;
    for (element_type x = 0; x < label.size(); ++x) {
      if (label[x] == s) {
        result.push_back(x);
      }
    }
    return result;
  }

  namespace {

    element_type parse_element_name(std::string const& name, std::size_t order) {
      if (name.size() < 2 || name[0] != 's') {
        fail(ErrorCode::invalid_input, "not an element name: " + name);
      }
      std::size_t v = 0;
      for (std::size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9') {
          fail(ErrorCode::invalid_input, "not an element name: " + name);
        }
        v = 10 * v + std::size_t(name[i] - '0');
      }
      if (v >= order) {
        fail(ErrorCode::invalid_input, "element name out of range: " + name);
      }
      return element_type(v);
    }

    element_type power_to_idempotent(InverseTable const& d, element_type z) {
      element_type p = z;
      while (d(p, p) != p) {
        p = d(p, z);
      }
      return p;
    }

    element_type power(InverseTable const& d, element_type x, std::size_t k) {
      return d.cayley.power(x, k);
    }

  }  // namespace

  InverseWrap inverse_wrap(WrapInstance const& wi, InverseTable const& ambient) {
    InverseWrap iw{make_inverse_table(wi.d), ambient, {}, {}};
    std::vector<element_type> set;
    for (auto const& name : wi.h.names()) {
      set.push_back(parse_element_name(name, ambient.order()));
    }
    for (auto const& l : wi.labels) {
      switch (l.kind) {
        case Label::Kind::in_set:
          iw.label.push_back(set.at(l.index));
          break;
        case Label::Kind::outside:
          iw.label.push_back(parse_element_name(l.value, ambient.order()));
          break;
        case Label::Kind::bottom:
          fail(ErrorCode::precondition_failed, "symbolic label over a finite ambient");
      }
    }
    std::sort(set.begin(), set.end());
    iw.k = std::move(set);
    return iw;
  }

  WrapInstance to_wrap_instance(InverseWrap const& iw) {
    WrapInstance wi{iw.d.cayley, induce_from_table(iw.ambient.cayley, iw.k), {}};
    for (auto s : iw.label) {
      auto it = std::lower_bound(iw.k.begin(), iw.k.end(), s);
      if (it != iw.k.end() && *it == s) {
        wi.labels.push_back(Label::in(std::size_t(it - iw.k.begin())));
      } else {
        wi.labels.push_back(Label::out(element_name(s)));
      }
    }
    return wi;
  }

  bool inverse_wrap_valid(InverseWrap const& iw) {
    return iw.label.size() == iw.d.order() && wrap_verify(to_wrap_instance(iw));
  }

  std::vector<element_type> inverse_designation(InverseWrap const& iw) {
    auto const&                              d = iw.d;
    auto const&                              s = iw.ambient;
    std::vector<std::optional<element_type>> chosen(iw.k.size());
    auto index = [&](element_type x) -> std::size_t {
      auto it = std::lower_bound(iw.k.begin(), iw.k.end(), x);
      if (it == iw.k.end() || *it != x) {
        fail(ErrorCode::precondition_failed, "K is not closed under inverses");
      }
      return std::size_t(it - iw.k.begin());
    };
    auto least = [&](element_type x) {
      auto pre = iw.preimages(x);
      if (pre.empty()) {
        fail(ErrorCode::empty_preimage, "no preimage of " + element_name(x));
      }
      return pre.front();
    };
    for (std::size_t i = 0; i < iw.k.size(); ++i) {
      if (chosen[i]) {
        continue;
      }
      auto h = iw.k[i];
      if (s(h, h) == h) {
        chosen[i] = power_to_idempotent(d, least(h));
        continue;
      }
      auto        j = index(s.inv[h]);
      auto        x = least(h);
      auto        y = least(s.inv[h]);
      auto        c = d(x, y);
      std::size_t n = 1;
      while (d(power(d, c, n), power(d, c, n)) != power(d, c, n)) {
        ++n;
      }
      chosen[i] = d(power(d, c, n), x);
      if (j != i) {
        chosen[j] = d(y, power(d, c, 2 * n - 1));
      }
    }
    std::vector<element_type> result;
    for (auto const& c : chosen) {
      result.push_back(*c);
    }
    return result;
  }

  InverseWrap tighten_inverse(InverseWrap const& iw) {
    return inverse_wrap(tighten(to_wrap_instance(iw), inverse_designation(iw)), iw.ambient);
  }

  LemmaReport check_wrap_inverse_compat(InverseWrap const& iw) {
    auto const& d = iw.d;
    auto const& s = iw.ambient;
    LemmaReport r;
    for (element_type w = 0; w < d.order(); ++w) {
      if (!iw.in_k(iw.label[w])) {
        continue;
      }
      ++r.checked;
      if (iw.label[d.inv[w]] != s.inv[iw.label[w]]) {
        r.violations.push_back("(w'd)^-1 != (w'^-1)d at w' = " + std::to_string(w));
      }
    }
    for (auto h : iw.k) {
      if (s(h, h) == h) {
        for (auto z : iw.preimages(h)) {
          ++r.checked;
          if (iw.label[power_to_idempotent(d, z)] != h) {
            r.violations.push_back("idempotent power of " + std::to_string(z)
                                   + " is not a preimage of " + element_name(h));
          }
        }
        continue;
      }
      if (!iw.in_k(s.inv[h])) {
        r.violations.push_back("inverse of " + element_name(h) + " is not in K");
        continue;
      }
      for (auto x : iw.preimages(h)) {
        for (auto y : iw.preimages(s.inv[h])) {
          ++r.checked;
          auto        c = d(x, y);
          std::size_t n = 1;
          while (d(power(d, c, n), power(d, c, n)) != power(d, c, n)) {
            ++n;
          }
          auto u = d(power(d, c, n), x);
          auto v = d(y, power(d, c, 2 * n - 1));
          if (iw.label[u] != h || iw.label[v] != s.inv[h] || d(d(u, v), u) != u
              || d(d(v, u), v) != v) {
            r.violations.push_back("recipe fails for x' = " + std::to_string(x)
                                   + ", y' = " + std::to_string(y));
          }
        }
      }
    }
    return r;
  }

  HMinimal h_minimal(InverseWrap const& iw, element_type h) {
    auto const& d   = iw.d;
    auto const& s   = iw.ambient;
    auto        pre = iw.preimages(h);
    auto        e   = iw.preimages(s(h, s.inv[h]));
    if (pre.empty() || e.empty()) {
      fail(ErrorCode::empty_preimage, "no preimage of " + element_name(pre.empty() ? h : s(h, s.inv[h])));
    }
    element_type ep = e.front();
    for (std::size_t i = 1; i < e.size(); ++i) {
      ep = d(ep, e[i]);
    }
    HMinimal r{d(ep, pre.front()), iw.label[d(ep, pre.front())] == h};
    auto     rr = d(r.element, d.inv[r.element]);
    for (auto other : pre) {
      r.minimal = r.minimal && leq_natural(d, rr, d(other, d.inv[other]));
    }
    return r;
  }

  namespace {

    // x is a preimage of h and x x^-1 <= y y^-1 for every preimage y of h.
    bool is_minimal_over(InverseWrap const& iw, element_type x, element_type h) {
      auto const& d = iw.d;
      if (iw.label[x] != h) {
        return false;
      }
      auto xx = d(x, d.inv[x]);
      for (auto y : iw.preimages(h)) {
        if (!leq_natural(d, xx, d(y, d.inv[y]))) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  LemmaReport check_hmin_lemmas(InverseWrap const& iw) {
    auto const& d = iw.d;
    auto const& s = iw.ambient;
    if (!is_symmetrised(s, iw.k)) {
      fail(ErrorCode::precondition_failed, "K is not symmetrised");
    }
    LemmaReport r;
    for (auto h : iw.k) {
      auto const name = element_name(h);
      auto       hm   = h_minimal(iw, h);
      auto       x    = hm.element;
      auto       xi   = d.inv[x];
      r.checked += 4;
      if (!hm.minimal) {
        r.violations.push_back("computed element is not " + name + "-minimal");
      }
      if (!is_minimal_over(iw, xi, s.inv[h])) {
        r.violations.push_back("inverse of the " + name + "-minimal element is not minimal");
      }
      if (!is_minimal_over(iw, d(x, xi), s(h, s.inv[h]))) {
        r.violations.push_back("h'h'^-1 is not hh^-1-minimal for h = " + name);
      }
      if (!is_minimal_over(iw, d(xi, x), s(s.inv[h], h))) {
        r.violations.push_back("h'^-1h' is not h^-1h-minimal for h = " + name);
      }
      if (s(h, h) == h) {
        ++r.checked;
        auto pre = iw.preimages(h);
        auto idem = std::count_if(pre.begin(), pre.end(), [&](element_type z) { return d(z, z) == z; });
        if (idem != 1) {
          r.violations.push_back(std::to_string(idem) + " idempotent preimages of " + name);
        }
      }
    }
    return r;
  }

  IlefFromWrap ilef_from_wrap(InverseWrap const& iw,
                              std::optional<std::vector<element_type>> h,
                              std::size_t power_bound) {
    auto const& d = iw.d;
    auto const& s = iw.ambient;
    if (d.order() > 64) {
      fail(ErrorCode::bound_exceeded, "subsets of D are bitmasks of at most 64 elements");
    }
    for (auto e : idempotents(s.cayley)) {
      if (!iw.in_k(e)) {
        fail(ErrorCode::precondition_failed,
             "idempotent " + element_name(e) + " of the ambient is not in K");
      }
    }
    if (!is_accurate_tight(to_wrap_instance(iw), inverse_designation(iw))) {
      fail(ErrorCode::precondition_failed, "wrap is not tight");
    }
    IlefFromWrap r;
    r.h = h ? *h : iw.k;
    for (auto x : r.h) {
      if (!iw.in_k(x)) {
        fail(ErrorCode::invalid_input, element_name(x) + " is not in K");
      }
    }
    auto q = [&](element_type x) {
      Subset bits = 0;
      for (auto p : iw.preimages(x)) {
        bits |= Subset(1) << p;
      }
      return bits;
    };
    for (auto e : idempotents(s.cayley)) {
      r.m |= q(e);
    }
    for (auto x : r.h) {
      r.images.push_back(subset_product(d.cayley, q(x), r.m));
    }
    r.injective = std::set<Subset>(r.images.begin(), r.images.end()).size() == r.h.size();
    if (!r.injective) {
      r.failures.push_back("two elements have the same image");
    }
    r.multiplicative = true;
    for (std::size_t i = 0; i < r.h.size(); ++i) {
      for (std::size_t j = 0; j < r.h.size(); ++j) {
        auto it = std::find(r.h.begin(), r.h.end(), s(r.h[i], r.h[j]));
        if (it == r.h.end()) {
          continue;
        }
        if (subset_product(d.cayley, r.images[i], r.images[j])
            != r.images[std::size_t(it - r.h.begin())]) {
          r.multiplicative = false;
          r.failures.push_back("not multiplicative at " + element_name(r.h[i]) + ", "
                               + element_name(r.h[j]));
        }
      }
    }
    if (d.order() <= power_bound) {
      r.power = power_semigroup(d.cayley, power_bound);
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  CayleyTable adjoin_zero(CayleyTable const& table) {
    std::size_t const         n = table.order() + 1;
    std::vector<element_type> flat(n * n, element_type(n - 1));
    for (element_type x = 0; x + 1 < n; ++x) {
      for (element_type y = 0; y + 1 < n; ++y) {
        flat[x * n + y] = table(x, y);
      }
    }
    return CayleyTable::unchecked(n, std::move(flat));
  }

  CayleyTable direct_product(CayleyTable const& s, CayleyTable const& t) {
    std::size_t const         a = s.order(), b = t.order(), n = a * b;
    std::vector<element_type> flat(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto first  = s(element_type(x % a), element_type(y % a));
        auto second = t(element_type(x / a), element_type(y / a));
        flat[x * n + y] = element_type(first + a * second);
      }
    }
    return CayleyTable::unchecked(n, std::move(flat));
  }

  InverseWrap inverse_self_wrap(InverseTable const& s, std::vector<element_type> const& k) {
    std::vector<element_type> label(s.order());
    for (element_type x = 0; x < s.order(); ++x) {
      label[x] = x;
    }
    std::set<element_type> sorted(k.begin(), k.end());
    return InverseWrap{s, s, {sorted.begin(), sorted.end()}, std::move(label)};
  }

  InverseWrap inverse_zero_wrap(InverseTable const& s, std::vector<element_type> const& k) {
    std::set<element_type>    sorted(k.begin(), k.end());
    std::vector<element_type> subset(sorted.begin(), sorted.end());
    auto const support = square_support(s.cayley, subset);
    EmbeddingWitness w{adjoin_zero(s.cayley), std::nullopt, support};
    return inverse_wrap(truncation_wrap(s.cayley, subset, w), s);
  }

  InverseWrap inverse_product_wrap(InverseTable const& s,
                                   std::vector<element_type> const& k,
                                   CayleyTable const& t) {
    auto                      d = make_inverse_table(direct_product(s.cayley, t));
    std::vector<element_type> label(d.order());
    for (element_type x = 0; x < d.order(); ++x) {
      label[x] = element_type(x % s.order());
    }
    std::set<element_type> sorted(k.begin(), k.end());
    return InverseWrap{std::move(d), s, {sorted.begin(), sorted.end()}, std::move(label)};
  }

  CayleyTable two_element_semilattice() {
    return CayleyTable::make({{0, 1}, {1, 1}});
  }

  CayleyTable cyclic_group(std::size_t n) {
    if (n == 0) {
      fail(ErrorCode::invalid_input, "group of order 0");
    }
    std::vector<element_type> flat(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        flat[x * n + y] = element_type((x + y) % n);
      }
    }
    return CayleyTable::unchecked(n, std::move(flat));
  }

  CayleyTable chain_semilattice(std::size_t n) {
    if (n == 0) {
      fail(ErrorCode::invalid_input, "semilattice of order 0");
    }
    std::vector<element_type> flat(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        flat[x * n + y] = element_type(std::min(x, y));
      }
    }
    return CayleyTable::unchecked(n, std::move(flat));
  }

  PartialBijectionSemigroup brandt_b2() {
    int const                     u = PartialBijection::undefined;
    std::vector<PartialBijection> elements{
        PartialBijection(2, {u, u}),
        PartialBijection(2, {0, u}),
        PartialBijection(2, {1, u}),
        PartialBijection(2, {u, 0}),
        PartialBijection(2, {u, 1}),
    };
    auto table = pb_table(elements);
    return {std::move(elements), std::move(table)};
  }

}  // namespace lefkit
