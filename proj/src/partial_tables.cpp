#include "lefkit/partial_tables.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lefkit/error.hpp"

namespace lefkit {

  ////////////////////////////////////////////////////////////////////////
  // PartialTable
  ////////////////////////////////////////////////////////////////////////

  PartialTable::PartialTable(std::vector<std::string> names,
                             std::vector<std::optional<std::size_t>> product,
                             std::optional<std::vector<std::string>> ambient,
                             OutsideKind outside,
                             std::string sink)
      : _names(std::move(names)),
        _product(std::move(product)),
        _ambient(std::move(ambient)),
        _outside(outside),
        _sink(std::move(sink)) {
    std::size_t const t = _names.size();
    if (t == 0) {
      fail(ErrorCode::invalid_input, "partial table with no elements");
    }
    std::set<std::string> distinct(_names.begin(), _names.end());
    if (distinct.size() != t) {
      fail(ErrorCode::duplicate_element, "repeated element name");
    }
    if (_product.size() != t * t) {
      fail(ErrorCode::invalid_input, "product table has wrong size");
    }
    for (auto const& p : _product) {
      if (p && *p >= t) {
        fail(ErrorCode::invalid_input, "product index out of range");
      }
    }
    if (_ambient) {
      if (_ambient->size() != t * t) {
        fail(ErrorCode::invalid_input, "ambient table has wrong size");
      }
      for (std::size_t k = 0; k < t * t; ++k) {
        auto const& value = (*_ambient)[k];
        auto        idx   = index_of(value);
        if (_product[k] ? idx != _product[k] : idx.has_value()) {
          fail(ErrorCode::invalid_input,
               "ambient value " + value + " disagrees with the partial product");
        }
      }
    }
    if (_outside == OutsideKind::concrete) {
      if (distinct.count(_sink) != 0) {
        fail(ErrorCode::invalid_input, "sink must lie outside the set");
      }
    }
  }

  std::optional<std::size_t> PartialTable::index_of(std::string const& name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      return std::nullopt;
    }
    return std::size_t(it - _names.begin());
  }

  std::string const& PartialTable::ambient(std::size_t i, std::size_t j) const {
    if (!_ambient) {
      fail(ErrorCode::undecided_equality, "no ambient products are known");
    }
    return (*_ambient)[i * size() + j];
  }

  std::optional<PartialViolation> check_partial_associativity(PartialTable const& pt) {
    std::size_t const t = pt.size();
    for (std::size_t x = 0; x < t; ++x) {
      for (std::size_t y = 0; y < t; ++y) {
        auto xy = pt.product(x, y);
        if (!xy) {
          continue;
        }
        for (std::size_t z = 0; z < t; ++z) {
          auto yz = pt.product(y, z);
          if (!yz) {
            continue;
          }
          auto left  = pt.product(*xy, z);
          auto right = pt.product(x, *yz);
          if (left && right && *left != *right) {
            return PartialViolation{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  PartialTable induce(Presentation const& p,
                      std::vector<Word> const& words,
                      std::size_t max_len,
                      std::size_t max_steps) {
    auto const& rs = p.system;
    if (words.empty()) {
      fail(ErrorCode::invalid_input, "no words");
    }
    std::vector<Word> canon;
    for (auto const& w : words) {
      rs.validate(w);
      canon.push_back(p.complete ? normal_form(w, rs)
                                 : normal_form(w, rs, 10 * (w.size() + 1)));
    }
    std::size_t const t = canon.size();
    auto equal = [&](Word const& u, Word const& v) -> bool {
      auto r = words_equal(u, v, rs, p.complete, max_len, max_steps);
      if (!r) {
        fail(ErrorCode::undecided_equality,
             "cannot decide " + word_text(u) + " = " + word_text(v) + " in "
                 + p.name);
      }
      return *r;
    };
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = i + 1; j < t; ++j) {
        if (equal(canon[i], canon[j])) {
          fail(ErrorCode::duplicate_element,
               word_text(words[i]) + " and " + word_text(words[j])
                   + " are the same element of " + p.name);
        }
      }
    }
    std::vector<std::string> names;
    for (auto const& c : canon) {
      names.push_back(word_text(c));
    }
    std::vector<std::optional<std::size_t>> product(t * t);
    std::optional<std::vector<std::string>> ambient;
    if (p.complete) {
      ambient.emplace(t * t);
    }
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < t; ++j) {
        Word w = canon[i] + canon[j];
        if (p.complete) {
          Word nf = normal_form(w, rs);
          for (std::size_t k = 0; k < t; ++k) {
            if (canon[k] == nf) {
              product[i * t + j] = k;
            }
          }
          (*ambient)[i * t + j] = word_text(nf);
        } else {
          for (std::size_t k = 0; k < t && !product[i * t + j]; ++k) {
            if (equal(w, canon[k])) {
              product[i * t + j] = k;
            }
          }
        }
      }
    }
    return PartialTable(std::move(names),
                        std::move(product),
                        std::move(ambient),
                        OutsideKind::symbolic,
                        bottom_name);
  }

  std::string element_name(element_type i) {
    return "s" + std::to_string(i);
  }

  PartialTable induce_from_table(CayleyTable const& table,
                                 std::vector<element_type> const& subset) {
    std::size_t const   n = table.order();
    std::vector<int>    position(n, -1);
    for (std::size_t k = 0; k < subset.size(); ++k) {
      if (subset[k] >= n) {
        fail(ErrorCode::invalid_input, "subset element out of range");
      }
      if (position[subset[k]] != -1) {
        fail(ErrorCode::duplicate_element, "repeated subset element");
      }
      position[subset[k]] = int(k);
    }
    std::size_t const                       t = subset.size();
    std::vector<std::string>                names;
    std::vector<std::optional<std::size_t>> product(t * t);
    std::vector<std::string>                ambient(t * t);
    for (auto s : subset) {
      names.push_back(element_name(s));
    }
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < t; ++j) {
        auto v = table(subset[i], subset[j]);
        if (position[v] >= 0) {
          product[i * t + j] = std::size_t(position[v]);
        }
        ambient[i * t + j] = element_name(v);
      }
    }
    OutsideKind outside = OutsideKind::none;
    std::string sink;
    for (element_type x = 0; x < n; ++x) {
      if (position[x] < 0) {
        outside = OutsideKind::concrete;
        sink    = element_name(x);
        break;
      }
    }
    return PartialTable(std::move(names),
                        std::move(product),
                        std::move(ambient),
                        outside,
                        std::move(sink));
  }

  ////////////////////////////////////////////////////////////////////////
  // Embeddings
  ////////////////////////////////////////////////////////////////////////

  std::string EmbedSpace::describe() const {
    if (kind == Kind::orders) {
      return "all labeled semigroups of order <= " + std::to_string(bound);
    }
    return "full transformation monoids of degree <= " + std::to_string(bound)
           + " (hence every transformation closure of those degrees)";
  }

  namespace {

    struct Constraint {
      std::size_t x, y, z;
    };

    // Constraints grouped by the largest element they mention, so each is
    // checked as soon as its last element has been assigned.
    std::vector<std::vector<Constraint>> group_constraints(PartialTable const& pt) {
      std::size_t const                    t = pt.size();
      std::vector<std::vector<Constraint>> by_last(t);
      for (std::size_t x = 0; x < t; ++x) {
        for (std::size_t y = 0; y < t; ++y) {
          if (auto z = pt.product(x, y)) {
            by_last[std::max({x, y, *z})].push_back(Constraint{x, y, *z});
          }
        }
      }
      return by_last;
    }

    class AssignmentSearch {
     public:
      AssignmentSearch(PartialTable const& pt)
          : _t(pt.size()), _by_last(group_constraints(pt)) {}

      std::optional<std::vector<element_type>> run(CayleyTable const& target) {
        if (target.order() < _t) {
          return std::nullopt;
        }
        _target = &target;
        _assign.assign(_t, 0);
        _used.assign(target.order(), false);
        if (extend(0)) {
          return _assign;
        }
        return std::nullopt;
      }

     private:
      bool extend(std::size_t e) {
        if (e == _t) {
          return true;
        }
        auto const& table = *_target;
        for (element_type v = 0; v < table.order(); ++v) {
          if (_used[v]) {
            continue;
          }
          _assign[e] = v;
          bool ok    = true;
          for (auto const& c : _by_last[e]) {
            if (table(_assign[c.x], _assign[c.y]) != _assign[c.z]) {
              ok = false;
              break;
            }
          }
          if (ok) {
            _used[v] = true;
            if (extend(e + 1)) {
              return true;
            }
            _used[v] = false;
          }
        }
        return false;
      }

      std::size_t                          _t;
      std::vector<std::vector<Constraint>> _by_last;
      CayleyTable const*                   _target = nullptr;
      std::vector<element_type>            _assign;
      std::vector<bool>                    _used;
    };

  }  // namespace

  SearchOutcome<EmbeddingWitness> embed_search(PartialTable const& pt,
                                               EmbedSpace space,
                                               EmbedLimits const& limits) {
    SearchOutcome<EmbeddingWitness> outcome{std::nullopt, {}, 0};
    AssignmentSearch                search(pt);
    if (space.kind == EmbedSpace::Kind::orders) {
      if (space.bound > limits.max_order) {
        fail(ErrorCode::bound_exceeded,
             "target order " + std::to_string(space.bound) + " exceeds limit "
                 + std::to_string(limits.max_order));
      }
      EnumerationBounds bounds;
      bounds.max_labeled = limits.max_order;
      for (std::size_t k = 1; k <= space.bound && !outcome.found(); ++k) {
        if (k < pt.size()) {
          continue;
        }
        for_each_semigroup(
            k,
            EnumerationMode::labeled,
            [&](CayleyTable const& target) {
              ++outcome.candidates;
              if (auto a = search.run(target)) {
                outcome.witness = EmbeddingWitness{target, std::nullopt, *a};
                return false;
              }
              return true;
            },
            bounds);
      }
    } else {
      if (space.bound > limits.max_degree) {
        fail(ErrorCode::bound_exceeded,
             "transformation degree " + std::to_string(space.bound)
                 + " exceeds limit " + std::to_string(limits.max_degree));
      }
      for (std::size_t d = 1; d <= space.bound && !outcome.found(); ++d) {
        auto full = full_transformation_monoid(d);
        ++outcome.candidates;
        if (auto a = search.run(full.cayley())) {
          outcome.witness = EmbeddingWitness{full.cayley(), full.elements(), *a};
        }
      }
    }
    if (!outcome.found()) {
      outcome.exhausted = space.describe();
    }
    return outcome;
  }

  bool verify_embedding(PartialTable const& pt, EmbeddingWitness const& w) {
    auto const& target = w.target;
    if (w.assignment.size() != pt.size()) {
      return false;
    }
    std::set<element_type> images;
    for (auto v : w.assignment) {
      if (v >= target.order() || !images.insert(v).second) {
        return false;
      }
    }
    for (std::size_t x = 0; x < pt.size(); ++x) {
      for (std::size_t y = 0; y < pt.size(); ++y) {
        if (auto z = pt.product(x, y)) {
          if (target(w.assignment[x], w.assignment[y]) != w.assignment[*z]) {
            return false;
          }
        }
      }
    }
    if (w.transformations) {
      auto const& ts = *w.transformations;
      if (ts.size() != target.order()) {
        return false;
      }
      for (std::size_t i = 0; i < ts.size(); ++i) {
        for (std::size_t j = 0; j < ts.size(); ++j) {
          if (ts[i].degree() != ts[j].degree()
              || ts[i].then(ts[j]) != ts[target(element_type(i), element_type(j))]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  EmbeddingWitness free_truncation_witness(std::vector<Word> const& words,
                                           std::size_t max_len) {
    std::string letters;
    for (auto const& w : words) {
      if (w.empty()) {
        fail(ErrorCode::invalid_input, "empty word in a free semigroup");
      }
      if (w.size() > max_len) {
        fail(ErrorCode::word_too_long,
             w + " is longer than " + std::to_string(max_len));
      }
      letters += w;
    }
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());

    // shortlex list of all words of length 1..max_len
    std::vector<Word> all;
    std::vector<Word> layer{Word()};
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<Word> next;
      for (auto const& w : layer) {
        for (char c : letters) {
          next.push_back(w + c);
        }
      }
      all.insert(all.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    std::map<Word, element_type> index;
    for (std::size_t i = 0; i < all.size(); ++i) {
      index.emplace(all[i], element_type(i));
    }
    auto const                zero = element_type(all.size());
    std::size_t const         n    = all.size() + 1;
    std::vector<element_type> flat(n * n, zero);
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (all[i].size() + all[j].size() <= max_len) {
          flat[i * n + j] = index.at(all[i] + all[j]);
        }
      }
    }
    EmbeddingWitness w{CayleyTable::unchecked(n, std::move(flat)), std::nullopt, {}};
    for (auto const& word : words) {
      w.assignment.push_back(index.at(word));
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Wraps
  ////////////////////////////////////////////////////////////////////////

  std::string label_text(PartialTable const& pt, Label const& l) {
    switch (l.kind) {
      case Label::Kind::in_set:
        return pt.name(l.index);
      case Label::Kind::outside:
        return l.value;
      case Label::Kind::bottom:
        return bottom_name;
    }
    return {};
  }

  std::vector<element_type> WrapInstance::preimages(std::size_t i) const {
    std::vector<element_type> result;
    for (element_type x = 0; x < labels.size(); ++x) {
      if (labels[x].is_in() && labels[x].index == i) {
        result.push_back(x);
      }
    }
    return result;
  }

  std::vector<element_type> WrapInstance::set_preimages() const {
    std::vector<element_type> result;
    for (element_type x = 0; x < labels.size(); ++x) {
      if (labels[x].is_in()) {
        result.push_back(x);
      }
    }
    return result;
  }

  namespace {

    Label expected_label(PartialTable const& pt, std::string const& value) {
      if (auto idx = pt.index_of(value)) {
        return Label::in(*idx);
      }
      return Label::out(value);
    }

    Label sink_label(PartialTable const& pt) {
      switch (pt.outside()) {
        case OutsideKind::symbolic:
          return Label::bottom();
        case OutsideKind::concrete:
          return Label::out(pt.sink());
        case OutsideKind::none:
          break;
      }
      fail(ErrorCode::precondition_failed,
           "the ambient has no element outside the set to use as a sink");
    }

  }  // namespace

  std::optional<std::string> wrap_violation(WrapInstance const& wi) {
    auto const& pt = wi.h;
    auto const& d  = wi.d;
    if (wi.labels.size() != d.order()) {
      return "labelling has " + std::to_string(wi.labels.size())
             + " entries for a semigroup of order " + std::to_string(d.order());
    }
    for (element_type x = 0; x < d.order(); ++x) {
      auto const& l = wi.labels[x];
      if (l.is_in() && l.index >= pt.size()) {
        return "label of " + std::to_string(x) + " out of range";
      }
      if (l.kind == Label::Kind::outside && pt.index_of(l.value)) {
        return "element " + std::to_string(x) + " labelled outside with a set value";
      }
      if (l.kind == Label::Kind::bottom && pt.outside() != OutsideKind::symbolic) {
        return "symbolic label on a finite ambient";
      }
    }
    for (std::size_t i = 0; i < pt.size(); ++i) {
      if (wi.preimages(i).empty()) {
        return "no preimage of " + pt.name(i);
      }
    }
    for (element_type x = 0; x < d.order(); ++x) {
      if (!wi.labels[x].is_in()) {
        continue;
      }
      for (element_type y = 0; y < d.order(); ++y) {
        if (!wi.labels[y].is_in()) {
          continue;
        }
        auto const& value = pt.ambient(wi.labels[x].index, wi.labels[y].index);
        if (wi.labels[d(x, y)] != expected_label(pt, value)) {
          return "label of " + std::to_string(x) + "*" + std::to_string(y)
                 + " is " + label_text(pt, wi.labels[d(x, y)]) + ", expected "
                 + value;
        }
      }
    }
    return std::nullopt;
  }

  bool wrap_verify(WrapInstance const& wi) {
    return !wrap_violation(wi).has_value();
  }

  WrapInstance self_wrap(CayleyTable const& table,
                         std::vector<element_type> const& subset) {
    WrapInstance wi{table, induce_from_table(table, subset), {}};
    for (element_type x = 0; x < table.order(); ++x) {
      auto it = std::find(subset.begin(), subset.end(), x);
      wi.labels.push_back(it != subset.end()
                              ? Label::in(std::size_t(it - subset.begin()))
                              : Label::out(element_name(x)));
    }
    return wi;
  }

  std::vector<element_type> square_support(CayleyTable const& table,
                                           std::vector<element_type> const& subset) {
    std::vector<element_type> k = subset;
    for (auto x : subset) {
      for (auto y : subset) {
        auto p = table(x, y);
        if (std::find(k.begin(), k.end(), p) == k.end()) {
          k.push_back(p);
        }
      }
    }
    std::sort(k.begin() + std::ptrdiff_t(subset.size()), k.end());
    return k;
  }

  WrapInstance truncation_wrap(CayleyTable const& table,
                               std::vector<element_type> const& subset,
                               EmbedSpace space) {
    auto outcome = embed_search(induce_from_table(table, square_support(table, subset)), space);
    if (!outcome.found()) {
      fail(ErrorCode::precondition_failed,
           "no embedding of H u H^2 in " + space.describe());
    }
    return truncation_wrap(table, subset, *outcome.witness);
  }

  WrapInstance truncation_wrap(CayleyTable const& table,
                               std::vector<element_type> const& subset,
                               EmbeddingWitness const& w) {
    auto const k = square_support(table, subset);
    if (!verify_embedding(induce_from_table(table, k), w)) {
      fail(ErrorCode::precondition_failed, "not an embedding of H u H^2");
    }
    WrapInstance wi{w.target, induce_from_table(table, subset), {}};
    wi.labels.assign(w.target.order(), Label::bottom());
    std::vector<bool> hit(w.target.order(), false);
    for (std::size_t i = 0; i < k.size(); ++i) {
      auto x = w.assignment[i];
      hit[x] = true;
      wi.labels[x] = i < subset.size() ? Label::in(i) : Label::out(element_name(k[i]));
    }
    for (element_type x = 0; x < w.target.order(); ++x) {
      if (!hit[x]) {
        wi.labels[x] = sink_label(wi.h);
      }
    }
    return wi;
  }

  namespace {

    // Labels are explored per D-element: in-set indices first, then "outside".
    // Values of products of in-set labelled pairs are interned: ids below t are
    // set elements, larger ids are outside values.
    class WrapSearch {
     public:
      static constexpr int unassigned = -2;
      static constexpr int outside    = -1;

      explicit WrapSearch(PartialTable const& pt) : _pt(pt), _t(pt.size()) {
        _value_id.resize(_t * _t);
        std::map<std::string, int> ids;
        for (std::size_t i = 0; i < _t; ++i) {
          for (std::size_t j = 0; j < _t; ++j) {
            auto const& v = pt.ambient(i, j);
            if (auto idx = pt.index_of(v)) {
              _value_id[i * _t + j] = int(*idx);
            } else {
              auto [it, inserted] = ids.emplace(v, int(_t + _values.size()));
              if (inserted) {
                _values.push_back(v);
              }
              _value_id[i * _t + j] = it->second;
            }
          }
        }
      }

      std::optional<std::vector<Label>> run(CayleyTable const& d) {
        if (d.order() < _t) {
          return std::nullopt;
        }
        _d = &d;
        _lab.assign(d.order(), unassigned);
        _cover.assign(_t, 0);
        _uncovered = _t;
        _forced.assign(d.order(), -1);
        if (extend(0)) {
          return _result;
        }
        return std::nullopt;
      }

     private:
      // Checks all constraints among elements [0, e]; fills _forced.
      bool consistent(std::size_t e) {
        auto const& d = *_d;
        std::fill(_forced.begin(), _forced.end(), -1);
        for (std::size_t x = 0; x <= e; ++x) {
          if (_lab[x] < 0) {
            continue;
          }
          for (std::size_t y = 0; y <= e; ++y) {
            if (_lab[y] < 0) {
              continue;
            }
            int  v = _value_id[std::size_t(_lab[x]) * _t + std::size_t(_lab[y])];
            auto z = d(element_type(x), element_type(y));
            if (_forced[z] != -1 && _forced[z] != v) {
              return false;
            }
            _forced[z] = v;
            if (z <= e) {
              bool in = v < int(_t);
              if (in ? _lab[z] != v : _lab[z] != outside) {
                return false;
              }
            }
          }
        }
        return true;
      }

      bool extend(std::size_t e) {
        auto const& d = *_d;
        if (e == d.order()) {
          return _uncovered == 0 && finish();
        }
        for (int choice = 0; choice <= int(_t); ++choice) {
          int lab = choice < int(_t) ? choice : outside;
          _lab[e] = lab;
          if (lab >= 0 && _cover[std::size_t(lab)]++ == 0) {
            --_uncovered;
          }
          bool ok = _uncovered <= d.order() - e - 1 && consistent(e);
          if (ok && extend(e + 1)) {
            return true;
          }
          if (lab >= 0 && --_cover[std::size_t(lab)] == 0) {
            ++_uncovered;
          }
        }
        _lab[e] = unassigned;
        return false;
      }

      bool finish() {
        consistent(_d->order() - 1);
        _result.clear();
        for (std::size_t x = 0; x < _d->order(); ++x) {
          if (_lab[x] >= 0) {
            _result.push_back(Label::in(std::size_t(_lab[x])));
          } else if (_forced[x] >= int(_t)) {
            _result.push_back(Label::out(_values[std::size_t(_forced[x]) - _t]));
          } else if (_pt.outside() == OutsideKind::none) {
            return false;
          } else {
            _result.push_back(sink_label(_pt));
          }
        }
        return true;
      }

      PartialTable const&      _pt;
      std::size_t              _t;
      std::vector<int>         _value_id;
      std::vector<std::string> _values;
      CayleyTable const*       _d = nullptr;
      std::vector<int>         _lab;
      std::vector<std::size_t> _cover;
      std::size_t              _uncovered = 0;
      std::vector<int>         _forced;
      std::vector<Label>       _result;
    };

  }  // namespace

  SearchOutcome<WrapInstance> wrap_search(PartialTable const& pt,
                                          std::size_t max_order,
                                          EmbedLimits const& limits) {
    if (!pt.has_ambient()) {
      fail(ErrorCode::undecided_equality, "wrap search needs ambient products");
    }
    if (max_order > limits.max_order) {
      fail(ErrorCode::bound_exceeded,
           "wrap order " + std::to_string(max_order) + " exceeds limit "
               + std::to_string(limits.max_order));
    }
    SearchOutcome<WrapInstance> outcome{std::nullopt, {}, 0};
    WrapSearch                  search(pt);
    EnumerationBounds           bounds;
    bounds.max_labeled = limits.max_order;
    for (std::size_t k = pt.size(); k <= max_order && !outcome.found(); ++k) {
      for_each_semigroup(
          k,
          EnumerationMode::labeled,
          [&](CayleyTable const& d) {
            ++outcome.candidates;
            if (auto labels = search.run(d)) {
              outcome.witness = WrapInstance{d, pt, std::move(*labels)};
              return false;
            }
            return true;
          },
          bounds);
    }
    if (!outcome.found()) {
      outcome.exhausted = "all labeled semigroups D of order <= "
                          + std::to_string(max_order) + " with every labelling";
    }
    return outcome;
  }

  std::vector<element_type> default_designated(WrapInstance const& wi) {
    std::vector<element_type> result;
    for (std::size_t i = 0; i < wi.h.size(); ++i) {
      auto pre = wi.preimages(i);
      if (pre.empty()) {
        fail(ErrorCode::empty_preimage, "no preimage of " + wi.h.name(i));
      }
      result.push_back(pre.front());
    }
    return result;
  }

  std::vector<element_type>
  accurate_set(WrapInstance const& wi, std::vector<element_type> const& designated) {
    if (designated.size() != wi.h.size()) {
      fail(ErrorCode::invalid_input, "need one designated preimage per element");
    }
    std::vector<bool> accurate(wi.d.order(), false);
    std::vector<element_type> members;
    for (std::size_t i = 0; i < designated.size(); ++i) {
      auto x = designated[i];
      if (x >= wi.d.order() || wi.labels[x] != Label::in(i)) {
        fail(ErrorCode::invalid_input,
             "designated element is not a preimage of " + wi.h.name(i));
      }
      if (!accurate[x]) {
        accurate[x] = true;
        members.push_back(x);
      }
    }
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = 0; b < members.size(); ++b) {
          auto z = wi.d(members[a], members[b]);
          if (!accurate[z] && wi.labels[z].is_in()) {
            accurate[z] = true;
            members.push_back(z);
            grew = true;
          }
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  WrapInstance tighten(WrapInstance const& wi,
                       std::optional<std::vector<element_type>> designated) {
    WrapInstance result = wi;
    while (true) {
      auto chosen   = designated ? *designated : default_designated(result);
      auto accurate = accurate_set(result, chosen);
      bool changed  = false;
      for (auto x : result.set_preimages()) {
        if (!std::binary_search(accurate.begin(), accurate.end(), x)) {
          result.labels[x] = sink_label(result.h);
          changed          = true;
        }
      }
      if (!changed) {
        return result;
      }
    }
  }

  bool is_accurate_tight(WrapInstance const& wi,
                         std::optional<std::vector<element_type>> designated) {
    auto chosen = designated ? *designated : default_designated(wi);
    return accurate_set(wi, chosen) == wi.set_preimages();
  }

}  // namespace lefkit
