#include "lefkit/finite_core.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "lefkit/error.hpp"

namespace lefkit {

  ////////////////////////////////////////////////////////////////////////
  // CayleyTable
  ////////////////////////////////////////////////////////////////////////

  CayleyTable
  CayleyTable::make(std::vector<std::vector<element_type>> const& rows) {
    if (auto v = verify_associativity(rows)) {
      fail(ErrorCode::malformed_table,
           "table is not associative at (" + std::to_string(v->i) + ", "
               + std::to_string(v->j) + ", " + std::to_string(v->k) + ")");
    }
    std::vector<element_type> flat;
    flat.reserve(rows.size() * rows.size());
    for (auto const& row : rows) {
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return CayleyTable(rows.size(), std::move(flat));
  }

  CayleyTable CayleyTable::make(std::size_t n, std::vector<element_type> flat) {
    if (flat.size() != n * n) {
      fail(ErrorCode::malformed_table, "flat table has wrong length");
    }
    std::vector<std::vector<element_type>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
      rows[i].assign(flat.begin() + i * n, flat.begin() + (i + 1) * n);
    }
    return make(rows);
  }

  CayleyTable CayleyTable::unchecked(std::size_t n,
                                     std::vector<element_type> flat) {
    return CayleyTable(n, std::move(flat));
  }

  std::vector<std::vector<element_type>> CayleyTable::rows() const {
    std::vector<std::vector<element_type>> result(_n);
    for (std::size_t i = 0; i < _n; ++i) {
      result[i].assign(_flat.begin() + i * _n, _flat.begin() + (i + 1) * _n);
    }
    return result;
  }

  element_type CayleyTable::product(std::span<element_type const> xs) const {
    if (xs.empty()) {
      fail(ErrorCode::invalid_input, "empty product in a semigroup");
    }
    element_type acc = xs.front();
    for (auto x : xs.subspan(1)) {
      acc = (*this)(acc, x);
    }
    return acc;
  }

  element_type CayleyTable::power(element_type x, std::size_t k) const {
    if (k == 0) {
      fail(ErrorCode::invalid_input, "zeroth power in a semigroup");
    }
    element_type acc = x;
    for (std::size_t i = 1; i < k; ++i) {
      acc = (*this)(acc, x);
    }
    return acc;
  }

  std::optional<AssociativityViolation>
  verify_associativity(std::vector<std::vector<element_type>> const& rows) {
    std::size_t const n = rows.size();
    if (n == 0) {
      fail(ErrorCode::malformed_table, "table has order 0");
    }
    for (auto const& row : rows) {
      if (row.size() != n) {
        fail(ErrorCode::malformed_table, "table is not square");
      }
      for (auto v : row) {
        if (v >= n) {
          fail(ErrorCode::malformed_table,
               "entry " + std::to_string(v) + " out of range");
        }
      }
    }
    for (element_type i = 0; i < n; ++i) {
      for (element_type j = 0; j < n; ++j) {
        for (element_type k = 0; k < n; ++k) {
          if (rows[rows[i][j]][k] != rows[i][rows[j][k]]) {
            return AssociativityViolation{i, j, k};
          }
        }
      }
    }
    return std::nullopt;
  }

  IndexPeriod index_period(CayleyTable const& table, element_type s) {
    if (s >= table.order()) {
      fail(ErrorCode::invalid_input, "element out of range");
    }
    // first_seen[x] = least exponent k with s^k = x
    std::vector<std::size_t> first_seen(table.order(), 0);
    element_type             x = s;
    for (std::size_t k = 1;; ++k) {
      if (first_seen[x] != 0) {
        return IndexPeriod{first_seen[x], k - first_seen[x]};
      }
      first_seen[x] = k;
      x             = table(x, s);
    }
  }

  std::vector<element_type> idempotents(CayleyTable const& table) {
    std::vector<element_type> result;
    for (element_type e = 0; e < table.order(); ++e) {
      if (table(e, e) == e) {
        result.push_back(e);
      }
    }
    return result;
  }

  std::vector<element_type>
  subsemigroup_closure(CayleyTable const& table,
                       std::vector<element_type> const& seed) {
    if (seed.empty()) {
      fail(ErrorCode::invalid_input, "seed must be nonempty");
    }
    std::vector<bool>         in(table.order(), false);
    std::vector<element_type> members;
    for (auto x : seed) {
      if (x >= table.order()) {
        fail(ErrorCode::invalid_input, "seed element out of range");
      }
      if (!in[x]) {
        in[x] = true;
        members.push_back(x);
      }
    }
    // products of members with the seed generate everything
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (auto g : seed) {
        auto p = table(members[i], g);
        if (!in[p]) {
          in[p] = true;
          members.push_back(p);
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  Subset subset_product(CayleyTable const& table, Subset lhs, Subset rhs) {
    Subset result = 0;
    for (Subset a = lhs; a != 0; a &= a - 1) {
      auto x = static_cast<element_type>(std::countr_zero(a));
      for (Subset b = rhs; b != 0; b &= b - 1) {
        auto y = static_cast<element_type>(std::countr_zero(b));
        result |= Subset(1) << table(x, y);
      }
    }
    return result;
  }

  CayleyTable power_semigroup(CayleyTable const& table, std::size_t bound) {
    std::size_t const n = table.order();
    if (n > bound || n > 20) {
      fail(ErrorCode::bound_exceeded,
           "power semigroup of order " + std::to_string(n) + " exceeds bound "
               + std::to_string(bound));
    }
    std::size_t const full = std::size_t(1) << n;
    // row[a * full + B] = {a} . B
    std::vector<Subset> row(n * full, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 1; b < full; ++b) {
        auto low = static_cast<element_type>(std::countr_zero(b));
        row[a * full + b] = row[a * full + (b & (b - 1))]
                            | (Subset(1) << table(element_type(a), low));
      }
    }
    std::size_t const         m = full - 1;
    std::vector<element_type> flat(m * m);
    std::vector<Subset>       col(full, 0);
    for (std::size_t b = 1; b < full; ++b) {
      col[0] = 0;
      for (std::size_t a = 1; a < full; ++a) {
        auto low = std::countr_zero(a);
        col[a]   = col[a & (a - 1)] | row[low * full + b];
        flat[(a - 1) * m + (b - 1)] = power_subset_element(col[a]);
      }
    }
    return CayleyTable::unchecked(m, std::move(flat));
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////

  CayleyTable relabel(CayleyTable const& table,
                      std::vector<element_type> const& perm) {
    std::size_t const         n = table.order();
    std::vector<element_type> flat(n * n);
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        flat[perm[x] * n + perm[y]] = perm[table(x, y)];
      }
    }
    return CayleyTable::unchecked(n, std::move(flat));
  }

  CayleyTable canonical_form(CayleyTable const& table) {
    std::vector<element_type> perm(table.order());
    std::iota(perm.begin(), perm.end(), 0);
    CayleyTable best = table;
    while (std::next_permutation(perm.begin(), perm.end())) {
      auto candidate = relabel(table, perm);
      if (candidate.flat() < best.flat()) {
        best = std::move(candidate);
      }
    }
    return best;
  }

  bool is_isomorphic(CayleyTable const& lhs, CayleyTable const& rhs) {
    return lhs.order() == rhs.order()
           && canonical_form(lhs) == canonical_form(rhs);
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Fills the table cell by cell in row-major order; after each assignment
    // every triple whose evaluation involves the new cell and is otherwise
    // fully defined is checked.
    class Enumerator {
     public:
      static constexpr int unset = -1;

      Enumerator(std::size_t n, EnumerationMode mode)
          : _n(n), _cells(n * n, unset), _iso(mode == EnumerationMode::up_to_isomorphism) {
        if (_iso) {
          std::vector<element_type> perm(n);
          std::iota(perm.begin(), perm.end(), 0);
          while (std::next_permutation(perm.begin(), perm.end())) {
            std::vector<element_type> inv(n);
            for (element_type i = 0; i < n; ++i) {
              inv[perm[i]] = i;
            }
            _perms.push_back(perm);
            _inverses.push_back(std::move(inv));
          }
        }
      }

      // Restrict the first cell to the given values (used for partitioning).
      void first_cell_values(std::vector<int> values) {
        _first_values = std::move(values);
      }

      std::size_t run(std::function<bool(CayleyTable const&)> const& visit) {
        _visit   = &visit;
        _count   = 0;
        _stopped = false;
        fill(0);
        return _count;
      }

     private:
      int at(std::size_t x, std::size_t y) const {
        return _cells[x * _n + y];
      }

      bool consistent(std::size_t i, std::size_t j) const {
        int const v = at(i, j);
        for (std::size_t z = 0; z < _n; ++z) {
          // (i j) z = i (j z)
          int vz = at(v, z), jz = at(j, z);
          if (vz != unset && jz != unset) {
            int r = at(i, jz);
            if (r != unset && r != vz) {
              return false;
            }
          }
          // (z i) j = z (i j)
          int zi = at(z, i), zv = at(z, v);
          if (zi != unset && zv != unset) {
            int l = at(zi, j);
            if (l != unset && l != zv) {
              return false;
            }
          }
        }
        for (std::size_t x = 0; x < _n; ++x) {
          for (std::size_t y = 0; y < _n; ++y) {
            // (x y) j with x y = i
            if (at(x, y) == int(i)) {
              int yj = at(y, j);
              if (yj != unset) {
                int r = at(x, yj);
                if (r != unset && r != v) {
                  return false;
                }
              }
            }
            // i (x y) with x y = j
            if (at(x, y) == int(j)) {
              int ix = at(i, x);
              if (ix != unset) {
                int l = at(ix, y);
                if (l != unset && l != v) {
                  return false;
                }
              }
            }
          }
        }
        return true;
      }

      // True if some relabelling is already known to be lexicographically
      // smaller than every completion of the current prefix [0, pos].
      bool dominated(std::size_t pos) const {
        for (std::size_t p = 0; p < _perms.size(); ++p) {
          auto const& perm = _perms[p];
          auto const& inv  = _inverses[p];
          for (std::size_t q = 0; q <= pos; ++q) {
            std::size_t a = q / _n, b = q % _n;
            std::size_t src = inv[a] * _n + inv[b];
            if (src > pos) {
              break;
            }
            int image = int(perm[_cells[src]]);
            if (image < _cells[q]) {
              return true;
            }
            if (image > _cells[q]) {
              break;
            }
          }
        }
        return false;
      }

      void fill(std::size_t pos) {
        if (_stopped) {
          return;
        }
        if (pos == _cells.size()) {
          std::vector<element_type> flat(_cells.begin(), _cells.end());
          ++_count;
          if (!(*_visit)(CayleyTable::unchecked(_n, std::move(flat)))) {
            _stopped = true;
          }
          return;
        }
        std::size_t i = pos / _n, j = pos % _n;
        for (int v = 0; v < int(_n); ++v) {
          if (pos == 0 && !_first_values.empty()
              && std::find(_first_values.begin(), _first_values.end(), v)
                     == _first_values.end()) {
            continue;
          }
          _cells[pos] = v;
          if (consistent(i, j) && !(_iso && dominated(pos))) {
            fill(pos + 1);
            if (_stopped) {
              break;
            }
          }
        }
        _cells[pos] = unset;
      }

      std::size_t                                     _n;
      std::vector<int>                                _cells;
      bool                                            _iso;
      std::vector<std::vector<element_type>>          _perms;
      std::vector<std::vector<element_type>>          _inverses;
      std::vector<int>                                _first_values;
      std::function<bool(CayleyTable const&)> const*  _visit = nullptr;
      std::size_t                                     _count = 0;
      bool                                            _stopped = false;
    };

    void check_bounds(std::size_t n,
                      EnumerationMode mode,
                      EnumerationBounds const& bounds) {
      if (n == 0) {
        fail(ErrorCode::invalid_input, "order must be at least 1");
      }
      std::size_t limit = mode == EnumerationMode::labeled
                              ? bounds.max_labeled
                              : bounds.max_up_to_iso;
      if (n > limit) {
        fail(ErrorCode::bound_exceeded,
             "order " + std::to_string(n) + " exceeds enumeration bound "
                 + std::to_string(limit));
      }
    }

  }  // namespace

  std::size_t
  for_each_semigroup(std::size_t n,
                     EnumerationMode mode,
                     std::function<bool(CayleyTable const&)> const& visit,
                     EnumerationBounds const& bounds) {
    check_bounds(n, mode, bounds);
    Enumerator e(n, mode);
    return e.run(visit);
  }

  std::vector<CayleyTable> enumerate_semigroups(std::size_t n,
                                                EnumerationMode mode,
                                                EnumerationBounds const& bounds) {
    std::vector<CayleyTable> result;
    for_each_semigroup(
        n,
        mode,
        [&result](CayleyTable const& t) {
          result.push_back(t);
          return true;
        },
        bounds);
    return result;
  }

  std::size_t count_semigroups(std::size_t n,
                               EnumerationMode mode,
                               EnumerationBounds const& bounds) {
    return for_each_semigroup(
        n, mode, [](CayleyTable const&) { return true; }, bounds);
  }

  std::size_t
  for_each_semigroup_unordered(std::size_t n,
                               EnumerationMode mode,
                               std::function<void(CayleyTable const&)> const& visit,
                               std::size_t jobs,
                               EnumerationBounds const& bounds) {
    check_bounds(n, mode, bounds);
    jobs = std::clamp<std::size_t>(jobs, 1, n);
    std::function<bool(CayleyTable const&)> wrapped
        = [&visit](CayleyTable const& t) {
            visit(t);
            return true;
          };
    std::atomic<std::size_t> total{0};
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        std::vector<int> values;
        for (std::size_t v = w; v < n; v += jobs) {
          values.push_back(int(v));
        }
        Enumerator e(n, mode);
        e.first_cell_values(std::move(values));
        total += e.run(wrapped);
      });
    }
    for (auto& t : workers) {
      t.join();
    }
    return total;
  }

  ////////////////////////////////////////////////////////////////////////
  // Transformations
  ////////////////////////////////////////////////////////////////////////

  Transformation::Transformation(std::vector<element_type> images)
      : _images(std::move(images)) {
    if (_images.empty()) {
      fail(ErrorCode::invalid_input, "transformation of degree 0");
    }
    for (auto x : _images) {
      if (x >= _images.size()) {
        fail(ErrorCode::invalid_input,
             "transformation image " + std::to_string(x) + " out of range");
      }
    }
  }

  Transformation Transformation::then(Transformation const& other) const {
    if (other.degree() != degree()) {
      fail(ErrorCode::invalid_input, "degree mismatch in composition");
    }
    std::vector<element_type> images(degree());
    for (std::size_t x = 0; x < degree(); ++x) {
      images[x] = other[_images[x]];
    }
    Transformation result;
    result._images = std::move(images);
    return result;
  }

  std::size_t Transformation::rank() const {
    std::vector<element_type> im = _images;
    std::sort(im.begin(), im.end());
    return std::unique(im.begin(), im.end()) - im.begin();
  }

  TransformationSemigroup::TransformationSemigroup(
      std::vector<Transformation> elements)
      : _elements(std::move(elements)) {
    if (_elements.empty()) {
      fail(ErrorCode::invalid_input, "empty transformation semigroup");
    }
    _degree = _elements.front().degree();
    std::map<std::vector<element_type>, element_type> index;
    for (std::size_t i = 0; i < _elements.size(); ++i) {
      if (_elements[i].degree() != _degree) {
        fail(ErrorCode::invalid_input, "transformations of mixed degree");
      }
      if (!index.emplace(_elements[i].images(), element_type(i)).second) {
        fail(ErrorCode::invalid_input, "duplicate transformation");
      }
    }
    std::size_t const         n = _elements.size();
    std::vector<element_type> flat(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto it = index.find(_elements[i].then(_elements[j]).images());
        if (it == index.end()) {
          fail(ErrorCode::invalid_input,
               "transformations are not closed under composition");
        }
        flat[i * n + j] = it->second;
      }
    }
    _cayley = CayleyTable::unchecked(n, std::move(flat));
  }

  std::optional<element_type>
  TransformationSemigroup::position(Transformation const& t) const {
    auto it = std::find(_elements.begin(), _elements.end(), t);
    if (it == _elements.end()) {
      return std::nullopt;
    }
    return element_type(it - _elements.begin());
  }

  TransformationSemigroup
  transformation_closure(std::vector<Transformation> const& generators,
                         std::size_t cap) {
    if (generators.empty()) {
      fail(ErrorCode::invalid_input, "no generators");
    }
    if (cap == 0) {
      fail(ErrorCode::invalid_input, "cap must be at least 1");
    }
    std::map<std::vector<element_type>, std::size_t> seen;
    std::vector<Transformation>                      elements;
    auto add = [&](Transformation const& t) {
      if (seen.emplace(t.images(), elements.size()).second) {
        elements.push_back(t);
        if (elements.size() > cap) {
          fail(ErrorCode::cap_exceeded,
               "closure exceeds cap " + std::to_string(cap)
                   + " (partial count " + std::to_string(elements.size())
                   + ")");
        }
      }
    };
    for (auto const& g : generators) {
      if (g.degree() != generators.front().degree()) {
        fail(ErrorCode::invalid_input, "generators of mixed degree");
      }
      add(g);
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (auto const& g : generators) {
        add(elements[i].then(g));
      }
    }
    return TransformationSemigroup(std::move(elements));
  }

  TransformationSemigroup full_transformation_monoid(std::size_t degree) {
    if (degree == 0 || degree > 5) {
      fail(ErrorCode::bound_exceeded, "full transformation monoid degree must be in [1, 5]");
    }
    std::vector<Transformation> elements;
    std::vector<element_type>   images(degree, 0);
    while (true) {
      elements.emplace_back(images);
      std::size_t k = degree;
      while (k > 0 && images[k - 1] == degree - 1) {
        images[--k] = 0;
      }
      if (k == 0) {
        break;
      }
      ++images[k - 1];
    }
    return TransformationSemigroup(std::move(elements));
  }

  TransformationSemigroup regular_representation(CayleyTable const& table) {
    std::size_t const           n = table.order();
    std::vector<Transformation> elements;
    for (element_type a = 0; a < n; ++a) {
      std::vector<element_type> images(n + 1);
      for (element_type x = 0; x < n; ++x) {
        images[x] = table(x, a);
      }
      images[n] = a;
      elements.emplace_back(std::move(images));
    }
    return TransformationSemigroup(std::move(elements));
  }

}  // namespace lefkit
