#pragma once

// Finite semigroups as concrete multiplication tables, transformation
// semigroups, exhaustive enumeration and the power / regular constructions.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace lefkit {

  using element_type = std::uint32_t;

  //! A finite semigroup given by its order-n multiplication table.
  //!
  //! Instances are only created through \ref CayleyTable::make (which checks
  //! associativity) or by trusted constructions in this library, so every
  //! value of this type satisfies the associative law.
  class CayleyTable {
   public:
    CayleyTable() = default;

    //! Validates shape, range and associativity; throws Error otherwise.
    static CayleyTable make(std::vector<std::vector<element_type>> const& rows);
    static CayleyTable make(std::size_t n, std::vector<element_type> flat);

    //! No associativity check; for constructions that are associative by
    //! design (power semigroups, closures of maps, enumeration output).
    static CayleyTable unchecked(std::size_t n, std::vector<element_type> flat);

    std::size_t order() const noexcept {
      return _n;
    }

    element_type operator()(element_type x, element_type y) const noexcept {
      return _flat[x * _n + y];
    }

    std::vector<element_type> const& flat() const noexcept {
      return _flat;
    }

    std::vector<std::vector<element_type>> rows() const;

    //! Left-associated product of a nonempty sequence.
    element_type product(std::span<element_type const> xs) const;

    //! x^k for k >= 1.
    element_type power(element_type x, std::size_t k) const;

    bool operator==(CayleyTable const&) const = default;

   private:
    CayleyTable(std::size_t n, std::vector<element_type> flat)
        : _n(n), _flat(std::move(flat)) {}

    std::size_t               _n = 0;
    std::vector<element_type> _flat;
  };

  struct AssociativityViolation {
    element_type i, j, k;
    bool         operator==(AssociativityViolation const&) const = default;
  };

  //! Ok (nullopt) iff all n^3 triples associate, else the least failing
  //! triple in lexicographic order. Throws MalformedTable on a non-square
  //! table or an out-of-range entry.
  std::optional<AssociativityViolation>
  verify_associativity(std::vector<std::vector<element_type>> const& rows);

  struct IndexPeriod {
    std::size_t index;   // kappa
    std::size_t period;  // rho
    bool        operator==(IndexPeriod const&) const = default;
  };

  IndexPeriod index_period(CayleyTable const& table, element_type s);

  std::vector<element_type> idempotents(CayleyTable const& table);

  //! Least subset containing seed and closed under the product.
  std::vector<element_type>
  subsemigroup_closure(CayleyTable const& table,
                       std::vector<element_type> const& seed);

  // Power semigroup: element k stands for the nonempty subset with bitmask
  // k + 1, so singletons are not contiguous.  Subsets of a table with at most
  // 64 elements are also handled directly as bitmasks.
  using Subset = std::uint64_t;

  Subset subset_product(CayleyTable const& table, Subset lhs, Subset rhs);

  inline constexpr std::size_t default_power_bound = 12;

  CayleyTable power_semigroup(CayleyTable const& table,
                              std::size_t bound = default_power_bound);

  inline Subset power_element_subset(element_type k) {
    return static_cast<Subset>(k) + 1;
  }

  inline element_type power_subset_element(Subset s) {
    return static_cast<element_type>(s - 1);
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////

  //! Table relabelled by perm: result(perm[x], perm[y]) = perm[table(x, y)].
  CayleyTable relabel(CayleyTable const& table,
                      std::vector<element_type> const& perm);

  //! Lexicographically least relabelling over all n! permutations.
  CayleyTable canonical_form(CayleyTable const& table);

  bool is_isomorphic(CayleyTable const& lhs, CayleyTable const& rhs);

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  enum class EnumerationMode { labeled, up_to_isomorphism };

  struct EnumerationBounds {
    std::size_t max_labeled = 5;
    std::size_t max_up_to_iso = 6;
  };

  //! Visits every associative table of order n exactly once, in lexicographic
  //! order of the flattened table. In up_to_isomorphism mode only the
  //! lexicographically least member of each isomorphism class is visited.
  //! The visitor returns false to stop early. Returns the number visited.
  std::size_t for_each_semigroup(std::size_t n,
                                 EnumerationMode mode,
                                 std::function<bool(CayleyTable const&)> const& visit,
                                 EnumerationBounds const& bounds = {});

  std::vector<CayleyTable>
  enumerate_semigroups(std::size_t n,
                       EnumerationMode mode,
                       EnumerationBounds const& bounds = {});

  std::size_t count_semigroups(std::size_t n,
                               EnumerationMode mode,
                               EnumerationBounds const& bounds = {});

  //! The same stream, split into independent prefix classes (the value of the
  //! first cell) and run on `jobs` threads. The visitor may be called
  //! concurrently and must be thread-safe; ordering is not preserved.
  std::size_t
  for_each_semigroup_unordered(std::size_t n,
                               EnumerationMode mode,
                               std::function<void(CayleyTable const&)> const& visit,
                               std::size_t jobs,
                               EnumerationBounds const& bounds = {});

  ////////////////////////////////////////////////////////////////////////
  // Transformations
  ////////////////////////////////////////////////////////////////////////

  //! A total map on {0, ..., d - 1}; acts on the right, so (x)(f g) = ((x)f)g.
  class Transformation {
   public:
    Transformation() = default;
    explicit Transformation(std::vector<element_type> images);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    element_type operator[](std::size_t x) const noexcept {
      return _images[x];
    }

    std::vector<element_type> const& images() const noexcept {
      return _images;
    }

    //! Apply this, then other.
    Transformation then(Transformation const& other) const;

    std::size_t rank() const;

    auto operator<=>(Transformation const&) const = default;

   private:
    std::vector<element_type> _images;
  };

  class TransformationSemigroup {
   public:
    //! Elements must be distinct, of common degree and closed under
    //! composition; the table is indexed by position in `elements`.
    explicit TransformationSemigroup(std::vector<Transformation> elements);

    std::size_t degree() const noexcept {
      return _degree;
    }

    std::size_t size() const noexcept {
      return _elements.size();
    }

    std::vector<Transformation> const& elements() const noexcept {
      return _elements;
    }

    CayleyTable const& cayley() const noexcept {
      return _cayley;
    }

    std::optional<element_type> position(Transformation const& t) const;

   private:
    std::size_t                 _degree = 0;
    std::vector<Transformation> _elements;
    CayleyTable                 _cayley;
  };

  //! Breadth-first closure; elements appear in discovery order (generators
  //! first, de-duplicated). Throws CapExceeded when more than cap elements.
  TransformationSemigroup
  transformation_closure(std::vector<Transformation> const& generators,
                         std::size_t cap);

  //! All d^d maps in lexicographic order of their image lists.
  TransformationSemigroup full_transformation_monoid(std::size_t degree);

  //! Right translations of S on S^1 = S plus a fresh identity (point n).
  //! Element i of the result is the translation by i.
  TransformationSemigroup regular_representation(CayleyTable const& table);

}  // namespace lefkit
