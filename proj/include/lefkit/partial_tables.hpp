#pragma once

// Finite sets with a partially defined product, embedding searches into
// finite semigroups, and wraps by finite semigroups together with the
// accurate-product tightening.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lefkit/finite_core.hpp"
#include "lefkit/rewriting.hpp"

namespace lefkit {

  //! How a wrap may label a D-element whose value is not forced and lies
  //! outside the set.
  enum class OutsideKind {
    none,      // the ambient has nothing outside the set
    symbolic,  // infinite ambient: an unspecified element (printed as the sink)
    concrete   // finite ambient: the named sink element
  };

  inline constexpr char const* bottom_name = "⊥";

  //! A finite named set with a partial product, and optionally the ambient
  //! values (canonical names) of all pairwise products.
  class PartialTable {
   public:
    PartialTable() = default;

    //! product[i * t + j] is the index of the in-set product, or nullopt.
    //! ambient, when given, has t * t entries; an in-set product's ambient
    //! value must be the element's own name and vice versa.
    PartialTable(std::vector<std::string> names,
                 std::vector<std::optional<std::size_t>> product,
                 std::optional<std::vector<std::string>> ambient,
                 OutsideKind outside = OutsideKind::symbolic,
                 std::string sink = bottom_name);

    std::size_t size() const noexcept {
      return _names.size();
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::string const& name(std::size_t i) const {
      return _names.at(i);
    }

    std::optional<std::size_t> index_of(std::string const& name) const;

    std::optional<std::size_t> product(std::size_t i, std::size_t j) const {
      return _product[i * size() + j];
    }

    bool has_ambient() const noexcept {
      return _ambient.has_value();
    }

    //! Throws UndecidedEquality when no ambient values are known.
    std::string const& ambient(std::size_t i, std::size_t j) const;

    OutsideKind outside() const noexcept {
      return _outside;
    }

    std::string const& sink() const noexcept {
      return _sink;
    }

    bool operator==(PartialTable const&) const = default;

   private:
    std::vector<std::string>                 _names;
    std::vector<std::optional<std::size_t>>  _product;
    std::optional<std::vector<std::string>>  _ambient;
    OutsideKind                              _outside = OutsideKind::symbolic;
    std::string                              _sink;
  };

  struct PartialViolation {
    std::size_t x, y, z;
    bool        operator==(PartialViolation const&) const = default;
  };

  //! Checks (xy)z = x(yz) whenever xy, yz, (xy)z and x(yz) are all in-set.
  std::optional<PartialViolation> check_partial_associativity(PartialTable const& pt);

  //! Elements are the given words, named by their canonical forms. Throws
  //! DuplicateElement on repeated elements and UndecidedEquality when the
  //! presentation cannot settle an equality within the search caps.
  PartialTable induce(Presentation const& p,
                      std::vector<Word> const& words,
                      std::size_t max_len = 14,
                      std::size_t max_steps = 100000);

  //! Name used for element i of a finite table ("s0", "s1", ...).
  std::string element_name(element_type i);

  //! The subset with the products of the table; outside values are concrete
  //! and the sink is the least element outside the subset (if any).
  PartialTable induce_from_table(CayleyTable const& table,
                                 std::vector<element_type> const& subset);

  ////////////////////////////////////////////////////////////////////////
  // Embeddings
  ////////////////////////////////////////////////////////////////////////

  struct EmbeddingWitness {
    CayleyTable target;
    //! Present when the target came from a transformation semigroup.
    std::optional<std::vector<Transformation>> transformations;
    std::vector<element_type>                  assignment;
  };

  struct EmbedSpace {
    enum class Kind { orders, transformation_degree };
    Kind        kind  = Kind::orders;
    std::size_t bound = 5;

    std::string describe() const;
  };

  struct EmbedLimits {
    std::size_t max_order  = 5;
    std::size_t max_degree = 4;
  };

  template <typename W>
  struct SearchOutcome {
    std::optional<W> witness;
    std::string      exhausted;   // description of the traversed space
    std::size_t      candidates;  // targets examined

    bool found() const noexcept {
      return witness.has_value();
    }
  };

  //! Targets ascending by order (or degree), tables in lexicographic order,
  //! elements assigned in input order with forward checking. The transformation
  //! space searches the full monoids T_1, ..., T_d: every closure of degree d
  //! is a subsemigroup of T_d, so exhausting T_d covers all of them.
  SearchOutcome<EmbeddingWitness> embed_search(PartialTable const& pt,
                                               EmbedSpace space,
                                               EmbedLimits const& limits = {});

  bool verify_embedding(PartialTable const& pt, EmbeddingWitness const& w);

  //! All nonempty words of length <= max_len over the letters of `words`
  //! (shortlex order) plus a zero; concatenation, or zero when too long.
  EmbeddingWitness free_truncation_witness(std::vector<Word> const& words,
                                           std::size_t max_len);

  ////////////////////////////////////////////////////////////////////////
  // Wraps
  ////////////////////////////////////////////////////////////////////////

  struct Label {
    enum class Kind { in_set, outside, bottom };
    Kind        kind  = Kind::bottom;
    std::size_t index = 0;  // in_set
    std::string value;      // outside

    static Label in(std::size_t i) {
      return Label{Kind::in_set, i, {}};
    }
    static Label out(std::string v) {
      return Label{Kind::outside, 0, std::move(v)};
    }
    static Label bottom() {
      return Label{};
    }

    bool is_in() const noexcept {
      return kind == Kind::in_set;
    }

    bool operator==(Label const&) const = default;
  };

  std::string label_text(PartialTable const& pt, Label const& l);

  //! D wraps the set H = h.names() with labelling d: D -> H + outside.
  struct WrapInstance {
    CayleyTable        d;
    PartialTable       h;
    std::vector<Label> labels;

    //! D-elements labelled with h-element i.
    std::vector<element_type> preimages(std::size_t i) const;
    //! All D-elements labelled into H.
    std::vector<element_type> set_preimages() const;
  };

  //! Reason the wrap fails coverage or compatibility, or nullopt if valid.
  std::optional<std::string> wrap_violation(WrapInstance const& wi);

  bool wrap_verify(WrapInstance const& wi);

  //! The wrap of a finite semigroup by itself over the given subset.
  WrapInstance self_wrap(CayleyTable const& table,
                         std::vector<element_type> const& subset);

  //! The truncation-style wrap: embed K = H u H^2 into a finite table found by
  //! embed_search, label the image of K by its preimage and everything else by
  //! the least element outside H.
  WrapInstance truncation_wrap(CayleyTable const& table,
                               std::vector<element_type> const& subset,
                               EmbedSpace space = {});

  //! K = H u H^2: the subset first, then the new products ascending.
  std::vector<element_type> square_support(CayleyTable const& table,
                                           std::vector<element_type> const& subset);

  //! The same construction with a given embedding of induce_from_table(table,
  //! square_support(table, subset)).
  WrapInstance truncation_wrap(CayleyTable const& table,
                               std::vector<element_type> const& subset,
                               EmbeddingWitness const& embedding);

  SearchOutcome<WrapInstance> wrap_search(PartialTable const& pt,
                                          std::size_t max_order,
                                          EmbedLimits const& limits = {});

  //! Least preimage of each element of H.
  std::vector<element_type> default_designated(WrapInstance const& wi);

  //! Least set containing the designated preimages and closed under products
  //! that land in the preimage of H.
  std::vector<element_type>
  accurate_set(WrapInstance const& wi, std::vector<element_type> const& designated);

  //! Relabels non-accurate preimages of H to the sink until nothing changes.
  WrapInstance tighten(WrapInstance const& wi,
                       std::optional<std::vector<element_type>> designated = std::nullopt);

  //! True when every preimage of H is accurate for the designated preimages.
  bool is_accurate_tight(WrapInstance const& wi,
                         std::optional<std::vector<element_type>> designated = std::nullopt);

}  // namespace lefkit
