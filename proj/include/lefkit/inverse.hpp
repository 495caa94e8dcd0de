#pragma once

// Partial bijections, inverse semigroup tables, the Wagner-Preston
// representation, the lift of transformation representations to partial
// bijections, and checks on wraps by finite inverse semigroups.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lefkit/finite_core.hpp"
#include "lefkit/partial_tables.hpp"

namespace lefkit {

  ////////////////////////////////////////////////////////////////////////
  // Partial bijections
  ////////////////////////////////////////////////////////////////////////

  //! An injective partial map on {0, ..., N - 1}, acting on the right.
  class PartialBijection {
   public:
    static constexpr int undefined = -1;

    PartialBijection() = default;

    //! map[x] is the image of x or `undefined`; throws InvalidInput when two
    //! points share an image or an image is out of range.
    PartialBijection(std::size_t universe, std::vector<int> map);

    static PartialBijection identity(std::size_t universe,
                                     std::vector<element_type> const& domain);

    std::size_t universe() const noexcept {
      return _map.size();
    }

    std::optional<element_type> operator()(element_type x) const {
      int y = _map.at(x);
      return y == undefined ? std::nullopt : std::optional<element_type>(element_type(y));
    }

    std::vector<int> const& map() const noexcept {
      return _map;
    }

    std::vector<element_type> domain() const;
    std::vector<element_type> range() const;

    std::size_t rank() const;

    bool is_idempotent() const;

    auto operator<=>(PartialBijection const&) const = default;

   private:
    std::vector<int> _map;
  };

  //! Apply f, then g. Throws UniverseMismatch.
  PartialBijection compose_pb(PartialBijection const& f, PartialBijection const& g);
  PartialBijection invert_pb(PartialBijection const& f);
  //! f is a restriction of g.
  bool leq_natural(PartialBijection const& f, PartialBijection const& g);

  //! Elements with a table indexed by position.
  struct PartialBijectionSemigroup {
    std::vector<PartialBijection> elements;
    CayleyTable                   table;
  };

  //! All partial bijections of {0..N-1}, ordered by rank, then map.
  PartialBijectionSemigroup symmetric_inverse_monoid(std::size_t universe);

  //! Closure of the generators and their inverses under composition.
  PartialBijectionSemigroup
  inverse_closure(std::vector<PartialBijection> const& generators, std::size_t cap);

  ////////////////////////////////////////////////////////////////////////
  // Inverse tables
  ////////////////////////////////////////////////////////////////////////

  struct InverseTable {
    CayleyTable               cayley;
    std::vector<element_type> inv;

    element_type operator()(element_type x, element_type y) const noexcept {
      return cayley(x, y);
    }

    std::size_t order() const noexcept {
      return cayley.order();
    }
  };

  struct InverseStructure {
    std::optional<InverseTable> table;
    element_type                witness  = 0;  // when not inverse
    std::size_t                 partners = 0;  // number of partners of witness
  };

  //! Finds for each x the unique y with xyx = x and yxy = y.
  InverseStructure inverse_structure(CayleyTable const& table);

  //! Throws PreconditionFailed when the table is not inverse.
  InverseTable make_inverse_table(CayleyTable const& table);

  //! x <= y iff x = (x x^-1) y.
  bool leq_natural(InverseTable const& it, element_type x, element_type y);

  struct WagnerPreston {
    std::vector<PartialBijection>                  images;
    bool                                           injective      = false;
    bool                                           multiplicative = false;
    std::optional<std::pair<element_type, element_type>> failure;

    bool verified() const noexcept {
      return injective && multiplicative;
    }
  };

  //! a maps to x -> xa on {x : x a a^-1 = x}; the result is verified.
  WagnerPreston wagner_preston(InverseTable const& it);

  ////////////////////////////////////////////////////////////////////////
  // Symmetrised sets
  ////////////////////////////////////////////////////////////////////////

  //! How KK^-1 and K^-1K are read: products k k^-1 of an element with its own
  //! inverse, or all products k l^-1.
  enum class SymmetrisedReading { elementwise, setwise };

  //! H u H^-1 u HH^-1 u H^-1H in an inverse semigroup given by its product,
  //! inverse and a strict weak order on elements.
  template <typename T, typename Mul, typename Inv>
  std::vector<T> symmetrise_generic(std::vector<T> const& h,
                                    Mul&& mul,
                                    Inv&& inv,
                                    SymmetrisedReading reading = SymmetrisedReading::elementwise) {
    std::set<T> k(h.begin(), h.end());
    for (auto const& x : h) {
      k.insert(inv(x));
      if (reading == SymmetrisedReading::elementwise) {
        k.insert(mul(x, inv(x)));
        k.insert(mul(inv(x), x));
      } else {
        for (auto const& y : h) {
          k.insert(mul(x, inv(y)));
          k.insert(mul(inv(x), y));
        }
      }
    }
    return std::vector<T>(k.begin(), k.end());
  }

  template <typename T, typename Mul, typename Inv>
  bool is_symmetrised_generic(std::vector<T> const& k,
                              Mul&& mul,
                              Inv&& inv,
                              SymmetrisedReading reading = SymmetrisedReading::elementwise) {
    std::set<T> const members(k.begin(), k.end());
    auto in = [&](T const& x) { return members.count(x) != 0; };
    for (auto const& x : k) {
      if (!in(inv(x))) {
        return false;
      }
      if (reading == SymmetrisedReading::elementwise) {
        if (!in(mul(x, inv(x))) || !in(mul(inv(x), x))) {
          return false;
        }
      } else {
        for (auto const& y : k) {
          if (!in(mul(x, inv(y))) || !in(mul(inv(x), y))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::vector<element_type> symmetrise(InverseTable const& it,
                                       std::vector<element_type> const& h,
                                       SymmetrisedReading reading = SymmetrisedReading::elementwise);

  bool is_symmetrised(InverseTable const& it,
                      std::vector<element_type> const& k,
                      SymmetrisedReading reading = SymmetrisedReading::elementwise);

  //! Repeats symmetrise until is_symmetrised holds; throws CapExceeded when
  //! the set grows past cap.
  std::vector<element_type> symmetrised_closure(InverseTable const& it,
                                                std::vector<element_type> const& h,
                                                SymmetrisedReading reading,
                                                std::size_t cap);

  //! H u H^-1 u E(S).
  std::vector<element_type> with_idempotents(InverseTable const& it,
                                             std::vector<element_type> const& h);

  ////////////////////////////////////////////////////////////////////////
  // Lifting to partial bijections
  ////////////////////////////////////////////////////////////////////////

  struct IlefLift {
    std::vector<element_type>     k;     // the lifted elements
    std::vector<PartialBijection> lift;  // parallel to k
    bool bijective         = false;      // restriction is onto Im(x f)
    bool idempotent_ids    = false;      // idempotents give partial identities
    bool injective         = false;
    bool multiplicative    = false;
    bool inverse_preserved = false;      // lift(x^-1) = lift(x)^-1
    std::vector<std::string> failures;

    bool verified() const noexcept {
      return bijective && idempotent_ids && injective && multiplicative && inverse_preserved;
    }
  };

  //! f[x] is the transformation representing ambient element x; it must be
  //! injective and multiplicative on K^3 (checked first, PreconditionFailed
  //! otherwise). Element x of K maps to x f restricted to Im(x^-1 f).
  IlefLift ilef_lift(InverseTable const& it,
                     std::vector<element_type> const& k,
                     std::vector<Transformation> const& f);

  //! The lift through the regular representation.
  IlefLift ilef_lift(InverseTable const& it, std::vector<element_type> const& k);

  ////////////////////////////////////////////////////////////////////////
  // Wraps by inverse semigroups over a finite inverse ambient
  ////////////////////////////////////////////////////////////////////////

  //! A wrap of K inside a finite inverse semigroup S by a finite inverse D;
  //! label[x'] is the element of S that x' maps to.
  struct InverseWrap {
    InverseTable              d;
    InverseTable              ambient;
    std::vector<element_type> k;      // sorted
    std::vector<element_type> label;  // D -> S

    bool in_k(element_type s) const {
      return std::binary_search(k.begin(), k.end(), s);
    }
    std::vector<element_type> preimages(element_type s) const;
  };

  //! Reads a WrapInstance whose set came from induce_from_table(ambient, K).
  //! Throws PreconditionFailed when D is not inverse.
  InverseWrap inverse_wrap(WrapInstance const& wi, InverseTable const& ambient);

  //! Back to a WrapInstance with the set induce_from_table(ambient, k).
  WrapInstance to_wrap_instance(InverseWrap const& iw);

  //! Wrap property and coverage of K.
  bool inverse_wrap_valid(InverseWrap const& iw);

  //! Designated preimages (indexed like iw.k) that are idempotent over
  //! idempotents and mutually inverse over h, h^-1: from the least preimages
  //! x', y' of h, h^-1 take u' = (x'y')^n x', v' = y'(x'y')^(2n-1) with
  //! (x'y')^n idempotent; over an idempotent take the idempotent power.
  std::vector<element_type> inverse_designation(InverseWrap const& iw);

  //! Tightening with inverse_designation.
  InverseWrap tighten_inverse(InverseWrap const& iw);

  struct LemmaReport {
    std::size_t              checked = 0;
    std::vector<std::string> violations;

    bool holds() const noexcept {
      return violations.empty();
    }
  };

  //! (w'd)^-1 = (w'^-1)d for all preimages w' of K, and the u', v' recipe.
  LemmaReport check_wrap_inverse_compat(InverseWrap const& iw);

  struct HMinimal {
    element_type element;
    bool         minimal;  // (e'h')(e'h')^-1 <= h''h''^-1 for all preimages h''
  };

  //! e'h' with e' the product of all preimages of hh^-1 (ascending) and h' the
  //! least preimage of h. Throws EmptyPreimage.
  HMinimal h_minimal(InverseWrap const& iw, element_type h);

  //! For every h in K: the h-minimal element is h-minimal, its inverse is
  //! h^-1-minimal and h'h'^-1, h'^-1h' are minimal over hh^-1, h^-1h; every
  //! idempotent of K has exactly one idempotent preimage.
  LemmaReport check_hmin_lemmas(InverseWrap const& iw);

  struct IlefFromWrap {
    std::vector<element_type> h;       // domain of the map
    std::vector<Subset>       images;  // subsets of D, parallel to h
    Subset                    m = 0;   // preimages of the idempotents of S
    std::optional<CayleyTable> power;  // P(D), when small enough to build
    bool                      injective      = false;
    bool                      multiplicative = false;
    std::vector<std::string>  failures;

    bool verified() const noexcept {
      return injective && multiplicative;
    }
  };

  //! h -> (preimages of h) M in the power semigroup of D, with M the
  //! preimages of all idempotents of S. Requires a tight wrap (for
  //! inverse_designation) with every idempotent of S in K, and |D| <= 64.
  //! h defaults to K; P(D) is built when |D| <= power_bound.
  IlefFromWrap ilef_from_wrap(InverseWrap const& iw,
                              std::optional<std::vector<element_type>> h = std::nullopt,
                              std::size_t power_bound = 8);

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  //! S with a zero adjoined (the new element is last).
  CayleyTable adjoin_zero(CayleyTable const& table);

  //! Direct product; (x, y) has index x + |S| * y.
  CayleyTable direct_product(CayleyTable const& s, CayleyTable const& t);

  //! The self-wrap of K in S.
  InverseWrap inverse_self_wrap(InverseTable const& s, std::vector<element_type> const& k);

  //! The truncation-style wrap with F = S plus a zero and the inclusion of
  //! K u K^2. Requires K != S.
  InverseWrap inverse_zero_wrap(InverseTable const& s, std::vector<element_type> const& k);

  //! D = S x T with T an inverse monoid whose identity is element 0, labelled
  //! by the projection; every element of K has |T| preimages.
  InverseWrap inverse_product_wrap(InverseTable const& s,
                                   std::vector<element_type> const& k,
                                   CayleyTable const& t);

  //! The 2-element semilattice {1, 0} (identity first) and the group Z_2.
  CayleyTable two_element_semilattice();
  CayleyTable cyclic_group(std::size_t n);

  //! The chain semilattice 0 < 1 < ... < n-1 under min.
  CayleyTable chain_semilattice(std::size_t n);

  //! The Brandt semigroup B_2: the four 2x2 matrix units and zero as partial
  //! bijections of {0, 1}.
  PartialBijectionSemigroup brandt_b2();

}  // namespace lefkit
