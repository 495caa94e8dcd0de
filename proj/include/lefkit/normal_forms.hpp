#pragma once

// Closed-form arithmetic for the bicyclic monoid and the semigroup
// Sg<a,b | aab = a>, plus the orbit of "a" under a -> aab.

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "lefkit/rewriting.hpp"

namespace lefkit {

  //! b^i a^j, the unique normal form of an element of Mon<a,b | ab = 1>.
  struct BicyclicNF {
    std::size_t i = 0;  // power of b
    std::size_t j = 0;  // power of a
    auto        operator<=>(BicyclicNF const&) const = default;
  };

  BicyclicNF bicyclic_nf(Word const& w);
  BicyclicNF bicyclic_mul(BicyclicNF x, BicyclicNF y);
  Word       bicyclic_word(BicyclicNF x);

  //! b^beta[0] a b^beta[1] ... a b^beta[n] a^alpha with beta[1..n] > 0.
  struct ANormalForm {
    std::vector<std::size_t> beta;
    std::size_t              alpha = 0;
    bool                     operator==(ANormalForm const&) const = default;
  };

  //! Reduces w by aab -> a and parses the irreducible word.
  ANormalForm a_nf(Word const& w);
  Word        a_word(ANormalForm const& nf);

  //! Number of a's minus number of b's; invariant under aab <-> a.
  long eta(Word const& w);

  //! Some irreducible word w of length <= max_len (in A) with ww = w, if any.
  std::optional<Word> a_idempotent_scan(std::size_t max_len);

  //! Words obtained from seed by forward applications of rule, up to cap_len.
  std::set<Word> generate_orbit(Word const& seed, Rule const& rule, std::size_t cap_len);

  //! Parses w into maximal blocks a^alpha0 b^beta0 ... a^alphan b^betan and
  //! checks alpha0 > beta0 and alphai >= betai.
  bool wa_shape_check(Word const& w);

  //! Every nonempty prefix of w has more a's than b's. Preserved by a -> aab,
  //! abab -> 1 and baba -> 1; the block inequalities above are not (aaababb
  //! is reachable from a).
  bool wa_prefix_check(Word const& w);

}  // namespace lefkit
